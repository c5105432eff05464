#include "alexchen/alexinv.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace alexchen {

Presentation Presentation::over_laurent(LMatrix m, int n) {
    Presentation p;
    p.ring = RingTag::Laurent;
    p.nvars = n;
    p.laurent = std::move(m);
    return p;
}

Presentation Presentation::over_power(PMatrix m, int n, int D) {
    Presentation p;
    p.ring = RingTag::Power;
    p.nvars = n;
    p.truncation = D;
    p.power = std::move(m);
    return p;
}

std::size_t Presentation::generators() const { return ring == RingTag::Laurent ? laurent.cols() : power.cols(); }
std::size_t Presentation::relations() const { return ring == RingTag::Laurent ? laurent.rows() : power.rows(); }
const std::vector<std::string>& Presentation::generator_labels() const {
    return ring == RingTag::Laurent ? laurent.col_labels : power.col_labels;
}
const std::vector<std::string>& Presentation::relation_labels() const {
    return ring == RingTag::Laurent ? laurent.row_labels : power.row_labels;
}

bool Presentation::operator==(const Presentation& o) const {
    if (ring != o.ring || nvars != o.nvars) return false;
    if (ring == RingTag::Laurent) return laurent == o.laurent;
    return truncation == o.truncation && power == o.power;
}

std::string Presentation::to_text() const {
    std::ostringstream os;
    if (ring == RingTag::Laurent)
        os << "ring laurent " << nvars << "\n";
    else
        os << "ring power " << nvars << " " << truncation << "\n";
    auto gl = generator_labels();
    auto rl = relation_labels();
    os << "generators " << generators();
    for (std::size_t j = 0; j < generators(); ++j) os << " " << (j < gl.size() ? gl[j] : "g" + std::to_string(j + 1));
    os << "\n";
    for (std::size_t i = 0; i < relations(); ++i) {
        os << "relation " << (i < rl.size() ? rl[i] : "r" + std::to_string(i + 1)) << ":";
        for (std::size_t j = 0; j < generators(); ++j)
            os << " [" << (ring == RingTag::Laurent ? laurent(i, j).str("t") : power(i, j).str("x")) << "]";
        os << "\n";
    }
    return os.str();
}

Presentation Presentation::from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    Presentation p;
    bool have_ring = false, have_gens = false;
    std::vector<std::string> gens, rlabels;
    std::vector<std::vector<std::string>> entries;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("presentation line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "ring") {
            std::string kind;
            ls >> kind >> p.nvars;
            if (!ls) fail("expected 'ring laurent <n>' or 'ring power <n> <D>'");
            if (kind == "laurent") {
                p.ring = RingTag::Laurent;
            } else if (kind == "power") {
                p.ring = RingTag::Power;
                if (!(ls >> p.truncation) || p.truncation < 0) fail("power ring needs a truncation degree");
            } else {
                fail("unknown ring '" + kind + "'");
            }
            have_ring = true;
        } else if (key == "generators") {
            if (!have_ring) fail("ring line must come first");
            std::size_t count;
            if (!(ls >> count)) fail("expected generator count");
            std::string g;
            while (ls >> g) gens.push_back(g);
            if (gens.size() != count) fail("generator count does not match labels");
            have_gens = true;
        } else if (key == "relation") {
            if (!have_gens) fail("generators line must precede relations");
            std::string rest;
            std::getline(ls, rest);
            auto colon = rest.find(':');
            if (colon == std::string::npos) fail("expected 'relation <label>: [..] ...'");
            std::string label = rest.substr(0, colon);
            label.erase(std::remove_if(label.begin(), label.end(), ::isspace), label.end());
            std::vector<std::string> row;
            std::size_t pos = colon + 1;
            while (true) {
                auto open = rest.find('[', pos);
                if (open == std::string::npos) break;
                auto close = rest.find(']', open);
                if (close == std::string::npos) fail("unterminated '['");
                row.push_back(rest.substr(open + 1, close - open - 1));
                pos = close + 1;
            }
            if (row.size() != gens.size()) fail("relation has " + std::to_string(row.size()) + " entries, expected " +
                                                std::to_string(gens.size()));
            rlabels.push_back(label);
            entries.push_back(std::move(row));
        } else {
            fail("unknown keyword '" + key + "'");
        }
    }
    if (!have_ring || !have_gens) throw std::invalid_argument("presentation: missing ring or generators line");
    try {
        if (p.ring == RingTag::Laurent) {
            p.laurent = LMatrix(entries.size(), gens.size(), LaurentPoly(p.nvars));
            for (std::size_t i = 0; i < entries.size(); ++i)
                for (std::size_t j = 0; j < gens.size(); ++j) p.laurent(i, j) = parse_laurent(entries[i][j], p.nvars, "t");
            p.laurent.row_labels = rlabels;
            p.laurent.col_labels = gens;
        } else {
            p.power = PMatrix(entries.size(), gens.size(), Poly(p.nvars, p.truncation));
            for (std::size_t i = 0; i < entries.size(); ++i)
                for (std::size_t j = 0; j < gens.size(); ++j)
                    p.power(i, j) = parse_poly(entries[i][j], p.nvars, "x", p.truncation);
            p.power.row_labels = rlabels;
            p.power.col_labels = gens;
        }
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("presentation entry: ") + e.what());
    }
    return p;
}

// ------------------------------------------------------------------ Φ maps

LMatrix phi_V_full(const Subset& V, int n) {
    if (V.size() < 2) throw std::invalid_argument("phi_V: need |V| >= 2");
    WedgeBasis c2(n, 2);
    LMatrix m(n, c2.size(), LaurentPoly(n));
    ChainVec nab = nabla_V(V, n);
    for (int i = 1; i <= n; ++i) {
        ChainVec row;
        if (std::binary_search(V.begin(), V.end(), i)) {
            row = wedge(nab, 1, basis_vector(n, 1, {i}), 1, n);
        } else if (i > V.front() && i < V.back()) {
            Subset above;
            for (int v : V)
                if (v > i) above.push_back(v);
            row = wedge(nab, 1, nabla_V(above, n), 1, n);
            LaurentPoly f = LaurentPoly::one(n) - LaurentPoly::var(n, i);
            for (auto& x : row) x = f * x;
        } else {
            continue;
        }
        for (std::size_t j = 0; j < row.size(); ++j) m(i - 1, j) = row[j];
    }
    for (int i = 1; i <= n; ++i) m.row_labels.push_back("e{" + std::to_string(i) + "}");
    m.col_labels = c2.labels();
    return m;
}

LMatrix phi_V(const Subset& V, int n) {
    LMatrix full = phi_V_full(V, n);
    std::vector<std::size_t> rows;
    for (std::size_t r = 1; r < V.size(); ++r) rows.push_back(static_cast<std::size_t>(V[r] - 1));
    return full.row_block(rows);
}

LMatrix phi_conj(const ConjTuple& z) {
    int n = static_cast<int>(z.size());
    WedgeBasis c2(n, 2);
    LMatrix m(n, c2.size(), LaurentPoly(n));
    for (int i = 1; i <= n; ++i) {
        ChainVec row = wedge(abelianized_gradient(z[i - 1]), 1, basis_vector(n, 1, {i}), 1, n);
        for (std::size_t j = 0; j < row.size(); ++j) m(i - 1, j) = row[j];
        m.row_labels.push_back("e{" + std::to_string(i) + "}");
    }
    m.col_labels = c2.labels();
    return m;
}

ChainVec real_delta_row(const Subset& J, int i, int n) {
    Subset below;
    for (int j : J)
        if (j < i) below.push_back(j);
    ChainVec row = zero_chain(n, 1);
    if (!below.empty()) {
        ChainVec nab = nabla_V(below, n);
        LaurentPoly f = LaurentPoly::one(n) - LaurentPoly::var(n, i);
        for (int k = 0; k < n; ++k) row[k] = f * nab[k];
    }
    Exponent e(n, 0);
    for (int j : below) e[j - 1] = 1;
    row[i - 1] += LaurentPoly::monomial(n, e);
    return row;
}

// ---------------------------------------------------------- presentations

namespace {

LMatrix d3_or_empty(int n) {
    if (n >= 3) return differential(n, 3);
    LMatrix m(0, static_cast<std::size_t>(binomial(n, 2)), LaurentPoly(n));
    m.col_labels = WedgeBasis(n, 2).labels();
    return m;
}

void label_rows(LMatrix& m, const std::string& prefix) {
    for (auto& l : m.row_labels) l = prefix + l;
}

}  // namespace

Presentation presentation_free(int n) { return Presentation::over_laurent(d3_or_empty(n), n); }

Presentation alexander_matrix(const std::vector<ConjugatedTwist>& monodromy, int n) {
    LMatrix m(0, n, LaurentPoly(n));
    for (std::size_t k = 0; k < monodromy.size(); ++k) {
        LMatrix block = lidentity(n, n) - gassner_twist(monodromy[k], n);
        block.row_labels.clear();
        for (int i = 1; i <= n; ++i) block.row_labels.push_back("a" + std::to_string(k + 1) + ".e{" + std::to_string(i) + "}");
        m = vstack(m, block);
    }
    m.col_labels.clear();
    for (int i = 1; i <= n; ++i) m.col_labels.push_back("e{" + std::to_string(i) + "}");
    return Presentation::over_laurent(m, n);
}

namespace {

LMatrix general_phi_rows(const std::vector<ConjugatedTwist>& monodromy, int n) {
    LMatrix m(0, static_cast<std::size_t>(binomial(n, 2)), LaurentPoly(n));
    for (std::size_t k = 0; k < monodromy.size(); ++k) {
        const auto& a = monodromy[k];
        LMatrix block = phi_V(a.V, n);
        if (!a.delta.is_identity()) block = block * exterior_power(gassner_word(a.delta), 2);
        label_rows(block, "a" + std::to_string(k + 1) + ".");
        m = vstack(m, block);
    }
    m.col_labels = WedgeBasis(n, 2).labels();
    return m;
}

}  // namespace

Presentation presentation_general(const std::vector<ConjugatedTwist>& monodromy, int n) {
    LMatrix m = vstack(general_phi_rows(monodromy, n), d3_or_empty(n));
    m.col_labels = WedgeBasis(n, 2).labels();
    return Presentation::over_laurent(m, n);
}

std::vector<std::size_t> k0_prime(const std::vector<Subset>& sets, int n) {
    std::vector<std::size_t> out;
    for (auto& V : sets) {
        auto c = c2_prime(V, n);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

namespace {

std::vector<std::size_t> complement(const std::vector<std::size_t>& idx, std::size_t size) {
    std::vector<bool> used(size, false);
    for (auto i : idx) used[i] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size; ++i)
        if (!used[i]) out.push_back(i);
    return out;
}

// Rejects a pair lying in two vertex sets; pairs in none are allowed.
void check_pair_cover(const std::vector<Subset>& sets, int n) {
    std::set<std::pair<int, int>> seen;
    for (auto& V : sets) {
        if (V.size() < 2) throw std::invalid_argument("not an arrangement lattice: vertex set with fewer than 2 elements");
        if (V.front() < 1 || V.back() > n) throw std::invalid_argument("not an arrangement lattice: index out of range");
        for (std::size_t a = 0; a < V.size(); ++a)
            for (std::size_t b = a + 1; b < V.size(); ++b)
                if (!seen.insert({V[a], V[b]}).second)
                    throw std::invalid_argument("not an arrangement lattice: pair {" + std::to_string(V[a]) + "," +
                                                std::to_string(V[b]) + "} covered twice");
    }
}

}  // namespace

Presentation presentation_real(const std::vector<RealVertex>& wiring, int n) {
    std::vector<Subset> sets;
    for (auto& w : wiring) sets.push_back(w.V);
    check_pair_cover(sets, n);
    WedgeBasis c2(n, 2);
    LMatrix mu = lidentity(c2.size(), n), delta = lidentity(c2.size(), n);
    for (auto& w : wiring) {
        LMatrix m = mu_matrix(w.V, n);
        std::map<int, ChainVec> mu_row, delta_row;
        for (int i : w.V) {
            ChainVec r(n, LaurentPoly(n));
            for (int j = 0; j < n; ++j) r[j] = m(i - 1, j);
            mu_row[i] = r;
            delta_row[i] = real_delta_row(w.J, i, n);
        }
        for (std::size_t a = 0; a < w.V.size(); ++a)
            for (std::size_t b = a + 1; b < w.V.size(); ++b) {
                int i = w.V[a], j = w.V[b];
                auto row = static_cast<std::size_t>(c2.index({i, j}));
                ChainVec mr = wedge(mu_row[i], 1, mu_row[j], 1, n);
                ChainVec dr = wedge(delta_row[i], 1, delta_row[j], 1, n);
                for (std::size_t c = 0; c < c2.size(); ++c) {
                    mu(row, c) = mr[c];
                    delta(row, c) = dr[c];
                }
            }
    }
    LMatrix full = d3_or_empty(n) * unit_pivot_inverse(delta) * unit_pivot_inverse(mu);
    full.col_labels = c2.labels();
    if (n >= 3) full.row_labels = WedgeBasis(n, 3).labels();
    LMatrix m = full.col_block(complement(k0_prime(sets, n), c2.size()));
    return Presentation::over_laurent(m, n);
}

Presentation presentation_product(const Presentation& p1, const Presentation& p2) {
    if (p1.ring != RingTag::Laurent || p2.ring != RingTag::Laurent)
        throw std::invalid_argument("presentation_product: Laurent presentations required");
    int n1 = p1.nvars, n2 = p2.nvars, n = n1 + n2;
    std::size_t b1 = p1.generators(), b2 = p2.generators();
    std::vector<int> map1(n1), map2(n2);
    for (int i = 0; i < n1; ++i) map1[i] = i;
    for (int i = 0; i < n2; ++i) map2[i] = n1 + i;
    std::size_t rows = p1.relations() + n2 * b1 + p2.relations() + n1 * b2;
    LMatrix m(rows, b1 + b2, LaurentPoly(n));
    std::size_t r = 0;
    auto lab = [](const std::vector<std::string>& l, std::size_t i) {
        return i < l.size() ? l[i] : "g" + std::to_string(i + 1);
    };
    for (std::size_t i = 0; i < p1.relations(); ++i, ++r) {
        for (std::size_t j = 0; j < b1; ++j) m(r, j) = p1.laurent(i, j).relabel(n, map1);
        m.row_labels.push_back("L." + lab(p1.relation_labels(), i));
    }
    for (std::size_t g = 0; g < b1; ++g)
        for (int j = 1; j <= n2; ++j, ++r) {
            m(r, g) = LaurentPoly::var(n, n1 + j) - LaurentPoly::one(n);
            m.row_labels.push_back("L." + lab(p1.generator_labels(), g) + "*s" + std::to_string(j));
        }
    for (std::size_t i = 0; i < p2.relations(); ++i, ++r) {
        for (std::size_t j = 0; j < b2; ++j) m(r, b1 + j) = p2.laurent(i, j).relabel(n, map2);
        m.row_labels.push_back("R." + lab(p2.relation_labels(), i));
    }
    for (std::size_t g = 0; g < b2; ++g)
        for (int j = 1; j <= n1; ++j, ++r) {
            m(r, b1 + g) = LaurentPoly::var(n, j) - LaurentPoly::one(n);
            m.row_labels.push_back("R." + lab(p2.generator_labels(), g) + "*s" + std::to_string(j));
        }
    for (std::size_t g = 0; g < b1; ++g) m.col_labels.push_back("L." + lab(p1.generator_labels(), g));
    for (std::size_t g = 0; g < b2; ++g) m.col_labels.push_back("R." + lab(p2.generator_labels(), g));
    return Presentation::over_laurent(m, n);
}

Presentation presentation_cone(const Presentation& p) {
    if (p.ring != RingTag::Laurent) throw std::invalid_argument("presentation_cone: Laurent presentation required");
    int n = p.nvars + 1;
    std::vector<int> map(p.nvars);
    for (int i = 0; i < p.nvars; ++i) map[i] = i;
    std::size_t b = p.generators();
    LMatrix m(p.relations() + b, b, LaurentPoly(n));
    for (std::size_t i = 0; i < p.relations(); ++i)
        for (std::size_t j = 0; j < b; ++j) m(i, j) = p.laurent(i, j).relabel(n, map);
    for (std::size_t g = 0; g < b; ++g) m(p.relations() + g, g) = LaurentPoly::var(n, n) - LaurentPoly::one(n);
    m.row_labels = p.relation_labels();
    m.row_labels.resize(p.relations());
    m.col_labels = p.generator_labels();
    for (std::size_t g = 0; g < b; ++g)
        m.row_labels.push_back("cone." + (g < m.col_labels.size() ? m.col_labels[g] : "g" + std::to_string(g + 1)));
    return Presentation::over_laurent(m, n);
}

Presentation presentation_pure_link(const std::vector<ConjTuple>& tuples) {
    if (tuples.empty()) throw std::invalid_argument("presentation_pure_link: need at least one tuple");
    int n = static_cast<int>(tuples.front().size());
    LMatrix m(0, static_cast<std::size_t>(binomial(n, 2)), LaurentPoly(n));
    for (std::size_t k = 0; k < tuples.size(); ++k) {
        if (static_cast<int>(tuples[k].size()) != n) throw std::invalid_argument("presentation_pure_link: tuple sizes differ");
        LMatrix block = phi_conj(tuples[k]);
        label_rows(block, "z" + std::to_string(k + 1) + ".");
        m = vstack(m, block);
    }
    m = vstack(m, d3_or_empty(n));
    m.col_labels = WedgeBasis(n, 2).labels();
    return Presentation::over_laurent(m, n);
}

Presentation presentation_completed_reduced(const std::vector<ConjugatedTwist>& monodromy, int n, int D) {
    if (D < 1) throw std::invalid_argument("presentation_completed_reduced: need D >= 1");
    std::vector<Subset> sets;
    for (auto& a : monodromy) sets.push_back(a.V);
    check_pair_cover(sets, n);
    std::size_t c2 = static_cast<std::size_t>(binomial(n, 2));
    auto k0 = k0_prime(sets, n);
    auto l0 = complement(k0, c2);
    PMatrix phi = magnus_series(general_phi_rows(monodromy, n), D);
    PMatrix d3 = magnus_series(d3_or_empty(n), D);
    PMatrix phi_k = phi.col_block(k0);
    for (std::size_t i = 0; i < phi_k.rows(); ++i)
        for (std::size_t j = 0; j < phi_k.cols(); ++j)
            if (phi_k(i, j).constant_term() != (i == j ? 1 : 0))
                throw std::logic_error("presentation_completed_reduced: reduced block is not the identity mod m");
    PMatrix red = d3.col_block(l0) - d3.col_block(k0) * truncated_inverse(phi_k, D) * phi.col_block(l0);
    red.row_labels = d3.row_labels;
    red.col_labels = d3.col_block(l0).col_labels;
    return Presentation::over_power(red, n, D);
}

}  // namespace alexchen
