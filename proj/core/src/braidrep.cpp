#include "alexchen/braidrep.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace alexchen {

void BraidWord::push(Letter l) {
    if (l.i > l.j) std::swap(l.i, l.j);
    if (l.i < 1 || l.j > n_ || l.i == l.j) throw std::out_of_range("braid word: bad generator index");
    if (!letters_.empty()) {
        auto& b = letters_.back();
        if (b.i == l.i && b.j == l.j && b.exp == -l.exp) {
            letters_.pop_back();
            return;
        }
    }
    letters_.push_back(l);
}

BraidWord BraidWord::generator(int n, int i, int j, int exp) {
    BraidWord b(n);
    for (int k = 0; k < std::abs(exp); ++k) b.push({i, j, exp > 0 ? 1 : -1});
    return b;
}

BraidWord BraidWord::inverse() const {
    BraidWord b(n_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) b.push({it->i, it->j, -it->exp});
    return b;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    BraidWord r(a);
    if (r.n_ == 0) r.n_ = b.n_;
    for (auto& l : b.letters_) r.push(l);
    return r;
}

std::string BraidWord::str() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (auto& l : letters_) {
        if (!s.empty()) s += " ";
        s += "A[" + std::to_string(l.i) + "," + std::to_string(l.j) + "]";
        if (l.exp < 0) s += "^-1";
    }
    return s;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at column " + std::to_string(pos + 1) + ": " + what + " in \"" + s +
                                    "\"");
    }
    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool at_end() {
        skip();
        return pos >= s.size();
    }
    bool accept(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    int integer() {
        skip();
        bool neg = accept('-');
        skip();
        std::size_t st = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (st == pos) fail("expected integer");
        int v = std::stoi(s.substr(st, pos - st));
        return neg ? -v : v;
    }
};

BraidWord parse_braid(Cursor& c, int n, char stop) {
    BraidWord w(n);
    while (true) {
        c.skip();
        if (c.pos >= c.s.size() || c.s[c.pos] == stop) break;
        BraidWord atom(n);
        if (c.accept('1')) {
        } else if (c.accept('A')) {
            c.expect('[');
            int i = c.integer();
            c.expect(',');
            int j = c.integer();
            c.expect(']');
            if (i < 1 || j < 1 || i > n || j > n || i == j) c.fail("generator index out of range");
            atom = BraidWord::generator(n, i, j);
        } else if (c.accept('(')) {
            atom = parse_braid(c, n, ')');
            c.expect(')');
        } else {
            c.fail("unexpected character");
        }
        if (c.accept('^')) {
            int k = c.integer();
            BraidWord base = k < 0 ? atom.inverse() : atom;
            atom = BraidWord(n);
            for (int r = 0; r < std::abs(k); ++r) atom = atom * base;
        }
        w = w * atom;
    }
    return w;
}

}  // namespace

BraidWord BraidWord::parse(const std::string& text, int n) {
    Cursor c{text};
    BraidWord w = parse_braid(c, n, '\0');
    if (!c.at_end()) c.fail("trailing input");
    return w;
}

ConjugatedTwist ConjugatedTwist::parse(const std::string& text, int n) {
    Cursor c{text};
    c.expect('T');
    c.skip();
    std::size_t close = text.find('}', c.pos);
    if (c.pos >= text.size() || text[c.pos] != '{' || close == std::string::npos) c.fail("expected vertex set {..}");
    ConjugatedTwist t;
    t.V = parse_subset(text.substr(c.pos, close - c.pos + 1));
    c.pos = close + 1;
    if (t.V.size() < 2) c.fail("vertex set needs at least two elements");
    if (t.V.front() < 1 || t.V.back() > n) c.fail("vertex index out of range");
    t.delta = BraidWord(n);
    if (c.accept('^')) {
        c.expect('(');
        t.delta = parse_braid(c, n, ')');
        c.expect(')');
    }
    if (!c.at_end()) c.fail("trailing input");
    return t;
}

std::string ConjugatedTwist::str() const {
    std::string s = "T" + subset_str(V);
    if (!delta.is_identity()) s += " ^ (" + delta.str() + ")";
    return s;
}

MonodromyFile MonodromyFile::parse(const std::string& text) {
    MonodromyFile m;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
        try {
            if (m.n == 0) {
                std::istringstream ls(line);
                std::string kw;
                ls >> kw >> m.n;
                if (kw != "strands" || !ls || m.n < 2) throw std::invalid_argument("expected 'strands <n>' with n >= 2");
                continue;
            }
            m.generators.push_back(ConjugatedTwist::parse(line, m.n));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("monodromy line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (m.n == 0) throw std::invalid_argument("monodromy: missing 'strands' line");
    return m;
}

std::string MonodromyFile::to_text() const {
    std::string s = "strands " + std::to_string(n) + "\n";
    for (auto& g : generators) s += g.str() + "\n";
    return s;
}

BraidWord twist_word(const Subset& V, int n) {
    if (V.size() < 2) throw std::invalid_argument("twist_word: need |V| >= 2");
    BraidWord b(n);
    for (std::size_t s = 1; s < V.size(); ++s)
        for (std::size_t r = 0; r < s; ++r) b = b * BraidWord::generator(n, V[r], V[s]);
    return b;
}

ConjTuple twist_tuple(const Subset& V, int n) {
    if (V.size() < 2) throw std::invalid_argument("twist_tuple: need |V| >= 2");
    ConjTuple z(n, FreeWord(n));
    FreeWord tV = FreeWord::product_of(n, V);
    for (int i = 1; i <= n; ++i) {
        if (std::binary_search(V.begin(), V.end(), i)) {
            z[i - 1] = tV;
        } else if (i > V.front() && i < V.back()) {
            std::vector<int> below, above;
            for (int v : V) (v < i ? below : above).push_back(v);
            z[i - 1] = FreeWord::commutator(FreeWord::product_of(n, below), FreeWord::product_of(n, above));
        }
    }
    return z;
}

LMatrix gassner_conj(const ConjTuple& z) {
    int n = static_cast<int>(z.size());
    LMatrix m(n, n, LaurentPoly(n));
    for (int i = 0; i < n; ++i) {
        auto g = abelianized_gradient(z[i]);
        LaurentPoly f = LaurentPoly::one(n) - LaurentPoly::var(n, i + 1);
        for (int j = 0; j < n; ++j)
            if (!g[j].is_zero()) m(i, j) = f * g[j];
        m(i, i) += z[i].abelian_image();
    }
    return m;
}

namespace {

// Basis-conjugating tuple of A_{i,j}^{-1}.
ConjTuple inverse_generator_tuple(int i, int j, int n) {
    ConjTuple z(n, FreeWord(n));
    FreeWord w = FreeWord::product_of(n, {i, j});
    FreeWord winv = w.inverse();
    FreeWord c = FreeWord::commutator(FreeWord::generator(n, i), FreeWord::generator(n, j));
    z[i - 1] = winv;
    z[j - 1] = winv;
    for (int k = i + 1; k < j; ++k) z[k - 1] = winv * c.inverse() * w;
    return z;
}

ConjTuple generator_tuple(const BraidWord::Letter& l, int n) {
    return l.exp > 0 ? twist_tuple({l.i, l.j}, n) : inverse_generator_tuple(l.i, l.j, n);
}

}  // namespace

LMatrix gassner_word(const BraidWord& b) {
    int n = b.strands();
    LMatrix m = lidentity(n, n);
    for (auto& l : b.letters()) m = m * gassner_conj(generator_tuple(l, n));
    return m;
}

LMatrix gassner_twist(const ConjugatedTwist& a, int n) {
    LMatrix A = gassner_conj(twist_tuple(a.V, n));
    if (a.delta.is_identity()) return A;
    return gassner_word(a.delta.inverse()) * A * gassner_word(a.delta);
}

std::vector<FreeWord> artin_images(const BraidWord& b) {
    int n = b.strands();
    std::vector<FreeWord> cur;
    for (int i = 1; i <= n; ++i) cur.push_back(FreeWord::generator(n, i));
    for (auto& l : b.letters()) {
        ConjTuple z = generator_tuple(l, n);
        std::vector<FreeWord> img, img_inv;
        for (int i = 0; i < n; ++i) {
            img.push_back(z[i] * FreeWord::generator(n, i + 1) * z[i].inverse());
            img_inv.push_back(img.back().inverse());
        }
        for (auto& w : cur) {
            FreeWord next(n);
            for (auto& [g, x] : w.letters()) next = next * (x > 0 ? img[g - 1] : img_inv[g - 1]);
            w = next;
        }
    }
    return cur;
}

LMatrix jacobian_ab(const std::vector<FreeWord>& images) {
    int n = static_cast<int>(images.size());
    LMatrix m(n, n, LaurentPoly(n));
    for (int i = 0; i < n; ++i) {
        auto g = abelianized_gradient(images[i]);
        for (int j = 0; j < n; ++j) m(i, j) = g[j];
    }
    return m;
}

namespace {

LaurentPoly minor(const LMatrix& m, const Subset& rows, const Subset& cols) {
    std::size_t k = rows.size();
    int n = m.zero().nvars();
    if (k == 0) return LaurentPoly::one(n);
    std::vector<LaurentPoly> dp(std::size_t(1) << k, LaurentPoly(n));
    dp[0] = LaurentPoly::one(n);
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        if (dp[mask].is_zero()) continue;
        std::size_t r = static_cast<std::size_t>(std::popcount(mask));
        if (r == k) continue;
        for (std::size_t c = 0; c < k; ++c) {
            if (mask & (std::size_t(1) << c)) continue;
            const LaurentPoly& a = m(rows[r] - 1, cols[c] - 1);
            if (a.is_zero()) continue;
            int above = std::popcount(mask >> (c + 1));
            LaurentPoly t = dp[mask] * a;
            if (above % 2) t = -t;
            dp[mask | (std::size_t(1) << c)] += t;
        }
    }
    return dp.back();
}

}  // namespace

LaurentPoly determinant(const LMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    Subset all;
    for (std::size_t i = 1; i <= m.rows(); ++i) all.push_back(static_cast<int>(i));
    return minor(m, all, all);
}

LMatrix exterior_power(const LMatrix& m, int k) {
    if (m.rows() != m.cols()) throw std::invalid_argument("exterior_power: matrix not square");
    int dim = static_cast<int>(m.rows());
    if (k < 0 || k > dim) throw std::out_of_range("exterior_power: degree out of range");
    int n = m.zero().nvars();
    WedgeBasis b(dim, k);
    LMatrix r(b.size(), b.size(), LaurentPoly(n));
    for (std::size_t a = 0; a < b.size(); ++a)
        for (std::size_t c = 0; c < b.size(); ++c) r(a, c) = minor(m, b[a], b[c]);
    r.row_labels = b.labels();
    r.col_labels = b.labels();
    return r;
}

LMatrix mu_matrix(const Subset& V, int n) {
    LMatrix m = lidentity(n, n);
    if (V.empty()) throw std::invalid_argument("mu_matrix: empty vertex set");
    ChainVec nab = nabla_V(V, n);
    for (int j = 0; j < n; ++j) m(V.front() - 1, j) = nab[j];
    return m;
}

LMatrix mu_matrix_inverse(const Subset& V, int n) {
    LMatrix m = lidentity(n, n);
    if (V.empty()) throw std::invalid_argument("mu_matrix: empty vertex set");
    ChainVec nab = nabla_V(V, n);
    for (std::size_t r = 1; r < V.size(); ++r) m(V.front() - 1, V[r] - 1) = -nab[V[r] - 1];
    return m;
}

}  // namespace alexchen
