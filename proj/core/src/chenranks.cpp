#include "alexchen/chenranks.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <stdexcept>

namespace alexchen {

// ------------------------------------------------------------ monomial table

MonomialTable::MonomialTable(int n, int D) : n_(n), D_(D) {
    if (n < 0 || n > 16) throw std::out_of_range("monomial table: at most 16 variables");
    if (D < 0 || D > 15) throw std::out_of_range("monomial table: truncation degree must be in 0..15");
    offset_.push_back(0);
    std::vector<int> e(n, 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == n - 1 || n == 0) {
            if (n > 0) e[var] = left;
            if (n == 0 && left > 0) return;
            std::uint64_t p = 0;
            for (int i = 0; i < n; ++i) p |= std::uint64_t(e[i]) << (4 * i);
            index_.emplace(p, static_cast<long>(packed_.size()));
            packed_.push_back(p);
            int deg = 0;
            for (int x : e) deg += x;
            degree_.push_back(deg);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[var] = k;
            rec(var + 1, left - k);
        }
        e[var] = 0;
    };
    for (int d = 0; d <= D; ++d) {
        rec(0, d);
        offset_.push_back(packed_.size());
    }
    mul_.assign(packed_.size() * n, -1);
    for (std::size_t id = 0; id < packed_.size(); ++id) {
        if (degree_[id] == D) continue;
        for (int v = 0; v < n; ++v) mul_[id * n + v] = index_.at(packed_[id] + (std::uint64_t(1) << (4 * v)));
    }
}

long MonomialTable::id_of(std::uint64_t p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

long MonomialTable::id_of(const Exponent& e) const {
    int deg = 0;
    std::uint64_t p = 0;
    for (int i = 0; i < n_; ++i) {
        if (e[i] < 0) return -1;
        deg += e[i];
        if (deg > D_) return -1;
        p |= std::uint64_t(e[i]) << (4 * i);
    }
    return id_of(p);
}

bool MonomialTable::divides(std::uint64_t a, std::uint64_t b, int n) {
    for (int i = 0; i < n; ++i)
        if (((a >> (4 * i)) & 15u) > ((b >> (4 * i)) & 15u)) return false;
    return true;
}

std::uint64_t MonomialTable::lcm(std::uint64_t a, std::uint64_t b, int n) {
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) r |= std::max((a >> (4 * i)) & 15u, (b >> (4 * i)) & 15u) << (4 * i);
    return r;
}

namespace {

int packed_degree(std::uint64_t p, int n) {
    int d = 0;
    for (int i = 0; i < n; ++i) d += static_cast<int>((p >> (4 * i)) & 15u);
    return d;
}

}  // namespace

KeySpace::KeySpace(const MonomialTable& mons, std::size_t rank) : mons_(mons), rank_(rank) {
    total_ = mons.size() * rank;
    pos_.resize(total_);
    mono_.resize(total_);
    for (int d = 0; d <= mons.max_degree(); ++d)
        for (std::size_t p = 0; p < rank; ++p)
            for (std::size_t m = 0; m < mons.count(d); ++m) {
                std::size_t k = key(p, mons.offset(d) + m);
                pos_[k] = p;
                mono_[k] = mons.offset(d) + m;
            }
}

std::size_t KeySpace::key(std::size_t pos, std::size_t mono) const {
    int d = mons_.degree(mono);
    return rank_ * mons_.offset(d) + pos * mons_.count(d) + (mono - mons_.offset(d));
}

std::vector<SparseVec> to_sparse_rows(const PMatrix& m, const KeySpace& keys) {
    std::vector<SparseVec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        SparseVec v;
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (auto& [e, c] : m(i, j).terms()) {
                long id = keys.monomials().id_of(e);
                if (id >= 0) v.emplace_back(keys.key(j, static_cast<std::size_t>(id)), c);
            }
        std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
        rows.push_back(std::move(v));
    }
    return rows;
}

// -------------------------------------------------------- unit elimination

PMatrix completed_matrix(const Presentation& p, int D) {
    if (p.ring == RingTag::Laurent) return magnus_substitute(clear_units(p.laurent), D);
    if (p.truncation < D)
        throw std::invalid_argument("presentation truncated at degree " + std::to_string(p.truncation) +
                                    ", need at least " + std::to_string(D));
    PMatrix m(p.power.rows(), p.power.cols(), Poly(p.nvars, D));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = p.power(i, j).truncated(D);
    m.row_labels = p.power.row_labels;
    m.col_labels = p.power.col_labels;
    return m;
}

PMatrix eliminate_unit_pivots(const PMatrix& input, int D) {
    std::vector<std::vector<Poly>> rows(input.rows());
    for (std::size_t i = 0; i < input.rows(); ++i)
        for (std::size_t j = 0; j < input.cols(); ++j) rows[i].push_back(input(i, j).truncated(D));
    std::vector<bool> col_alive(input.cols(), true);
    std::vector<bool> row_alive(input.rows(), true);
    while (true) {
        std::size_t pr = rows.size(), pc = 0;
        for (std::size_t i = 0; i < rows.size() && pr == rows.size(); ++i) {
            if (!row_alive[i]) continue;
            for (std::size_t j = 0; j < input.cols(); ++j)
                if (col_alive[j] && rows[i][j].constant_term() != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        }
        if (pr == rows.size()) break;
        Poly inv = truncated_inverse(rows[pr][pc], D);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pr || !row_alive[i] || rows[i][pc].is_zero()) continue;
            Poly f = rows[i][pc] * inv;
            for (std::size_t j = 0; j < input.cols(); ++j)
                if (col_alive[j] && !rows[pr][j].is_zero()) rows[i][j] -= f * rows[pr][j];
        }
        row_alive[pr] = false;
        col_alive[pc] = false;
    }
    std::vector<std::size_t> keep_r, keep_c;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (row_alive[i]) keep_r.push_back(i);
    for (std::size_t j = 0; j < input.cols(); ++j)
        if (col_alive[j]) keep_c.push_back(j);
    PMatrix out(keep_r.size(), keep_c.size(), Poly(input.zero().nvars(), D));
    for (std::size_t a = 0; a < keep_r.size(); ++a) {
        for (std::size_t b = 0; b < keep_c.size(); ++b) out(a, b) = rows[keep_r[a]][keep_c[b]];
        if (!input.row_labels.empty()) out.row_labels.push_back(input.row_labels[keep_r[a]]);
    }
    for (auto b : keep_c)
        if (!input.col_labels.empty()) out.col_labels.push_back(input.col_labels[b]);
    return out;
}

// ------------------------------------------------------------ standard basis

namespace {

class Reducer {
public:
    explicit Reducer(const KeySpace& keys) : keys_(keys), acc_(keys.size()), owner_(keys.size(), -1) {}

    const KeySpace& keys() const { return keys_; }
    long owner(std::size_t key) const { return owner_[key]; }

    void load(const SparseVec& v) {
        for (auto& [k, c] : v) touch(k) += c;
    }

    // Subtracts c * x^q * g, q packed.
    void add_multiple(const SparseVec& g, std::uint64_t q, const Rational& c) {
        const auto& mons = keys_.monomials();
        int n = mons.nvars();
        for (auto& [k, coef] : g) {
            long m = static_cast<long>(keys_.monomial(k));
            for (int v = 0; v < n && m >= 0; ++v)
                for (unsigned e = (q >> (4 * v)) & 15u; e > 0 && m >= 0; --e) m = mons.times_var(m, v);
            if (m < 0) continue;
            touch(keys_.key(keys_.position(k), static_cast<std::size_t>(m))) -= c * coef;
        }
    }

    // Full reduction of the accumulator against registered elements.
    SparseVec reduce(const std::vector<SparseVec>& basis, bool full) {
        std::sort(touched_.begin(), touched_.end());
        touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
        SparseVec out;
        const auto& mons = keys_.monomials();
        std::size_t start = touched_.empty() ? keys_.size() : touched_.front();
        for (std::size_t k = start; k < keys_.size(); ++k) {
            if (!used_flag(k) || sgn(acc_[k]) == 0) continue;
            long g = owner_[k];
            if (g >= 0) {
                const SparseVec& b = basis[static_cast<std::size_t>(g)];
                std::uint64_t q = mons.packed(keys_.monomial(k)) - mons.packed(keys_.monomial(b.front().first));
                Rational c = acc_[k] / b.front().second;
                add_multiple(b, q, c);
                continue;
            }
            out.emplace_back(k, acc_[k]);
            if (!full) break;
        }
        clear();
        if (!out.empty()) {
            Rational lc = out.front().second;
            for (auto& t : out) t.second /= lc;
        }
        return out;
    }

    // Marks every multiple of the lead of element g as reducible by g.
    void register_lead(std::size_t key, long g) {
        const auto& mons = keys_.monomials();
        std::size_t pos = keys_.position(key);
        std::vector<std::size_t> stack{keys_.monomial(key)};
        while (!stack.empty()) {
            std::size_t m = stack.back();
            stack.pop_back();
            std::size_t k = keys_.key(pos, m);
            if (owner_[k] >= 0) continue;
            owner_[k] = g;
            for (int v = 0; v < mons.nvars(); ++v) {
                long nm = mons.times_var(m, v);
                if (nm >= 0 && owner_[keys_.key(pos, static_cast<std::size_t>(nm))] < 0)
                    stack.push_back(static_cast<std::size_t>(nm));
            }
        }
    }

    void clear() {
        for (auto k : touched_) {
            acc_[k] = 0;
            flag_[k] = false;
        }
        touched_.clear();
    }

private:
    const KeySpace& keys_;
    std::vector<Rational> acc_;
    std::vector<long> owner_;
    std::vector<bool> flag_ = std::vector<bool>(keys_.size(), false);
    std::vector<std::size_t> touched_;

    bool used_flag(std::size_t k) const { return flag_[k]; }
    Rational& touch(std::size_t k) {
        if (!flag_[k]) {
            flag_[k] = true;
            touched_.push_back(k);
        }
        return acc_[k];
    }
};

struct Pair {
    std::size_t i, j;
    std::uint64_t lcm;
    int degree;
};

}  // namespace

GradedModuleBasis tangent_cone(const PMatrix& m, int n, int D) {
    MonomialTable mons(n, D);
    KeySpace keys(mons, m.cols());
    Reducer red(keys);
    std::vector<SparseVec> basis;
    std::vector<Pair> pairs;

    auto lead_packed = [&](std::size_t g) { return mons.packed(keys.monomial(basis[g].front().first)); };
    auto lead_pos = [&](std::size_t g) { return keys.position(basis[g].front().first); };

    auto add = [&](SparseVec v) {
        std::size_t h = basis.size();
        std::uint64_t lh = mons.packed(keys.monomial(v.front().first));
        std::size_t ph = keys.position(v.front().first);
        basis.push_back(std::move(v));
        red.register_lead(basis[h].front().first, static_cast<long>(h));
        // Gebauer-Moeller update without the product criterion (module case).
        std::vector<Pair> fresh;
        for (std::size_t i = 0; i < h; ++i) {
            if (lead_pos(i) != ph) continue;
            std::uint64_t l = MonomialTable::lcm(lead_packed(i), lh, n);
            int d = packed_degree(l, n);
            if (d > D) continue;
            fresh.push_back({i, h, l, d});
        }
        std::vector<Pair> kept;
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            bool drop = false;
            for (std::size_t b = 0; b < fresh.size() && !drop; ++b) {
                if (a == b) continue;
                bool div = MonomialTable::divides(fresh[b].lcm, fresh[a].lcm, n);
                if (div && (fresh[b].lcm != fresh[a].lcm || b < a)) drop = true;
            }
            if (!drop) kept.push_back(fresh[a]);
        }
        std::vector<Pair> old;
        for (auto& p : pairs) {
            if (lead_pos(p.i) == ph && MonomialTable::divides(lh, p.lcm, n) &&
                MonomialTable::lcm(lead_packed(p.i), lh, n) != p.lcm &&
                MonomialTable::lcm(lead_packed(p.j), lh, n) != p.lcm)
                continue;
            old.push_back(p);
        }
        old.insert(old.end(), kept.begin(), kept.end());
        pairs = std::move(old);
    };

    for (auto& row : to_sparse_rows(m, keys)) {
        if (row.empty()) continue;
        red.load(row);
        SparseVec r = red.reduce(basis, true);
        if (!r.empty()) add(std::move(r));
    }
    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
            if (a.degree != b.degree) return a.degree < b.degree;
            if (a.j != b.j) return a.j < b.j;
            return a.i < b.i;
        });
        Pair p = *best;
        pairs.erase(best);
        const SparseVec& gi = basis[p.i];
        const SparseVec& gj = basis[p.j];
        red.add_multiple(gi, p.lcm - lead_packed(p.i), -1 / gi.front().second);
        red.add_multiple(gj, p.lcm - lead_packed(p.j), 1 / gj.front().second);
        SparseVec r = red.reduce(basis, true);
        if (!r.empty()) add(std::move(r));
    }

    // Minimal subset: drop elements whose lead is a multiple of another lead.
    GradedModuleBasis out;
    out.nvars = n;
    out.truncation = D;
    out.rank = m.cols();
    for (std::size_t g = 0; g < basis.size(); ++g) {
        bool redundant = false;
        for (std::size_t h = 0; h < basis.size() && !redundant; ++h) {
            if (h == g || lead_pos(h) != lead_pos(g)) continue;
            if (!MonomialTable::divides(lead_packed(h), lead_packed(g), n)) continue;
            if (lead_packed(h) != lead_packed(g) || h < g) redundant = true;
        }
        if (redundant) continue;
        Exponent e(n);
        for (int v = 0; v < n; ++v) e[v] = mons.exponent(keys.monomial(basis[g].front().first), v);
        out.leads.emplace_back(lead_pos(g), e);
        out.elements.push_back(basis[g]);
    }
    return out;
}

ChenProfile hilbert_theta(const GradedModuleBasis& basis, int K) {
    if (K < 2) throw std::invalid_argument("hilbert_theta: need K >= 2");
    int D = K - 2;
    if (D > basis.truncation) throw std::invalid_argument("hilbert_theta: basis truncated below degree K-2");
    int n = basis.nvars;
    MonomialTable mons(n, D);
    std::vector<std::vector<bool>> marked(basis.rank, std::vector<bool>(mons.size(), false));
    for (auto& [pos, e] : basis.leads) {
        long id = mons.id_of(e);
        if (id < 0) continue;
        std::vector<std::size_t> stack{static_cast<std::size_t>(id)};
        while (!stack.empty()) {
            std::size_t m = stack.back();
            stack.pop_back();
            if (marked[pos][m]) continue;
            marked[pos][m] = true;
            for (int v = 0; v < n; ++v) {
                long nm = mons.times_var(m, v);
                if (nm >= 0 && !marked[pos][nm]) stack.push_back(static_cast<std::size_t>(nm));
            }
        }
    }
    ChenProfile prof;
    prof.theta1 = n;
    prof.K = K;
    for (int d = 0; d <= D; ++d) {
        long long free = 0;
        for (std::size_t p = 0; p < basis.rank; ++p)
            for (std::size_t m = mons.offset(d); m < mons.offset(d + 1); ++m)
                if (!marked[p][m]) ++free;
        prof.theta[d + 2] = free;
    }
    prof.method = "standard-basis";
    detect_linear_tail(prof);
    return prof;
}

ChenProfile chen_ranks(const Presentation& p, int K) { return chen_ranks(p, K, K - 2); }

ChenProfile chen_ranks(const Presentation& p, int K, int D) {
    if (K < 2) throw std::invalid_argument("chen_ranks: need K >= 2");
    if (D < K - 2) throw std::invalid_argument("chen_ranks: truncation " + std::to_string(D) + " below K - 2");
    PMatrix m = eliminate_unit_pivots(completed_matrix(p, D), D);
    ChenProfile prof = hilbert_theta(tangent_cone(m, p.nvars, D), K);
    prof.theta1 = p.nvars;
    return prof;
}

// ------------------------------------------------------------------ oracle

namespace {

struct RationalField {
    using T = Rational;
    static T from(const Rational& q) { return q; }
    static bool zero(const T& a) { return sgn(a) == 0; }
    static T mul(const T& a, const T& b) { return a * b; }
    static void sub_mul(T& acc, const T& c, const T& x) { acc -= c * x; }
    static void add(T& acc, const T& c) { acc += c; }
    static T inv(const T& a) { return 1 / a; }
    static void clear(T& a) { a = 0; }
};

struct PrimeField {
    using T = std::uint64_t;
    static constexpr std::uint64_t p = (std::uint64_t(1) << 61) - 1;
    static T reduce(unsigned __int128 x) {
        std::uint64_t lo = static_cast<std::uint64_t>(x & p), hi = static_cast<std::uint64_t>(x >> 61);
        std::uint64_t r = lo + hi;
        return r >= p ? r - p : r;
    }
    static T mul(T a, T b) { return reduce(static_cast<unsigned __int128>(a) * b); }
    static T pow(T a, std::uint64_t e) {
        T r = 1;
        for (; e; e >>= 1, a = mul(a, a))
            if (e & 1) r = mul(r, a);
        return r;
    }
    static T inv(T a) { return pow(a, p - 2); }
    static T from(const Rational& q) {
        static const Integer modulus = (Integer(1) << 61) - 1;
        Integer num, den;
        mpz_fdiv_r(num.get_mpz_t(), q.get_num_mpz_t(), modulus.get_mpz_t());
        mpz_fdiv_r(den.get_mpz_t(), q.get_den_mpz_t(), modulus.get_mpz_t());
        if (den == 0) throw std::domain_error("oracle: denominator divisible by the field characteristic");
        return mul(static_cast<T>(num.get_ui()), inv(static_cast<T>(den.get_ui())));
    }
    static bool zero(T a) { return a == 0; }
    static void sub_mul(T& acc, T c, T x) {
        T m = mul(c, x);
        acc = acc >= m ? acc - m : acc + p - m;
    }
    static void add(T& acc, T c) {
        acc += c;
        if (acc >= p) acc -= p;
    }
    static void clear(T& a) { a = 0; }
};

// Semi-echelon basis of the span of all x^a * relation, truncated; pivots are
// the smallest keys, so pivot counts per degree give dim gr of the span.
template <class F>
std::vector<bool> closure_pivots(const PMatrix& m, const MonomialTable& mons, const KeySpace& keys, int n) {
    using T = typename F::T;
    using Row = std::vector<std::pair<std::size_t, T>>;
    std::vector<long> pivot_row(keys.size(), -1);
    std::vector<Row> rows;
    std::deque<std::size_t> queue;
    std::vector<T> acc(keys.size());
    std::vector<bool> live(keys.size(), false);
    std::vector<std::size_t> support;

    auto insert = [&](const Row& v) {
        std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> heap;
        auto touch = [&](std::size_t k) -> T& {
            if (!live[k]) {
                live[k] = true;
                support.push_back(k);
                heap.push(k);
            }
            return acc[k];
        };
        for (auto& [k, c] : v) F::add(touch(k), c);
        Row out;
        while (!heap.empty()) {
            std::size_t best = heap.top();
            heap.pop();
            if (F::zero(acc[best])) continue;
            long r = pivot_row[best];
            if (r < 0) {
                out.emplace_back(best, acc[best]);
                while (!heap.empty()) {
                    std::size_t k = heap.top();
                    heap.pop();
                    if (!F::zero(acc[k])) out.emplace_back(k, acc[k]);
                }
                break;
            }
            T c = acc[best];
            for (auto& [k, x] : rows[static_cast<std::size_t>(r)]) F::sub_mul(touch(k), c, x);
        }
        for (auto k : support) {
            F::clear(acc[k]);
            live[k] = false;
        }
        support.clear();
        if (out.empty()) return;
        T li = F::inv(out.front().second);
        for (auto& t : out) t.second = F::mul(t.second, li);
        pivot_row[out.front().first] = static_cast<long>(rows.size());
        queue.push_back(rows.size());
        rows.push_back(std::move(out));
    };

    for (auto& r : to_sparse_rows(m, keys)) {
        Row v;
        for (auto& [k, c] : r) v.emplace_back(k, F::from(c));
        if (!v.empty()) insert(v);
    }
    while (!queue.empty()) {
        std::size_t r = queue.front();
        queue.pop_front();
        for (int var = 0; var < n; ++var) {
            Row prod;
            for (auto& [k, c] : rows[r]) {
                long nm = mons.times_var(keys.monomial(k), var);
                if (nm >= 0) prod.emplace_back(keys.key(keys.position(k), static_cast<std::size_t>(nm)), c);
            }
            if (!prod.empty()) insert(prod);
        }
    }
    std::vector<bool> pivots(keys.size());
    for (std::size_t k = 0; k < keys.size(); ++k) pivots[k] = pivot_row[k] >= 0;
    return pivots;
}

}  // namespace

ChenProfile chen_ranks_oracle(const Presentation& p, int K, OracleField field) {
    if (K < 2) throw std::invalid_argument("chen_ranks_oracle: need K >= 2");
    int D = K - 2, n = p.nvars;
    PMatrix m = completed_matrix(p, D);
    MonomialTable mons(n, D);
    KeySpace keys(mons, m.cols());
    std::vector<bool> pivot = field == OracleField::Rational ? closure_pivots<RationalField>(m, mons, keys, n)
                                                              : closure_pivots<PrimeField>(m, mons, keys, n);
    ChenProfile prof;
    prof.theta1 = n;
    prof.K = K;
    for (int d = 0; d <= D; ++d) {
        long long pivots = 0;
        for (std::size_t p2 = 0; p2 < keys.rank(); ++p2)
            for (std::size_t mm = mons.offset(d); mm < mons.offset(d + 1); ++mm)
                if (pivot[keys.key(p2, mm)]) ++pivots;
        prof.theta[d + 2] = static_cast<long long>(keys.rank() * mons.count(d)) - pivots;
    }
    prof.method = field == OracleField::Rational ? "graded-linear-algebra/Q" : "graded-linear-algebra/GF(2^61-1)";
    detect_linear_tail(prof);
    return prof;
}

void detect_linear_tail(ChenProfile& prof) {
    prof.linear_tail.reset();
    if (prof.K < 6) return;
    long long a = prof.theta.at(5) - prof.theta.at(4);
    long long b = prof.theta.at(4) - 4 * a;
    for (int k = 4; k <= prof.K; ++k)
        if (prof.theta.at(k) != a * k + b) return;
    prof.linear_tail = std::make_pair(a, b);
}

nlohmann::json ChenProfile::to_json() const {
    nlohmann::json j;
    j["theta1"] = theta1;
    j["K"] = K;
    j["method"] = method;
    nlohmann::json t = nlohmann::json::object();
    for (auto& [k, v] : theta) t[std::to_string(k)] = v;
    j["theta"] = t;
    if (linear_tail)
        j["linear_tail"] = {{"slope", linear_tail->first}, {"intercept", linear_tail->second}};
    else
        j["linear_tail"] = nullptr;
    return j;
}

}  // namespace alexchen
