#include "alexchen/exactring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace alexchen {

int total_degree(const Exponent& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool ExponentLess::operator()(const Exponent& a, const Exponent& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

void accumulate(std::map<Exponent, Rational, ExponentLess>& m, const Exponent& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto it = m.find(e);
    if (it == m.end()) {
        m.emplace(e, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) m.erase(it);
}

std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string render(const std::map<Exponent, Rational, ExponentLess>& terms, const std::string& var) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Exponent& e = it->first;
        Rational c = it->second;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var + std::to_string(i + 1);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += rational_str(c);
        else if (c == 1)
            out += mono;
        else
            out += rational_str(c) + "*" + mono;
    }
    return out;
}

Exponent pad(const Exponent& e, int n) {
    Exponent r(e);
    r.resize(n, 0);
    return r;
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(int n, const Rational& c) : n_(n) {
    if (sgn(c) != 0) terms_.emplace(Exponent(n, 0), c);
}

LaurentPoly LaurentPoly::monomial(int n, Exponent e, const Rational& c) {
    if (static_cast<int>(e.size()) != n) throw std::invalid_argument("monomial: exponent length mismatch");
    LaurentPoly p(n);
    if (sgn(c) != 0) p.terms_.emplace(std::move(e), c);
    return p;
}

LaurentPoly LaurentPoly::var(int n, int i, int power) {
    if (i < 1 || i > n) throw std::out_of_range("variable index out of range");
    Exponent e(n, 0);
    e[i - 1] = power;
    return monomial(n, e);
}

void LaurentPoly::adopt_n(const LaurentPoly& o) {
    if (n_ == o.n_) return;
    if (terms_.empty() && n_ == 0) {
        n_ = o.n_;
        return;
    }
    if (o.n_ == 0 && o.terms_.empty()) return;
    if (n_ == 0) {
        TermMap t;
        for (auto& [e, c] : terms_) t.emplace(pad(e, o.n_), c);
        terms_ = std::move(t);
        n_ = o.n_;
        return;
    }
    throw std::invalid_argument("Laurent polynomials over different rings");
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("add_term: exponent length mismatch");
    accumulate(terms_, e, c);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    adopt_n(o);
    for (auto& [e, c] : o.terms_) accumulate(terms_, o.n_ == n_ ? e : pad(e, n_), c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    adopt_n(o);
    for (auto& [e, c] : o.terms_) accumulate(terms_, o.n_ == n_ ? e : pad(e, n_), -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a.n_);
    r.adopt_n(b);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    int n = r.n_;
    Exponent e(n);
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < n; ++i)
                e[i] = (i < static_cast<int>(ea.size()) ? ea[i] : 0) + (i < static_cast<int>(eb.size()) ? eb[i] : 0);
            accumulate(r.terms_, e, ca * cb);
        }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& [e, x] : r.terms_) x = -x;
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (terms_.empty() || o.terms_.empty()) return terms_.empty() && o.terms_.empty();
    return n_ == o.n_ && terms_ == o.terms_;
}

Rational LaurentPoly::augmentation() const {
    Rational s = 0;
    for (auto& [e, c] : terms_) s += c;
    return s;
}

bool LaurentPoly::is_polynomial() const {
    for (auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return false;
    return true;
}

LaurentPoly LaurentPoly::unit_inverse() const {
    if (terms_.size() != 1) throw std::domain_error("unit_inverse: not a single-term element");
    auto& [e, c] = *terms_.begin();
    Exponent ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    return monomial(n_, ne, 1 / c);
}

Exponent LaurentPoly::min_exponent() const {
    Exponent m(n_, 0);
    bool first = true;
    for (auto& [e, c] : terms_) {
        for (int i = 0; i < n_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
        first = false;
    }
    return m;
}

LaurentPoly LaurentPoly::shift(const Exponent& s) const {
    LaurentPoly r(n_);
    for (auto& [e, c] : terms_) {
        Exponent ne(e);
        for (int i = 0; i < n_; ++i) ne[i] += s[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& images) const {
    if (static_cast<int>(images.size()) != n_) throw std::invalid_argument("substitute: wrong number of images");
    int m = images.empty() ? 0 : images[0].nvars();
    for (auto& im : images) m = std::max(m, im.nvars());
    LaurentPoly r(m);
    std::vector<std::map<int, LaurentPoly>> cache(n_);
    auto power = [&](int i, int k) -> const LaurentPoly& {
        auto it = cache[i].find(k);
        if (it != cache[i].end()) return it->second;
        LaurentPoly base = k < 0 ? images[i].unit_inverse() : images[i];
        LaurentPoly p(m, 1);
        for (int j = 0; j < std::abs(k); ++j) p *= base;
        return cache[i].emplace(k, std::move(p)).first->second;
    };
    for (auto& [e, c] : terms_) {
        LaurentPoly t(m, c);
        for (int i = 0; i < n_; ++i)
            if (e[i] != 0) t *= power(i, e[i]);
        r += t;
    }
    return r;
}

LaurentPoly LaurentPoly::relabel(int new_n, const std::vector<int>& index_map) const {
    LaurentPoly r(new_n);
    for (auto& [e, c] : terms_) {
        Exponent ne(new_n, 0);
        for (int i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            int j = index_map.at(i);
            if (j < 0 || j >= new_n) throw std::out_of_range("relabel: target index out of range");
            ne[j] += e[i];
        }
        accumulate(r.terms_, ne, c);
    }
    return r;
}

std::string LaurentPoly::str(const std::string& var) const { return render(terms_, var); }

// ----------------------------------------------------------------------- Poly

Poly::Poly(int n, const Rational& c, int trunc) : n_(n), trunc_(trunc) {
    if (sgn(c) != 0) terms_.emplace(Exponent(n, 0), c);
}

Poly Poly::monomial(int n, Exponent e, const Rational& c, int trunc) {
    if (static_cast<int>(e.size()) != n) throw std::invalid_argument("monomial: exponent length mismatch");
    for (int x : e)
        if (x < 0) throw std::invalid_argument("Poly: negative exponent");
    Poly p(n, trunc);
    if (sgn(c) != 0 && (trunc == kUnbounded || total_degree(e) <= trunc)) p.terms_.emplace(std::move(e), c);
    return p;
}

Poly Poly::var(int n, int i, int trunc) {
    if (i < 1 || i > n) throw std::out_of_range("variable index out of range");
    Exponent e(n, 0);
    e[i - 1] = 1;
    return monomial(n, e, 1, trunc);
}

void Poly::adopt(const Poly& o) {
    if (n_ != o.n_) {
        if (terms_.empty() && n_ == 0) {
            n_ = o.n_;
        } else if (!(o.terms_.empty() && o.n_ == 0)) {
            if (n_ == 0) {
                TermMap t;
                for (auto& [e, c] : terms_) t.emplace(pad(e, o.n_), c);
                terms_ = std::move(t);
                n_ = o.n_;
            } else {
                throw std::invalid_argument("polynomials over different rings");
            }
        }
    }
    if (o.trunc_ != kUnbounded && (trunc_ == kUnbounded || o.trunc_ < trunc_)) {
        trunc_ = o.trunc_;
        clip();
    }
}

void Poly::clip() {
    if (trunc_ == kUnbounded) return;
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (total_degree(it->first) > trunc_)
            it = terms_.erase(it);
        else
            ++it;
    }
}

void Poly::add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("add_term: exponent length mismatch");
    for (int x : e)
        if (x < 0) throw std::invalid_argument("Poly: negative exponent");
    if (trunc_ != kUnbounded && total_degree(e) > trunc_) return;
    accumulate(terms_, e, c);
}

Poly Poly::truncated(int D) const {
    Poly r(*this);
    if (D != kUnbounded && (r.trunc_ == kUnbounded || D < r.trunc_)) r.trunc_ = D;
    r.clip();
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    adopt(o);
    for (auto& [e, c] : o.terms_) {
        if (trunc_ != kUnbounded && total_degree(e) > trunc_) continue;
        accumulate(terms_, o.n_ == n_ ? e : pad(e, n_), c);
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    adopt(o);
    for (auto& [e, c] : o.terms_) {
        if (trunc_ != kUnbounded && total_degree(e) > trunc_) continue;
        accumulate(terms_, o.n_ == n_ ? e : pad(e, n_), -c);
    }
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [e, x] : r.terms_) x = -x;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.n_, a.trunc_);
    r.adopt(b);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    int n = r.n_;
    Exponent e(n);
    for (auto& [ea, ca] : a.terms_) {
        int da = total_degree(ea);
        if (r.trunc_ != Poly::kUnbounded && da > r.trunc_) continue;
        for (auto& [eb, cb] : b.terms_) {
            if (r.trunc_ != Poly::kUnbounded && da + total_degree(eb) > r.trunc_) continue;
            for (int i = 0; i < n; ++i)
                e[i] = (i < static_cast<int>(ea.size()) ? ea[i] : 0) + (i < static_cast<int>(eb.size()) ? eb[i] : 0);
            accumulate(r.terms_, e, ca * cb);
        }
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.empty() || o.terms_.empty()) return terms_.empty() && o.terms_.empty();
    return n_ == o.n_ && terms_ == o.terms_;
}

Rational Poly::constant_term() const {
    if (terms_.empty()) return 0;
    auto it = terms_.begin();
    return total_degree(it->first) == 0 ? it->second : Rational(0);
}

int Poly::order() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

int Poly::degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

Poly Poly::graded_part(int d) const {
    Poly r(n_, trunc_);
    for (auto& [e, c] : terms_)
        if (total_degree(e) == d) r.terms_.emplace(e, c);
    return r;
}

std::string Poly::str(const std::string& var) const { return render(terms_, var); }

// ------------------------------------------------------------------- matrices

LMatrix lidentity(std::size_t size, int n) { return identity_matrix(size, LaurentPoly(n), LaurentPoly::one(n)); }

IntMatrix augment(const LMatrix& m) {
    IntMatrix r(m.rows(), m.cols(), Integer(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational v = m(i, j).augmentation();
            if (v.get_den() != 1) throw std::domain_error("augment: non-integral value at t=1");
            r(i, j) = v.get_num();
        }
    r.row_labels = m.row_labels;
    r.col_labels = m.col_labels;
    return r;
}

LMatrix lsubstitute(const LMatrix& m, const std::vector<LaurentPoly>& images) {
    int n = images.empty() ? 0 : images[0].nvars();
    LMatrix r(m.rows(), m.cols(), LaurentPoly(n));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).substitute(images);
    r.row_labels = m.row_labels;
    r.col_labels = m.col_labels;
    return r;
}

LMatrix unit_pivot_inverse(const LMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    std::size_t N = m.rows();
    int n = 0;
    for (std::size_t i = 0; i < N && n == 0; ++i)
        for (std::size_t j = 0; j < N; ++j) n = std::max(n, m(i, j).nvars());
    LMatrix a(m);
    LMatrix e = lidentity(N, n);
    std::vector<bool> row_used(N, false), col_used(N, false);
    std::vector<std::size_t> pivot_col(N);
    for (std::size_t step = 0; step < N; ++step) {
        std::size_t pr = N, pc = N, best = 0;
        for (std::size_t c = 0; c < N; ++c) {
            if (col_used[c]) continue;
            for (std::size_t r = 0; r < N; ++r) {
                if (row_used[r] || !a(r, c).is_monomial()) continue;
                std::size_t weight = 0;
                for (std::size_t j = 0; j < N; ++j) weight += a(r, j).size();
                if (pr == N || weight < best) {
                    pr = r;
                    pc = c;
                    best = weight;
                }
            }
            if (pr != N) break;
        }
        if (pr == N) throw std::domain_error("inverse: no unit pivot available");
        row_used[pr] = col_used[pc] = true;
        pivot_col[pr] = pc;
        LaurentPoly inv = a(pr, pc).unit_inverse();
        for (std::size_t j = 0; j < N; ++j) {
            if (!a(pr, j).is_zero()) a(pr, j) = a(pr, j) * inv;
            if (!e(pr, j).is_zero()) e(pr, j) = e(pr, j) * inv;
        }
        for (std::size_t r = 0; r < N; ++r) {
            if (r == pr || a(r, pc).is_zero()) continue;
            LaurentPoly f = a(r, pc);
            for (std::size_t j = 0; j < N; ++j) {
                if (!a(pr, j).is_zero()) a(r, j) -= f * a(pr, j);
                if (!e(pr, j).is_zero()) e(r, j) -= f * e(pr, j);
            }
        }
    }
    LMatrix inv(N, N, LaurentPoly(n));
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t j = 0; j < N; ++j) inv(pivot_col[r], j) = e(r, j);
    inv.row_labels = m.col_labels;
    inv.col_labels = m.row_labels;
    return inv;
}

// ------------------------------------------------------------ Magnus and series

namespace {

// (1 - x_i)^e, expanded as a power series when e < 0.
Poly magnus_factor(int n, int i, int e, int trunc) {
    Poly f(n, trunc);
    int top = e >= 0 ? (trunc == Poly::kUnbounded ? e : std::min(e, trunc)) : trunc;
    for (int j = 0; j <= top; ++j) {
        Exponent x(n, 0);
        x[i] = j;
        long long c = e >= 0 ? binomial(e, j) * (j % 2 ? -1 : 1) : binomial(-e + j - 1, j);
        f.add_term(x, Rational(static_cast<long>(c)));
    }
    return f;
}

Poly magnus_impl(const LaurentPoly& p, int trunc, bool series) {
    int n = p.nvars();
    Poly r(n, trunc);
    for (auto& [e, c] : p.terms()) {
        Poly t(n, c, trunc);
        for (int i = 0; i < n; ++i) {
            if (e[i] < 0 && !series)
                throw std::domain_error("magnus_substitute: negative exponent; call clear_units first");
            if (e[i] != 0) t = t * magnus_factor(n, i, e[i], trunc);
        }
        r += t;
    }
    return r;
}

PMatrix magnus_matrix(const LMatrix& m, int trunc, bool series) {
    int n = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) n = std::max(n, m(i, j).nvars());
    PMatrix r(m.rows(), m.cols(), Poly(n, trunc));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = magnus_impl(m(i, j), trunc, series);
    r.row_labels = m.row_labels;
    r.col_labels = m.col_labels;
    return r;
}

}  // namespace

Poly magnus_substitute(const LaurentPoly& p, int trunc) { return magnus_impl(p, trunc, false); }

PMatrix magnus_substitute(const LMatrix& m, int trunc) { return magnus_matrix(m, trunc, false); }

Poly magnus_series(const LaurentPoly& p, int D) {
    if (D < 0) throw std::invalid_argument("magnus_series: truncation degree required");
    return magnus_impl(p, D, true);
}

PMatrix magnus_series(const LMatrix& m, int D) {
    if (D < 0) throw std::invalid_argument("magnus_series: truncation degree required");
    return magnus_matrix(m, D, true);
}

LMatrix clear_units(const LMatrix& m) {
    LMatrix r(m);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Exponent s;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const LaurentPoly& p = m(i, j);
            if (p.is_zero()) continue;
            Exponent lo = p.min_exponent();
            if (s.empty()) s.assign(lo.size(), 0);
            for (std::size_t k = 0; k < lo.size(); ++k) s[k] = std::max(s[k], -lo[k]);
        }
        if (s.empty()) continue;
        bool trivial = std::all_of(s.begin(), s.end(), [](int x) { return x == 0; });
        if (trivial) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).shift(s);
    }
    return r;
}

PMatrix truncated_inverse(const PMatrix& m, int D) {
    if (m.rows() != m.cols()) throw std::invalid_argument("truncated_inverse: matrix not square");
    std::size_t N = m.rows();
    int n = 0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) n = std::max(n, m(i, j).nvars());
    PMatrix nil(N, N, Poly(n, D));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            if (m(i, j).constant_term() != (i == j ? 1 : 0))
                throw std::domain_error("truncated_inverse: not unipotent at origin");
            Poly e = -m(i, j).truncated(D);
            if (i == j) e += Poly(n, 1, D);
            nil(i, j) = e;
        }
    PMatrix id = identity_matrix(N, Poly(n, D), Poly(n, 1, D));
    PMatrix r = id;
    for (int k = 0; k < D; ++k) r = id + nil * r;
    r.row_labels = m.col_labels;
    r.col_labels = m.row_labels;
    return r;
}

Poly truncated_inverse(const Poly& u, int D) {
    Rational c = u.constant_term();
    if (sgn(c) == 0) throw std::domain_error("truncated_inverse: not a unit");
    int n = u.nvars();
    Poly nil = Poly(n, 1, D) - u.truncated(D) * (1 / c);
    Poly r(n, 1, D);
    for (int k = 0; k < D; ++k) r = Poly(n, 1, D) + nil * r;
    return r * (1 / c);
}

// -------------------------------------------------------------------- parsing

namespace {

class ExprParser {
public:
    ExprParser(const std::string& s, int n, const std::string& var) : s_(s), n_(n), var_(var) {}

    LaurentPoly parse() {
        LaurentPoly r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
    int n_;
    std::string var_;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what +
                                    " in \"" + s_ + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Integer number() {
        skip();
        std::size_t st = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (st == pos_) fail("expected number");
        return Integer(s_.substr(st, pos_ - st));
    }
    int small_int() {
        bool neg = false;
        skip();
        if (eat('(')) {
            int v = small_int();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (eat('-')) neg = true;
        else eat('+');
        Integer z = number();
        if (!z.fits_sint_p()) fail("exponent too large");
        int v = static_cast<int>(z.get_si());
        return neg ? -v : v;
    }
    LaurentPoly expr() {
        LaurentPoly r(n_);
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        LaurentPoly t = term();
        r += neg ? -t : t;
        while (true) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                break;
        }
        return r;
    }
    LaurentPoly term() {
        LaurentPoly r = factor();
        while (eat('*')) r = r * factor();
        return r;
    }
    LaurentPoly factor() {
        LaurentPoly b = primary();
        if (eat('^')) {
            int k = small_int();
            LaurentPoly base = k < 0 ? b.unit_inverse() : b;
            LaurentPoly p(n_, 1);
            for (int i = 0; i < std::abs(k); ++i) p = p * base;
            return p;
        }
        return b;
    }
    LaurentPoly primary() {
        skip();
        if (eat('(')) {
            LaurentPoly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (eat('-')) return -factor();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            Integer a = number();
            Rational q(a);
            if (eat('/')) {
                Integer b = number();
                if (b == 0) fail("zero denominator");
                q = Rational(a, b);
                q.canonicalize();
            }
            return LaurentPoly(n_, q);
        }
        if (s_.compare(pos_, var_.size(), var_) == 0) {
            pos_ += var_.size();
            Integer idx = number();
            if (idx < 1 || idx > n_) fail("variable index out of range");
            return LaurentPoly::var(n_, static_cast<int>(idx.get_si()));
        }
        fail("expected number, variable or '('");
    }
};

}  // namespace

LaurentPoly parse_laurent(const std::string& text, int n, const std::string& var) {
    return ExprParser(text, n, var).parse();
}

Poly parse_poly(const std::string& text, int n, const std::string& var, int trunc) {
    LaurentPoly l = ExprParser(text, n, var).parse();
    Poly p(n, trunc);
    for (auto& [e, c] : l.terms()) p.add_term(e, c);
    return p;
}

Rational parse_rational(const std::string& text) {
    LaurentPoly l = ExprParser(text, 0, "\x01").parse();
    if (l.is_zero()) return 0;
    if (l.size() != 1) throw std::invalid_argument("not a rational number: " + text);
    return l.terms().begin()->second;
}

}  // namespace alexchen
