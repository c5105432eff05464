#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alexchen {

using Rational = mpq_class;
using Integer = mpz_class;
using Exponent = std::vector<int>;

// Graded order on exponent vectors: total degree first, then lex.
struct ExponentLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

int total_degree(const Exponent& e);

// Sparse Laurent polynomial in t_1..t_n with rational coefficients.
class LaurentPoly {
public:
    using TermMap = std::map<Exponent, Rational, ExponentLess>;

    LaurentPoly() = default;
    explicit LaurentPoly(int n) : n_(n) {}
    LaurentPoly(int n, const Rational& c);

    static LaurentPoly monomial(int n, Exponent e, const Rational& c = 1);
    // t_i^power, i is 1-based.
    static LaurentPoly var(int n, int i, int power = 1);
    static LaurentPoly one(int n) { return LaurentPoly(n, 1); }

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exponent& e, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Value at t = (1,...,1).
    Rational augmentation() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_polynomial() const;
    // Inverse of a single-term element.
    LaurentPoly unit_inverse() const;
    // Componentwise minimum exponent over all terms (zeros for the zero polynomial).
    Exponent min_exponent() const;
    LaurentPoly shift(const Exponent& e) const;
    // Ring map t_i -> images[i-1]; images must be units when exponents are negative.
    LaurentPoly substitute(const std::vector<LaurentPoly>& images) const;
    // Embed into more variables (appended) or relabel via map old index -> new index.
    LaurentPoly relabel(int new_n, const std::vector<int>& index_map) const;

    std::string str(const std::string& var = "t") const;

private:
    int n_ = 0;
    TermMap terms_;
    void adopt_n(const LaurentPoly& o);
};

// Polynomial in x_1..x_n; optional truncation degree D (terms of degree > D dropped).
class Poly {
public:
    using TermMap = std::map<Exponent, Rational, ExponentLess>;
    static constexpr int kUnbounded = -1;

    Poly() = default;
    explicit Poly(int n, int trunc = kUnbounded) : n_(n), trunc_(trunc) {}
    Poly(int n, const Rational& c, int trunc = kUnbounded);

    static Poly monomial(int n, Exponent e, const Rational& c = 1, int trunc = kUnbounded);
    static Poly var(int n, int i, int trunc = kUnbounded);

    int nvars() const { return n_; }
    int truncation() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exponent& e, const Rational& c);
    Poly truncated(int D) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);
    Poly operator-() const;
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Rational constant_term() const;
    // Lowest total degree present (-1 for zero).
    int order() const;
    int degree() const;
    // Homogeneous component of degree d.
    Poly graded_part(int d) const;

    std::string str(const std::string& var = "x") const;

private:
    int n_ = 0;
    int trunc_ = kUnbounded;
    TermMap terms_;
    void adopt(const Poly& o);
    void clip();
};

inline LaurentPoly zero_like(const LaurentPoly& p) { return LaurentPoly(p.nvars()); }
inline Poly zero_like(const Poly& p) { return Poly(p.nvars(), p.truncation()); }
inline Integer zero_like(const Integer&) { return 0; }
inline Rational zero_like(const Rational&) { return 0; }

inline bool is_zero_value(const LaurentPoly& p) { return p.is_zero(); }
inline bool is_zero_value(const Poly& p) { return p.is_zero(); }
inline bool is_zero_value(const Integer& z) { return sgn(z) == 0; }
inline bool is_zero_value(const Rational& q) { return sgn(q) == 0; }

// Dense matrix with optional row/column labels. Maps act on row vectors from the
// right: row i is the image of source basis vector i, so the matrix of g after f is F*G.
template <class T>
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(std::size_t r, std::size_t c, const T& zero = T())
        : rows_(r), cols_(c), data_(r * c, zero), zero_(zero) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const T& zero() const { return zero_; }

    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

    RingMatrix transpose() const {
        RingMatrix t(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        t.row_labels = col_labels;
        t.col_labels = row_labels;
        return t;
    }

    bool operator==(const RingMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!(data_[k] == o.data_[k])) return false;
        return true;
    }
    bool operator!=(const RingMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!is_zero_value(x)) return false;
        return true;
    }

    RingMatrix row_block(const std::vector<std::size_t>& idx) const {
        RingMatrix r(idx.size(), cols_, zero_);
        for (std::size_t a = 0; a < idx.size(); ++a) {
            for (std::size_t j = 0; j < cols_; ++j) r(a, j) = (*this)(idx[a], j);
            if (!row_labels.empty()) r.row_labels.push_back(row_labels[idx[a]]);
        }
        r.col_labels = col_labels;
        return r;
    }
    RingMatrix col_block(const std::vector<std::size_t>& idx) const {
        RingMatrix r(rows_, idx.size(), zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t b = 0; b < idx.size(); ++b) r(i, b) = (*this)(i, idx[b]);
        r.row_labels = row_labels;
        for (auto b : idx)
            if (!col_labels.empty()) r.col_labels.push_back(col_labels[b]);
        return r;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
    T zero_{};
};

template <class T>
RingMatrix<T> operator*(const RingMatrix<T>& a, const RingMatrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    RingMatrix<T> c(a.rows(), b.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& x = a(i, k);
            if (is_zero_value(x)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const T& y = b(k, j);
                if (is_zero_value(y)) continue;
                c(i, j) += x * y;
            }
        }
    c.row_labels = a.row_labels;
    c.col_labels = b.col_labels;
    return c;
}

template <class T>
RingMatrix<T> operator+(RingMatrix<T> a, const RingMatrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
    return a;
}

template <class T>
RingMatrix<T> operator-(RingMatrix<T> a, const RingMatrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
    return a;
}

template <class T>
RingMatrix<T> identity_matrix(std::size_t n, const T& zero, const T& one) {
    RingMatrix<T> m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
}

// Stack b below a.
template <class T>
RingMatrix<T> vstack(const RingMatrix<T>& a, const RingMatrix<T>& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    RingMatrix<T> r(a.rows() + b.rows(), a.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
    r.col_labels = a.col_labels.empty() ? b.col_labels : a.col_labels;
    if (!a.row_labels.empty() || !b.row_labels.empty()) {
        auto la = a.row_labels, lb = b.row_labels;
        la.resize(a.rows());
        lb.resize(b.rows());
        r.row_labels = la;
        r.row_labels.insert(r.row_labels.end(), lb.begin(), lb.end());
    }
    return r;
}

using LMatrix = RingMatrix<LaurentPoly>;
using PMatrix = RingMatrix<Poly>;
using IntMatrix = RingMatrix<Integer>;
using QMatrix = RingMatrix<Rational>;

LMatrix lidentity(std::size_t size, int n);
// Entrywise value at t = 1 (entries must augment to integers).
IntMatrix augment(const LMatrix& m);
LMatrix lsubstitute(const LMatrix& m, const std::vector<LaurentPoly>& images);

// Inverse over Λ by Gauss-Jordan with single-term pivots only.
LMatrix unit_pivot_inverse(const LMatrix& m);

// t_i -> 1 - x_i, exact unless trunc >= 0.
PMatrix magnus_substitute(const LMatrix& m, int trunc = Poly::kUnbounded);
Poly magnus_substitute(const LaurentPoly& p, int trunc = Poly::kUnbounded);
// Same substitution in the completed ring: t_i^-1 -> sum of x_i^j, modulo m^{D+1}.
PMatrix magnus_series(const LMatrix& m, int D);
Poly magnus_series(const LaurentPoly& p, int D);
// Scale each row by the least monomial that makes every entry polynomial.
LMatrix clear_units(const LMatrix& m);
// Inverse modulo m^{D+1} of a matrix congruent to the identity modulo m.
PMatrix truncated_inverse(const PMatrix& m, int D);
// Inverse of a power series with nonzero constant term, modulo m^{D+1}.
Poly truncated_inverse(const Poly& u, int D);

// Parsing of polynomial expressions such as "t1^2*t2^-1 - 3/2*t3 + 1".
LaurentPoly parse_laurent(const std::string& text, int n, const std::string& var = "t");
Poly parse_poly(const std::string& text, int n, const std::string& var = "x", int trunc = Poly::kUnbounded);
Rational parse_rational(const std::string& text);

long long binomial(long long n, long long k);

}  // namespace alexchen
