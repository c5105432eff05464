#include "alexchen/koszul.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace alexchen {

std::string subset_str(const Subset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

std::string wedge_label(const Subset& s) { return "e" + subset_str(s); }

Subset parse_subset(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != '{' && c != '}' && c != ' ' && c != '\t') t += (c == ',' ? ' ' : c);
    std::istringstream is(t);
    Subset s;
    int x;
    while (is >> x) s.push_back(x);
    if (!is.eof()) throw std::invalid_argument("bad subset: " + text);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument("repeated index in " + text);
    return s;
}

int sort_with_sign(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

WedgeBasis::WedgeBasis(int n, int k) : n_(n), k_(k) {
    if (k < 0 || n < 0) throw std::out_of_range("wedge basis: bad degree");
    if (k > n) return;
    Subset cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        index_.emplace(cur, subsets_.size());
        subsets_.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

long WedgeBasis::index(const Subset& J) const {
    auto it = index_.find(J);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::vector<std::string> WedgeBasis::labels() const {
    std::vector<std::string> out;
    for (auto& s : subsets_) out.push_back(wedge_label(s));
    return out;
}

bool is_subset_of(const Subset& a, const Subset& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::size_t intersection_size(const Subset& a, const Subset& b) {
    std::size_t c = 0;
    for (int x : a)
        if (std::binary_search(b.begin(), b.end(), x)) ++c;
    return c;
}

LMatrix differential(int n, int k) {
    if (k < 1 || k > n) throw std::out_of_range("differential: degree out of range");
    WedgeBasis src(n, k), dst(n, k - 1);
    LMatrix d(src.size(), dst.size(), LaurentPoly(n));
    for (std::size_t a = 0; a < src.size(); ++a) {
        const Subset& J = src[a];
        for (int r = 1; r <= k; ++r) {
            Subset rest;
            for (int q = 0; q < k; ++q)
                if (q != r - 1) rest.push_back(J[q]);
            LaurentPoly coef = LaurentPoly::var(n, J[r - 1]) - LaurentPoly::one(n);
            if ((k + r) % 2) coef = -coef;
            d(a, static_cast<std::size_t>(dst.index(rest))) += coef;
        }
    }
    d.row_labels = src.labels();
    d.col_labels = dst.labels();
    return d;
}

ChainVec zero_chain(int n, int k) { return ChainVec(static_cast<std::size_t>(binomial(n, k)), LaurentPoly(n)); }

ChainVec basis_vector(int n, int k, const Subset& J) {
    ChainVec v = zero_chain(n, k);
    WedgeBasis b(n, k);
    long i = b.index(J);
    if (i < 0) throw std::out_of_range("basis_vector: bad subset");
    v[i] = LaurentPoly::one(n);
    return v;
}

ChainVec nabla_V(const Subset& V, int n) {
    if (V.empty()) throw std::invalid_argument("nabla_V: empty vertex set");
    ChainVec v = zero_chain(n, 1);
    Exponent prefix(n, 0);
    for (int i : V) {
        v[i - 1] = LaurentPoly::monomial(n, prefix);
        prefix[i - 1] += 1;
    }
    return v;
}

ChainVec wedge(const ChainVec& a, int p, const ChainVec& b, int q, int n) {
    WedgeBasis ba(n, p), bb(n, q), bc(n, p + q);
    ChainVec out = zero_chain(n, p + q);
    for (std::size_t i = 0; i < ba.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < bb.size(); ++j) {
            if (b[j].is_zero()) continue;
            std::vector<int> idx(ba[i]);
            idx.insert(idx.end(), bb[j].begin(), bb[j].end());
            int s = sort_with_sign(idx);
            if (s == 0) continue;
            LaurentPoly c = a[i] * b[j];
            if (s < 0) c = -c;
            out[static_cast<std::size_t>(bc.index(idx))] += c;
        }
    }
    return out;
}

ChainVec apply(const ChainVec& v, const LMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("apply: size mismatch");
    int n = m.zero().nvars();
    ChainVec out(m.cols(), LaurentPoly(n));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) out[j] += v[i] * m(i, j);
    }
    return out;
}

std::vector<std::size_t> c2_prime(const Subset& V, int n) {
    WedgeBasis b(n, 2);
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < V.size(); ++i) out.push_back(static_cast<std::size_t>(b.index({V[0], V[i]})));
    return out;
}

std::vector<std::size_t> c2_of(const Subset& V, int n) {
    return WedgeBasis(n, 2).filter([&](const Subset& J) { return is_subset_of(J, V); });
}

std::vector<std::size_t> local_block(const Subset& Vprime, int n, int k) {
    return WedgeBasis(n, k).filter([&](const Subset& J) { return intersection_size(J, Vprime) >= 2; });
}

std::string local_label(const Subset& J, const Subset& Vprime) {
    Subset K, L;
    for (int x : J) {
        if (K.size() < 2 && std::binary_search(Vprime.begin(), Vprime.end(), x))
            K.push_back(x);
        else
            L.push_back(x);
    }
    std::vector<int> order(K);
    order.insert(order.end(), L.begin(), L.end());
    int s = sort_with_sign(order);
    std::string lab = (s < 0 ? "-" : "") + wedge_label(K);
    for (int x : L) lab += "^e" + std::to_string(x);
    return lab;
}

}  // namespace alexchen
