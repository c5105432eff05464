#include "alexchen/localcc.hpp"

#include "alexchen/braidrep.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace alexchen {

// ------------------------------------------------------------------ Lattice2

Lattice2 Lattice2::make(int n, std::vector<Subset> sets, bool complete_pairs) {
    if (n < 1) throw std::invalid_argument("lattice: need at least one hyperplane");
    std::set<std::pair<int, int>> seen;
    for (auto& V : sets) {
        std::sort(V.begin(), V.end());
        if (V.size() < 2) throw std::invalid_argument("lattice: vertex set " + subset_str(V) + " has fewer than 2 elements");
        if (V.front() < 1 || V.back() > n) throw std::invalid_argument("lattice: vertex set " + subset_str(V) + " out of range");
        if (std::adjacent_find(V.begin(), V.end()) != V.end())
            throw std::invalid_argument("lattice: repeated index in " + subset_str(V));
        for (std::size_t a = 0; a < V.size(); ++a)
            for (std::size_t b = a + 1; b < V.size(); ++b)
                if (!seen.insert({V[a], V[b]}).second)
                    throw std::invalid_argument("not an arrangement lattice: pair {" + std::to_string(V[a]) + "," +
                                                std::to_string(V[b]) + "} lies in two vertex sets");
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!seen.count({i, j})) {
                if (!complete_pairs)
                    throw std::invalid_argument("not an arrangement lattice: pair {" + std::to_string(i) + "," +
                                                std::to_string(j) + "} lies in no vertex set");
                sets.push_back({i, j});
            }
    Lattice2 l;
    l.n = n;
    l.sets = std::move(sets);
    return l;
}

Lattice2 Lattice2::parse(const std::string& text, bool complete_pairs) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0, n = -1;
    std::vector<Subset> sets;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            if (n < 0) {
                std::istringstream ls(line);
                std::string tok;
                ls >> tok;
                if (tok == "n") ls >> tok;
                n = std::stoi(tok);
                continue;
            }
            std::size_t pos = 0;
            while ((pos = line.find('{', pos)) != std::string::npos) {
                auto close = line.find('}', pos);
                if (close == std::string::npos) throw std::invalid_argument("unterminated '{'");
                sets.push_back(parse_subset(line.substr(pos, close - pos + 1)));
                pos = close + 1;
            }
        } catch (const std::exception& e) {
            throw std::invalid_argument("lattice line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (n < 0) throw std::invalid_argument("lattice: missing hyperplane count");
    return make(n, std::move(sets), complete_pairs);
}

std::string Lattice2::to_text() const {
    std::string s = std::to_string(n) + "\n";
    for (auto& V : sets) s += subset_str(V) + "\n";
    return s;
}

long long Lattice2::b2() const {
    long long b = 0;
    for (auto& V : sets) b += static_cast<long long>(V.size()) - 1;
    return b;
}

std::map<int, int> Lattice2::multiplicities() const {
    std::map<int, int> c;
    for (auto& V : sets) ++c[static_cast<int>(V.size())];
    return c;
}

std::vector<Subset> Lattice2::multiple_points() const {
    std::vector<Subset> out;
    for (auto& V : sets)
        if (V.size() >= 3) out.push_back(V);
    return out;
}

Lattice2 cone_lattice(int n, const std::vector<Subset>& affine_sets) {
    std::vector<std::vector<bool>> covered(n + 1, std::vector<bool>(n + 1, false));
    for (auto& V : affine_sets)
        for (std::size_t a = 0; a < V.size(); ++a)
            for (std::size_t b = a + 1; b < V.size(); ++b) {
                if (V[a] < 1 || V[b] > n) throw std::invalid_argument("cone lattice: index out of range");
                covered[V[a]][V[b]] = covered[V[b]][V[a]] = true;
            }
    std::vector<Subset> sets = affine_sets;
    std::vector<bool> placed(n + 1, false);
    for (int i = 1; i <= n; ++i) {
        if (placed[i]) continue;
        Subset cls{i};
        for (int j = i + 1; j <= n; ++j)
            if (!covered[i][j]) cls.push_back(j);
        for (std::size_t a = 0; a < cls.size(); ++a)
            for (std::size_t b = a + 1; b < cls.size(); ++b)
                if (covered[cls[a]][cls[b]])
                    throw std::invalid_argument("cone lattice: lines " + std::to_string(cls[a]) + " and " +
                                                std::to_string(cls[b]) + " meet but are both parallel to line " +
                                                std::to_string(i));
        for (int x : cls) placed[x] = true;
        cls.push_back(n + 1);
        sets.push_back(cls);
    }
    return Lattice2::make(n + 1, std::move(sets));
}

Subset vprime(const Subset& V) { return Subset(V.begin() + 1, V.end()); }

// ------------------------------------------------------------ local pieces

Presentation local_presentation(const Subset& V, int n) {
    Subset Vp = vprime(V);
    auto rows = local_block(Vp, n, 3);
    auto cols = local_block(Vp, n, 2);
    LMatrix mu = mu_matrix(V, n), muinv = mu_matrix_inverse(V, n);
    LMatrix full = exterior_power(mu, 3).row_block(rows);
    if (n >= 3) full = full * differential(n, 3) * exterior_power(muinv, 2);
    LMatrix m = full.col_block(cols);
    m.row_labels.clear();
    m.col_labels.clear();
    WedgeBasis b3(n, 3), b2(n, 2);
    for (auto r : rows) m.row_labels.push_back(local_label(b3[r], Vp));
    for (auto c : cols) m.col_labels.push_back(local_label(b2[c], Vp));
    if (n < 3) m = LMatrix(0, cols.size(), LaurentPoly(n));
    return Presentation::over_laurent(m, n);
}

LMatrix local_chain_map(const Subset& V, int n, int k) {
    if (k < 2) throw std::invalid_argument("local_chain_map: need k >= 2");
    Subset Vp = vprime(V);
    auto cols = local_block(Vp, n, k);
    LMatrix m = exterior_power(mu_matrix_inverse(V, n), k).col_block(cols);
    m.col_labels.clear();
    WedgeBasis b(n, k);
    for (auto c : cols) m.col_labels.push_back(local_label(b[c], Vp));
    m.row_labels = b.labels();
    return m;
}

namespace {

IntMatrix hcat(const std::vector<IntMatrix>& blocks, std::size_t rows) {
    std::size_t cols = 0;
    for (auto& b : blocks) cols += b.cols();
    IntMatrix m(rows, cols, Integer(0));
    std::size_t off = 0;
    for (auto& b : blocks) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(i, off + j) = b(i, j);
        off += b.cols();
        m.col_labels.insert(m.col_labels.end(), b.col_labels.begin(), b.col_labels.end());
        if (m.row_labels.empty()) m.row_labels = b.row_labels;
    }
    return m;
}

IntMatrix psi_bar(const Lattice2& lat, int k) {
    std::vector<IntMatrix> blocks;
    for (auto& V : lat.sets) {
        if (V.size() < 3) continue;
        IntMatrix b = augment(local_chain_map(V, lat.n, k));
        for (auto& l : b.col_labels) l = subset_str(V) + ":" + l;
        blocks.push_back(std::move(b));
    }
    return hcat(blocks, static_cast<std::size_t>(binomial(lat.n, k)));
}

}  // namespace

IntMatrix psi3_bar(const Lattice2& lat) {
    IntMatrix m = psi_bar(lat, 3);
    if (m.row_labels.empty()) m.row_labels = WedgeBasis(lat.n, 3).labels();
    return m;
}

IntMatrix psi2_bar(const Lattice2& lat) {
    IntMatrix m = psi_bar(lat, 2);
    if (m.row_labels.empty()) m.row_labels = WedgeBasis(lat.n, 2).labels();
    return m;
}

// ------------------------------------------------------- integer linear algebra

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row_a += q * row_b
void add_row(IntMatrix& m, std::size_t a, std::size_t b, const Integer& q) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (sgn(m(b, j)) != 0) m(a, j) += q * m(b, j);
}
void add_col(IntMatrix& m, std::size_t a, std::size_t b, const Integer& q) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (sgn(m(i, b)) != 0) m(i, a) += q * m(i, b);
}

IntMatrix int_identity(std::size_t n) { return identity_matrix(n, Integer(0), Integer(1)); }

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
    std::size_t m = A.rows(), n = A.cols();
    SmithForm s;
    s.D = A;
    s.U = int_identity(m);
    s.V = int_identity(n);
    IntMatrix& D = s.D;
    std::size_t t = 0;
    while (t < std::min(m, n)) {
        // Smallest nonzero entry of the trailing block.
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (sgn(D(i, j)) != 0 && (!found || abs(D(i, j)) < abs(D(pi, pj)))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        swap_rows(D, t, pi);
        swap_rows(s.U, t, pi);
        swap_cols(D, t, pj);
        swap_cols(s.V, t, pj);
        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(D(i, t)) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
                add_row(D, i, t, -q);
                add_row(s.U, i, t, -q);
                if (sgn(D(i, t)) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(D(t, j)) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
                add_col(D, j, t, -q);
                add_col(s.V, j, t, -q);
                if (sgn(D(t, j)) != 0) clean = false;
            }
            if (!clean) {
                // Move the smallest remainder in row/column t to the pivot.
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (sgn(D(i, t)) != 0 && abs(D(i, t)) < abs(D(bi, bj))) {
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (sgn(D(t, j)) != 0 && abs(D(t, j)) < abs(D(bi, bj))) {
                        bi = t;
                        bj = j;
                    }
                swap_rows(D, t, bi);
                swap_rows(s.U, t, bi);
                swap_cols(D, t, bj);
                swap_cols(s.V, t, bj);
                continue;
            }
            // Divisibility of the trailing block by the pivot.
            bool divisible = true;
            for (std::size_t i = t + 1; i < m && divisible; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (sgn(D(i, j)) != 0 && !mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
                        add_row(D, t, i, 1);
                        add_row(s.U, t, i, 1);
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (sgn(D(t, t)) < 0) {
            for (std::size_t j = 0; j < n; ++j) D(t, j) = -D(t, j);
            for (std::size_t j = 0; j < m; ++j) s.U(t, j) = -s.U(t, j);
        }
        s.invariants.push_back(D(t, t));
        ++t;
    }
    s.rank = t;
    return s;
}

std::size_t rank_q(const IntMatrix& A) {
    std::vector<std::vector<Rational>> M(A.rows(), std::vector<Rational>(A.cols()));
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) M[i][j] = A(i, j);
    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
        std::size_t p = r;
        while (p < A.rows() && sgn(M[p][c]) == 0) ++p;
        if (p == A.rows()) continue;
        std::swap(M[p], M[r]);
        for (std::size_t i = r + 1; i < A.rows(); ++i) {
            if (sgn(M[i][c]) == 0) continue;
            Rational f = M[i][c] / M[r][c];
            for (std::size_t j = c; j < A.cols(); ++j) M[i][j] -= f * M[r][j];
        }
        ++r;
    }
    return r;
}

IntMatrix integer_inverse(const IntMatrix& A) {
    std::size_t n = A.rows();
    if (A.cols() != n) throw std::invalid_argument("integer_inverse: matrix not square");
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M[i][j] = A(i, j);
        M[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(M[p][c]) == 0) ++p;
        if (p == n) throw std::domain_error("integer_inverse: singular matrix");
        std::swap(M[p], M[c]);
        Rational inv = 1 / M[c][c];
        for (auto& x : M[c]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || sgn(M[i][c]) == 0) continue;
            Rational f = M[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) M[i][j] -= f * M[c][j];
        }
    }
    IntMatrix r(n, n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (M[i][n + j].get_den() != 1) throw std::domain_error("integer_inverse: matrix not unimodular");
            r(i, j) = M[i][n + j].get_num();
        }
    return r;
}

DecompositionVerdict decomposes(const Lattice2& lat) {
    IntMatrix psi = psi3_bar(lat);
    DecompositionVerdict v;
    v.labels = psi.col_labels;
    v.target_dim = psi.cols();
    SmithForm s = smith_normal_form(psi);
    v.rank = s.rank;
    v.coker_rank = psi.cols() - s.rank;
    for (auto& d : s.invariants)
        if (d != 1) v.torsion.push_back(d);
    v.surjective = v.coker_rank == 0 && v.torsion.empty();
    // Image = span of d_i * (row i of V^-1); free part of coker = remaining rows.
    IntMatrix vinv = integer_inverse(s.V);
    for (std::size_t i = s.rank; i < psi.cols(); ++i) {
        std::vector<Integer> row(psi.cols());
        for (std::size_t j = 0; j < psi.cols(); ++j) row[j] = vinv(i, j);
        v.coker_basis.push_back(std::move(row));
    }
    return v;
}

long long theta_cc(const Lattice2& lat, int k) {
    if (k < 2) throw std::invalid_argument("theta_cc: need k >= 2");
    long long t = 0;
    for (auto& V : lat.sets) t += (k - 1) * binomial(k + static_cast<long long>(V.size()) - 3, k);
    return t;
}

long long theta3(const Lattice2& lat) {
    IntMatrix psi = psi3_bar(lat);
    return static_cast<long long>(psi.cols() - rank_q(psi)) + theta_cc(lat, 3);
}

namespace {

IntMatrix stack_rows(const IntMatrix& A, std::size_t take, const std::vector<std::vector<Integer>>& vecs) {
    IntMatrix m(take + vecs.size(), A.cols(), Integer(0));
    for (std::size_t i = 0; i < take; ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) m(i, j) = A(i, j);
    for (std::size_t r = 0; r < vecs.size(); ++r) {
        if (vecs[r].size() != A.cols()) throw std::invalid_argument("cokernel check: vector length mismatch");
        for (std::size_t j = 0; j < A.cols(); ++j) m(take + r, j) = vecs[r][j];
    }
    return m;
}

}  // namespace

bool spans_cokernel_q(const IntMatrix& A, const std::vector<std::vector<Integer>>& vecs) {
    std::size_t r = rank_q(A);
    if (r + vecs.size() != A.cols()) return false;
    return rank_q(stack_rows(A, A.rows(), vecs)) == A.cols();
}

bool spans_cokernel(const IntMatrix& A, const std::vector<std::vector<Integer>>& vecs) {
    if (!spans_cokernel_q(A, vecs)) return false;
    // Saturation of the image: rows of V^-1 up to the rank.
    SmithForm s = smith_normal_form(A);
    IntMatrix sat = integer_inverse(s.V);
    SmithForm t = smith_normal_form(stack_rows(sat, s.rank, vecs));
    if (t.rank != A.cols()) return false;
    for (auto& d : t.invariants)
        if (d != 1) return false;
    return true;
}

std::vector<Integer> l1_vector(const Lattice2& lat, const std::vector<std::tuple<Subset, int, Integer>>& terms) {
    IntMatrix psi = psi3_bar(lat);
    std::vector<Integer> v(psi.cols(), Integer(0));
    for (auto& [K0, j, c] : terms) {
        Subset K = K0;
        std::sort(K.begin(), K.end());
        std::size_t off = 0;
        bool placed = false;
        for (auto& V : lat.sets) {
            if (V.size() < 3) continue;
            Subset Vp = vprime(V);
            auto block = local_block(Vp, lat.n, 3);
            if (K.size() == 2 && is_subset_of(K, Vp)) {
                std::vector<int> idx{K[0], K[1], j};
                int sign = sort_with_sign(idx);
                if (sign == 0) throw std::invalid_argument("l1_vector: e_K ^ e_j with j in K");
                WedgeBasis b3(lat.n, 3);
                auto pos = static_cast<std::size_t>(b3.index(idx));
                auto it = std::find(block.begin(), block.end(), pos);
                v[off + static_cast<std::size_t>(it - block.begin())] += sign * c;
                placed = true;
                break;
            }
            off += block.size();
        }
        if (!placed) throw std::invalid_argument("l1_vector: " + subset_str(K) + " lies in no V' of a multiple point");
    }
    return v;
}

IntMatrix omega3(const std::vector<int>& omega, int n_src, int n_dst) {
    if (static_cast<int>(omega.size()) != n_src) throw std::invalid_argument("omega: wrong length");
    WedgeBasis a(n_src, 3), b(n_dst, 3);
    IntMatrix m(a.size(), b.size(), Integer(0));
    for (std::size_t r = 0; r < a.size(); ++r) {
        std::vector<int> idx;
        for (int x : a[r]) idx.push_back(omega[x - 1]);
        int sign = sort_with_sign(idx);
        if (sign == 0) throw std::invalid_argument("omega: not injective");
        m(r, static_cast<std::size_t>(b.index(idx))) = sign;
    }
    m.row_labels = a.labels();
    m.col_labels = b.labels();
    return m;
}

IntMatrix transport_matrix(const std::vector<int>& omega, const Lattice2& src, const Lattice2& dst) {
    if (static_cast<int>(omega.size()) != src.n) throw std::invalid_argument("lattice_transport: omega has wrong length");
    std::set<int> image(omega.begin(), omega.end());
    if (image.size() != omega.size() || *image.begin() < 1 || *image.rbegin() > dst.n)
        throw std::invalid_argument("lattice_transport: omega is not injective into the target");
    // Every vertex set must land inside a vertex set, multiple points onto one.
    for (auto& V : src.sets) {
        Subset W;
        for (int x : V) W.push_back(omega[x - 1]);
        std::sort(W.begin(), W.end());
        bool ok = false;
        for (auto& U : dst.sets)
            if (V.size() >= 3 ? U == W : is_subset_of(W, U)) ok = true;
        if (!ok) throw std::invalid_argument("lattice_transport: omega is not a lattice map at " + subset_str(V));
    }
    IntMatrix om = omega3(omega, src.n, dst.n);
    std::vector<std::size_t> src_off, dst_off;
    std::size_t total_src = 0, total_dst = 0;
    std::vector<Subset> dst_multi = dst.multiple_points();
    for (auto& U : dst_multi) {
        dst_off.push_back(total_dst);
        total_dst += local_block(vprime(U), dst.n, 3).size();
    }
    std::size_t src_total = 0;
    for (auto& V : src.multiple_points()) src_total += local_block(vprime(V), src.n, 3).size();
    IntMatrix xi(src_total, total_dst, Integer(0));
    for (auto& V : src.multiple_points()) {
        Subset U;
        for (int x : V) U.push_back(omega[x - 1]);
        std::sort(U.begin(), U.end());
        std::size_t ui = static_cast<std::size_t>(std::find(dst_multi.begin(), dst_multi.end(), U) - dst_multi.begin());
        auto rows = local_block(vprime(V), src.n, 3);
        auto cols = local_block(vprime(U), dst.n, 3);
        IntMatrix muV = augment(exterior_power(mu_matrix(V, src.n), 3)).row_block(rows);
        IntMatrix muU = augment(exterior_power(mu_matrix_inverse(U, dst.n), 3)).col_block(cols);
        IntMatrix blk = muV * om * muU;
        for (std::size_t i = 0; i < blk.rows(); ++i)
            for (std::size_t j = 0; j < blk.cols(); ++j) xi(total_src + i, dst_off[ui] + j) = blk(i, j);
        total_src += rows.size();
    }
    xi.row_labels = psi3_bar(src).col_labels;
    xi.col_labels = psi3_bar(dst).col_labels;
    return xi;
}

std::vector<Integer> lattice_transport(const std::vector<int>& omega, const Lattice2& src, const Lattice2& dst,
                                       const std::vector<Integer>& v) {
    IntMatrix xi = transport_matrix(omega, src, dst);
    if (v.size() != xi.rows()) throw std::invalid_argument("lattice_transport: vector length mismatch");
    std::vector<Integer> out(xi.cols(), Integer(0));
    for (std::size_t i = 0; i < xi.rows(); ++i)
        if (sgn(v[i]) != 0)
            for (std::size_t j = 0; j < xi.cols(); ++j) out[j] += v[i] * xi(i, j);
    return out;
}

}  // namespace alexchen
