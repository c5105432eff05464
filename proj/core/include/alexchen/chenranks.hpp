#pragma once

#include "alexchen/alexinv.hpp"
#include "alexchen/exactring.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace alexchen {

// Monomials of degree <= D in n variables, ordered by degree then lex, with
// exponents packed 4 bits per variable.
class MonomialTable {
public:
    MonomialTable(int n, int D);
    int nvars() const { return n_; }
    int max_degree() const { return D_; }
    std::size_t size() const { return packed_.size(); }
    std::size_t count(int d) const { return offset_[d + 1] - offset_[d]; }
    std::size_t offset(int d) const { return offset_[d]; }
    int degree(std::size_t id) const { return degree_[id]; }
    std::uint64_t packed(std::size_t id) const { return packed_[id]; }
    int exponent(std::size_t id, int var) const { return static_cast<int>((packed_[id] >> (4 * var)) & 15u); }
    // Id of m * x_var, or -1 past degree D.
    long times_var(std::size_t id, int var) const { return mul_[id * n_ + var]; }
    long id_of(std::uint64_t packed) const;
    long id_of(const Exponent& e) const;
    static bool divides(std::uint64_t a, std::uint64_t b, int n);
    static std::uint64_t lcm(std::uint64_t a, std::uint64_t b, int n);

private:
    int n_, D_;
    std::vector<std::uint64_t> packed_;
    std::vector<int> degree_;
    std::vector<std::size_t> offset_;
    std::vector<long> mul_;
    std::unordered_map<std::uint64_t, long> index_;
};

// Coordinates (position, monomial) of the truncated free module, ordered by
// degree, then position, then monomial. Smaller key = leading.
class KeySpace {
public:
    KeySpace(const MonomialTable& mons, std::size_t rank);
    std::size_t size() const { return total_; }
    std::size_t key(std::size_t pos, std::size_t mono) const;
    std::size_t position(std::size_t key) const { return pos_[key]; }
    std::size_t monomial(std::size_t key) const { return mono_[key]; }
    std::size_t rank() const { return rank_; }
    const MonomialTable& monomials() const { return mons_; }

private:
    const MonomialTable& mons_;
    std::size_t rank_, total_;
    std::vector<std::size_t> pos_, mono_;
};

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

// Truncated module element rows of a presentation over P / m^{D+1}.
std::vector<SparseVec> to_sparse_rows(const PMatrix& m, const KeySpace& keys);

struct GradedModuleBasis {
    int nvars = 0;
    int truncation = 0;
    std::size_t rank = 0;  // generators of the free module
    std::vector<SparseVec> elements;
    // Lead (position, exponent) of each element, same order.
    std::vector<std::pair<std::size_t, Exponent>> leads;
};

struct ChenProfile {
    int theta1 = 0;
    int K = 0;
    std::map<int, long long> theta;  // k -> θ_k, 2 <= k <= K
    // θ_k = a k + b for 4 <= k <= K, when observed.
    std::optional<std::pair<long long, long long>> linear_tail;
    std::string method;

    nlohmann::json to_json() const;
    bool same_ranks(const ChenProfile& o) const { return theta == o.theta; }
};

// Presentation over P/m^{D+1} after clearing units, Magnus substitution and
// elimination of generators killed by relations with a unit entry.
PMatrix completed_matrix(const Presentation& p, int D);
PMatrix eliminate_unit_pivots(const PMatrix& m, int D);

// Standard basis of the row module in the local degree order.
GradedModuleBasis tangent_cone(const PMatrix& m, int n, int D);
ChenProfile hilbert_theta(const GradedModuleBasis& basis, int K);

ChenProfile chen_ranks(const Presentation& p, int K);
// Same with an explicit truncation degree D >= K - 2.
ChenProfile chen_ranks(const Presentation& p, int K, int D);
enum class OracleField { Prime, Rational };

// Independent check: degree-wise linear algebra on the Magnus-substituted
// relations, without unit elimination or S-pairs. Prime works over GF(2^61-1).
ChenProfile chen_ranks_oracle(const Presentation& p, int K, OracleField field = OracleField::Prime);

void detect_linear_tail(ChenProfile& prof);

}  // namespace alexchen
