#pragma once

#include "alexchen/exactring.hpp"

#include <map>
#include <string>
#include <vector>

namespace alexchen {

// Increasing list of 1-based indices.
using Subset = std::vector<int>;
// Element of C_k in the fixed wedge basis.
using ChainVec = std::vector<LaurentPoly>;

std::string subset_str(const Subset& s);  // "{2,4}"
std::string wedge_label(const Subset& s);  // "e{2,4}"
Subset parse_subset(const std::string& text);

// Sorts indices, returning the permutation sign (0 on a repeated index).
int sort_with_sign(std::vector<int>& idx);

// Basis e_J of C_k for increasing k-subsets J of [n], lexicographic.
class WedgeBasis {
public:
    WedgeBasis(int n, int k);
    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t size() const { return subsets_.size(); }
    const Subset& operator[](std::size_t i) const { return subsets_[i]; }
    const std::vector<Subset>& subsets() const { return subsets_; }
    // Position of J; -1 if absent.
    long index(const Subset& J) const;
    std::vector<std::string> labels() const;
    // Basis positions satisfying a predicate on J.
    template <class Pred>
    std::vector<std::size_t> filter(Pred p) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < subsets_.size(); ++i)
            if (p(subsets_[i])) out.push_back(i);
        return out;
    }

private:
    int n_, k_;
    std::vector<Subset> subsets_;
    std::map<Subset, std::size_t> index_;
};

bool is_subset_of(const Subset& a, const Subset& b);
std::size_t intersection_size(const Subset& a, const Subset& b);

// d_k : C_k -> C_{k-1}.
LMatrix differential(int n, int k);

// ∇_V = Σ_{i∈V} t_{V^i} e_i.
ChainVec nabla_V(const Subset& V, int n);
ChainVec basis_vector(int n, int k, const Subset& J);
ChainVec zero_chain(int n, int k);

// Wedge of a ∈ C_p with b ∈ C_q.
ChainVec wedge(const ChainVec& a, int p, const ChainVec& b, int q, int n);

// Row vector times matrix.
ChainVec apply(const ChainVec& v, const LMatrix& m);

// Pieces of C_2 attached to a vertex set V (with V' = V minus its minimum).
std::vector<std::size_t> c2_prime(const Subset& V, int n);     // e_{minV}∧e_i, i∈V'
std::vector<std::size_t> c2_of(const Subset& V, int n);        // e_J, J⊆V
// Basis of C2(V')∧C_{k-2} inside C_k: e_J with |J∩V'| ≥ 2.
std::vector<std::size_t> local_block(const Subset& Vprime, int n, int k);

// Labels e{K}^e{L} used for C2(V')∧C_{k-2} coordinates.
std::string local_label(const Subset& J, const Subset& Vprime);

}  // namespace alexchen
