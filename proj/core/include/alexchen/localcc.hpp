#pragma once

#include "alexchen/alexinv.hpp"
#include "alexchen/exactring.hpp"
#include "alexchen/koszul.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace alexchen {

// Rank-two flats of an arrangement as vertex sets.
struct Lattice2 {
    int n = 0;
    std::vector<Subset> sets;

    // Sorts each set, validates the exact pair partition; with complete_pairs,
    // uncovered pairs are added as two-element sets first.
    static Lattice2 make(int n, std::vector<Subset> sets, bool complete_pairs = false);
    // Text: first line n, then one "{1,2,4}" per line; '#' comments.
    static Lattice2 parse(const std::string& text, bool complete_pairs = false);
    std::string to_text() const;

    long long b2() const;
    // c_r: number of vertex sets of size r.
    std::map<int, int> multiplicities() const;
    std::vector<Subset> multiple_points() const;  // |V| >= 3
};

// Lattice of the cone over an affine arrangement given by its vertex sets:
// uncovered pairs must form parallel classes P, which become P ∪ {n+1}.
Lattice2 cone_lattice(int n, const std::vector<Subset>& affine_sets);

Subset vprime(const Subset& V);

Presentation local_presentation(const Subset& V, int n);
// Ψ_{V,k}: C_k -> C_2(V') ∧ C_{k-2}; columns are the e_J with |J ∩ V'| >= 2.
LMatrix local_chain_map(const Subset& V, int n, int k);

// Ψ̄_3 and its column labels "V:e{..}" over the multiple points in lattice order.
IntMatrix psi3_bar(const Lattice2& lat);
// Ῡ_0 = Ψ̄_2 summed over vertex sets.
IntMatrix psi2_bar(const Lattice2& lat);

struct SmithForm {
    IntMatrix D, U, V;  // U * A * V = D, U and V unimodular
    std::size_t rank = 0;
    std::vector<Integer> invariants;  // nonzero diagonal entries
};
SmithForm smith_normal_form(const IntMatrix& A);
std::size_t rank_q(const IntMatrix& A);
IntMatrix integer_inverse(const IntMatrix& unimodular);

struct DecompositionVerdict {
    bool surjective = false;
    std::size_t rank = 0;
    std::size_t target_dim = 0;
    std::size_t coker_rank = 0;
    std::vector<Integer> torsion;                // invariant factors > 1
    std::vector<std::vector<Integer>> coker_basis;  // free part, in Ψ̄_3 column coordinates
    std::vector<std::string> labels;
};
DecompositionVerdict decomposes(const Lattice2& lat);

long long theta_cc(const Lattice2& lat, int k);
long long theta3(const Lattice2& lat);

// True when every row of `vecs` together with the rows of A spans the same
// lattice over Z as A plus a rank-|vecs| saturated complement, i.e. the images
// of vecs form a Z-basis of the free part of coker(A).
bool spans_cokernel(const IntMatrix& A, const std::vector<std::vector<Integer>>& vecs);
// Same question over Q.
bool spans_cokernel_q(const IntMatrix& A, const std::vector<std::vector<Integer>>& vecs);

// Coordinates of an element written as Σ c · e_K ∧ e_j inside the Ψ̄_3 target.
std::vector<Integer> l1_vector(const Lattice2& lat, const std::vector<std::tuple<Subset, int, Integer>>& terms);

// ξ̄ for an injective relabeling omega[i-1] = ω(i) with each multiple point of
// src sent onto a vertex set of dst. Rows: src L̄_1 coordinates; columns: dst.
IntMatrix transport_matrix(const std::vector<int>& omega, const Lattice2& src, const Lattice2& dst);
std::vector<Integer> lattice_transport(const std::vector<int>& omega, const Lattice2& src, const Lattice2& dst,
                                       const std::vector<Integer>& v);
// ω̄_3 : C̄_3(src) -> C̄_3(dst).
IntMatrix omega3(const std::vector<int>& omega, int n_src, int n_dst);

}  // namespace alexchen
