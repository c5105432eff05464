#pragma once

#include "alexchen/braidrep.hpp"
#include "alexchen/exactring.hpp"
#include "alexchen/koszul.hpp"

#include <string>
#include <vector>

namespace alexchen {

enum class RingTag { Laurent, Power };

// Module = cokernel of the matrix; rows are relations on the column generators.
// Laurent presentations live in `laurent`; truncated power-series ones in `power`.
struct Presentation {
    RingTag ring = RingTag::Laurent;
    int nvars = 0;
    int truncation = Poly::kUnbounded;
    LMatrix laurent;
    PMatrix power;

    static Presentation over_laurent(LMatrix m, int n);
    static Presentation over_power(PMatrix m, int n, int D);

    std::size_t generators() const;
    std::size_t relations() const;
    const std::vector<std::string>& generator_labels() const;
    const std::vector<std::string>& relation_labels() const;

    std::string to_text() const;
    static Presentation from_text(const std::string& text);
    bool operator==(const Presentation& o) const;
};

// Vertex of a real wiring diagram: its vertex set and the wires J above it
// strictly between min V and max V.
struct RealVertex {
    Subset V;
    Subset J;
};

// Φ_V on all of C_1 (n rows) and its restriction to C_1(V') (|V|-1 rows).
LMatrix phi_V_full(const Subset& V, int n);
LMatrix phi_V(const Subset& V, int n);
// Φ(γ_z)(e_i) = ∇^ab(z_i) ∧ e_i.
LMatrix phi_conj(const ConjTuple& z);

// Θ(δ)(e_i) = (1 - t_i) ∇_{J^i} + t_{J^i} e_i with J^i = {j ∈ J : j < i}.
ChainVec real_delta_row(const Subset& J, int i, int n);

Presentation alexander_matrix(const std::vector<ConjugatedTwist>& monodromy, int n);
Presentation presentation_general(const std::vector<ConjugatedTwist>& monodromy, int n);
Presentation presentation_real(const std::vector<RealVertex>& wiring, int n);
Presentation presentation_product(const Presentation& p1, const Presentation& p2);
Presentation presentation_cone(const Presentation& p);
Presentation presentation_pure_link(const std::vector<ConjTuple>& tuples);
// d_3 alone: the Alexander invariant of F_n.
Presentation presentation_free(int n);
Presentation presentation_completed_reduced(const std::vector<ConjugatedTwist>& monodromy, int n, int D);

// Positions in the C_2 basis of e_{min V} ∧ e_i, i ∈ V', over all V (K_0').
std::vector<std::size_t> k0_prime(const std::vector<Subset>& sets, int n);

}  // namespace alexchen
