#pragma once

#include "alexchen/alexinv.hpp"
#include "alexchen/braidrep.hpp"
#include "alexchen/exactring.hpp"
#include "alexchen/localcc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace alexchen {

// a·x + b·y = c
struct Line {
    Rational a, b, c;
    bool operator==(const Line& o) const { return a == o.a && b == o.b && c == o.c; }
};

struct AffineLineArrangement {
    std::vector<Line> lines;  // labels 1..n
    int n() const { return static_cast<int>(lines.size()); }
    // Rejects zero lines and repeated lines (proportional equations).
    void validate() const;
    std::string str() const;
};

// a·x + b·y + c·z = 0
struct Plane {
    Rational a, b, c;
};

struct CentralArrangement3 {
    std::vector<Plane> planes;
    int n() const { return static_cast<int>(planes.size()); }
    void validate() const;
    std::string str() const;
};

// New coordinates u = p·x + q·y (sweep), v = r·x + s·y (fiber).
struct Frame {
    Rational p = 1, q = 0, r = 0, s = 1;
    static Frame shear(const Rational& q) { return Frame{1, q, 0, 1}; }
    Rational det() const { return p * s - q * r; }
    std::string str() const;
};

// Contents of an arrangement file: "a b c" per line, "central" switches to
// planes, optional "frame p q r s"; '#' starts a comment.
struct ArrangementFile {
    bool central = false;
    AffineLineArrangement affine;
    CentralArrangement3 planes;
    std::optional<Frame> frame;

    static ArrangementFile parse(const std::string& text);
};

// Chart {H_which = 1}; which is 1-based. The remaining planes keep their order.
AffineLineArrangement decone(const CentralArrangement3& c, int which);

struct FrameCertificate {
    Frame frame;
    std::vector<Rational> projections;  // sorted sweep values of the vertices
};

// Throws std::invalid_argument naming the offending line or vertex pair.
FrameCertificate certify_frame(const AffineLineArrangement& a, const Frame& f);
// First shear x -> x + q·y (q = 0, 1, -1, 2, -2, 1/2, -1/2, ...) that certifies.
FrameCertificate generic_frame(const AffineLineArrangement& a);

struct WiringEvent {
    Subset V;  // wire labels through the vertex
    Subset U;  // wires above the vertex
    Subset J;  // (V̄ \ V) ∩ U with V̄ = {min V, ..., max V}
    Rational u;
};

// Wires are numbered bottom to top at the start of the sweep; wire w is line
// wire_to_line[w-1] of the input.
struct WiringDiagram {
    int n = 0;
    std::vector<int> wire_to_line;
    std::vector<WiringEvent> events;

    bool identity_labels() const;
    std::vector<Subset> vertex_sets() const;
    std::string str() const;
};

WiringDiagram wiring_diagram(const AffineLineArrangement& a, const FrameCertificate& cert);

// A_V^δ with δ = ∏_{i ∈ V} ∏_{j ∈ J, j < i} A_{j,i}, in wire labels.
std::vector<ConjugatedTwist> monodromy_real(const WiringDiagram& w);
std::vector<RealVertex> real_vertices(const WiringDiagram& w);

// Vertex sets in input labels. Affine input must have no parallel lines.
Lattice2 lattice2(const AffineLineArrangement& a);
Lattice2 lattice2(const CentralArrangement3& c);
// Vertex sets of the affine arrangement; parallel pairs are left uncovered.
std::vector<Subset> affine_vertex_sets(const AffineLineArrangement& a);

}  // namespace alexchen
