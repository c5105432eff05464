#include "alexchen/geomingest.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace alexchen {

namespace {

std::string q_str(const Rational& q) { return q.get_str(); }

bool proportional3(const Rational (&a)[3], const Rational (&b)[3]) {
    return a[0] * b[1] == a[1] * b[0] && a[0] * b[2] == a[2] * b[0] && a[1] * b[2] == a[2] * b[1];
}

Rational det3(const Rational (&r0)[3], const Rational (&r1)[3], const Rational (&r2)[3]) {
    return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
           r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

// Line as v = m·u + k in a frame.
struct FrameLine {
    Rational m, k;
};

std::vector<FrameLine> in_frame(const AffineLineArrangement& a, const Frame& f) {
    Rational det = f.det();
    if (det == 0) throw std::invalid_argument("frame " + f.str() + " is singular");
    std::vector<FrameLine> out;
    for (int i = 0; i < a.n(); ++i) {
        const Line& l = a.lines[i];
        // (a, b) M^-1 = (A, B); the line reads A u + B v = c.
        Rational A = (l.a * f.s - l.b * f.r) / det;
        Rational B = (l.b * f.p - l.a * f.q) / det;
        if (B == 0) throw std::invalid_argument("line " + std::to_string(i + 1) + " is vertical in frame " + f.str());
        out.push_back({-A / B, l.c / B});
    }
    return out;
}

struct FrameVertex {
    Rational u, v;
    Subset lines;  // input labels
};

std::vector<FrameVertex> frame_vertices(const std::vector<FrameLine>& fl) {
    std::map<std::pair<Rational, Rational>, std::set<int>> pts;
    for (std::size_t i = 0; i < fl.size(); ++i)
        for (std::size_t j = i + 1; j < fl.size(); ++j) {
            if (fl[i].m == fl[j].m) continue;
            Rational u = (fl[j].k - fl[i].k) / (fl[i].m - fl[j].m);
            Rational v = fl[i].m * u + fl[i].k;
            auto& s = pts[{u, v}];
            s.insert(static_cast<int>(i) + 1);
            s.insert(static_cast<int>(j) + 1);
        }
    std::vector<FrameVertex> out;
    for (auto& [pt, s] : pts) out.push_back({pt.first, pt.second, Subset(s.begin(), s.end())});
    return out;
}

std::vector<Subset> sorted_sets(std::vector<Subset> sets) {
    std::sort(sets.begin(), sets.end());
    return sets;
}

}  // namespace

// ---------------------------------------------------------------- arrangements

void AffineLineArrangement::validate() const {
    for (int i = 0; i < n(); ++i) {
        if (lines[i].a == 0 && lines[i].b == 0)
            throw std::invalid_argument("line " + std::to_string(i + 1) + " has no x or y term");
        for (int j = 0; j < i; ++j) {
            Rational p[3] = {lines[i].a, lines[i].b, lines[i].c}, q[3] = {lines[j].a, lines[j].b, lines[j].c};
            if (proportional3(p, q))
                throw std::invalid_argument("lines " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                            " coincide");
        }
    }
}

std::string AffineLineArrangement::str() const {
    std::string s;
    for (int i = 0; i < n(); ++i)
        s += "H" + std::to_string(i + 1) + ": " + q_str(lines[i].a) + " x + " + q_str(lines[i].b) +
             " y = " + q_str(lines[i].c) + "\n";
    return s;
}

void CentralArrangement3::validate() const {
    for (int i = 0; i < n(); ++i) {
        if (planes[i].a == 0 && planes[i].b == 0 && planes[i].c == 0)
            throw std::invalid_argument("plane " + std::to_string(i + 1) + " is zero");
        for (int j = 0; j < i; ++j) {
            Rational p[3] = {planes[i].a, planes[i].b, planes[i].c}, q[3] = {planes[j].a, planes[j].b, planes[j].c};
            if (proportional3(p, q))
                throw std::invalid_argument("planes " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                            " coincide");
        }
    }
}

std::string CentralArrangement3::str() const {
    std::string s;
    for (int i = 0; i < n(); ++i)
        s += "H" + std::to_string(i + 1) + ": " + q_str(planes[i].a) + " x + " + q_str(planes[i].b) + " y + " +
             q_str(planes[i].c) + " z = 0\n";
    return s;
}

std::string Frame::str() const {
    return "u = " + q_str(p) + " x + " + q_str(q) + " y, v = " + q_str(r) + " x + " + q_str(s) + " y";
}

ArrangementFile ArrangementFile::parse(const std::string& text) {
    ArrangementFile f;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        try {
            if (tok[0] == "central") {
                if (tok.size() != 1) throw std::invalid_argument("'central' takes no arguments");
                if (!f.affine.lines.empty() || !f.planes.planes.empty())
                    throw std::invalid_argument("'central' must precede the hyperplanes");
                f.central = true;
            } else if (tok[0] == "frame") {
                if (tok.size() != 5) throw std::invalid_argument("'frame' needs p q r s");
                f.frame = Frame{parse_rational(tok[1]), parse_rational(tok[2]), parse_rational(tok[3]),
                                parse_rational(tok[4])};
            } else {
                if (tok.size() != 3) throw std::invalid_argument("expected three rationals a b c");
                Rational a = parse_rational(tok[0]), b = parse_rational(tok[1]), c = parse_rational(tok[2]);
                if (f.central)
                    f.planes.planes.push_back({a, b, c});
                else
                    f.affine.lines.push_back({a, b, c});
            }
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("arrangement line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (f.central) {
        if (f.planes.n() == 0) throw std::invalid_argument("arrangement file has no planes");
        f.planes.validate();
    } else {
        if (f.affine.n() == 0) throw std::invalid_argument("arrangement file has no lines");
        f.affine.validate();
    }
    return f;
}

AffineLineArrangement decone(const CentralArrangement3& c, int which) {
    if (which < 1 || which > c.n())
        throw std::invalid_argument("decone: plane " + std::to_string(which) + " not in the arrangement");
    c.validate();
    const Plane& h = c.planes[which - 1];
    Rational hv[3] = {h.a, h.b, h.c};
    Rational e[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    // Coordinates X = f1, Y = f2, Z = h with f1, f2 coordinate functions.
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    int f1 = -1, f2 = -1;
    for (auto& pr : pairs)
        if (det3(e[pr[0]], e[pr[1]], hv) != 0) {
            f1 = pr[0];
            f2 = pr[1];
            break;
        }
    Rational D = det3(e[f1], e[f2], hv);
    AffineLineArrangement a;
    for (int i = 0; i < c.n(); ++i) {
        if (i == which - 1) continue;
        Rational l[3] = {c.planes[i].a, c.planes[i].b, c.planes[i].c};
        // Cramer for l = α f1 + β f2 + γ h.
        Rational alpha = det3(l, e[f2], hv) / D;
        Rational beta = det3(e[f1], l, hv) / D;
        Rational gamma = det3(e[f1], e[f2], l) / D;
        a.lines.push_back({alpha, beta, -gamma});
    }
    a.validate();
    return a;
}

// ------------------------------------------------------------------- frames

FrameCertificate certify_frame(const AffineLineArrangement& a, const Frame& f) {
    auto fl = in_frame(a, f);
    auto verts = frame_vertices(fl);
    std::sort(verts.begin(), verts.end(), [](const FrameVertex& x, const FrameVertex& y) { return x.u < y.u; });
    FrameCertificate cert;
    cert.frame = f;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i > 0 && verts[i].u == verts[i - 1].u)
            throw std::invalid_argument("frame " + f.str() + " is not generic: vertices " +
                                        subset_str(verts[i - 1].lines) + " and " + subset_str(verts[i].lines) +
                                        " share projection " + q_str(verts[i].u));
        cert.projections.push_back(verts[i].u);
    }
    return cert;
}

FrameCertificate generic_frame(const AffineLineArrangement& a) {
    a.validate();
    std::set<Rational> tried;
    for (long h = 1;; ++h) {
        for (long den = 1; den <= h; ++den)
            for (long num = 0; num <= h; ++num) {
                if (std::gcd(num, den) != 1 && !(num == 0 && den == 1)) continue;
                for (int sign : {1, -1}) {
                    Rational q(num * sign, den);
                    q.canonicalize();
                    if (!tried.insert(q).second) continue;
                    try {
                        return certify_frame(a, Frame::shear(q));
                    } catch (const std::invalid_argument&) {
                    }
                }
            }
    }
}

// ------------------------------------------------------------------- wiring

bool WiringDiagram::identity_labels() const {
    for (int w = 0; w < n; ++w)
        if (wire_to_line[w] != w + 1) return false;
    return true;
}

std::vector<Subset> WiringDiagram::vertex_sets() const {
    std::vector<Subset> out;
    for (auto& e : events) out.push_back(e.V);
    return out;
}

std::string WiringDiagram::str() const {
    std::string s;
    if (!identity_labels()) {
        s += "wire -> line:";
        for (int w = 0; w < n; ++w) s += " " + std::to_string(w + 1) + "->" + std::to_string(wire_to_line[w]);
        s += "\n";
    }
    for (std::size_t k = 0; k < events.size(); ++k) {
        auto& e = events[k];
        s += "v" + std::to_string(k + 1) + " V=" + subset_str(e.V) + " U=" + subset_str(e.U) +
             " J=" + subset_str(e.J) + "\n";
    }
    return s;
}

WiringDiagram wiring_diagram(const AffineLineArrangement& a, const FrameCertificate& cert) {
    FrameCertificate check = certify_frame(a, cert.frame);
    if (check.projections != cert.projections)
        throw std::invalid_argument("wiring: certificate does not match the arrangement");
    auto fl = in_frame(a, cert.frame);
    int n = a.n();
    WiringDiagram w;
    w.n = n;
    // Bottom to top as u -> -infinity: larger slope lies lower.
    w.wire_to_line.resize(n);
    std::iota(w.wire_to_line.begin(), w.wire_to_line.end(), 1);
    std::sort(w.wire_to_line.begin(), w.wire_to_line.end(), [&](int x, int y) {
        const FrameLine &p = fl[x - 1], &q = fl[y - 1];
        if (p.m != q.m) return p.m > q.m;
        return p.k < q.k;
    });
    std::vector<int> line_to_wire(n + 1);
    for (int i = 0; i < n; ++i) line_to_wire[w.wire_to_line[i]] = i + 1;

    auto verts = frame_vertices(fl);
    std::sort(verts.begin(), verts.end(), [](const FrameVertex& x, const FrameVertex& y) { return x.u < y.u; });
    for (auto& vx : verts) {
        WiringEvent e;
        e.u = vx.u;
        for (int l : vx.lines) e.V.push_back(line_to_wire[l]);
        std::sort(e.V.begin(), e.V.end());
        for (int l = 1; l <= n; ++l) {
            if (std::binary_search(vx.lines.begin(), vx.lines.end(), l)) continue;
            if (fl[l - 1].m * vx.u + fl[l - 1].k > vx.v) e.U.push_back(line_to_wire[l]);
        }
        std::sort(e.U.begin(), e.U.end());
        for (int j : e.U)
            if (j > e.V.front() && j < e.V.back()) e.J.push_back(j);
        w.events.push_back(std::move(e));
    }
    return w;
}

std::vector<ConjugatedTwist> monodromy_real(const WiringDiagram& w) {
    std::vector<ConjugatedTwist> out;
    for (auto& e : w.events) {
        BraidWord delta(w.n);
        for (int i : e.V)
            for (int j : e.J)
                if (j < i) delta = delta * BraidWord::generator(w.n, j, i);
        out.push_back({e.V, delta});
    }
    return out;
}

std::vector<RealVertex> real_vertices(const WiringDiagram& w) {
    std::vector<RealVertex> out;
    for (auto& e : w.events) out.push_back({e.V, e.J});
    return out;
}

// ------------------------------------------------------------------ lattices

std::vector<Subset> affine_vertex_sets(const AffineLineArrangement& a) {
    a.validate();
    std::map<std::pair<Rational, Rational>, std::set<int>> pts;
    for (int i = 0; i < a.n(); ++i)
        for (int j = i + 1; j < a.n(); ++j) {
            const Line &p = a.lines[i], &q = a.lines[j];
            Rational det = p.a * q.b - p.b * q.a;
            if (det == 0) continue;
            Rational x = (p.c * q.b - p.b * q.c) / det;
            Rational y = (p.a * q.c - p.c * q.a) / det;
            auto& s = pts[{x, y}];
            s.insert(i + 1);
            s.insert(j + 1);
        }
    std::vector<Subset> sets;
    for (auto& [pt, s] : pts) sets.emplace_back(s.begin(), s.end());
    return sorted_sets(std::move(sets));
}

Lattice2 lattice2(const AffineLineArrangement& a) {
    a.validate();
    for (int i = 0; i < a.n(); ++i)
        for (int j = i + 1; j < a.n(); ++j)
            if (a.lines[i].a * a.lines[j].b == a.lines[i].b * a.lines[j].a)
                throw std::invalid_argument("not transverse to infinity: lines " + std::to_string(i + 1) + " and " +
                                            std::to_string(j + 1) + " are parallel");
    return Lattice2::make(a.n(), affine_vertex_sets(a));
}

Lattice2 lattice2(const CentralArrangement3& c) {
    c.validate();
    int n = c.n();
    std::vector<std::vector<bool>> done(n, std::vector<bool>(n, false));
    std::vector<Subset> sets;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (done[i][j]) continue;
            Rational ni[3] = {c.planes[i].a, c.planes[i].b, c.planes[i].c};
            Rational nj[3] = {c.planes[j].a, c.planes[j].b, c.planes[j].c};
            Subset S;
            for (int k = 0; k < n; ++k) {
                Rational nk[3] = {c.planes[k].a, c.planes[k].b, c.planes[k].c};
                if (det3(ni, nj, nk) == 0) S.push_back(k + 1);
            }
            for (std::size_t x = 0; x < S.size(); ++x)
                for (std::size_t y = x + 1; y < S.size(); ++y) done[S[x] - 1][S[y] - 1] = true;
            sets.push_back(std::move(S));
        }
    return Lattice2::make(n, sorted_sets(std::move(sets)));
}

}  // namespace alexchen
