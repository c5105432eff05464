#include "lifting.hpp"
#include "support.hpp"

#include "alexchen/chenranks.hpp"
#include "alexchen/geomingest.hpp"

#include <doctest.h>

#include <set>

using namespace alexchen;
using namespace alexchen::testing;

namespace {

std::multiset<Subset> as_multiset(std::vector<Subset> v) { return {v.begin(), v.end()}; }

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

ChenProfile geometric_ranks(const AffineLineArrangement& a, const FrameCertificate& cert, int K) {
    auto w = wiring_diagram(a, cert);
    return chen_ranks(presentation_real(real_vertices(w), a.n()), K);
}

// Sends affine label i to its central label, skipping the plane at infinity.
Subset lift_labels(const Subset& V, int removed) {
    Subset W;
    for (int x : V) W.push_back(x < removed ? x : x + 1);
    return W;
}

}  // namespace

TEST_CASE("arrangement files: syntax and errors name the line") {
    auto f = ArrangementFile::parse("# two lines\n1 0 0\n0 1 1/2\n");
    CHECK_FALSE(f.central);
    REQUIRE(f.affine.n() == 2);
    CHECK(f.affine.lines[1].c == Rational(1, 2));
    CHECK(error_of([] { ArrangementFile::parse("1 0 0\n1 2\n"); }).find("line 2") != std::string::npos);
    CHECK(error_of([] { ArrangementFile::parse("1 0 0\ncentral\n"); }).find("line 2") != std::string::npos);
    CHECK(error_of([] { ArrangementFile::parse("1 0 0\n2 0 0\n"); }).find("lines 1 and 2") != std::string::npos);
    CHECK_THROWS(ArrangementFile::parse("1 0 x\n"));
    CHECK_THROWS(ArrangementFile::parse("# nothing\n"));
    auto g = load_arrangement("diamond.arr");
    CHECK(g.central);
    CHECK(g.planes.n() == 7);
    REQUIRE(g.frame);
    CHECK(g.frame->det() == -5);
}

TEST_CASE("decone and lattices of the six-line arrangement") {
    auto f = load_arrangement("sixlines.arr");
    auto L = lattice2(f.planes);
    std::vector<Subset> expect{{1, 2, 6}, {1, 3, 5}, {1, 4}, {2, 3, 4}, {2, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}};
    CHECK(L.sets == expect);
    auto a = decone(f.planes, 3);
    CHECK(a.n() == 5);
    CHECK_THROWS(decone(f.planes, 7));
    // plane 3 is z: decone is the affine chart z = 1
    CHECK(a.lines[3].a == 1);
    CHECK(a.lines[3].b == 0);
    CHECK(a.lines[3].c == 1);
}

TEST_CASE("braid arrangement lattice") {
    auto L = lattice2(load_arrangement("braid_a4.arr").planes);
    CHECK(L.sets.size() == 7);
    CHECK(L.multiplicities().at(3) == 4);
    CHECK(L.multiplicities().at(2) == 3);
}

TEST_CASE("frames: identity for generic input, shear otherwise, errors name the culprit") {
    AffineLineArrangement two{{{1, 1, 0}, {1, -1, 0}}};
    auto cert = generic_frame(two);
    CHECK(cert.frame.q == 0);
    auto w = wiring_diagram(two, cert);
    REQUIRE(w.events.size() == 1);
    CHECK(w.events[0].V == Subset{1, 2});
    CHECK(monodromy_real(w)[0].delta.is_identity());
    // vertices (0,0) and (0,1) share x
    AffineLineArrangement deg{{{1, 1, 0}, {1, -1, 0}, {1, 1, 1}, {1, -1, -1}}};
    CHECK(error_of([&] { certify_frame(deg, Frame{}); }).find("share projection") != std::string::npos);
    auto c2 = generic_frame(deg);
    CHECK(c2.frame.q != 0);
    for (std::size_t i = 1; i < c2.projections.size(); ++i) CHECK(c2.projections[i - 1] < c2.projections[i]);
    AffineLineArrangement vert{{{1, 0, 0}, {0, 1, 0}}};
    CHECK(error_of([&] { certify_frame(vert, Frame{}); }).find("line 1 is vertical") != std::string::npos);
    CHECK_THROWS(certify_frame(two, Frame{1, 1, 1, 1}));
}

TEST_CASE("diamond wiring in the recorded frame") {
    auto f = load_arrangement("diamond.arr");
    auto a = decone(f.planes, 7);
    auto w = wiring_diagram(a, certify_frame(a, *f.frame));
    CHECK(w.identity_labels());
    std::vector<Subset> order{{3, 4, 5}, {1, 2, 5}, {1, 4}, {1, 3, 6}, {2, 4, 6}};
    CHECK(w.vertex_sets() == order);
    auto mono = monodromy_real(w);
    CHECK(mono[2].delta.str() == "A[3,4]");
    CHECK(mono[4].delta.str() == "A[3,4] A[3,6]");
    CHECK(mono[1].delta.str() == "A[3,5] A[4,5]");
    CHECK(mono[0].delta.is_identity());
    auto fixture = MonodromyFile::parse(read_fixture("diamond_wiring.mono"));
    for (std::size_t k = 0; k < mono.size(); ++k) CHECK(mono[k].str() == fixture.generators[k].str());
}

TEST_CASE("affine lattice refuses parallel lines; cone lattice absorbs them") {
    AffineLineArrangement par{{{1, 0, 0}, {1, 0, 1}, {0, 1, 0}}};
    CHECK(error_of([&] { lattice2(par); }).find("not transverse to infinity") != std::string::npos);
    auto c = cone_lattice(3, affine_vertex_sets(par));
    CHECK(as_multiset(c.sets) == std::multiset<Subset>{{1, 2, 4}, {1, 3}, {2, 3}, {3, 4}});
}

TEST_CASE("property: monodromy_real agrees with lifted half twists") {
    std::mt19937_64 rng(81);
    int cases = 0;
    while (cases < kPropertyCases) {
        auto c = random_central(rng, 6);
        if (c.n() < 4) continue;
        auto a = decone(c, uniform(rng, 1, c.n()));
        auto w = wiring_diagram(a, generic_frame(a));
        auto mono = monodromy_real(w);
        auto lifted = lifted_monodromy(w);
        REQUIRE(mono.size() == lifted.size());
        for (std::size_t k = 0; k < mono.size(); ++k) REQUIRE(lifted[k] == twist_images(mono[k], a.n()));
        ++cases;
    }
}

TEST_CASE("property: wiring vertex sets, decone and cone lattices reconstruct lattice2") {
    std::mt19937_64 rng(82);
    for (int cases = 0; cases < kPropertyCases;) {
        auto c = random_central(rng, 7);
        if (c.n() < 3) continue;
        int h = uniform(rng, 1, c.n());
        auto a = decone(c, h);
        auto aff = affine_vertex_sets(a);
        auto w = wiring_diagram(a, generic_frame(a));
        std::vector<Subset> wired;
        for (auto& V : w.vertex_sets()) {
            Subset W;
            for (int x : V) W.push_back(w.wire_to_line[x - 1]);
            std::sort(W.begin(), W.end());
            wired.push_back(W);
        }
        REQUIRE(as_multiset(wired) == as_multiset(aff));
        auto L = lattice2(c);
        std::vector<Subset> away;
        for (auto& V : L.sets)
            if (!std::binary_search(V.begin(), V.end(), h)) away.push_back(V);
        std::vector<Subset> lifted;
        for (auto& V : aff) lifted.push_back(lift_labels(V, h));
        REQUIRE(as_multiset(lifted) == as_multiset(away));
        auto cone = cone_lattice(a.n(), aff);
        std::vector<Subset> back;
        for (auto& V : cone.sets) {
            Subset W;
            for (int x : V) W.push_back(x == c.n() ? h : (x < h ? x : x + 1));
            std::sort(W.begin(), W.end());
            back.push_back(W);
        }
        REQUIRE(as_multiset(back) == as_multiset(L.sets));
        long long excess = 0;
        for (auto& V : aff) excess += static_cast<long long>(V.size()) - 1;
        auto p = presentation_general(monodromy_real(w), a.n());
        REQUIRE(p.relations() == static_cast<std::size_t>(binomial(a.n(), 3) + excess));
        ++cases;
    }
}

TEST_CASE("frame independence on fixtures") {
    for (auto name : {"sixlines.arr", "braid_a4.arr", "diamond.arr"}) {
        auto f = load_arrangement(name);
        auto a = decone(f.planes, f.planes.n());
        std::vector<ChenProfile> profs;
        for (Rational q : {Rational(0), Rational(3, 7), Rational(-5, 2), Rational(11)}) {
            try {
                profs.push_back(geometric_ranks(a, certify_frame(a, Frame::shear(q)), 8));
            } catch (const std::invalid_argument&) {
            }
        }
        REQUIRE(profs.size() >= 2);
        for (auto& p : profs) CHECK_MESSAGE(p.same_ranks(profs[0]), name);
    }
}

TEST_CASE("property: frame independence and cone/decone invariance on random arrangements") {
    std::mt19937_64 rng(83);
    for (int cases = 0; cases < kPropertyCases;) {
        auto c = random_central(rng, 6);
        if (c.n() < 4) continue;
        int h1 = uniform(rng, 1, c.n()), h2 = uniform(rng, 1, c.n());
        auto a = decone(c, h1), b = decone(c, h2);
        auto pa = geometric_ranks(a, generic_frame(a), 5);
        FrameCertificate other;
        bool found = false;
        for (int tries = 0; tries < 20 && !found; ++tries) {
            try {
                other = certify_frame(a, Frame{uniform(rng, 1, 3), uniform(rng, -3, 3), uniform(rng, -2, 2), uniform(rng, 1, 3)});
                found = true;
            } catch (const std::invalid_argument&) {
            }
        }
        if (found) REQUIRE(geometric_ranks(a, other, 5).same_ranks(pa));
        REQUIRE(geometric_ranks(b, generic_frame(b), 5).same_ranks(pa));
        ++cases;
    }
}
