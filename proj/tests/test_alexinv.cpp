#include "support.hpp"

#include <doctest.h>

using namespace alexchen;
using namespace alexchen::testing;

namespace {

const std::vector<std::string> kDiamond = {"T{3,4,5}", "T{1,2,5}", "T{1,4} ^ (A[3,4])", "T{1,3,6}",
                                           "T{2,4,6} ^ (A[3,4] A[3,6])"};

long long excess(const std::vector<Subset>& sets) {
    long long s = 0;
    for (auto& V : sets) s += static_cast<long long>(V.size()) - 1;
    return s;
}

}  // namespace

TEST_CASE("free group presentation is d_3 alone") {
    auto p = presentation_free(3);
    CHECK(p.generators() == 3);
    CHECK(p.relations() == 1);
    CHECK(p.laurent(0, 0) == parse_laurent("t3 - 1", 3));
    CHECK(presentation_free(2).relations() == 0);
}

TEST_CASE("presentation text round trip and errors") {
    auto p = presentation_general(parse_twists(kDiamond, 6), 6);
    CHECK(Presentation::from_text(p.to_text()) == p);
    auto q = presentation_completed_reduced(parse_twists(kDiamond, 6), 6, 3);
    CHECK(Presentation::from_text(q.to_text()) == q);
    CHECK_THROWS(Presentation::from_text("ring laurent 2\ngenerators 1 g\nrelation r: [t3]\n"));
    CHECK_THROWS(Presentation::from_text("ring banana 2\n"));
}

TEST_CASE("diamond presentations have the expected shapes") {
    auto mono = parse_twists(kDiamond, 6);
    auto g = presentation_general(mono, 6);
    CHECK(g.generators() == 15);
    CHECK(g.relations() == 29);
    std::vector<RealVertex> w{{{3, 4, 5}, {}}, {{1, 2, 5}, {}}, {{1, 4}, {3}}, {{1, 3, 6}, {}}, {{2, 4, 6}, {3}}};
    auto r = presentation_real(w, 6);
    CHECK(r.generators() == 6);
    CHECK(r.relations() == 20);
    auto red = presentation_completed_reduced(mono, 6, 4);
    CHECK(red.generators() == 6);
    CHECK(red.relations() == 20);
}

TEST_CASE("pair cover is enforced") {
    CHECK_THROWS_AS(presentation_real({{{1, 2, 3}, {}}, {{2, 3}, {}}}, 3), std::invalid_argument);
}

TEST_CASE("product and cone shapes") {
    auto f2 = presentation_free(2), f3 = presentation_free(3);
    auto p = presentation_product(f2, f3);
    CHECK(p.nvars == 5);
    CHECK(p.generators() == f2.generators() + f3.generators());
    CHECK(p.relations() == f2.relations() + 3 * f2.generators() + f3.relations() + 2 * f3.generators());
    auto c = presentation_cone(f3);
    CHECK(c.nvars == 4);
    CHECK(c.relations() == f3.relations() + f3.generators());
}

TEST_CASE("property: Phi(gamma_z) composed with d_2 is id - Theta(gamma_z)") {
    std::mt19937_64 rng(51);
    for (int c = 0; c < kPropertyCases; ++c) {
        int n = uniform(rng, 2, 5);
        ConjTuple z;
        for (int i = 0; i < n; ++i) z.push_back(random_word(rng, n, 4));
        REQUIRE(phi_conj(z) * differential(n, 2) == lidentity(n, n) - gassner_conj(z));
    }
}

TEST_CASE("property: conjugated vertex relations") {
    std::mt19937_64 rng(52);
    for (int c = 0; c < kPropertyCases; ++c) {
        int n = uniform(rng, 2, 5);
        Subset V = random_subset(rng, n, 2, n);
        BraidWord delta = random_pure_braid(rng, n, 3);
        REQUIRE(phi_V_full(V, n) * differential(n, 2) == lidentity(n, n) - gassner_conj(twist_tuple(V, n)));
        LMatrix lhs = phi_V(V, n) * exterior_power(gassner_word(delta), 2) * differential(n, 2);
        LMatrix full = (lidentity(n, n) - gassner_conj(twist_tuple(V, n))) * gassner_word(delta);
        std::vector<std::size_t> rows;
        for (std::size_t r = 1; r < V.size(); ++r) rows.push_back(static_cast<std::size_t>(V[r] - 1));
        LMatrix rhs = full.row_block(rows);
        lhs.row_labels.clear();
        lhs.col_labels.clear();
        rhs.row_labels.clear();
        rhs.col_labels.clear();
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("property: real delta rows are rows of Theta(delta)") {
    std::mt19937_64 rng(53);
    for (int c = 0; c < kPropertyCases; ++c) {
        int n = uniform(rng, 3, 6);
        Subset V = random_subset(rng, n, 2, 3), J;
        for (int j = V.front() + 1; j < V.back(); ++j)
            if (!std::binary_search(V.begin(), V.end(), j) && uniform(rng, 0, 1)) J.push_back(j);
        BraidWord d(n);
        for (int i : V)
            for (int j : J)
                if (j < i) d = d * BraidWord::generator(n, j, i);
        LMatrix G = gassner_word(d);
        for (int i : V) {
            ChainVec row = real_delta_row(J, i, n);
            for (int j = 0; j < n; ++j) REQUIRE(row[j] == G(i - 1, j));
        }
    }
}

TEST_CASE("property: presentation sizes follow the closed forms") {
    std::mt19937_64 rng(54);
    for (int c = 0; c < kPropertyCases; ++c) {
        int n = uniform(rng, 3, 6);
        auto sets = random_pair_partition(rng, n);
        std::vector<ConjugatedTwist> mono;
        for (auto& V : sets) mono.push_back({V, random_pure_braid(rng, n, 2)});
        std::size_t c2 = binomial(n, 2), c3 = binomial(n, 3);
        auto g = presentation_general(mono, n);
        REQUIRE(g.generators() == c2);
        REQUIRE(g.relations() == c3 + excess(sets));
        if (c % 10 == 0) {
            auto red = presentation_completed_reduced(mono, n, 2);
            REQUIRE(red.generators() == c2 - excess(sets));
            REQUIRE(red.relations() == c3);
        }
        std::vector<RealVertex> rv;
        for (auto& V : sets) rv.push_back({V, {}});
        auto r = presentation_real(rv, n);
        REQUIRE(r.generators() == c2 - excess(sets));
        REQUIRE(r.relations() == c3);
        auto f = presentation_free(n);
        REQUIRE(f.generators() == c2);
        REQUIRE(f.relations() == c3);
    }
}
