#include "support.hpp"

#include <doctest.h>

using namespace alexchen;
using namespace alexchen::testing;

namespace {

GroupRingElement fox_pairing(const FreeWord& w) {
    int n = w.rank();
    GroupRingElement sum(n);
    auto grad = fox_gradient(w);
    for (int i = 1; i <= n; ++i) {
        GroupRingElement ti = GroupRingElement::of(FreeWord::generator(n, i));
        ti.add(FreeWord(n), -1);
        sum += grad[i - 1] * ti;
    }
    return sum;
}

}  // namespace

TEST_CASE("free words reduce") {
    auto w = FreeWord::parse("t1 t2 t2^-1 t1^-1 t3", 3);
    CHECK(w.str() == "t3");
    CHECK((w * w.inverse()).is_identity());
    CHECK(FreeWord::commutator(FreeWord::generator(2, 1), FreeWord::generator(2, 2)).length() == 4);
}

TEST_CASE("abelianized gradient of a conjugate") {
    auto g = abelianized_gradient(FreeWord::parse("t1 t2 t1^-1", 2));
    CHECK(g[0].str() == "-t2 + 1");
    CHECK(g[1].str() == "t1");
}

TEST_CASE("property: Fox fundamental formula") {
    std::mt19937_64 rng(21);
    for (int c = 0; c < kPropertyCases; ++c) {
        int n = uniform(rng, 1, 4);
        FreeWord w = random_word(rng, n, 10);
        GroupRingElement rhs = GroupRingElement::of(w);
        rhs.add(FreeWord(n), -1);
        REQUIRE(fox_pairing(w) == rhs);
    }
}

TEST_CASE("property: Fox product rule") {
    std::mt19937_64 rng(22);
    for (int c = 0; c < kPropertyCases; ++c) {
        int n = uniform(rng, 1, 4);
        FreeWord u = random_word(rng, n, 6), v = random_word(rng, n, 6);
        auto du = fox_gradient(u), dv = fox_gradient(v), duv = fox_gradient(u * v);
        for (int i = 0; i < n; ++i) {
            GroupRingElement expect = du[i];
            expect += GroupRingElement::of(u) * dv[i];
            REQUIRE(duv[i] == expect);
        }
    }
}
