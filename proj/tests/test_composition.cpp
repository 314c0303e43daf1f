#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "psikit/composition.hpp"

using namespace psikit;

TEST_CASE("descent sets and ofSet are inverse") {
    Composition a{1, 1, 4, 2, 1};
    CHECK(a.size() == 9);
    CHECK(a.length() == 5);
    CHECK(a.descentSet() == std::set<int>{1, 2, 6, 8});
    for (int n = 0; n <= 10; ++n) {
        for (const Composition& c : compositionsOf(n)) {
            CHECK(Composition::ofSet(c.descentSet(), n) == c);
        }
    }
    CHECK(compositionsOf(7).size() == 64);
}

TEST_CASE("reversal and complement are involutions") {
    Composition a{3, 1, 2};
    CHECK(a.reversed() == Composition{2, 1, 3});
    for (const Composition& c : compositionsOf(6)) {
        CHECK(c.reversed().reversed() == c);
        CHECK(c.complement().complement() == c);
        // Complementary descent sets partition {1,...,n-1}.
        std::set<int> all;
        for (int d : c.descentSet()) all.insert(d);
        for (int d : c.complement().descentSet()) {
            CHECK(!c.descentSet().count(d));
            all.insert(d);
        }
        CHECK(static_cast<int>(all.size()) == (c.size() == 0 ? 0 : c.size() - 1));
    }
}

TEST_CASE("concatenation and near-concatenation") {
    Composition a{1, 2}, b{3};
    CHECK(a.concat(b) == Composition{1, 2, 3});
    CHECK(a.nearConcat(b) == Composition{1, 5});
    CHECK(Composition{}.concat(a) == a);
    CHECK_THROWS_AS(Composition{}.nearConcat(a), std::invalid_argument);
}

TEST_CASE("refinement order") {
    Composition a{1, 1, 4, 2, 1};
    CHECK(a.refines(Composition{2, 7}));
    CHECK(!Composition{2, 7}.refines(a));
    for (const Composition& c : compositionsOf(6)) {
        CHECK(c.coarsenings().size() == (c.empty() ? 1u : 1u << (c.length() - 1)));
        CHECK(c.refines(c));
        std::vector<Composition> refs = c.refinements();
        for (const Composition& f : refs) CHECK(f.refines(c));
        // Duality between refinements and coarsenings.
        for (const Composition& d : compositionsOf(6)) {
            bool inRef = std::find(refs.begin(), refs.end(), d) != refs.end();
            CHECK(inRef == d.refines(c));
            // Antisymmetry and transitivity.
            if (c.refines(d) && d.refines(c)) CHECK(c == d);
        }
    }
    // blocksUnder splits at the boundaries of the coarser composition.
    auto blocks = a.blocksUnder(Composition{2, 7});
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == Composition{1, 1});
    CHECK(blocks[1] == Composition{4, 2, 1});
}

TEST_CASE("pi, relative pi, z") {
    Composition a{1, 1, 4, 2, 1};
    CHECK(pi(a) == 1 * 2 * 6 * 8 * 9);
    CHECK(pi(a, Composition{2, 7}) == 336);
    CHECK(pi(a, Composition{9}) == pi(a));
    CHECK(pi(Composition{}) == 1);
    CHECK(zee(Composition{3, 2, 1}) == 6);
    CHECK(zee(Composition{1, 2, 1}) == 4);    // 1^2 * 2! * 2
    CHECK(zee(Composition{2, 2, 2}) == 48);   // 2^3 * 3!
    // pi of a block decomposition multiplies over blocks of itself trivially.
    for (const Composition& c : compositionsOf(6)) {
        BigInt prod = 1;
        for (int p : c.parts()) prod *= p;
        CHECK(pi(c, c) == prod);
    }
}

TEST_CASE("alternating refinement identity for pi") {
    // n!/pi(reverse(alpha)) = sum over coarsenings beta of
    // (-1)^(l(alpha)-l(beta)) n!/pi(alpha,beta).
    for (int n = 0; n <= 7; ++n) {
        BigInt nf = factorial(n);
        for (const Composition& alpha : compositionsOf(n)) {
            Rat rhs = 0;
            for (const Composition& beta : alpha.coarsenings()) {
                Rat t = Rat(nf) / Rat(pi(alpha, beta));
                rhs += ((alpha.length() - beta.length()) % 2) ? -t : t;
            }
            CHECK(rhs == Rat(nf) / Rat(pi(alpha.reversed())));
        }
    }
}

TEST_CASE("permutation sets Pi(alpha, beta)") {
    Composition alpha{2, 4, 2, 1}, beta{2, 7};
    CHECK(isInPi({2, 3, 6, 4, 1, 7, 5, 8, 9}, alpha, beta));
    CHECK(!isInPi({1, 4, 2, 7, 3, 8, 5, 6, 9}, alpha, beta));
    CHECK(enumeratePi(alpha, beta).size() == 1080);  // 9!/336
    CHECK(enumeratePi(Composition{1, 1, 4, 2, 1}, Composition{2, 7}).size() == 1080);
    for (int n = 1; n <= 6; ++n) {
        for (const Composition& a : compositionsOf(n)) {
            for (const Composition& b : a.coarsenings()) {
                Rat expected = Rat(factorial(n)) / Rat(pi(a, b));
                CHECK(Rat(BigInt(enumeratePi(a, b).size())) == expected);
            }
        }
    }
    CHECK_THROWS_AS(enumeratePi(Composition{11, 1}, Composition{12}), GuardExceeded);
}

TEST_CASE("shuffles") {
    Composition a{4, 2, 1}, b{3, 1};
    std::vector<Composition> got = shuffles(a, b);
    std::vector<Composition> expected = {
        Composition{3, 1, 4, 2, 1}, Composition{3, 4, 1, 2, 1}, Composition{3, 4, 2, 1, 1},
        Composition{3, 4, 2, 1, 1}, Composition{4, 2, 1, 3, 1}, Composition{4, 2, 3, 1, 1},
        Composition{4, 2, 3, 1, 1}, Composition{4, 3, 1, 2, 1}, Composition{4, 3, 2, 1, 1},
        Composition{4, 3, 2, 1, 1}};
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
    CHECK(shuffles(b, a) == got);  // commutative as a multiset
    // Sizes are binomial and parts are preserved.
    for (const Composition& x : compositionsOf(4)) {
        for (const Composition& y : compositionsOf(3)) {
            auto sh = shuffles(x, y);
            BigInt expectedCount =
                factorial(x.length() + y.length()) / (factorial(x.length()) * factorial(y.length()));
            CHECK(BigInt(sh.size()) == expectedCount);
            for (const Composition& g : sh) {
                CHECK(sortedPartition(g) ==
                      sortedPartition(Composition(x.concat(y).parts())));
            }
        }
    }
}

TEST_CASE("canonical order and partitions") {
    CHECK(Composition{2} < Composition{1, 1});
    CHECK(Composition{1, 2} < Composition{2, 1});
    CHECK(Composition{} < Composition{1});
    CHECK_THROWS_AS(Composition{0}, std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK(Partition{4, 2, 1}.contains(Partition{2, 1}));
    CHECK(!Partition{2, 2}.contains(Partition{3}));
    CHECK(partitionsOf(6).size() == 11);
    CHECK(sortedPartition(Composition{1, 3, 2}) == Partition{3, 2, 1});
    CHECK(rearrangements(Partition{2, 1, 1}).size() == 3);
}
