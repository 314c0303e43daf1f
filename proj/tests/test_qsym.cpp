#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "psikit/io.hpp"
#include "psikit/qsym.hpp"

using namespace psikit;

namespace {

QSymElement randomElement(Basis b, int maxDegree, std::mt19937& rng, bool homogeneous = false) {
    QSymElement f(b);
    std::uniform_int_distribution<int> degDist(1, maxDegree);
    std::uniform_int_distribution<int> coefDist(-4, 4);
    int fixedDeg = degDist(rng);
    for (int t = 0; t < 4; ++t) {
        int n = homogeneous ? fixedDeg : degDist(rng);
        auto comps = compositionsOf(n);
        std::uniform_int_distribution<size_t> pick(0, comps.size() - 1);
        f.addTerm(comps[pick(rng)], coefDist(rng));
    }
    return f;
}

}  // namespace

TEST_CASE("element basics") {
    QSymElement f(Basis::M);
    f.addTerm(Composition{2}, 1);
    f.addTerm(Composition{2}, -1);
    CHECK(f.isZero());
    f.addTerm(Composition{2}, Rat(1, 2));
    f.addTerm(Composition{1, 1}, 3);
    CHECK(f.degrees() == std::set<int>{2});
    CHECK(f.degree() == 2);
    f.addTerm(Composition{3}, 1);
    CHECK(!f.isHomogeneous());
    CHECK_THROWS_AS(f.degree(), std::domain_error);
    CHECK_THROWS_AS(f += QSymElement::one(Basis::L), std::invalid_argument);
}

TEST_CASE("conversion examples") {
    auto psi = [](std::initializer_list<int> p) {
        return QSymElement::term(Basis::Psi, Composition(p));
    };
    // psi_(1,1) = M_(1,1) + (1/2) M_(2); psi_(n) = (1/n) M_(n).
    QSymElement m11 = convert(psi({1, 1}), Basis::M);
    CHECK(m11.coefficient(Composition{1, 1}) == 1);
    CHECK(m11.coefficient(Composition{2}) == Rat(1, 2));
    CHECK(convert(psi({3}), Basis::M).coefficient(Composition{3}) == Rat(1, 3));
    // L_(2) = M_(2) + M_(1,1); M_(2) = L_(2) - L_(1,1).
    QSymElement l2 = QSymElement::term(Basis::L, Composition{2});
    CHECK(convert(l2, Basis::M) ==
          QSymElement::term(Basis::M, Composition{2}) +
              QSymElement::term(Basis::M, Composition{1, 1}));
    QSymElement m2 = QSymElement::term(Basis::M, Composition{2});
    QSymElement m2inL = convert(m2, Basis::L);
    CHECK(m2inL.coefficient(Composition{2}) == 1);
    CHECK(m2inL.coefficient(Composition{1, 1}) == -1);
    // M_(2) = 2 psi_(2); M_(1,1) = psi_(1,1) - psi_(2).
    CHECK(convert(m2, Basis::Psi) == Rat(2) * psi({2}));
    CHECK(convert(QSymElement::term(Basis::M, Composition{1, 1}), Basis::Psi) ==
          psi({1, 1}) - psi({2}));
    // The psi -> M matrix is triangular with respect to refinement.
    for (const Composition& alpha : compositionsOf(6)) {
        QSymElement psiInM = convert(QSymElement::term(Basis::Psi, alpha), Basis::M);
        for (const auto& [beta, coef] : psiInM.terms()) CHECK(alpha.refines(beta));
        QSymElement lInM = convert(QSymElement::term(Basis::L, alpha), Basis::M);
        for (const auto& [beta, coef] : lInM.terms()) CHECK(beta.refines(alpha));
    }
}

TEST_CASE("conversion round trips") {
    std::mt19937 rng(7);
    for (int it = 0; it < 60; ++it) {
        for (Basis from : {Basis::M, Basis::L, Basis::Psi}) {
            QSymElement f = randomElement(from, 8, rng);
            for (Basis via : {Basis::M, Basis::L, Basis::Psi}) {
                QSymElement g = convert(convert(f, via), from);
                CHECK(g.basis() == from);
                CHECK(g.terms() == f.terms());
            }
        }
    }
}

TEST_CASE("products") {
    auto psi = [](std::initializer_list<int> p) {
        return QSymElement::term(Basis::Psi, Composition(p));
    };
    // Shuffle rule in the psi basis.
    QSymElement prod = psi({2}) * psi({1, 1});
    CHECK(prod == psi({2, 1, 1}) + psi({1, 2, 1}) + psi({1, 1, 2}));
    // Quasi-shuffle in M: M_1 * M_1 = 2 M_(1,1) + M_(2).
    QSymElement m1 = QSymElement::term(Basis::M, Composition{1});
    QSymElement sq = m1 * m1;
    CHECK(sq.coefficient(Composition{1, 1}) == 2);
    CHECK(sq.coefficient(Composition{2}) == 1);
    // L_1 * L_1 = L_(1,1) + L_(2).
    QSymElement l1 = QSymElement::term(Basis::L, Composition{1});
    CHECK(l1 * l1 == QSymElement::term(Basis::L, Composition{1, 1}) +
                         QSymElement::term(Basis::L, Composition{2}));
    // All three bases agree on basis-element products through degree 6.
    for (int n = 1; n <= 3; ++n) {
        for (int m = 1; m <= 3; ++m) {
            for (const Composition& a : compositionsOf(n)) {
                for (const Composition& b : compositionsOf(m)) {
                    QSymElement viaPsi =
                        QSymElement::term(Basis::Psi, a) * QSymElement::term(Basis::Psi, b);
                    QSymElement viaM = convert(QSymElement::term(Basis::Psi, a), Basis::M) *
                                       convert(QSymElement::term(Basis::Psi, b), Basis::M);
                    QSymElement viaL = convert(QSymElement::term(Basis::Psi, a), Basis::L) *
                                       convert(QSymElement::term(Basis::Psi, b), Basis::L);
                    CHECK(viaPsi == viaM);
                    CHECK(viaPsi == viaL);
                }
            }
        }
    }
    // Commutativity and distributivity on random elements.
    std::mt19937 rng(11);
    for (int it = 0; it < 20; ++it) {
        QSymElement f = randomElement(Basis::M, 4, rng);
        QSymElement g = randomElement(Basis::L, 4, rng);
        QSymElement h = randomElement(Basis::Psi, 4, rng);
        CHECK(f * g == convert(g, Basis::M) * convert(f, Basis::M));
        CHECK(f * (g + convert(h, Basis::L)) == f * g + f * h);
    }
}

TEST_CASE("coproducts") {
    // Deconcatenation for psi.
    TensorElement d = coproduct(QSymElement::term(Basis::Psi, Composition{2, 1}));
    CHECK(d.coefficient({Composition{}, Composition{2, 1}}) == 1);
    CHECK(d.coefficient({Composition{2}, Composition{1}}) == 1);
    CHECK(d.coefficient({Composition{2, 1}, Composition{}}) == 1);
    CHECK(d.terms().size() == 3);
    // Fundamental basis: word cuts.
    TensorElement dl = coproduct(QSymElement::term(Basis::L, Composition{2}));
    CHECK(dl.coefficient({Composition{1}, Composition{1}}) == 1);
    CHECK(dl.terms().size() == 3);
    // Coassociativity in all bases through degree 6.
    for (int n = 0; n <= 6; ++n) {
        for (const Composition& alpha : compositionsOf(n)) {
            for (Basis b : {Basis::M, Basis::L, Basis::Psi}) {
                TensorElement once = coproduct(QSymElement::term(b, alpha));
                std::map<std::vector<Composition>, Rat> left, right;
                for (const auto& [legs, coef] : once.terms()) {
                    TensorElement dLeft = coproduct(QSymElement::term(b, legs[0]));
                    for (const auto& [inner, c2] : dLeft.terms()) {
                        left[{inner[0], inner[1], legs[1]}] += coef * c2;
                    }
                    TensorElement dRight = coproduct(QSymElement::term(b, legs[1]));
                    for (const auto& [inner, c2] : dRight.terms()) {
                        right[{legs[0], inner[0], inner[1]}] += coef * c2;
                    }
                }
                std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
                std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
                CHECK(left == right);
            }
        }
    }
    // The coproduct is an algebra morphism (checked in the M basis, degree <= 4).
    for (int n = 1; n <= 2; ++n) {
        for (int m = 1; m <= 2; ++m) {
            for (const Composition& a : compositionsOf(n)) {
                for (const Composition& b : compositionsOf(m)) {
                    QSymElement f = QSymElement::term(Basis::M, a);
                    QSymElement g = QSymElement::term(Basis::M, b);
                    TensorElement lhs = coproduct(f * g);
                    TensorElement df = coproduct(f), dg = coproduct(g);
                    std::map<std::vector<Composition>, Rat> rhs;
                    for (const auto& [lf, cf] : df.terms()) {
                        for (const auto& [lg, cg] : dg.terms()) {
                            QSymElement p1 = QSymElement::term(Basis::M, lf[0]) *
                                             QSymElement::term(Basis::M, lg[0]);
                            QSymElement p2 = QSymElement::term(Basis::M, lf[1]) *
                                             QSymElement::term(Basis::M, lg[1]);
                            for (const auto& [x, cx] : p1.terms()) {
                                for (const auto& [y, cy] : p2.terms()) {
                                    rhs[{x, y}] += cf * cg * cx * cy;
                                }
                            }
                        }
                    }
                    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
                    CHECK(lhs.terms() == rhs);
                }
            }
        }
    }
}

TEST_CASE("graded coproduct") {
    // Graded pieces of the psi coproduct vanish off coarsenings.
    QSymElement f = QSymElement::term(Basis::Psi, Composition{2, 1, 1});
    CHECK(gradedCoproduct(f, Composition{3, 1})
              .coefficient({Composition{2, 1}, Composition{1}}) == 1);
    CHECK(gradedCoproduct(f, Composition{1, 3}).isZero());
    CHECK_THROWS_AS(gradedCoproduct(f, Composition{2, 1}), std::invalid_argument);
    // Summing the graded pieces of arity 2 recovers the full coproduct.
    for (const Composition& alpha : compositionsOf(5)) {
        for (Basis b : {Basis::M, Basis::L, Basis::Psi}) {
            QSymElement g = QSymElement::term(b, alpha);
            std::map<std::vector<Composition>, Rat> total;
            for (int k = 1; k <= 4; ++k) {
                TensorElement piece = gradedCoproduct(g, Composition{k, 5 - k});
                for (const auto& [legs, coef] : piece.terms()) total[legs] += coef;
            }
            TensorElement full = coproduct(g);
            for (const auto& [legs, coef] : full.terms()) {
                if (legs[0].size() == 0 || legs[1].size() == 0) continue;
                CHECK(total[legs] == coef);
            }
        }
    }
}

TEST_CASE("min1 and max1") {
    auto term = [](Basis b, std::initializer_list<int> p) {
        return QSymElement::term(b, Composition(p));
    };
    CHECK(min1(term(Basis::M, {3, 2})) == -2);
    CHECK(max1(term(Basis::M, {3, 2})) == -3);
    CHECK(min1(term(Basis::M, {4})) == 4);
    CHECK(min1(term(Basis::L, {1, 1, 3})) == 1);
    CHECK(min1(term(Basis::L, {1, 3})) == -1);
    CHECK(min1(term(Basis::L, {3, 1})) == 0);
    CHECK(max1(term(Basis::L, {3, 1})) == -1);
    CHECK(max1(term(Basis::L, {1, 3})) == 0);
    CHECK(min1(term(Basis::Psi, {4})) == 1);
    CHECK(min1(term(Basis::Psi, {2, 2})) == 0);
    CHECK(max1(term(Basis::Psi, {2, 1})) == Rat(-1, 2));
    CHECK(max1(term(Basis::Psi, {3, 4, 2, 1})) == Rat(4, 189));
    CHECK_THROWS_AS(min1(QSymElement::one(Basis::M)), std::domain_error);
    // The three basis formulas agree.
    std::mt19937 rng(3);
    for (int it = 0; it < 40; ++it) {
        QSymElement f = randomElement(Basis::M, 6, rng, true);
        CHECK(min1(f) == min1(convert(f, Basis::L)));
        CHECK(min1(f) == min1(convert(f, Basis::Psi)));
        CHECK(max1(f) == max1(convert(f, Basis::L)));
        CHECK(max1(f) == max1(convert(f, Basis::Psi)));
    }
    // Both functionals kill products of nonconstant homogeneous elements.
    for (int it = 0; it < 25; ++it) {
        QSymElement f = randomElement(Basis::M, 3, rng, true);
        QSymElement g = randomElement(Basis::Psi, 3, rng, true);
        QSymElement prod = f * g;
        if (prod.isZero()) continue;
        CHECK(min1(prod) == 0);
        CHECK(max1(prod) == 0);
    }
}

TEST_CASE("psi coefficient extraction") {
    // L_(1,1) + L_(2) = 2 psi_(1,1).
    QSymElement f = QSymElement::term(Basis::L, Composition{1, 1}) +
                    QSymElement::term(Basis::L, Composition{2});
    auto coeffs = psiCoefficients(f);
    REQUIRE(coeffs.size() == 1);
    CHECK(coeffs.at(Composition{1, 1}) == 2);
    // M_(2) = 2 psi_(2).
    auto m2 = psiCoefficients(QSymElement::term(Basis::M, Composition{2}));
    REQUIRE(m2.size() == 1);
    CHECK(m2.at(Composition{2}) == 2);
    // The functional route agrees with triangular conversion for every basis
    // element through degree 7, without going through convert().
    for (int n = 0; n <= 7; ++n) {
        for (const Composition& alpha : compositionsOf(n)) {
            for (Basis b : {Basis::M, Basis::L}) {
                QSymElement g = QSymElement::term(b, alpha);
                auto got = psiCoefficients(g);
                auto expected = convert(g, Basis::Psi).terms();
                CHECK(std::map<Composition, Rat>(expected.begin(), expected.end()) == got);
            }
        }
    }
}

TEST_CASE("automorphisms") {
    auto psiT = [](std::initializer_list<int> p, Rat c = 1) {
        return QSymElement::term(Basis::Psi, Composition(p), c);
    };
    // The golden image of psi_(3,4,2,1) under omega-rho.
    QSymElement img = automorphism(psiT({3, 4, 2, 1}), Automorphism::OmegaRho);
    QSymElement expected = psiT({3, 4, 2, 1}) + psiT({3, 4, 3}, Rat(1, 2)) +
                           psiT({3, 6, 1}, Rat(1, 4)) + psiT({3, 7}, Rat(1, 8)) +
                           psiT({7, 2, 1}, Rat(-1, 12)) + psiT({7, 3}, Rat(-1, 24)) +
                           psiT({9, 1}, Rat(-1, 28)) + psiT({10}, Rat(-4, 189));
    CHECK(img.terms() == expected.terms());
    // omega on psi is signed reversal.
    CHECK(automorphism(psiT({3, 1}), Automorphism::Omega) == psiT({1, 3}));
    CHECK(automorphism(psiT({2, 1}), Automorphism::Omega).coefficient(Composition{1, 2}) == -1);
    // Index maps on the fundamental basis.
    CHECK(automorphism(QSymElement::term(Basis::L, Composition{2, 1}), Automorphism::Rho) ==
          QSymElement::term(Basis::L, Composition{1, 2}));
    std::mt19937 rng(19);
    for (int it = 0; it < 30; ++it) {
        for (Basis b : {Basis::M, Basis::L, Basis::Psi}) {
            QSymElement f = randomElement(b, 6, rng);
            // Involutions.
            for (Automorphism a :
                 {Automorphism::Omega, Automorphism::Rho, Automorphism::OmegaRho}) {
                CHECK(automorphism(automorphism(f, a), a) == f);
            }
            // omega = rho after omega-rho, and all bases agree via L.
            CHECK(automorphism(automorphism(f, Automorphism::OmegaRho), Automorphism::Rho) ==
                  automorphism(f, Automorphism::Omega));
            QSymElement viaL = convert(
                automorphism(convert(f, Basis::L), Automorphism::OmegaRho), b);
            CHECK(viaL == automorphism(f, Automorphism::OmegaRho));
        }
        // rho and omega-rho are algebra (anti)morphisms on QSym: check
        // multiplicativity on small random pairs.
        QSymElement f = randomElement(Basis::Psi, 3, rng);
        QSymElement g = randomElement(Basis::Psi, 3, rng);
        CHECK(automorphism(f * g, Automorphism::Omega) ==
              automorphism(f, Automorphism::Omega) * automorphism(g, Automorphism::Omega));
    }
}

TEST_CASE("power sums") {
    // p_3 = M_(3); p_(1,1,1) = (M_1)^3.
    CHECK(convert(powerSum(Partition{3}), Basis::M) ==
          QSymElement::term(Basis::M, Composition{3}));
    QSymElement m1 = QSymElement::term(Basis::M, Composition{1});
    CHECK(convert(powerSum(Partition{1, 1, 1}), Basis::M) == m1 * m1 * m1);
    // p_lambda p_mu = p_(lambda union mu).
    CHECK(powerSum(Partition{2}) * powerSum(Partition{1}) == powerSum(Partition{2, 1}));
    CHECK(powerSum(Partition{3, 2}) == powerSum(Partition{3}) * powerSum(Partition{2}));
    // Power sums are symmetric: invariant under rho.
    for (const Partition& lambda : partitionsOf(6)) {
        CHECK(automorphism(powerSum(lambda), Automorphism::Rho) == powerSum(lambda));
        // omega(p_lambda) = (-1)^(n - l) p_lambda.
        Rat sign = ((lambda.size() - lambda.length()) % 2) ? -1 : 1;
        CHECK(automorphism(powerSum(lambda), Automorphism::Omega) == sign * powerSum(lambda));
    }
    CHECK(normalizedPsi(Composition{2, 1}) ==
          QSymElement::term(Basis::Psi, Composition{2, 1}, 2));
}
