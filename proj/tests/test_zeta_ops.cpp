#include <gtest/gtest.h>

#include <algorithm>

#include "mzeta/bernoulli.hpp"
#include "mzeta/combinatorics.hpp"
#include "mzeta/error.hpp"
#include "mzeta/zeta_ops.hpp"
#include "oracles.hpp"

using namespace mzeta;
using oracle::rel_diff;

namespace {

BigRational q(long p, long d = 1) { return BigRational(BigInt(p), BigInt(d)); }

}  // namespace

TEST(Pochhammer, Examples) {
    EXPECT_EQ(pochhammer(Complex(3.7L, 1), 0), Complex(1));
    EXPECT_EQ(pochhammer(2, 3), Complex(24));
    EXPECT_EQ(pochhammer(-3, 5), Complex(0));
}

TEST(ZSingle, MZeroIsHurwitz) {
    const Complex s(5, 1);
    EXPECT_LT(rel_diff(Z_single_hurwitz(0, s, 0.7L), hurwitz_zeta(s, 0.7L)), 1e-18L);
    EXPECT_LT(rel_diff(Z_single_multizeta(0, s, 0.7L), hurwitz_zeta(s, 0.7L)), 1e-17L);
}

TEST(ZSingle, TwoRoutesAgree) {
    EXPECT_LT(rel_diff(Z_single_multizeta(1, 6, 0.9L), Z_single_hurwitz(1, 6, 0.9L)), 1e-9L);
    EXPECT_LT(rel_diff(Z_single_multizeta(3, Complex(9.5L, 1), 0.75L), Z_single_hurwitz(3, Complex(9.5L, 1), 0.75L)), 1e-9L);
    // oracle route against the reduction route
    EXPECT_LT(rel_diff(Z_single_multizeta(2, 8, 1, ZetaRoute::Series), Z_single_multizeta(2, 8, 1, ZetaRoute::Reduction)),
              1e-9L);
}

TEST(ZSingle, ZhatRelationAndQuadrature) {
    // G^{(m)} = t F^{(m)} + m F^{(m-1)} gives Zhat_m(s) = s Z_m(s+1) + m Z_{m-1}(s).
    const long double s = 7.5L, x = 1;
    const std::vector<unsigned> ms{2};
    const Complex zhat = Z_multi(ms, s, x);
    const Complex via_single = s * Z_single_hurwitz(2, s + 1, x) + 2.0L * Z_single_hurwitz(1, s, x);
    EXPECT_LT(rel_diff(zhat, via_single), 1e-12L);
    EXPECT_LT(std::abs(Z_multi_quadrature(ms, s, x).value - zhat.real()) / std::abs(zhat), 1e-7L);
}

TEST(Zhat, MZeroBothSidesAgree) {
    for (Complex s : {Complex(3.5L, 0), Complex(5, 1)}) {
        const auto [l, r] = Zhat_sides(0, s, 0.5L, Variant::Corrected);
        EXPECT_LT(rel_diff(l, s * hurwitz_zeta(s + 1.0L, 0.5L)), 1e-12L);
        EXPECT_LT(rel_diff(l, r), 1e-12L);
    }
}

TEST(Zhat, CorrectedSidesAgree) {
    const auto [l, r] = Zhat_sides(2, 7, 1.3L, Variant::Corrected);
    EXPECT_LT(rel_diff(l, r), 1e-9L);
}

TEST(Zhat, AsPrintedMZeroIsDomainError) {
    try {
        Zhat_sides(0, 4, 1, Variant::AsPrinted);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Domain);
    }
}

TEST(ReducedForm, SimpleShapes) {
    const std::vector<unsigned> zero{0}, zz{0, 0};
    ASSERT_EQ(reduce_multi(zero).terms.size(), 1U);
    EXPECT_EQ(reduce_multi(zero).terms[0], (ReducedForm::Term{q(1), 1, 1}));
    ASSERT_EQ(reduce_multi(zz).terms.size(), 1U);
    EXPECT_EQ(reduce_multi(zz).terms[0], (ReducedForm::Term{q(1), 2, 2}));
    EXPECT_THROW(reduce_multi(std::vector<unsigned>{}), Error);
}

TEST(ReducedForm, MatchesSeriesProduct) {
    const int K = 16;
    const std::vector<std::vector<unsigned>> cases{{1, 0}, {2, 1}, {0, 3}, {1, 1, 1}, {2, 0, 1}};
    for (const auto& ms : cases) {
        LaurentSeries prod = LaurentSeries::constant(q(1));
        for (unsigned m : ms) prod *= derivative(series_of_G(K + static_cast<int>(m) + 2), m);
        EXPECT_TRUE(agrees_through(reduce_multi(ms).evaluate(K), prod, K));
    }
}

TEST(ReducedForm, ShapeBounds) {
    const std::vector<unsigned> ms{2, 1, 3};
    for (const auto& t : reduce_multi(ms).terms) {
        EXPECT_LE(t.a, 3U);
        EXPECT_GE(t.J, 3U);
        EXPECT_LE(t.J, 9U);
    }
}

TEST(ZMulti, ZeroIndexIsShiftedHurwitz) {
    const std::vector<unsigned> ms{0};
    for (Complex s : {Complex(4, 0), Complex(-1.5L, 2), Complex(0.5L, 0)}) {
        const Complex want = s * hurwitz_zeta(s + 1.0L, 0.6L);
        EXPECT_LT(rel_diff(Z_multi(ms, s, 0.6L), want), 1e-14L) << s;
        EXPECT_LT(rel_diff(Z_multi(ms, s, 0.6L, ZetaRoute::Auto), want), 1e-14L) << s;
    }
}

TEST(ZMulti, SingleIndexEqualsZhatLeftSide) {
    for (unsigned m = 0; m <= 3; ++m) {
        const Complex s(m + 4.5L, 1);
        const std::vector<unsigned> ms{m};
        EXPECT_LT(rel_diff(Z_multi(ms, s, 1.1L), Zhat_sides(m, s, 1.1L, Variant::Corrected).first), 1e-10L);
    }
}

TEST(ZMulti, RoutesAgree) {
    const std::vector<std::vector<unsigned>> cases{{1}, {2, 1}, {1, 1, 1}, {3, 0}};
    for (const auto& ms : cases)
        for (long double x : {0.8L, 1.5L}) {
            const Complex s(12, 2);
            const Evaluation red = Z_multi_eval(ms, s, x, ZetaRoute::Reduction);
            const Evaluation ser = Z_multi_eval(ms, s, x, ZetaRoute::Series);
            EXPECT_LE(std::abs(red.value - ser.value), red.error_bound + ser.error_bound);
            EXPECT_LT(rel_diff(red.value, ser.value), 1e-10L);
        }
}

TEST(ZMulti, PermutationInvariance) {
    std::vector<unsigned> ms{2, 0, 1};
    const Complex s(8.5L, -1);
    const Complex base = Z_multi(ms, s, 0.9L, ZetaRoute::Auto);
    std::sort(ms.begin(), ms.end());
    do {
        EXPECT_LT(rel_diff(Z_multi(ms, s, 0.9L, ZetaRoute::Auto), base), 1e-10L);
        EXPECT_LT(rel_diff(Z_multi(ms, s, 0.9L, ZetaRoute::Reduction), base), 1e-10L);
    } while (std::next_permutation(ms.begin(), ms.end()));
}

TEST(ZMulti, SeriesRouteRefusesDivergentRegion) {
    const std::vector<unsigned> ms{2, 2};
    EXPECT_THROW(Z_multi(ms, 3, 1, ZetaRoute::Series), Error);
}

TEST(Quadrature, ClosedFormAtZeroIndex) {
    const std::vector<unsigned> ms{0};
    const QuadratureResult r = Z_multi_quadrature(ms, 4, 1);
    EXPECT_LT(std::abs(r.value - 4 * hurwitz_zeta(5, 1).real()), 1e-9L);
    EXPECT_LT(r.error_estimate, 1e-8L);
}

TEST(Quadrature, AgreesWithReduction) {
    struct Case {
        std::vector<unsigned> ms;
        long double s, x;
    };
    const std::vector<Case> cases{{{1}, 3.5L, 0.8L}, {{1, 1}, 5.5L, 1.2L}, {{1, 2}, 6.5L, 1}, {{0, 0}, 1.5L, 1}};
    for (const auto& c : cases) {
        const long double quad = Z_multi_quadrature(c.ms, c.s, c.x).value;
        const long double red = Z_multi(c.ms, c.s, c.x).real();
        EXPECT_LT(std::abs(quad - red) / std::abs(red), 1e-7L) << c.s;
    }
}

TEST(Quadrature, RejectsNonpositiveS) {
    EXPECT_THROW(Z_multi_quadrature(std::vector<unsigned>{1}, -1, 1), Error);
}

TEST(GDerivative, BranchesMeetAtSwitchPoint) {
    for (unsigned m = 0; m <= 6; ++m) {
        const long double below = G_derivative(m, 0.5L - 1e-12L);
        const long double above = G_derivative(m, 0.5L + 1e-12L);
        EXPECT_LT(std::abs(below - above), 1e-10L * std::max(1.0L, std::abs(above))) << m;
    }
}

TEST(ZMultiNeg, ThreeRoutesAgree) {
    const std::vector<std::vector<unsigned>> cases{{0}, {3}, {1, 2}, {0, 0}, {2, 1, 1}};
    for (const auto& ms : cases)
        for (unsigned n = 0; n <= 4; ++n)
            for (const BigRational& x : {q(0), q(1, 2), q(1), q(7, 3)}) {
                const BigRational a = Z_multi_neg(ms, n)(x);
                EXPECT_EQ(a, Z_multi_neg_series(ms, n, x));
                EXPECT_EQ(a, Z_multi_neg_reduced(ms, n, x));
            }
}

TEST(ZMultiNeg, SingleIndexZeroIsBernoulliPoly) {
    // Z_0(-n, x) = -n zeta(1-n, x) = B_n(x)
    const std::vector<unsigned> ms{0};
    for (unsigned n = 0; n <= 8; ++n) EXPECT_EQ(Z_multi_neg(ms, n), bernoulli_poly(n));
}

TEST(ZMultiNeg, NumericContinuationMatchesExact) {
    // the reduced form has removable singularities at s = -n, so take a symmetric limit
    const std::vector<unsigned> ms{1, 2};
    const long double h = 1e-5L;
    for (unsigned n = 0; n <= 3; ++n) {
        const long double want = Z_multi_neg(ms, n)(q(1, 2)).to_long_double();
        const long double s0 = -static_cast<long double>(n);
        const Complex got = 0.5L * (Z_multi(ms, s0 + h, 0.5L) + Z_multi(ms, s0 - h, 0.5L));
        EXPECT_LT(std::abs(got - Complex(want)), 1e-6L * std::max(1.0L, std::abs(want))) << n;
    }
}

TEST(MultiZetaCombination, EqualsTermwiseSum) {
    const std::vector<std::pair<BigRational, unsigned>> terms{{q(3), 1}, {q(-2, 3), 2}, {q(5), 4}};
    const Complex s(9, 1);
    Complex want = 0;
    for (const auto& [c, J] : terms) want += c.to_long_double() * multi_hurwitz_series(J, s, 1.3L);
    EXPECT_LT(rel_diff(multi_zeta_combination(terms, s, 1.3L).value, want), 1e-16L);
}
