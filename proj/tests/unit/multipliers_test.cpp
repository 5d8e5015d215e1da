#include <gtest/gtest.h>

#include "qspace/multipliers.hpp"

using namespace qspace;

TEST(Multipliers, RegimeExamples) {
    const RegimeDecision a = classify_regime(2.0, 2.0, 0.5, 0.5);
    EXPECT_EQ(a.tag, RegimeCase::Case1NonTrivial);
    EXPECT_EQ(a.characterization, "L-infinity + log condition");
    EXPECT_EQ(classify_regime(3.0, 2.0, 0.2, 0.5).tag, RegimeCase::Case2NonTrivial);
    const RegimeDecision c = classify_regime(2.0, 2.0, 0.6, 0.4);
    EXPECT_EQ(c.tag, RegimeCase::Case3Trivial);
    EXPECT_EQ(c.characterization, "{0}");
    EXPECT_EQ(classify_regime(3.0, 2.0, 0.4, 0.4).tag, RegimeCase::Case2Trivial);
    EXPECT_EQ(to_string(RegimeCase::Case2Trivial), "Case2-Trivial");
}

TEST(Multipliers, RegimeTieIsTrivial) {
    // (1-s)/p1 == (1-r)/p2 with p1 > p2: 0.6/3 == 0.4/2.
    EXPECT_EQ(classify_regime(3.0, 2.0, 0.4, 0.6).tag, RegimeCase::Case2Trivial);
    EXPECT_EQ(classify_regime(2.0, 2.0, 0.6, 0.4).tag, RegimeCase::Case3Trivial);
    EXPECT_EQ(classify_regime(3.0, 2.0, 0.1, 0.4).tag, RegimeCase::Case2Trivial);
    EXPECT_EQ(classify_regime(4.0, 2.0, 0.2, 0.6).tag, RegimeCase::Case2Trivial);
    EXPECT_THROW(classify_regime(1.0, 2.0, 0.5, 0.5), std::invalid_argument);
    EXPECT_THROW(classify_regime(2.0, 2.0, 0.5, 1.0), std::invalid_argument);
}

TEST(Multipliers, Verdicts) {
    const QuadratureSpec q;
    const SupSearchSpec search;
    EXPECT_EQ(multiplier_check(BoundaryFunction::constant(1.0), 2.0, 2.0, 0.5, 0.5, search, q).verdict, Verdict::True);
    EXPECT_EQ(multiplier_check(BoundaryFunction::constant(1.0), 3.0, 2.0, 0.2, 0.5, search, q).verdict, Verdict::True);
    const MultiplierReport e = multiplier_check(closed::exp_mode(1), 2.0, 2.0, 0.5, 0.5, search, q);
    EXPECT_EQ(e.verdict, Verdict::True);
    EXPECT_NEAR(e.linf_bound, 1.0, 1e-12);
    const MultiplierReport st = multiplier_check(closed::sign_step(), 2.0, 2.0, 0.5, 0.5, search, q);
    EXPECT_EQ(st.verdict, Verdict::False);
    EXPECT_TRUE(st.log_condition.divergent);
    const MultiplierReport triv = multiplier_check(closed::exp_mode(1), 2.0, 2.0, 0.6, 0.4, search, q);
    EXPECT_EQ(triv.verdict, Verdict::OnlyZero);
    EXPECT_EQ(to_string(triv.verdict), "only f = 0");
}

TEST(Multipliers, EssentialRanges) {
    const EssentialRangeOptions opts;
    const EssentialRangeEstimate five = essential_range(SampledGrid{std::vector<cplx>(1024, cplx(5.0, 0.0))}, opts);
    ASSERT_EQ(five.cells.size(), 1u);
    EXPECT_LT(five.distance(5.0), 1e-12);

    const EssentialRangeEstimate two =
        essential_range(SampledGrid{closed::two_valued_step(1.0, cplx(0.0, 1.0)).sample(4096)}, opts);
    ASSERT_EQ(two.cells.size(), 2u);
    EXPECT_LT(two.distance(1.0), 1e-12);
    EXPECT_LT(two.distance(cplx(0.0, 1.0)), 1e-12);

    const EssentialRangeEstimate circle = essential_range(SampledGrid{closed::exp_mode(1).sample(4096)}, opts);
    double hd = 0.0;
    for (const cplx& c : circle.cells) hd = std::max(hd, std::abs(std::abs(c) - 1.0));
    for (int k = 0; k < 360; ++k) hd = std::max(hd, circle.distance(std::polar(1.0, kTwoPi * k / 360.0)));
    EXPECT_LE(hd, opts.cell + 2.0 * opts.cell);

    EssentialRangeOptions bad;
    bad.threshold = 1.0 / 1024.0;
    EXPECT_THROW(essential_range(SampledGrid{std::vector<cplx>(1024)}, bad), std::invalid_argument);
}

TEST(Multipliers, SingleOutlierIsNotEssential) {
    std::vector<cplx> v(4096, cplx(0.0, 0.0));
    v[17] = 3.0;
    const EssentialRangeEstimate est = essential_range(SampledGrid{v});
    EXPECT_EQ(est.cells.size(), 1u);
    EXPECT_GT(est.distance(3.0), 2.0);
}

TEST(Multipliers, BoundarySpectrum) {
    const QuadratureSpec q;
    const SupSearchSpec search;
    const SpectrumReport c = spectrum_boundary(BoundaryFunction::constant(cplx(0.5, 0.5)), SpaceParams{}, search, q);
    ASSERT_EQ(c.set.cells.size(), 1u);
    EXPECT_LT(c.set.distance(cplx(0.5, 0.5)), 1e-12);
    const SpectrumReport t = spectrum_boundary(closed::exp_mode(1), SpaceParams{}, search, q);
    ASSERT_FALSE(t.probes.empty());
    for (const ProbeResult& p : t.probes) EXPECT_TRUE(p.passed);
    EXPECT_THROW(spectrum_boundary(closed::sign_step(), SpaceParams{}, search, q), std::domain_error);
}

TEST(Multipliers, AnalyticSpectrum) {
    const SpectrumReport c = spectrum_analytic(AnalyticFunction(TaylorSeries{{cplx(2.0, 0.0)}}));
    EXPECT_FALSE(c.unbounded);
    for (const cplx& z : c.set.cells) EXPECT_LE(std::abs(z - 2.0), 2.0 * c.set.cell);
    const SpectrumReport d = spectrum_analytic(AnalyticFunction(TaylorSeries{{0.0, 1.0}}));
    double worst = 0.0;
    for (const cplx& z : d.set.cells) worst = std::max(worst, std::abs(z) - 1.0);
    EXPECT_LE(worst, 2.0 * d.set.cell);
    for (int k = 0; k < 50; ++k) {
        EXPECT_LE(d.set.distance(std::polar(0.02 * k, 0.37 * k)), 1e-12);
    }
}
