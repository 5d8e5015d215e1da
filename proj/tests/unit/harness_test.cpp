#include <gtest/gtest.h>

#include <random>

#include "qspace/harness.hpp"

using namespace qspace;

TEST(Harness, ConstantGivesZeroRatio) {
    const QuadratureSpec q;
    const HarnessResult r = inequality_harness(ELInput{BoundaryFunction::constant(3.0), Arc(1.0, 0.5), {}}, q);
    EXPECT_EQ(r.lemma, "EL");
    EXPECT_EQ(r.lhs, 0.0);
    EXPECT_EQ(r.ratio, 0.0);
}

TEST(Harness, ElFamilyIsBounded) {
    const QuadratureSpec q;
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double C = 0.0;
    for (int i = 0; i < 10; ++i) {
        const HarnessResult r =
            inequality_harness(ELInput{closed::cos_mode(1), Arc(kTwoPi * u(rng), 0.05 + u(rng)), {}}, q);
        EXPECT_TRUE(std::isfinite(r.ratio));
        EXPECT_TRUE(r.converged);
        C = std::max(C, r.ratio);
    }
    EXPECT_GT(C, 0.0);
    EXPECT_LT(C, 10.0);
}

TEST(Harness, StlRequiresNestedArcs) {
    const QuadratureSpec q;
    EXPECT_THROW(inequality_harness(StLInput{closed::cos_mode(1), Arc(0.0, 0.5), Arc(0.0, 1.0), {}}, q),
                 std::invalid_argument);
    EXPECT_THROW(inequality_harness(StLInput{closed::cos_mode(1), Arc(0.0, 0.5), Arc(0.3, 1.5), {}}, q),
                 std::invalid_argument);
    const HarnessResult r = inequality_harness(StLInput{closed::cos_mode(1), Arc(0.0, 0.3), Arc(0.0, 0.9), {}}, q);
    EXPECT_GT(r.rhs, 0.0);
    EXPECT_LT(r.ratio, 1.0);
}

TEST(Harness, LpzWithIdentity) {
    const QuadratureSpec q;
    DiscretePointMeasure mu;
    for (int k = 1; k <= 30; ++k) {
        const double h = std::exp2(-k);
        mu.atoms.push_back({DiskPoint::polar(h, 0.3 * k), h * std::pow(std::log(2.0 / h), -2.0)});
    }
    const AnalyticFunction z(TaylorSeries{{0.0, 1.0}});
    const HarnessResult r = inequality_harness(LPZInput{z, mu, 2.0, 0.5}, q);
    double lhs = 0.0;
    for (const Atom& a : mu.atoms) lhs += a.mass * std::pow(a.z.modulus(), 2.0);
    EXPECT_NEAR(r.lhs, lhs, 1e-12 * lhs);
    EXPECT_NEAR(r.rhs, kPi / 1.5, 5e-3);
    EXPECT_LT(r.ratio, 1.0);
}

TEST(Harness, LinAndBmoInclusion) {
    const QuadratureSpec q;
    BlaschkeProduct S{{DiskPoint(cplx(0.5, 0.2)), DiskPoint(cplx(-0.3, 0.6))}};
    const HarnessResult lin =
        inequality_harness(LInInput{closed::cos_mode(1, 2.0), S, DiskPoint(cplx(0.2, 0.0)), 2.0, 0.5}, q);
    EXPECT_GT(lin.rhs, 0.0);
    EXPECT_TRUE(std::isfinite(lin.ratio));
    const HarnessResult bmo = inequality_harness(BMOIncInput{closed::sign_step(), Arc(0.0, 1.0), {}}, q);
    EXPECT_EQ(bmo.lemma, "BMO-inc");
    EXPECT_GT(bmo.lhs, 0.0);
    EXPECT_LT(bmo.ratio, 10.0);
}
