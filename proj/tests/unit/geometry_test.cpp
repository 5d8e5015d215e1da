#include <gtest/gtest.h>

#include <random>

#include "qspace/geometry.hpp"

using namespace qspace;

namespace {

cplx random_point(std::mt19937_64& rng, double rmax) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(rmax * std::sqrt(u(rng)), kTwoPi * u(rng));
}

}  // namespace

TEST(Geometry, MobiusValues) {
    const MobiusMap m(DiskPoint(cplx(0.5, 0.0)));
    EXPECT_NEAR(std::abs(m(0.0) - cplx(0.5, 0.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(m(0.5)), 0.0, 1e-15);
    // (a - z)/(1 - conj(a) z) worked out by hand for z = 0.5i.
    const cplx want = cplx(0.5, -0.5) / cplx(1.0, -0.25);
    const cplx got = m(cplx(0.0, 0.5));
    EXPECT_NEAR(got.real(), 0.58824, 5e-6);
    EXPECT_NEAR(got.imag(), -0.35294, 5e-6);
    EXPECT_NEAR(std::abs(got - want), 0.0, 1e-15);
}

TEST(Geometry, OneMinusMobiusSq) {
    const DiskPoint z(cplx(0.3, -0.4));
    EXPECT_NEAR(one_minus_mobius_sq(DiskPoint(cplx(0.0)), z), 1.0 - std::norm(z.value()), 1e-15);
    EXPECT_NEAR(one_minus_mobius_sq(z, z), 1.0, 1e-14);
    const DiskPoint a(cplx(0.9, 0.0)), w(cplx(0.0, 0.9));
    const double oracle = 0.19 * 0.19 / std::norm(1.0 - std::conj(a.value()) * w.value());
    EXPECT_NEAR(one_minus_mobius_sq(a, w), oracle, 1e-14);
    EXPECT_NEAR(one_minus_mobius_sq(a, w), 0.021798, 1e-6);
}

TEST(Geometry, MobiusInvolution) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const MobiusMap m(DiskPoint(random_point(rng, 0.999)));
        const DiskPoint z(random_point(rng, 0.999));
        EXPECT_LT(std::abs(m.apply(m.apply(z)).value() - z.value()), 1e-12);
    }
}

TEST(Geometry, DeepPointsKeepTheirDepth) {
    const DiskPoint deep = DiskPoint::polar(1e-30, 0.25);
    EXPECT_EQ(deep.depth(), 1e-30);
    EXPECT_NEAR(deep.one_minus_modulus_sq(), 2e-30, 1e-44);
    EXPECT_THROW(DiskPoint(cplx(1.0, 0.0)), std::domain_error);
    EXPECT_THROW(DiskPoint(cplx(1.0 - 1e-15, 0.0)), std::domain_error);
}

TEST(Geometry, ArcNormalization) {
    const Arc a(-0.5, 1.0);
    EXPECT_NEAR(a.center(), kTwoPi - 0.5, 1e-15);
    EXPECT_TRUE(a.contains_angle(-0.5));
    EXPECT_TRUE(a.contains_angle(-1.0));
    EXPECT_FALSE(a.contains_angle(0.0));
    EXPECT_FALSE(a.contains_angle(-1.0 - 1e-9));
    EXPECT_THROW(Arc(0.0, 0.0), std::invalid_argument);
    EXPECT_THROW(Arc(0.0, 7.0), std::invalid_argument);
}

TEST(Geometry, SectorContainment) {
    EXPECT_TRUE(sector_contains(Arc::full_circle(), DiskPoint(cplx(0.5, 0.0))));
    EXPECT_FALSE(sector_contains(Arc(0.0, 0.1), DiskPoint(cplx(0.0))));
    EXPECT_TRUE(sector_contains(Arc(0.0, kPi), DiskPoint(std::polar(0.9, kPi / 8))));
    EXPECT_FALSE(sector_contains(Arc(0.0, kPi), DiskPoint(std::polar(0.4, kPi / 8))));
}

TEST(Geometry, SectorsLieInTheirAnnulus) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 5000; ++i) {
        const Arc I(kTwoPi * u(rng), 0.01 + 6.0 * u(rng));
        const DiskPoint z(random_point(rng, 0.9999));
        if (sector_contains(I, z)) {
            EXPECT_GT(z.modulus(), 1.0 - I.length() / kTwoPi);
            EXPECT_TRUE(I.contains_angle(z.angle()));
        }
    }
}

TEST(Geometry, TangentialRegion) {
    const TangentialRegion omega(2.0, 1.0, 0.0);
    EXPECT_FALSE(omega.contains(DiskPoint(std::polar(0.99, 0.3))));
    EXPECT_TRUE(region_contains(TangentialRegion(2.0, 0.5, 1.0), DiskPoint(cplx(0.0))));
    for (double r : {0.0, 0.5, 0.9, 0.999999}) {
        EXPECT_TRUE(omega.contains(DiskPoint::polar(1.0 - r, 0.0)));
    }
}

TEST(Geometry, ScaledArc) {
    const Arc I(1.0, 0.2);
    const ScaledArc same = scaled_arc(I, 1.0);
    EXPECT_DOUBLE_EQ(same.arc.length(), 0.2);
    EXPECT_FALSE(same.clamped);
    const ScaledArc three = scaled_arc(I, 3.0);
    EXPECT_NEAR(three.arc.length(), 0.6, 1e-15);
    EXPECT_DOUBLE_EQ(three.arc.center(), 1.0);
    const ScaledArc big = scaled_arc(Arc(1.0, 3.0), 3.0);
    EXPECT_DOUBLE_EQ(big.arc.length(), kTwoPi);
    EXPECT_TRUE(big.clamped);
}

TEST(Geometry, StolzAndPseudoHyperbolic) {
    EXPECT_TRUE(stolz_contains(2.0, 0.0, DiskPoint(cplx(0.9, 0.0))));
    EXPECT_FALSE(stolz_contains(2.0, 0.0, DiskPoint(std::polar(0.99, 0.5))));
    const PseudoHyperbolicDisk E(DiskPoint(cplx(0.5, 0.0)), 0.3);
    EXPECT_TRUE(E.contains(DiskPoint(cplx(0.5, 0.0))));
    EXPECT_FALSE(E.contains(DiskPoint(cplx(-0.5, 0.0))));
}
