#include <gtest/gtest.h>

#include <random>

#include "qspace/functions.hpp"

using namespace qspace;

namespace {

FourierCoefficients cos_plus_cos2() {
    FourierCoefficients c(2, std::vector<cplx>(5));
    c.at_mut(1) = c.at_mut(-1) = 0.5;
    c.at_mut(2) = c.at_mut(-2) = 0.5;
    return c;
}

}  // namespace

TEST(Functions, PoissonOfConstantAndCosine) {
    const BoundaryFunction seven = BoundaryFunction::constant(7.0);
    const BoundaryFunction c = closed::cos_mode(1);
    const BoundaryFunction cf = BoundaryFunction::fourier(FourierCoefficients(1, {0.5, 0.0, 0.5}));
    for (double r : {0.0, 0.3, 0.9, 0.999}) {
        for (double th : {0.0, 1.0, 4.0}) {
            const DiskPoint z(std::polar(r, th));
            EXPECT_NEAR(std::abs(poisson_extension(seven, z) - 7.0), 0.0, 1e-12);
            EXPECT_NEAR(std::abs(poisson_extension(c, z) - r * std::cos(th)), 0.0, 1e-10);
            EXPECT_NEAR(std::abs(poisson_extension(cf, z) - r * std::cos(th)), 0.0, 1e-12);
        }
    }
}

TEST(Functions, PoissonAtOriginIsSampleMean) {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    std::vector<cplx> v(64);
    cplx mean{};
    for (cplx& x : v) {
        x = cplx(g(rng), g(rng));
        mean += x;
    }
    mean /= 64.0;
    const BoundaryFunction f = BoundaryFunction::samples(v);
    EXPECT_NEAR(std::abs(poisson_extension(f, DiskPoint(cplx(0.0))) - mean), 0.0, 1e-12);
}

TEST(Functions, PoissonGradient) {
    EXPECT_NEAR(poisson_gradient(BoundaryFunction::constant(3.0), DiskPoint(cplx(0.2, 0.1))), 0.0, 1e-12);
    for (double r : {0.1, 0.5, 0.95}) {
        EXPECT_NEAR(poisson_gradient(closed::cos_mode(1), DiskPoint(std::polar(r, 0.7))), 1.0, 1e-10);
        const BoundaryFunction c1 = BoundaryFunction::fourier(FourierCoefficients(1, {0.5, 0.0, 0.5}));
        EXPECT_NEAR(poisson_gradient(c1, DiskPoint(std::polar(r, 0.7))), 1.0, 1e-10);
    }
    const BoundaryFunction c2 = BoundaryFunction::fourier(FourierCoefficients(2, {0.5, 0.0, 0.0, 0.0, 0.5}));
    EXPECT_NEAR(poisson_gradient(c2, DiskPoint(cplx(0.5, 0.0))), 1.0, 1e-12);
    EXPECT_NEAR(poisson_gradient(closed::cos_mode(2), DiskPoint(cplx(0.5, 0.0))), 1.0, 1e-10);
}

TEST(Functions, PoissonApproachesBoundaryData) {
    FourierCoefficients c(3, std::vector<cplx>(7));
    c.at_mut(0) = 1.0;
    c.at_mut(1) = cplx(0.3, 0.2);
    c.at_mut(-3) = cplx(-0.5, 0.1);
    const BoundaryFunction f = BoundaryFunction::fourier(c);
    double last = std::numeric_limits<double>::infinity();
    for (double r : {0.9, 0.99, 0.999}) {
        double dev = 0.0;
        for (int k = 0; k < 64; ++k) {
            const double th = kTwoPi * k / 64.0;
            dev = std::max(dev, std::abs(poisson_extension(f, DiskPoint(std::polar(r, th))) - f(th)));
        }
        EXPECT_LT(dev, last);
        last = dev;
    }
}

TEST(Functions, HarmonicConjugate) {
    FourierCoefficients c(1, {0.5, 0.0, 0.5});
    const FourierCoefficients h = harmonic_conjugate(c);
    const BoundaryFunction hf = BoundaryFunction::fourier(h);
    const BoundaryFunction zero = BoundaryFunction::fourier(harmonic_conjugate(FourierCoefficients(0, {2.0})));
    const BoundaryFunction both = BoundaryFunction::fourier(harmonic_conjugate(cos_plus_cos2()));
    for (double th : {0.0, 0.4, 2.0, 5.5}) {
        EXPECT_NEAR(std::abs(hf(th) - std::sin(th)), 0.0, 1e-14);
        EXPECT_NEAR(std::abs(zero(th)), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(both(th) - (std::sin(th) + std::sin(2.0 * th))), 0.0, 1e-14);
    }
    EXPECT_THROW(harmonic_conjugate(FourierCoefficients(1, {0.0, 0.0, cplx(0.0, 1.0)})), std::invalid_argument);
}

TEST(Functions, BlaschkeEvaluation) {
    const DiskPoint a(cplx(0.5, 0.0));
    BlaschkeProduct one{{a}};
    EXPECT_NEAR(std::abs(blaschke_eval(one, a)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(blaschke_eval(one, DiskPoint(cplx(0.0))) - 0.5), 0.0, 1e-15);

    const cplx a1(0.5, 0.0), a2(0.0, 0.5), z(0.9, 0.0);
    auto factor = [](cplx a, cplx z) { return std::abs(a) / a * (a - z) / (1.0 - std::conj(a) * z); };
    BlaschkeProduct two{{DiskPoint(a1), DiskPoint(a2)}};
    EXPECT_NEAR(std::abs(blaschke_eval(two, DiskPoint(z)) - factor(a1, z) * factor(a2, z)), 0.0, 1e-14);

    for (double th : {0.1, 2.0, 4.0}) {
        EXPECT_NEAR(std::abs(AnalyticFunction(two).boundary_value(th)), 1.0, 1e-14);
    }
}

TEST(Functions, IntegralMeans) {
    EXPECT_NEAR(integral_means(AnalyticFunction(TaylorSeries{{cplx(3.0, 4.0)}}), 2.0, 0.7), 5.0, 1e-12);
    EXPECT_NEAR(integral_means(AnalyticFunction(TaylorSeries{{0.0, 1.0}}), 2.0, 0.7), 0.7, 1e-12);
    const LacunarySeries lac{0, {1.0, cplx(0.0, 0.5), 0.25, cplx(-0.1, 0.2)}};
    for (double r : {0.3, 0.8, 0.95}) {
        double parseval = 0.0;
        for (std::size_t k = 0; k < lac.c.size(); ++k) {
            parseval += std::norm(lac.c[k]) * std::pow(r, 2.0 * std::exp2(static_cast<double>(k)));
        }
        EXPECT_NEAR(integral_means(AnalyticFunction(lac), 2.0, r), std::sqrt(parseval), 1e-12);
    }
}

TEST(Functions, ArcAverage) {
    EXPECT_NEAR(std::abs(arc_average(BoundaryFunction::constant(cplx(2.0, -1.0)), Arc(1.0, 0.3)) - cplx(2.0, -1.0)),
                0.0, 1e-12);
    EXPECT_NEAR(std::abs(arc_average(closed::cos_mode(1), Arc::full_circle())), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(arc_average(closed::cos_mode(1), Arc(0.0, kPi)) - 2.0 / kPi), 0.0, 1e-8);
}

TEST(Functions, Rademacher) {
    EXPECT_EQ(rademacher(0, 0.25), 1);
    EXPECT_EQ(rademacher(0, 0.75), -1);
    EXPECT_EQ(rademacher(0, 0.5), 0);
    EXPECT_EQ(rademacher(0, 0.0), 0);
    EXPECT_EQ(rademacher(3, 0.3), 1);
    EXPECT_EQ(rademacher(3, 0.3), rademacher(0, std::fmod(8 * 0.3, 1.0)));
}

TEST(Functions, RepresentationsAgree) {
    const BoundaryFunction closed_cos = closed::cos_mode(2, 1.5);
    const BoundaryFunction samples = BoundaryFunction::samples(closed_cos.sample(64));
    for (double r : {0.2, 0.8}) {
        const DiskPoint z(std::polar(r, 1.3));
        const ExtensionJet a = extension_jet(closed_cos, z), b = extension_jet(samples, z);
        EXPECT_NEAR(std::abs(a.value - b.value), 0.0, 1e-10);
        EXPECT_NEAR(a.gradient_norm(), b.gradient_norm(), 1e-9);
    }
    EXPECT_THROW(BoundaryFunction::samples(std::vector<cplx>(48)), std::invalid_argument);
    EXPECT_THROW(BoundaryFunction::samples(std::vector<cplx>(8)), std::invalid_argument);
}

TEST(Functions, MobiusCompositionExtension) {
    const BoundaryFunction f = closed::cos_mode(1);
    const DiskPoint a(cplx(0.4, -0.2));
    const BoundaryFunction g = compose_mobius(f, a);
    const MobiusMap m(a);
    const DiskPoint z(cplx(0.1, 0.5));
    // Harmonic extension commutes with the automorphism.
    EXPECT_NEAR(std::abs(poisson_extension(g, z) - m(z.value()).real()), 0.0, 1e-9);
}

TEST(Functions, AnalyticCompletion) {
    const TaylorSeries h = analytic_completion(FourierCoefficients(1, {0.5, 2.0, 0.5}));
    ASSERT_GE(h.a.size(), 2u);
    EXPECT_NEAR(std::abs(h.a[0] - 2.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(h.a[1] - 1.0), 0.0, 1e-15);
}
