#include "qspace/harness.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qspace/parallel.hpp"
#include "sup_search.hpp"

namespace qspace {

namespace {

HarnessResult make_result(std::string name, const IntegralEstimate& lhs, const IntegralEstimate& rhs) {
    HarnessResult res;
    res.lemma = std::move(name);
    res.lhs = lhs.value;
    res.rhs = rhs.value;
    res.converged = lhs.converged && rhs.converged;
    if (res.rhs > 0.0) {
        res.ratio = res.lhs / res.rhs;
    } else {
        res.ratio = res.lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    }
    return res;
}

std::optional<Arc> box_region(const Arc& arc) {
    if (arc.is_full()) return std::nullopt;
    return arc;
}

HarnessResult run(const ELInput& in, const QuadratureSpec& qspec) {
    in.params.validate();
    const double p = in.params.p, s = in.params.s;
    const IntegralEstimate lhs = arc_double_integral(in.f, in.arc, p, s, qspec);
    const Arc outer = scaled_arc(in.arc, 3.0).arc;
    const IntegralEstimate rhs = disk_weighted_integral(gradient_power_density(in.f, p), p - 2.0 + s,
                                                        box_region(outer), qspec, RadialWeight::OneMinusModulusSq);
    return make_result("EL", lhs, rhs);
}

HarnessResult run(const StLInput& in, const QuadratureSpec& qspec) {
    in.params.validate();
    if (std::abs(angle_offset(in.inner.center(), in.outer.center())) > 1e-12) {
        throw std::invalid_argument("StL: the two arcs must share a center");
    }
    if (in.outer.length() < 3.0 * in.inner.length() * (1.0 - 1e-12)) {
        throw std::invalid_argument("StL: need |J| >= 3|I|");
    }
    const double p = in.params.p, s = in.params.s;
    const IntegralEstimate lhs = disk_weighted_integral(gradient_power_density(in.f, p), p - 2.0 + s,
                                                        box_region(in.inner), qspec, RadialWeight::OneMinusModulus);
    IntegralEstimate rhs = arc_double_integral(in.f, in.outer, p, s, qspec);

    const cplx fJ = arc_average(in.f, in.outer);
    const double t0 = in.outer.length() / 3.0;
    const double c = in.outer.center();
    double tail = 0.0;
    if (t0 < kPi) {
        auto g = [&](double t) { return (std::abs(in.f(c + t) - fJ) + std::abs(in.f(c - t) - fJ)) / (t * t); };
        double err = 0.0;
        tail = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g, t0, kPi, 15, 1e-10, &err);
    }
    rhs.value += std::pow(in.inner.length(), p + s) * std::pow(tail, p);
    return make_result("StL", lhs, rhs);
}

HarnessResult run(const LInInput& in, const QuadratureSpec& qspec) {
    if (!(in.q > 1.0) || !(in.r > 0.0 && in.r < 1.0)) {
        throw std::invalid_argument("LIn: need q > 1 and 0 < r < 1");
    }
    const double q = in.q, r = in.r;
    const BoundaryFunction& f = in.f;
    std::vector<cplx> fq = f.sample(2048);
    for (cplx& v : fq) v = std::pow(std::abs(v), q);
    const BoundaryFunction Fq = BoundaryFunction::samples(std::move(fq));
    const BlaschkeProduct S = in.S;
    const DiskPoint a = in.a;

    RingDensity density = [Fq, S, a, q, r](double y, double theta0, double dtheta, std::size_t n, double* out) {
        const auto jets = ring_jets(Fq, y, theta0, dtheta, n);
        for (std::size_t m = 0; m < n; ++m) {
            const DiskPoint z = DiskPoint::polar(y, theta0 + (static_cast<double>(m) + 0.5) * dtheta);
            const double oneS = blaschke_one_minus_modulus_sq(S, z);
            const double gapS = oneS / (1.0 + std::sqrt(std::max(0.0, 1.0 - oneS)));
            const double oneSig = one_minus_mobius_sq(a, z);
            const double gapSig = oneSig / (1.0 + std::sqrt(std::max(0.0, 1.0 - oneSig)));
            out[m] = std::max(0.0, jets[m].value.real()) * std::pow(gapS / y, q) * std::pow(gapSig / y, r);
        }
    };
    const IntegralEstimate lhs =
        disk_weighted_integral(density, q - 2.0 + r, std::nullopt, qspec, RadialWeight::OneMinusModulus);
    const BoundaryFunction Sb = AnalyticFunction(S).boundary();
    const IntegralEstimate rhs =
        mobius_pair_integral(Sb, a, q, r, qspec, [&f, q](double th) { return std::pow(std::abs(f(th)), q); });
    return make_result("LIn", lhs, rhs);
}

HarnessResult run(const LPZInput& in, const QuadratureSpec& qspec) {
    if (!(in.p > 1.0) || !(in.s > 0.0)) throw std::invalid_argument("LPZ: need p > 1 and s > 0");
    in.mu.validate();
    std::vector<double> terms(in.mu.atoms.size());
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const Atom& at = in.mu.atoms[k];
        terms[k] = at.mass * std::pow(std::abs(in.h.value(at.z.value())), in.p);
    }
    IntegralEstimate lhs{pairwise_sum(terms), 0.0, true};
    IntegralEstimate rhs = bp_s_integral(in.h, in.p, in.s, qspec);
    rhs.value += std::pow(std::abs(in.h.value(0.0)), in.p);
    return make_result("LPZ", lhs, rhs);
}

HarnessResult run(const BMOIncInput& in, const QuadratureSpec& qspec) {
    in.params.validate();
    IntegralEstimate lhs{arc_mean_oscillation(in.f, in.arc, 1.0, qspec.M), 0.0, true};
    IntegralEstimate rhs = qps_arc_functional(in.f, in.arc, in.params, qspec);
    rhs.value = std::pow(rhs.value, 1.0 / in.params.p);
    return make_result("BMO-inc", lhs, rhs);
}

}  // namespace

HarnessResult inequality_harness(const HarnessInput& input, const QuadratureSpec& qspec) {
    qspec.validate();
    return std::visit([&](const auto& in) { return run(in, qspec); }, input);
}

std::string harness_name(const HarnessInput& input) {
    static const char* names[] = {"EL", "StL", "LIn", "LPZ", "BMO-inc"};
    return names[input.index()];
}

}  // namespace qspace
