#include "qspace/constructions.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qspace/parallel.hpp"

namespace qspace {

bool KCParams::admissible(double s, double r, double t, double eps) {
    if (!(0.0 < r && r < s && s < 1.0)) return false;
    if (!(0.0 < t && t < 1.0)) return false;
    return r * (1.0 - t) < eps && eps < std::min(r, s * (1.0 - t));
}

KCParams::KCParams(double s_, double r_, double t_, double eps_, double theta_, std::size_t K_)
    : s(s_), r(r_), t(t_), eps(eps_), theta(theta_), K(K_) {
    if (!admissible(s, r, t, eps)) {
        throw std::invalid_argument("KCParams: need 0 < r < s < 1, 0 < t < 1 and r(1-t) < eps < min(r, s(1-t))");
    }
    if (K < 1) throw std::invalid_argument("KCParams: K must be positive");
}

PointSequence kc_sequence(const KCParams& params) {
    PointSequence seq;
    seq.points.reserve(params.K);
    seq.points.push_back(DiskPoint(cplx{}));
    for (std::size_t k = 2; k <= params.K; ++k) {
        const double lk = std::log(static_cast<double>(k));
        const double depth = std::exp(-lk / params.eps);
        const double angle = std::exp(-params.t * lk / params.eps) + params.theta;
        seq.points.push_back(DiskPoint::polar(depth, angle));
    }
    seq.accumulation_angle = wrap_angle(params.theta);
    return seq;
}

namespace {

void check_exponents(double p, double s, const char* who) {
    if (!(p > 1.0) || !(s > 0.0 && s < 1.0)) {
        throw std::invalid_argument(std::string(who) + ": need p > 1 and 0 < s < 1");
    }
}

}  // namespace

LacunarySeries lacunary_g(double p1, double p2, double s, double r, int K, bool* separating) {
    check_exponents(p1, s, "lacunary_g");
    check_exponents(p2, r, "lacunary_g");
    if (K < 1) throw std::invalid_argument("lacunary_g: K must be positive");
    const double e = 0.5 * ((1.0 - s) / p1 + (1.0 - r) / p2);
    if (separating) *separating = (1.0 - s) / p1 <= (1.0 - r) / p2;
    LacunarySeries g;
    g.first_k = 0;
    g.c.resize(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) g.c[static_cast<std::size_t>(k)] = std::exp2(-e * k);
    return g;
}

LacunarySeries lacunary_h(double p1, double p2, double s, int K) {
    check_exponents(p1, s, "lacunary_h");
    if (!(p2 > 1.0)) throw std::invalid_argument("lacunary_h: need p2 > 1");
    if (!(p1 > p2)) throw std::invalid_argument("lacunary_h: need p1 > p2");
    if (K < 1) throw std::invalid_argument("lacunary_h: K must be positive");
    LacunarySeries h;
    h.first_k = 1;
    h.c.resize(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k) {
        h.c[static_cast<std::size_t>(k - 1)] = std::exp2(-k * (1.0 - s) / p1) * std::pow(k, -1.0 / p2);
    }
    return h;
}

AnalyticFunction log_test_function(const DiskPoint& w, int taylor_terms) {
    const cplx wb = std::conj(w.value());
    ClosedAnalytic g;
    g.name = "log_test";
    g.value = [wb](cplx z) { return std::log(2.0) - std::log(1.0 - wb * z); };
    g.derivative = [wb](cplx z) { return wb / (1.0 - wb * z); };
    g.taylor.resize(static_cast<std::size_t>(std::max(taylor_terms, 1)));
    g.taylor[0] = std::log(2.0);
    cplx pw = 1.0;
    for (std::size_t n = 1; n < g.taylor.size(); ++n) {
        pw *= wb;
        g.taylor[n] = pw / static_cast<double>(n);
    }
    g.params = {{"w", {w.value().real(), w.value().imag()}}};
    return AnalyticFunction(std::move(g));
}

PointSequence zero_set_sequence(double t, std::size_t N) {
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("zero_set_sequence: need 0 < t < 1");
    PointSequence seq;
    double harmonic = 0.0;
    for (std::size_t n = 2; n <= N; ++n) {
        const double dn = static_cast<double>(n);
        harmonic += 1.0 / (dn - 1.0);
        seq.points.push_back(DiskPoint::polar(std::pow(dn, -1.0 / t), harmonic + 0.5 / dn));
    }
    return seq;
}

LacunarySeries rademacher_randomization(const LacunarySeries& coeffs, double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("rademacher_randomization: need t in [0, 1]");
    LacunarySeries out = coeffs;
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        out.c[i] *= static_cast<double>(rademacher(coeffs.first_k + static_cast<int>(i), t));
    }
    return out;
}

KhinchineSample khinchine_moment(const std::vector<cplx>& coeffs, double p, std::size_t samples, std::uint64_t seed) {
    if (!(p > 0.0)) throw std::invalid_argument("khinchine_moment: need p > 0");
    if (samples == 0) throw std::invalid_argument("khinchine_moment: need at least one sample");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> vals(samples);
    for (double& v : vals) {
        const double t = unif(rng);
        cplx sum{};
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            sum += static_cast<double>(rademacher(static_cast<int>(k) + 1, t)) * coeffs[k];
        }
        v = std::pow(std::abs(sum), p);
    }
    KhinchineSample out;
    out.moment = pairwise_sum(vals) / static_cast<double>(samples);
    double l2 = 0.0;
    for (const cplx& c : coeffs) l2 += std::norm(c);
    out.l2 = std::sqrt(l2);
    out.ratio = out.l2 > 0.0 ? out.moment / std::pow(out.l2, p) : 0.0;
    return out;
}

}  // namespace qspace
