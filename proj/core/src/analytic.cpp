#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qspace/functions.hpp"
#include "qspace/parallel.hpp"

namespace qspace {

namespace {

cplx taylor_value(const std::vector<cplx>& a, cplx z) {
    cplx acc{};
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
    return acc;
}

cplx taylor_derivative(const std::vector<cplx>& a, cplx z) {
    cplx acc{};
    for (std::size_t n = a.size(); n-- > 1;) acc = acc * z + static_cast<double>(n) * a[n];
    return acc;
}

cplx power_of_two_power(cplx z, int k) {
    for (int i = 0; i < k; ++i) z *= z;
    return z;
}

cplx lacunary_value(const LacunarySeries& l, cplx z) {
    cplx acc{};
    cplx w = power_of_two_power(z, l.first_k);
    for (const cplx& c : l.c) {
        acc += c * w;
        w *= w;
    }
    return acc;
}

cplx lacunary_derivative(const LacunarySeries& l, cplx z) {
    cplx acc{};
    // d_k = 2^k z^{2^k - 1}; d_{k+1} = 2 d_k z^{2^k}.
    cplx d = 1.0;
    cplx w = z;  // z^{2^k}
    for (int k = 0; k < l.first_k + static_cast<int>(l.c.size()); ++k) {
        if (k >= l.first_k) acc += l.c[static_cast<std::size_t>(k - l.first_k)] * d;
        d *= 2.0 * w;
        w *= w;
    }
    return acc;
}

// Blaschke factor (|a|/a)(a - z)/(1 - conj(a) z) and its derivative; z for a = 0.
std::pair<cplx, cplx> blaschke_factor(const DiskPoint& a, cplx z) {
    if (a.depth() == 1.0) return {z, 1.0};
    const cplx av = a.value();
    const cplx unit = std::polar(1.0, -a.angle());
    const cplx den = 1.0 - std::conj(av) * z;
    return {unit * (av - z) / den, -unit * a.one_minus_modulus_sq() / (den * den)};
}

}  // namespace

AnalyticKind AnalyticFunction::kind() const {
    switch (rep_.index()) {
        case 0: return AnalyticKind::Taylor;
        case 1: return AnalyticKind::Lacunary;
        case 2: return AnalyticKind::Blaschke;
        default: return AnalyticKind::Closed;
    }
}

cplx AnalyticFunction::value(cplx z) const {
    if (const auto* t = taylor()) return taylor_value(t->a, z);
    if (const auto* l = lacunary()) return lacunary_value(*l, z);
    if (const auto* b = blaschke()) return blaschke_jet(*b, z).first;
    return closed()->value(z);
}

cplx AnalyticFunction::derivative(cplx z) const {
    if (const auto* t = taylor()) return taylor_derivative(t->a, z);
    if (const auto* l = lacunary()) return lacunary_derivative(*l, z);
    if (const auto* b = blaschke()) return blaschke_jet(*b, z).second;
    return closed()->derivative(z);
}

cplx AnalyticFunction::boundary_value(double theta) const { return value(std::polar(1.0, theta)); }

BoundaryFunction AnalyticFunction::boundary() const {
    ClosedForm g;
    const AnalyticFunction h = *this;
    switch (kind()) {
        case AnalyticKind::Blaschke: g.name = "blaschke_boundary"; break;
        case AnalyticKind::Taylor: g.name = "taylor_boundary"; break;
        case AnalyticKind::Lacunary: g.name = "lacunary_boundary"; break;
        case AnalyticKind::Closed: g.name = closed()->name + "_boundary"; break;
    }
    g.eval = [h](double t) { return h.boundary_value(t); };
    g.extension = [h](const DiskPoint& p) {
        const cplx z = p.value();
        return ExtensionJet{h.value(z), h.derivative(z), 0.0, true};
    };
    return BoundaryFunction::closed(std::move(g));
}

std::pair<cplx, cplx> blaschke_jet(const BlaschkeProduct& B, cplx z) {
    cplx P = 1.0, dP = 0.0;
    for (const DiskPoint& a : B.zeros) {
        const auto [f, df] = blaschke_factor(a, z);
        dP = dP * f + P * df;
        P *= f;
    }
    return {P, dP};
}

cplx blaschke_eval(const BlaschkeProduct& B, const DiskPoint& z) { return blaschke_jet(B, z.value()).first; }

double blaschke_one_minus_modulus_sq(const BlaschkeProduct& B, const DiskPoint& z) {
    double log_mod_sq = 0.0;
    for (const DiskPoint& a : B.zeros) {
        const double q = a.depth() == 1.0 ? z.one_minus_modulus_sq() : one_minus_mobius_sq(a, z);
        if (q >= 1.0) return 1.0;
        log_mod_sq += std::log1p(-q);
    }
    return -std::expm1(log_mod_sq);
}

double integral_means(const AnalyticFunction& h, double p, double r) {
    if (!(p > 0.0)) throw std::invalid_argument("integral_means: p must be positive");
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("integral_means: r must lie in [0, 1)");
    // Smallest node count that resolves every frequency with non-negligible weight.
    std::size_t freq = 1;
    if (const auto* t = h.taylor()) {
        double scale = 0.0;
        for (const cplx& a : t->a) scale = std::max(scale, std::abs(a));
        for (std::size_t n = 0; n < t->a.size(); ++n) {
            if (std::abs(t->a[n]) * std::pow(r, static_cast<double>(n)) > 1e-17 * scale) freq = std::max(freq, n);
        }
    } else if (const auto* l = h.lacunary()) {
        double scale = 0.0;
        for (const cplx& c : l->c) scale = std::max(scale, std::abs(c));
        for (std::size_t i = 0; i < l->c.size(); ++i) {
            const double f = std::ldexp(1.0, l->first_k + static_cast<int>(i));
            if (std::abs(l->c[i]) * std::pow(r, f) > 1e-17 * scale) freq = std::max(freq, static_cast<std::size_t>(f));
        }
    }
    std::size_t n = 256;
    while (n <= 4 * freq && n < (std::size_t{1} << 24)) n *= 2;
    auto mean_at = [&](std::size_t count) {
        std::vector<double> vals(count);
        parallel_for(count, [&](std::size_t k) {
            const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(count);
            vals[k] = std::pow(std::abs(h.value(std::polar(r, t))), p);
        });
        return pairwise_sum(vals) / static_cast<double>(count);
    };
    double prev = mean_at(n);
    while (n < (std::size_t{1} << 22)) {
        n *= 2;
        const double cur = mean_at(n);
        const bool done = std::abs(cur - prev) <= 1e-13 * std::max(std::abs(cur), 1e-300);
        prev = cur;
        if (done) break;
    }
    return std::pow(prev, 1.0 / p);
}

TaylorSeries analytic_completion(const FourierCoefficients& f) {
    if (!f.is_real(1e-10)) throw std::invalid_argument("analytic_completion: input is not real-valued");
    TaylorSeries t;
    t.a.resize(static_cast<std::size_t>(f.N) + 1);
    t.a[0] = f.at(0);
    for (int n = 1; n <= f.N; ++n) t.a[static_cast<std::size_t>(n)] = 2.0 * f.at(n);
    return t;
}

}  // namespace qspace
