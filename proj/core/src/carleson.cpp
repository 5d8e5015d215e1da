#include "qspace/carleson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qspace/parallel.hpp"
#include "sup_search.hpp"

namespace qspace {

namespace {

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

std::size_t arc_index(double angle, int j) {
    const double count = std::ldexp(1.0, j);
    const double x = std::floor(wrap_angle(angle) / kTwoPi * count + 0.5);
    return static_cast<std::size_t>(x) % static_cast<std::size_t>(count);
}

CarlesonReport finish(CarlesonReport rep) {
    rep.slope = final_level_slope(rep.profile);
    rep.bounded = std::isnan(rep.slope) || rep.slope >= -0.05;
    return rep;
}

}  // namespace

void DiscretePointMeasure::validate() const {
    for (const Atom& a : atoms) {
        if (!(a.mass >= 0.0) || !std::isfinite(a.mass)) {
            throw std::invalid_argument("DiscretePointMeasure: masses must be finite and non-negative");
        }
    }
}

double DiscretePointMeasure::total_mass() const {
    std::vector<double> m(atoms.size());
    for (std::size_t i = 0; i < atoms.size(); ++i) m[i] = atoms[i].mass;
    return pairwise_sum(m);
}

double DiscretePointMeasure::sector_mass(const Arc& arc) const {
    const CarlesonSector S(arc);
    std::vector<double> m;
    for (const Atom& a : atoms) {
        if (S.contains(a.z)) m.push_back(a.mass);
    }
    return pairwise_sum(m);
}

double DiscretePointMeasure::dominant_angle() const {
    if (atoms.empty()) return 0.0;
    std::vector<std::size_t> idx(atoms.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return atoms[a].z.depth() < atoms[b].z.depth(); });
    const std::size_t deep = std::max<std::size_t>(1, idx.size() / 10);
    std::size_t best = idx[0];
    for (std::size_t i = 0; i < deep; ++i) {
        if (atoms[idx[i]].mass > atoms[best].mass) best = idx[i];
    }
    return atoms[best].z.angle();
}

double final_level_slope(const std::vector<double>& profile, int count) {
    std::vector<double> x, y;
    const int n = static_cast<int>(profile.size());
    for (int j = std::max(0, n - count); j < n; ++j) {
        if (profile[static_cast<std::size_t>(j)] > 0.0) {
            x.push_back(std::log(std::ldexp(kTwoPi, -j)));
            y.push_back(std::log(profile[static_cast<std::size_t>(j)]));
        }
    }
    if (x.size() < 2) return std::numeric_limits<double>::quiet_NaN();
    return ls_slope(x, y);
}

CarlesonReport to_carleson_report(const SeminormReport& rep) {
    CarlesonReport c;
    c.value = rep.value;
    c.witness = rep.witness;
    c.profile = rep.profile;
    c.quadrature_converged = rep.quadrature_converged;
    return finish(std::move(c));
}

CarlesonReport log_carleson_sup(const DiscretePointMeasure& mu, double s, double alpha, const SupSearchSpec& search,
                                bool mobius) {
    mu.validate();
    search.validate();
    if (!(s > 0.0)) throw std::invalid_argument("carleson test: s must be positive");
    if (!(alpha >= 0.0)) throw std::invalid_argument("carleson test: alpha must be non-negative");
    if (mobius) {
        auto term = [&](const DiskPoint& a) {
            const double w = a.one_minus_modulus_sq();
            std::vector<double> t(mu.atoms.size());
            for (std::size_t k = 0; k < mu.atoms.size(); ++k) {
                const Atom& at = mu.atoms[k];
                t[k] = at.mass * std::pow(w / one_minus_conj_product_sq(a, at.z), s);
            }
            double v = pairwise_sum(t);
            if (alpha > 0.0) {
                const double l = std::log(2.0 / w);
                v *= std::pow(l, alpha);
            }
            return IntegralEstimate{v, 0.0, true};
        };
        return to_carleson_report(detail::a_grid_sup(term, search));
    }
    const int J = search.J_max;
    std::vector<std::vector<double>> mass(static_cast<std::size_t>(J) + 1);
    for (int j = 0; j <= J; ++j) mass[static_cast<std::size_t>(j)].assign(std::size_t{1} << j, 0.0);
    for (const Atom& at : mu.atoms) {
        for (int j = 0; j <= J; ++j) {
            if (!(at.z.depth() < std::ldexp(1.0, -j))) break;
            mass[static_cast<std::size_t>(j)][arc_index(at.z.angle(), j)] += at.mass;
        }
    }
    CarlesonReport rep;
    rep.profile.assign(static_cast<std::size_t>(J) + 1, 0.0);
    double best = -1.0;
    for (int j = 0; j <= J; ++j) {
        const double len = std::ldexp(kTwoPi, -j);
        const double scale = std::pow(len, -s) * log_factor(len, alpha);
        for (std::size_t k = 0; k < mass[static_cast<std::size_t>(j)].size(); ++k) {
            const double v = mass[static_cast<std::size_t>(j)][k] * scale;
            auto& slot = rep.profile[static_cast<std::size_t>(j)];
            slot = std::max(slot, v);
            if (v > best) {
                best = v;
                rep.witness.arc = dyadic_arc(j, k);
            }
        }
    }
    rep.value = *std::max_element(rep.profile.begin(), rep.profile.end());
    return finish(std::move(rep));
}

CarlesonReport sector_carleson_sup(const DiscretePointMeasure& mu, double s, const SupSearchSpec& search) {
    return log_carleson_sup(mu, s, 0.0, search, false);
}

CarlesonReport mobius_carleson_sup(const DiscretePointMeasure& mu, double s, const SupSearchSpec& search) {
    return log_carleson_sup(mu, s, 0.0, search, true);
}

CarlesonReport gradient_carleson(const BoundaryFunction& f, double p, double s, double alpha,
                                 const SupSearchSpec& search, const QuadratureSpec& qspec) {
    const SpaceParams params{p, s};
    params.validate();
    search.validate();
    if (!(alpha >= 0.0)) throw std::invalid_argument("gradient_carleson: alpha must be non-negative");
    return to_carleson_report(detail::sector_sup(gradient_power_density(f, p), p - 2.0 + s, s, alpha, search.J_max,
                                                 qspec, RadialWeight::OneMinusModulusSq));
}

DiscretePointMeasure blaschke_zero_measure(const std::vector<DiskPoint>& zeros, double exponent,
                                           std::optional<double> accumulation_angle) {
    if (!(exponent > 0.0 && exponent < 1.0)) {
        throw std::invalid_argument("blaschke_zero_measure: exponent must lie in (0, 1)");
    }
    DiscretePointMeasure mu;
    mu.atoms.reserve(zeros.size());
    for (const DiskPoint& z : zeros) mu.atoms.push_back({z, std::pow(z.depth(), exponent)});
    mu.accumulation_angle = accumulation_angle;
    return mu;
}

double carleson_trend(const DiscretePointMeasure& mu, double s, double theta, const std::vector<int>& levels) {
    mu.validate();
    std::vector<double> x, y;
    for (int j : levels) {
        if (j < 0 || j > 60) throw std::invalid_argument("carleson_trend: level out of range");
        const double len = std::ldexp(kTwoPi, -j);
        const double m = mu.sector_mass(Arc(theta, len));
        if (m > 0.0) {
            x.push_back(std::log(len));
            y.push_back(std::log(m / std::pow(len, s)));
        }
    }
    if (x.size() < 3) throw std::invalid_argument("carleson_trend: fewer than three levels carry mass");
    return ls_slope(x, y);
}

}  // namespace qspace
