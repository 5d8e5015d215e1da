#include "qspace/seminorms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qspace/parallel.hpp"
#include "sup_search.hpp"

namespace qspace {

void SpaceParams::validate() const {
    if (!(p > 1.0)) throw std::invalid_argument("SpaceParams: p must exceed 1");
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("SpaceParams: s must lie in (0, 1)");
}

void SupSearchSpec::validate() const {
    if (J_max < 6) throw std::invalid_argument("SupSearchSpec: J_max must be at least 6");
    if (J_max > 16) throw std::invalid_argument("SupSearchSpec: J_max above 16 is not supported");
    if (refine_rounds < 0) throw std::invalid_argument("SupSearchSpec: refine_rounds must be non-negative");
}

void apply_profile_flags(SeminormReport& report) {
    const auto& pr = report.profile;
    const std::size_t n = pr.size();
    std::vector<double> running(n);
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        m = std::max(m, pr[i]);
        running[i] = m;
    }
    report.converged = n < 3 || running[n - 1] <= 1.05 * running[n - 3];
    report.divergent = n >= 3 && !report.converged && pr[n - 3] < pr[n - 2] && pr[n - 2] < pr[n - 1];
}

std::vector<DiskPoint> a_grid_level(int j) {
    if (j == 0) return {DiskPoint::polar(1.0, 0.0)};
    const std::size_t count = std::size_t{4} << j;
    std::vector<DiskPoint> pts;
    pts.reserve(count);
    const double depth = std::ldexp(1.0, -j);
    for (std::size_t m = 0; m < count; ++m) {
        pts.push_back(DiskPoint::polar(depth, kTwoPi * static_cast<double>(m) / static_cast<double>(count)));
    }
    return pts;
}

namespace detail {

SeminormReport a_grid_sup(const std::function<IntegralEstimate(const DiskPoint&)>& term, const SupSearchSpec& search) {
    search.validate();
    std::vector<DiskPoint> pts;
    std::vector<int> level_of;
    for (int j = 0; j <= search.J_max; ++j) {
        for (const DiskPoint& a : a_grid_level(j)) {
            pts.push_back(a);
            level_of.push_back(j);
        }
    }
    std::vector<IntegralEstimate> vals(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) { vals[i] = term(pts[i]); });

    SeminormReport rep;
    rep.profile.assign(static_cast<std::size_t>(search.J_max) + 1, 0.0);
    std::size_t best = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto& slot = rep.profile[static_cast<std::size_t>(level_of[i])];
        slot = std::max(slot, vals[i].value);
        if (vals[i].value > vals[best].value) best = i;
    }
    DiskPoint best_pt = pts[best];
    IntegralEstimate best_val = vals[best];

    if (search.refine && best_val.value > 0.0) {
        // Compass search in (log2 depth, angle) around the best grid point.
        const int j = level_of[best];
        double ld = std::log2(best_pt.depth());
        double th = best_pt.angle();
        double step_d = 0.5;
        double step_t = kTwoPi / static_cast<double>(std::size_t{4} << std::max(j, 1)) * 0.5;
        const double ld_min = -static_cast<double>(search.J_max) - 1.0;
        for (int round = 0; round < search.refine_rounds; ++round) {
            bool moved = false;
            const double cand[4][2] = {{ld + step_d, th}, {ld - step_d, th}, {ld, th + step_t}, {ld, th - step_t}};
            for (const auto& c : cand) {
                const double d = std::clamp(c[0], ld_min, 0.0);
                const DiskPoint a = DiskPoint::polar(std::exp2(d), c[1]);
                const IntegralEstimate v = term(a);
                if (v.value > best_val.value) {
                    best_val = v;
                    best_pt = a;
                    ld = d;
                    th = c[1];
                    moved = true;
                    break;
                }
            }
            if (!moved) {
                step_d *= 0.5;
                step_t *= 0.5;
            }
        }
        auto& slot = rep.profile[static_cast<std::size_t>(j)];
        slot = std::max(slot, best_val.value);
    }
    rep.value = *std::max_element(rep.profile.begin(), rep.profile.end());
    rep.witness.point = best_pt;
    rep.quadrature_converged = best_val.converged;
    rep.witness_error = best_val.error_estimate;
    apply_profile_flags(rep);
    return rep;
}

SeminormReport dyadic_arc_sup(const std::function<IntegralEstimate(const Arc&)>& term, const SupSearchSpec& search) {
    search.validate();
    std::vector<Arc> arcs;
    std::vector<int> level_of;
    for (int j = 0; j <= search.J_max; ++j) {
        for (std::size_t k = 0; k < (std::size_t{1} << j); ++k) {
            arcs.push_back(dyadic_arc(j, k));
            level_of.push_back(j);
        }
    }
    std::vector<IntegralEstimate> vals(arcs.size());
    parallel_for(arcs.size(), [&](std::size_t i) { vals[i] = term(arcs[i]); });
    return collect_arc_sup(arcs, level_of, vals, search.J_max);
}

SeminormReport collect_arc_sup(const std::vector<Arc>& arcs, const std::vector<int>& level_of,
                               const std::vector<IntegralEstimate>& vals, int J_max) {
    SeminormReport rep;
    rep.profile.assign(static_cast<std::size_t>(J_max) + 1, 0.0);
    std::size_t best = 0;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        auto& slot = rep.profile[static_cast<std::size_t>(level_of[i])];
        slot = std::max(slot, vals[i].value);
        if (vals[i].value > vals[best].value) best = i;
    }
    rep.value = *std::max_element(rep.profile.begin(), rep.profile.end());
    rep.witness.arc = arcs[best];
    rep.quadrature_converged = vals[best].converged;
    rep.witness_error = vals[best].error_estimate;
    apply_profile_flags(rep);
    return rep;
}

}  // namespace detail

IntegralEstimate qps_arc_functional(const BoundaryFunction& f, const Arc& arc, const SpaceParams& params,
                                    const QuadratureSpec& qspec) {
    params.validate();
    IntegralEstimate e = arc_double_integral(f, arc, params.p, params.s, qspec);
    const double scale = std::pow(arc.length(), -params.s);
    e.value *= scale;
    e.error_estimate *= scale;
    return e;
}

SeminormReport qps_boundary_seminorm(const BoundaryFunction& f, const SpaceParams& params,
                                     const SupSearchSpec& search, const QuadratureSpec& qspec) {
    params.validate();
    SeminormReport rep = detail::dyadic_arc_sup(
        [&](const Arc& I) { return qps_arc_functional(f, I, params, qspec); }, search);
    const double inv = 1.0 / params.p;
    // Error of the p-th root, to first order.
    if (rep.value > 0.0) rep.witness_error = inv * std::pow(rep.value, inv - 1.0) * rep.witness_error;
    for (double& v : rep.profile) v = std::pow(v, inv);
    rep.value = std::pow(rep.value, inv);
    apply_profile_flags(rep);
    return rep;
}

IntegralEstimate qps_mobius_term(const BoundaryFunction& f, const DiskPoint& a, const SpaceParams& params,
                                 const QuadratureSpec& qspec) {
    params.validate();
    return mobius_pair_integral(f, a, params.p, params.s, qspec);
}

SeminormReport qps_mobius_form(const BoundaryFunction& f, const SpaceParams& params, const SupSearchSpec& search,
                               const QuadratureSpec& qspec) {
    params.validate();
    return detail::a_grid_sup([&](const DiskPoint& a) { return qps_mobius_term(f, a, params, qspec); }, search);
}

RingDensity gradient_power_density(const BoundaryFunction& f, double p) {
    return [f, p](double y, double theta0, double dtheta, std::size_t n, double* out) {
        const auto jets = ring_jets(f, y, theta0, dtheta, n);
        for (std::size_t m = 0; m < n; ++m) out[m] = std::pow(jets[m].gradient_norm(), p);
    };
}

SeminormReport carleson_gradient_form(const BoundaryFunction& f, const SpaceParams& params,
                                      const SupSearchSpec& search, const QuadratureSpec& qspec) {
    params.validate();
    search.validate();
    return detail::sector_sup(gradient_power_density(f, params.p), params.p - 2.0 + params.s, params.s, 0.0,
                              search.J_max, qspec, RadialWeight::OneMinusModulusSq);
}

namespace detail {

SeminormReport sector_sup(const RingDensity& density, double alpha, double s, double log_alpha, int J_max,
                          const QuadratureSpec& qspec, RadialWeight weight) {
    auto sums = dyadic_sector_integrals(density, alpha, J_max, qspec, weight);
    std::vector<Arc> arcs;
    std::vector<int> level_of;
    std::vector<IntegralEstimate> vals;
    for (int j = 0; j <= J_max; ++j) {
        for (std::size_t k = 0; k < sums[static_cast<std::size_t>(j)].size(); ++k) {
            const Arc I = dyadic_arc(j, k);
            IntegralEstimate e = sums[static_cast<std::size_t>(j)][k];
            const double scale = std::pow(I.length(), -s) * (log_alpha > 0.0 ? log_factor(I.length(), log_alpha) : 1.0);
            e.value *= scale;
            e.error_estimate *= scale;
            arcs.push_back(I);
            level_of.push_back(j);
            vals.push_back(e);
        }
    }
    return collect_arc_sup(arcs, level_of, vals, J_max);
}

}  // namespace detail

IntegralEstimate bp_s_integral(const AnalyticFunction& h, double p, double s, const QuadratureSpec& qspec) {
    if (!(p > 1.0) || !(s >= 0.0)) throw std::invalid_argument("bp_s_norm: need p > 1 and s >= 0");
    return disk_weighted_integral(
        [&h, p](const DiskPoint& z) { return std::pow(std::abs(h.derivative(z.value())), p); }, p - 2.0 + s,
        std::nullopt, qspec);
}

double bp_s_norm(const AnalyticFunction& h, double p, double s, const QuadratureSpec& qspec) {
    return std::pow(bp_s_integral(h, p, s, qspec).value, 1.0 / p);
}

IntegralEstimate qps_disk_term(const AnalyticFunction& h, const DiskPoint& a, const SpaceParams& params,
                               const QuadratureSpec& qspec) {
    params.validate();
    const MobiusMap sigma(a);
    const double p = params.p;
    // ||h o sigma_a||^p_{B_p(s)}: the change of variables z = sigma_a(w) turns the
    // weight (1-|z|^2)^{p-2}(1-|sigma_a(z)|^2)^s into (1-|w|^2)^{p-2+s}.
    return disk_weighted_integral(
        [&h, &sigma, p](const DiskPoint& w) {
            const cplx wv = w.value();
            return std::pow(std::abs(h.derivative(sigma(wv)) * sigma.derivative(wv)), p);
        },
        p - 2.0 + params.s, std::nullopt, qspec);
}

SeminormReport qps_disk_seminorm(const AnalyticFunction& h, const SpaceParams& params, const SupSearchSpec& search,
                                 const QuadratureSpec& qspec) {
    params.validate();
    return detail::a_grid_sup([&](const DiskPoint& a) { return qps_disk_term(h, a, params, qspec); }, search);
}

double bloch_norm(const AnalyticFunction& h, const QuadratureSpec& qspec) {
    auto value_at = [&h](double log2_depth, double theta) {
        const DiskPoint z = DiskPoint::polar(std::exp2(log2_depth), theta);
        return z.one_minus_modulus_sq() * std::abs(h.derivative(z.value()));
    };
    // Depths 2^{-k/2} down to 2^{-40}; angular count grows like 1/depth, capped.
    constexpr int kSteps = 80;
    std::vector<double> best_v(kSteps + 1, 0.0), best_t(kSteps + 1, 0.0);
    parallel_for(kSteps + 1, [&](std::size_t k) {
        const double ld = -0.5 * static_cast<double>(k);
        const std::size_t n = std::min<std::size_t>(
            std::size_t{1} << 14,
            std::max<std::size_t>(64, static_cast<std::size_t>(qspec.angular_density * kTwoPi * std::exp2(-ld))));
        for (std::size_t m = 0; m < n; ++m) {
            const double t = kTwoPi * static_cast<double>(m) / static_cast<double>(n);
            const double v = value_at(ld, t);
            if (v > best_v[k]) {
                best_v[k] = v;
                best_t[k] = t;
            }
        }
    });
    std::size_t kb = 0;
    for (std::size_t k = 0; k < best_v.size(); ++k) {
        if (best_v[k] > best_v[kb]) kb = k;
    }
    double ld = -0.5 * static_cast<double>(kb), th = best_t[kb], best = best_v[kb];
    double sd = 0.25, st = kTwoPi / 256.0;
    for (int round = 0; round < 200 && best > 0.0; ++round) {
        bool moved = false;
        const double cand[4][2] = {{ld + sd, th}, {ld - sd, th}, {ld, th + st}, {ld, th - st}};
        for (const auto& c : cand) {
            const double d = std::clamp(c[0], -40.0, 0.0);
            const double v = value_at(d, c[1]);
            if (v > best) {
                best = v;
                ld = d;
                th = c[1];
                moved = true;
                break;
            }
        }
        if (!moved) {
            sd *= 0.5;
            st *= 0.5;
            if (sd < 1e-6) break;
        }
    }
    return best;
}

double arc_mean_oscillation(const BoundaryFunction& f, const Arc& arc, double p, std::size_t M) {
    if (!(p >= 1.0)) throw std::invalid_argument("arc_mean_oscillation: p must be at least 1");
    const double L = arc.length();
    const double start = arc.center() - 0.5 * L;
    std::vector<cplx> F(M);
    for (std::size_t i = 0; i < M; ++i) F[i] = f(start + (static_cast<double>(i) + 0.5) * L / static_cast<double>(M));
    std::vector<double> re(M), im(M);
    for (std::size_t i = 0; i < M; ++i) {
        re[i] = F[i].real();
        im[i] = F[i].imag();
    }
    const cplx mean = cplx{pairwise_sum(re), pairwise_sum(im)} / static_cast<double>(M);
    std::vector<double> dev(M);
    for (std::size_t i = 0; i < M; ++i) dev[i] = std::pow(std::abs(F[i] - mean), p);
    return std::pow(pairwise_sum(dev) / static_cast<double>(M), 1.0 / p);
}

double bmo_norm(const BoundaryFunction& f, double p, const SupSearchSpec& search, const QuadratureSpec& qspec) {
    search.validate();
    qspec.validate();
    double best = 0.0;
    for (int j = 0; j <= search.J_max; ++j) {
        const std::size_t count = std::size_t{1} << j;
        std::vector<double> v(count);
        parallel_for(count, [&](std::size_t k) { v[k] = arc_mean_oscillation(f, dyadic_arc(j, k), p, qspec.M); });
        best = std::max(best, *std::max_element(v.begin(), v.end()));
    }
    return best;
}

double log_factor(double arc_length, double alpha) {
    if (alpha == 0.0) return 1.0;
    const double l = std::log(2.0 / arc_length);
    return l > 0.0 ? std::pow(l, alpha) : 0.0;
}

SeminormReport log_weighted_seminorm(const BoundaryFunction& f, double p2, double r, const SupSearchSpec& search,
                                     const QuadratureSpec& qspec) {
    const SpaceParams params{p2, r};
    params.validate();
    return detail::dyadic_arc_sup(
        [&](const Arc& I) {
            const double w = log_factor(I.length(), p2);
            if (w == 0.0) return IntegralEstimate{};
            IntegralEstimate e = qps_arc_functional(f, I, params, qspec);
            e.value *= w;
            e.error_estimate *= w;
            return e;
        },
        search);
}

LacunaryProxy lacunary_qps_proxy(const LacunarySeries& coeffs, double p, double s) {
    if (!(p > 0.0)) throw std::invalid_argument("lacunary_qps_proxy: p must be positive");
    LacunaryProxy out;
    for (std::size_t i = 0; i < coeffs.c.size(); ++i) {
        const double k = static_cast<double>(coeffs.first_k) + static_cast<double>(i);
        out.terms.push_back(std::pow(std::abs(coeffs.c[i]), p) * std::exp2(k * (1.0 - s)));
    }
    out.value = pairwise_sum(out.terms);
    const std::size_t n = out.terms.size();
    if (n >= 5) {
        bool nondecreasing = true;
        for (std::size_t i = n - 4; i < n; ++i) {
            if (out.terms[i] < out.terms[i - 1] * (1.0 - 1e-12)) nondecreasing = false;
        }
        out.divergent = nondecreasing;
    }
    return out;
}

}  // namespace qspace
