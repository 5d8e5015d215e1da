#pragma once

#include <optional>
#include <vector>

#include "qspace/functions.hpp"
#include "qspace/quadrature.hpp"

namespace qspace {

struct SpaceParams {
    double p = 2.0;
    double s = 0.5;
    /// Throws std::invalid_argument unless p > 1 and 0 < s < 1.
    void validate() const;
};

struct SupSearchSpec {
    /// Deepest dyadic level for arcs (length 2*pi*2^-j) and for the a-grid
    /// (radius 1 - 2^-j, 2^{j+2} angles).
    int J_max = 8;
    /// Local compass search around the best a-grid point.
    bool refine = true;
    int refine_rounds = 24;
    void validate() const;
};

struct Witness {
    std::optional<Arc> arc;
    std::optional<DiskPoint> point;
};

struct SeminormReport {
    double value = 0.0;
    Witness witness;
    /// Per-level maxima; value == max(profile).
    std::vector<double> profile;
    bool converged = true;
    bool divergent = false;
    /// Quadrature verdict of the witness integral.
    bool quadrature_converged = true;
    double witness_error = 0.0;
};

/// Stabilization and growth verdicts for a level profile: converged when the
/// running max at the last level is within 5% of the running max two levels
/// earlier; divergent when the last three levels grow strictly and the
/// profile has not converged.
void apply_profile_flags(SeminormReport& report);

/// The points of the a-grid at level j.
std::vector<DiskPoint> a_grid_level(int j);

/// |I|^{-s} int_I int_I |f(zeta) - f(eta)|^p / |zeta - eta|^{2-s}.
IntegralEstimate qps_arc_functional(const BoundaryFunction& f, const Arc& arc, const SpaceParams& params,
                                    const QuadratureSpec& qspec);

/// sup over dyadic arcs of the arc functional, reported as its p-th root
/// (profile in the same units).
SeminormReport qps_boundary_seminorm(const BoundaryFunction& f, const SpaceParams& params,
                                     const SupSearchSpec& search, const QuadratureSpec& qspec);

/// sup over the a-grid of the Mobius-weighted double integral (p-power form).
SeminormReport qps_mobius_form(const BoundaryFunction& f, const SpaceParams& params, const SupSearchSpec& search,
                               const QuadratureSpec& qspec);
/// The Mobius-weighted double integral at one point a.
IntegralEstimate qps_mobius_term(const BoundaryFunction& f, const DiskPoint& a, const SpaceParams& params,
                                 const QuadratureSpec& qspec);

/// sup over dyadic arcs of |I|^{-s} int_{S(I)} |grad f_hat|^p (1-|z|^2)^{p-2+s} dA (p-power form).
SeminormReport carleson_gradient_form(const BoundaryFunction& f, const SpaceParams& params,
                                      const SupSearchSpec& search, const QuadratureSpec& qspec);

/// int_D |h'|^p (1-|z|^2)^{p-2+s} dA; s >= 0.
IntegralEstimate bp_s_integral(const AnalyticFunction& h, double p, double s, const QuadratureSpec& qspec);
/// p-th root of bp_s_integral.
double bp_s_norm(const AnalyticFunction& h, double p, double s, const QuadratureSpec& qspec);

/// ||h o sigma_a||^p_{B_p(s)} at one point a.
IntegralEstimate qps_disk_term(const AnalyticFunction& h, const DiskPoint& a, const SpaceParams& params,
                               const QuadratureSpec& qspec);
/// sup over the a-grid of qps_disk_term (p-power form).
SeminormReport qps_disk_seminorm(const AnalyticFunction& h, const SpaceParams& params, const SupSearchSpec& search,
                                 const QuadratureSpec& qspec);

/// sup (1 - |z|^2)|h'(z)| over a polar grid graded toward T, refined locally.
double bloch_norm(const AnalyticFunction& h, const QuadratureSpec& qspec);

/// (|I|^{-1} int_I |f - f_I|^p)^{1/p} on the midpoint mesh of size M.
double arc_mean_oscillation(const BoundaryFunction& f, const Arc& arc, double p, std::size_t M);
/// sup over dyadic arcs of arc_mean_oscillation.
double bmo_norm(const BoundaryFunction& f, double p, const SupSearchSpec& search, const QuadratureSpec& qspec);

/// (log(2/|I|))^{p2} times the arc functional with exponents (p2, r); the log
/// factor is taken as 0 for |I| >= 2, where the logarithm is not positive.
double log_factor(double arc_length, double alpha);
SeminormReport log_weighted_seminorm(const BoundaryFunction& f, double p2, double r, const SupSearchSpec& search,
                                     const QuadratureSpec& qspec);

struct LacunaryProxy {
    double value = 0.0;
    std::vector<double> terms;
    bool divergent = false;
};

/// sum_k |a_k|^p 2^{k(1-s)} over the stored terms; divergent when the last
/// five terms are non-decreasing.
LacunaryProxy lacunary_qps_proxy(const LacunarySeries& coeffs, double p, double s);

}  // namespace qspace
