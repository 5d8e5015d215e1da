#pragma once

#include <optional>
#include <vector>

#include "qspace/seminorms.hpp"

namespace qspace {

struct Atom {
    DiskPoint z;
    double mass = 0.0;
};

struct DiscretePointMeasure {
    std::vector<Atom> atoms;
    /// Where the atoms accumulate on T, when the generator knows it.
    std::optional<double> accumulation_angle;

    /// Throws std::invalid_argument on a negative or non-finite mass.
    void validate() const;
    double total_mass() const;
    /// mu(S(I)) with the half-open arc convention.
    double sector_mass(const Arc& arc) const;
    /// Angle of the heaviest atom among the deepest tenth.
    double dominant_angle() const;
};

struct CarlesonReport {
    double value = 0.0;
    Witness witness;
    std::vector<double> profile;
    /// Least-squares slope of log(profile) against log|I| over the final four levels.
    double slope = 0.0;
    /// slope >= -0.05 (also true when the final levels carry no mass).
    bool bounded = true;
    bool quadrature_converged = true;
};

/// Slope of log(profile[j]) against log(2*pi*2^-j) over the last `count`
/// levels with positive values; NaN when fewer than two remain.
double final_level_slope(const std::vector<double>& profile, int count = 4);
CarlesonReport to_carleson_report(const SeminormReport& rep);

CarlesonReport sector_carleson_sup(const DiscretePointMeasure& mu, double s, const SupSearchSpec& search);
CarlesonReport mobius_carleson_sup(const DiscretePointMeasure& mu, double s, const SupSearchSpec& search);
/// Sector form with the factor (log 2/|I|)^alpha, or the Mobius form with
/// (log 2/(1-|a|^2))^alpha when `mobius` is set. alpha = 0 is exactly the plain test.
CarlesonReport log_carleson_sup(const DiscretePointMeasure& mu, double s, double alpha, const SupSearchSpec& search,
                                bool mobius = false);

/// sup over dyadic boxes of |I|^{-s} (log 2/|I|)^alpha int_{S(I)} |grad f_hat|^p (1-|z|^2)^{p-2+s} dA.
CarlesonReport gradient_carleson(const BoundaryFunction& f, double p, double s, double alpha,
                                 const SupSearchSpec& search, const QuadratureSpec& qspec);

/// Atoms (z_k, (1 - |z_k|)^exponent).
DiscretePointMeasure blaschke_zero_measure(const std::vector<DiskPoint>& zeros, double exponent,
                                           std::optional<double> accumulation_angle = std::nullopt);

/// Slope of log[mu(S(I))/|I|^s] against log|I| for arcs centered at theta with
/// lengths 2*pi*2^-j, j in `levels`. Throws std::invalid_argument with fewer
/// than three levels carrying mass.
double carleson_trend(const DiscretePointMeasure& mu, double s, double theta, const std::vector<int>& levels);

}  // namespace qspace
