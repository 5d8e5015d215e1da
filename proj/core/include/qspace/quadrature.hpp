#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qspace/functions.hpp"
#include "qspace/geometry.hpp"

namespace qspace {

struct QuadratureSpec {
    /// Points per arc for double integrals over arcs (power of two).
    std::size_t M = 256;
    /// Diagonal exclusion width measured on the arc rescaled to length 2*pi;
    /// 0 selects the mesh spacing 2*pi/M.
    double h_min = 0.0;
    /// Dyadic radial shells below the region depth.
    int J = 8;
    double tolerance = 1e-2;
    /// Gauss-Legendre nodes per radial shell.
    int radial_nodes = 5;
    /// Angular cells per unit of (arc length / boundary distance).
    double angular_density = 2.0;

    /// Throws std::invalid_argument on inconsistent settings.
    void validate() const;
    double exclusion_width() const;
    /// Doubles M and the angular density and adds one dyadic shell.
    QuadratureSpec refined() const;
};

struct IntegralEstimate {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
};

/// int_I int_I |f(zeta) - f(eta)|^p / |zeta - eta|^{2-s}. Midpoint mesh with the
/// diagonal cells dropped; the quotient is evaluated as a whole. Error is the
/// change from the half-resolution mesh plus a bound on the dropped band.
IntegralEstimate arc_double_integral(const BoundaryFunction& f, const Arc& arc, double p, double s,
                                     const QuadratureSpec& quad);

/// Same integral over the whole circle with the extra weight
/// ((1 - |a|^2) / (|zeta - a| |eta - a|))^s. The mesh is uniform in the variable
/// xi with zeta = sigma_b(xi), b halfway (hyperbolically) from 0 to a, so the
/// mass near a and the mass on the rest of T are both resolved.
/// `left_factor`, when given, multiplies the integrand by |left_factor(zeta)|.
IntegralEstimate mobius_pair_integral(const BoundaryFunction& f, const DiskPoint& a, double p, double s,
                                      const QuadratureSpec& quad,
                                      const std::function<double(double)>& left_factor = {});

/// Trapezoid rule on T, doubled until the tolerance is met.
IntegralEstimate circle_integral(const std::function<double(double)>& g, const QuadratureSpec& quad);

enum class RadialWeight {
    /// (1 - |z|^2)^alpha
    OneMinusModulusSq,
    /// (1 - |z|)^alpha
    OneMinusModulus,
};

/// Values of a density on one ring |z| = 1 - y at the cell midpoints
/// theta0 + (m + 1/2) * dtheta, m = 0..n-1.
using RingDensity = std::function<void(double y, double theta0, double dtheta, std::size_t n, double* out)>;
using PointDensity = std::function<double(const DiskPoint&)>;

RingDensity pointwise(PointDensity g);

/// int g(z) w(z)^alpha dA over D or over the Carleson box of `region`.
/// Radial shells [d 2^{-i-1}, d 2^{-i}] (d the region depth) plus a tail shell;
/// the substitution u = y^{alpha+1} integrates the weight exactly.
IntegralEstimate disk_weighted_integral(const RingDensity& g, double alpha, const std::optional<Arc>& region,
                                        const QuadratureSpec& quad,
                                        RadialWeight weight = RadialWeight::OneMinusModulusSq);
IntegralEstimate disk_weighted_integral(const PointDensity& g, double alpha, const std::optional<Arc>& region,
                                        const QuadratureSpec& quad,
                                        RadialWeight weight = RadialWeight::OneMinusModulusSq);

/// Integrals over every Carleson box of the dyadic arc family, levels 0..J_max,
/// from one shared polar mesh whose cells align with every arc endpoint.
/// Result [j][k] belongs to the arc centered at 2*pi*k/2^j.
std::vector<std::vector<IntegralEstimate>> dyadic_sector_integrals(const RingDensity& g, double alpha, int J_max,
                                                                   const QuadratureSpec& quad,
                                                                   RadialWeight weight = RadialWeight::OneMinusModulusSq);

/// The arc of level j and index k in the dyadic family.
Arc dyadic_arc(int j, std::size_t k);

}  // namespace qspace
