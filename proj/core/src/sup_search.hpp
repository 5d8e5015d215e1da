#pragma once

#include <functional>
#include <vector>

#include "qspace/seminorms.hpp"

namespace qspace {

RingDensity gradient_power_density(const BoundaryFunction& f, double p);

namespace detail {

SeminormReport a_grid_sup(const std::function<IntegralEstimate(const DiskPoint&)>& term, const SupSearchSpec& search);
SeminormReport dyadic_arc_sup(const std::function<IntegralEstimate(const Arc&)>& term, const SupSearchSpec& search);
SeminormReport collect_arc_sup(const std::vector<Arc>& arcs, const std::vector<int>& level_of,
                               const std::vector<IntegralEstimate>& vals, int J_max);
/// sup over dyadic Carleson boxes of |I|^{-s} (log 2/|I|)^{log_alpha} times the
/// sector integral of `density` against w^alpha.
SeminormReport sector_sup(const RingDensity& density, double alpha, double s, double log_alpha, int J_max,
                          const QuadratureSpec& qspec, RadialWeight weight);

}  // namespace detail
}  // namespace qspace
