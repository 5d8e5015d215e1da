#pragma once

#include <string>
#include <variant>

#include "qspace/carleson.hpp"
#include "qspace/seminorms.hpp"

namespace qspace {

/// Arc double integral over I against the gradient integral over S(3I).
struct ELInput {
    BoundaryFunction f;
    Arc arc;
    SpaceParams params;
};

/// Gradient integral over S(I) against the double integral over J plus the
/// tail term |I|^{p+s} (int_{|t| >= |J|/3} |f(e^{i(t+theta0)}) - f_J| dt/t^2)^p.
/// I and J share a center and |J| >= 3|I|.
struct StLInput {
    BoundaryFunction f;
    Arc inner;
    Arc outer;
    SpaceParams params;
};

/// int_D P[|f|^q] (1-|S|)^q (1-|z|)^{-2} (1-|sigma_a(z)|)^r dA against the
/// Mobius-weighted double integral of S with the factor |f(zeta)|^q.
struct LInInput {
    BoundaryFunction f;
    BlaschkeProduct S;
    DiskPoint a;
    double q = 2.0;
    double r = 0.5;
};

/// sum_k m_k |h(z_k)|^p against |h(0)|^p + ||h||^p_{B_p(s)}.
struct LPZInput {
    AnalyticFunction h;
    DiscretePointMeasure mu;
    double p = 2.0;
    double s = 0.5;
};

/// Mean oscillation over I against the p-th root of the arc functional.
struct BMOIncInput {
    BoundaryFunction f;
    Arc arc;
    SpaceParams params;
};

using HarnessInput = std::variant<ELInput, StLInput, LInInput, LPZInput, BMOIncInput>;

struct HarnessResult {
    std::string lemma;
    double lhs = 0.0;
    double rhs = 0.0;
    /// lhs/rhs; 0 when both sides vanish, +inf when only rhs does.
    double ratio = 0.0;
    bool converged = true;
};

/// Evaluates both sides of one inequality. Throws std::invalid_argument when
/// the inputs violate the inequality's hypotheses.
HarnessResult inequality_harness(const HarnessInput& input, const QuadratureSpec& qspec);

std::string harness_name(const HarnessInput& input);

}  // namespace qspace
