#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qspace/carleson.hpp"
#include "qspace/constructions.hpp"
#include "qspace/harness.hpp"
#include "qspace/multipliers.hpp"
#include "qspace/seminorms.hpp"

namespace qspace {

using json = nlohmann::json;

/// Thrown for malformed or unsupported documents.
struct FormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// {"repr": "fourier", "degree": N, "coeffs": [[re, im], ...]} for n = -N..N,
/// {"repr": "samples", "values": [[re, im], ...]},
/// {"repr": "constant", "value": [re, im]} or
/// {"repr": "closed", "name": ..., "params": {...}} for the named closed forms.
json to_json(const BoundaryFunction& f);
BoundaryFunction boundary_function_from_json(const json& j);

/// {"kind": "taylor" | "lacunary" | "blaschke" | "closed", ...}. Blaschke zeros
/// are written as {"depth", "angle"} and read in that form or as [re, im].
json to_json(const AnalyticFunction& h);
AnalyticFunction analytic_function_from_json(const json& j);

/// {"atoms": [[re, im, mass], ...], "accumulation_angle": x}. Atoms closer to
/// T than 1e-8 carry their exact depth as a fourth entry.
json to_json(const DiscretePointMeasure& mu);
DiscretePointMeasure measure_from_json(const json& j);

json to_json(const IntegralEstimate& e);
json to_json(const SeminormReport& r);
json to_json(const CarlesonReport& r);
json to_json(const RegimeDecision& d);
json to_json(const MultiplierReport& r);
json to_json(const SpectrumReport& r);
json to_json(const HarnessResult& r);
json to_json(const LacunaryProxy& p);
json to_json(const LacunarySeries& c);
json to_json(const KhinchineSample& k);

/// Field-wise overrides on top of the given defaults; unknown keys are errors.
QuadratureSpec quadrature_from_json(const json& j, QuadratureSpec base = {});
SupSearchSpec search_from_json(const json& j, SupSearchSpec base = {});
SpaceParams params_from_json(const json& j, SpaceParams base = {});

void write_profile_csv(std::ostream& os, const std::vector<double>& profile);
void write_lacunary_csv(std::ostream& os, const LacunarySeries& c);
void write_cells_csv(std::ostream& os, const std::vector<cplx>& cells);

json read_json_file(const std::string& path);

}  // namespace qspace
