#pragma once

#include <string>
#include <vector>

#include "qspace/seminorms.hpp"

namespace qspace {

enum class RegimeCase { Case1NonTrivial, Case2NonTrivial, Case2Trivial, Case3Trivial };

std::string to_string(RegimeCase c);

struct RegimeDecision {
    RegimeCase tag;
    /// "L-infinity + log condition" in nontrivial cases, "{0}" otherwise.
    std::string characterization;
    /// (1-s)/p1 and (1-r)/p2.
    double lhs_ratio;
    double rhs_ratio;
    bool nontrivial() const { return tag == RegimeCase::Case1NonTrivial || tag == RegimeCase::Case2NonTrivial; }
};

/// Which pointwise multipliers from Q_s^{p1}(T) to Q_r^{p2}(T) exist.
/// Throws std::invalid_argument unless p1, p2 > 1 and s, r in (0, 1).
RegimeDecision classify_regime(double p1, double p2, double s, double r);

enum class Verdict { True, False, Unresolved, OnlyZero };

std::string to_string(Verdict v);

struct MultiplierReport {
    RegimeDecision regime;
    /// Grid sup of |f|; a bound, not a proof of essential boundedness.
    double linf_bound = 0.0;
    /// Grid p1-mean of |f|, the quantity that must vanish in trivial regimes.
    double lp_mean = 0.0;
    /// The log-weighted condition in (p2, r); empty profile in trivial regimes.
    SeminormReport log_condition;
    Verdict verdict = Verdict::Unresolved;
};

MultiplierReport multiplier_check(const BoundaryFunction& f, double p1, double p2, double s, double r,
                                  const SupSearchSpec& search, const QuadratureSpec& qspec);

struct EssentialRangeOptions {
    double cell = 0.05;
    /// Capture radius; 0 selects 2 * cell.
    double eps = 0.0;
    /// Minimum captured fraction of samples; 0 selects 4/M.
    double threshold = 0.0;
};

/// A finite union of closed square cells of side `cell`, listed by center.
struct EssentialRangeEstimate {
    std::vector<cplx> cells;
    double cell = 0.0;
    double eps = 0.0;
    double threshold = 0.0;

    /// Distance from z to the union of cells.
    double distance(cplx z) const;
};

/// Cells that contain a sample and whose center captures at least
/// `threshold` of the samples within `eps`. Throws std::invalid_argument
/// when threshold <= 1/M.
EssentialRangeEstimate essential_range(const SampledGrid& f, const EssentialRangeOptions& opts = {});

enum class SpectrumMode { Boundary, Analytic };

struct ProbeResult {
    cplx lambda;
    double distance;
    double sup_inverse;
    double bound;
    bool passed;
};

struct SpectrumReport {
    SpectrumMode mode;
    EssentialRangeEstimate set;
    std::string note;
    /// Boundary mode: invertibility probes away from the estimate.
    std::vector<ProbeResult> probes;
    /// Analytic mode: |h| exceeded 1e6 on the sampling grid.
    bool unbounded = false;
};

struct SpectrumOptions {
    EssentialRangeOptions range;
    /// Boundary samples (power of two).
    std::size_t M = 4096;
    /// Probe points; empty selects 0 and a coarse grid around the estimate.
    std::vector<cplx> probes;
};

/// sigma(M_f) on Q_s^p(T) as the essential range of f. Throws
/// std::domain_error when f does not pass multiplier_check(p, p, s, s).
SpectrumReport spectrum_boundary(const BoundaryFunction& f, const SpaceParams& params, const SupSearchSpec& search,
                                 const QuadratureSpec& qspec, const SpectrumOptions& opts = {});

/// Closure of h(D): h on a dense polar grid, marked cells dilated by one cell.
SpectrumReport spectrum_analytic(const AnalyticFunction& h, const EssentialRangeOptions& opts = {});

}  // namespace qspace
