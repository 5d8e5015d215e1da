#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qspace/io.hpp"

namespace qspace::experiments {

struct SuiteOptions {
    std::uint64_t seed = 20240601;
    QuadratureSpec qspec;
    SupSearchSpec search;
    /// Criteria to run; empty runs all of them.
    std::set<int> only;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    /// One-line summary of the measured quantities.
    std::string detail;
    double seconds = 0.0;
    json data = json::object();
};

inline constexpr int kCriterionCount = 13;

std::string criterion_title(int id);
CriterionResult run_criterion(int id, const SuiteOptions& opts);
/// Runs the selected criteria in order, calling `on_result` after each one.
std::vector<CriterionResult> run_suite(const SuiteOptions& opts,
                                       const std::function<void(const CriterionResult&)>& on_result = {});

/// Independent restatement of the multiplier trichotomy on exact rationals:
/// p = p_num/p_den, s = s_tenths/10.
RegimeCase regime_oracle(int p1_num, int p1_den, int p2_num, int p2_den, int s_tenths, int r_tenths);

/// A trigonometric polynomial with random degree in [lo, hi] and Gaussian
/// coefficients scaled by `amplitude`.
BoundaryFunction random_trig_poly(std::mt19937_64& rng, int lo, int hi, double amplitude = 1.0);

/// Spearman rank correlation (average ranks for ties).
double rank_correlation(const std::vector<double>& x, const std::vector<double>& y);

/// Hausdorff distance between a finite point set and the closed unit disk,
/// the disk side sampled on a polar grid of spacing at most `step`.
double hausdorff_to_closed_disk(const std::vector<cplx>& pts, double step);

}  // namespace qspace::experiments
