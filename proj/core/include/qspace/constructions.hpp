#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qspace/carleson.hpp"
#include "qspace/functions.hpp"

namespace qspace {

/// Parameters of the tangential Blaschke sequence. The constructor checks
/// 0 < r < s < 1, 0 < t < 1 and r(1-t) < eps < min(r, s(1-t)).
struct KCParams {
    double s;
    double r;
    double t;
    double eps;
    double theta = 0.0;
    std::size_t K = 100000;

    KCParams(double s, double r, double t, double eps, double theta = 0.0, std::size_t K = 100000);
    /// True when (s, r, t, eps) satisfy the admissibility box.
    static bool admissible(double s, double r, double t, double eps);
};

struct PointSequence {
    std::vector<DiskPoint> points;
    std::optional<double> accumulation_angle;
};

/// a_k = (1 - k^{-1/eps}) e^{i (k^{-t/eps} + theta)}, k = 1..K. a_1 is the origin.
PointSequence kc_sequence(const KCParams& params);

/// c_k = 2^{-(k/2)((1-s)/p1 + (1-r)/p2)} on z^{2^k}, k = 0..K-1.
/// Throws std::invalid_argument on bad exponents; `separating` reports
/// whether (1-s)/p1 <= (1-r)/p2.
LacunarySeries lacunary_g(double p1, double p2, double s, double r, int K, bool* separating = nullptr);

/// c_k = 2^{-k(1-s)/p1} k^{-1/p2} on z^{2^k}, k = 1..K. Requires p1 > p2.
LacunarySeries lacunary_h(double p1, double p2, double s, int K);

/// g_w(z) = log(2/(1 - conj(w) z)) with Taylor data log 2, conj(w)^n/n.
AnalyticFunction log_test_function(const DiskPoint& w, int taylor_terms = 64);

/// z_n = (1 - n^{-1/t}) e^{i theta_n}, theta_n = H_{n-1} + 1/(2n), n = 2..N.
PointSequence zero_set_sequence(double t, std::size_t N);

/// Coefficients r_k(t) a_k, with k the absolute lacunary index.
LacunarySeries rademacher_randomization(const LacunarySeries& coeffs, double t);

/// Monte-Carlo mean of |sum_k r_k(t) a_k|^p over uniform t, and the l2 norm of a.
struct KhinchineSample {
    double moment = 0.0;
    double l2 = 0.0;
    /// moment / l2^p
    double ratio = 0.0;
};
/// The sign of coefficient i is r_{i+1}(t).
KhinchineSample khinchine_moment(const std::vector<cplx>& coeffs, double p, std::size_t samples, std::uint64_t seed);

}  // namespace qspace
