#pragma once

#include <complex>
#include <numbers>

namespace qspace {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Points closer than this to the unit circle are rejected when built from
/// Cartesian coordinates; 1 - |z| is not representable below it.
inline constexpr double kBoundaryGuard = 1e-14;

/// Maps an angle to [0, 2*pi).
double wrap_angle(double theta);

/// Signed angular offset of `theta` from `origin`, in [-pi, pi).
double angle_offset(double theta, double origin);

/// An arc of the unit circle, identified with the half-open angular
/// interval [center - length/2, center + length/2).
class Arc {
public:
    Arc(double center, double length);

    static Arc full_circle() { return Arc(0.0, kTwoPi); }

    double center() const { return center_; }
    double length() const { return length_; }
    /// Angle of the left endpoint (wrapped).
    double start() const { return wrap_angle(center_ - 0.5 * length_); }
    bool is_full() const { return length_ >= kTwoPi; }

    bool contains_angle(double theta) const;

private:
    double center_;
    double length_;
};

struct ScaledArc {
    Arc arc;
    bool clamped;
};

/// lambda * I: same center, length lambda*|I|, clamped to the full circle.
ScaledArc scaled_arc(const Arc& arc, double lambda);

/// A point of the open unit disk stored in polar form with its exact
/// boundary distance, so that points far closer to T than the Cartesian
/// guard (e.g. deep terms of a Blaschke sequence) keep their geometry.
class DiskPoint {
public:
    DiskPoint() = default;
    /// Throws std::domain_error unless |z| < 1 - kBoundaryGuard.
    explicit DiskPoint(cplx z);

    /// depth = 1 - |z| in (0, 1]; any positive depth is accepted.
    static DiskPoint polar(double depth, double angle);

    cplx value() const;
    double modulus() const { return 1.0 - depth_; }
    double depth() const { return depth_; }
    double angle() const { return angle_; }
    /// 1 - |z|^2 without cancellation.
    double one_minus_modulus_sq() const { return depth_ * (2.0 - depth_); }

private:
    double depth_ = 1.0;
    double angle_ = 0.0;
};

/// |1 - conj(a) z|^2, evaluated from depths and angles.
double one_minus_conj_product_sq(const DiskPoint& a, const DiskPoint& z);

/// 1 - |sigma_a(z)|^2 = (1-|a|^2)(1-|z|^2)/|1 - conj(a) z|^2.
double one_minus_mobius_sq(const DiskPoint& a, const DiskPoint& z);

/// The disk automorphism sigma_a(z) = (a - z)/(1 - conj(a) z); an involution.
class MobiusMap {
public:
    explicit MobiusMap(DiskPoint a) : a_(a), av_(a.value()) {}

    const DiskPoint& center() const { return a_; }

    DiskPoint apply(const DiskPoint& z) const;
    /// Raw complex evaluation, valid on the closed disk (used on T).
    cplx operator()(cplx z) const { return (av_ - z) / (1.0 - std::conj(av_) * z); }
    /// sigma_a'(z) = -(1 - |a|^2) / (1 - conj(a) z)^2.
    cplx derivative(cplx z) const;

private:
    DiskPoint a_;
    cplx av_;
};

inline DiskPoint mobius_apply(const MobiusMap& m, const DiskPoint& z) { return m.apply(z); }

/// Carleson box over an arc: {r e^{it} : 1 - |I|/2pi < r < 1, e^{it} in I}.
class CarlesonSector {
public:
    explicit CarlesonSector(Arc arc) : arc_(arc) {}
    const Arc& arc() const { return arc_; }
    /// Radial extent |I|/2pi of the box.
    double depth() const { return arc_.length() / kTwoPi; }
    bool contains(const DiskPoint& z) const;

private:
    Arc arc_;
};

bool sector_contains(const Arc& arc, const DiskPoint& z);

/// {r e^{i phi} : 1 - r > c |sin((phi - theta)/2)|^delta}; touches T only at
/// e^{i theta}.
struct TangentialRegion {
    double delta;
    double c;
    double theta;

    TangentialRegion(double delta, double c, double theta);
    bool contains(const DiskPoint& z) const;
};

bool region_contains(const TangentialRegion& region, const DiskPoint& z);

/// Stolz angle {z : |1 - conj(zeta) z| < alpha (1 - |z|)} with vertex e^{i zeta_angle}.
bool stolz_contains(double alpha, double zeta_angle, const DiskPoint& z);

/// {w : |sigma_center(w)| < radius}.
struct PseudoHyperbolicDisk {
    DiskPoint center;
    double radius;

    PseudoHyperbolicDisk(DiskPoint center, double radius);
    bool contains(const DiskPoint& w) const;
};

}  // namespace qspace
