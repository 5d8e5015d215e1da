#include "qspace/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace qspace {

double wrap_angle(double theta) {
    double w = theta - kTwoPi * std::floor(theta / kTwoPi);
    if (w >= kTwoPi || w < 0.0) w = 0.0;
    return w;
}

double angle_offset(double theta, double origin) {
    return wrap_angle(theta - origin + kPi) - kPi;
}

Arc::Arc(double center, double length) : center_(wrap_angle(center)), length_(length) {
    if (!(length > 0.0) || length > kTwoPi * (1.0 + 1e-15)) {
        throw std::invalid_argument("Arc: length must lie in (0, 2*pi]");
    }
    if (length_ > kTwoPi) length_ = kTwoPi;
}

bool Arc::contains_angle(double theta) const {
    if (is_full()) return true;
    return wrap_angle(theta - (center_ - 0.5 * length_)) < length_;
}

ScaledArc scaled_arc(const Arc& arc, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("scaled_arc: lambda must be positive");
    const double len = lambda * arc.length();
    if (len > kTwoPi) return {Arc(arc.center(), kTwoPi), true};
    return {Arc(arc.center(), len), false};
}

DiskPoint::DiskPoint(cplx z) {
    const double m = std::abs(z);
    if (!(m < 1.0 - kBoundaryGuard)) {
        throw std::domain_error("DiskPoint: point is not strictly inside the unit disk");
    }
    depth_ = 1.0 - m;
    angle_ = m == 0.0 ? 0.0 : wrap_angle(std::arg(z));
}

DiskPoint DiskPoint::polar(double depth, double angle) {
    if (!(depth > 0.0) || depth > 1.0 || !std::isfinite(angle)) {
        throw std::domain_error("DiskPoint::polar: depth must lie in (0, 1]");
    }
    DiskPoint p;
    p.depth_ = depth;
    p.angle_ = depth == 1.0 ? 0.0 : wrap_angle(angle);
    return p;
}

cplx DiskPoint::value() const { return std::polar(1.0 - depth_, angle_); }

double one_minus_conj_product_sq(const DiskPoint& a, const DiskPoint& z) {
    const double rho = a.modulus() * z.modulus();
    const double gap = a.depth() + z.depth() - a.depth() * z.depth();
    const double half = std::sin(0.5 * (z.angle() - a.angle()));
    return gap * gap + 4.0 * rho * half * half;
}

double one_minus_mobius_sq(const DiskPoint& a, const DiskPoint& z) {
    const double denom = one_minus_conj_product_sq(a, z);
    return a.one_minus_modulus_sq() * z.one_minus_modulus_sq() / denom;
}

DiskPoint MobiusMap::apply(const DiskPoint& z) const {
    const cplx w = (*this)(z.value());
    const double q = one_minus_mobius_sq(a_, z);
    if (q >= 1.0) return DiskPoint::polar(1.0, 0.0);
    const double mod = std::sqrt(1.0 - q);
    return DiskPoint::polar(q / (1.0 + mod), std::arg(w));
}

cplx MobiusMap::derivative(cplx z) const {
    const cplx d = 1.0 - std::conj(av_) * z;
    return -a_.one_minus_modulus_sq() / (d * d);
}

bool CarlesonSector::contains(const DiskPoint& z) const {
    return z.depth() < depth() && arc_.contains_angle(z.angle());
}

bool sector_contains(const Arc& arc, const DiskPoint& z) { return CarlesonSector(arc).contains(z); }

TangentialRegion::TangentialRegion(double delta_, double c_, double theta_)
    : delta(delta_), c(c_), theta(theta_) {
    if (!(delta > 1.0) || !(c > 0.0)) {
        throw std::invalid_argument("TangentialRegion: need delta > 1 and c > 0");
    }
}

bool TangentialRegion::contains(const DiskPoint& z) const {
    const double sine = std::abs(std::sin(0.5 * (z.angle() - theta)));
    return z.depth() > c * std::pow(sine, delta);
}

bool region_contains(const TangentialRegion& region, const DiskPoint& z) { return region.contains(z); }

bool stolz_contains(double alpha, double zeta_angle, const DiskPoint& z) {
    if (!(alpha > 1.0)) throw std::invalid_argument("stolz_contains: alpha must exceed 1");
    const double half = std::sin(0.5 * (z.angle() - zeta_angle));
    const double lhs_sq = z.depth() * z.depth() + 4.0 * z.modulus() * half * half;
    return lhs_sq < alpha * alpha * z.depth() * z.depth();
}

PseudoHyperbolicDisk::PseudoHyperbolicDisk(DiskPoint center_, double radius_)
    : center(center_), radius(radius_) {
    if (!(radius > 0.0 && radius < 1.0)) {
        throw std::invalid_argument("PseudoHyperbolicDisk: radius must lie in (0, 1)");
    }
}

bool PseudoHyperbolicDisk::contains(const DiskPoint& w) const {
    return 1.0 - one_minus_mobius_sq(center, w) < radius * radius;
}

}  // namespace qspace
