#include "qspace/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>

#include "qspace/parallel.hpp"

namespace qspace {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t pow2_at_least(double x) {
    std::size_t n = 1;
    while (static_cast<double>(n) < x && n < (std::size_t{1} << 30)) n <<= 1;
    return n;
}

struct Rule {
    std::vector<double> x, w;  // on [-1, 1]
};

template <unsigned N>
Rule expand_rule() {
    using G = boost::math::quadrature::gauss<double, N>;
    Rule r;
    const auto& a = G::abscissa();
    const auto& w = G::weights();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) {
            r.x.push_back(0.0);
            r.w.push_back(w[i]);
        } else {
            r.x.push_back(-a[i]);
            r.w.push_back(w[i]);
            r.x.push_back(a[i]);
            r.w.push_back(w[i]);
        }
    }
    return r;
}

const Rule& legendre(int n) {
    static const Rule r3 = expand_rule<3>(), r4 = expand_rule<4>(), r5 = expand_rule<5>(),
                      r6 = expand_rule<6>(), r7 = expand_rule<7>(), r8 = expand_rule<8>(),
                      r10 = expand_rule<10>();
    switch (n) {
        case 3: return r3;
        case 4: return r4;
        case 5: return r5;
        case 6: return r6;
        case 7: return r7;
        case 8: return r8;
        case 10: return r10;
        default: throw std::invalid_argument("QuadratureSpec: radial_nodes must be one of 3..8 or 10");
    }
}

bool within_tolerance(double error, double value, double tol) {
    return error <= tol * std::abs(value) || error <= 1e-300;
}

// |zeta - a|^2 for zeta = e^{i t} on T, from the depth of a.
double boundary_distance_sq(const DiskPoint& a, double t) {
    const double half = std::sin(0.5 * (t - a.angle()));
    return a.depth() * a.depth() + 4.0 * a.modulus() * half * half;
}

// Bound on the dropped band |u - v| < band, summed cell by cell:
// local_mass = sum_i h_i w_i Lip_i^p with w_i the pair weight near cell i.
double band_bound(double local_mass, double p, double s, double band) {
    if (band <= 0.0 || local_mass == 0.0) return 0.0;
    return 2.0 * local_mass * std::pow(0.5 * kPi, 2.0 - s) * std::pow(band, p + s - 1.0) / (p + s - 1.0);
}

// Larger of the two one-sided difference quotients at node i.
double local_lipschitz(const std::vector<cplx>& F, std::size_t i, double h, bool cyclic) {
    const std::size_t M = F.size();
    double lip = 0.0;
    if (cyclic || i + 1 < M) lip = std::max(lip, std::abs(F[(i + 1) % M] - F[i]));
    if (cyclic || i > 0) lip = std::max(lip, std::abs(F[i] - F[(i + M - 1) % M]));
    return lip / h;
}

double pth(double norm_sq, double p) { return p == 2.0 ? norm_sq : std::pow(norm_sq, 0.5 * p); }

// Sum over ordered pairs i != j with offset d = j - i (mod M when cyclic):
// left[i] |F_i - F_j|^p K[d] A_i A_j.
double pair_sum(const std::vector<cplx>& F, const std::vector<double>& A, const std::vector<double>* left,
                const std::vector<double>& K, std::size_t first_offset, bool cyclic, double p) {
    const std::size_t M = F.size();
    std::vector<double> per_offset(M, 0.0);
    parallel_for(M, [&](std::size_t d) {
        if (d < first_offset) return;
        if (!cyclic && d >= M) return;
        const std::size_t count = cyclic ? M : M - d;
        std::vector<double> terms(count);
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t j = cyclic ? (i + d) % M : i + d;
            double t = pth(std::norm(F[i] - F[j]), p) * A[i] * A[j];
            if (left) {
                // Both orders (i, j) and (j, i) carry their own left factor.
                t = pth(std::norm(F[i] - F[j]), p) * A[i] * A[j] * ((*left)[i] + (cyclic ? 0.0 : (*left)[j]));
            }
            terms[i] = t;
        }
        per_offset[d] = K[d] * pairwise_sum(terms);
    });
    const double total = pairwise_sum(per_offset);
    // Non-cyclic sums visit each unordered pair once; cyclic sums visit each ordered pair.
    if (cyclic) return total;
    return left ? total : 2.0 * total;
}

struct ArcLevel {
    double value;
    double local_mass;
};

ArcLevel arc_level(const BoundaryFunction& f, double start, double L, std::size_t M, double p, double s,
                   double band) {
    const double h = L / static_cast<double>(M);
    std::vector<cplx> F(M);
    for (std::size_t i = 0; i < M; ++i) F[i] = f(start + (static_cast<double>(i) + 0.5) * h);
    std::vector<double> K(M, 0.0);
    for (std::size_t d = 1; d < M; ++d) {
        K[d] = std::pow(2.0 * std::abs(std::sin(0.5 * static_cast<double>(d) * h)), s - 2.0);
    }
    std::size_t first = 1;
    while (first < M && static_cast<double>(first) * h < band * (1.0 - 1e-12)) ++first;
    std::vector<double> A(M, h);
    std::vector<double> mass(M);
    for (std::size_t i = 0; i < M; ++i) mass[i] = h * std::pow(local_lipschitz(F, i, h, false), p);
    return {pair_sum(F, A, nullptr, K, first, false, p), pairwise_sum(mass)};
}

void check_exponents(double p, double s) {
    if (!(p > 1.0)) throw std::invalid_argument("double integral: p must exceed 1");
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("double integral: s must lie in (0, 1)");
}

}  // namespace

void QuadratureSpec::validate() const {
    if (M < 16 || !is_power_of_two(M)) throw std::invalid_argument("QuadratureSpec: M must be a power of two >= 16");
    if (h_min != 0.0 && h_min < kTwoPi / static_cast<double>(M) * (1.0 - 1e-12)) {
        throw std::invalid_argument("QuadratureSpec: h_min must be at least 2*pi/M");
    }
    if (J < 4) throw std::invalid_argument("QuadratureSpec: J must be at least 4");
    if (!(tolerance > 0.0)) throw std::invalid_argument("QuadratureSpec: tolerance must be positive");
    if (!(angular_density >= 1.0)) throw std::invalid_argument("QuadratureSpec: angular_density must be >= 1");
    (void)legendre(radial_nodes);
}

double QuadratureSpec::exclusion_width() const { return h_min > 0.0 ? h_min : kTwoPi / static_cast<double>(M); }

QuadratureSpec QuadratureSpec::refined() const {
    QuadratureSpec r = *this;
    r.M = 2 * M;
    if (h_min > 0.0) r.h_min = 0.5 * h_min;
    r.J = J + 1;
    r.angular_density = 2.0 * angular_density;
    return r;
}

IntegralEstimate arc_double_integral(const BoundaryFunction& f, const Arc& arc, double p, double s,
                                     const QuadratureSpec& quad) {
    check_exponents(p, s);
    quad.validate();
    const double L = arc.length();
    const double start = arc.center() - 0.5 * L;
    const double band = quad.exclusion_width() * L / kTwoPi;
    const ArcLevel fine = arc_level(f, start, L, quad.M, p, s, band);
    const ArcLevel coarse = arc_level(f, start, L, quad.M / 2, p, s, std::max(band, 2.0 * L / static_cast<double>(quad.M)));
    IntegralEstimate e;
    e.value = fine.value;
    e.error_estimate = std::abs(fine.value - coarse.value) + band_bound(fine.local_mass, p, s, band);
    e.converged = within_tolerance(e.error_estimate, e.value, quad.tolerance);
    return e;
}

IntegralEstimate mobius_pair_integral(const BoundaryFunction& f, const DiskPoint& a, double p, double s,
                                      const QuadratureSpec& quad, const std::function<double(double)>& left_factor) {
    check_exponents(p, s);
    quad.validate();
    // b on the ray of a with hyperbolic distance half that of a: 1 - |b| = 2/(e^x + 1),
    // e^x = sqrt((1 + |a|)/(1 - |a|)).
    const double ex = std::sqrt((2.0 - a.depth()) / a.depth());
    const DiskPoint b = DiskPoint::polar(std::min(1.0, 2.0 / (ex + 1.0)), a.angle());
    const MobiusMap sigma_b(b);
    const double one_minus_a2 = a.one_minus_modulus_sq();
    const double one_minus_b2 = b.one_minus_modulus_sq();

    auto level = [&](std::size_t M) {
        const double dphi = kTwoPi / static_cast<double>(M);
        std::vector<cplx> F(M);
        std::vector<double> A(M), Lf;
        if (left_factor) Lf.resize(M);
        for (std::size_t i = 0; i < M; ++i) {
            const double phi = (static_cast<double>(i) + 0.5) * dphi;
            const double t = std::arg(sigma_b(std::polar(1.0, phi)));
            F[i] = f(t);
            // |1 - conj(b) xi|^2 with xi = e^{i phi}.
            const double half = std::sin(0.5 * (phi - b.angle()));
            const double gap_b = b.depth() * b.depth() + 4.0 * b.modulus() * half * half;
            const double jac = std::sqrt(one_minus_b2 / gap_b);
            const double W = std::sqrt(one_minus_a2 / boundary_distance_sq(a, t));
            A[i] = std::pow(jac * W, s) * dphi;
            if (left_factor) Lf[i] = std::abs(left_factor(t));
        }
        std::vector<double> K(M, 0.0);
        for (std::size_t d = 1; d < M; ++d) {
            K[d] = std::pow(2.0 * std::abs(std::sin(0.5 * static_cast<double>(d) * dphi)), s - 2.0);
        }
        std::vector<double> mass(M);
        for (std::size_t i = 0; i < M; ++i) {
            const double w = A[i] / dphi;
            mass[i] = dphi * w * w * (left_factor ? Lf[i] : 1.0) * std::pow(local_lipschitz(F, i, dphi, true), p);
        }
        const double v = pair_sum(F, A, left_factor ? &Lf : nullptr, K, 1, true, p);
        const double bound = band_bound(pairwise_sum(mass), p, s, dphi);
        return std::pair{v, bound};
    };
    const auto [fine, bound] = level(quad.M);
    const auto coarse = level(quad.M / 2).first;
    IntegralEstimate e;
    e.value = fine;
    e.error_estimate = std::abs(fine - coarse) + bound;
    e.converged = within_tolerance(e.error_estimate, e.value, quad.tolerance);
    return e;
}

IntegralEstimate circle_integral(const std::function<double(double)>& g, const QuadratureSpec& quad) {
    std::size_t n = 64;
    std::vector<double> vals(n);
    for (std::size_t k = 0; k < n; ++k) vals[k] = g(kTwoPi * static_cast<double>(k) / static_cast<double>(n));
    double sum = pairwise_sum(vals);
    double prev = sum * kTwoPi / static_cast<double>(n);
    constexpr std::size_t kMax = std::size_t{1} << 22;
    while (n < kMax) {
        std::vector<double> mid(n);
        for (std::size_t k = 0; k < n; ++k) {
            mid[k] = g(kTwoPi * (static_cast<double>(k) + 0.5) / static_cast<double>(n));
        }
        sum += pairwise_sum(mid);
        n *= 2;
        const double cur = sum * kTwoPi / static_cast<double>(n);
        const double err = std::abs(cur - prev);
        prev = cur;
        if (within_tolerance(err, cur, quad.tolerance) && n >= 256) return {cur, err, true};
        if (n >= kMax) return {cur, err, within_tolerance(err, cur, quad.tolerance)};
    }
    return {prev, 0.0, true};
}

RingDensity pointwise(PointDensity g) {
    return [g = std::move(g)](double y, double theta0, double dtheta, std::size_t n, double* out) {
        for (std::size_t m = 0; m < n; ++m) {
            out[m] = g(DiskPoint::polar(y, theta0 + (static_cast<double>(m) + 0.5) * dtheta));
        }
    };
}

namespace {

struct Shell {
    double y_lo, y_hi;
    std::size_t n_theta;
};

struct RadialNode {
    double y;
    double w;  // includes the weight, the radius Jacobian and the radial quadrature weight
    std::size_t shell;
};

std::vector<RadialNode> radial_nodes(const std::vector<Shell>& shells, double alpha, RadialWeight kind, int nr) {
    if (!(alpha > -1.0)) throw std::invalid_argument("disk integral: weight exponent must exceed -1");
    const Rule& rule = legendre(nr);
    const double e = alpha + 1.0;
    std::vector<RadialNode> out;
    for (std::size_t si = 0; si < shells.size(); ++si) {
        // Away from y = 0 the weight y^alpha is smooth for alpha >= 0 and plain
        // nodes in y beat the substitution, whose Jacobian is then the rough part.
        if (alpha >= 0.0 && shells[si].y_lo > 0.0) {
            const double half = 0.5 * (shells[si].y_hi - shells[si].y_lo);
            for (std::size_t q = 0; q < rule.x.size(); ++q) {
                const double y = shells[si].y_lo + half * (rule.x[q] + 1.0);
                double w = rule.w[q] * half * std::pow(y, alpha) * (1.0 - y);
                if (kind == RadialWeight::OneMinusModulusSq) w *= std::pow(2.0 - y, alpha);
                out.push_back({y, w, si});
            }
            continue;
        }
        const double u0 = std::pow(shells[si].y_lo, e);
        const double u1 = std::pow(shells[si].y_hi, e);
        const double half = 0.5 * (u1 - u0);
        for (std::size_t q = 0; q < rule.x.size(); ++q) {
            const double u = u0 + half * (rule.x[q] + 1.0);
            const double y = std::pow(u, 1.0 / e);
            double w = rule.w[q] * half / e * (1.0 - y);
            if (kind == RadialWeight::OneMinusModulusSq) w *= std::pow(2.0 - y, alpha);
            out.push_back({y, w, si});
        }
    }
    return out;
}

std::size_t angular_cells(double L, double y_lo, double density, std::size_t floor_count) {
    constexpr std::size_t kCap = std::size_t{1} << 20;
    const std::size_t n = pow2_at_least(density * L / y_lo);
    return std::max(floor_count, std::min(std::max<std::size_t>(16, n), kCap));
}

std::vector<Shell> build_shells(double depth, double L, int J, double density, std::size_t floor_count) {
    std::vector<Shell> shells;
    for (int i = 0; i < J; ++i) {
        const double hi = std::ldexp(depth, -i);
        const double lo = 0.5 * hi;
        shells.push_back({lo, hi, angular_cells(L, lo, density, floor_count)});
    }
    shells.push_back({0.0, std::ldexp(depth, -J), shells.back().n_theta});
    return shells;
}

double mesh_integral(const RingDensity& g, double alpha, double depth, double theta0, double L, int J,
                     double density, int nr, RadialWeight kind) {
    const auto shells = build_shells(depth, L, J, density, 16);
    const auto nodes = radial_nodes(shells, alpha, kind, nr);
    std::vector<double> ring_totals(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t q) {
        const std::size_t n = shells[nodes[q].shell].n_theta;
        const double dtheta = L / static_cast<double>(n);
        std::vector<double> out(n);
        g(nodes[q].y, theta0, dtheta, n, out.data());
        ring_totals[q] = pairwise_sum(out) * dtheta * nodes[q].w;
    });
    return pairwise_sum(ring_totals);
}

}  // namespace

IntegralEstimate disk_weighted_integral(const RingDensity& g, double alpha, const std::optional<Arc>& region,
                                        const QuadratureSpec& quad, RadialWeight weight) {
    quad.validate();
    double depth = 1.0, theta0 = 0.0, L = kTwoPi;
    if (region && !region->is_full()) {
        L = region->length();
        depth = L / kTwoPi;
        theta0 = region->center() - 0.5 * L;
    }
    const double fine = mesh_integral(g, alpha, depth, theta0, L, quad.J, quad.angular_density, quad.radial_nodes, weight);
    const double coarse = mesh_integral(g, alpha, depth, theta0, L, quad.J - 1, 0.5 * quad.angular_density,
                                        quad.radial_nodes, weight);
    IntegralEstimate e;
    e.value = fine;
    e.error_estimate = std::abs(fine - coarse);
    e.converged = within_tolerance(e.error_estimate, e.value, quad.tolerance);
    return e;
}

IntegralEstimate disk_weighted_integral(const PointDensity& g, double alpha, const std::optional<Arc>& region,
                                        const QuadratureSpec& quad, RadialWeight weight) {
    return disk_weighted_integral(pointwise(g), alpha, region, quad, weight);
}

Arc dyadic_arc(int j, std::size_t k) {
    const double len = std::ldexp(kTwoPi, -j);
    return Arc(len * static_cast<double>(k), len);
}

namespace {

// Sector sums for every dyadic arc from one full-disk mesh. Cells start at
// angle 0 and every shell has at least 2^{J_max+1} of them, so each arc
// [2 pi (k - 1/2)/2^j, 2 pi (k + 1/2)/2^j) is an exact union of cells.
std::vector<std::vector<double>> sector_sums(const RingDensity& g, double alpha, int J_max, int J, double density,
                                             int nr, RadialWeight kind) {
    const std::size_t floor_count = std::size_t{1} << (J_max + 1);
    const int total = J_max + J;
    const auto shells = build_shells(1.0, kTwoPi, total, density, floor_count);
    const auto nodes = radial_nodes(shells, alpha, kind, nr);

    // Per-shell cell totals, accumulated one radial node at a time.
    std::vector<std::vector<double>> sums(static_cast<std::size_t>(J_max) + 1);
    for (int j = 0; j <= J_max; ++j) sums[static_cast<std::size_t>(j)].assign(std::size_t{1} << j, 0.0);

    for (std::size_t si = 0; si < shells.size(); ++si) {
        const std::size_t n = shells[si].n_theta;
        const double dtheta = kTwoPi / static_cast<double>(n);
        std::vector<std::size_t> qs;
        for (std::size_t q = 0; q < nodes.size(); ++q) {
            if (nodes[q].shell == si) qs.push_back(q);
        }
        std::vector<std::vector<double>> rings(qs.size(), std::vector<double>(n));
        parallel_for(qs.size(), [&](std::size_t r) {
            g(nodes[qs[r]].y, 0.0, dtheta, n, rings[r].data());
            for (double& v : rings[r]) v *= nodes[qs[r]].w * dtheta;
        });
        std::vector<double> cells(n, 0.0);
        for (std::size_t m = 0; m < n; ++m) {
            double acc = 0.0;
            for (const auto& ring : rings) acc += ring[m];
            cells[m] = acc;
        }
        // Shell si lies below depth 2^{-j} for every j <= si; the tail shell for all j.
        const bool tail = si + 1 == shells.size();
        const int jmax = tail ? J_max : std::min<int>(J_max, static_cast<int>(si));
        // Block sums at the finest arc scale: half-arcs of level jmax.
        const std::size_t half_arcs = std::size_t{1} << (jmax + 1);
        const std::size_t per = n / half_arcs;
        std::vector<double> block(half_arcs);
        for (std::size_t b = 0; b < half_arcs; ++b) {
            block[b] = pairwise_sum(std::span<const double>(cells.data() + b * per, per));
        }
        for (int j = jmax; j >= 0; --j) {
            const std::size_t arcs = std::size_t{1} << j;
            auto& target = sums[static_cast<std::size_t>(j)];
            // Arc k covers half-blocks 2k - 1 and 2k (mod 2^{j+1}).
            for (std::size_t k = 0; k < arcs; ++k) {
                target[k] += block[(2 * k + 2 * arcs - 1) % (2 * arcs)] + block[2 * k];
            }
            if (j == 0) break;
            std::vector<double> coarser(arcs);
            for (std::size_t b = 0; b < arcs; ++b) coarser[b] = block[2 * b] + block[2 * b + 1];
            block = std::move(coarser);
        }
    }
    return sums;
}

}  // namespace

std::vector<std::vector<IntegralEstimate>> dyadic_sector_integrals(const RingDensity& g, double alpha, int J_max,
                                                                   const QuadratureSpec& quad, RadialWeight weight) {
    quad.validate();
    if (J_max < 0 || J_max > 18) throw std::invalid_argument("dyadic_sector_integrals: J_max out of range");
    const auto fine = sector_sums(g, alpha, J_max, quad.J, quad.angular_density, quad.radial_nodes, weight);
    const auto coarse = sector_sums(g, alpha, J_max, quad.J - 1, 0.5 * quad.angular_density, quad.radial_nodes, weight);
    std::vector<std::vector<IntegralEstimate>> out(fine.size());
    for (std::size_t j = 0; j < fine.size(); ++j) {
        out[j].resize(fine[j].size());
        for (std::size_t k = 0; k < fine[j].size(); ++k) {
            IntegralEstimate& e = out[j][k];
            e.value = fine[j][k];
            e.error_estimate = std::abs(fine[j][k] - coarse[j][k]);
            e.converged = within_tolerance(e.error_estimate, e.value, quad.tolerance);
        }
    }
    return out;
}

}  // namespace qspace
