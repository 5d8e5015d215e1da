#include "qspace/multipliers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "qspace/parallel.hpp"

namespace qspace {

std::string to_string(RegimeCase c) {
    switch (c) {
        case RegimeCase::Case1NonTrivial: return "Case1-NonTrivial";
        case RegimeCase::Case2NonTrivial: return "Case2-NonTrivial";
        case RegimeCase::Case2Trivial: return "Case2-Trivial";
        case RegimeCase::Case3Trivial: return "Case3-Trivial";
    }
    return "unknown";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        case Verdict::Unresolved: return "unresolved";
        case Verdict::OnlyZero: return "only f = 0";
    }
    return "unknown";
}

RegimeDecision classify_regime(double p1, double p2, double s, double r) {
    SpaceParams{p1, s}.validate();
    SpaceParams{p2, r}.validate();
    RegimeDecision d;
    d.lhs_ratio = (1.0 - s) / p1;
    d.rhs_ratio = (1.0 - r) / p2;
    if (s > r) {
        d.tag = RegimeCase::Case3Trivial;
    } else if (p1 <= p2) {
        d.tag = RegimeCase::Case1NonTrivial;
    } else {
        // Ratios equal up to rounding count as a tie, which is the trivial side.
        const double tie = 1e-12 * std::max(d.lhs_ratio, d.rhs_ratio);
        d.tag = d.lhs_ratio - d.rhs_ratio > tie ? RegimeCase::Case2NonTrivial : RegimeCase::Case2Trivial;
    }
    d.characterization = d.nontrivial() ? "L-infinity + log condition" : "{0}";
    return d;
}

MultiplierReport multiplier_check(const BoundaryFunction& f, double p1, double p2, double s, double r,
                                  const SupSearchSpec& search, const QuadratureSpec& qspec) {
    MultiplierReport rep;
    rep.regime = classify_regime(p1, p2, s, r);
    search.validate();
    qspec.validate();
    const std::vector<cplx> v = f.sample(4096);
    std::vector<double> pw(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double a = std::abs(v[i]);
        rep.linf_bound = std::max(rep.linf_bound, a);
        pw[i] = std::pow(a, p1);
    }
    rep.lp_mean = std::pow(pairwise_sum(pw) / static_cast<double>(v.size()), 1.0 / p1);
    if (!rep.regime.nontrivial()) {
        rep.verdict = Verdict::OnlyZero;
        return rep;
    }
    if (!std::isfinite(rep.linf_bound)) {
        rep.verdict = Verdict::False;
        return rep;
    }
    rep.log_condition = log_weighted_seminorm(f, p2, r, search, qspec);
    if (rep.log_condition.divergent) {
        rep.verdict = Verdict::False;
    } else if (rep.log_condition.converged) {
        rep.verdict = Verdict::True;
    } else {
        rep.verdict = Verdict::Unresolved;
    }
    return rep;
}

double EssentialRangeEstimate::distance(cplx z) const {
    double best = std::numeric_limits<double>::infinity();
    const double h = 0.5 * cell;
    for (const cplx& c : cells) {
        const double dx = std::max(0.0, std::abs(z.real() - c.real()) - h);
        const double dy = std::max(0.0, std::abs(z.imag() - c.imag()) - h);
        best = std::min(best, std::hypot(dx, dy));
    }
    return best;
}

namespace {

using CellKey = std::pair<long long, long long>;

CellKey cell_of(cplx z, double cell) {
    return {static_cast<long long>(std::floor(z.real() / cell)), static_cast<long long>(std::floor(z.imag() / cell))};
}

cplx center_of(const CellKey& k, double cell) {
    return {(static_cast<double>(k.first) + 0.5) * cell, (static_cast<double>(k.second) + 0.5) * cell};
}

}  // namespace

EssentialRangeEstimate essential_range(const SampledGrid& f, const EssentialRangeOptions& opts) {
    const std::size_t M = f.values.size();
    if (M == 0) throw std::invalid_argument("essential_range: empty sample grid");
    if (!(opts.cell > 0.0)) throw std::invalid_argument("essential_range: cell size must be positive");
    EssentialRangeEstimate est;
    est.cell = opts.cell;
    est.eps = opts.eps > 0.0 ? opts.eps : 2.0 * opts.cell;
    est.threshold = opts.threshold > 0.0 ? opts.threshold : 4.0 / static_cast<double>(M);
    if (!(est.threshold > 1.0 / static_cast<double>(M))) {
        throw std::invalid_argument("essential_range: threshold must exceed 1/M");
    }
    std::map<CellKey, int> occupied;
    for (const cplx& v : f.values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument("essential_range: non-finite sample");
        }
        occupied[cell_of(v, opts.cell)] = 0;
    }
    std::vector<CellKey> keys;
    keys.reserve(occupied.size());
    for (const auto& kv : occupied) keys.push_back(kv.first);
    std::vector<char> keep(keys.size(), 0);
    parallel_for(keys.size(), [&](std::size_t i) {
        const cplx c = center_of(keys[i], opts.cell);
        std::size_t hits = 0;
        for (const cplx& v : f.values) {
            if (std::abs(v - c) < est.eps) ++hits;
        }
        keep[i] = static_cast<double>(hits) / static_cast<double>(M) >= est.threshold;
    });
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (keep[i]) est.cells.push_back(center_of(keys[i], opts.cell));
    }
    return est;
}

SpectrumReport spectrum_boundary(const BoundaryFunction& f, const SpaceParams& params, const SupSearchSpec& search,
                                 const QuadratureSpec& qspec, const SpectrumOptions& opts) {
    params.validate();
    const MultiplierReport mc = multiplier_check(f, params.p, params.p, params.s, params.s, search, qspec);
    if (mc.verdict != Verdict::True) {
        throw std::domain_error("spectrum_boundary: f is not a confirmed multiplier (verdict " +
                                to_string(mc.verdict) + ")");
    }
    if (opts.M < 16 || (opts.M & (opts.M - 1)) != 0) {
        throw std::invalid_argument("spectrum_boundary: M must be a power of two >= 16");
    }
    SpectrumReport rep;
    rep.mode = SpectrumMode::Boundary;
    SampledGrid grid{f.sample(opts.M)};
    rep.set = essential_range(grid, opts.range);
    rep.note = "essential range of the boundary samples";

    double slack = 0.0;
    double lo_re = std::numeric_limits<double>::infinity(), hi_re = -lo_re, lo_im = lo_re, hi_im = -lo_re;
    for (const cplx& v : grid.values) {
        slack = std::max(slack, rep.set.distance(v));
        lo_re = std::min(lo_re, v.real());
        hi_re = std::max(hi_re, v.real());
        lo_im = std::min(lo_im, v.imag());
        hi_im = std::max(hi_im, v.imag());
    }
    std::vector<cplx> probes = opts.probes;
    if (probes.empty()) {
        probes.push_back(0.0);
        const int n = 9;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                probes.emplace_back(lo_re - 1.0 + (hi_re - lo_re + 2.0) * i / (n - 1),
                                    lo_im - 1.0 + (hi_im - lo_im + 2.0) * j / (n - 1));
            }
        }
    }
    for (const cplx& lam : probes) {
        const double d = rep.set.distance(lam);
        if (!(d > slack + rep.set.cell)) continue;
        double sup_inv = 0.0;
        for (const cplx& v : grid.values) sup_inv = std::max(sup_inv, 1.0 / std::abs(v - lam));
        const double bound = 1.0 / (d - slack);
        rep.probes.push_back({lam, d, sup_inv, bound, sup_inv <= bound * (1.0 + 1e-12)});
    }
    return rep;
}

SpectrumReport spectrum_analytic(const AnalyticFunction& h, const EssentialRangeOptions& opts) {
    if (!(opts.cell > 0.0)) throw std::invalid_argument("spectrum_analytic: cell size must be positive");
    const double cell = opts.cell;
    const std::size_t nr = static_cast<std::size_t>(std::ceil(4.0 / cell));
    std::size_t nt = 16;
    while (static_cast<double>(nt) < 8.0 * kPi / cell) nt *= 2;

    // Rows 0..nr-1 are the radii i/nr; row nr holds the boundary values.
    std::vector<std::vector<cplx>> rows(nr + 1);
    parallel_for(nr + 1, [&](std::size_t i) {
        auto& row = rows[i];
        row.resize(i == 0 ? 1 : nt);
        for (std::size_t k = 0; k < row.size(); ++k) {
            const double th = kTwoPi * static_cast<double>(k) / static_cast<double>(nt);
            row[k] = i == nr ? h.boundary_value(th)
                             : h.value(std::polar(static_cast<double>(i) / static_cast<double>(nr), th));
        }
    });

    SpectrumReport rep;
    rep.mode = SpectrumMode::Analytic;
    rep.note = "closure of the image of a polar grid, dilated by one cell";
    std::map<CellKey, int> marked;
    for (const auto& row : rows) {
        for (const cplx& v : row) {
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || std::abs(v) > 1e6) {
                rep.unbounded = true;
                continue;
            }
            marked[cell_of(v, cell)] = 0;
        }
    }
    std::map<CellKey, int> dilated = marked;
    for (const auto& kv : marked) {
        const auto [a, b] = kv.first;
        dilated[{a + 1, b}] = 0;
        dilated[{a - 1, b}] = 0;
        dilated[{a, b + 1}] = 0;
        dilated[{a, b - 1}] = 0;
    }
    rep.set.cell = cell;
    for (const auto& kv : dilated) rep.set.cells.push_back(center_of(kv.first, cell));
    return rep;
}

}  // namespace qspace
