#include "experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numeric>

namespace qspace::experiments {

namespace {

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

cplx random_disk_point(std::mt19937_64& rng, double rmax) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(rmax * std::sqrt(u(rng)), kTwoPi * u(rng));
}

double spread(const std::vector<double>& x, const std::vector<double>& y) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double q = x[i] / y[i];
        lo = std::min(lo, q);
        hi = std::max(hi, q);
    }
    return hi / lo;
}

// 1. Mobius algebra on random pairs.
CriterionResult c1(const SuiteOptions& o) {
    std::mt19937_64 rng(o.seed);
    double inv_err = 0.0, id_abs = 0.0, id_rel = 0.0;
    for (int n = 0; n < 10000; ++n) {
        const cplx a = random_disk_point(rng, 0.999), z = random_disk_point(rng, 0.999);
        const MobiusMap m{DiskPoint(a)};
        inv_err = std::max(inv_err, std::abs(m(m(z)) - z));
        const double stable = one_minus_mobius_sq(DiskPoint(a), DiskPoint(z));
        const double direct = 1.0 - std::norm(m(z));
        const double product = (1.0 - std::norm(a)) * (1.0 - std::norm(z)) / std::norm(1.0 - std::conj(a) * z);
        id_abs = std::max(id_abs, std::abs(stable - direct));
        id_rel = std::max(id_rel, std::abs(stable - product) / product);
    }
    CriterionResult r;
    r.passed = inv_err <= 1e-12 && id_abs <= 1e-12 && id_rel <= 1e-12;
    r.detail = fmt("involution err %.2e, identity abs err %.2e, rel err %.2e over 1e4 pairs", inv_err, id_abs, id_rel);
    r.data = {{"involution_error", inv_err}, {"identity_abs_error", id_abs}, {"identity_rel_error", id_rel}};
    return r;
}

// 2. Every seminorm of a constant vanishes.
CriterionResult c2(const SuiteOptions& o) {
    const BoundaryFunction f = BoundaryFunction::constant(cplx(1.5, -0.5));
    const AnalyticFunction h = TaylorSeries{{cplx(1.5, -0.5)}};
    const SpaceParams P{2.0, 0.5};
    json vals = json::object();
    vals["qps_boundary"] = qps_boundary_seminorm(f, P, o.search, o.qspec).value;
    vals["qps_mobius"] = qps_mobius_form(f, P, o.search, o.qspec).value;
    vals["carleson_gradient"] = carleson_gradient_form(f, P, o.search, o.qspec).value;
    vals["log_weighted"] = log_weighted_seminorm(f, 2.0, 0.5, o.search, o.qspec).value;
    vals["bmo"] = bmo_norm(f, 2.0, o.search, o.qspec);
    vals["gradient_log_carleson"] = gradient_carleson(f, 2.0, 0.5, 1.0, o.search, o.qspec).value;
    vals["bp_s"] = bp_s_norm(h, 2.0, 0.5, o.qspec);
    vals["bloch"] = bloch_norm(h, o.qspec);
    vals["qps_disk"] = qps_disk_seminorm(h, P, o.search, o.qspec).value;
    double worst = 0.0;
    for (const auto& [k, v] : vals.items()) worst = std::max(worst, std::abs(v.get<double>()));
    CriterionResult r;
    r.passed = worst < 1e-8;
    r.detail = fmt("largest of %zu seminorms of a constant: %.2e", vals.size(), worst);
    r.data = vals;
    return r;
}

// 3. Radial closed form for z -> z.
CriterionResult c3(const SuiteOptions& o) {
    const AnalyticFunction h = TaylorSeries{{0.0, 1.0}};
    double worst = 0.0;
    json rows = json::array();
    for (double p : {1.5, 2.0, 3.0}) {
        for (double s : {0.2, 0.5, 0.8}) {
            const double got = std::pow(bp_s_norm(h, p, s, o.qspec), p);
            const double want = kPi / (p - 1.0 + s);
            const double rel = std::abs(got / want - 1.0);
            worst = std::max(worst, rel);
            rows.push_back({{"p", p}, {"s", s}, {"value", got}, {"closed_form", want}});
        }
    }
    CriterionResult r;
    r.passed = worst <= 0.005;
    r.detail = fmt("max relative deviation %.2e over 9 (p, s) pairs", worst);
    r.data = rows;
    return r;
}

const std::vector<cplx>& invariance_points() {
    static const std::vector<cplx> pts = {cplx(0.5, 0.0),   cplx(0.0, 0.5),  cplx(-0.3, 0.3),
                                          cplx(0.2, -0.4),  cplx(-0.45, 0.0), cplx(0.1, 0.1)};
    return pts;
}

// 4. Mobius invariance of the (c)-form.
CriterionResult c4(const SuiteOptions& o) {
    std::mt19937_64 rng(o.seed + 4);
    const SpaceParams P{2.0, 0.5};
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    json rows = json::array();
    for (int i = 0; i < 5; ++i) {
        const BoundaryFunction f = random_trig_poly(rng, 1, 3);
        const double base = qps_mobius_form(f, P, o.search, o.qspec).value;
        for (const cplx& a : invariance_points()) {
            const double v = qps_mobius_form(compose_mobius(f, DiskPoint(a)), P, o.search, o.qspec).value;
            const double q = v / base;
            lo = std::min(lo, q);
            hi = std::max(hi, q);
            rows.push_back({{"function", i}, {"a", {a.real(), a.imag()}}, {"ratio", q}});
        }
    }
    CriterionResult r;
    r.passed = lo >= 0.85 && hi <= 1.18;
    r.detail = fmt("ratios in [%.4f, %.4f] over 30 compositions", lo, hi);
    r.data = rows;
    return r;
}

// 5. Three-way equivalence of the seminorm forms.
CriterionResult c5(const SuiteOptions& o) {
    std::mt19937_64 rng(o.seed + 5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const SpaceParams P{2.0, 0.5};
    std::vector<double> a, b, c;
    for (int i = 0; i < 20; ++i) {
        const BoundaryFunction f = random_trig_poly(rng, 1, 8, std::pow(10.0, u(rng)));
        a.push_back(std::pow(qps_boundary_seminorm(f, P, o.search, o.qspec).value, P.p));
        b.push_back(qps_mobius_form(f, P, o.search, o.qspec).value);
        c.push_back(carleson_gradient_form(f, P, o.search, o.qspec).value);
    }
    const double sab = spread(a, b), sac = spread(a, c), sbc = spread(b, c);
    const double rab = rank_correlation(a, b), rac = rank_correlation(a, c), rbc = rank_correlation(b, c);
    CriterionResult r;
    r.passed = std::max({sab, sac, sbc}) < 1e3 && std::min({rab, rac, rbc}) >= 0.9;
    r.detail = fmt("ratio spreads %.2f %.2f %.2f, rank correlations %.3f %.3f %.3f", sab, sac, sbc, rab, rac, rbc);
    r.data = {{"boundary", a}, {"mobius", b}, {"gradient", c}};
    return r;
}

// 6. Arc integral against the gradient integral over S(3I).
CriterionResult c6(const SuiteOptions& o) {
    std::mt19937_64 rng(o.seed + 6);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<HarnessInput> inputs;
    for (int i = 0; i < 50; ++i) {
        const BoundaryFunction f = random_trig_poly(rng, 1, 8);
        const double L = 0.05 * std::pow(40.0, u(rng));
        inputs.push_back(ELInput{f, Arc(kTwoPi * u(rng), L), {2.0, 0.5}});
    }
    auto constant = [&](const QuadratureSpec& q) {
        double C = 0.0;
        for (const HarnessInput& in : inputs) C = std::max(C, inequality_harness(in, q).ratio);
        return C;
    };
    const double C1 = constant(o.qspec);
    const double C2 = constant(o.qspec.refined());
    CriterionResult r;
    r.passed = std::isfinite(C1) && C1 > 0.0 && std::abs(C2 / C1 - 1.0) <= 0.2;
    r.detail = fmt("C = %.4f, C after doubling = %.4f (change %.2f%%)", C1, C2, 100.0 * std::abs(C2 / C1 - 1.0));
    r.data = {{"C", C1}, {"C_refined", C2}};
    return r;
}

// 7. Tangential Blaschke sequence: trend slopes and verdicts.
CriterionResult c7(const SuiteOptions& o) {
    const KCParams kp(0.8, 0.4, 0.5, 0.3, 0.0, 100000);
    const PointSequence seq = kc_sequence(kp);
    const auto ms = blaschke_zero_measure(seq.points, kp.s, seq.accumulation_angle);
    const auto mr = blaschke_zero_measure(seq.points, kp.r, seq.accumulation_angle);
    const std::vector<int> levels = {9, 10, 11, 12, 13};
    const double theta = *seq.accumulation_angle;
    const double ss = carleson_trend(ms, kp.s, theta, levels);
    const double sr = carleson_trend(mr, kp.r, theta, levels);
    const double want_s = (kp.s - kp.eps) / kp.t - kp.s;
    const double want_r = (kp.r - kp.eps) / kp.t - kp.r;
    const bool bs = sector_carleson_sup(ms, kp.s, o.search).bounded;
    const bool br = sector_carleson_sup(mr, kp.r, o.search).bounded;
    CriterionResult r;
    r.passed = std::abs(ss / want_s - 1.0) <= 0.1 && std::abs(sr / want_r - 1.0) <= 0.1 && bs && !br;
    r.detail = fmt("slope s %.4f (want %.2f), slope r %.4f (want %.2f), verdicts s %s r %s", ss, want_s, sr, want_r,
                   bs ? "bounded" : "unbounded", br ? "bounded" : "unbounded");
    r.data = {{"slope_s", ss}, {"slope_r", sr}, {"bounded_s", bs}, {"bounded_r", br}};
    return r;
}

// 8. Lacunary separating examples.
CriterionResult c8(const SuiteOptions& o) {
    std::mt19937_64 rng(o.seed + 8);
    std::uniform_real_distribution<double> up(1.25, 4.0), us(0.1, 0.9);
    bool ok = true;
    json draws = json::array();
    int found = 0;
    while (found < 5) {
        const double p1 = up(rng), p2 = up(rng), s = us(rng), r = us(rng);
        if (!((1.0 - s) / p1 < (1.0 - r) / p2 - 0.02)) continue;
        ++found;
        const LacunarySeries g = lacunary_g(p1, p2, s, r, 20);
        const LacunaryProxy in = lacunary_qps_proxy(g, p1, s);
        const LacunaryProxy out = lacunary_qps_proxy(g, p2, r);
        ok = ok && !in.divergent && std::isfinite(in.value) && out.divergent;
        draws.push_back({{"p1", p1}, {"p2", p2}, {"s", s}, {"r", r}, {"finite", in.value}, {"divergent", out.divergent}});
    }
    const double p1 = 4.0, p2 = 2.0, s = 0.5, r = 1.0 - p2 * (1.0 - s) / p1;
    const int K = 1000;
    const LacunarySeries h = lacunary_h(p1, p2, s, K);
    const LacunaryProxy hin = lacunary_qps_proxy(h, p1, s);
    const LacunaryProxy hout = lacunary_qps_proxy(h, p2, r);
    const double track = hout.value / std::log(static_cast<double>(K));
    ok = ok && !hin.divergent && std::abs(track - 1.0) <= 0.15;
    CriterionResult res;
    res.passed = ok;
    res.detail = fmt("5 g draws separate; h partial sum / log K = %.4f at K = %d, (p1, s) sum %.4f", track, K,
                     hin.value);
    res.data = {{"g_draws", draws}, {"h_track", track}, {"h_finite", hin.value}};
    return res;
}

// 9. Random-sign moments against the l2 norm.
CriterionResult c9(const SuiteOptions& o) {
    std::mt19937_64 rng(o.seed + 9);
    std::normal_distribution<double> nd;
    std::vector<std::vector<cplx>> vecs(3);
    for (int k = 1; k <= 10; ++k) vecs[0].push_back(1.0 / k);
    for (int k = 0; k < 16; ++k) vecs[1].push_back(cplx(nd(rng), nd(rng)));
    vecs[2] = {0.0, 0.0, 1.0, 0.0};
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    json rows = json::array();
    for (std::size_t v = 0; v < vecs.size(); ++v) {
        for (double p : {1.0, 2.0, 3.0, 4.0}) {
            const KhinchineSample k = khinchine_moment(vecs[v], p, 10000, o.seed + 100 * v + static_cast<std::uint64_t>(p));
            lo = std::min(lo, k.ratio);
            hi = std::max(hi, k.ratio);
            rows.push_back({{"vector", v}, {"p", p}, {"ratio", k.ratio}});
        }
    }
    CriterionResult r;
    r.passed = lo >= 0.2 && hi <= 5.0;
    r.detail = fmt("moment / l2^p in [%.4f, %.4f] over 12 cases", lo, hi);
    r.data = rows;
    return r;
}

// 10. Regime classifier against exact rational case analysis.
CriterionResult c10(const SuiteOptions&) {
    const int num[] = {5, 3, 2, 3, 4}, den[] = {4, 2, 1, 1, 1};
    int mismatches = 0, total = 0;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            for (int s = 1; s <= 9; ++s) {
                for (int r = 1; r <= 9; ++r) {
                    ++total;
                    const RegimeCase got = classify_regime(static_cast<double>(num[i]) / den[i],
                                                           static_cast<double>(num[j]) / den[j], s / 10.0, r / 10.0)
                                               .tag;
                    if (got != regime_oracle(num[i], den[i], num[j], den[j], s, r)) ++mismatches;
                }
            }
        }
    }
    CriterionResult res;
    res.passed = mismatches == 0 && total == 2025;
    res.detail = fmt("%d mismatches over %d grid points", mismatches, total);
    res.data = {{"mismatches", mismatches}, {"total", total}};
    return res;
}

// 11. Multiplier condition with the gradient cross-check.
CriterionResult c11(const SuiteOptions& o) {
    const BoundaryFunction smooth = closed::exp_mode(1), step = closed::sign_step();
    const MultiplierReport ms = multiplier_check(smooth, 2, 2, 0.5, 0.5, o.search, o.qspec);
    const MultiplierReport mj = multiplier_check(step, 2, 2, 0.5, 0.5, o.search, o.qspec);
    const CarlesonReport gs = gradient_carleson(smooth, 2.0, 0.5, 2.0, o.search, o.qspec);
    const CarlesonReport gj = gradient_carleson(step, 2.0, 0.5, 2.0, o.search, o.qspec);
    const bool smooth_ok = ms.verdict == Verdict::True && gs.bounded;
    const bool step_ok = mj.verdict == Verdict::False && mj.log_condition.divergent && !gj.bounded;
    CriterionResult r;
    r.passed = smooth_ok && step_ok;
    r.detail = fmt("e^{it}: %s / gradient %s; sign step: %s (divergent %d) / gradient %s",
                   to_string(ms.verdict).c_str(), gs.bounded ? "bounded" : "unbounded", to_string(mj.verdict).c_str(),
                   mj.log_condition.divergent, gj.bounded ? "bounded" : "unbounded");
    r.data = {{"smooth", to_json(ms)}, {"step", to_json(mj)}, {"smooth_gradient", to_json(gs)},
              {"step_gradient", to_json(gj)}};
    return r;
}

// 12. Essential ranges and spectra.
CriterionResult c12(const SuiteOptions&) {
    const EssentialRangeOptions opts;
    const BoundaryFunction step = closed::two_valued_step(1.0, cplx(0.0, 1.0));
    const EssentialRangeEstimate two = essential_range(SampledGrid{step.sample(4096)}, opts);
    bool two_ok = two.cells.size() == 2 && two.distance(1.0) < 1e-12 && two.distance(cplx(0.0, 1.0)) < 1e-12;

    const SpectrumReport disk = spectrum_analytic(AnalyticFunction(TaylorSeries{{0.0, 1.0}}), opts);
    const double hd = hausdorff_to_closed_disk(disk.set.cells, 0.25 * opts.cell);

    BlaschkeProduct B;
    std::mt19937_64 rng(12);
    for (int k = 0; k < 10; ++k) B.zeros.push_back(DiskPoint(random_disk_point(rng, 0.95)));
    const EssentialRangeEstimate circle =
        essential_range(SampledGrid{AnalyticFunction(B).boundary().sample(4096)}, opts);
    double off = 0.0;
    for (const cplx& c : circle.cells) off = std::max(off, std::abs(std::abs(c) - 1.0));
    const bool circle_ok = !circle.cells.empty() && off <= opts.cell;

    CriterionResult r;
    r.passed = two_ok && hd <= 2.0 * opts.cell && circle_ok;
    r.detail = fmt("step range %zu cells; disk Hausdorff %.4f (limit %.2f); Blaschke range %zu cells, max ||c|-1| %.4f",
                   two.cells.size(), hd, 2.0 * opts.cell, circle.cells.size(), off);
    r.data = {{"step_cells", two.cells.size()}, {"disk_hausdorff", hd}, {"blaschke_offset", off}};
    return r;
}

// 13. Uniform size of the log test functions.
CriterionResult c13(const SuiteOptions& o) {
    const SpaceParams P{2.0, 0.5};
    std::vector<double> norms;
    json rows = json::array();
    for (double m : {0.0, 0.5, 0.9, 0.99}) {
        const AnalyticFunction g = log_test_function(DiskPoint(std::polar(m, 0.7)));
        const SeminormReport rep = qps_disk_seminorm(g, P, o.search, o.qspec);
        // Full norm |g(0)| + seminorm; g_0 is constant, so the seminorm alone vanishes there.
        const double norm = std::abs(g.value(0.0)) + std::pow(rep.value, 1.0 / P.p);
        norms.push_back(norm);
        rows.push_back({{"modulus", m}, {"seminorm_p", rep.value}, {"norm", norm}, {"converged", rep.converged}});
    }
    const double ratio = *std::max_element(norms.begin(), norms.end()) / *std::min_element(norms.begin(), norms.end());
    CriterionResult r;
    r.passed = ratio < 10.0;
    r.detail = fmt("norms %.3f %.3f %.3f %.3f, max/min %.3f", norms[0], norms[1], norms[2], norms[3], ratio);
    r.data = rows;
    return r;
}

}  // namespace

std::string criterion_title(int id) {
    static const char* titles[] = {"",
                                   "Mobius algebra",
                                   "Zero seminorms of constants",
                                   "Closed-form B_p(s) norm of z",
                                   "Mobius invariance of the (c)-form",
                                   "Three-form equivalence",
                                   "Arc vs sector gradient inequality",
                                   "Tangential Blaschke sequence trends",
                                   "Lacunary inclusion counterexamples",
                                   "Khinchine bracket",
                                   "Regime classifier grid",
                                   "Multiplier condition",
                                   "Essential ranges and spectra",
                                   "Uniform bound for g_w"};
    if (id < 1 || id > kCriterionCount) throw std::invalid_argument("unknown criterion " + std::to_string(id));
    return titles[id];
}

CriterionResult run_criterion(int id, const SuiteOptions& opts) {
    using Fn = CriterionResult (*)(const SuiteOptions&);
    static const Fn fns[] = {nullptr, c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13};
    const std::string title = criterion_title(id);
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = fns[id](opts);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.id = id;
    r.title = title;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opts,
                                       const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) {
        if (!opts.only.empty() && !opts.only.count(id)) continue;
        out.push_back(run_criterion(id, opts));
        if (on_result) on_result(out.back());
    }
    return out;
}

RegimeCase regime_oracle(int p1_num, int p1_den, int p2_num, int p2_den, int s_tenths, int r_tenths) {
    if (s_tenths > r_tenths) return RegimeCase::Case3Trivial;
    // p1 <= p2  <=>  p1_num p2_den <= p2_num p1_den
    if (p1_num * p2_den <= p2_num * p1_den) return RegimeCase::Case1NonTrivial;
    // (1-s)/p1 > (1-r)/p2  <=>  (10-s) p1_den p2_num > (10-r) p2_den p1_num
    const long lhs = static_cast<long>(10 - s_tenths) * p1_den * p2_num;
    const long rhs = static_cast<long>(10 - r_tenths) * p2_den * p1_num;
    return lhs > rhs ? RegimeCase::Case2NonTrivial : RegimeCase::Case2Trivial;
}

BoundaryFunction random_trig_poly(std::mt19937_64& rng, int lo, int hi, double amplitude) {
    std::uniform_int_distribution<int> deg(lo, hi);
    std::normal_distribution<double> nd;
    const int N = deg(rng);
    std::vector<cplx> c(static_cast<std::size_t>(2 * N + 1));
    for (cplx& x : c) x = amplitude * cplx(nd(rng), nd(rng));
    return BoundaryFunction::fourier(FourierCoefficients(N, std::move(c)));
}

namespace {

std::vector<double> ranks(const std::vector<double>& x) {
    std::vector<std::size_t> idx(x.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> r(x.size());
    for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i;
        while (j + 1 < idx.size() && x[idx[j + 1]] == x[idx[i]]) ++j;
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
        i = j + 1;
    }
    return r;
}

}  // namespace

double rank_correlation(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("rank_correlation: bad sizes");
    const std::vector<double> rx = ranks(x), ry = ranks(y);
    const double n = static_cast<double>(x.size());
    const double mean = 0.5 * (n + 1.0);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        sxy += (rx[i] - mean) * (ry[i] - mean);
        sxx += (rx[i] - mean) * (rx[i] - mean);
        syy += (ry[i] - mean) * (ry[i] - mean);
    }
    return sxy / std::sqrt(sxx * syy);
}

double hausdorff_to_closed_disk(const std::vector<cplx>& pts, double step) {
    if (pts.empty()) return std::numeric_limits<double>::infinity();
    double out = 0.0;
    for (const cplx& p : pts) out = std::max(out, std::max(0.0, std::abs(p) - 1.0));
    const int nr = static_cast<int>(std::ceil(1.0 / step));
    double in = 0.0;
    for (int i = 0; i <= nr; ++i) {
        const double rad = static_cast<double>(i) / nr;
        const int nt = std::max(1, static_cast<int>(std::ceil(kTwoPi * rad / step)));
        for (int k = 0; k < nt; ++k) {
            const cplx z = std::polar(rad, kTwoPi * k / nt);
            double best = std::numeric_limits<double>::infinity();
            for (const cplx& p : pts) best = std::min(best, std::abs(p - z));
            in = std::max(in, best);
        }
    }
    return std::max(in, out);
}

}  // namespace qspace::experiments
