#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "experiments.hpp"
#include "qspace/parallel.hpp"

namespace fs = std::filesystem;
using namespace qspace;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInvalidConfig = 2;
constexpr int kExitNotConverged = 3;

/// Thrown when a command that demands convergence did not get it.
struct NotConverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string config_path;
    std::string out = ".";
    std::uint64_t seed = 20240601;
    unsigned threads = 0;
    int resolution = 0;
    double tolerance = 0.0;
    bool require_converged = false;
    double p = 2.0;
    double s = 0.5;
};

/// Config file merged with flag overrides; flags win.
struct Context {
    json config = json::object();
    SpaceParams params;
    SupSearchSpec search;
    QuadratureSpec qspec;
    std::uint64_t seed = 20240601;
    fs::path out;
    bool require_converged = false;

    const json& section(const char* key) const {
        static const json empty;
        return config.contains(key) ? config.at(key) : empty;
    }
};

Context make_context(const Common& c, const CLI::App& app) {
    Context ctx;
    if (!c.config_path.empty()) ctx.config = read_json_file(c.config_path);
    if (!ctx.config.is_object()) throw FormatError("config: top level must be an object");
    ctx.params = params_from_json(ctx.section("params"));
    ctx.search = search_from_json(ctx.section("search"));
    ctx.qspec = quadrature_from_json(ctx.section("quadrature"));
    if (ctx.config.contains("seed")) ctx.seed = ctx.config["seed"].get<std::uint64_t>();
    ctx.out = ctx.config.contains("out") ? ctx.config["out"].get<std::string>() : c.out;
    if (app.count("--out")) ctx.out = c.out;
    if (app.count("--seed")) ctx.seed = c.seed;
    if (app.count("--resolution")) ctx.search.J_max = c.resolution;
    if (app.count("--tolerance")) ctx.qspec.tolerance = c.tolerance;
    if (app.count("--p")) ctx.params.p = c.p;
    if (app.count("--space-s")) ctx.params.s = c.s;
    ctx.params.validate();
    ctx.require_converged = c.require_converged || ctx.config.value("require_converged", false);
    ctx.search.validate();
    ctx.qspec.validate();
    if (app.count("--threads")) set_thread_count(c.threads);
    return ctx;
}

json envelope(const std::string& command) { return {{"schema", 1}, {"command", command}}; }

void write_file(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write '" + path.string() + "'");
    os << text;
}

void write_json(const Context& ctx, const std::string& name, const json& j) {
    write_file(ctx.out / (name + ".json"), j.dump(2) + "\n");
}

void write_profile(const Context& ctx, const std::string& name, const std::vector<double>& profile) {
    std::ostringstream os;
    write_profile_csv(os, profile);
    write_file(ctx.out / (name + ".csv"), os.str());
}

/// A file path or an inline document from the config, flag first.
json input_document(const Context& ctx, const std::string& flag_value, const char* key) {
    if (!flag_value.empty()) return read_json_file(flag_value);
    if (ctx.config.contains(key)) {
        const json& v = ctx.config.at(key);
        return v.is_string() ? read_json_file(v.get<std::string>()) : v;
    }
    throw FormatError(std::string("missing input '") + key + "'");
}

template <class T>
T setting(const Context& ctx, const CLI::App& sub, const char* flag, const char* key, T flag_value) {
    if (sub.count(flag)) return flag_value;
    if (ctx.config.contains(key)) return ctx.config.at(key).get<T>();
    return flag_value;
}

void demand(const Context& ctx, bool converged, const std::string& what) {
    if (ctx.require_converged && !converged) throw NotConverged(what + " did not converge");
}

// ---------------------------------------------------------------------------

struct SeminormArgs {
    std::string kind = "qps-boundary";
    std::string f;
    std::string h;
};

int cmd_seminorm(const Context& ctx, const CLI::App& sub, const SeminormArgs& a) {
    const std::string kind = setting(ctx, sub, "--kind", "kind", a.kind);
    json out = envelope("seminorm");
    out["kind"] = kind;
    out["params"] = {{"p", ctx.params.p}, {"s", ctx.params.s}};
    auto report = [&](const SeminormReport& r) {
        out["report"] = to_json(r);
        write_profile(ctx, "seminorm_profile", r.profile);
        demand(ctx, r.converged && !r.divergent && r.quadrature_converged, "seminorm");
    };
    const bool analytic = kind == "disk" || kind == "bp" || kind == "bloch";
    if (analytic) {
        const AnalyticFunction h = analytic_function_from_json(input_document(ctx, a.h, "h"));
        if (kind == "disk") {
            report(qps_disk_seminorm(h, ctx.params, ctx.search, ctx.qspec));
        } else if (kind == "bp") {
            const IntegralEstimate e = bp_s_integral(h, ctx.params.p, ctx.params.s, ctx.qspec);
            out["report"] = to_json(e);
            out["report"]["norm"] = std::pow(e.value, 1.0 / ctx.params.p);
            demand(ctx, e.converged, "B_p(s) integral");
        } else {
            out["report"] = {{"value", bloch_norm(h, ctx.qspec)}};
        }
    } else {
        const BoundaryFunction f = boundary_function_from_json(input_document(ctx, a.f, "f"));
        if (kind == "qps-boundary") {
            report(qps_boundary_seminorm(f, ctx.params, ctx.search, ctx.qspec));
        } else if (kind == "mobius") {
            report(qps_mobius_form(f, ctx.params, ctx.search, ctx.qspec));
        } else if (kind == "gradient") {
            report(carleson_gradient_form(f, ctx.params, ctx.search, ctx.qspec));
        } else if (kind == "log-weighted") {
            report(log_weighted_seminorm(f, ctx.params.p, ctx.params.s, ctx.search, ctx.qspec));
        } else if (kind == "bmo") {
            out["report"] = {{"value", bmo_norm(f, ctx.params.p, ctx.search, ctx.qspec)}};
        } else {
            throw FormatError("seminorm: unknown kind '" + kind + "'");
        }
    }
    write_json(ctx, "seminorm", out);
    std::cout << out["report"].dump() << "\n";
    return kExitOk;
}

struct CarlesonArgs {
    std::string measure;
    std::vector<double> pair;
    double s = 0.5;
    double alpha = 0.0;
    bool mobius = false;
    std::vector<int> levels;
};

int cmd_carleson(const Context& ctx, const CLI::App& sub, const CarlesonArgs& a) {
    json doc = input_document(ctx, a.measure, "measure");
    // A construct report carries its measure one level down.
    if (!doc.contains("atoms") && doc.contains("measure")) doc = json(doc.at("measure"));
    const DiscretePointMeasure mu = measure_from_json(doc);
    std::vector<double> pair = setting(ctx, sub, "--exponent-pair", "exponent_pair", a.pair);
    const double alpha = setting(ctx, sub, "--alpha", "alpha", a.alpha);
    const bool mobius = setting(ctx, sub, "--mobius", "mobius", a.mobius);
    std::vector<int> levels = setting(ctx, sub, "--trend-levels", "trend_levels", a.levels);
    if (levels.empty()) levels = {9, 10, 11, 12, 13};
    if (!pair.empty() && pair.size() != 2) throw FormatError("carleson: --exponent-pair takes two values");
    const double theta = mu.accumulation_angle ? *mu.accumulation_angle : mu.dominant_angle();

    json out = envelope("carleson");
    out["alpha"] = alpha;
    out["form"] = mobius ? "mobius" : "sector";
    out["trend_center"] = theta;
    auto test = [&](const DiscretePointMeasure& m, double s, const std::string& label) {
        const CarlesonReport rep = log_carleson_sup(m, s, alpha, ctx.search, mobius);
        json j = to_json(rep);
        j["s"] = s;
        try {
            j["trend_slope"] = carleson_trend(m, s, theta, levels);
        } catch (const std::invalid_argument& e) {
            j["trend_slope"] = nullptr;
            j["trend_note"] = e.what();
        }
        write_profile(ctx, "carleson_" + label + "_profile", rep.profile);
        std::cout << label << ": value " << rep.value << " bounded " << (rep.bounded ? "true" : "false") << "\n";
        return j;
    };
    if (pair.empty()) {
        const double s = setting(ctx, sub, "--s", "s", a.s);
        out["tests"] = {{"measure", test(mu, s, "measure")}};
    } else {
        std::vector<DiskPoint> pts;
        for (const Atom& at : mu.atoms) pts.push_back(at.z);
        out["tests"] = {{"s", test(blaschke_zero_measure(pts, pair[0], mu.accumulation_angle), pair[0], "s")},
                        {"r", test(blaschke_zero_measure(pts, pair[1], mu.accumulation_angle), pair[1], "r")}};
    }
    write_json(ctx, "carleson", out);
    return kExitOk;
}

struct ConstructArgs {
    std::string what;
    double s = 0.8, r = 0.4, t = 0.5, eps = 0.3, theta = 0.0;
    double p1 = 2.0, p2 = 2.0;
    std::size_t K = 100000;
    std::vector<double> w;
    std::size_t N = 1000;
    double time = 0.25;
};

int cmd_construct(const Context& ctx, const CLI::App& sub, const ConstructArgs& a) {
    const std::string what = setting(ctx, sub, "--what", "what", a.what);
    const double s = setting(ctx, sub, "--s", "s", a.s), r = setting(ctx, sub, "--r", "r", a.r);
    const double t = setting(ctx, sub, "--t", "t", a.t), eps = setting(ctx, sub, "--eps", "eps", a.eps);
    const double theta = setting(ctx, sub, "--theta", "theta", a.theta);
    const double p1 = setting(ctx, sub, "--p1", "p1", a.p1), p2 = setting(ctx, sub, "--p2", "p2", a.p2);
    const std::size_t K = setting(ctx, sub, "--K", "K", a.K), N = setting(ctx, sub, "--N", "N", a.N);
    json out = envelope("construct");
    out["what"] = what;
    auto lacunary_out = [&](const LacunarySeries& c) {
        out["series"] = to_json(c);
        std::ostringstream os;
        write_lacunary_csv(os, c);
        write_file(ctx.out / "construct_coefficients.csv", os.str());
    };
    auto points_out = [&](const PointSequence& seq) {
        DiscretePointMeasure mu;
        for (const DiskPoint& z : seq.points) mu.atoms.push_back({z, 1.0});
        mu.accumulation_angle = seq.accumulation_angle;
        out["measure"] = to_json(mu);
        write_file(ctx.out / "construct_measure.json", out["measure"].dump() + "\n");
    };
    if (what == "kc") {
        points_out(kc_sequence(KCParams(s, r, t, eps, theta, K)));
    } else if (what == "lacunary-g") {
        bool separating = false;
        lacunary_out(lacunary_g(p1, p2, s, r, static_cast<int>(std::min<std::size_t>(K, 1000)), &separating));
        out["separating"] = separating;
        if (!separating) std::cerr << "warning: (1-s)/p1 > (1-r)/p2, g does not separate the spaces\n";
    } else if (what == "lacunary-h") {
        lacunary_out(lacunary_h(p1, p2, s, static_cast<int>(std::min<std::size_t>(K, 100000))));
    } else if (what == "log-test") {
        std::vector<double> w = setting(ctx, sub, "--w", "w", a.w);
        if (w.size() != 2) throw FormatError("construct: --w takes re im");
        out["function"] = to_json(log_test_function(DiskPoint(cplx(w[0], w[1]))));
    } else if (what == "zero-set") {
        points_out(zero_set_sequence(t, N));
    } else if (what == "rademacher") {
        const double tt = setting(ctx, sub, "--time", "time", a.time);
        lacunary_out(rademacher_randomization(lacunary_g(p1, p2, s, r, static_cast<int>(std::min<std::size_t>(K, 1000))), tt));
    } else {
        throw FormatError("construct: unknown construction '" + what + "'");
    }
    write_json(ctx, "construct", out);
    std::cout << "wrote " << (ctx.out / "construct.json").string() << "\n";
    return kExitOk;
}

struct RegimeArgs {
    std::string grid;
    std::vector<double> point;
};

int cmd_regime(const Context& ctx, const CLI::App& sub, const RegimeArgs& a) {
    const std::string grid = setting(ctx, sub, "--grid", "grid", a.grid);
    json out = envelope("regime");
    std::vector<std::array<double, 4>> rows;
    if (!grid.empty()) {
        if (grid != "default") throw FormatError("regime: only the default grid is defined");
        for (double p1 : {1.25, 1.5, 2.0, 3.0, 4.0})
            for (double p2 : {1.25, 1.5, 2.0, 3.0, 4.0})
                for (int i = 1; i <= 9; ++i)
                    for (int j = 1; j <= 9; ++j) rows.push_back({p1, p2, i / 10.0, j / 10.0});
    }
    if (sub.count("--point")) {
        if (a.point.size() != 4) throw FormatError("regime: --point takes p1 p2 s r");
        rows.push_back({a.point[0], a.point[1], a.point[2], a.point[3]});
    }
    if (rows.empty()) throw FormatError("regime: give --grid default or --point p1 p2 s r");
    std::ostringstream csv;
    csv << "p1,p2,s,r,case\n";
    json decisions = json::array();
    for (const auto& row : rows) {
        const RegimeDecision d = classify_regime(row[0], row[1], row[2], row[3]);
        csv << json(row[0]).dump() << ',' << json(row[1]).dump() << ',' << json(row[2]).dump() << ','
            << json(row[3]).dump() << ',' << to_string(d.tag) << '\n';
        json j = to_json(d);
        j["p1"] = row[0];
        j["p2"] = row[1];
        j["s"] = row[2];
        j["r"] = row[3];
        decisions.push_back(j);
    }
    out["decisions"] = decisions;
    write_file(ctx.out / "regime.csv", csv.str());
    write_json(ctx, "regime", out);
    if (rows.size() == 1) std::cout << to_string(classify_regime(rows[0][0], rows[0][1], rows[0][2], rows[0][3]).tag) << "\n";
    else std::cout << rows.size() << " rows written to " << (ctx.out / "regime.csv").string() << "\n";
    return kExitOk;
}

struct MultiplierArgs {
    std::string f;
    double p1 = 2.0, p2 = 2.0, s = 0.5, r = 0.5;
};

int cmd_multiplier(const Context& ctx, const CLI::App& sub, const MultiplierArgs& a) {
    const BoundaryFunction f = boundary_function_from_json(input_document(ctx, a.f, "f"));
    const MultiplierReport rep = multiplier_check(
        f, setting(ctx, sub, "--p1", "p1", a.p1), setting(ctx, sub, "--p2", "p2", a.p2),
        setting(ctx, sub, "--s", "s", a.s), setting(ctx, sub, "--r", "r", a.r), ctx.search, ctx.qspec);
    json out = envelope("multiplier");
    out["report"] = to_json(rep);
    write_json(ctx, "multiplier", out);
    if (rep.regime.nontrivial()) write_profile(ctx, "multiplier_profile", rep.log_condition.profile);
    std::cout << "verdict: " << to_string(rep.verdict) << "\n";
    demand(ctx, rep.verdict != Verdict::Unresolved, "multiplier condition");
    return kExitOk;
}

struct SpectrumArgs {
    std::string mode = "boundary";
    std::string f, h;
    double cell = 0.05;
};

int cmd_spectrum(const Context& ctx, const CLI::App& sub, const SpectrumArgs& a) {
    const std::string mode = setting(ctx, sub, "--mode", "mode", a.mode);
    EssentialRangeOptions ro;
    ro.cell = setting(ctx, sub, "--cell", "cell", a.cell);
    SpectrumReport rep;
    if (mode == "boundary") {
        SpectrumOptions so;
        so.range = ro;
        try {
            rep = spectrum_boundary(boundary_function_from_json(input_document(ctx, a.f, "f")), ctx.params, ctx.search,
                                    ctx.qspec, so);
        } catch (const std::domain_error& e) {
            throw NotConverged(e.what());
        }
    } else if (mode == "analytic") {
        rep = spectrum_analytic(analytic_function_from_json(input_document(ctx, a.h, "h")), ro);
    } else {
        throw FormatError("spectrum: mode must be boundary or analytic");
    }
    json out = envelope("spectrum");
    out["report"] = to_json(rep);
    std::ostringstream csv;
    write_cells_csv(csv, rep.set.cells);
    write_file(ctx.out / "spectrum_cells.csv", csv.str());
    write_json(ctx, "spectrum", out);
    std::cout << rep.set.cells.size() << " cells\n";
    return kExitOk;
}

struct VerifyArgs {
    std::string lemma = "EL";
    int count = 20;
};

std::vector<HarnessInput> verify_family(const std::string& lemma, int count, std::uint64_t seed,
                                        const SpaceParams& P) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<HarnessInput> out;
    for (int i = 0; i < count; ++i) {
        const BoundaryFunction f = experiments::random_trig_poly(rng, 1, 6);
        const double c = kTwoPi * u(rng);
        const double L = 0.05 + 0.5 * u(rng);
        if (lemma == "EL") {
            out.push_back(ELInput{f, Arc(c, L), P});
        } else if (lemma == "StL") {
            out.push_back(StLInput{f, Arc(c, L), Arc(c, 3.0 * L), P});
        } else if (lemma == "LIn") {
            BlaschkeProduct B;
            for (int k = 0; k < 3; ++k) B.zeros.push_back(DiskPoint(std::polar(0.3 + 0.6 * u(rng), kTwoPi * u(rng))));
            out.push_back(LInInput{f, B, DiskPoint(std::polar(0.5 * u(rng), kTwoPi * u(rng))), P.p, P.s});
        } else if (lemma == "LPZ") {
            const BoundaryFunction g = experiments::random_trig_poly(rng, 1, 6);
            TaylorSeries h{{0.0}};
            for (int n = 0; n <= g.coefficients()->N; ++n) h.a.push_back(g.coefficients()->at(n));
            DiscretePointMeasure mu;
            for (int k = 2; k < 200; ++k) {
                const double depth = 1.0 / k;
                mu.atoms.push_back({DiskPoint::polar(depth, kTwoPi * u(rng)), std::pow(depth, 1.0 + P.s)});
            }
            out.push_back(LPZInput{h, mu, P.p, P.s});
        } else if (lemma == "BMO-inc") {
            out.push_back(BMOIncInput{f, Arc(c, L), P});
        } else {
            throw FormatError("verify: unknown lemma '" + lemma + "'");
        }
    }
    return out;
}

int cmd_verify(const Context& ctx, const CLI::App& sub, const VerifyArgs& a) {
    const std::string lemma = setting(ctx, sub, "--lemma", "lemma", a.lemma);
    const int count = setting(ctx, sub, "--count", "count", a.count);
    if (count < 1) throw FormatError("verify: --count must be positive");
    const auto family = verify_family(lemma, count, ctx.seed, ctx.params);
    json rows = json::array();
    double C = 0.0, C2 = 0.0;
    bool converged = true;
    const QuadratureSpec fine = ctx.qspec.refined();
    for (const HarnessInput& in : family) {
        const HarnessResult r = inequality_harness(in, ctx.qspec);
        const HarnessResult r2 = inequality_harness(in, fine);
        C = std::max(C, r.ratio);
        C2 = std::max(C2, r2.ratio);
        converged = converged && r.converged;
        json j = to_json(r);
        j["ratio_refined"] = r2.ratio;
        rows.push_back(j);
    }
    json out = envelope("verify");
    out["lemma"] = lemma;
    out["instances"] = rows;
    out["max_ratio"] = C;
    out["max_ratio_refined"] = C2;
    out["stable"] = C > 0.0 ? std::abs(C2 / C - 1.0) <= 0.2 : C2 == 0.0;
    write_json(ctx, "verify", out);
    std::cout << lemma << ": max ratio " << C << " (refined " << C2 << ")\n";
    demand(ctx, converged, "harness quadrature");
    return kExitOk;
}

struct SuiteArgs {
    std::vector<int> only;
};

int cmd_suite(const Context& ctx, const SuiteArgs& a) {
    experiments::SuiteOptions opts;
    opts.seed = ctx.seed;
    opts.qspec = ctx.qspec;
    opts.search = ctx.search;
    opts.only = {a.only.begin(), a.only.end()};
    json rows = json::array();
    bool all = true;
    experiments::run_suite(opts, [&](const experiments::CriterionResult& r) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << ". " << r.title << ": " << r.detail << "\n"
                  << std::flush;
        all = all && r.passed;
        rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}, {"data", r.data}});
    });
    json out = envelope("suite");
    out["criteria"] = rows;
    out["passed"] = all;
    write_json(ctx, "suite", out);
    return all ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qlab: numerical experiments on Q_s^p spaces, Carleson measures and multipliers"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--config", common.config_path, "JSON config file; flags override it");
    app.add_option("--out", common.out, "Output directory");
    app.add_option("--seed", common.seed, "Random seed");
    app.add_option("--threads", common.threads, "Worker thread cap (0 = hardware)");
    app.add_option("--resolution", common.resolution, "Deepest dyadic level J_max")->check(CLI::Range(6, 16));
    app.add_option("--tolerance", common.tolerance, "Quadrature tolerance")->check(CLI::PositiveNumber);
    app.add_option("--p", common.p, "Integrability exponent p of the space");
    app.add_option("--space-s", common.s, "Exponent s of the space");
    app.add_flag("--require-converged", common.require_converged, "Exit 3 when a result is not converged");

    SeminormArgs sa;
    auto* seminorm = app.add_subcommand("seminorm", "Any seminorm of a function file");
    seminorm->add_option("--kind", sa.kind, "qps-boundary, mobius, gradient, log-weighted, bmo, disk, bp or bloch");
    seminorm->add_option("--f", sa.f, "Boundary function JSON");
    seminorm->add_option("--h", sa.h, "Analytic function JSON");

    CarlesonArgs ca;
    auto* carleson = app.add_subcommand("carleson", "Carleson tests and trend slopes for a point measure");
    carleson->add_option("--measure", ca.measure, "Measure JSON");
    carleson->add_option("--exponent-pair", ca.pair, "Re-weight atoms by (1-|z|)^s and (1-|z|)^r")->expected(2);
    carleson->add_option("--s", ca.s, "Exponent when no pair is given");
    carleson->add_option("--alpha", ca.alpha, "Logarithmic exponent");
    carleson->add_flag("--mobius", ca.mobius, "Mobius form instead of sectors");
    carleson->add_option("--trend-levels", ca.levels, "Dyadic levels of the trend fit");

    ConstructArgs co;
    auto* construct = app.add_subcommand("construct", "Emit a construction");
    construct->add_option("--what", co.what, "kc, lacunary-g, lacunary-h, log-test, zero-set or rademacher")
        ->required();
    construct->add_option("--s", co.s);
    construct->add_option("--r", co.r);
    construct->add_option("--t", co.t);
    construct->add_option("--eps", co.eps);
    construct->add_option("--theta", co.theta);
    construct->add_option("--p1", co.p1);
    construct->add_option("--p2", co.p2);
    construct->add_option("--K", co.K, "Points or terms");
    construct->add_option("--N", co.N, "Zero-set length");
    construct->add_option("--w", co.w, "Point w as re im")->expected(2);
    construct->add_option("--time", co.time, "Rademacher parameter t in [0, 1]");

    RegimeArgs ra;
    auto* regime = app.add_subcommand("regime", "Multiplier regime for one point or a grid");
    regime->add_option("--grid", ra.grid, "Parameter grid (default)");
    regime->add_option("--point", ra.point, "p1 p2 s r")->expected(4);

    MultiplierArgs ma;
    auto* multiplier = app.add_subcommand("multiplier", "Multiplier condition for a boundary function");
    multiplier->add_option("--f", ma.f, "Boundary function JSON");
    multiplier->add_option("--p1", ma.p1);
    multiplier->add_option("--p2", ma.p2);
    multiplier->add_option("--s", ma.s);
    multiplier->add_option("--r", ma.r);

    SpectrumArgs sp;
    auto* spectrum = app.add_subcommand("spectrum", "Spectrum of a multiplication operator");
    spectrum->add_option("--mode", sp.mode, "boundary or analytic");
    spectrum->add_option("--f", sp.f, "Boundary function JSON");
    spectrum->add_option("--h", sp.h, "Analytic function JSON");
    spectrum->add_option("--cell", sp.cell, "Cell size");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Inequality harness over a random family");
    verify->add_option("--lemma", va.lemma, "EL, StL, LIn, LPZ or BMO-inc");
    verify->add_option("--count", va.count, "Family size");

    SuiteArgs su;
    auto* suite = app.add_subcommand("suite", "Full acceptance run");
    suite->add_option("--only", su.only, "Criterion numbers to run")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidConfig;
    }

    try {
        const Context ctx = make_context(common, app);
        if (*seminorm) return cmd_seminorm(ctx, *seminorm, sa);
        if (*carleson) return cmd_carleson(ctx, *carleson, ca);
        if (*construct) return cmd_construct(ctx, *construct, co);
        if (*regime) return cmd_regime(ctx, *regime, ra);
        if (*multiplier) return cmd_multiplier(ctx, *multiplier, ma);
        if (*spectrum) return cmd_spectrum(ctx, *spectrum, sp);
        if (*verify) return cmd_verify(ctx, *verify, va);
        if (*suite) return cmd_suite(ctx, su);
    } catch (const NotConverged& e) {
        std::cerr << "qlab: " << e.what() << "\n";
        return kExitNotConverged;
    } catch (const std::invalid_argument& e) {
        std::cerr << "qlab: invalid configuration: " << e.what() << "\n";
        return kExitInvalidConfig;
    } catch (const json::exception& e) {
        std::cerr << "qlab: invalid configuration: " << e.what() << "\n";
        return kExitInvalidConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "qlab: invalid configuration: " << e.what() << "\n";
        return kExitInvalidConfig;
    }
    return kExitInvalidConfig;
}
