#include "qspace/io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

namespace qspace {

namespace {

json pair(cplx z) { return json::array({z.real(), z.imag()}); }

cplx to_cplx(const json& j, const char* what) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw FormatError(std::string(what) + ": expected a number or [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<cplx> to_cplx_list(const json& j, const char* what) {
    if (!j.is_array()) throw FormatError(std::string(what) + ": expected an array");
    std::vector<cplx> out;
    out.reserve(j.size());
    for (const json& e : j) out.push_back(to_cplx(e, what));
    return out;
}

json cplx_list(const std::vector<cplx>& v) {
    json a = json::array();
    for (const cplx& z : v) a.push_back(pair(z));
    return a;
}

const json& field(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) {
        throw FormatError(std::string(what) + ": missing field '" + key + "'");
    }
    return j.at(key);
}

template <class T>
T get_as(const json& j, const char* key, const char* what) {
    try {
        return field(j, key, what).get<T>();
    } catch (const json::exception& e) {
        throw FormatError(std::string(what) + ": bad field '" + key + "': " + e.what());
    }
}

DiskPoint disk_point_from_json(const json& j, const char* what) {
    if (j.is_object()) {
        return DiskPoint::polar(get_as<double>(j, "depth", what), get_as<double>(j, "angle", what));
    }
    return DiskPoint(to_cplx(j, what));
}

json disk_point_json(const DiskPoint& z) { return {{"depth", z.depth()}, {"angle", z.angle()}}; }

std::string smoothness_name(Smoothness s) {
    switch (s) {
        case Smoothness::Discontinuous: return "discontinuous";
        case Smoothness::Continuous: return "continuous";
        case Smoothness::Lipschitz: return "lipschitz";
        case Smoothness::Smooth: return "smooth";
    }
    return "unknown";
}

BoundaryFunction closed_from_json(const std::string& name, const json& params) {
    const char* what = "closed form";
    const json p = params.is_null() ? json::object() : params;
    BoundaryFunction f;
    if (name == "cos" || name == "sin") {
        const int n = get_as<int>(p, "n", what);
        const double amp = p.contains("amplitude") ? p["amplitude"].get<double>() : 1.0;
        f = name == "cos" ? closed::cos_mode(n, amp) : closed::sin_mode(n, amp);
    } else if (name == "exp") {
        f = closed::exp_mode(get_as<int>(p, "n", what));
    } else if (name == "sign_step") {
        f = closed::sign_step();
    } else if (name == "two_valued_step") {
        f = closed::two_valued_step(to_cplx(field(p, "upper", what), what), to_cplx(field(p, "lower", what), what));
    } else if (name == "log_test") {
        f = closed::log_test(disk_point_from_json(field(p, "w", what), what));
    } else {
        throw FormatError("closed form: unknown name '" + name + "'");
    }
    if (p.contains("scale")) f = f.scaled(to_cplx(p["scale"], what));
    return f;
}

}  // namespace

json to_json(const BoundaryFunction& f) {
    switch (f.representation()) {
        case Representation::Fourier: {
            const FourierCoefficients& c = *f.coefficients();
            if (c.N == 0) return {{"repr", "constant"}, {"value", pair(c.at(0))}};
            return {{"repr", "fourier"}, {"degree", c.N}, {"coeffs", cplx_list(c.c)}};
        }
        case Representation::Samples:
            return {{"repr", "samples"}, {"values", cplx_list(f.grid()->values)}};
        case Representation::Closed: {
            const ClosedForm& cf = *f.closed_form();
            if (cf.name == "rotated" || cf.name == "mobius_composition") {
                throw FormatError("closed form '" + cf.name + "' has no serialized form");
            }
            return {{"repr", "closed"}, {"name", cf.name}, {"params", cf.params},
                    {"smoothness", smoothness_name(cf.smoothness)}};
        }
    }
    throw FormatError("unknown representation");
}

BoundaryFunction boundary_function_from_json(const json& j) {
    const char* what = "boundary function";
    const std::string repr = get_as<std::string>(j, "repr", what);
    try {
        if (repr == "fourier") {
            const int N = get_as<int>(j, "degree", what);
            return BoundaryFunction::fourier(FourierCoefficients(N, to_cplx_list(field(j, "coeffs", what), what)));
        }
        if (repr == "samples") return BoundaryFunction::samples(to_cplx_list(field(j, "values", what), what));
        if (repr == "constant") return BoundaryFunction::constant(to_cplx(field(j, "value", what), what));
        if (repr == "closed") {
            return closed_from_json(get_as<std::string>(j, "name", what), j.contains("params") ? j["params"] : json());
        }
    } catch (const FormatError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string(what) + ": " + e.what());
    } catch (const std::domain_error& e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
    throw FormatError("boundary function: unknown repr '" + repr + "'");
}

json to_json(const AnalyticFunction& h) {
    switch (h.kind()) {
        case AnalyticKind::Taylor: return {{"kind", "taylor"}, {"coeffs", cplx_list(h.taylor()->a)}};
        case AnalyticKind::Lacunary:
            return {{"kind", "lacunary"}, {"first_k", h.lacunary()->first_k}, {"coeffs", cplx_list(h.lacunary()->c)}};
        case AnalyticKind::Blaschke: {
            json zs = json::array();
            for (const DiskPoint& z : h.blaschke()->zeros) zs.push_back(disk_point_json(z));
            return {{"kind", "blaschke"}, {"zeros", zs}};
        }
        case AnalyticKind::Closed: {
            const ClosedAnalytic& c = *h.closed();
            if (c.name != "log_test") throw FormatError("analytic closed form '" + c.name + "' has no serialized form");
            return {{"kind", "closed"}, {"name", c.name}, {"params", c.params}};
        }
    }
    throw FormatError("unknown analytic kind");
}

AnalyticFunction analytic_function_from_json(const json& j) {
    const char* what = "analytic function";
    const std::string kind = get_as<std::string>(j, "kind", what);
    if (kind == "taylor") return TaylorSeries{to_cplx_list(field(j, "coeffs", what), what)};
    if (kind == "lacunary") {
        LacunarySeries l;
        l.first_k = j.contains("first_k") ? get_as<int>(j, "first_k", what) : 0;
        if (l.first_k < 0) throw FormatError("analytic function: first_k must be non-negative");
        l.c = to_cplx_list(field(j, "coeffs", what), what);
        return l;
    }
    if (kind == "blaschke") {
        BlaschkeProduct B;
        const json& zs = field(j, "zeros", what);
        if (!zs.is_array()) throw FormatError("analytic function: zeros must be an array");
        try {
            for (const json& z : zs) B.zeros.push_back(disk_point_from_json(z, what));
        } catch (const std::domain_error& e) {
            throw FormatError(std::string("analytic function: ") + e.what());
        }
        return B;
    }
    if (kind == "closed") {
        const std::string name = get_as<std::string>(j, "name", what);
        if (name != "log_test") throw FormatError("analytic function: unknown closed name '" + name + "'");
        return log_test_function(disk_point_from_json(field(field(j, "params", what), "w", what), what));
    }
    throw FormatError("analytic function: unknown kind '" + kind + "'");
}

json to_json(const DiscretePointMeasure& mu) {
    json atoms = json::array();
    for (const Atom& a : mu.atoms) {
        const cplx z = a.z.value();
        json row = json::array({z.real(), z.imag(), a.mass});
        if (a.z.depth() < 1e-8) row.push_back(a.z.depth());
        atoms.push_back(std::move(row));
    }
    json j = {{"atoms", atoms}};
    if (mu.accumulation_angle) j["accumulation_angle"] = *mu.accumulation_angle;
    return j;
}

DiscretePointMeasure measure_from_json(const json& j) {
    const char* what = "measure";
    const json& atoms = field(j, "atoms", what);
    if (!atoms.is_array()) throw FormatError("measure: atoms must be an array");
    DiscretePointMeasure mu;
    for (const json& a : atoms) {
        if (!a.is_array() || (a.size() != 3 && a.size() != 4)) {
            throw FormatError("measure: each atom is [re, im, mass] or [re, im, mass, depth]");
        }
        const double re = a[0].get<double>(), im = a[1].get<double>(), m = a[2].get<double>();
        try {
            const DiskPoint z = a.size() == 4 ? DiskPoint::polar(a[3].get<double>(), std::atan2(im, re))
                                              : DiskPoint(cplx(re, im));
            mu.atoms.push_back({z, m});
        } catch (const std::exception& e) {
            throw FormatError(std::string("measure: ") + e.what());
        }
    }
    if (j.contains("accumulation_angle") && !j["accumulation_angle"].is_null()) {
        mu.accumulation_angle = get_as<double>(j, "accumulation_angle", what);
    }
    try {
        mu.validate();
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    return mu;
}

json to_json(const IntegralEstimate& e) {
    return {{"value", e.value}, {"error_estimate", e.error_estimate}, {"converged", e.converged}};
}

namespace {

json witness_json(const Witness& w) {
    json j = json::object();
    if (w.arc) j["arc"] = {{"center", w.arc->center()}, {"length", w.arc->length()}};
    if (w.point) j["point"] = disk_point_json(*w.point);
    return j;
}

}  // namespace

json to_json(const SeminormReport& r) {
    return {{"value", r.value},
            {"witness", witness_json(r.witness)},
            {"profile", r.profile},
            {"converged", r.converged},
            {"divergent", r.divergent},
            {"quadrature_converged", r.quadrature_converged},
            {"witness_error", r.witness_error}};
}

json to_json(const CarlesonReport& r) {
    json slope = std::isnan(r.slope) ? json(nullptr) : json(r.slope);
    return {{"value", r.value},
            {"witness", witness_json(r.witness)},
            {"profile", r.profile},
            {"slope", slope},
            {"bounded", r.bounded},
            {"quadrature_converged", r.quadrature_converged}};
}

json to_json(const RegimeDecision& d) {
    return {{"case", to_string(d.tag)},
            {"characterization", d.characterization},
            {"lhs_ratio", d.lhs_ratio},
            {"rhs_ratio", d.rhs_ratio}};
}

json to_json(const MultiplierReport& r) {
    json j = {{"regime", to_json(r.regime)},
              {"linf_bound", r.linf_bound},
              {"lp_mean", r.lp_mean},
              {"verdict", to_string(r.verdict)}};
    if (r.regime.nontrivial()) j["log_condition"] = to_json(r.log_condition);
    return j;
}

json to_json(const SpectrumReport& r) {
    json probes = json::array();
    for (const ProbeResult& p : r.probes) {
        probes.push_back({{"lambda", pair(p.lambda)},
                          {"distance", p.distance},
                          {"sup_inverse", p.sup_inverse},
                          {"bound", p.bound},
                          {"passed", p.passed}});
    }
    return {{"mode", r.mode == SpectrumMode::Boundary ? "boundary" : "analytic"},
            {"cell", r.set.cell},
            {"eps", r.set.eps},
            {"threshold", r.set.threshold},
            {"cells", r.set.cells.size()},
            {"note", r.note},
            {"probes", probes},
            {"unbounded", r.unbounded}};
}

json to_json(const HarnessResult& r) {
    json ratio = std::isfinite(r.ratio) ? json(r.ratio) : json("inf");
    return {{"lemma", r.lemma}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"ratio", ratio}, {"converged", r.converged}};
}

json to_json(const LacunaryProxy& p) {
    return {{"value", p.value}, {"terms", p.terms}, {"divergent", p.divergent}};
}

json to_json(const LacunarySeries& c) { return {{"first_k", c.first_k}, {"coeffs", cplx_list(c.c)}}; }

json to_json(const KhinchineSample& k) { return {{"moment", k.moment}, {"l2", k.l2}, {"ratio", k.ratio}}; }

namespace {

template <class T, class F>
T apply_overrides(const json& j, T base, const char* what, F&& assign) {
    if (j.is_null()) return base;
    if (!j.is_object()) throw FormatError(std::string(what) + ": expected an object");
    for (const auto& [key, value] : j.items()) {
        try {
            if (!assign(base, key, value)) throw FormatError(std::string(what) + ": unknown key '" + key + "'");
        } catch (const json::exception& e) {
            throw FormatError(std::string(what) + ": bad value for '" + key + "': " + e.what());
        }
    }
    try {
        base.validate();
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    return base;
}

}  // namespace

QuadratureSpec quadrature_from_json(const json& j, QuadratureSpec base) {
    return apply_overrides(j, base, "quadrature", [](QuadratureSpec& q, const std::string& k, const json& v) {
        if (k == "M") q.M = v.get<std::size_t>();
        else if (k == "h_min") q.h_min = v.get<double>();
        else if (k == "J") q.J = v.get<int>();
        else if (k == "tolerance") q.tolerance = v.get<double>();
        else if (k == "radial_nodes") q.radial_nodes = v.get<int>();
        else if (k == "angular_density") q.angular_density = v.get<double>();
        else return false;
        return true;
    });
}

SupSearchSpec search_from_json(const json& j, SupSearchSpec base) {
    return apply_overrides(j, base, "search", [](SupSearchSpec& s, const std::string& k, const json& v) {
        if (k == "J_max") s.J_max = v.get<int>();
        else if (k == "refine") s.refine = v.get<bool>();
        else if (k == "refine_rounds") s.refine_rounds = v.get<int>();
        else return false;
        return true;
    });
}

SpaceParams params_from_json(const json& j, SpaceParams base) {
    return apply_overrides(j, base, "params", [](SpaceParams& p, const std::string& k, const json& v) {
        if (k == "p") p.p = v.get<double>();
        else if (k == "s") p.s = v.get<double>();
        else return false;
        return true;
    });
}

void write_profile_csv(std::ostream& os, const std::vector<double>& profile) {
    os << "level,value\n";
    for (std::size_t j = 0; j < profile.size(); ++j) os << j << ',' << json(profile[j]).dump() << '\n';
}

void write_lacunary_csv(std::ostream& os, const LacunarySeries& c) {
    os << "k,re,im\n";
    for (std::size_t i = 0; i < c.c.size(); ++i) {
        os << c.first_k + static_cast<int>(i) << ',' << json(c.c[i].real()).dump() << ',' << json(c.c[i].imag()).dump()
           << '\n';
    }
}

void write_cells_csv(std::ostream& os, const std::vector<cplx>& cells) {
    os << "re,im\n";
    for (const cplx& z : cells) os << json(z.real()).dump() << ',' << json(z.imag()).dump() << '\n';
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError("'" + path + "': " + e.what());
    }
}

}  // namespace qspace
