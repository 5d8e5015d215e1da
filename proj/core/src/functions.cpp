#include "qspace/functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fft.hpp"

namespace qspace {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// value = sum_{n>=0} c_n z^n + sum_{n>0} c_{-n} conj(z)^n, derivatives termwise.
ExtensionJet fourier_jet(const FourierCoefficients& f, cplx z) {
    const cplx zb = std::conj(z);
    cplx pos{}, neg{}, dpos{}, dneg{};
    for (int n = f.N; n >= 1; --n) {
        const double dn = static_cast<double>(n);
        dpos = dpos * z + dn * f.at(n);
        dneg = dneg * zb + dn * f.at(-n);
        pos = pos * z + f.at(n);
        neg = neg * zb + f.at(-n);
    }
    return {f.at(0) + pos * z + neg * zb, dpos, dneg, true};
}

// Poisson integral pulled back through sigma_z: nodes are uniform in the
// preimage angle, where the kernel becomes the constant 1.
ExtensionJet pullback_jet(const std::function<cplx(double)>& f, const DiskPoint& z, double tol) {
    const cplx zv = z.value();
    const double w = z.one_minus_modulus_sq();
    auto node = [&](double phi, cplx& sv, cplx& sd, cplx& sdb) {
        const cplx om = std::polar(1.0, phi);
        const cplx zeta = (zv - om) / (1.0 - std::conj(zv) * om);
        const cplx fv = f(std::arg(zeta));
        sv += fv;
        sd += fv * std::conj(om);
        sdb += fv * om;
    };
    std::size_t n = 64;
    cplx sv{}, sd{}, sdb{};
    for (std::size_t j = 0; j < n; ++j) node(kTwoPi * static_cast<double>(j) / static_cast<double>(n), sv, sd, sdb);
    auto finish = [&](std::size_t count) {
        const double inv = 1.0 / static_cast<double>(count);
        return ExtensionJet{sv * inv, -sd * inv / w, -sdb * inv / w, true};
    };
    ExtensionJet prev = finish(n);
    constexpr std::size_t kMaxNodes = std::size_t{1} << 16;
    while (n < kMaxNodes) {
        for (std::size_t j = 0; j < n; ++j) {
            node(kTwoPi * (static_cast<double>(j) + 0.5) / static_cast<double>(n), sv, sd, sdb);
        }
        n *= 2;
        ExtensionJet cur = finish(n);
        const double scale = 1.0 + std::abs(cur.value) + w * (std::abs(cur.dz) + std::abs(cur.dzbar));
        const double diff = std::abs(cur.value - prev.value) +
                            w * (std::abs(cur.dz - prev.dz) + std::abs(cur.dzbar - prev.dzbar));
        prev = cur;
        if (diff <= tol * scale) return cur;
    }
    prev.converged = false;
    return prev;
}

FourierCoefficients promote(const std::vector<cplx>& values) {
    std::vector<cplx> d = values;
    detail::dft_inplace(d, -1);
    const int M = static_cast<int>(values.size());
    const int N = M / 2;
    std::vector<cplx> c(static_cast<std::size_t>(2 * N + 1));
    const double inv = 1.0 / static_cast<double>(M);
    for (int n = -N + 1; n < N; ++n) {
        c[static_cast<std::size_t>(n + N)] = d[static_cast<std::size_t>((n + M) % M)] * inv;
    }
    // The Nyquist mode is split evenly between +N and -N.
    const cplx nyq = d[static_cast<std::size_t>(N)] * inv * 0.5;
    c.front() = nyq;
    c.back() = nyq;
    return FourierCoefficients(N, std::move(c));
}

cplx interpolate(const std::vector<cplx>& v, double theta) {
    const double M = static_cast<double>(v.size());
    const double x = wrap_angle(theta) / kTwoPi * M;
    const double fl = std::floor(x);
    const std::size_t i = static_cast<std::size_t>(fl) % v.size();
    const std::size_t k = (i + 1) % v.size();
    const double t = x - fl;
    return (1.0 - t) * v[i] + t * v[k];
}

ExtensionJet rotate_jet(const ExtensionJet& j, double phi) {
    return {j.value, j.dz * std::polar(1.0, -phi), j.dzbar * std::polar(1.0, phi), j.converged};
}

}  // namespace

FourierCoefficients::FourierCoefficients(int degree, std::vector<cplx> coeffs)
    : N(degree), c(std::move(coeffs)) {
    if (N < 0 || c.size() != static_cast<std::size_t>(2 * N + 1)) {
        throw std::invalid_argument("FourierCoefficients: need 2N+1 coefficients with N >= 0");
    }
}

int FourierCoefficients::effective_degree() const {
    for (int n = N; n > 0; --n) {
        if (at(n) != cplx{} || at(-n) != cplx{}) return n;
    }
    return 0;
}

bool FourierCoefficients::is_real(double tol) const {
    double scale = 0.0;
    for (const cplx& v : c) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return true;
    for (int n = 0; n <= N; ++n) {
        if (std::abs(at(n) - std::conj(at(-n))) > tol * scale) return false;
    }
    return true;
}

double ExtensionJet::gradient_norm() const {
    return std::sqrt(2.0 * (std::norm(dz) + std::norm(dzbar)));
}

BoundaryFunction::BoundaryFunction() : rep_(FourierCoefficients{}) {}

BoundaryFunction BoundaryFunction::fourier(FourierCoefficients coeffs) {
    BoundaryFunction f;
    f.rep_ = std::move(coeffs);
    return f;
}

BoundaryFunction BoundaryFunction::samples(std::vector<cplx> values) {
    if (values.size() < 16 || !is_power_of_two(values.size())) {
        throw std::invalid_argument("SampledGrid: sample count must be a power of two >= 16");
    }
    BoundaryFunction f;
    auto promoted = std::make_shared<const FourierCoefficients>(promote(values));
    f.rep_ = Samples{SampledGrid{std::move(values)}, std::move(promoted)};
    return f;
}

BoundaryFunction BoundaryFunction::closed(ClosedForm form) {
    if (!form.eval) throw std::invalid_argument("ClosedForm: evaluator is required");
    BoundaryFunction f;
    f.rep_ = std::move(form);
    return f;
}

BoundaryFunction BoundaryFunction::constant(cplx value) {
    return fourier(FourierCoefficients(0, {value}));
}

Representation BoundaryFunction::representation() const {
    switch (rep_.index()) {
        case 0: return Representation::Fourier;
        case 1: return Representation::Samples;
        default: return Representation::Closed;
    }
}

cplx BoundaryFunction::operator()(double theta) const {
    if (const auto* fc = std::get_if<FourierCoefficients>(&rep_)) {
        const cplx w = std::polar(1.0, theta);
        cplx acc{};
        for (int n = fc->N; n >= -fc->N; --n) acc = acc * w + fc->at(n);
        return acc * std::polar(1.0, -static_cast<double>(fc->N) * theta);
    }
    if (const auto* s = std::get_if<Samples>(&rep_)) return interpolate(s->grid.values, theta);
    return std::get<ClosedForm>(rep_).eval(theta);
}

const FourierCoefficients* BoundaryFunction::coefficients() const {
    if (const auto* fc = std::get_if<FourierCoefficients>(&rep_)) return fc;
    if (const auto* s = std::get_if<Samples>(&rep_)) return s->promoted.get();
    return nullptr;
}

const SampledGrid* BoundaryFunction::grid() const {
    const auto* s = std::get_if<Samples>(&rep_);
    return s ? &s->grid : nullptr;
}

const ClosedForm* BoundaryFunction::closed_form() const { return std::get_if<ClosedForm>(&rep_); }

BoundaryFunction BoundaryFunction::scaled(cplx lambda) const {
    if (const auto* fc = std::get_if<FourierCoefficients>(&rep_)) {
        FourierCoefficients g = *fc;
        for (cplx& v : g.c) v *= lambda;
        return fourier(std::move(g));
    }
    if (const auto* s = std::get_if<Samples>(&rep_)) {
        std::vector<cplx> v = s->grid.values;
        for (cplx& x : v) x *= lambda;
        return samples(std::move(v));
    }
    const ClosedForm& cf = std::get<ClosedForm>(rep_);
    ClosedForm g;
    g.name = cf.name;
    g.params = cf.params;
    cplx total = lambda;
    if (cf.params.contains("scale")) total *= cplx(cf.params["scale"][0].get<double>(), cf.params["scale"][1].get<double>());
    g.params["scale"] = {total.real(), total.imag()};
    g.smoothness = cf.smoothness;
    g.eval = [e = cf.eval, lambda](double t) { return lambda * e(t); };
    if (cf.extension) {
        g.extension = [x = cf.extension, lambda](const DiskPoint& z) {
            ExtensionJet j = x(z);
            return ExtensionJet{lambda * j.value, lambda * j.dz, lambda * j.dzbar, j.converged};
        };
    }
    return closed(std::move(g));
}

BoundaryFunction BoundaryFunction::rotated(double phi) const {
    if (const auto* fc = std::get_if<FourierCoefficients>(&rep_)) {
        FourierCoefficients g = *fc;
        for (int n = -g.N; n <= g.N; ++n) g.at_mut(n) *= std::polar(1.0, -static_cast<double>(n) * phi);
        return fourier(std::move(g));
    }
    if (const auto* s = std::get_if<Samples>(&rep_)) {
        const double M = static_cast<double>(s->grid.values.size());
        const double shift = wrap_angle(phi) / kTwoPi * M;
        if (std::abs(shift - std::round(shift)) < 1e-9) {
            const std::size_t sh = static_cast<std::size_t>(std::llround(shift)) % s->grid.values.size();
            std::vector<cplx> v(s->grid.values.size());
            for (std::size_t k = 0; k < v.size(); ++k) v[(k + sh) % v.size()] = s->grid.values[k];
            return samples(std::move(v));
        }
    }
    ClosedForm g;
    g.name = "rotated";
    g.params = {{"phi", phi}};
    g.smoothness = Smoothness::Continuous;
    if (const auto* cf = closed_form()) g.smoothness = cf->smoothness;
    const BoundaryFunction base = *this;
    g.eval = [base, phi](double t) { return base(t - phi); };
    g.extension = [base, phi](const DiskPoint& z) {
        return rotate_jet(extension_jet(base, DiskPoint::polar(z.depth(), z.angle() - phi)), phi);
    };
    return closed(std::move(g));
}

std::vector<cplx> BoundaryFunction::sample(std::size_t M) const {
    std::vector<cplx> out(M);
    for (std::size_t k = 0; k < M; ++k) out[k] = (*this)(kTwoPi * static_cast<double>(k) / static_cast<double>(M));
    return out;
}

BoundaryFunction compose_mobius(const BoundaryFunction& f, const DiskPoint& a) {
    const MobiusMap sigma(a);
    ClosedForm g;
    g.name = "mobius_composition";
    g.params = {{"a", {a.value().real(), a.value().imag()}}};
    g.smoothness = Smoothness::Smooth;
    if (const auto* cf = f.closed_form()) g.smoothness = cf->smoothness;
    g.eval = [f, sigma](double t) { return f(std::arg(sigma(std::polar(1.0, t)))); };
    g.extension = [f, sigma](const DiskPoint& z) {
        const DiskPoint w = sigma.apply(z);
        const ExtensionJet j = extension_jet(f, w);
        const cplx d = sigma.derivative(z.value());
        return ExtensionJet{j.value, j.dz * d, j.dzbar * std::conj(d), j.converged};
    };
    return BoundaryFunction::closed(std::move(g));
}

ExtensionJet extension_jet(const BoundaryFunction& f, const DiskPoint& z, double tol) {
    if (const auto* fc = f.coefficients()) return fourier_jet(*fc, z.value());
    const ClosedForm& cf = *f.closed_form();
    if (cf.extension) return cf.extension(z);
    return pullback_jet(cf.eval, z, tol);
}

cplx poisson_extension(const BoundaryFunction& f, const DiskPoint& z) { return extension_jet(f, z).value; }

double poisson_gradient(const BoundaryFunction& f, const DiskPoint& z) {
    return extension_jet(f, z).gradient_norm();
}

std::vector<ExtensionJet> ring_jets(const BoundaryFunction& f, double y, double theta0, double dtheta,
                                    std::size_t n) {
    std::vector<ExtensionJet> out(n);
    const double step = dtheta;
    const FourierCoefficients* fc = f.coefficients();
    const int degree = fc ? fc->effective_degree() : 0;
    const bool full_ring = std::abs(dtheta * static_cast<double>(n) - kTwoPi) < 1e-12;
    if (fc == nullptr || degree <= 16 || !full_ring) {
        for (std::size_t m = 0; m < n; ++m) {
            out[m] = extension_jet(f, DiskPoint::polar(y, theta0 + (static_cast<double>(m) + 0.5) * step));
        }
        return out;
    }
    // sum_k b_k e^{i k theta_m} with theta_m = theta0 + pi/n + 2 pi m / n: fold k mod n
    // after absorbing the offset phase, then one inverse DFT.
    const double rho = 1.0 - y;
    const double offset = theta0 + 0.5 * step;
    const long nn = static_cast<long>(n);
    std::vector<cplx> val(n), dz(n), dzb(n);
    auto fold = [&](std::vector<cplx>& buf, long k, cplx b) {
        const long idx = ((k % nn) + nn) % nn;
        buf[static_cast<std::size_t>(idx)] += b * std::polar(1.0, static_cast<double>(k) * offset);
    };
    double rpow = 1.0;  // rho^n
    double rprev = 0.0; // rho^{n-1}
    for (int k = 0; k <= degree; ++k) {
        fold(val, k, fc->at(k) * rpow);
        if (k > 0) {
            fold(val, -k, fc->at(-k) * rpow);
            fold(dz, k - 1, static_cast<double>(k) * fc->at(k) * rprev);
            fold(dzb, -(k - 1), static_cast<double>(k) * fc->at(-k) * rprev);
        }
        rprev = rpow;
        rpow *= rho;
    }
    detail::dft_inplace(val, +1);
    detail::dft_inplace(dz, +1);
    detail::dft_inplace(dzb, +1);
    for (std::size_t m = 0; m < n; ++m) out[m] = {val[m], dz[m], dzb[m], true};
    return out;
}

FourierCoefficients harmonic_conjugate(const FourierCoefficients& f) {
    if (!f.is_real(1e-10)) throw std::invalid_argument("harmonic_conjugate: input is not real-valued");
    FourierCoefficients g = f;
    g.at_mut(0) = cplx{};
    const cplx mi{0.0, -1.0};
    for (int n = 1; n <= f.N; ++n) {
        g.at_mut(n) = mi * f.at(n);
        g.at_mut(-n) = -mi * f.at(-n);
    }
    return g;
}

cplx arc_average(const BoundaryFunction& f, const Arc& arc) {
    const double L = arc.length();
    const double a = arc.center() - 0.5 * L;
    if (const auto* fc = f.coefficients(); fc && f.representation() == Representation::Fourier) {
        cplx acc = fc->at(0);
        for (int n = -fc->N; n <= fc->N; ++n) {
            if (n == 0) continue;
            const double dn = static_cast<double>(n);
            acc += fc->at(n) * (std::polar(1.0, dn * (a + L)) - std::polar(1.0, dn * a)) / (cplx{0.0, dn} * L);
        }
        return acc;
    }
    using boost::math::quadrature::gauss_kronrod;
    const double re = gauss_kronrod<double, 31>::integrate([&](double t) { return f(t).real(); }, a, a + L, 20, 1e-12);
    const double im = gauss_kronrod<double, 31>::integrate([&](double t) { return f(t).imag(); }, a, a + L, 20, 1e-12);
    return cplx{re, im} / L;
}

int rademacher(int n, double t) {
    if (n < 0 || !(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("rademacher: need n >= 0 and t in [0, 1]");
    const double x = std::ldexp(t, n);
    const double frac = x - std::floor(x);
    if (frac == 0.0 || frac == 0.5) return 0;
    return frac < 0.5 ? 1 : -1;
}

namespace closed {

BoundaryFunction cos_mode(int n, double amplitude) {
    if (n < 0) n = -n;
    ClosedForm g;
    g.name = "cos";
    g.params = {{"n", n}, {"amplitude", amplitude}};
    g.eval = [n, amplitude](double t) { return cplx{amplitude * std::cos(n * t), 0.0}; };
    g.extension = [n, amplitude](const DiskPoint& p) {
        const cplx z = p.value();
        const cplx zn = std::pow(z, n);
        if (n == 0) return ExtensionJet{amplitude, 0.0, 0.0, true};
        const cplx d = 0.5 * amplitude * static_cast<double>(n) * std::pow(z, n - 1);
        return ExtensionJet{amplitude * zn.real(), d, std::conj(d), true};
    };
    return BoundaryFunction::closed(std::move(g));
}

BoundaryFunction sin_mode(int n, double amplitude) {
    ClosedForm g;
    g.name = "sin";
    g.params = {{"n", n}, {"amplitude", amplitude}};
    g.eval = [n, amplitude](double t) { return cplx{amplitude * std::sin(n * t), 0.0}; };
    g.extension = [n, amplitude](const DiskPoint& p) {
        const int m = std::abs(n);
        const double sg = n < 0 ? -1.0 : 1.0;
        if (m == 0) return ExtensionJet{0.0, 0.0, 0.0, true};
        const cplx z = p.value();
        const cplx d = sg * amplitude * static_cast<double>(m) * std::pow(z, m - 1) / cplx{0.0, 2.0};
        return ExtensionJet{sg * amplitude * std::pow(z, m).imag(), d, std::conj(d), true};
    };
    return BoundaryFunction::closed(std::move(g));
}

BoundaryFunction exp_mode(int n) {
    ClosedForm g;
    g.name = "exp";
    g.params = {{"n", n}};
    g.eval = [n](double t) { return std::polar(1.0, n * t); };
    g.extension = [n](const DiskPoint& p) {
        const int m = std::abs(n);
        const cplx w = n >= 0 ? p.value() : std::conj(p.value());
        const cplx v = std::pow(w, m);
        const cplx d = m == 0 ? cplx{} : static_cast<double>(m) * std::pow(w, m - 1);
        return n >= 0 ? ExtensionJet{v, d, 0.0, true} : ExtensionJet{v, 0.0, d, true};
    };
    return BoundaryFunction::closed(std::move(g));
}

namespace {
BoundaryFunction step_form(std::string name, cplx upper, cplx lower) {
    const cplx mid = 0.5 * (upper + lower);
    const cplx half = 0.5 * (upper - lower);
    ClosedForm g;
    g.name = std::move(name);
    g.params = {{"upper", {upper.real(), upper.imag()}}, {"lower", {lower.real(), lower.imag()}}};
    g.smoothness = Smoothness::Discontinuous;
    g.eval = [mid, half](double t) {
        const double w = wrap_angle(t);
        if (w == 0.0 || w == kPi) return mid;
        return w < kPi ? mid + half : mid - half;
    };
    // u = (2/pi) arg((1+z)/(1-z)) is the extension of the +-1 step.
    g.extension = [mid, half](const DiskPoint& p) {
        const cplx z = p.value();
        const double u = 2.0 / kPi * std::arg((1.0 + z) / (1.0 - z));
        const cplx du = 2.0 / (kPi * cplx{0.0, 1.0} * (1.0 - z * z));
        return ExtensionJet{mid + half * u, half * du, half * std::conj(du), true};
    };
    return BoundaryFunction::closed(std::move(g));
}

}  // namespace

BoundaryFunction two_valued_step(cplx upper, cplx lower) { return step_form("two_valued_step", upper, lower); }

BoundaryFunction sign_step() { return step_form("sign_step", 1.0, -1.0); }

BoundaryFunction log_test(const DiskPoint& w) {
    const cplx wb = std::conj(w.value());
    ClosedForm g;
    g.name = "log_test";
    g.params = {{"w", {w.value().real(), w.value().imag()}}};
    g.eval = [wb](double t) { return std::log(2.0 / (1.0 - wb * std::polar(1.0, t))); };
    g.extension = [wb](const DiskPoint& p) {
        const cplx z = p.value();
        const cplx d = 1.0 - wb * z;
        return ExtensionJet{std::log(2.0 / d), wb / d, 0.0, true};
    };
    return BoundaryFunction::closed(std::move(g));
}

}  // namespace closed

}  // namespace qspace
