#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "qspace/geometry.hpp"

namespace qspace {

/// Trigonometric coefficients c_n for n in [-N, N], stored at c[n + N].
struct FourierCoefficients {
    int N = 0;
    std::vector<cplx> c{cplx{}};

    FourierCoefficients() = default;
    FourierCoefficients(int degree, std::vector<cplx> coeffs);

    cplx at(int n) const { return (n < -N || n > N) ? cplx{} : c[static_cast<std::size_t>(n + N)]; }
    cplx& at_mut(int n) { return c[static_cast<std::size_t>(n + N)]; }
    /// Largest |n| with a nonzero coefficient.
    int effective_degree() const;
    /// c_{-n} == conj(c_n) up to `tol` relative to the largest coefficient.
    bool is_real(double tol = 1e-12) const;
};

/// Values at the M uniform angles 2*pi*k/M, k = 0..M-1.
struct SampledGrid {
    std::vector<cplx> values;
};

/// Value and Wirtinger derivatives of an extension at a point of D.
struct ExtensionJet {
    cplx value;
    cplx dz;
    cplx dzbar;
    bool converged = true;

    /// Magnitude of the real gradient (componentwise for complex fields).
    double gradient_norm() const;
};

enum class Smoothness { Discontinuous, Continuous, Lipschitz, Smooth };

/// A boundary function given by an evaluator. `extension`, when present, returns
/// the harmonic extension and its derivatives in closed form.
struct ClosedForm {
    std::string name;
    std::function<cplx(double)> eval;
    Smoothness smoothness = Smoothness::Smooth;
    std::function<ExtensionJet(const DiskPoint&)> extension;
    nlohmann::json params = nlohmann::json::object();
};

enum class Representation { Fourier, Samples, Closed };

class BoundaryFunction {
public:
    BoundaryFunction();

    static BoundaryFunction fourier(FourierCoefficients coeffs);
    /// Throws std::invalid_argument unless M >= 16 is a power of two.
    static BoundaryFunction samples(std::vector<cplx> values);
    static BoundaryFunction closed(ClosedForm form);
    static BoundaryFunction constant(cplx value);

    Representation representation() const;

    /// Boundary value at e^{i theta}. Sampled grids interpolate linearly.
    cplx operator()(double theta) const;

    /// Fourier data for the Fourier and sampled representations (the latter is
    /// promoted by a discrete transform); nullptr for closed forms.
    const FourierCoefficients* coefficients() const;
    const SampledGrid* grid() const;
    const ClosedForm* closed_form() const;

    /// lambda * f, staying in the same representation.
    BoundaryFunction scaled(cplx lambda) const;
    /// f(theta - phi): the function rotated by phi.
    BoundaryFunction rotated(double phi) const;
    /// Uniform samples at M angles, whatever the representation.
    std::vector<cplx> sample(std::size_t M) const;

private:
    struct Samples {
        SampledGrid grid;
        std::shared_ptr<const FourierCoefficients> promoted;
    };
    std::variant<FourierCoefficients, Samples, ClosedForm> rep_;
};

/// f o sigma_a as a boundary function. Closed-form extensions are carried
/// through the chain rule, since harmonic extension commutes with sigma_a.
BoundaryFunction compose_mobius(const BoundaryFunction& f, const DiskPoint& a);

/// Harmonic extension with Wirtinger derivatives. Coefficient sums for Fourier
/// and sampled data; the closed-form extension when supplied; otherwise the
/// Poisson integral pulled back through sigma_z, refined until two successive
/// node counts agree to `tol`.
ExtensionJet extension_jet(const BoundaryFunction& f, const DiskPoint& z, double tol = 1e-10);

cplx poisson_extension(const BoundaryFunction& f, const DiskPoint& z);
double poisson_gradient(const BoundaryFunction& f, const DiskPoint& z);

/// Extension jets at the n cell midpoints theta0 + (m + 1/2) * dtheta on the
/// circle |z| = 1 - y. Full rings of coefficient data go through one FFT.
std::vector<ExtensionJet> ring_jets(const BoundaryFunction& f, double y, double theta0, double dtheta,
                                    std::size_t n);

/// Conjugate function normalized to vanish at 0: c_n -> -i sgn(n) c_n.
/// Throws std::invalid_argument for non-real input.
FourierCoefficients harmonic_conjugate(const FourierCoefficients& f);

/// Mean of f over the arc.
cplx arc_average(const BoundaryFunction& f, const Arc& arc);

/// r_n(t) = r_0(2^n t) with r_0 = 1 on (0, 1/2), -1 on (1/2, 1), 0 at breakpoints.
int rademacher(int n, double t);

/// Named closed forms (also reachable from JSON by name).
namespace closed {
BoundaryFunction cos_mode(int n, double amplitude = 1.0);
BoundaryFunction sin_mode(int n, double amplitude = 1.0);
/// e^{i n theta}.
BoundaryFunction exp_mode(int n);
/// +1 on (0, pi), -1 on (pi, 2*pi), 0 at the two jumps.
BoundaryFunction sign_step();
/// Two-valued step taking `upper` on (0, pi) and `lower` on (pi, 2*pi).
BoundaryFunction two_valued_step(cplx upper, cplx lower);
/// Boundary values of log(2/(1 - conj(w) z)).
BoundaryFunction log_test(const DiskPoint& w);
}  // namespace closed

// ---------------------------------------------------------------------------

struct TaylorSeries {
    std::vector<cplx> a;
};

/// c[i] multiplies z^{2^{first_k + i}}.
struct LacunarySeries {
    int first_k = 0;
    std::vector<cplx> c;
};

/// Zeros are stored in polar form; a zero at the origin contributes the factor z.
struct BlaschkeProduct {
    std::vector<DiskPoint> zeros;
};

struct ClosedAnalytic {
    std::string name;
    std::function<cplx(cplx)> value;
    std::function<cplx(cplx)> derivative;
    /// Optional Taylor truncation.
    std::vector<cplx> taylor;
    nlohmann::json params = nlohmann::json::object();
};

enum class AnalyticKind { Taylor, Lacunary, Blaschke, Closed };

class AnalyticFunction {
public:
    AnalyticFunction() : rep_(TaylorSeries{{cplx{}}}) {}
    AnalyticFunction(TaylorSeries t) : rep_(std::move(t)) {}
    AnalyticFunction(LacunarySeries l) : rep_(std::move(l)) {}
    AnalyticFunction(BlaschkeProduct b) : rep_(std::move(b)) {}
    AnalyticFunction(ClosedAnalytic c) : rep_(std::move(c)) {}

    AnalyticKind kind() const;

    cplx value(cplx z) const;
    cplx derivative(cplx z) const;
    /// Value on T: series summed at |z| = 1, Blaschke factors evaluated exactly.
    cplx boundary_value(double theta) const;

    const TaylorSeries* taylor() const { return std::get_if<TaylorSeries>(&rep_); }
    const LacunarySeries* lacunary() const { return std::get_if<LacunarySeries>(&rep_); }
    const BlaschkeProduct* blaschke() const { return std::get_if<BlaschkeProduct>(&rep_); }
    const ClosedAnalytic* closed() const { return std::get_if<ClosedAnalytic>(&rep_); }

    /// Boundary restriction as a closed-form boundary function.
    BoundaryFunction boundary() const;

private:
    std::variant<TaylorSeries, LacunarySeries, BlaschkeProduct, ClosedAnalytic> rep_;
};

cplx blaschke_eval(const BlaschkeProduct& B, const DiskPoint& z);
/// B(z) and B'(z) by the product rule.
std::pair<cplx, cplx> blaschke_jet(const BlaschkeProduct& B, cplx z);
/// 1 - |B(z)|^2 without cancellation near T.
double blaschke_one_minus_modulus_sq(const BlaschkeProduct& B, const DiskPoint& z);

/// M_p(r, h) by the trapezoid rule on enough nodes to resolve the series.
double integral_means(const AnalyticFunction& h, double p, double r);

/// h = f_hat + i * conj(f)_hat for real f: c_0 + 2 sum_{n>0} c_n z^n.
TaylorSeries analytic_completion(const FourierCoefficients& f);

}  // namespace qspace
