#pragma once

// Spin- and pseudospin-symmetric radial Dirac models built on an exceptional
// Hermite family: energies, energy-dependent potentials, spinor components and
// residuals of the first- and second-order radial equations.
//
// The coupled system is
//   F' + (k/r - U) F = (M + E - V + S) G
//   G' - (k/r - U) G = (M - E + V + S) F
// with S = V (spin) or S = -V (pseudospin).

#include "errors.hpp"
#include "numerics.hpp"
#include "polycore.hpp"
#include "taylor.hpp"
#include "xhermite.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xhdirac {

enum class SymmetryKind { Spin, PseudoSpin };
enum class Component { F, G };

inline const char* to_string(SymmetryKind k) { return k == SymmetryKind::Spin ? "spin" : "pseudospin"; }
inline const char* to_string(Component c) { return c == Component::F ? "F" : "G"; }

/// Denominator of the pseudospin scalar potential: 2(E-M)(1+2r²)² or the
/// unsquared 2(E-M)(1+2r²).
enum class PseudoDenominator { Squared, Printed };

/// Which polynomial factor the wavefunction profile uses. Auto picks the
/// Wronskian P_n when n is admissible and the closed-form bracket otherwise.
enum class WavefunctionPath { Auto, Constructive, Literal };

/// Argument of the wavefunction profile: x = αr or x = r.
enum class ArgumentScale { Alpha, Unit };

struct ModelParams {
    double mass = 1.0;
    double alpha = 1.0;
    int k = 1;
    int n = 0;
    Partition partition{std::vector<int>{1, 1}};
    int branch = +1;

    int m_eff() const { return partition.size(); }

    void validate() const {
        if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("alpha must be positive");
        if (!(mass >= 0.0) || !std::isfinite(mass)) throw std::invalid_argument("mass must be non-negative");
        if (n < 0) throw std::invalid_argument("n must be non-negative");
        if (branch != 1 && branch != -1) throw std::invalid_argument("branch must be +1 or -1");
    }
};

struct EnergyLevel {
    double value = 0.0;
    ModelParams params;
};

inline double energy_discriminant(const ModelParams& p) {
    return p.mass * p.mass + 2.0 * p.alpha * p.alpha * (p.n - p.m_eff());
}

/// E = branch * sqrt(M² + 2α²(n - |λ|)).
inline EnergyLevel energy_level(const ModelParams& p) {
    p.validate();
    const double disc = energy_discriminant(p);
    if (disc < 0.0) throw NoRealEnergyError(disc);
    return {p.branch * std::sqrt(disc), p};
}

// ---------------------------------------------------------------------------
// Closed forms for λ = (1,1): N(r) = -9 + 13r² + 4r⁶, D(r) = (1+2r²)².

namespace closed {

template <class T>
T numerator(const T& r) {
    const T r2 = r * r;
    return T(-9.0) + 13.0 * r2 + 4.0 * r2 * r2 * r2;
}

template <class T>
T denominator(const T& r, PseudoDenominator form = PseudoDenominator::Squared) {
    const T a = T(1.0) + 2.0 * r * r;
    return form == PseudoDenominator::Squared ? a * a : a;
}

inline double energy_factor(SymmetryKind kind, double E, double M) {
    const double c = kind == SymmetryKind::Spin ? E + M : E - M;
    if (c == 0.0)
        throw PoleError(std::string(to_string(kind)) + " scalar potential has a pole: " +
                            (kind == SymmetryKind::Spin ? "E + M = 0 (lower branch E = -M)" : "E - M = 0 (upper branch E = M)"),
                        std::numeric_limits<double>::quiet_NaN());
    return 2.0 * c;
}

}  // namespace closed

/// Scalar potential V(r) for λ = (1,1).
inline double v_scalar(SymmetryKind kind, double E, double M, double r,
                       PseudoDenominator form = PseudoDenominator::Squared) {
    const double c = closed::energy_factor(kind, E, M);
    const auto d = kind == SymmetryKind::Spin ? PseudoDenominator::Squared : form;
    return closed::numerator(r) / (c * closed::denominator(r, d));
}

/// V'(r) by the quotient rule on N/D.
inline double v_scalar_derivative(SymmetryKind kind, double E, double M, double r,
                                  PseudoDenominator form = PseudoDenominator::Squared) {
    const double c = closed::energy_factor(kind, E, M);
    const double a = 1.0 + 2.0 * r * r;
    const double N = -9.0 + 13.0 * r * r + 4.0 * std::pow(r, 6);
    const double dN = 26.0 * r + 24.0 * std::pow(r, 5);
    const bool squared = kind == SymmetryKind::Spin || form == PseudoDenominator::Squared;
    const double D = squared ? a * a : a;
    const double dD = squared ? 8.0 * r * a : 4.0 * r;
    return (dN * D - N * dD) / (c * D * D);
}

namespace detail {
inline void require_positive_r(double r, const char* what) {
    if (!(r > 0.0)) throw std::domain_error(std::string(what) + ": r must be positive");
}

inline double checked_denominator(double d, double r, const char* what) {
    if (d == 0.0) throw PoleError(std::string(what) + ": denominator vanishes at r=" + std::to_string(r), r);
    return d;
}
}  // namespace detail

/// Tensor potential. Spin: k/r + V'/(E-M-2V). Pseudospin: the rational form
/// k/r + r(49 - 26r² + 12r⁴ + 8r⁶) / ((1+2r²)(N - (E²-M²)(1+2r²)²)).
inline double u_tensor(SymmetryKind kind, const ModelParams& p, double E, double r) {
    detail::require_positive_r(r, "u_tensor");
    const double M = p.mass;
    if (kind == SymmetryKind::Spin) {
        const double V = v_scalar(kind, E, M, r);
        const double dV = v_scalar_derivative(kind, E, M, r);
        return p.k / r + dV / detail::checked_denominator(E - M - 2.0 * V, r, "spin tensor potential");
    }
    const double r2 = r * r;
    const double a = 1.0 + 2.0 * r2;
    const double num = r * (49.0 - 26.0 * r2 + 12.0 * r2 * r2 + 8.0 * r2 * r2 * r2);
    const double den = a * (closed::numerator(r) - (E * E - M * M) * a * a);
    return p.k / r + num / detail::checked_denominator(den, r, "pseudospin tensor potential");
}

/// k/r + sign * V'/(E+M-2V) for the pseudospin case (squared denominator V).
/// sign = -1 reproduces u_tensor; +1 is the alternative sign convention.
inline double u_tensor_pseudo_variant(const ModelParams& p, double E, double r, int sign) {
    detail::require_positive_r(r, "u_tensor_pseudo_variant");
    const double M = p.mass;
    const double V = v_scalar(SymmetryKind::PseudoSpin, E, M, r);
    const double dV = v_scalar_derivative(SymmetryKind::PseudoSpin, E, M, r);
    return p.k / r + sign * dV / detail::checked_denominator(E + M - 2.0 * V, r, "pseudospin tensor potential");
}

/// Gauge function μ(r): -(r + 4r/(1+2r²)) - V'/Δ with Δ = E-M-2V (spin) or E+M-2V (pseudospin).
inline double mu_gauge(SymmetryKind kind, const ModelParams& p, double E, double r) {
    const double M = p.mass;
    const double V = v_scalar(kind, E, M, r);
    const double dV = v_scalar_derivative(kind, E, M, r);
    const double delta = kind == SymmetryKind::Spin ? E - M - 2.0 * V : E + M - 2.0 * V;
    const double base = -(r + 4.0 * r / (1.0 + 2.0 * r * r));
    return base - dV / detail::checked_denominator(delta, r, "gauge function");
}

// ---------------------------------------------------------------------------
// Closed-form wavefunction brackets.

namespace detail {

// n(n-1)(2x²+n+1)H_{n-2}(x) - (n+1)(2nx/sqrt(n+1) H_{n-1}(x) - H_n(x))
template <std::size_t N>
Taylor<N> closed_bracket(int n, const Taylor<N>& x) {
    const double nd = n;
    Taylor<N> b = evaluate(hermite(static_cast<unsigned>(n)), x) * Taylor<N>(nd + 1.0);
    if (n >= 1) {
        const Taylor<N> h1 = evaluate(hermite(static_cast<unsigned>(n - 1)), x);
        b -= Taylor<N>((nd + 1.0) * 2.0 * nd / std::sqrt(nd + 1.0)) * x * h1;
    }
    if (n >= 2) {
        const Taylor<N> h2 = evaluate(hermite(static_cast<unsigned>(n - 2)), x);
        b += Taylor<N>(nd * (nd - 1.0)) * (Taylor<N>(2.0) * x * x + Taylor<N>(nd + 1.0)) * h2;
    }
    return b;
}

inline double closed_bracket(int n, double x) { return closed_bracket<0>(n, Taylor<0>(x)).value(); }

}  // namespace detail

/// Closed-form spin profile e^{-x²/2} B_n(x) / (4√α(1+2x²)), x = αz.
inline double g_spin_literal(const ModelParams& p, double z) {
    const double x = p.alpha * z;
    return std::exp(-x * x / 2.0) * detail::closed_bracket(p.n, x) / (4.0 * std::sqrt(p.alpha) * (1.0 + 2.0 * x * x));
}

/// Wronskian spin profile e^{-x²/2} P_n(x) / (H_λ(x) √α), x = αz.
inline double g_spin_constructive(const XHermiteFamily& family, const ModelParams& p, double z) {
    const double x = p.alpha * z;
    const ExactPoly P = family.p(p.n);
    return std::exp(-x * x / 2.0) * P(x) / (family.h()(x) * std::sqrt(p.alpha));
}

/// Closed-form pseudospin profile, argument x = r (as printed) or x = αr.
inline double f_pseudo_literal(const ModelParams& p, double r, ArgumentScale scale = ArgumentScale::Unit) {
    const double x = scale == ArgumentScale::Alpha ? p.alpha * r : r;
    return std::exp(-x * x / 2.0) * detail::closed_bracket(p.n, x) / (4.0 * std::sqrt(p.alpha) * (1.0 + 2.0 * x * x));
}

struct DualPathReport {
    std::vector<double> probes;
    std::vector<double> ratios;  // literal / constructive
    double spread = 0.0;         // (max - min) / max|ratio|
    bool constant = false;       // spread < tolerance
};

/// Pointwise literal/constructive ratio of the wavefunction profile.
inline DualPathReport dual_path_ratio(const ModelParams& p, const std::vector<double>& probes, double tol = 1e-8) {
    const XHermiteFamily family(p.partition, std::max(p.n, 0));
    DualPathReport rep;
    rep.probes = probes;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo, mag = 0.0;
    for (double z : probes) {
        const double q = g_spin_literal(p, z) / g_spin_constructive(family, p, z);
        rep.ratios.push_back(q);
        lo = std::min(lo, q);
        hi = std::max(hi, q);
        mag = std::max(mag, std::abs(q));
    }
    rep.spread = mag > 0.0 ? (hi - lo) / mag : std::numeric_limits<double>::infinity();
    rep.constant = std::isfinite(rep.spread) && rep.spread < tol;
    return rep;
}

// ---------------------------------------------------------------------------
// Isotonic effective potential of the transformed G equation.

struct IsotonicForm {
    bool alpha4 = true;          // α⁴ on the 32z² term; false gives the α² variant
    bool include_offset = true;  // subtract α², so eigenvalues are exactly 2α²(n - |λ|)
};

/// α²S(αz) with S(x) = x² - 1 - 2(ln H_λ)''(x), optionally shifted by +α² and
/// with the α² variant of the rational term (λ = (1,1) only).
inline double effective_potential_g(const XHermiteFamily& family, double alpha, double z, IsotonicForm form = {}) {
    if (!(alpha > 0.0)) throw std::invalid_argument("effective_potential_g: alpha must be positive");
    const double a2 = alpha * alpha;
    const double x = alpha * z;
    if (!form.alpha4) {
        if (family.partition() != Partition(std::vector<int>{1, 1}))
            throw std::invalid_argument("effective_potential_g: the alpha^2 variant exists only for partition (1,1)");
        const double u = 1.0 + 2.0 * x * x;
        const double v = a2 * a2 * z * z + 32.0 * a2 * z * z / (u * u) - 8.0 * a2 / u;
        return form.include_offset ? v - a2 : v;
    }
    const ExactPoly& h = family.h();
    const double hv = h(x);
    const double d1 = h.derivative()(x) / hv;
    const double d2 = h.derivative().derivative()(x) / hv;
    const double s = x * x - 1.0 - 2.0 * (d2 - d1 * d1);
    return form.include_offset ? a2 * s : a2 * s + a2;
}

inline double effective_potential_g(const ModelParams& p, double z, IsotonicForm form = {}) {
    return effective_potential_g(XHermiteFamily(p.partition, 0), p.alpha, z, form);
}

/// Eigenvalue predicted for level n of -ψ'' + V_eff ψ.
inline double isotonic_eigenvalue(const ModelParams& p, IsotonicForm form = {}) {
    const double a2 = p.alpha * p.alpha;
    return 2.0 * a2 * (p.n - p.m_eff()) + (form.include_offset ? 0.0 : a2);
}

/// C₁, C₂, C₃ of the closed-form F-equation potential.
inline std::array<double, 3> literal_bracket_coefficients(double E, double M) {
    const double E2 = E * E, E4 = E2 * E2, E6 = E4 * E2;
    const double M2 = M * M, M4 = M2 * M2, M6 = M4 * M2;
    const double c1 = (9.0 + E2 - M2) * (-39.0 + 4.0 * E4 + (12.0 - 8.0 * M2) * E2 + 4.0 * M2 * (M2 - 3.0));
    const double c2 = 4.0 * (169.0 + 4.0 * E6 + 131.0 * M2 - 12.0 * E4 * M2 - 4.0 * M6 + E2 * (-131.0 + 12.0 * M4));
    const double c3 = 4.0 * (81.0 + 4.0 * E6 + 43.0 * M2 + 16.0 * M4 - 4.0 * M6 + 4.0 * E4 * (4.0 - 3.0 * M2) +
                             E2 * (-43.0 - 32.0 * M2 + 12.0 * M4));
    return {c1, c2, c3};
}

/// The closed-form potential of the decoupled spin F equation with C₁..C₃,
/// evaluated term by term as written.
inline double effective_potential_f(double E, double M, double r) {
    const double r2 = r * r, r4 = r2 * r2;
    const double a = 1.0 + 2.0 * r2;
    const double den = closed::numerator(r) - (E * E - M * M) * a * a;
    detail::checked_denominator(den, r, "F effective potential");
    const auto c = literal_bracket_coefficients(E, M);
    const double E2 = E * E, M2 = M * M;
    const double last = 2.0 * (-83.0 + 6.0 * (E2 * E2 + M2 * M2) + 10.0 * r2 + 4.0 * r4 - 6.0 * M2 * (r2 + 3.0) +
                               6.0 * E2 * (3.0 - 2.0 * M2 + r2));
    return -1.0 + r2 + 8.0 * (-1.0 + 2.0 * r2) / (a * a) + 3.0 * (c[0] + c[1] * r2 + c[2] * r4) / den + last / den;
}

/// 2(E+M)V + U² - 2kU/r + k(k+1)/r² + U' with the spin closed forms.
inline double effective_potential_f_reconstructed(const ModelParams& p, double E, double r) {
    using J = Taylor<3>;
    detail::require_positive_r(r, "effective_potential_f_reconstructed");
    const double M = p.mass;
    const double k = p.k;
    const double c = closed::energy_factor(SymmetryKind::Spin, E, M);
    const J x = J::variable(r);
    const J v = closed::numerator(x) / (J(c) * closed::denominator(x));
    const J delta = J(E - M) - J(2.0) * v;
    detail::checked_denominator(delta.value(), r, "spin tensor potential");
    const J u = J(k) / x + v.differentiate() / delta;
    const double V = v.value(), U = u.value(), dU = u.derivative(1);
    return 2.0 * (E + M) * V + U * U - 2.0 * k * U / r + k * (k + 1) / (r * r) + dU;
}

// ---------------------------------------------------------------------------
// Models on a grid.

struct PoleWindow {
    std::size_t points = 3;  // grid points on each side of a pole
    double radius = 0.4;     // and every point within this distance in r
};

/// Potentials sampled on a grid; the inputs of the residual operators.
struct PotentialTable {
    SymmetryKind kind = SymmetryKind::Spin;
    double energy = 0.0;
    double mass = 0.0;
    int k = 0;
    std::vector<double> V, dV, U, dU;
};

struct RadialSolution {
    SymmetryKind kind = SymmetryKind::Spin;
    Grid grid;
    std::vector<double> F, G;
    EnergyLevel energy;
    double norm_constant = 1.0;
    std::vector<double> poles;               // radial pole locations inside the grid
    std::vector<unsigned char> pole_mask;    // 1 inside an exclusion window
    bool literal_profile = false;            // closed-form bracket instead of P_n
};

struct ModelOptions {
    PseudoDenominator pseudo_denominator = PseudoDenominator::Squared;
    WavefunctionPath path = WavefunctionPath::Auto;
    ArgumentScale argument = ArgumentScale::Alpha;
};

/// Spin or pseudospin model at fixed parameters. V = S/(2(E±M)) with
/// S(r) = r² - 1 - 2(ln H_λ)''(r), Δ = E∓M-2V, U = k/r ± V'/Δ. The constructed
/// component (G for spin, F for pseudospin) is √|Δ| e^{-x²/2} P_n(x)/H_λ(x);
/// the other one follows from the first-order system.
class DiracModel {
public:
    using Jet = Taylor<5>;

    DiracModel(SymmetryKind kind, ModelParams params, ModelOptions options = {})
        : kind_(kind), params_(std::move(params)), options_(options), level_(energy_level(params_)),
          family_(params_.partition, std::max(params_.n, 12)) {
        if (options_.pseudo_denominator == PseudoDenominator::Printed && kind_ == SymmetryKind::PseudoSpin &&
            params_.partition != Partition(std::vector<int>{1, 1}))
            throw std::invalid_argument("the unsquared pseudospin denominator is defined for partition (1,1) only");
        closed::energy_factor(kind_, level_.value, params_.mass);
        const bool adm = family_.is_admissible(params_.n);
        switch (options_.path) {
        case WavefunctionPath::Auto: literal_ = !adm; break;
        case WavefunctionPath::Literal: literal_ = true; break;
        case WavefunctionPath::Constructive:
            if (!adm) family_.p(params_.n);  // throws with the admissibility diagnostic
            literal_ = false;
            break;
        }
        if (!literal_) pn_ = family_.p(params_.n);
        const ExactPoly& h = family_.h();
        h1_ = h.derivative();
        h2_ = h1_.derivative();
    }

    SymmetryKind kind() const noexcept { return kind_; }
    const ModelParams& params() const noexcept { return params_; }
    const ModelOptions& options() const noexcept { return options_; }
    const EnergyLevel& level() const noexcept { return level_; }
    double energy() const noexcept { return level_.value; }
    const XHermiteFamily& family() const noexcept { return family_; }
    bool literal_profile() const noexcept { return literal_; }

    Jet scalar(double r) const {
        const Jet x = Jet::variable(r);
        const Jet hv = evaluate(family_.h(), x);
        const Jet d1 = evaluate(h1_, x) / hv;
        const Jet d2 = evaluate(h2_, x) / hv;
        Jet s = x * x - Jet(1.0) - Jet(2.0) * (d2 - d1 * d1);
        const double E = energy(), M = params_.mass;
        if (kind_ == SymmetryKind::Spin) return s / Jet(2.0 * (E + M));
        if (options_.pseudo_denominator == PseudoDenominator::Printed) s = s * (Jet(1.0) + Jet(2.0) * x * x);
        return s / Jet(2.0 * (E - M));
    }

    /// E-M-2V (spin) or E+M-2V (pseudospin).
    Jet delta(double r) const {
        const double c = kind_ == SymmetryKind::Spin ? energy() - params_.mass : energy() + params_.mass;
        return Jet(c) - Jet(2.0) * scalar(r);
    }

    Jet tensor(double r) const {
        const Jet w = scalar(r).differentiate() / delta(r);
        const Jet kr = Jet(static_cast<double>(params_.k)) / Jet::variable(r);
        return kind_ == SymmetryKind::Spin ? kr + w : kr - w;
    }

    /// -(r + H'/H) - V'/Δ.
    Jet gauge(double r) const {
        const Jet x = Jet::variable(r);
        const Jet base = -(x + evaluate(h1_, x) / evaluate(family_.h(), x));
        return base - scalar(r).differentiate() / delta(r);
    }

    /// e^{-x²/2} Q(x) / (H_λ(x) √α) with Q = P_n, or the closed-form bracket
    /// e^{-x²/2} B_n(x) / (4√α(1+2x²)).
    Jet profile(double r) const {
        const double s = options_.argument == ArgumentScale::Alpha ? params_.alpha : 1.0;
        const Jet x = Jet(s) * Jet::variable(r);
        const Jet g = exp(Jet(-0.5) * x * x) / Jet(std::sqrt(params_.alpha));
        if (literal_) return g * detail::closed_bracket(params_.n, x) / (Jet(4.0) * (Jet(1.0) + Jet(2.0) * x * x));
        return g * evaluate(pn_, x) / evaluate(family_.h(), x);
    }

    /// G for spin, F for pseudospin.
    Jet constructed(double r) const {
        Jet d = delta(r);
        if (d.value() < 0.0) d = -d;
        return sqrt(d) * profile(r);
    }

    /// F = (G' + (U - k/r)G)/(M-E+2V) for spin; G = (F' + (k/r - U)F)/(M+E-2V) for pseudospin.
    Jet derived(double r) const {
        const Jet c = constructed(r);
        const Jet u = tensor(r);
        const Jet kr = Jet(static_cast<double>(params_.k)) / Jet::variable(r);
        const Jet v = scalar(r);
        const double E = energy(), M = params_.mass;
        if (kind_ == SymmetryKind::Spin) return (c.differentiate() + (u - kr) * c) / (Jet(M - E) + Jet(2.0) * v);
        return (c.differentiate() + (kr - u) * c) / (Jet(M + E) - Jet(2.0) * v);
    }

    /// Bracket potential of the decoupled equation for the derived component:
    /// 2(E+M)V + U² - 2kU/r + k(k+1)/r² + U' (spin), or
    /// 2(E-M)V + U² - 2kU/r + k(k-1)/r² - U' (pseudospin).
    double bracket_potential(double r) const {
        const Jet u = tensor(r);
        const double V = scalar(r).value();
        const double U = u.value(), dU = u.derivative(1);
        const double k = params_.k, E = energy(), M = params_.mass;
        if (kind_ == SymmetryKind::Spin) return 2.0 * (E + M) * V + U * U - 2.0 * k * U / r + k * (k + 1) / (r * r) + dU;
        return 2.0 * (E - M) * V + U * U - 2.0 * k * U / r + k * (k - 1) / (r * r) - dU;
    }

    PotentialTable potentials(const Grid& grid) const {
        PotentialTable t;
        t.kind = kind_;
        t.energy = energy();
        t.mass = params_.mass;
        t.k = params_.k;
        t.V.resize(grid.count);
        t.dV.resize(grid.count);
        t.U.resize(grid.count);
        t.dU.resize(grid.count);
        for (std::size_t i = 0; i < grid.count; ++i) {
            const double r = grid[i];
            const Jet v = scalar(r);
            const Jet u = tensor(r);
            t.V[i] = v.value();
            t.dV[i] = v.derivative(1);
            t.U[i] = u.value();
            t.dU[i] = u.derivative(1);
        }
        return t;
    }

    /// Zeros of Δ inside the grid, located by sign change and bisection.
    std::vector<double> pole_locations(const Grid& grid) const {
        std::vector<double> out;
        double prev = delta(grid[0]).value();
        if (prev == 0.0) out.push_back(grid[0]);
        for (std::size_t i = 1; i < grid.count; ++i) {
            const double cur = delta(grid[i]).value();
            if (cur == 0.0) {
                out.push_back(grid[i]);
            } else if (prev != 0.0 && (prev < 0.0) != (cur < 0.0)) {
                double a = grid[i - 1], b = grid[i], fa = prev;
                for (int it = 0; it < 200; ++it) {
                    const double m = 0.5 * (a + b);
                    if (m == a || m == b) break;
                    const double fm = delta(m).value();
                    if (fm == 0.0) { a = b = m; break; }
                    if ((fm < 0.0) == (fa < 0.0)) { a = m; fa = fm; }
                    else b = m;
                }
                out.push_back(0.5 * (a + b));
            }
            prev = cur;
        }
        return out;
    }

    RadialSolution solve(const Grid& grid, PoleWindow window = {}) const {
        RadialSolution s;
        s.kind = kind_;
        s.grid = grid;
        s.energy = level_;
        s.literal_profile = literal_;
        s.F.resize(grid.count);
        s.G.resize(grid.count);
        for (std::size_t i = 0; i < grid.count; ++i) {
            const double r = grid[i];
            const double c = constructed(r).value();
            const double d = derived(r).value();
            if (kind_ == SymmetryKind::Spin) {
                s.G[i] = c;
                s.F[i] = d;
            } else {
                s.F[i] = c;
                s.G[i] = d;
            }
        }
        s.poles = pole_locations(grid);
        s.pole_mask = pole_mask(grid, s.poles, window);
        return s;
    }

    static std::vector<unsigned char> pole_mask(const Grid& grid, const std::vector<double>& poles, PoleWindow window) {
        std::vector<unsigned char> mask(grid.count, 0);
        for (double p : poles) {
            const double pos = (p - grid.start) / grid.step;
            for (std::size_t i = 0; i < grid.count; ++i) {
                const double di = std::abs(static_cast<double>(i) - pos);
                if (di <= static_cast<double>(window.points) + 0.5 || std::abs(grid[i] - p) <= window.radius) mask[i] = 1;
            }
        }
        return mask;
    }

private:
    SymmetryKind kind_;
    ModelParams params_;
    ModelOptions options_;
    EnergyLevel level_;
    XHermiteFamily family_;
    bool literal_ = false;
    ExactPoly pn_, h1_, h2_;
};

// ---------------------------------------------------------------------------
// Component derivation, densities and residuals on sampled data.

struct DerivedComponent {
    std::vector<double> values;
    std::vector<std::size_t> pole_indices;  // denominator zero or sign change between i and i+1
};

namespace detail {

inline DerivedComponent derive_component(const std::vector<double>& src, const std::vector<double>& dsrc,
                                         const std::vector<double>& coupling, const std::vector<double>& denom) {
    DerivedComponent out;
    out.values.resize(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (denom[i] == 0.0) {
            out.pole_indices.push_back(i);
            out.values[i] = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        if (i + 1 < src.size() && (denom[i] < 0.0) != (denom[i + 1] < 0.0) && denom[i + 1] != 0.0)
            out.pole_indices.push_back(i);
        out.values[i] = (dsrc[i] + coupling[i] * src[i]) / denom[i];
    }
    return out;
}

inline void check_table(const PotentialTable& t, const Grid& grid) {
    if (t.V.size() != grid.count || t.dV.size() != grid.count || t.U.size() != grid.count || t.dU.size() != grid.count)
        throw std::invalid_argument("potential table does not match the grid");
}

}  // namespace detail

/// F = [G' + (U - k/r)G] / (M - E + 2V). G' is taken from dG when given,
/// otherwise from central differences.
inline DerivedComponent f_from_g_spin(const PotentialTable& t, const std::vector<double>& G, const Grid& grid,
                                      const std::vector<double>& dG = {}) {
    detail::check_table(t, grid);
    const std::vector<double> d = dG.empty() ? central_derivative(G, grid) : dG;
    std::vector<double> coupling(grid.count), denom(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i) {
        coupling[i] = t.U[i] - t.k / grid[i];
        denom[i] = t.mass - t.energy + 2.0 * t.V[i];
    }
    return detail::derive_component(G, d, coupling, denom);
}

/// G = [F' + (k/r - U)F] / (M + E - 2V).
inline DerivedComponent g_from_f_pseudo(const PotentialTable& t, const std::vector<double>& F, const Grid& grid,
                                        const std::vector<double>& dF = {}) {
    detail::check_table(t, grid);
    const std::vector<double> d = dF.empty() ? central_derivative(F, grid) : dF;
    std::vector<double> coupling(grid.count), denom(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i) {
        coupling[i] = t.k / grid[i] - t.U[i];
        denom[i] = t.mass + t.energy - 2.0 * t.V[i];
    }
    return detail::derive_component(F, d, coupling, denom);
}

inline std::vector<double> probability_density(const RadialSolution& s) {
    if (s.F.size() != s.G.size() || s.F.size() != s.grid.count)
        throw std::invalid_argument("probability_density: F, G and grid sizes differ");
    std::vector<double> rho(s.F.size());
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = s.F[i] * s.F[i] + s.G[i] * s.G[i];
    return rho;
}

/// Scales F and G so the trapezoid integral of F² + G² is 1.
inline RadialSolution normalize_solution(RadialSolution s) {
    const double I = trapezoid_integral(probability_density(s), s.grid);
    if (!(I > 0.0) || !std::isfinite(I)) throw std::domain_error("normalize_solution: density integral is not positive and finite");
    const double c = 1.0 / std::sqrt(I);
    for (auto& v : s.F) v *= c;
    for (auto& v : s.G) v *= c;
    s.norm_constant *= c;
    return s;
}

namespace detail {

// Interior indices with a two-point stencil margin, outside the mask.
inline std::vector<std::size_t> residual_points(const Grid& grid, const std::vector<unsigned char>& mask) {
    if (grid.count < 7) throw std::invalid_argument("residual: grid needs at least 7 points");
    if (!mask.empty() && mask.size() != grid.count) throw std::invalid_argument("residual: mask does not match the grid");
    std::vector<std::size_t> idx;
    for (std::size_t i = 2; i + 2 < grid.count; ++i)
        if (mask.empty() || !mask[i]) idx.push_back(i);
    return idx;
}

}  // namespace detail

/// Max interior |residual| / max|component| of the second-order equation
/// satisfied by `component`:
///   spin F:       -F'' + (2(E+M)V + U² - 2kU/r + k(k+1)/r² + U')F = (E²-M²)F
///   spin G:       -G'' - 2V'/(E-M-2V) G' + (k(k-1)/r² - 2kU/r + U² + 2(E+M)V - U'
///                     - 2(-k + rU)V'/(r(E-M-2V)))G = (E²-M²)G
///   pseudospin G: -G'' + (2(E-M)V + U² - 2kU/r + k(k-1)/r² - U')G = (E²-M²)G
///   pseudospin F: -F'' - 2V'/(E+M-2V) F' + (k(k+1)/r² - 2kU/r + U² + 2(E-M)V + U'
///                     + 2(-k + rU)V'/(r(E+M-2V)))F = (E²-M²)F
inline double second_order_residual(SymmetryKind kind, Component component, const std::vector<double>& y,
                                    const PotentialTable& t, const Grid& grid,
                                    const std::vector<unsigned char>& mask = {}) {
    detail::check_table(t, grid);
    const auto idx = detail::residual_points(grid, mask);
    if (y.size() != grid.count) throw std::invalid_argument("second_order_residual: solution does not match the grid");
    const auto d1 = central_derivative(y, grid);
    const auto d2 = second_derivative(y, grid);
    const double E = t.energy, M = t.mass, k = t.k, eig = E * E - M * M;
    double worst = 0.0, scale = 0.0;
    for (std::size_t i : idx) {
        const double r = grid[i], V = t.V[i], dV = t.dV[i], U = t.U[i], dU = t.dU[i];
        double res = 0.0;
        if (kind == SymmetryKind::Spin && component == Component::F) {
            res = -d2[i] + (2.0 * (E + M) * V + U * U - 2.0 * k * U / r + k * (k + 1) / (r * r) + dU) * y[i] - eig * y[i];
        } else if (kind == SymmetryKind::Spin) {
            const double den = E - M - 2.0 * V;
            res = -d2[i] - 2.0 * dV / den * d1[i] +
                  (k * (k - 1) / (r * r) - 2.0 * k * U / r + U * U + 2.0 * (E + M) * V - dU -
                   2.0 * (-k + r * U) * dV / (r * den)) * y[i] -
                  eig * y[i];
        } else if (component == Component::G) {
            res = -d2[i] + (2.0 * (E - M) * V + U * U - 2.0 * k * U / r + k * (k - 1) / (r * r) - dU) * y[i] - eig * y[i];
        } else {
            const double den = E + M - 2.0 * V;
            res = -d2[i] - 2.0 * dV / den * d1[i] +
                  (k * (k + 1) / (r * r) - 2.0 * k * U / r + U * U + 2.0 * (E - M) * V + dU +
                   2.0 * (-k + r * U) * dV / (r * den)) * y[i] -
                  eig * y[i];
        }
        worst = std::max(worst, std::abs(res));
        scale = std::max(scale, std::abs(y[i]));
    }
    return scale > 0.0 ? worst / scale : 0.0;
}

inline double second_order_residual(const RadialSolution& s, Component component, const PotentialTable& t) {
    return second_order_residual(s.kind, component, component == Component::F ? s.F : s.G, t, s.grid, s.pole_mask);
}

/// Residuals of the two first-order equations with S = ±V, each max interior
/// |residual| / max(|F|, |G|).
inline std::pair<double, double> first_order_residual(SymmetryKind kind, const std::vector<double>& F,
                                                      const std::vector<double>& G, const PotentialTable& t,
                                                      const Grid& grid, const std::vector<unsigned char>& mask = {}) {
    detail::check_table(t, grid);
    const auto idx = detail::residual_points(grid, mask);
    if (F.size() != grid.count || G.size() != grid.count)
        throw std::invalid_argument("first_order_residual: solution does not match the grid");
    const auto dF = central_derivative(F, grid);
    const auto dG = central_derivative(G, grid);
    const double E = t.energy, M = t.mass, k = t.k;
    double w1 = 0.0, w2 = 0.0, scale = 0.0;
    for (std::size_t i : idx) {
        const double r = grid[i], V = t.V[i], U = t.U[i];
        const double S = kind == SymmetryKind::Spin ? V : -V;
        const double e1 = dF[i] + (k / r - U) * F[i] - (M + E - V + S) * G[i];
        const double e2 = dG[i] + (-k / r + U) * G[i] - (M - E + V + S) * F[i];
        w1 = std::max(w1, std::abs(e1));
        w2 = std::max(w2, std::abs(e2));
        scale = std::max({scale, std::abs(F[i]), std::abs(G[i])});
    }
    if (scale == 0.0) return {0.0, 0.0};
    return {w1 / scale, w2 / scale};
}

inline std::pair<double, double> first_order_residual(const RadialSolution& s, const PotentialTable& t) {
    return first_order_residual(s.kind, s.F, s.G, t, s.grid, s.pole_mask);
}

/// Residual of -F'' + (V_34 - (E² - M²))F with the closed-form C₁..C₃ potential.
inline double literal_bracket_residual(const std::vector<double>& F, double E, double M, const Grid& grid,
                            const std::vector<unsigned char>& mask = {}) {
    const auto idx = detail::residual_points(grid, mask);
    const auto d2 = second_derivative(F, grid);
    double worst = 0.0, scale = 0.0;
    for (std::size_t i : idx) {
        const double res = -d2[i] + (effective_potential_f(E, M, grid[i]) - (E * E - M * M)) * F[i];
        worst = std::max(worst, std::abs(res));
        scale = std::max(scale, std::abs(F[i]));
    }
    return scale > 0.0 ? worst / scale : 0.0;
}

}  // namespace xhdirac
