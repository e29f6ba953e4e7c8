#pragma once

// Numerical oracles: Gaussian-weight quadrature, a finite-difference
// Schrödinger eigensolver, Sturm real-root counting and grid calculus.

#include "polycore.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xhdirac {

/// Uniform abscissae start + i*step, i = 0..count-1.
struct Grid {
    double start = 0.0;
    double step = 1.0;
    std::size_t count = 2;

    Grid() = default;
    Grid(double start_, double step_, std::size_t count_) : start(start_), step(step_), count(count_) {
        if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("grid step must be positive");
        if (count < 2) throw std::invalid_argument("grid needs at least 2 points");
    }

    /// count points from a to b inclusive.
    static Grid uniform(double a, double b, std::size_t count) {
        if (count < 2) throw std::invalid_argument("grid needs at least 2 points");
        if (!(b > a)) throw std::invalid_argument("grid end must exceed grid start");
        return Grid(a, (b - a) / static_cast<double>(count - 1), count);
    }

    double operator[](std::size_t i) const { return start + static_cast<double>(i) * step; }
    double back() const { return (*this)[count - 1]; }

    std::vector<double> abscissae() const {
        std::vector<double> x(count);
        for (std::size_t i = 0; i < count; ++i) x[i] = (*this)[i];
        return x;
    }

    friend bool operator==(const Grid&, const Grid&) = default;
};

/// Nodes and weights for integrals of the form ∫ e^{-x²} f(x) dx over the real line.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }

    template <class F>
    double integrate(F&& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
        return s;
    }
};

/// Trapezoid rule x_j = j*step on [-half_width, half_width] with weights
/// step*e^{-x_j²}. Converges geometrically for integrands analytic in a
/// strip around the real axis, including rational factors with complex poles.
inline QuadratureRule trapezoid_gaussian_rule(double step = 0.1, double half_width = 14.0) {
    if (!(step > 0.0) || !(half_width > 0.0)) throw std::invalid_argument("trapezoid_gaussian_rule: positive step and width required");
    const auto m = static_cast<long>(std::ceil(half_width / step));
    QuadratureRule q;
    q.nodes.reserve(2 * m + 1);
    q.weights.reserve(2 * m + 1);
    for (long j = -m; j <= m; ++j) {
        const double x = static_cast<double>(j) * step;
        q.nodes.push_back(x);
        q.weights.push_back(step * std::exp(-x * x));
    }
    return q;
}

/// Number of eigenvalues below x of the symmetric tridiagonal matrix.
inline std::size_t tridiagonal_count_below(const std::vector<double>& diag, const std::vector<double>& off, double x) {
    std::size_t count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        const double b2 = i == 0 ? 0.0 : off[i - 1] * off[i - 1];
        d = diag[i] - x - (i == 0 ? 0.0 : b2 / d);
        if (d == 0.0) d = -std::numeric_limits<double>::epsilon() * (std::abs(diag[i]) + std::abs(x) + 1.0);
        if (d < 0.0) ++count;
    }
    return count;
}

/// Lowest `count` eigenvalues by bisection on Sturm counts.
inline std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& diag, const std::vector<double>& off,
                                                   std::size_t count) {
    const std::size_t n = diag.size();
    if (off.size() + 1 != n) throw std::invalid_argument("tridiagonal_eigenvalues: off-diagonal size mismatch");
    count = std::min(count, n);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(off[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    std::vector<double> ev(count);
    for (std::size_t k = 0; k < count; ++k) {
        double a = lo, b = hi;
        for (int it = 0; it < 200 && b - a > 4 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b)); ++it) {
            const double mid = 0.5 * (a + b);
            if (mid == a || mid == b) break;
            if (tridiagonal_count_below(diag, off, mid) > k) b = mid;
            else a = mid;
        }
        ev[k] = 0.5 * (a + b);
    }
    return ev;
}

/// Gauss–Hermite rule: nodes from the Jacobi matrix by bisection, polished by
/// Newton on the orthonormal recurrence, weights 2/(√(2n) p_{n-1})².
inline QuadratureRule gauss_hermite_rule(int order) {
    if (order < 1 || order > 200) throw std::invalid_argument("gauss_hermite_rule: order must be in [1, 200]");
    const auto n = static_cast<std::size_t>(order);
    const double pim4 = 1.0 / std::pow(std::numbers::pi, 0.25);
    std::vector<double> diag(n, 0.0), off(n - 1);
    for (std::size_t k = 1; k < n; ++k) off[k - 1] = std::sqrt(0.5 * static_cast<double>(k));
    // p_n(z) and p_{n-1}(z), orthonormal with respect to e^{-z²}
    auto eval = [&](double z) {
        double p1 = pim4, p2 = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double p3 = p2;
            p2 = p1;
            p1 = z * std::sqrt(2.0 / static_cast<double>(j + 1)) * p2 - std::sqrt(static_cast<double>(j) / static_cast<double>(j + 1)) * p3;
        }
        return std::pair{p1, p2};
    };
    QuadratureRule q;
    q.nodes = tridiagonal_eigenvalues(diag, off, n);
    q.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double z = q.nodes[i];
        for (int it = 0; it < 3; ++it) {
            const auto [p, pm] = eval(z);
            const double dp = std::sqrt(2.0 * static_cast<double>(n)) * pm;
            if (dp == 0.0) break;
            z -= p / dp;
        }
        const double dp = std::sqrt(2.0 * static_cast<double>(n)) * eval(z).second;
        q.nodes[i] = z;
        q.weights[i] = 2.0 / (dp * dp);
    }
    // symmetrize
    for (std::size_t i = 0; i < n / 2; ++i) {
        const double z = 0.5 * (q.nodes[n - 1 - i] - q.nodes[i]);
        const double w = 0.5 * (q.weights[i] + q.weights[n - 1 - i]);
        q.nodes[i] = -z;
        q.nodes[n - 1 - i] = z;
        q.weights[i] = q.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) q.nodes[n / 2] = 0.0;
    return q;
}

/// Lowest eigenvalues of -ψ'' + V ψ = ε ψ on [-L, L] with ψ(±L) = 0, using
/// `points` interior nodes and the 3-point Laplacian.
inline std::vector<double> fd_schrodinger_spectrum(const std::function<double(double)>& potential, double half_width,
                                                   std::size_t points, std::size_t count) {
    if (!(half_width > 0.0)) throw std::invalid_argument("fd_schrodinger_spectrum: half width must be positive");
    if (points < 200) throw std::invalid_argument("fd_schrodinger_spectrum: at least 200 points required");
    const double h = 2.0 * half_width / static_cast<double>(points + 1);
    const double ih2 = 1.0 / (h * h);
    std::vector<double> diag(points), off(points - 1, -ih2);
    for (std::size_t i = 0; i < points; ++i) {
        const double z = -half_width + static_cast<double>(i + 1) * h;
        const double v = potential(z);
        if (!std::isfinite(v)) throw std::domain_error("fd_schrodinger_spectrum: non-finite potential at z=" + std::to_string(z));
        diag[i] = 2.0 * ih2 + v;
    }
    return tridiagonal_eigenvalues(diag, off, count);
}

struct SpectrumCheck {
    std::vector<double> eigenvalues;  // at `points`
    std::vector<double> refined;      // at 2*points
    double max_relative_change = 0.0;
};

/// Spectrum plus the doubling check; relative change uses max(|ε|, 1) as scale.
inline SpectrumCheck fd_schrodinger_spectrum_checked(const std::function<double(double)>& potential, double half_width,
                                                     std::size_t points, std::size_t count) {
    SpectrumCheck c;
    c.eigenvalues = fd_schrodinger_spectrum(potential, half_width, points, count);
    c.refined = fd_schrodinger_spectrum(potential, half_width, 2 * points, count);
    for (std::size_t i = 0; i < c.eigenvalues.size(); ++i) {
        const double d = std::abs(c.eigenvalues[i] - c.refined[i]) / std::max(1.0, std::abs(c.refined[i]));
        c.max_relative_change = std::max(c.max_relative_change, d);
    }
    return c;
}

/// p / gcd(p, p'), made primitive.
inline ExactPoly square_free_part(const ExactPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("square_free_part of the zero polynomial");
    if (p.degree() == 0) return primitive_part(p);
    const ExactPoly g = gcd(p, p.derivative());
    return primitive_part(divide_exact(primitive_part(p), g));
}

/// Distinct real roots of p, counted exactly with a Sturm chain.
inline int sturm_real_root_count(const ExactPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_real_root_count of the zero polynomial");
    const ExactPoly q = square_free_part(p);
    if (q.degree() == 0) return 0;
    std::vector<ExactPoly> chain{q, primitive_part(q.derivative())};
    while (chain.back().degree() > 0) {
        ExactPoly r = positive_pseudo_remainder(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(primitive_part(-r));
    }
    auto changes = [&chain](bool at_minus_inf) {
        int count = 0, prev = 0;
        for (const auto& s : chain) {
            int sign = s.leading() > 0 ? 1 : -1;
            if (at_minus_inf && s.degree() % 2 == 1) sign = -sign;
            if (prev != 0 && sign != prev) ++count;
            prev = sign;
        }
        return count;
    };
    return changes(true) - changes(false);
}

/// First derivative: 4th-order central stencil inside, 2nd order at the edges.
inline std::vector<double> central_derivative(const std::vector<double>& f, const Grid& g) {
    const std::size_t n = f.size();
    if (n != g.count) throw std::invalid_argument("central_derivative: grid/value size mismatch");
    if (n < 5) throw std::invalid_argument("central_derivative: at least 5 points required");
    const double h = g.step;
    std::vector<double> d(n);
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    d[1] = (f[2] - f[0]) / (2.0 * h);
    for (std::size_t i = 2; i + 2 < n; ++i) d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
    d[n - 2] = (f[n - 1] - f[n - 3]) / (2.0 * h);
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return d;
}

/// Second derivative with the same stencil orders as central_derivative.
inline std::vector<double> second_derivative(const std::vector<double>& f, const Grid& g) {
    const std::size_t n = f.size();
    if (n != g.count) throw std::invalid_argument("second_derivative: grid/value size mismatch");
    if (n < 5) throw std::invalid_argument("second_derivative: at least 5 points required");
    const double h2 = g.step * g.step;
    std::vector<double> d(n);
    d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
    d[1] = (f[0] - 2.0 * f[1] + f[2]) / h2;
    for (std::size_t i = 2; i + 2 < n; ++i)
        d[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) / (12.0 * h2);
    d[n - 2] = (f[n - 3] - 2.0 * f[n - 2] + f[n - 1]) / h2;
    d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / h2;
    return d;
}

inline double trapezoid_integral(const std::vector<double>& f, const Grid& g) {
    if (f.size() != g.count) throw std::invalid_argument("trapezoid_integral: grid/value size mismatch");
    double s = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
    return s * g.step;
}

}  // namespace xhdirac
