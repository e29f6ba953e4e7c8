#pragma once

// Truncated Taylor arithmetic. A Taylor<N> holds c[0..N] with c[k] = f^(k)(x0)/k!,
// so composite closed forms get exact derivatives up to order N without
// finite differences.

#include "polycore.hpp"

#include <array>
#include <cmath>
#include <cstddef>

namespace xhdirac {

template <std::size_t N>
class Taylor {
public:
    static constexpr std::size_t order = N;

    constexpr Taylor() = default;
    constexpr Taylor(double value) { c_[0] = value; }  // NOLINT: constants promote implicitly

    static constexpr Taylor variable(double x0) {
        Taylor t(x0);
        if constexpr (N >= 1) t.c_[1] = 1.0;
        return t;
    }

    constexpr double operator[](std::size_t k) const { return c_[k]; }
    constexpr double& operator[](std::size_t k) { return c_[k]; }

    constexpr double value() const { return c_[0]; }

    /// k-th derivative at the expansion point.
    double derivative(std::size_t k = 1) const {
        double f = 1.0;
        for (std::size_t j = 2; j <= k; ++j) f *= static_cast<double>(j);
        return c_[k] * f;
    }

    /// Jet of f'. The top coefficient is unknown after the shift and set to 0,
    /// so only orders < N of the result are meaningful.
    Taylor differentiate() const {
        Taylor d;
        for (std::size_t k = 0; k < N; ++k) d.c_[k] = static_cast<double>(k + 1) * c_[k + 1];
        return d;
    }

    Taylor& operator+=(const Taylor& o) {
        for (std::size_t k = 0; k <= N; ++k) c_[k] += o.c_[k];
        return *this;
    }
    Taylor& operator-=(const Taylor& o) {
        for (std::size_t k = 0; k <= N; ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Taylor& operator*=(const Taylor& o) { return *this = *this * o; }
    Taylor& operator/=(const Taylor& o) { return *this = *this / o; }

    friend Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
    friend Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }
    friend Taylor operator-(const Taylor& a) {
        Taylor r;
        for (std::size_t k = 0; k <= N; ++k) r.c_[k] = -a.c_[k];
        return r;
    }

    friend Taylor operator*(const Taylor& a, const Taylor& b) {
        Taylor r;
        for (std::size_t k = 0; k <= N; ++k) {
            double s = 0.0;
            for (std::size_t j = 0; j <= k; ++j) s += a.c_[j] * b.c_[k - j];
            r.c_[k] = s;
        }
        return r;
    }

    friend Taylor operator/(const Taylor& a, const Taylor& b) {
        Taylor q;
        for (std::size_t k = 0; k <= N; ++k) {
            double s = a.c_[k];
            for (std::size_t j = 1; j <= k; ++j) s -= b.c_[j] * q.c_[k - j];
            q.c_[k] = s / b.c_[0];
        }
        return q;
    }

    friend Taylor exp(const Taylor& a) {
        Taylor r;
        r.c_[0] = std::exp(a.c_[0]);
        for (std::size_t k = 1; k <= N; ++k) {
            double s = 0.0;
            for (std::size_t j = 1; j <= k; ++j) s += static_cast<double>(j) * a.c_[j] * r.c_[k - j];
            r.c_[k] = s / static_cast<double>(k);
        }
        return r;
    }

    friend Taylor sqrt(const Taylor& a) {
        Taylor r;
        r.c_[0] = std::sqrt(a.c_[0]);
        for (std::size_t k = 1; k <= N; ++k) {
            double s = a.c_[k];
            for (std::size_t j = 1; j < k; ++j) s -= r.c_[j] * r.c_[k - j];
            r.c_[k] = s / (2.0 * r.c_[0]);
        }
        return r;
    }

private:
    std::array<double, N + 1> c_{};
};

/// Horner evaluation of an exact polynomial on a jet.
template <std::size_t N>
Taylor<N> evaluate(const ExactPoly& p, const Taylor<N>& x) {
    Taylor<N> acc;
    const auto& c = p.approx_coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Taylor<N>(*it);
    return acc;
}

}  // namespace xhdirac
