#pragma once

// Independent reference implementations used only by the tests.

#include <xhdirac/polycore.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using xhdirac::BigInt;
using xhdirac::ExactPoly;

// Hermite polynomial by the explicit sum n! Σ (-1)^m (2x)^{n-2m} / (m! (n-2m)!).
inline ExactPoly hermite_explicit(unsigned n) {
    auto fact = [](unsigned k) {
        BigInt f = 1;
        for (unsigned i = 2; i <= k; ++i) f *= i;
        return f;
    };
    std::vector<BigInt> c(n + 1, BigInt(0));
    for (unsigned m = 0; 2 * m <= n; ++m) {
        BigInt t = fact(n) / (fact(m) * fact(n - 2 * m));
        t <<= (n - 2 * m);
        c[n - 2 * m] = (m % 2 ? -t : t);
    }
    return ExactPoly(std::move(c));
}

// Determinant by full Laplace expansion along the first row.
inline ExactPoly laplace_determinant(const std::vector<std::vector<ExactPoly>>& m) {
    const std::size_t t = m.size();
    if (t == 1) return m[0][0];
    ExactPoly det;
    for (std::size_t j = 0; j < t; ++j) {
        std::vector<std::vector<ExactPoly>> minor;
        for (std::size_t i = 1; i < t; ++i) {
            std::vector<ExactPoly> row;
            for (std::size_t c = 0; c < t; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        const ExactPoly term = m[0][j] * laplace_determinant(minor);
        det = (j % 2) ? det - term : det + term;
    }
    return det;
}

inline ExactPoly wronskian_laplace(const std::vector<ExactPoly>& fs) {
    std::vector<std::vector<ExactPoly>> m(fs.size());
    for (std::size_t j = 0; j < fs.size(); ++j) {
        ExactPoly d = fs[j];
        for (std::size_t i = 0; i < fs.size(); ++i) {
            m[i].push_back(d);
            d = d.derivative();
        }
    }
    return laplace_determinant(m);
}

// Floating Wronskian at a point via partial-pivot LU of the derivative matrix.
inline double wronskian_lu(const std::vector<ExactPoly>& fs, double x) {
    const std::size_t t = fs.size();
    std::vector<std::vector<double>> a(t, std::vector<double>(t));
    for (std::size_t j = 0; j < t; ++j) {
        ExactPoly d = fs[j];
        for (std::size_t i = 0; i < t; ++i) {
            a[i][j] = d(x);
            d = d.derivative();
        }
    }
    double det = 1.0;
    for (std::size_t k = 0; k < t; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < t; ++i)
            if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
        if (a[p][k] == 0.0) return 0.0;
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < t; ++i) {
            const double f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < t; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

inline ExactPoly random_poly(std::mt19937_64& rng, int max_degree, long long bound) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long long> c(-bound, bound);
    std::vector<BigInt> v(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : v) x = c(rng);
    return ExactPoly(std::move(v));
}

// Real roots of a polynomial counted by sign changes on a fine mesh plus
// tangency checks; only used on low-degree polynomials with well-separated roots.
inline int mesh_root_count(const ExactPoly& p, double a, double b, int samples) {
    int count = 0;
    double prev = p(a);
    for (int i = 1; i <= samples; ++i) {
        const double x = a + (b - a) * i / samples;
        const double v = p(x);
        if ((prev < 0.0 && v > 0.0) || (prev > 0.0 && v < 0.0)) ++count;
        if (v != 0.0) prev = v;
    }
    return count;
}

}  // namespace oracle
