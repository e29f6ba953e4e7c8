#pragma once

// Exceptional Hermite polynomials built from Wronskians of classical Hermite
// polynomials, their weight, defining ODE and orthogonality.

#include "errors.hpp"
#include "numerics.hpp"
#include "polycore.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace xhdirac {

/// Weakly decreasing sequence of positive integers. The empty partition is
/// the classical limit (H_∅ = 1).
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    /// Parses "1,1" or "2, 2"; an empty string gives the empty partition.
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto b = item.find_first_not_of(" \t");
            if (b == std::string::npos) throw std::invalid_argument("empty partition entry in '" + text + "'");
            const auto e = item.find_last_not_of(" \t");
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(item.substr(b, e - b + 1), &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad partition entry '" + item + "'");
            }
            if (used != e - b + 1) throw std::invalid_argument("bad partition entry '" + item + "'");
            parts.push_back(v);
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const noexcept { return parts_.empty(); }

    /// λ_{2k-1} = λ_{2k} for all k, with even length.
    bool is_even() const noexcept {
        if (parts_.size() % 2 != 0) return false;
        for (std::size_t i = 0; i < parts_.size(); i += 2)
            if (parts_[i] != parts_[i + 1]) return false;
        return true;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s;
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

namespace detail {

// Hermite indices of the partition columns: λ_t, λ_{t-1}+1, ..., λ_1+t-1.
inline std::vector<int> partition_indices(const Partition& lambda) {
    const auto& p = lambda.parts();
    const int t = static_cast<int>(p.size());
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = p[t - 1 - i] + i;
    return idx;
}

inline ExactPoly p_candidate(const Partition& lambda, int n) {
    const int t = static_cast<int>(lambda.length());
    const int last = n - lambda.size() + t;
    if (last < 0) return {};
    std::vector<ExactPoly> cols;
    for (int i : partition_indices(lambda)) {
        if (i == last) return {};
        cols.push_back(hermite(static_cast<unsigned>(i)));
    }
    cols.push_back(hermite(static_cast<unsigned>(last)));
    return wronskian(cols);
}

}  // namespace detail

inline ExactPoly h_lambda(const Partition& lambda) {
    if (lambda.empty()) return ExactPoly{1};
    std::vector<ExactPoly> cols;
    for (int i : detail::partition_indices(lambda)) cols.push_back(hermite(static_cast<unsigned>(i)));
    return wronskian(cols);
}

inline std::set<int> admissible_degrees(const Partition& lambda, int n_max) {
    if (n_max < 0) throw std::invalid_argument("admissible_degrees: n_max must be non-negative");
    std::set<int> out;
    for (int n = 0; n <= n_max; ++n) {
        const ExactPoly p = detail::p_candidate(lambda, n);
        if (!p.is_zero() && p.degree() == n) out.insert(n);
    }
    return out;
}

/// Cached H_λ, admissible set and P_n up to n_max. Immutable after construction.
class XHermiteFamily {
public:
    explicit XHermiteFamily(Partition lambda, int n_max = 12) : lambda_(std::move(lambda)), n_max_(n_max) {
        if (n_max < 0) throw std::invalid_argument("XHermiteFamily: n_max must be non-negative");
        h_ = h_lambda(lambda_);
        for (int n = 0; n <= n_max_; ++n) {
            ExactPoly p = detail::p_candidate(lambda_, n);
            if (!p.is_zero() && p.degree() == n) {
                admissible_.insert(n);
                polys_.emplace(n, std::move(p));
            }
        }
    }

    const Partition& partition() const noexcept { return lambda_; }
    const ExactPoly& h() const noexcept { return h_; }
    int n_max() const noexcept { return n_max_; }
    const std::set<int>& admissible() const noexcept { return admissible_; }

    bool is_admissible(int n) const {
        if (n < 0) return false;
        if (n <= n_max_) return admissible_.count(n) > 0;
        const ExactPoly p = detail::p_candidate(lambda_, n);
        return !p.is_zero() && p.degree() == n;
    }

    /// P_n; throws AdmissibilityError when the Wronskian vanishes or drops degree.
    ExactPoly p(int n) const {
        if (n < 0) throw AdmissibilityError(n, "negative degree");
        if (n <= n_max_) {
            auto it = polys_.find(n);
            if (it != polys_.end()) return it->second;
        }
        const ExactPoly q = detail::p_candidate(lambda_, n);
        if (q.is_zero()) throw AdmissibilityError(n, "Wronskian vanishes (repeated or negative Hermite index)");
        if (q.degree() != n)
            throw AdmissibilityError(n, "Wronskian has degree " + std::to_string(q.degree()) + " instead of " + std::to_string(n));
        return q;
    }

private:
    Partition lambda_;
    int n_max_;
    ExactPoly h_;
    std::set<int> admissible_;
    std::map<int, ExactPoly> polys_;
};

inline ExactPoly exceptional_p(const XHermiteFamily& family, int n) { return family.p(n); }

namespace detail {
inline void require_even(const XHermiteFamily& family, const char* what) {
    if (!family.partition().is_even())
        throw std::domain_error(std::string(what) + ": partition (" + family.partition().str() +
                                ") is not even, so H_lambda may vanish on the real line");
}
}  // namespace detail

/// e^{-r²} / H_λ(r)².
inline double weight_w(const XHermiteFamily& family, double r) {
    detail::require_even(family, "weight_w");
    const double h = family.h()(r);
    return std::exp(-r * r) / (h * h);
}

/// H P'' - 2(rH + H')P' + (H'' + 2rH' + (2n - 2|λ| + shift)H)P, exactly.
/// A nonzero shift perturbs the eigenvalue term.
inline ExactPoly ode_residual_polynomial(const XHermiteFamily& family, int n, int eigenvalue_shift = 0) {
    const ExactPoly p = family.p(n);
    const ExactPoly& h = family.h();
    const ExactPoly x{0, 1};
    const ExactPoly dh = h.derivative();
    const ExactPoly coeff = h.derivative().derivative() + (2 * (x * dh)) +
                            h.scaled(BigInt(2 * n - 2 * family.partition().size() + eigenvalue_shift));
    return h * p.derivative().derivative() - 2 * ((x * h + dh) * p.derivative()) + coeff * p;
}

/// ∫ P_n P_m W_λ over the real line with the given e^{-x²} rule.
inline double orthogonality_integral(const XHermiteFamily& family, int n, int m, const QuadratureRule& rule) {
    detail::require_even(family, "orthogonality_integral");
    const ExactPoly pn = family.p(n);
    const ExactPoly pm = family.p(m);
    const ExactPoly& h = family.h();
    return rule.integrate([&](double x) {
        const double hx = h(x);
        return pn(x) * pm(x) / (hx * hx);
    });
}

inline int default_quadrature_order(const XHermiteFamily& family, int n, int m) {
    return std::min(200, 2 * (n + m + family.partition().size()) + 40);
}

struct OrthogonalityCheck {
    int n = 0, m = 0;
    double value = 0.0;       // I_nm
    double refined = 0.0;     // I_nm with the refined rule
    double scale = 0.0;       // sqrt(I_nn I_mm)
    double relative = 0.0;    // |I_nm| / scale
    double convergence = 0.0; // |value - refined| / scale
};

/// Pairwise check with the trapezoid Gaussian rule (step, then step/2).
inline OrthogonalityCheck check_orthogonality(const XHermiteFamily& family, int n, int m, double step = 0.1,
                                              double half_width = 14.0) {
    const QuadratureRule coarse = trapezoid_gaussian_rule(step, half_width);
    const QuadratureRule fine = trapezoid_gaussian_rule(step / 2.0, half_width);
    OrthogonalityCheck c;
    c.n = n;
    c.m = m;
    c.value = orthogonality_integral(family, n, m, coarse);
    c.refined = orthogonality_integral(family, n, m, fine);
    c.scale = std::sqrt(orthogonality_integral(family, n, n, coarse) * orthogonality_integral(family, m, m, coarse));
    c.relative = std::abs(c.value) / c.scale;
    c.convergence = std::abs(c.value - c.refined) / c.scale;
    return c;
}

/// Same check with Gauss–Hermite at `order` and min(2*order, 200).
inline OrthogonalityCheck check_orthogonality_gauss(const XHermiteFamily& family, int n, int m, int order) {
    const QuadratureRule coarse = gauss_hermite_rule(order);
    const QuadratureRule fine = gauss_hermite_rule(std::min(2 * order, 200));
    OrthogonalityCheck c;
    c.n = n;
    c.m = m;
    c.value = orthogonality_integral(family, n, m, coarse);
    c.refined = orthogonality_integral(family, n, m, fine);
    c.scale = std::sqrt(orthogonality_integral(family, n, n, coarse) * orthogonality_integral(family, m, m, coarse));
    c.relative = std::abs(c.value) / c.scale;
    c.convergence = std::abs(c.value - c.refined) / c.scale;
    return c;
}

enum class ProductForm {
    WeightInside,  // d/dr[W (P_n P_m' - P_n' P_m)] / (2(n-m)) = P_n P_m W
    Literal        // d/dr[(P_n P_m' - P_n' P_m) / (2(n-m))] = P_n P_m W
};

/// Max over the grid of |lhs - P_n P_m W| for the chosen form, derivatives
/// taken on exact polynomials.
inline double weighted_product_residual(const XHermiteFamily& family, int n, int m, const Grid& grid,
                                        ProductForm form = ProductForm::WeightInside) {
    if (n == m) throw std::invalid_argument("weighted_product_residual: n and m must differ");
    const ExactPoly pn = family.p(n);
    const ExactPoly pm = family.p(m);
    const ExactPoly wr = pn * pm.derivative() - pn.derivative() * pm;
    const ExactPoly dwr = wr.derivative();
    const ExactPoly prod = pn * pm;
    const ExactPoly& h = family.h();
    const ExactPoly dh = h.derivative();
    const double denom = 2.0 * (n - m);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.count; ++i) {
        const double r = grid[i];
        const double hr = h(r);
        const double w = std::exp(-r * r) / (hr * hr);
        const double rhs = prod(r) * w;
        double lhs = 0.0;
        if (form == ProductForm::WeightInside) {
            const double dw = w * (-2.0 * r - 2.0 * dh(r) / hr);
            lhs = (dw * wr(r) + w * dwr(r)) / denom;
        } else {
            lhs = dwr(r) / denom;
        }
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

/// True iff p has no real roots.
inline bool zero_free_check(const ExactPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero_free_check of the zero polynomial");
    return sturm_real_root_count(p) == 0;
}

}  // namespace xhdirac
