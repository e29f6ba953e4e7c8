#pragma once

// Exact univariate polynomials over arbitrary-precision integers, classical
// Hermite polynomials and Wronskian determinants.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xhdirac {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial with integer coefficients in ascending degree order.
///
/// The zero polynomial is the empty coefficient list; every constructor and
/// arithmetic operation strips trailing zeros so that `degree() ==
/// coeffs().size() - 1` for nonzero values. Instances are immutable.
class ExactPoly {
public:
    ExactPoly() = default;

    explicit ExactPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    ExactPoly(std::initializer_list<long long> coeffs) {
        coeffs_.reserve(coeffs.size());
        for (long long c : coeffs) coeffs_.emplace_back(c);
        normalize();
    }

    static ExactPoly constant(BigInt c) { return ExactPoly(std::vector<BigInt>{std::move(c)}); }

    static ExactPoly monomial(BigInt c, std::size_t degree) {
        std::vector<BigInt> v(degree + 1);
        v[degree] = std::move(c);
        return ExactPoly(std::move(v));
    }

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

    const BigInt& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    /// Horner evaluation in double precision.
    double operator()(double x) const noexcept {
        double acc = 0.0;
        for (auto it = approx_.rbegin(); it != approx_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    const std::vector<double>& approx_coeffs() const noexcept { return approx_; }

    ExactPoly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<BigInt> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned>(i);
        return ExactPoly(std::move(d));
    }

    ExactPoly scaled(const BigInt& c) const {
        std::vector<BigInt> v(coeffs_);
        for (auto& x : v) x *= c;
        return ExactPoly(std::move(v));
    }

    friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.coeffs_ == b.coeffs_; }

    friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
        std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return ExactPoly(std::move(v));
    }

    friend ExactPoly operator-(const ExactPoly& a) {
        std::vector<BigInt> v(a.coeffs_);
        for (auto& x : v) x = -x;
        return ExactPoly(std::move(v));
    }

    friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) { return a + (-b); }

    friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return ExactPoly(std::move(v));
    }

    friend ExactPoly operator*(const BigInt& c, const ExactPoly& p) { return p.scaled(c); }
    friend ExactPoly operator*(long long c, const ExactPoly& p) { return p.scaled(BigInt(c)); }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
        approx_.resize(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) approx_[i] = coeffs_[i].convert_to<double>();
    }

    std::vector<BigInt> coeffs_;
    std::vector<double> approx_;
};

inline ExactPoly derivative(const ExactPoly& p) { return p.derivative(); }

inline ExactPoly derivative(const ExactPoly& p, unsigned order) {
    ExactPoly d = p;
    for (unsigned i = 0; i < order; ++i) d = d.derivative();
    return d;
}

inline std::string to_string(const ExactPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const BigInt& c = p.coeffs()[i];
        if (c == 0) continue;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (mag != 1 || i == 0) out += mag.str();
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

/// Physicists' Hermite polynomial from H_{n+1} = 2x H_n - 2n H_{n-1}.
inline ExactPoly hermite(unsigned n) {
    ExactPoly prev{1};
    if (n == 0) return prev;
    ExactPoly cur{0, 2};
    const ExactPoly two_x{0, 2};
    for (unsigned j = 1; j < n; ++j) {
        ExactPoly next = two_x * cur - prev.scaled(BigInt(2 * j));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Exact quotient a / b in Z[x]; throws when b does not divide a.
inline ExactPoly divide_exact(const ExactPoly& a, const ExactPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<BigInt> rem(a.coeffs());
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<BigInt> q(rem.size() - db);
    for (std::size_t s = q.size(); s-- > 0;) {
        const BigInt& top = rem[s + db];
        if (top == 0) continue;
        BigInt r;
        BigInt quo;
        boost::multiprecision::divide_qr(top, bc.back(), quo, r);
        if (r != 0) throw std::domain_error("inexact polynomial division");
        for (std::size_t j = 0; j <= db; ++j) rem[s + j] -= quo * bc[j];
        q[s] = std::move(quo);
    }
    for (const auto& r : rem)
        if (r != 0) throw std::domain_error("inexact polynomial division");
    return ExactPoly(std::move(q));
}

/// Remainder of a by b scaled by a positive integer, so that its sign
/// pattern matches the true remainder over Q.
inline ExactPoly positive_pseudo_remainder(const ExactPoly& a, const ExactPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by the zero polynomial");
    std::vector<BigInt> r(a.coeffs());
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const BigInt& lb = bc.back();
    const BigInt mult = lb < 0 ? BigInt(-lb) : lb;
    const int sgn = lb < 0 ? -1 : 1;
    auto trim = [&r] { while (!r.empty() && r.back() == 0) r.pop_back(); };
    trim();
    while (!r.empty() && r.size() - 1 >= db) {
        const std::size_t shift = r.size() - 1 - db;
        const BigInt top = r.back();
        for (auto& c : r) c *= mult;
        for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= sgn * top * bc[j];
        trim();
    }
    return ExactPoly(std::move(r));
}

inline BigInt content(const ExactPoly& p) {
    BigInt g = 0;
    for (const auto& c : p.coeffs()) g = boost::multiprecision::gcd(g, c);
    return g < 0 ? BigInt(-g) : g;
}

/// p divided by its (positive) content.
inline ExactPoly primitive_part(const ExactPoly& p) {
    if (p.is_zero()) return p;
    const BigInt g = content(p);
    std::vector<BigInt> v(p.coeffs());
    for (auto& c : v) c /= g;
    return ExactPoly(std::move(v));
}

/// Primitive gcd with positive leading coefficient.
inline ExactPoly gcd(ExactPoly a, ExactPoly b) {
    if (a.is_zero() && b.is_zero()) return {};
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ExactPoly r = primitive_part(positive_pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a.leading() < 0 ? -a : a;
}

namespace detail {

inline ExactPoly cofactor_determinant(const std::vector<std::vector<ExactPoly>>& m) {
    switch (m.size()) {
    case 1:
        return m[0][0];
    case 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    case 3:
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    default:
        throw std::logic_error("cofactor expansion is only used up to 3x3");
    }
}

// Fraction-free Gaussian elimination over Z[x]; every division is exact.
inline ExactPoly bareiss_determinant(std::vector<std::vector<ExactPoly>> m) {
    const std::size_t t = m.size();
    ExactPoly prev{1};
    bool negate = false;
    for (std::size_t k = 0; k + 1 < t; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < t && m[p][k].is_zero()) ++p;
            if (p == t) return {};
            std::swap(m[k], m[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < t; ++i) {
            for (std::size_t j = k + 1; j < t; ++j)
                m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        }
        prev = m[k][k];
    }
    return negate ? -m[t - 1][t - 1] : m[t - 1][t - 1];
}

}  // namespace detail

/// Determinant of the matrix whose row i holds the i-th derivatives of the
/// inputs, columns in input order.
inline ExactPoly wronskian(std::span<const ExactPoly> fs) {
    if (fs.empty()) throw std::invalid_argument("wronskian of an empty list");
    const std::size_t t = fs.size();
    std::vector<std::vector<ExactPoly>> m(t, std::vector<ExactPoly>(t));
    for (std::size_t j = 0; j < t; ++j) {
        ExactPoly d = fs[j];
        for (std::size_t i = 0; i < t; ++i) {
            m[i][j] = d;
            d = d.derivative();
        }
    }
    return t <= 3 ? detail::cofactor_determinant(m) : detail::bareiss_determinant(std::move(m));
}

inline ExactPoly wronskian(std::initializer_list<ExactPoly> fs) {
    return wronskian(std::span<const ExactPoly>(fs.begin(), fs.size()));
}

}  // namespace xhdirac
