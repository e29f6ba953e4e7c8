#pragma once

#include <stdexcept>
#include <string>

namespace xhdirac {

/// Requested exceptional degree n does not produce a polynomial of degree n.
class AdmissibilityError : public std::invalid_argument {
public:
    AdmissibilityError(int n, const std::string& why)
        : std::invalid_argument("degree n=" + std::to_string(n) + " is not admissible: " + why), n_(n) {}

    int degree() const noexcept { return n_; }

private:
    int n_;
};

/// A denominator of an energy-dependent potential vanishes.
class PoleError : public std::domain_error {
public:
    PoleError(const std::string& what, double location)
        : std::domain_error(what), location_(location) {}

    /// Radial location of the pole, or NaN when the pole is in the energy.
    double location() const noexcept { return location_; }

private:
    double location_;
};

class NoRealEnergyError : public std::domain_error {
public:
    explicit NoRealEnergyError(double discriminant)
        : std::domain_error("no real energy: M^2 + 2 alpha^2 (n - |lambda|) = " + std::to_string(discriminant)),
          discriminant_(discriminant) {}

    double discriminant() const noexcept { return discriminant_; }

private:
    double discriminant_;
};

}  // namespace xhdirac
