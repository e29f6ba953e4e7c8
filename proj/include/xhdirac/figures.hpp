#pragma once

// Data tables behind the probability-density, potential and tensor-potential
// figures, plus the density and spectrum tables of the CLI.

#include "dirac.hpp"
#include "numerics.hpp"
#include "table.hpp"
#include "xhermite.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xhdirac {

struct DataConfig {
    double alpha = 1.0;
    double mass = 1.0;
    int k = 1;
    int n = 3;
    int branch = +1;
    Partition partition{std::vector<int>{1, 1}};
    SymmetryKind kind = SymmetryKind::Spin;
    double r_min = 1e-3;
    std::optional<double> r_max;  // defaults to 8/alpha
    std::size_t points = 2001;
    PoleWindow window;

    Grid grid(double a) const { return Grid::uniform(r_min, r_max ? *r_max : 8.0 / a, points); }

    ModelParams params() const {
        ModelParams p;
        p.alpha = alpha;
        p.mass = mass;
        p.k = k;
        p.n = n;
        p.branch = branch;
        p.partition = partition;
        return p;
    }
};

/// Builds the model, switching to the other energy branch when the requested
/// one puts a pole in the scalar potential (E = -M for spin, E = M for
/// pseudospin). The energy-dependent potentials only see E², so the switch
/// keeps potentials unchanged.
inline DiracModel model_with_fallback(SymmetryKind kind, ModelParams p, ModelOptions opts = {}) {
    try {
        return DiracModel(kind, p, opts);
    } catch (const PoleError& e) {
        if (!std::isnan(e.location())) throw;
        p.branch = -p.branch;
        return DiracModel(kind, p, opts);
    }
}

inline RadialSolution density_solution(const DiracModel& model, const Grid& grid, PoleWindow window) {
    return normalize_solution(model.solve(grid, window));
}

namespace detail {

inline void model_params(Table& t, const std::string& prefix, const DiracModel& m, const Grid& g) {
    const auto& p = m.params();
    t.param(prefix + "kind", std::string(to_string(m.kind())));
    t.param(prefix + "n", p.n);
    t.param(prefix + "alpha", p.alpha);
    t.param(prefix + "mass", p.mass);
    t.param(prefix + "k", p.k);
    t.param(prefix + "branch", p.branch);
    t.param(prefix + "energy", m.energy());
    t.param(prefix + "admissible", std::string(m.family().is_admissible(p.n) ? "true" : "false"));
    t.param(prefix + "profile", std::string(m.literal_profile() ? "closed-form bracket" : "Wronskian P_n"));
    std::string poles;
    for (double r : m.pole_locations(g)) poles += (poles.empty() ? "" : ";") + format_double(r);
    t.param(prefix + "poles", poles.empty() ? std::string("none") : poles);
}

inline void grid_params(Table& t, const DataConfig& cfg, const Grid& g) {
    t.param("partition", cfg.partition.str());
    t.param("r_min", g.start);
    t.param("r_max", cfg.r_max ? *cfg.r_max : 8.0 / cfg.alpha);
    t.param("points", static_cast<long long>(g.count));
    t.param("pole_window_points", static_cast<long long>(cfg.window.points));
    t.param("pole_window_radius", cfg.window.radius);
}

}  // namespace detail

/// Columns r, F, G, rho, pole for the configured kind and n, normalized so the
/// trapezoid integral of rho is 1.
inline Table density_table(const DataConfig& cfg) {
    const DiracModel m = model_with_fallback(cfg.kind, cfg.params());
    const Grid g = cfg.grid(cfg.alpha);
    const RadialSolution s = density_solution(m, g, cfg.window);
    const auto rho = probability_density(s);
    Table t;
    t.columns = {"r", "F", "G", "rho", "pole"};
    for (std::size_t i = 0; i < g.count; ++i) t.add_row({g[i], s.F[i], s.G[i], rho[i], static_cast<long long>(s.pole_mask[i])});
    t.param("table", std::string("density"));
    detail::model_params(t, "", m, g);
    detail::grid_params(t, cfg, g);
    t.param("norm_constant", s.norm_constant);
    return t;
}

inline constexpr int figure_count = 6;

/// Data for figure 1..6.
///  1, 4: n, r, rho, pole, admissible for n = 2, 4, 5 (spin, pseudospin)
///  2:    n, alpha, r, potential, pole, admissible; spin F-equation bracket, n = 2, 5, 8
///  3:    n, alpha, r, U, pole, admissible; spin tensor potential, k=1, α=0.1, M=1, n=2
///  5:    n, alpha, r, potential, pole, admissible; pseudospin G-equation bracket,
///        (α, n) = (10, 2), (50, 4), (10, 4)
///  6:    n, alpha, r, U, pole, admissible; pseudospin tensor potential, M=1, α=2, n=2, k=2
inline Table figure_table(int id, const DataConfig& cfg) {
    Table t;
    t.param("figure", id);
    auto flag = [](const DiracModel& m) { return static_cast<long long>(m.family().is_admissible(m.params().n) ? 1 : 0); };

    if (id == 1 || id == 4) {
        const SymmetryKind kind = id == 1 ? SymmetryKind::Spin : SymmetryKind::PseudoSpin;
        t.columns = {"n", "r", "rho", "pole", "admissible"};
        const Grid g = cfg.grid(cfg.alpha);
        for (int n : {2, 4, 5}) {
            DataConfig c = cfg;
            c.n = n;
            const DiracModel m = model_with_fallback(kind, c.params());
            const RadialSolution s = density_solution(m, g, cfg.window);
            const auto rho = probability_density(s);
            for (std::size_t i = 0; i < g.count; ++i)
                t.add_row({static_cast<long long>(n), g[i], rho[i], static_cast<long long>(s.pole_mask[i]), flag(m)});
            detail::model_params(t, "n" + std::to_string(n) + ".", m, g);
            t.param("n" + std::to_string(n) + ".norm_constant", s.norm_constant);
        }
        t.param("quantity", std::string("rho = F^2 + G^2, normalized per n"));
        detail::grid_params(t, cfg, g);
        return t;
    }

    if (id == 2 || id == 5) {
        const SymmetryKind kind = id == 2 ? SymmetryKind::Spin : SymmetryKind::PseudoSpin;
        std::vector<std::pair<double, int>> cases;
        if (id == 2) cases = {{cfg.alpha, 2}, {cfg.alpha, 5}, {cfg.alpha, 8}};
        else cases = {{10.0, 2}, {50.0, 4}, {10.0, 4}};
        t.columns = {"n", "alpha", "r", "potential", "pole", "admissible"};
        for (const auto& [a, n] : cases) {
            DataConfig c = cfg;
            c.alpha = a;
            c.n = n;
            const DiracModel m = model_with_fallback(kind, c.params());
            const Grid g = c.grid(a);
            const auto mask = DiracModel::pole_mask(g, m.pole_locations(g), cfg.window);
            for (std::size_t i = 0; i < g.count; ++i)
                t.add_row({static_cast<long long>(n), a, g[i], m.bracket_potential(g[i]), static_cast<long long>(mask[i]), flag(m)});
            detail::model_params(t, "a" + format_double(a) + ".n" + std::to_string(n) + ".", m, g);
        }
        t.param("quantity", std::string(id == 2 ? "2(E+M)V + U^2 - 2kU/r + k(k+1)/r^2 + U' (decoupled F equation, spin)"
                                                : "2(E-M)V + U^2 - 2kU/r + k(k-1)/r^2 - U' (decoupled G equation, pseudospin)"));
        t.param("partition", cfg.partition.str());
        t.param("points", static_cast<long long>(cfg.points));
        return t;
    }

    if (id == 3 || id == 6) {
        DataConfig c = cfg;
        const SymmetryKind kind = id == 3 ? SymmetryKind::Spin : SymmetryKind::PseudoSpin;
        if (id == 3) {
            c.k = 1;
            c.alpha = 0.10;
            c.mass = 1.0;
            c.n = 2;
        } else {
            c.mass = 1.0;
            c.alpha = 2.0;
            c.n = 2;
            c.k = 2;
        }
        t.columns = {"n", "alpha", "r", "U", "pole", "admissible"};
        const DiracModel m = model_with_fallback(kind, c.params());
        const Grid g = c.grid(c.alpha);
        const auto mask = DiracModel::pole_mask(g, m.pole_locations(g), cfg.window);
        for (std::size_t i = 0; i < g.count; ++i)
            t.add_row({static_cast<long long>(c.n), c.alpha, g[i], m.tensor(g[i]).value(), static_cast<long long>(mask[i]), flag(m)});
        detail::model_params(t, "", m, g);
        t.param("quantity", std::string(id == 3 ? "U = k/r + V'/(E-M-2V)" : "U = k/r - V'/(E+M-2V)"));
        detail::grid_params(t, c, g);
        return t;
    }

    throw std::invalid_argument("unknown figure id " + std::to_string(id) + " (expected 1..6)");
}

struct SpectrumConfig {
    double alpha = 1.0;
    double mass = 1.0;
    Partition partition{std::vector<int>{1, 1}};
    int n_max = 5;
    std::size_t points = 2001;
    std::optional<double> half_width;  // defaults to max(10, sqrt(2 eps_max)/alpha^2 + 5)
    double tol = 1e-3;
};

struct SpectrumResult {
    Table table;
    double max_abs_diff = 0.0;
    bool ok = true;
};

/// One row per admissible n ≤ n_max: analytic energies, the FD eigenvalue of
/// the isotonic effective potential and the predicted 2α²(n - |λ|).
inline SpectrumResult spectrum_table(const SpectrumConfig& cfg) {
    const XHermiteFamily fam(cfg.partition, cfg.n_max);
    if (!cfg.partition.is_even()) throw std::invalid_argument("spectrum requires an even partition");
    std::vector<int> ns(fam.admissible().begin(), fam.admissible().end());
    double eps_max = 0.0;
    for (int n : ns) eps_max = std::max(eps_max, 2.0 * cfg.alpha * cfg.alpha * (n - cfg.partition.size()));
    const double L = cfg.half_width ? *cfg.half_width
                                    : std::max(10.0, std::sqrt(2.0 * eps_max) / (cfg.alpha * cfg.alpha) + 5.0);
    const auto fd = fd_schrodinger_spectrum([&](double z) { return effective_potential_g(fam, cfg.alpha, z); }, L,
                                            cfg.points, ns.size());
    SpectrumResult res;
    Table& t = res.table;
    t.columns = {"n", "analytic_E_plus", "analytic_E_minus", "fd_epsilon", "analytic_epsilon", "abs_diff", "real_energy"};
    for (std::size_t i = 0; i < ns.size(); ++i) {
        ModelParams p;
        p.alpha = cfg.alpha;
        p.mass = cfg.mass;
        p.n = ns[i];
        p.partition = cfg.partition;
        const double disc = energy_discriminant(p);
        const bool real = disc >= 0.0;
        const double ep = real ? energy_level(p).value : std::numeric_limits<double>::quiet_NaN();
        p.branch = -1;
        const double em = real ? energy_level(p).value : std::numeric_limits<double>::quiet_NaN();
        const double eps = isotonic_eigenvalue(p);
        const double diff = std::abs(fd[i] - eps);
        res.max_abs_diff = std::max(res.max_abs_diff, diff);
        if (!(diff <= cfg.tol)) res.ok = false;
        t.add_row({static_cast<long long>(ns[i]), ep, em, fd[i], eps, diff, static_cast<long long>(real ? 1 : 0)});
    }
    t.param("table", std::string("spectrum"));
    t.param("partition", cfg.partition.str());
    t.param("alpha", cfg.alpha);
    t.param("mass", cfg.mass);
    t.param("n_max", cfg.n_max);
    t.param("half_width", L);
    t.param("points", static_cast<long long>(cfg.points));
    t.param("tol", cfg.tol);
    t.param("potential", std::string("alpha^2 S(alpha z), S(x) = x^2 - 1 - 2 (ln H_lambda)''(x)"));
    return res;
}

}  // namespace xhdirac
