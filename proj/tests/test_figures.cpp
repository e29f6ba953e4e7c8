#include <xhdirac/figures.hpp>
#include <xhdirac/table.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>

using namespace xhdirac;

namespace {

std::vector<double> column(const Table& t, const std::string& name) {
    const std::size_t c = t.column(name);
    std::vector<double> out;
    for (const auto& row : t.rows) {
        if (const auto* d = std::get_if<double>(&row[c])) out.push_back(*d);
        else out.push_back(static_cast<double>(std::get<long long>(row[c])));
    }
    return out;
}

std::string param(const Table& t, const std::string& key) {
    for (const auto& [k, v] : t.params)
        if (k == key) return v;
    return {};
}

}  // namespace

TEST(TableFormat, Doubles) {
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(format_double(2.0), "2");
    EXPECT_EQ(format_double(std::nan("")), "nan");
    EXPECT_EQ(format_double(-INFINITY), "-inf");
}

TEST(TableFormat, CsvAndJsonLines) {
    Table t;
    t.columns = {"a", "b", "c"};
    t.add_row({1.5, 2LL, std::string("x")});
    t.add_row({std::nan(""), -1LL, std::string("y")});
    t.param("alpha", 1.0);
    EXPECT_THROW(t.add_row({1.0}), std::invalid_argument);

    std::ostringstream csv;
    write_csv(csv, t);
    EXPECT_EQ(csv.str(), "a,b,c\n1.5,2,x\nnan,-1,y\n# param alpha=1\n");

    std::ostringstream js;
    write_json_lines(js, t);
    EXPECT_EQ(js.str(), "{\"a\":1.5,\"b\":2,\"c\":\"x\"}\n{\"a\":null,\"b\":-1,\"c\":\"y\"}\n{\"params\":{\"alpha\":\"1\"}}\n");
}

TEST(TableFormat, PolyRecordsRoundTrip) {
    const Partition lambda(std::vector<int>{1, 1});
    const XHermiteFamily fam(lambda, 12);
    const auto rec = poly_record(lambda, std::nullopt, fam.h());
    EXPECT_EQ(rec.dump(), "{\"partition\":[1,1],\"n\":null,\"degree\":2,\"coeffs\":[\"4\",\"0\",\"8\"]}");
    EXPECT_EQ(poly_record(lambda, 0, fam.p(0))["coeffs"].dump(), "[\"16\"]");
    for (int n : fam.admissible()) {
        const auto j = nlohmann::json::parse(poly_record(lambda, n, fam.p(n)).dump());
        EXPECT_EQ(poly_from_json(j), fam.p(n));
    }
    // coefficients beyond 64 bits survive as decimal strings
    const ExactPoly big = hermite(40);
    EXPECT_EQ(poly_from_json(nlohmann::json::parse(to_json(big).dump())), big);
}

TEST(DensityTable, Contract) {
    for (auto kind : {SymmetryKind::Spin, SymmetryKind::PseudoSpin}) {
        DataConfig cfg;
        cfg.kind = kind;
        const Table t = density_table(cfg);
        const Grid g = cfg.grid(cfg.alpha);
        ASSERT_EQ(t.rows.size(), g.count);
        const auto rho = column(t, "rho");
        const auto F = column(t, "F");
        const auto G = column(t, "G");
        EXPECT_NEAR(trapezoid_integral(rho, g), 1.0, 1e-6);
        double fmax = 0.0, gmax = 0.0;
        for (std::size_t i = 0; i < rho.size(); ++i) {
            EXPECT_TRUE(std::isfinite(rho[i]));
            EXPECT_GE(rho[i], 0.0);
            fmax = std::max(fmax, std::abs(F[i]));
            gmax = std::max(gmax, std::abs(G[i]));
        }
        EXPECT_LT(std::abs(F.back()), 1e-8 * fmax);
        EXPECT_LT(std::abs(G.back()), 1e-8 * gmax);

        const auto pole = column(t, "pole");
        const double r0 = std::stod(param(t, "poles"));
        EXPECT_NEAR(r0, 1.4304, 1e-3);
        for (std::size_t i = 0; i < g.count; ++i)
            if (std::abs(g[i] - r0) < 0.3) EXPECT_EQ(pole[i], 1.0) << g[i];
    }
}

TEST(DensityTable, FallsBackToOtherBranchAtEnergyPole) {
    DataConfig cfg;
    cfg.kind = SymmetryKind::PseudoSpin;
    cfg.n = 2;  // E = M on the upper branch
    const Table t = density_table(cfg);
    EXPECT_EQ(param(t, "branch"), "-1");
    EXPECT_EQ(param(t, "admissible"), "false");
    EXPECT_EQ(param(t, "profile"), "closed-form bracket");
}

TEST(FigureTable, AllFiguresFinite) {
    const DataConfig cfg;
    for (int id = 1; id <= figure_count; ++id) {
        const Table t = figure_table(id, cfg);
        EXPECT_FALSE(t.rows.empty()) << id;
        for (const auto& row : t.rows)
            for (const auto& c : row)
                if (const auto* d = std::get_if<double>(&c)) EXPECT_TRUE(std::isfinite(*d)) << "figure " << id;
        EXPECT_EQ(param(t, "figure"), std::to_string(id));
    }
    EXPECT_THROW(figure_table(0, cfg), std::invalid_argument);
    EXPECT_THROW(figure_table(7, cfg), std::invalid_argument);
}

TEST(FigureTable, DensitiesNormalizedPerN) {
    const DataConfig cfg;
    for (int id : {1, 4}) {
        const Table t = figure_table(id, cfg);
        const Grid g = cfg.grid(cfg.alpha);
        std::map<int, std::vector<double>> rho;
        const auto ns = column(t, "n");
        const auto r = column(t, "rho");
        for (std::size_t i = 0; i < r.size(); ++i) rho[static_cast<int>(ns[i])].push_back(r[i]);
        EXPECT_EQ(rho.size(), 3u);
        for (const auto& [n, v] : rho) {
            EXPECT_NEAR(trapezoid_integral(v, g), 1.0, 1e-6) << "figure " << id << " n=" << n;
            for (double x : v) EXPECT_GE(x, 0.0);
        }
    }
}

TEST(FigureTable, AdmissibilityFlags) {
    const DataConfig cfg;
    const Table t = figure_table(2, cfg);
    const auto ns = column(t, "n");
    const auto adm = column(t, "admissible");
    for (std::size_t i = 0; i < ns.size(); ++i) EXPECT_EQ(adm[i], ns[i] == 2.0 ? 0.0 : 1.0);
}

TEST(FigureTable, TensorPotentialNearOrigin) {
    const DataConfig cfg;
    const std::pair<int, int> cases[] = {{3, 1}, {6, 2}};
    for (const auto& [id, k] : cases) {
        const Table t = figure_table(id, cfg);
        const auto r = column(t, "r");
        const auto U = column(t, "U");
        EXPECT_NEAR(U.front() * r.front(), k, 1e-3) << "figure " << id;
        EXPECT_LT(std::abs(U[1] * r[1] - k), std::abs(U[200] * r[200] - k));
    }
}

TEST(FigureTable, Figure1MatchesDensityCommand) {
    DataConfig cfg;
    const Table fig = figure_table(1, cfg);
    for (int n : {2, 4, 5}) {
        cfg.n = n;
        const Table d = density_table(cfg);
        std::vector<std::string> a, b;
        const std::size_t fn = fig.column("n"), fr = fig.column("r"), frho = fig.column("rho");
        for (const auto& row : fig.rows)
            if (std::get<long long>(row[fn]) == n) a.push_back(format_cell(row[fr]) + "," + format_cell(row[frho]));
        const std::size_t dr = d.column("r"), drho = d.column("rho");
        for (const auto& row : d.rows) b.push_back(format_cell(row[dr]) + "," + format_cell(row[drho]));
        EXPECT_EQ(a, b) << "n=" << n;
    }
}

TEST(SpectrumTableTest, DefaultRows) {
    const SpectrumResult res = spectrum_table(SpectrumConfig{});
    EXPECT_TRUE(res.ok);
    EXPECT_LT(res.max_abs_diff, 1e-3);
    const auto n = column(res.table, "n");
    EXPECT_EQ(n, (std::vector<double>{0, 3, 4, 5}));
    const auto ep = column(res.table, "analytic_E_plus");
    const auto em = column(res.table, "analytic_E_minus");
    const auto eps = column(res.table, "analytic_epsilon");
    EXPECT_TRUE(std::isnan(ep[0]));
    EXPECT_DOUBLE_EQ(ep[1], std::sqrt(3.0));
    EXPECT_DOUBLE_EQ(em[1], -std::sqrt(3.0));
    EXPECT_DOUBLE_EQ(eps[1], 2.0);
    EXPECT_EQ(eps, (std::vector<double>{-4, 2, 4, 6}));
}

TEST(SpectrumTableTest, HalfAlpha) {
    SpectrumConfig cfg;
    cfg.alpha = 0.5;
    const SpectrumResult res = spectrum_table(cfg);
    EXPECT_TRUE(res.ok);
    EXPECT_EQ(column(res.table, "analytic_epsilon"), (std::vector<double>{-1, 0.5, 1, 1.5}));
}

TEST(SpectrumTableTest, EnergyAtEffectiveIndexIsMass) {
    // n = |λ| is never admissible for (1,1) or (2,2); the energy formula alone gives E = M.
    ModelParams p;
    p.n = 2;
    p.mass = 1.7;
    EXPECT_EQ(energy_level(p).value, 1.7);
}

TEST(SpectrumTableTest, TightToleranceFails) {
    SpectrumConfig cfg;
    cfg.tol = 1e-6;
    EXPECT_FALSE(spectrum_table(cfg).ok);
}

TEST(SpectrumTableTest, RequiresEvenPartition) {
    SpectrumConfig cfg;
    cfg.partition = Partition(std::vector<int>{2, 1});
    EXPECT_THROW(spectrum_table(cfg), std::invalid_argument);
}

TEST(Determinism, RepeatedTablesAreIdentical) {
    const DataConfig cfg;
    std::ostringstream a, b;
    write_csv(a, figure_table(5, cfg));
    write_csv(b, figure_table(5, cfg));
    EXPECT_EQ(a.str(), b.str());
}
