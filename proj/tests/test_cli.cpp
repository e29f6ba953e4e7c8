#include "cli_runner.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace {

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

// Data rows only: header and `# param` lines removed.
std::vector<std::vector<std::string>> csv_rows(const std::string& s) {
    std::vector<std::vector<std::string>> rows;
    bool header = true;
    for (const auto& l : lines(s)) {
        if (header) {
            header = false;
            continue;
        }
        if (l.rfind("# ", 0) == 0) continue;
        std::vector<std::string> cells;
        std::istringstream is(l);
        for (std::string c; std::getline(is, c, ',');) cells.push_back(c);
        rows.push_back(std::move(cells));
    }
    return rows;
}

}  // namespace

TEST(Cli, PolysRecords) {
    const auto r = run_cli("polys");
    ASSERT_EQ(r.status, 0);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 12u);  // H_λ plus 11 admissible degrees ≤ 12
    const auto h = nlohmann::json::parse(ls[0]);
    EXPECT_TRUE(h["n"].is_null());
    EXPECT_EQ(h["coeffs"], nlohmann::json({"4", "0", "8"}));
    const auto p0 = nlohmann::json::parse(ls[1]);
    EXPECT_EQ(p0["n"], 0);
    EXPECT_EQ(p0["coeffs"], nlohmann::json({"16"}));
    EXPECT_EQ(p0["partition"], nlohmann::json({1, 1}));
}

TEST(Cli, PolysCsv) {
    const auto r = run_cli("polys --format csv --nmax 4");
    ASSERT_EQ(r.status, 0);
    const auto ls = lines(r.out);
    EXPECT_EQ(ls[0], "partition,n,degree,coeffs");
    EXPECT_EQ(ls[1], "\"1,1\",,2,4 0 8");
    EXPECT_EQ(ls[2], "\"1,1\",0,0,16");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli("polys --partition 1,2").status, 2);
    EXPECT_EQ(run_cli("polys --bogus").status, 2);
    EXPECT_EQ(run_cli("").status, 2);
    EXPECT_EQ(run_cli("nosuchcommand").status, 2);
    EXPECT_EQ(run_cli("figure --figure 7").status, 2);
    EXPECT_EQ(run_cli("figure").status, 2);
    EXPECT_EQ(run_cli("density --alpha -1").status, 2);
    EXPECT_EQ(run_cli("density --format xml").status, 2);
    EXPECT_EQ(run_cli("verify --suite nope").status, 2);
    EXPECT_EQ(run_cli("spectrum --partition 2,1").status, 2);
    EXPECT_EQ(run_cli("density --kind spinor").status, 2);
    EXPECT_EQ(run_cli("density --branch 0").status, 2);
    EXPECT_EQ(run_cli("--help").status, 0);
}

TEST(Cli, VerifyExitCodes) {
    const auto all = run_cli("verify");
    EXPECT_EQ(all.status, 0);
    EXPECT_NE(all.out.find("verification passed"), std::string::npos);
    EXPECT_NE(all.out.find("[adjudication]"), std::string::npos);

    const auto ode = run_cli("verify --suite ode");
    EXPECT_EQ(ode.status, 0);
    for (const auto& l : lines(ode.out))
        if (l.rfind("verification", 0) != 0) EXPECT_NE(l.find("[ode]"), std::string::npos) << l;

    const auto inj = run_cli("verify --suite product --inject-eq20-literal");
    EXPECT_EQ(inj.status, 1);
    EXPECT_NE(inj.out.find("FAIL"), std::string::npos);
}

TEST(Cli, SpectrumCsv) {
    const auto r = run_cli("spectrum");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(lines(r.out)[0], "n,analytic_E_plus,analytic_E_minus,fd_epsilon,analytic_epsilon,abs_diff,real_energy");
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[1][0], "3");
    EXPECT_DOUBLE_EQ(std::stod(rows[1][1]), std::sqrt(3.0));
    EXPECT_EQ(rows[1][4], "2");
    for (const auto& row : rows) EXPECT_LT(std::stod(row[5]), 1e-3);

    EXPECT_EQ(run_cli("spectrum --tol 1e-7").status, 1);
}

TEST(Cli, DeterministicOutputFiles) {
    const auto dir = std::filesystem::temp_directory_path() / "xhdirac_cli_test";
    std::filesystem::create_directories(dir);
    for (const std::string cmd : {"figure --figure 4", "density --kind pseudospin --format json", "spectrum --alpha 0.5"}) {
        const auto a = dir / "a.out", b = dir / "b.out";
        ASSERT_EQ(run_cli(cmd + " --out " + a.string()).status, 0);
        ASSERT_EQ(run_cli(cmd + " --out " + b.string()).status, 0);
        std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
        const std::string sa((std::istreambuf_iterator<char>(fa)), {}), sb((std::istreambuf_iterator<char>(fb)), {});
        EXPECT_FALSE(sa.empty());
        EXPECT_EQ(sa, sb) << cmd;
        EXPECT_EQ(sa.find('\r'), std::string::npos);
    }
    std::filesystem::remove_all(dir);
}

TEST(Cli, Figure1MatchesDensityBytes) {
    const auto fig = run_cli("figure --figure 1");
    ASSERT_EQ(fig.status, 0);
    for (int n : {2, 4, 5}) {
        const auto den = run_cli("density --n " + std::to_string(n));
        ASSERT_EQ(den.status, 0);
        std::vector<std::string> a, b;
        for (const auto& row : csv_rows(fig.out))
            if (row[0] == std::to_string(n)) a.push_back(row[1] + "," + row[2] + "," + row[3]);
        // density columns: r, F, G, rho, pole
        for (const auto& row : csv_rows(den.out)) b.push_back(row[0] + "," + row[3] + "," + row[4]);
        EXPECT_EQ(a, b) << "n=" << n;
    }
}

TEST(Cli, JsonLinesAreOneRecordPerLine) {
    const auto r = run_cli("figure --figure 3 --format json --points 101");
    ASSERT_EQ(r.status, 0);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 102u);
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
        const auto j = nlohmann::json::parse(ls[i]);
        EXPECT_EQ(j.size(), 6u);
        EXPECT_TRUE(j["U"].is_number());
    }
    EXPECT_TRUE(nlohmann::json::parse(ls.back()).contains("params"));
}

TEST(Cli, DensityMetadata) {
    const auto r = run_cli("density --rmax 6 --points 1001 --pole-window 0.2");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("# param pole_window_radius=0.20000000000000001"), std::string::npos);
    EXPECT_NE(r.out.find("# param points=1001"), std::string::npos);
    EXPECT_NE(r.out.find("# param r_max=6"), std::string::npos);
    EXPECT_EQ(csv_rows(r.out).size(), 1001u);
}
