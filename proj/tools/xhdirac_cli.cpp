// xhdirac: exceptional Hermite families, Dirac-model verification and figure data.
//
//   xhdirac polys    [--partition 1,1] [--nmax 12]
//   xhdirac verify   [--suite ode,product] [--inject-eq20-literal]
//   xhdirac spectrum [--alpha 1] [--mass 1] [--nmax 5]
//   xhdirac figure   --figure 1..6
//   xhdirac density  [--kind spin|pseudospin] [--n 3]
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <xhdirac/xhdirac.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace xhdirac;

struct Options {
    double alpha = 1.0;
    double mass = 1.0;
    int k = 1;
    int n = 3;
    std::string branch = "+";
    std::string partition = "1,1";
    double r_min = 1e-3;
    std::optional<double> r_max;
    std::size_t points = 2001;
    std::optional<int> quad_order;
    std::optional<double> tol;
    std::string out;
    std::string format = "csv";
    std::vector<std::string> suites;
    bool inject_literal_product = false;
    int figure = 0;
    std::optional<int> n_max;
    std::string kind = "spin";
    std::optional<double> pole_window;
};

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--alpha", o.alpha, "coordinate scale alpha > 0");
    sub->add_option("--mass", o.mass, "rest mass M >= 0");
    sub->add_option("--k", o.k, "spin-orbit quantum number");
    sub->add_option("--n", o.n, "quantum number n");
    sub->add_option("--branch", o.branch, "energy branch: + or -");
    sub->add_option("--partition", o.partition, "partition, e.g. 1,1");
    sub->add_option("--rmin", o.r_min, "radial grid start");
    sub->add_option("--rmax", o.r_max, "radial grid end (default 8/alpha)");
    sub->add_option("--points", o.points, "grid points")->check(CLI::Range(std::size_t{7}, std::size_t{10000000}));
    sub->add_option("--quad-order", o.quad_order, "Gauss-Hermite order")->check(CLI::Range(1, 200));
    sub->add_option("--tol", o.tol, "tolerance override");
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--nmax", o.n_max, "largest degree")->check(CLI::NonNegativeNumber);
    sub->add_option("--pole-window", o.pole_window, "exclusion radius around poles")->check(CLI::NonNegativeNumber);
}

int parse_branch(const std::string& b) {
    if (b == "+" || b == "+1" || b == "1" || b == "plus") return 1;
    if (b == "-" || b == "-1" || b == "minus") return -1;
    throw std::invalid_argument("branch must be + or -");
}

SymmetryKind parse_kind(const std::string& k) {
    if (k == "spin") return SymmetryKind::Spin;
    if (k == "pseudospin" || k == "pseudo") return SymmetryKind::PseudoSpin;
    throw std::invalid_argument("kind must be spin or pseudospin");
}

DataConfig data_config(const Options& o) {
    DataConfig c;
    c.alpha = o.alpha;
    c.mass = o.mass;
    c.k = o.k;
    c.n = o.n;
    c.branch = parse_branch(o.branch);
    c.partition = Partition::parse(o.partition);
    c.kind = parse_kind(o.kind);
    c.r_min = o.r_min;
    c.r_max = o.r_max;
    c.points = o.points;
    if (o.pole_window) c.window.radius = *o.pole_window;
    if (!(o.alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (!(o.r_min > 0.0)) throw std::invalid_argument("rmin must be positive");
    return c;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw std::invalid_argument("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void write_table(const Options& o, const Table& t) {
    Output out(o.out);
    if (o.format == "json") write_json_lines(out.stream(), t);
    else write_csv(out.stream(), t);
}

int cmd_polys(const Options& o) {
    const Partition lambda = Partition::parse(o.partition);
    const XHermiteFamily fam(lambda, o.n_max.value_or(12));
    Output out(o.out);
    auto& os = out.stream();
    if (o.format == "json") {
        os << poly_record(lambda, std::nullopt, fam.h()).dump() << '\n';
        for (int n : fam.admissible()) os << poly_record(lambda, n, fam.p(n)).dump() << '\n';
    } else {
        Table t;
        t.columns = {"partition", "n", "degree", "coeffs"};
        auto row = [&](const std::string& n, const ExactPoly& p) {
            std::string c;
            for (const auto& v : p.coeffs()) c += (c.empty() ? "" : " ") + v.str();
            t.add_row({"\"" + lambda.str() + "\"", n, static_cast<long long>(p.degree()), c});
        };
        row("", fam.h());
        for (int n : fam.admissible()) row(std::to_string(n), fam.p(n));
        t.param("n_max", fam.n_max());
        write_csv(os, t);
    }
    return 0;
}

int cmd_verify(const Options& o) {
    VerifyConfig c;
    c.alpha = o.alpha;
    c.mass = o.mass;
    c.k = o.k;
    c.r_min = o.r_min;
    c.r_max = o.r_max;
    c.points = o.points;
    c.quad_order = o.quad_order;
    if (o.tol) c.tol = *o.tol;
    c.inject_literal_product = o.inject_literal_product;
    if (o.pole_window) c.window.radius = *o.pole_window;
    for (const auto& s : o.suites) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) c.suites.insert(item);
    }
    if (!(o.alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    const VerifyReport rep = run_verification(c);
    Output out(o.out);
    print_report(out.stream(), rep);
    return rep.ok() ? 0 : 1;
}

int cmd_spectrum(const Options& o) {
    SpectrumConfig c;
    c.alpha = o.alpha;
    c.mass = o.mass;
    c.partition = Partition::parse(o.partition);
    c.n_max = o.n_max.value_or(5);
    c.points = o.points;
    if (o.tol) c.tol = *o.tol;
    if (!(o.alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    const SpectrumResult r = spectrum_table(c);
    write_table(o, r.table);
    if (!r.ok) std::cerr << "spectrum: max abs_diff " << format_double(r.max_abs_diff) << " exceeds tol " << format_double(c.tol) << '\n';
    return r.ok ? 0 : 1;
}

int cmd_figure(const Options& o) {
    if (o.figure < 1 || o.figure > figure_count) throw std::invalid_argument("figure id must be in 1..6");
    write_table(o, figure_table(o.figure, data_config(o)));
    return 0;
}

int cmd_density(const Options& o) {
    write_table(o, density_table(data_config(o)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exceptional Hermite polynomials and spin/pseudospin Dirac models"};
    app.require_subcommand(1);
    Options o;

    auto* polys = app.add_subcommand("polys", "emit H_lambda and P_n coefficient records");
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    auto* spectrum = app.add_subcommand("spectrum", "analytic and finite-difference spectrum");
    auto* figure = app.add_subcommand("figure", "figure data");
    auto* density = app.add_subcommand("density", "normalized spinor components and density");
    for (auto* s : {polys, verify, spectrum, figure, density}) add_common(s, o);
    polys->get_option("--format")->default_str("json");
    verify->add_option("--suite", o.suites, "suites to run (comma separated or repeated)");
    verify->add_flag("--inject-eq20-literal", o.inject_literal_product, "check the weighted product identity in its literal form");
    figure->add_option("--figure", o.figure, "figure id 1..6")->required();
    density->add_option("--kind", o.kind, "spin or pseudospin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (polys->parsed() && polys->count("--format") == 0) o.format = "json";

    try {
        if (polys->parsed()) return cmd_polys(o);
        if (verify->parsed()) return cmd_verify(o);
        if (spectrum->parsed()) return cmd_spectrum(o);
        if (figure->parsed()) return cmd_figure(o);
        if (density->parsed()) return cmd_density(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
