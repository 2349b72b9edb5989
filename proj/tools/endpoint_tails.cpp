// endpoint_tails: tabulation and cross-route checks for the Airy2 endpoint density.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "endpoint/asymptotics.hpp"
#include "endpoint/density.hpp"
#include "endpoint/dotsenko.hpp"
#include "endpoint/errors.hpp"
#include "endpoint/fredholm.hpp"
#include "endpoint/painleve.hpp"
#include "xcheck.hpp"

namespace {

using namespace endpoint;

using Cell = std::variant<double, long long, std::string>;
using Row = std::vector<Cell>;

struct Table {
    std::vector<std::string> header;
    std::vector<Row> rows;
};

struct Config {
    std::vector<double> grid;  // MIN MAX STEP, empty for the command default
    std::vector<double> m_grid;
    int nodes = NystromOperator::kDefaultNodes;
    std::optional<double> tol;
    std::string out;
    std::string format = "csv";
    std::string method = "schehr";
    std::vector<int> only;
};

std::vector<double> expand(const std::vector<double>& g) {
    const double lo = g[0], hi = g[1], step = g[2];
    const long long n = static_cast<long long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> v(n);
    for (long long i = 0; i < n; ++i) v[i] = lo + i * step;
    return v;
}

std::vector<double> points(const std::vector<double>& g, std::vector<double> fallback) {
    return expand(g.empty() ? fallback : g);
}

// Evaluates rows in parallel; a numerical failure is re-raised with its point.
template <class F>
std::vector<Row> tabulate(const std::vector<std::string>& where, int n, F&& row) {
    std::vector<Row> rows(n);
    parallel_for(n, true, [&](int i) {
        try {
            rows[i] = row(i);
        } catch (const NumericalError& e) {
            throw NumericalError(where[i] + ": " + e.what());
        }
    });
    return rows;
}

std::vector<std::string> labels(const char* name, const std::vector<double>& v) {
    std::vector<std::string> out;
    for (double x : v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s = %.17g", name, x);
        out.emplace_back(buf);
    }
    return out;
}

Table tw1(const Config& c) {
    const auto s = points(c.grid, {-10.0, 4.0, 0.5});
    const double tol = c.tol.value_or(1e-8);
    return {{"s", "f1_fredholm", "f1_painleve", "abs_diff", "within_tol"},
            tabulate(labels("s", s), static_cast<int>(s.size()), [&](int i) {
                const double a = NystromOperator::build(s[i], c.nodes, 0.0, Precision::automatic, false).det();
                const double b = f1_painleve(s[i]);
                return Row{s[i], a, b, std::abs(a - b), static_cast<long long>(std::abs(a - b) <= tol)};
            })};
}

Table qhm(const Config& c) {
    const auto s = points(c.grid, {-10.0, 6.0, 0.5});
    return {{"s", "q", "q_prime", "v", "int_q", "ode_residual"},
            tabulate(labels("s", s), static_cast<int>(s.size()), [&](int i) {
                const PainleveSample& p = painleve_sample(s[i]);
                return Row{s[i], p.q, p.q_prime, p.v, p.int_q, p.ode_residual};
            })};
}

DensityMethod method_of(const std::string& m) {
    if (m == "mfqr") return DensityMethod::mfqr;
    if (m == "asymptotic") return DensityMethod::asymptotic;
    return DensityMethod::schehr;
}

Table density(const Config& c) {
    const auto t = points(c.grid, {0.0, 2.5, 0.25});
    Table out{{"t", "value", "method", "error_estimate"}, {}};
    for (const DensityRow& r : density_table(t, method_of(c.method)))
        out.rows.push_back(Row{r.t, r.value, c.method, r.error_estimate});
    return out;
}

Table joint(const Config& c) {
    const auto ms = points(c.m_grid, {-1.0, 1.0, 0.5});
    const auto ts = points(c.grid, {-1.0, 1.0, 0.5});
    const double tol = c.tol.value_or(1e-6);
    std::vector<std::string> where;
    for (double m : ms)
        for (double t : ts) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "m = %.17g, t = %.17g", m, t);
            where.emplace_back(buf);
        }
    const int nt = static_cast<int>(ts.size());
    return {{"m", "t", "phat_schehr", "phat_mfqr", "abs_diff", "within_tol"},
            tabulate(where, static_cast<int>(where.size()), [&](int i) {
                const double m = ms[i / nt], t = ts[i % nt];
                const double a = phat_joint(m, t), b = phat_joint_mfqr(m, t, c.nodes);
                return Row{m, t, a, b, std::abs(a - b), static_cast<long long>(std::abs(a - b) <= tol)};
            })};
}

Table tail(const Config& c) {
    const auto t = points(c.grid, {1.0, 2.5, 0.25});
    return {{"t", "tail_numeric", "tail_asymptotic", "ratio"},
            tabulate(labels("t", t), static_cast<int>(t.size()), [&](int i) {
                const double a = tail_prob(t[i]).value, b = tail_asym(t[i]).value;
                return Row{t[i], a, b, a / b};
            })};
}

Table dotsenko(const Config& c) {
    const auto x = points(c.grid, {0.0, 1.5, 0.5});
    const double tol = c.tol.value_or(1e-3);
    Table out{{"x", "W", "tail_main", "cdf_main", "abs_diff_cdf", "within_tol"}, {}};
    const auto where = labels("x", x);
    for (std::size_t i = 0; i < x.size(); ++i) {
        try {
            // w_dist parallelizes over s internally
            const double W = w_dist(x[i], c.nodes).W, tm = w_main_density(x[i]).W;
            const double d = std::abs(W - (1.0 - tm));
            out.rows.push_back(Row{x[i], W, tm, 1.0 - tm, d, static_cast<long long>(d <= tol)});
        } catch (const NumericalError& e) {
            throw NumericalError(where[i] + ": " + e.what());
        }
    }
    return out;
}

void write(const Table& t, const Config& c) {
    std::ofstream file;
    if (!c.out.empty()) {
        file.open(c.out);
        if (!file) throw DomainError("cannot open " + c.out);
    }
    std::ostream& os = c.out.empty() ? std::cout : file;
    if (c.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Row& r : t.rows) {
            nlohmann::ordered_json obj;
            for (std::size_t k = 0; k < r.size(); ++k) std::visit([&](const auto& v) { obj[t.header[k]] = v; }, r[k]);
            arr.push_back(std::move(obj));
        }
        os << arr.dump(2) << '\n';
        return;
    }
    for (std::size_t k = 0; k < t.header.size(); ++k) os << (k ? "," : "") << t.header[k];
    os << '\n';
    for (const Row& r : t.rows) {
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (k) os << ',';
            if (const double* d = std::get_if<double>(&r[k])) {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.17g", *d);
                os << buf;
            } else if (const long long* n = std::get_if<long long>(&r[k])) {
                os << *n;
            } else {
                os << std::get<std::string>(r[k]);
            }
        }
        os << '\n';
    }
}

int xcheck_run(const Config& c) {
    std::vector<int> ids = c.only;
    if (ids.empty())
        for (int i = 1; i <= xcheck::kCriteria; ++i) ids.push_back(i);
    Table t{{"criterion", "check", "measured", "bound", "pass"}, {}};
    bool all = true;
    for (int id : ids) {
        const xcheck::Report r = xcheck::run(id);
        std::cout << xcheck::format(r) << std::flush;
        all = all && r.passed();
        for (const auto& ch : r.checks)
            t.rows.push_back(Row{static_cast<long long>(id), ch.name, ch.measured, ch.bound, static_cast<long long>(ch.pass)});
    }
    if (!c.out.empty()) write(t, c);
    std::cout << (all ? "all criteria passed" : "some criteria failed") << '\n';
    return all ? 0 : 3;
}

void grid_check(const std::vector<double>& g, const char* flag) {
    if (g.empty()) return;
    if (!(g[0] < g[1])) throw CLI::ValidationError(flag, "MIN must be < MAX");
    if (!(g[2] > 0.0)) throw CLI::ValidationError(flag, "STEP must be > 0");
    if ((g[1] - g[0]) / g[2] > 1e6) throw CLI::ValidationError(flag, "more than 1e6 grid points");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Endpoint distribution of argmax(A2(u) - u^2): tabulation and cross-route checks.\n"
                 "ENDPOINT_TAILS_THREADS caps the worker pool."};
    app.require_subcommand(1);
    Config cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--grid", cfg.grid, "MIN MAX STEP")->expected(3);
        sub->add_option("--nodes", cfg.nodes, "Nystrom nodes")->check(CLI::Range(20, 512));
        sub->add_option("--tol", cfg.tol, "agreement tolerance for within_tol")
            ->check(CLI::Range(1e-13, std::numeric_limits<double>::max()));
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    };

    auto* c_tw1 = app.add_subcommand("tw1", "GOE Tracy-Widom F1 by Fredholm determinant and Painleve II");
    c_tw1->footer("columns: s, f1_fredholm, f1_painleve, abs_diff, within_tol (|diff| <= tol, default 1e-8)\n"
                  "default grid: -10 4 0.5; --nodes sets the determinant discretization");
    auto* c_qhm = app.add_subcommand("qhm", "Hastings-McLeod solution");
    c_qhm->footer("columns: s, q, q_prime, v, int_q, ode_residual\ndefault grid: -10 6 0.5");
    auto* c_den = app.add_subcommand("density", "marginal endpoint density phat(t)");
    c_den->add_option("--method", cfg.method, "schehr, mfqr or asymptotic")
        ->check(CLI::IsMember({"schehr", "mfqr", "asymptotic"}));
    c_den->footer("columns: t, value, method, error_estimate\ndefault grid: 0 2.5 0.25; |t| <= 3.96 "
                  "(|t| >= 1 for asymptotic)");
    auto* c_joint = app.add_subcommand("joint", "joint density phat(m, t) by both routes");
    c_joint->add_option("--m-grid", cfg.m_grid, "MIN MAX STEP for m")->expected(3);
    c_joint->footer("columns: m, t, phat_schehr, phat_mfqr, abs_diff, within_tol (default tol 1e-6)\n"
                    "default grids: m and t in -1 1 0.5; --grid sets t, --nodes the MFQR discretization");
    auto* c_tail = app.add_subcommand("tail", "tail probability P(|T| > t) against its expansion");
    c_tail->footer("columns: t, tail_numeric, tail_asymptotic, ratio\ndefault grid: 1 2.5 0.25; t in [1, 2.8]");
    auto* c_x = app.add_subcommand("xcheck", "run the acceptance criteria; exit 3 if any fails");
    c_x->add_option("--only", cfg.only, "criterion ids (default all)")->check(CLI::Range(1, xcheck::kCriteria));
    c_x->footer("prints PASS/FAIL per criterion with measured residuals;\n"
                "--out writes columns: criterion, check, measured, bound, pass");
    auto* c_dot = app.add_subcommand("dotsenko", "W(x) from the replica formula against the density");
    c_dot->footer("columns: x, W, tail_main (int_x^inf P), cdf_main (1 - tail_main), abs_diff_cdf, within_tol\n"
                  "default grid: 0 1.5 0.5; |x| <= 2.5; default --nodes 80 (60..512), default tol 1e-3");
    for (CLI::App* sub : {c_tw1, c_qhm, c_den, c_joint, c_tail, c_x, c_dot}) common(sub);

    try {
        app.parse(argc, argv);
        grid_check(cfg.grid, "--grid");
        grid_check(cfg.m_grid, "--m-grid");
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::Error& e) {
        app.exit(e);
        if (!app.get_subcommands().empty()) std::cerr << app.get_subcommands().front()->help();
        else std::cerr << app.help();
        return 1;
    }
    if (c_dot->parsed() && c_dot->count("--nodes") == 0) cfg.nodes = 80;

    try {
        if (c_x->parsed()) return xcheck_run(cfg);
        Table t;
        if (c_tw1->parsed()) t = tw1(cfg);
        else if (c_qhm->parsed()) t = qhm(cfg);
        else if (c_den->parsed()) t = density(cfg);
        else if (c_joint->parsed()) t = joint(cfg);
        else if (c_tail->parsed()) t = tail(cfg);
        else t = dotsenko(cfg);
        write(t, cfg);
    } catch (const DomainError& e) {
        std::cerr << "argument error: " << e.what() << '\n';
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
