// Command-line front end: one subcommand per library operation.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "rooks/asymptotics.hpp"
#include "rooks/combinatorics.hpp"
#include "rooks/json_io.hpp"
#include "rooks/partition.hpp"
#include "rooks/random.hpp"
#include "rooks/verify.hpp"
#include "rooks/xray.hpp"

using namespace rooks;

namespace {

constexpr const char* kVersion = "rooks 1.0.0 (formula map 1)";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    int threads = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::string format;
};

std::string number(double x) {
    std::ostringstream s;
    s << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
    return s.str();
}

class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

json base_config(const std::string& command, const Globals& g) {
    return {{"command", command}, {"seed", g.seed}, {"threads", g.threads}, {"format", g.format}, {"out", g.out}};
}

std::string format_or(const Globals& g, const std::string& fallback) { return g.format.empty() ? fallback : g.format; }

void write_csv_config(std::ostream& os, const json& config) { os << "# config " << config.dump() << '\n'; }

Partition parse_shape(const std::string& text) {
    try {
        return Partition::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad --shape: ") + e.what());
    }
}

std::vector<double> parse_eps(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw UsageError("bad --eps entry: " + item);
        }
    }
    return out;
}

CombinatorialFn parse_fn(const std::string& text, std::int64_t k) {
    try {
        return combinatorial_fn_from_json(json::parse(text), k);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad --fn: ") + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rook placement counts, asymptotic coefficients and X-ray experiments"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Globals g;
    app.add_option("--threads", g.threads, "worker threads for Monte Carlo subcommands (0 = runtime default)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", g.seed, "random seed")->capture_default_str();
    app.add_option("--out", g.out, "output file (default stdout)");
    app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    std::string shape;
    std::int64_t k = 0, m = 1, n_size = 0, count = 1000, grid = 401;
    std::size_t samples = 200;
    std::string fn, filter = "all", eps_text = "0.05", suite = "all", n_list;
    bool log_count = false;

    auto* count_cmd = app.add_subcommand("count", "number of rook placements of a shape");
    count_cmd->add_option("--shape", shape, "partition, e.g. 4,3,3,2")->required();
    count_cmd->add_option("--m", m, "dilation factor")->check(CLI::PositiveNumber);
    count_cmd->add_flag("--log", log_count, "print the natural log instead");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "members of the combinatorial class on the 1/k grid");
    enumerate_cmd->add_option("--k", k, "grid size")->required()->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("--filter", filter, "subfamily")
        ->check(CLI::IsMember({"all", "constant", "continuous", "motzkin", "schroder"}));

    auto* coeffs_cmd = app.add_subcommand("coeffs", "asymptotic coefficients B and D of a function");
    coeffs_cmd->add_option("--k", k, "grid size")->required()->check(CLI::PositiveNumber);
    coeffs_cmd->add_option("--fn", fn, R"(JSON {"values":[...],"slopes":[...]})")->required();

    auto* residual_cmd = app.add_subcommand("residual", "asymptotic residual along a list of N");
    residual_cmd->add_option("--k", k, "grid size")->required()->check(CLI::PositiveNumber);
    residual_cmd->add_option("--fn", fn, "function JSON")->required();
    residual_cmd->add_option("--n", n_list, "comma-separated N (default k*2^j, j = 0..10)");

    auto* sample_cmd = app.add_subcommand("sample", "uniform rook placements");
    sample_cmd->add_option("--shape", shape, "partition in D_n")->required();
    sample_cmd->add_option("--count", count, "number of placements")->check(CLI::PositiveNumber);

    auto* marginals_cmd = app.add_subcommand("marginals", "exact marginal probabilities");
    marginals_cmd->add_option("--shape", shape, "partition in D_n")->required();

    auto* xray_cmd = app.add_subcommand("xray", "limit-shape Monte Carlo experiment");
    xray_cmd->add_option("--shape", shape, "base partition")->default_val("1");
    xray_cmd->add_option("--n", n_size, "dilation factor N")->required()->check(CLI::PositiveNumber);
    xray_cmd->add_option("--samples", samples, "number of samples")->capture_default_str();
    xray_cmd->add_option("--eps", eps_text, "comma-separated thresholds")->capture_default_str();

    auto* limit_cmd = app.add_subcommand("limit-shape", "exact limit-shape curve");
    limit_cmd->add_option("--shape", shape, "partition in D_n")->required();
    limit_cmd->add_option("--grid", grid, "number of grid points on [0,2]")->capture_default_str()->check(
        CLI::Range(2, 100001));

    auto* verify_cmd = app.add_subcommand("verify", "run acceptance criteria");
    verify_cmd->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_names()));

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (g.threads > 0) omp_set_num_threads(g.threads);

    try {
        if (count_cmd->parsed()) {
            const auto lambda = parse_shape(shape);
            if (!in_B_n(lambda)) throw UsageError("shape must have n parts with largest part n");
            const auto target = m == 1 ? lambda : dilate(lambda, m);
            json config = base_config("count", g);
            config["shape"] = shape;
            config["m"] = m;
            config["log"] = log_count;
            const BigInt exact = count_rook_placements_dilated(lambda, m);
            const std::string value = log_count ? number(log_count_rook_placements(target)) : exact.get_str();
            Sink sink(g.out);
            auto& os = sink.stream();
            if (g.format == "json")
                os << json{{"config", config}, {log_count ? "log_count" : "count", value}}.dump() << '\n';
            else if (g.format == "csv")
                write_csv_config(os, config), os << (log_count ? "log_count" : "count") << '\n' << value << '\n';
            else
                os << value << '\n';
            return 0;
        }
        if (enumerate_cmd->parsed()) {
            json config = base_config("enumerate", g);
            config["k"] = k;
            config["filter"] = filter;
            const std::string format = format_or(g, "json");
            Sink sink(g.out);
            auto& os = sink.stream();
            if (format == "json")
                os << json{{"config", config}}.dump() << '\n';
            else
                write_csv_config(os, config), os << "values,slopes,tuple,piecewise_constant,continuous,motzkin,schroder\n";
            auto join = [](const std::vector<std::int64_t>& xs) {
                std::string s;
                for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
                return s;
            };
            for_each_combinatorial_fn(k, [&](const CombinatorialFn& f) {
                const auto c = classify(f);
                const bool keep = filter == "all" || (filter == "constant" && c.piecewise_constant) ||
                                  (filter == "continuous" && c.continuous) || (filter == "motzkin" && c.motzkin) ||
                                  (filter == "schroder" && c.schroder);
                if (!keep) return;
                const std::vector<std::int64_t> tuple = k >= 2 ? to_tuple(f).y : std::vector<std::int64_t>{};
                if (format == "json")
                    os << json{{"values", f.values()}, {"slopes", f.slopes()}, {"tuple", tuple}, {"classes", to_json(c)}}
                              .dump()
                       << '\n';
                else
                    os << join(f.values()) << ',' << join(f.slopes()) << ',' << join(tuple) << ','
                       << c.piecewise_constant << ',' << c.continuous << ',' << c.motzkin << ',' << c.schroder << '\n';
            });
            return 0;
        }
        if (coeffs_cmd->parsed()) {
            const auto f = parse_fn(fn, k);
            json config = base_config("coeffs", g);
            config["k"] = k;
            config["fn"] = json::parse(fn);
            const auto c = coefficients(f);
            Sink sink(g.out);
            sink.stream() << json{{"config", config},
                                  {"k", k},
                                  {"fn", to_json(f)},
                                  {"B", c.B},
                                  {"D", *c.D},
                                  {"D_integral", coefficient_D_integral(f)}}
                                 .dump()
                          << '\n';
            return 0;
        }
        if (residual_cmd->parsed()) {
            const auto f = parse_fn(fn, k);
            std::vector<std::int64_t> Ns;
            if (n_list.empty()) {
                for (int j = 0; j <= 10; ++j) Ns.push_back(k << j);
            } else {
                std::stringstream ss(n_list);
                std::string item;
                while (std::getline(ss, item, ',')) Ns.push_back(std::stoll(item));
            }
            json config = base_config("residual", g);
            config["k"] = k;
            config["fn"] = json::parse(fn);
            config["n"] = Ns;
            const std::string format = format_or(g, "json");
            Sink sink(g.out);
            auto& os = sink.stream();
            json rows = json::array();
            if (format == "csv") write_csv_config(os, config), os << "N,residual,N_times_residual\n";
            for (auto N : Ns) {
                if (N % k != 0) throw UsageError("every N must be a multiple of k");
                const double r = asymptotic_residual(f, N);
                if (format == "csv")
                    os << N << ',' << number(r) << ',' << number(r * static_cast<double>(N)) << '\n';
                else
                    rows.push_back({{"N", N}, {"residual", r}});
            }
            if (format == "json") os << json{{"config", config}, {"residuals", rows}}.dump() << '\n';
            return 0;
        }
        if (sample_cmd->parsed()) {
            const auto lambda = parse_shape(shape);
            if (!in_B_n(lambda) || !in_D_n(lambda)) throw UsageError("shape must lie in D_n");
            json config = base_config("sample", g);
            config["shape"] = shape;
            config["count"] = count;
            const std::string format = format_or(g, "csv");
            Sink sink(g.out);
            auto& os = sink.stream();
            RandomSource rng(g.seed);
            if (format == "csv") {
                write_csv_config(os, config);
                for (std::int64_t s = 0; s < count; ++s) {
                    const auto p = sample_rook_placement(lambda, rng);
                    for (std::size_t r = 0; r < p.cols.size(); ++r) os << (r ? "," : "") << p.cols[r];
                    os << '\n';
                }
            } else {
                json rows = json::array();
                for (std::int64_t s = 0; s < count; ++s) rows.push_back(sample_rook_placement(lambda, rng).cols);
                os << json{{"config", config}, {"placements", rows}}.dump() << '\n';
            }
            return 0;
        }
        if (marginals_cmd->parsed()) {
            const auto lambda = parse_shape(shape);
            if (!in_B_n(lambda) || !in_D_n(lambda)) throw UsageError("shape must lie in D_n");
            json config = base_config("marginals", g);
            config["shape"] = shape;
            const auto matrix = marginal_matrix(lambda);
            Sink sink(g.out);
            auto& os = sink.stream();
            if (g.format == "csv") {
                write_csv_config(os, config);
                for (std::size_t i = 1; i <= matrix.n; ++i)
                    for (std::size_t j = 1; j <= matrix.n; ++j)
                        os << format_rational(matrix.at(i, j)) << (j == matrix.n ? "\n" : ",");
            } else {
                os << json{{"config", config}, {"shape", lambda.parts()}, {"matrix", to_json(matrix)}}.dump() << '\n';
            }
            return 0;
        }
        if (xray_cmd->parsed()) {
            const auto lambda = parse_shape(shape);
            if (!in_B_n(lambda) || !in_D_n(lambda)) throw UsageError("shape must lie in D_n");
            const auto eps = parse_eps(eps_text);
            json config = base_config("xray", g);
            config["shape"] = shape;
            config["n"] = n_size;
            config["samples"] = samples;
            config["eps"] = eps;
            const auto stats = limit_shape_experiment(lambda, n_size, samples, g.seed, eps);
            {
                Sink sink(g.out);
                auto& os = sink.stream();
                write_csv_config(os, config);
                os << "sample_id,sup_deviation\n";
                for (std::size_t s = 0; s < stats.deviations.size(); ++s)
                    os << s << ',' << number(stats.deviations[s]) << '\n';
            }
            if (!g.out.empty()) {
                json fractions = json::object();
                for (std::size_t e = 0; e < eps.size(); ++e) fractions[number(eps[e])] = stats.fraction_below[e];
                std::cout << json{{"config", config},
                                  {"max", stats.max},
                                  {"mean", stats.mean},
                                  {"median", stats.median},
                                  {"q05", stats.q05},
                                  {"q25", stats.q25},
                                  {"q75", stats.q75},
                                  {"q95", stats.q95},
                                  {"fraction_below", fractions}}
                                 .dump()
                          << '\n';
            }
            return 0;
        }
        if (limit_cmd->parsed()) {
            const auto lambda = parse_shape(shape);
            if (!in_B_n(lambda) || !in_D_n(lambda)) throw UsageError("shape must lie in D_n");
            json config = base_config("limit-shape", g);
            config["shape"] = shape;
            config["grid"] = grid;
            Sink sink(g.out);
            auto& os = sink.stream();
            write_csv_config(os, config);
            os << "t,m,m_float\n";
            for (const auto& p : limit_shape_curve(lambda, static_cast<std::size_t>(grid)))
                os << format_rational(p.t) << ',' << format_rational(p.m) << ',' << number(p.m.get_d()) << '\n';
            return 0;
        }
        if (verify_cmd->parsed()) {
            json config = base_config("verify", g);
            config["suite"] = suite;
            const auto results = run_suite(suite, VerifyOptions{g.seed});
            bool ok = true;
            Sink sink(g.out);
            auto& os = sink.stream();
            if (g.format == "json") {
                json rows = json::array();
                for (const auto& r : results) {
                    ok = ok && r.passed;
                    rows.push_back({{"id", r.id},
                                    {"name", r.name},
                                    {"passed", r.passed},
                                    {"seconds", r.seconds},
                                    {"budget_seconds", r.budget_seconds},
                                    {"detail", r.detail}});
                }
                os << json{{"config", config}, {"results", rows}, {"passed", ok}}.dump(2) << '\n';
            } else {
                os << "# config " << config.dump() << '\n';
                for (const auto& r : results) {
                    ok = ok && r.passed;
                    os << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << std::fixed
                       << std::setprecision(2) << r.seconds << " s of " << r.budget_seconds << " s)\n"
                       << std::defaultfloat;
                    std::istringstream lines(r.detail);
                    for (std::string line; std::getline(lines, line);) os << "    " << line << '\n';
                }
            }
            return ok ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
