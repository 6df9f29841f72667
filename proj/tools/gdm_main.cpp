// Command-line front end: measurement, frozen-case generation, requirement
// validation, the convergence benchmark, and the Monte-Carlo volume oracle.
// Exit codes: 0 success, 1 computation error, 2 usage/input error.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gdm/errors.hpp"
#include "gdm/geometry.hpp"
#include "gdm/measures.hpp"
#include "gdm/population_io.hpp"
#include "gdm/reference.hpp"
#include "gdm/scenarios.hpp"
#include "gdm/svg_plot.hpp"
#include "gdm/validation.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_computation = 1;
constexpr int exit_usage = 2;

double parse_real(std::string_view s, const std::string& what) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("cannot parse " + what + " '" + std::string(s) + "'");
    return v;
}

// Grammar: lo:hi[,lo:hi...], one pair per gene, decimal-point reals.
gdm::Landscape parse_bounds(const std::string& text) {
    std::vector<gdm::Interval> bounds;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string_view pair =
            std::string_view(text).substr(start, comma == std::string::npos ? std::string::npos
                                                                            : comma - start);
        const std::size_t colon = pair.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("bounds pair '" + std::string(pair) +
                                        "' is not of the form lo:hi");
        bounds.push_back({parse_real(pair.substr(0, colon), "lower bound"),
                          parse_real(pair.substr(colon + 1), "upper bound")});
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return gdm::Landscape(std::move(bounds));
}

std::vector<gdm::MeasureSpec> parse_measures(const std::string& list, int bins) {
    std::vector<gdm::MeasureSpec> specs;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = list.find(',', start);
        const std::string name =
            list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (name.empty()) throw std::invalid_argument("empty measure name in list");
        gdm::MeasureSpec spec;
        spec.kind = gdm::parse_measure_kind(name);
        if (spec.kind == gdm::MeasureKind::gfs) spec.bins = bins;
        spec.validate();
        specs.push_back(spec);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (specs.empty()) throw std::invalid_argument("measure list is empty");
    return specs;
}

nlohmann::json measure_json(const gdm::MeasureSpec& spec) {
    nlohmann::json params = nlohmann::json::object();
    if (spec.kind == gdm::MeasureKind::gfs) params["bins"] = spec.bins;
    return {{"measure", gdm::to_string(spec.kind)}, {"params", std::move(params)}};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

std::string format17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------- measure --

struct MeasureArgs {
    std::string in_path, bounds, measures = "dpw,gfs,dl,dmst";
    int bins = 100;
};

int cmd_measure(const MeasureArgs& args) {
    std::optional<gdm::Population> pop;
    std::vector<gdm::MeasureSpec> specs;
    try {
        const gdm::Landscape landscape = parse_bounds(args.bounds);
        specs = parse_measures(args.measures, args.bins);
        pop = gdm::load_population(args.in_path, landscape);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    try {
        for (const auto& spec : specs) {
            nlohmann::json record = measure_json(spec);
            record["value"] = gdm::measures::evaluate(spec, *pop);
            std::cout << record.dump() << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_computation;
    }
    return exit_ok;
}

// ------------------------------------------------------------------ cases --

struct CasesArgs {
    int case_id = 1;
    int optima = 2;
    int population_size = 100;
    std::string bounds = "-1:1,-1:1";
    std::string out_path;
};

int cmd_cases(const CasesArgs& args) {
    std::string csv;
    try {
        const gdm::Landscape landscape = parse_bounds(args.bounds);
        const auto pop = gdm::scenarios::frozen_case(
            {args.case_id, args.optima, args.population_size, landscape});
        csv = gdm::population_csv(pop);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    try {
        if (args.out_path.empty())
            std::cout << csv;
        else
            write_file(args.out_path, csv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_computation;
    }
    return exit_ok;
}

// --------------------------------------------------------------- validate --

struct ValidateArgs {
    std::string measures;
    int bins = 100;
    double tol = 1e-9;
    int resolution = 201;
    std::string format = "text";
    std::string out_dir;
    std::string plot_path;
};

int cmd_validate(const ValidateArgs& args) {
    std::vector<gdm::MeasureSpec> specs;
    try {
        specs = parse_measures(args.measures, args.bins);
        if (args.format != "text" && args.format != "json")
            throw std::invalid_argument("--format must be text or json");
        if (args.resolution < 3 || args.resolution % 2 == 0)
            throw std::invalid_argument("--resolution must be odd and >= 3");
        if (args.tol < 0.0) throw std::invalid_argument("--tol must be non-negative");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        const auto report = gdm::validation::validation_report(specs, args.tol, args.resolution);
        std::cout << (args.format == "json" ? gdm::validation::report_json(report)
                                            : gdm::validation::report_text(report));

        if (!args.out_dir.empty()) {
            namespace fs = std::filesystem;
            fs::create_directories(args.out_dir);
            const fs::path dir(args.out_dir);
            write_file((dir / "report.txt").string(), gdm::validation::report_text(report));
            write_file((dir / "report.json").string(), gdm::validation::report_json(report));
            std::vector<gdm::validation::CaseValueGrid> grids;
            for (const auto& mv : report.measures) grids.push_back(mv.grid);
            write_file((dir / "case_grid.csv").string(), gdm::validation::case_grid_csv(grids));
            for (const auto& mv : report.measures)
                write_file((dir / ("sweep_" + gdm::to_string(mv.measure.kind) + ".csv")).string(),
                           gdm::validation::sweep_csv(mv.sweep));
        }
        if (!args.plot_path.empty()) {
            std::vector<gdm::svg::Panel> panels;
            for (const auto& mv : report.measures) {
                gdm::svg::Panel panel;
                panel.title = gdm::to_string(mv.measure.kind) + " over the reduced arrangement";
                panel.x_label = "x5_hat";
                panel.y_label = "diversity";
                panel.series.push_back({"P5", mv.sweep.x5_hat, mv.sweep.d_p5, false});
                panel.series.push_back(
                    {"P4", {0.0, 1.0}, {mv.sweep.d_p4, mv.sweep.d_p4}, true});
                panels.push_back(std::move(panel));
            }
            write_file(args.plot_path, gdm::svg::render_line_chart(panels));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_computation;
    }
    return exit_ok;
}

// ------------------------------------------------------------------ bench --

struct BenchArgs {
    int optima = 2;
    int population_size = 100;
    int iterations = 51;
    int repetitions = 50;
    std::uint64_t seed = 1;
    std::string bounds = "0:1,0:1";
    std::string measures = "dpw,gfs";
    int bins = 100;
    std::string trace_path, aggregate_path, plot_path;
};

int cmd_bench(const BenchArgs& args) {
    std::optional<gdm::scenarios::BenchmarkConfig> config;
    std::vector<gdm::MeasureSpec> specs;
    try {
        specs = parse_measures(args.measures, args.bins);
        config = gdm::scenarios::BenchmarkConfig{args.optima,      args.population_size,
                                                 parse_bounds(args.bounds), args.iterations,
                                                 args.repetitions, args.seed};
        config->validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        const auto results = gdm::scenarios::benchmark_run(*config, specs);

        for (const auto& series : results) {
            nlohmann::json record = measure_json(series.measure);
            record["final_mean_normalized"] = series.mean_normalized.back();
            std::cout << record.dump() << "\n";
        }

        if (!args.trace_path.empty()) {
            std::ostringstream csv;
            csv << "measure,repetition,iteration,raw,normalized\n";
            for (const auto& series : results)
                for (std::size_t r = 0; r < series.repetitions.size(); ++r) {
                    const auto& rep = series.repetitions[r];
                    for (std::size_t t = 0; t < rep.raw.size(); ++t)
                        csv << gdm::to_string(series.measure.kind) << ',' << r << ',' << t << ','
                            << format17(rep.raw[t]) << ',' << format17(rep.normalized[t]) << '\n';
                }
            write_file(args.trace_path, csv.str());
        }
        if (!args.aggregate_path.empty()) {
            std::ostringstream csv;
            csv << "measure,iteration,mean_normalized,std_normalized\n";
            for (const auto& series : results)
                for (std::size_t t = 0; t < series.mean_normalized.size(); ++t)
                    csv << gdm::to_string(series.measure.kind) << ',' << t << ','
                        << format17(series.mean_normalized[t]) << ','
                        << format17(series.std_normalized[t]) << '\n';
            write_file(args.aggregate_path, csv.str());
        }
        if (!args.plot_path.empty()) {
            gdm::svg::Panel panel;
            panel.title = "mean normalized diversity across repetitions";
            panel.x_label = "iteration";
            panel.y_label = "normalized diversity";
            for (const auto& series : results) {
                gdm::svg::Series s;
                s.name = gdm::to_string(series.measure.kind);
                for (std::size_t t = 0; t < series.mean_normalized.size(); ++t) {
                    s.x.push_back(static_cast<double>(t));
                    s.y.push_back(series.mean_normalized[t]);
                }
                panel.series.push_back(std::move(s));
            }
            write_file(args.plot_path, gdm::svg::render_line_chart({&panel, 1}));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_computation;
    }
    return exit_ok;
}

// ----------------------------------------------------------------- oracle --

struct OracleArgs {
    std::string in_path, bounds;
    std::int64_t samples = 1000000;
    std::uint64_t seed = 1;
};

int cmd_oracle(const OracleArgs& args) {
    std::optional<gdm::Population> pop;
    try {
        const gdm::Landscape landscape = parse_bounds(args.bounds);
        pop = gdm::load_population(args.in_path, landscape);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        const int n = pop->dimension();
        const double side = std::pow(pop->landscape().volume() / pop->size(), 1.0 / n);
        const gdm::geometry::HypercubeSet cubes(pop->data(), n, side);
        const double exact = gdm::geometry::union_volume(cubes);
        const auto mc = gdm::geometry::mc_union_volume(cubes, args.samples, args.seed);
        const double diff = std::abs(exact - mc.estimate);

        nlohmann::json record = {{"side", side},
                                 {"exact", exact},
                                 {"estimate", mc.estimate},
                                 {"std_error", mc.std_error},
                                 {"samples", mc.samples}};
        record["z"] = mc.std_error > 0.0 ? diff / mc.std_error : (diff == 0.0 ? 0.0 : -1.0);
        std::cout << record.dump() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_computation;
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"genotypic diversity measures for real-coded populations"};
    app.require_subcommand(1);

    MeasureArgs measure_args;
    auto* measure = app.add_subcommand("measure", "evaluate measures on a population CSV");
    measure->add_option("--in", measure_args.in_path, "population CSV path")->required();
    measure->add_option("--bounds", measure_args.bounds, "landscape bounds lo:hi[,lo:hi...]")
        ->required();
    measure->add_option("--measures", measure_args.measures,
                        "comma-separated list of dpw,gfs,dl,dmst");
    measure->add_option("--bins", measure_args.bins, "bin count for gfs (default 100)");

    CasesArgs cases_args;
    auto* cases = app.add_subcommand("cases", "emit a frozen-case population CSV");
    cases->add_option("--case", cases_args.case_id, "case id 1..7")->required();
    cases->add_option("--optima", cases_args.optima, "2 or 4 (cases 2-5)");
    cases->add_option("--n", cases_args.population_size, "population size (default 100)");
    cases->add_option("--bounds", cases_args.bounds, "landscape bounds (default -1:1,-1:1)");
    cases->add_option("--out", cases_args.out_path, "output path (default stdout)");

    ValidateArgs validate_args;
    auto* validate = app.add_subcommand("validate", "run both validation frameworks");
    validate->add_option("--measures", validate_args.measures, "measures to validate")
        ->required();
    validate->add_option("--tol", validate_args.tol, "comparison tolerance (default 1e-9)");
    validate->add_option("--resolution", validate_args.resolution,
                         "sweep grid size, odd (default 201)");
    validate->add_option("--format", validate_args.format, "text or json");
    validate->add_option("--out-dir", validate_args.out_dir,
                         "directory for report/grid/sweep files");
    validate->add_option("--plot", validate_args.plot_path, "write sweep curves as SVG");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "run the shrinking-hyperspace benchmark");
    bench->add_option("--optima", bench_args.optima, "convergence sites (default 2)");
    bench->add_option("--n", bench_args.population_size, "population size (default 100)");
    bench->add_option("--iters", bench_args.iterations, "iterations (default 51)");
    bench->add_option("--reps", bench_args.repetitions, "repetitions (default 50)");
    bench->add_option("--seed", bench_args.seed, "RNG seed (default 1)");
    bench->add_option("--bounds", bench_args.bounds, "landscape bounds (default 0:1,0:1)");
    bench->add_option("--measures", bench_args.measures, "measures to track (default dpw,gfs)");
    bench->add_option("--bins", bench_args.bins, "bin count for gfs (default 100)");
    bench->add_option("--trace", bench_args.trace_path, "per-repetition trace CSV path");
    bench->add_option("--aggregate", bench_args.aggregate_path, "aggregate CSV path");
    bench->add_option("--plot", bench_args.plot_path, "mean-history SVG path");

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle",
                                      "cross-check the exact union volume against Monte Carlo");
    oracle->add_option("--in", oracle_args.in_path, "population CSV path")->required();
    oracle->add_option("--bounds", oracle_args.bounds, "landscape bounds")->required();
    oracle->add_option("--samples", oracle_args.samples, "Monte Carlo samples (default 10^6)")
        ->check(CLI::PositiveNumber);
    oracle->add_option("--seed", oracle_args.seed, "RNG seed (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (measure->parsed()) return cmd_measure(measure_args);
    if (cases->parsed()) return cmd_cases(cases_args);
    if (validate->parsed()) return cmd_validate(validate_args);
    if (bench->parsed()) return cmd_bench(bench_args);
    if (oracle->parsed()) return cmd_oracle(oracle_args);
    return exit_usage;
}
