#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "esdlab/scenario.hpp"

namespace {

using namespace esdlab;

std::string format_scalar(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

std::vector<std::string> measure_names(const ScenarioConfig& cfg) {
    std::vector<std::string> names;
    for (const auto& m : cfg.measures) names.push_back(m.text);
    return names;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << contents;
}

std::vector<double> hundredths_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i) grid.push_back(i * 0.01);
    return grid;
}

// Gamma at which an equal-concurrence solve is anchored: the scenario's
// scalar gamma, or for a sweep the first death among the two measures
// (solving at gamma = 0 would only find the trivial kappa = 1/2 root).
double solve_anchor_gamma(const Scenario& sc, const MeasureDescriptor& lhs,
                          const MeasureDescriptor& rhs) {
    if (!sc.gamma.is_sweep) return sc.gamma.grid.front();
    std::optional<double> death;
    for (const auto& m : {lhs, rhs}) {
        try {
            const auto th = find_esd_threshold(sc.config, m);
            if (th && (!death || *th < *death)) death = th;
        } catch (const std::invalid_argument&) {
            // measure already zero at gamma = 0; not a usable anchor
        }
    }
    if (!death)
        throw std::invalid_argument(
            "kappa = solve(...) needs one of the two measures to die somewhere on [0, 0.99]");
    return *death;
}

// Solid curves first (no filter), then the dashed block at the given kappa.
std::string sweep_with_and_without_filter(const ScenarioConfig& cfg,
                                          const std::vector<double>& grid, double kappa) {
    std::vector<SweepRecord> records = sweep_gamma(cfg, grid, std::nullopt);
    const std::vector<SweepRecord> filtered = sweep_gamma(cfg, grid, kappa);
    records.insert(records.end(), filtered.begin(), filtered.end());
    return format_csv(measure_names(cfg), records);
}

std::string reproduce_fig2() {
    ScenarioConfig cfg;
    cfg.state = StateId::w(3);
    cfg.decohere = {1, 2};
    cfg.filter_qubits = {0};
    for (const char* text : {"pairwise:ab", "pairwise:ac", "pairwise:bc"})
        cfg.measures.push_back(MeasureDescriptor::parse(text, 3));

    const double kappa = solve_equal_kappa(cfg, 0.41, MeasureDescriptor::parse("pairwise:ab", 3),
                                           MeasureDescriptor::parse("pairwise:bc", 3));
    return sweep_with_and_without_filter(cfg, hundredths_grid(), kappa);
}

std::string reproduce_fig5() {
    ScenarioConfig cfg;
    cfg.state = StateId::cluster4();
    cfg.decohere = {1, 2};
    cfg.filter_qubits = {0};
    for (const char* text : {"bipartite:ab|c", "bipartite:cd|b"})
        cfg.measures.push_back(MeasureDescriptor::parse(text, 4));
    return sweep_with_and_without_filter(cfg, hundredths_grid(), 0.2);
}

void emit(const std::string& csv, const std::string& path) {
    if (path.empty())
        std::cout << csv;
    else
        write_file(path, csv);
}

int run(int argc, char** argv) {
    CLI::App app{"Density-matrix study of entanglement loss under generalized amplitude "
                 "damping and its partial retrieval by local filtering"};
    app.require_subcommand(1);
    std::string out_path;

    auto* reproduce = app.add_subcommand("reproduce", "emit a preset sweep as CSV");
    std::string figure;
    reproduce->add_option("figure", figure, "preset name: fig2 or fig5")->required();
    reproduce->add_option("--out", out_path, "output path (default: stdout)");

    auto* sweep = app.add_subcommand("sweep", "run the sweep described by a scenario file");
    std::string sweep_file;
    sweep->add_option("file", sweep_file, "scenario file")->required();
    sweep->add_option("--out", out_path, "output path (overrides the scenario's output key)");

    auto* threshold = app.add_subcommand("threshold", "locate the ESD threshold of one measure");
    std::string threshold_file, threshold_measure;
    threshold->add_option("file", threshold_file, "scenario file")->required();
    threshold->add_option("--measure", threshold_measure, "measure descriptor")->required();

    auto* solve = app.add_subcommand("solve-kappa", "solve for the equal-concurrence filter");
    std::string solve_file, solve_lhs, solve_rhs;
    solve->add_option("file", solve_file, "scenario file")->required();
    solve->add_option("--lhs", solve_lhs, "left measure descriptor")->required();
    solve->add_option("--rhs", solve_rhs, "right measure descriptor")->required();

    auto* scaling = app.add_subcommand("scaling", "W-state preservation/filtering trade-off row");
    std::size_t scaling_n = 3, scaling_k = 1;
    scaling->add_option("--n", scaling_n, "total number of qubits (3..6)")->required();
    scaling->add_option("--k", scaling_k, "number of preserved qubits (1..n-2)")->required();
    scaling->add_option("--out", out_path, "output path (default: stdout)");

    auto* ghz = app.add_subcommand("ghz-check", "test whether dead GHZ cuts can be revived");
    std::size_t ghz_n = 3;
    std::optional<double> ghz_gamma;
    ghz->add_option("--n", ghz_n, "number of qubits (3..5)")->required();
    ghz->add_option("--gamma", ghz_gamma, "evaluation gamma (default: just past the first ESD)");

    CLI11_PARSE(app, argc, argv);

    if (*reproduce) {
        if (figure == "fig2")
            emit(reproduce_fig2(), out_path);
        else if (figure == "fig5")
            emit(reproduce_fig5(), out_path);
        else
            throw std::invalid_argument("reproduce: unknown preset '" + figure +
                                        "' (expected fig2 or fig5)");
        return 0;
    }

    if (*sweep) {
        const Scenario sc = load_scenario(sweep_file);
        if (sc.config.measures.empty())
            throw std::invalid_argument("sweep: the scenario lists no measures");
        std::optional<double> kappa = sc.kappa.value;
        if (sc.kappa.solve) {
            const std::size_t n = sc.config.state.n_qubits;
            const auto lhs = MeasureDescriptor::parse(sc.kappa.solve->first, n);
            const auto rhs = MeasureDescriptor::parse(sc.kappa.solve->second, n);
            kappa = solve_equal_kappa(sc.config, solve_anchor_gamma(sc, lhs, rhs), lhs, rhs);
        }
        const auto records = sweep_gamma(sc.config, sc.gamma.grid, kappa);
        const std::string csv = format_csv(measure_names(sc.config), records);
        emit(csv, out_path.empty() ? sc.output : out_path);
        return 0;
    }

    if (*threshold) {
        const Scenario sc = load_scenario(threshold_file);
        const auto measure = MeasureDescriptor::parse(threshold_measure, sc.config.state.n_qubits);
        const auto value = find_esd_threshold(sc.config, measure);
        if (value)
            std::cout << format_scalar(*value) << "\n";
        else
            std::cout << "none\n";
        return 0;
    }

    if (*solve) {
        const Scenario sc = load_scenario(solve_file);
        const std::size_t n = sc.config.state.n_qubits;
        if (sc.config.filter_qubits.empty())
            throw std::invalid_argument("solve-kappa: the scenario names no filter qubits");
        const auto lhs = MeasureDescriptor::parse(solve_lhs, n);
        const auto rhs = MeasureDescriptor::parse(solve_rhs, n);
        const double kappa = solve_equal_kappa(sc.config, solve_anchor_gamma(sc, lhs, rhs), lhs, rhs);
        std::cout << format_scalar(kappa) << "\n";
        return 0;
    }

    if (*scaling) {
        const WScalingRow row = w_scaling_row(scaling_n, scaling_k);
        std::ostringstream os;
        os << "n,k,gamma_star,kappa_star,retrieved,prob,preserved_pairwise\n"
           << row.n << ',' << row.k << ',' << format_number(row.gamma_star) << ','
           << format_number(row.kappa_star) << ',' << format_number(row.retrieved) << ','
           << format_number(row.success_prob) << ',' << format_number(row.preserved_pairwise)
           << '\n';
        emit(os.str(), out_path);
        return 0;
    }

    if (*ghz) {
        const GhzCheckResult result = ghz_retrieval_check(ghz_n, ghz_gamma);
        if (!result.applicable) {
            std::cout << "not-applicable (gamma " << format_scalar(result.gamma_eval)
                      << " is below the first ESD threshold " << format_scalar(result.gamma_star)
                      << ")\n";
            return 0;
        }
        std::cout << (result.no_retrieval ? "no-retrieval" : "retrieval-found") << " (first ESD at "
                  << format_scalar(result.gamma_star) << ", evaluated at "
                  << format_scalar(result.gamma_eval) << ")\n";
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
