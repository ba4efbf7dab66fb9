#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "esdlab/experiments.hpp"

namespace esdlab {

// A gamma specification from a scenario file: a scalar or start:step:stop.
struct GammaSpec {
    std::vector<double> grid;  // one entry for a scalar
    bool is_sweep = false;
};

// kappa = <scalar> or kappa = solve(<lhs>,<rhs>)
struct KappaSpec {
    std::optional<double> value;
    std::optional<std::pair<std::string, std::string>> solve;
};

// Parsed scenario file: line-oriented `key = value`, '#' comments, duplicate
// or unknown keys rejected. Keys: state, decohere, filter, gamma, kappa, p,
// measures, output.
struct Scenario {
    ScenarioConfig config;
    GammaSpec gamma;
    KappaSpec kappa;
    std::string output;  // path from the file, may be empty
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

// CSV contract: single header row "gamma,kappa,prob,<descriptors...>", comma
// separator, '.' decimal point, '\n' line ends, 12 significant digits, empty
// kappa field when no filtering was applied.
void write_csv(std::ostream& os, const std::vector<std::string>& measure_names,
               const std::vector<SweepRecord>& records);
std::string format_csv(const std::vector<std::string>& measure_names,
                       const std::vector<SweepRecord>& records);
std::vector<SweepRecord> parse_csv(const std::string& text, std::size_t n_measures);

// 12 significant digits, the fixed numeric form used in CSV output.
std::string format_number(double value);

}  // namespace esdlab
