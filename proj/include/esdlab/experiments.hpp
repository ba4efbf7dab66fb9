#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "esdlab/channels.hpp"
#include "esdlab/measures.hpp"
#include "esdlab/states.hpp"

namespace esdlab {

// A measure requested by descriptor string: "pairwise:ab" or
// "bipartite:ab|c". Letters a, b, c, ... name register qubits 0, 1, 2, ...
// For bipartite measures, qubits not named on either side are discarded.
struct MeasureDescriptor {
    struct Pairwise {
        std::size_t i, j;
    };
    struct Bipartite {
        std::vector<std::size_t> side_a, side_b;
    };
    std::variant<Pairwise, Bipartite> spec;
    std::string text;

    static MeasureDescriptor parse(const std::string& text, std::size_t n_qubits);
    double evaluate(const Matrix& rho, const QubitRegister& reg) const;
};

struct ScenarioConfig {
    StateId state = StateId::w(3);
    std::set<std::size_t> decohere;
    double p = 0.5;
    std::vector<std::size_t> filter_qubits;
    std::vector<MeasureDescriptor> measures;

    QubitRegister reg() const { return QubitRegister(state.n_qubits); }
    void validate() const;
};

struct SweepRecord {
    double gamma = 0.0;
    std::optional<double> kappa;
    double success_prob = 1.0;
    std::vector<double> values;  // one per configured measure, in order
};

// GAD(gamma) on every decohering qubit, then (optionally) the filter on every
// filter qubit. Measures are evaluated on the normalized post-filter state;
// success_prob reports the filter trace separately.
SweepRecord run_point(const ScenarioConfig& cfg, double gamma, std::optional<double> kappa);

std::vector<SweepRecord> sweep_gamma(const ScenarioConfig& cfg,
                                     const std::vector<double>& grid,
                                     std::optional<double> kappa);

// Smallest gamma at which the measure first reaches zero (reported-as-zero
// threshold 1e-9): coarse scan, then bisection to an interval below 1e-4.
// nullopt when the measure stays positive on [0, 0.99]. The measure must be
// positive at gamma = 0. The result is scan-step independent to within the
// bisection width.
std::optional<double> find_esd_threshold(const ScenarioConfig& cfg,
                                         const MeasureDescriptor& measure,
                                         double scan_step = 0.01);

// Root of value(lhs) - value(rhs) in kappa over (0.001, 0.999), bisected to
// 1e-6. Requires a sign change across the interval.
double solve_equal_kappa(const ScenarioConfig& cfg, double gamma,
                         const MeasureDescriptor& lhs, const MeasureDescriptor& rhs);

struct WScalingRow {
    std::size_t n = 0;
    std::size_t k = 0;
    double gamma_star = 0.0;          // ESD threshold of the decohering pair
    double kappa_star = 0.0;          // equal-concurrence filter strength
    double retrieved = 0.0;           // common concurrence at kappa_star
    double success_prob = 0.0;
    double preserved_pairwise = 0.0;  // concurrence among preserved qubits (k >= 2)
};

// W_N with qubits 0..k-1 preserved and filtered, the rest decohering at that
// configuration's own ESD threshold; one kappa shared by all k filters.
WScalingRow w_scaling_row(std::size_t n, std::size_t k);
std::vector<WScalingRow> w_scaling_study(std::size_t n_max, std::size_t k_max);

struct GhzCheckResult {
    double gamma_star = 0.0;   // earliest ESD among the monitored cuts
    double gamma_eval = 0.0;
    bool applicable = false;   // false when gamma_eval sits below gamma_star
    bool no_retrieval = false; // true when every dead cut stays dead on the kappa grid
};

// GHZ_N with GAD on the last two qubits, filter on qubit 0. Monitored
// measures are the single-qubit-versus-rest bipartite concurrences; the ones
// ESD has killed at gamma_eval must stay below 1e-9 for every kappa in
// {0.05, 0.10, ..., 0.95} for the check to report no retrieval.
GhzCheckResult ghz_retrieval_check(std::size_t n, std::optional<double> gamma = std::nullopt);

// Same sweep for any scenario: which of the monitored measures are dead at
// gamma_eval, and does any kappa on the grid revive one.
GhzCheckResult retrieval_check(const ScenarioConfig& cfg,
                               const std::vector<MeasureDescriptor>& monitored,
                               std::optional<double> gamma);

struct PriceEntry {
    std::string measure;
    double before = 0.0;
    double after = 0.0;
    double delta = 0.0;
};

// Cluster state, GAD on {b, c}, filter on a at the given kappa. Reports
// BC_ab|c, BC_cd|b, BC_ad|b, BC_ad|c before and after the filtering. gamma
// must lie in the retrieval window [0.57, 0.69).
std::vector<PriceEntry> cluster_price_report(double gamma, double kappa);

// Pointwise check of the filtering-locality claim: for measures whose
// bipartition discards every filter qubit, |after - before| over the given
// grid. Returns the worst deviation per measure.
std::map<std::string, double> filtering_locality_deviation(
    const ScenarioConfig& cfg, const std::vector<double>& gamma_grid,
    const std::vector<double>& kappa_grid);

}  // namespace esdlab
