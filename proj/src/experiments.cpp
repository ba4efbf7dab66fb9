#include "esdlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace esdlab {

namespace {

constexpr double kDeadThreshold = 1e-9;
constexpr double kScanEnd = 0.99;

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

std::size_t letter_index(char ch, std::size_t n_qubits, const std::string& text) {
    if (ch < 'a' || ch >= static_cast<char>('a' + n_qubits))
        throw std::invalid_argument("measure '" + text + "': qubit letter '" +
                                    std::string(1, ch) + "' is out of range for this register");
    return static_cast<std::size_t>(ch - 'a');
}

std::vector<std::size_t> letters_to_indices(const std::string& letters, std::size_t n_qubits,
                                            const std::string& text) {
    std::vector<std::size_t> out;
    for (char ch : letters) out.push_back(letter_index(ch, n_qubits, text));
    return out;
}

}  // namespace

MeasureDescriptor MeasureDescriptor::parse(const std::string& text, std::size_t n_qubits) {
    MeasureDescriptor d;
    d.text = text;
    const auto colon = text.find(':');
    require(colon != std::string::npos, "measure '" + text + "': expected kind:qubits");
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);

    if (kind == "pairwise") {
        require(rest.size() == 2, "measure '" + text + "': pairwise needs exactly two qubits");
        const std::size_t i = letter_index(rest[0], n_qubits, text);
        const std::size_t j = letter_index(rest[1], n_qubits, text);
        require(i != j, "measure '" + text + "': pairwise qubits must differ");
        d.spec = Pairwise{i, j};
        return d;
    }
    if (kind == "bipartite") {
        const auto bar = rest.find('|');
        require(bar != std::string::npos && bar > 0 && bar + 1 < rest.size(),
                "measure '" + text + "': bipartite needs qubits|qubits");
        Bipartite b;
        b.side_a = letters_to_indices(rest.substr(0, bar), n_qubits, text);
        b.side_b = letters_to_indices(rest.substr(bar + 1), n_qubits, text);
        std::vector<bool> seen(n_qubits, false);
        for (std::size_t q : b.side_a) {
            require(!seen[q], "measure '" + text + "': repeated qubit");
            seen[q] = true;
        }
        for (std::size_t q : b.side_b) {
            require(!seen[q], "measure '" + text + "': repeated qubit");
            seen[q] = true;
        }
        d.spec = std::move(b);
        return d;
    }
    throw std::invalid_argument("measure '" + text + "': unknown kind '" + kind + "'");
}

double MeasureDescriptor::evaluate(const Matrix& rho, const QubitRegister& reg) const {
    if (const auto* pw = std::get_if<Pairwise>(&spec))
        return pairwise_concurrence(rho, reg, pw->i, pw->j);
    const auto& b = std::get<Bipartite>(spec);
    BipartitionSpec part;
    part.side_a = b.side_a;
    part.side_b = b.side_b;
    std::vector<bool> named(reg.n_qubits, false);
    for (std::size_t q : b.side_a) named[q] = true;
    for (std::size_t q : b.side_b) named[q] = true;
    for (std::size_t q = 0; q < reg.n_qubits; ++q)
        if (!named[q]) part.discarded.push_back(q);
    return bipartite_concurrence(rho, reg, part);
}

void ScenarioConfig::validate() const {
    const std::size_t n = state.n_qubits;
    for (std::size_t q : decohere)
        require(q < n, "ScenarioConfig: decohering qubit out of range");
    std::vector<bool> filtered(n, false);
    for (std::size_t q : filter_qubits) {
        require(q < n, "ScenarioConfig: filter qubit out of range");
        require(!filtered[q], "ScenarioConfig: repeated filter qubit");
        filtered[q] = true;
        require(decohere.count(q) == 0,
                "ScenarioConfig: filter qubits must be disjoint from decohering qubits");
    }
    require(p >= 0.0 && p <= 1.0, "ScenarioConfig: p out of range");
}

SweepRecord run_point(const ScenarioConfig& cfg, double gamma, std::optional<double> kappa) {
    cfg.validate();
    const QubitRegister reg = cfg.reg();
    Matrix rho = density_from_pure(make_pure(cfg.state));

    if (!cfg.decohere.empty()) {
        const KrausChannel gad = gad_channel(GadParams(gamma, cfg.p));
        std::map<std::size_t, KrausChannel> assignment;
        for (std::size_t q : cfg.decohere) assignment.emplace(q, gad);
        rho = apply_channels(rho, reg, assignment).rho;
    }

    SweepRecord rec;
    rec.gamma = gamma;
    rec.kappa = kappa;
    rec.success_prob = 1.0;

    if (kappa.has_value() && !cfg.filter_qubits.empty()) {
        const KrausChannel filt = filter_channel(FilterParams(*kappa));
        std::map<std::size_t, KrausChannel> assignment;
        for (std::size_t q : cfg.filter_qubits) assignment.emplace(q, filt);
        ChannelResult filtered = apply_channels(rho, reg, assignment);
        rec.success_prob = filtered.success_prob;
        require(rec.success_prob > 0.0, "run_point: filtering annihilated the state");
        rho = (cplx{1.0 / rec.success_prob, 0.0}) * filtered.rho;
    } else {
        rec.kappa.reset();
    }

    rec.values.reserve(cfg.measures.size());
    for (const auto& m : cfg.measures) rec.values.push_back(m.evaluate(rho, reg));
    return rec;
}

std::vector<SweepRecord> sweep_gamma(const ScenarioConfig& cfg, const std::vector<double>& grid,
                                     std::optional<double> kappa) {
    for (std::size_t i = 1; i < grid.size(); ++i)
        require(grid[i] >= grid[i - 1], "sweep_gamma: grid must be monotone");
    std::vector<SweepRecord> out;
    out.reserve(grid.size());
    for (double g : grid) out.push_back(run_point(cfg, g, kappa));
    return out;
}

namespace {

double measure_at(const ScenarioConfig& cfg, const MeasureDescriptor& m, double gamma) {
    ScenarioConfig probe = cfg;
    probe.measures = {m};
    return run_point(probe, gamma, std::nullopt).values.front();
}

}  // namespace

std::optional<double> find_esd_threshold(const ScenarioConfig& cfg,
                                         const MeasureDescriptor& measure, double scan_step) {
    require(scan_step > 0.0 && scan_step <= 0.1, "find_esd_threshold: unreasonable scan step");
    require(measure_at(cfg, measure, 0.0) >= kDeadThreshold,
            "find_esd_threshold: measure '" + measure.text + "' vanishes already at gamma = 0");

    double alive = 0.0;
    std::optional<double> dead;
    const int steps = static_cast<int>(std::lround(kScanEnd / scan_step));
    for (int i = 1; i <= steps; ++i) {
        const double g = i * scan_step;
        if (measure_at(cfg, measure, g) < kDeadThreshold) {
            dead = g;
            break;
        }
        alive = g;
    }
    if (!dead) return std::nullopt;

    double lo = alive, hi = *dead;
    while (hi - lo > 1e-4) {
        const double mid = 0.5 * (lo + hi);
        if (measure_at(cfg, measure, mid) < kDeadThreshold)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

double solve_equal_kappa(const ScenarioConfig& cfg, double gamma, const MeasureDescriptor& lhs,
                         const MeasureDescriptor& rhs) {
    require(!cfg.filter_qubits.empty(), "solve_equal_kappa: scenario has no filter qubits");

    ScenarioConfig probe = cfg;
    probe.measures = {lhs, rhs};
    auto diff = [&](double kappa) {
        const SweepRecord rec = run_point(probe, gamma, kappa);
        return rec.values[0] - rec.values[1];
    };

    double lo = 0.001, hi = 0.999;
    double flo = diff(lo);
    const double fhi = diff(hi);
    require((flo < 0.0) != (fhi < 0.0),
            "solve_equal_kappa: no sign change of " + lhs.text + " - " + rhs.text +
                " on (0.001, 0.999)");
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = diff(mid);
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

WScalingRow w_scaling_row(std::size_t n, std::size_t k) {
    require(n >= 3 && n <= 6, "w_scaling_row: n must lie in 3..6");
    require(k >= 1 && k <= n - 2, "w_scaling_row: k must lie in 1..n-2");

    ScenarioConfig cfg;
    cfg.state = StateId::w(n);
    for (std::size_t q = k; q < n; ++q) cfg.decohere.insert(q);
    for (std::size_t q = 0; q < k; ++q) cfg.filter_qubits.push_back(q);

    const std::string dd = std::string(1, static_cast<char>('a' + k)) +
                           std::string(1, static_cast<char>('a' + k + 1));
    const std::string pd = "a" + std::string(1, static_cast<char>('a' + k));
    const MeasureDescriptor among_decohering = MeasureDescriptor::parse("pairwise:" + dd, n);
    const MeasureDescriptor preserved_decohering = MeasureDescriptor::parse("pairwise:" + pd, n);

    const auto threshold = find_esd_threshold(cfg, among_decohering);
    require(threshold.has_value(), "w_scaling_row: no ESD threshold found");

    WScalingRow row;
    row.n = n;
    row.k = k;
    row.gamma_star = *threshold;
    row.kappa_star = solve_equal_kappa(cfg, row.gamma_star, preserved_decohering, among_decohering);

    ScenarioConfig eval = cfg;
    eval.measures = {among_decohering};
    if (k >= 2) eval.measures.push_back(MeasureDescriptor::parse("pairwise:ab", n));
    const SweepRecord rec = run_point(eval, row.gamma_star, row.kappa_star);
    row.retrieved = rec.values[0];
    row.success_prob = rec.success_prob;
    row.preserved_pairwise = (k >= 2) ? rec.values[1] : 0.0;
    return row;
}

std::vector<WScalingRow> w_scaling_study(std::size_t n_max, std::size_t k_max) {
    require(n_max >= 3 && n_max <= 6, "w_scaling_study: n_max must lie in 3..6");
    std::vector<WScalingRow> rows;
    for (std::size_t n = 3; n <= n_max; ++n)
        for (std::size_t k = 1; k <= std::min(k_max, n - 2); ++k)
            rows.push_back(w_scaling_row(n, k));
    return rows;
}

GhzCheckResult retrieval_check(const ScenarioConfig& cfg,
                               const std::vector<MeasureDescriptor>& monitored,
                               std::optional<double> gamma) {
    require(!monitored.empty(), "retrieval_check: nothing to monitor");

    std::optional<double> first_death;
    for (const auto& m : monitored) {
        if (measure_at(cfg, m, 0.0) < kDeadThreshold) continue;  // never alive, nothing to lose
        const auto th = find_esd_threshold(cfg, m);
        if (th && (!first_death || *th < *first_death)) first_death = th;
    }
    require(first_death.has_value(), "retrieval_check: no monitored measure ever dies");

    GhzCheckResult result;
    result.gamma_star = *first_death;
    result.gamma_eval = gamma.value_or(std::min(1.0, *first_death + 0.01));
    result.applicable = result.gamma_eval >= *first_death;
    if (!result.applicable) {
        result.no_retrieval = false;  // nothing dead yet, the question does not arise
        return result;
    }

    ScenarioConfig probe = cfg;
    probe.measures = monitored;
    const SweepRecord unfiltered = run_point(probe, result.gamma_eval, std::nullopt);
    std::vector<std::size_t> dead;
    for (std::size_t i = 0; i < monitored.size(); ++i)
        if (unfiltered.values[i] < kDeadThreshold) dead.push_back(i);

    result.no_retrieval = true;
    for (int step = 1; step <= 19 && result.no_retrieval; ++step) {
        const double kappa = 0.05 * step;
        const SweepRecord rec = run_point(probe, result.gamma_eval, kappa);
        for (std::size_t i : dead) {
            if (rec.values[i] >= kDeadThreshold) {
                result.no_retrieval = false;
                break;
            }
        }
    }
    return result;
}

GhzCheckResult ghz_retrieval_check(std::size_t n, std::optional<double> gamma) {
    require(n >= 3 && n <= 5, "ghz_retrieval_check: n must lie in 3..5");

    ScenarioConfig cfg;
    cfg.state = StateId::ghz(n);
    cfg.decohere = {n - 2, n - 1};
    cfg.filter_qubits = {0};

    // Monitor every single-qubit-versus-rest cut; these are the only
    // concurrences a GHZ state has to lose.
    std::vector<MeasureDescriptor> monitored;
    for (std::size_t q = 0; q < n; ++q) {
        std::string side_a;
        for (std::size_t r = 0; r < n; ++r)
            if (r != q) side_a.push_back(static_cast<char>('a' + r));
        monitored.push_back(MeasureDescriptor::parse(
            "bipartite:" + side_a + "|" + std::string(1, static_cast<char>('a' + q)), n));
    }
    return retrieval_check(cfg, monitored, gamma);
}

std::vector<PriceEntry> cluster_price_report(double gamma, double kappa) {
    require(gamma >= 0.57 && gamma < 0.69,
            "cluster_price_report: gamma outside the retrieval window [0.57, 0.69)");

    ScenarioConfig cfg;
    cfg.state = StateId::cluster4();
    cfg.decohere = {1, 2};
    cfg.filter_qubits = {0};
    for (const char* text : {"bipartite:ab|c", "bipartite:cd|b", "bipartite:ad|b", "bipartite:ad|c"})
        cfg.measures.push_back(MeasureDescriptor::parse(text, 4));

    const SweepRecord before = run_point(cfg, gamma, std::nullopt);
    const SweepRecord after = run_point(cfg, gamma, kappa);

    std::vector<PriceEntry> out;
    for (std::size_t i = 0; i < cfg.measures.size(); ++i) {
        PriceEntry e;
        e.measure = cfg.measures[i].text;
        e.before = before.values[i];
        e.after = after.values[i];
        e.delta = e.after - e.before;
        out.push_back(std::move(e));
    }
    return out;
}

std::map<std::string, double> filtering_locality_deviation(
    const ScenarioConfig& cfg, const std::vector<double>& gamma_grid,
    const std::vector<double>& kappa_grid) {
    std::vector<bool> filtered(cfg.state.n_qubits, false);
    for (std::size_t q : cfg.filter_qubits) filtered[q] = true;

    // Only measures that discard every filter qubit are candidates.
    std::vector<MeasureDescriptor> candidates;
    for (const auto& m : cfg.measures) {
        const auto* b = std::get_if<MeasureDescriptor::Bipartite>(&m.spec);
        if (!b) continue;
        bool discards_all = true;
        for (std::size_t q : b->side_a)
            if (filtered[q]) discards_all = false;
        for (std::size_t q : b->side_b)
            if (filtered[q]) discards_all = false;
        if (discards_all) candidates.push_back(m);
    }

    ScenarioConfig probe = cfg;
    probe.measures = candidates;
    std::map<std::string, double> worst;
    for (const auto& m : candidates) worst[m.text] = 0.0;
    for (double g : gamma_grid) {
        const SweepRecord before = run_point(probe, g, std::nullopt);
        for (double kappa : kappa_grid) {
            const SweepRecord after = run_point(probe, g, kappa);
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                worst[candidates[i].text] = std::max(
                    worst[candidates[i].text], std::abs(after.values[i] - before.values[i]));
            }
        }
    }
    return worst;
}

}  // namespace esdlab
