#include "esdlab/scenario.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace esdlab {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw std::invalid_argument("scenario line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& text, std::size_t line, const std::string& key) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        fail(line, "key '" + key + "': expected a number, got '" + text + "'");
    }
    if (pos != text.size()) fail(line, "key '" + key + "': trailing junk in '" + text + "'");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep)) out.push_back(trim(item));
    if (!text.empty() && text.back() == sep) out.push_back("");
    return out;
}

std::vector<std::size_t> parse_qubit_letters(const std::string& text, std::size_t n_qubits,
                                             std::size_t line, const std::string& key) {
    std::vector<std::size_t> out;
    for (const std::string& item : split(text, ',')) {
        if (item.size() != 1 || item[0] < 'a' || item[0] >= static_cast<char>('a' + n_qubits))
            fail(line, "key '" + key + "': bad qubit letter '" + item + "'");
        out.push_back(static_cast<std::size_t>(item[0] - 'a'));
    }
    return out;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    std::map<std::string, std::pair<std::string, std::size_t>> entries;  // key -> (value, line)
    static const std::set<std::string> known = {"state",  "decohere", "filter", "gamma",
                                                "kappa",  "p",        "measures", "output"};

    std::istringstream is(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, "expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!known.count(key)) fail(lineno, "unknown key '" + key + "'");
        if (entries.count(key))
            fail(lineno, "duplicate key '" + key + "' (first set on line " +
                             std::to_string(entries[key].second) + ")");
        if (value.empty()) fail(lineno, "key '" + key + "' has an empty value");
        entries[key] = {value, lineno};
    }

    if (!entries.count("state")) throw std::invalid_argument("scenario: missing required key 'state'");

    Scenario sc;
    {
        const auto& [value, line] = entries["state"];
        try {
            sc.config.state = StateId::parse(value);
        } catch (const std::exception& e) {
            fail(line, e.what());
        }
    }
    const std::size_t n = sc.config.state.n_qubits;

    if (entries.count("decohere")) {
        const auto& [value, line] = entries["decohere"];
        for (std::size_t q : parse_qubit_letters(value, n, line, "decohere")) {
            if (sc.config.decohere.count(q)) fail(line, "key 'decohere': repeated qubit");
            sc.config.decohere.insert(q);
        }
    }
    if (entries.count("filter")) {
        const auto& [value, line] = entries["filter"];
        sc.config.filter_qubits = parse_qubit_letters(value, n, line, "filter");
    }
    if (entries.count("p")) {
        const auto& [value, line] = entries["p"];
        sc.config.p = parse_double(value, line, "p");
        if (sc.config.p < 0.0 || sc.config.p > 1.0) fail(line, "key 'p': value must lie in [0, 1]");
    }
    if (entries.count("gamma")) {
        const auto& [value, line] = entries["gamma"];
        const auto parts = split(value, ':');
        if (parts.size() == 1) {
            sc.gamma.grid = {parse_double(parts[0], line, "gamma")};
        } else if (parts.size() == 3) {
            const double start = parse_double(parts[0], line, "gamma");
            const double step = parse_double(parts[1], line, "gamma");
            const double stop = parse_double(parts[2], line, "gamma");
            if (step <= 0.0) fail(line, "key 'gamma': sweep step must be positive");
            if (stop < start) fail(line, "key 'gamma': sweep stop below start");
            const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
            for (int i = 0; i < count; ++i) sc.gamma.grid.push_back(start + i * step);
            sc.gamma.is_sweep = true;
        } else {
            fail(line, "key 'gamma': expected a scalar or start:step:stop");
        }
        for (double g : sc.gamma.grid)
            if (g < 0.0 || g > 1.0) fail(line, "key 'gamma': values must lie in [0, 1]");
    } else {
        sc.gamma.grid = {0.0};
    }
    if (entries.count("kappa")) {
        const auto& [value, line] = entries["kappa"];
        if (value.rfind("solve(", 0) == 0) {
            if (value.back() != ')') fail(line, "key 'kappa': malformed solve(...)");
            const std::string inner = value.substr(6, value.size() - 7);
            const auto args = split(inner, ',');
            if (args.size() != 2) fail(line, "key 'kappa': solve needs two measure descriptors");
            sc.kappa.solve = {args[0], args[1]};
        } else {
            const double kappa = parse_double(value, line, "kappa");
            if (kappa <= 0.0 || kappa >= 1.0) fail(line, "key 'kappa': value must lie in (0, 1)");
            sc.kappa.value = kappa;
        }
        if (!entries.count("filter")) fail(line, "key 'kappa' requires a 'filter' line");
    }
    if (entries.count("measures")) {
        const auto& [value, line] = entries["measures"];
        for (const std::string& item : split(value, ',')) {
            try {
                sc.config.measures.push_back(MeasureDescriptor::parse(item, n));
            } catch (const std::exception& e) {
                fail(line, e.what());
            }
        }
    }
    if (entries.count("output")) sc.output = entries["output"].first;

    try {
        sc.config.validate();
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("scenario: ") + e.what());
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void write_csv(std::ostream& os, const std::vector<std::string>& measure_names,
               const std::vector<SweepRecord>& records) {
    os << "gamma,kappa,prob";
    for (const auto& name : measure_names) os << ',' << name;
    os << '\n';
    for (const auto& rec : records) {
        os << format_number(rec.gamma) << ',';
        if (rec.kappa) os << format_number(*rec.kappa);
        os << ',' << format_number(rec.success_prob);
        for (double v : rec.values) os << ',' << format_number(v);
        os << '\n';
    }
}

std::string format_csv(const std::vector<std::string>& measure_names,
                       const std::vector<SweepRecord>& records) {
    std::ostringstream os;
    write_csv(os, measure_names, records);
    return os.str();
}

std::vector<SweepRecord> parse_csv(const std::string& text, std::size_t n_measures) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("csv: missing header");
    std::vector<SweepRecord> out;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 3 + n_measures)
            throw std::invalid_argument("csv line " + std::to_string(lineno) + ": wrong field count");
        SweepRecord rec;
        rec.gamma = std::stod(fields[0]);
        if (!fields[1].empty()) rec.kappa = std::stod(fields[1]);
        rec.success_prob = std::stod(fields[2]);
        for (std::size_t i = 0; i < n_measures; ++i) rec.values.push_back(std::stod(fields[3 + i]));
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace esdlab
