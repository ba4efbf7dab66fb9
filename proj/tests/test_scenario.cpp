#include <string>

#include "doctest.h"
#include "esdlab/scenario.hpp"

using namespace esdlab;

TEST_CASE("parse_scenario accepts a well-formed sweep") {
    const Scenario sc = parse_scenario(
        "# W state sweep\n"
        "state = w:3\n"
        "decohere = b,c\n"
        "gamma = 0:0.01:1\n"
        "measures = pairwise:ab,pairwise:bc\n");
    CHECK(sc.config.state.to_string() == "w:3");
    CHECK(sc.config.decohere == std::set<std::size_t>{1, 2});
    CHECK(sc.gamma.is_sweep);
    CHECK(sc.gamma.grid.size() == 101);
    CHECK(sc.gamma.grid.front() == 0.0);
    CHECK(sc.gamma.grid.back() == doctest::Approx(1.0));
    CHECK(sc.config.measures.size() == 2);
}

TEST_CASE("parse_scenario accepts the cluster preset") {
    const Scenario sc = parse_scenario(
        "state = cluster4\n"
        "decohere = b,c\n"
        "filter = a\n"
        "kappa = 0.2\n"
        "measures = bipartite:ab|c,bipartite:cd|b\n");
    CHECK(sc.config.state.n_qubits == 4);
    CHECK(sc.config.filter_qubits == std::vector<std::size_t>{0});
    REQUIRE(sc.kappa.value.has_value());
    CHECK(*sc.kappa.value == 0.2);
}

TEST_CASE("parse_scenario handles kappa = solve(...)") {
    const Scenario sc = parse_scenario(
        "state = w:3\n"
        "decohere = b,c\n"
        "filter = a\n"
        "kappa = solve(pairwise:ab,pairwise:bc)\n");
    REQUIRE(sc.kappa.solve.has_value());
    CHECK(sc.kappa.solve->first == "pairwise:ab");
    CHECK(sc.kappa.solve->second == "pairwise:bc");
}

TEST_CASE("parse_scenario diagnostics carry line numbers") {
    auto expect_error = [](const std::string& text, const std::string& needle) {
        try {
            parse_scenario(text);
            FAIL_CHECK("expected a parse error for: " << text);
        } catch (const std::invalid_argument& e) {
            const std::string what = e.what();
            CHECK_MESSAGE(what.find(needle) != std::string::npos,
                          "message '" << what << "' does not mention '" << needle << "'");
        }
    };

    expect_error("state = w:3\ngamma = 1.5\n", "line 2");
    expect_error("state = w:3\ngamma = 1.5\n", "[0, 1]");
    expect_error("state = w:3\nstate = w:4\n", "duplicate");
    expect_error("state = w:3\nflavor = strange\n", "unknown key");
    expect_error("state = w:3\ndecohere = q\n", "bad qubit letter");
    expect_error("state = w:3\nkappa = 0.2\n", "requires a 'filter'");
    expect_error("state = w:3\np = 1.2\n", "[0, 1]");
    expect_error("gamma = 0.3\n", "state");
    expect_error("state = w:3\ngamma 0.3\n", "key = value");
    expect_error("state = w:3\ndecohere = b\nfilter = b\nkappa = 0.5\n", "disjoint");
}

TEST_CASE("scalar gamma and defaults") {
    const Scenario sc = parse_scenario("state = ghz:3\ngamma = 0.25\n");
    CHECK_FALSE(sc.gamma.is_sweep);
    REQUIRE(sc.gamma.grid.size() == 1);
    CHECK(sc.gamma.grid[0] == 0.25);
    CHECK(sc.config.p == 0.5);
    CHECK(sc.output.empty());
}

TEST_CASE("csv writer format and round trip") {
    std::vector<SweepRecord> records;
    SweepRecord a;
    a.gamma = 0.0;
    a.success_prob = 1.0;
    a.values = {2.0 / 3.0, 1.0 / 3.0};
    SweepRecord b;
    b.gamma = 0.41;
    b.kappa = 0.24;
    b.success_prob = 0.586666666667;
    b.values = {0.123456789012345, 0.0};
    records = {a, b};

    const std::string csv = format_csv({"pairwise:ab", "pairwise:bc"}, records);
    CHECK(csv.find("gamma,kappa,prob,pairwise:ab,pairwise:bc\n") == 0);
    CHECK(csv.find("\r") == std::string::npos);
    CHECK(csv.find("0.123456789012") != std::string::npos);  // 12 significant digits

    const auto parsed = parse_csv(csv, 2);
    REQUIRE(parsed.size() == 2);
    CHECK_FALSE(parsed[0].kappa.has_value());
    REQUIRE(parsed[1].kappa.has_value());
    CHECK(*parsed[1].kappa == 0.24);
    // round trip reproduces the emitted text exactly
    CHECK(format_csv({"pairwise:ab", "pairwise:bc"}, parsed) == csv);
}

TEST_CASE("format_number uses plain decimal points") {
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(2.0 / 3.0) == "0.666666666667");
}

TEST_CASE("identical scenario input gives identical csv") {
    const char* text =
        "state = w:3\n"
        "decohere = b,c\n"
        "gamma = 0:0.1:0.5\n"
        "measures = pairwise:ab,pairwise:bc\n";
    const Scenario sc1 = parse_scenario(text);
    const Scenario sc2 = parse_scenario(text);
    const auto run = [](const Scenario& sc) {
        std::vector<std::string> names;
        for (const auto& m : sc.config.measures) names.push_back(m.text);
        return format_csv(names, sweep_gamma(sc.config, sc.gamma.grid, std::nullopt));
    };
    CHECK(run(sc1) == run(sc2));
}
