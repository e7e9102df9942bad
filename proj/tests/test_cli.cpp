#include <doctest.h>

#include "dynatomic/cli.hpp"
#include "dynatomic/mapspec.hpp"

using namespace dynatomic;
using json = nlohmann::ordered_json;

TEST_CASE("map parsing: grammar, precedence, errors") {
    MapSpec s = parse_map("z^2 - 3/4", "Q");
    CHECK(s.vars == std::vector<std::string>{"z"});
    CHECK(s.coords_canonical[0] == "z^2 - 3/4");

    // Precedence: ^ above unary minus above *.
    MapSpec neg = parse_map("-z^2", "Q");
    CHECK(neg.coords_canonical[0] == "-z^2");
    MapSpec mul = parse_map("-2*z + 1", "Q");
    CHECK(mul.coords_canonical[0] == "-2*z + 1");
    MapSpec paren = parse_map("(z + 1)^3", "Q");
    CHECK(paren.coords_canonical[0] == "z^3 + 3*z^2 + 3*z + 1");

    // The swap map over F_3.
    MapSpec swp = parse_map("y, x", "F3", {"x", "y"});
    CHECK(swp.coords_canonical == std::vector<std::string>{"y", "x"});

    CHECK_THROWS_AS(parse_map("z^2 + w", "Q"), std::invalid_argument); // two idents, no --vars
    CHECK_THROWS_AS(parse_map("z^^2", "Q"), ParseError);
    CHECK_THROWS_AS(parse_map("z^(2)", "Q"), ParseError);   // exponent must be a literal
    CHECK_THROWS_AS(parse_map("z^-1", "Q"), ParseError);
    CHECK_THROWS_AS(parse_map("z^1/2", "Q"), ParseError);   // fractional exponent
    CHECK_THROWS_AS(parse_map("x^2 + y, x*y", "F3", {"x", "y", "z"}), std::invalid_argument);
    CHECK_THROWS_AS(parse_map("t^2", "Q"), std::invalid_argument); // t reserved
    CHECK_THROWS_AS(parse_map("z^2", ""), std::invalid_argument);  // field required
    CHECK_THROWS_AS(parse_map("z^2", "F9"), std::invalid_argument); // 9 not prime
    CHECK_THROWS_AS(parse_map("1/2/3", "Q"), ParseError);
    CHECK_THROWS_AS(parse_map("z @ 2", "Q"), ParseError);
}

TEST_CASE("parse/print round trip on generated specs") {
    for (const char* text : {"z^2 - 3/4", "z^3 + 2*z - 1/6", "-z^4 + z^2 - z",
                             "z^2 + z + 1/4"}) {
        MapSpec a = parse_map(text, "Q");
        MapSpec b = parse_map(a.render(), "Q");
        CHECK(a.coords_canonical == b.coords_canonical);
    }
    MapSpec m = parse_map("x^2 + y, x*y + 2", "Q", {"x", "y"});
    MapSpec m2 = parse_map(m.render(), "Q", {"x", "y"});
    CHECK(m.coords_canonical == m2.coords_canonical);
    // Over F_5 coefficients reduce mod p before printing.
    MapSpec g = parse_map("7*z^2 + 6", "F5");
    MapSpec g2 = parse_map(g.render(), "F5");
    CHECK(g.coords_canonical == g2.coords_canonical);
}

TEST_CASE("paper example through the CLI") {
    CliResult r = run_cli({"dynatomic", "--map", "z^2-3/4", "--field", "Q", "--n", "2"});
    CHECK(r.exit_code == 0);
    CHECK(r.doc["status"] == "ok");
    CHECK(r.doc["outputs"]["dynatomic_poly"] == "z^2 + z + 1/4");
    CHECK(r.doc["outputs"]["division_certificate"] == true);

    CliResult m = run_cli({"multiplicity", "--map", "z^2-3/4", "--field", "Q", "--n", "2",
                           "--point", "-1/2"});
    CHECK(m.exit_code == 0);
    CHECK(m.doc["outputs"]["a"] == 3);
    CHECK(m.doc["outputs"]["a_star"] == 2);

    CliResult c = run_cli({"cycle", "--map", "z^2", "--field", "F5", "--n", "2",
                           "--ext-cap", "2"});
    CHECK(c.exit_code == 0);
    CHECK(c.doc["outputs"]["effective"] == true);
    CHECK(c.doc["outputs"]["cycle"]["total"] == 4);
}

TEST_CASE("exit codes match statuses") {
    // Usage error: missing required flag.
    CliResult usage = run_cli({"dynatomic", "--map", "z^2"});
    CHECK(usage.exit_code == 1);
    CHECK(usage.doc["status"] == "error");

    // Parse error in the map expression.
    CliResult parse_err = run_cli({"dynatomic", "--map", "z^", "--field", "Q", "--n", "1"});
    CHECK(parse_err.exit_code == 1);
    CHECK(parse_err.doc["status"] == "error");
    CHECK(parse_err.doc["diagnostics"].size() > 0);

    // Degenerate iterate.
    CliResult degen = run_cli({"cycle", "--map", "y, x", "--field", "F3", "--vars", "x,y",
                               "--n", "2", "--ext-cap", "1"});
    CHECK(degen.exit_code == 2);
    CHECK(degen.doc["status"] == "degenerate");

    CliResult ok = run_cli({"verify", "--map", "z^2+1", "--field", "F3", "--n", "2",
                            "--ext-cap", "2"});
    CHECK(ok.exit_code == 0);
    CHECK(ok.doc["outputs"]["all_passed"] == true);
}

TEST_CASE("documents are deterministic and machine-parseable") {
    std::vector<std::string> args{"deform-check", "--map", "z^2-3/4", "--field", "Q",
                                  "--n", "2", "--seed", "42"};
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    CHECK(a.doc.dump() == b.doc.dump());
    CHECK(a.exit_code == 0);
    // Round trip through the JSON parser.
    json reparsed = json::parse(a.doc.dump());
    CHECK(reparsed == a.doc);
    // All exact numbers are decimal-free strings.
    CHECK(a.doc["outputs"]["degenerate_parameter_locus"]["rational_points"][0] == "0");
}

TEST_CASE("deform-check agrees with the worked example end to end") {
    CliResult r = run_cli({"deform-check", "--map", "z^2-3/4", "--field", "Q", "--n", "2"});
    REQUIRE(r.exit_code == 0);
    auto& out = r.doc["outputs"];
    CHECK(out["deformed_periodic_poly"] ==
          "z^4 + 2*z^2*t - 3/2*z^2 + t^2 - z - 1/2*t - 3/16");
    CHECK(out["degenerate_parameter_locus"]["rational_points"] ==
          json::array({"0", "1"}));
    CHECK(out["degree_conservation"] == true);
    CHECK(out["flat_limit"]["status"] == "ok");
}
