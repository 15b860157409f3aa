#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "ramcalc/json_io.hpp"

using namespace ramcalc;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

// Run the installed binary through the shell, capturing stdout and the exit
// code; stderr is dropped so error-path tests stay quiet.
CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(RAMCALC_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[512];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
    r.out.append(buf, got);
  int st = pclose(pipe);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST_CASE("json serialization is byte-stable") {
  FieldDesc k = field_make(3, 1, 0, 0);

  SECTION("character with folded witness") {
    ASCharacter c = make_character(parse_elem(k, "x^3/y^9"));
    CHECK(character_to_json(c).dump() ==
          R"({"field":{"p":3,"m":1,"a":0,"b":0},"f":"x/y^3","reduced":true,"witness":"x/y^3"})");
  }

  SECTION("conductor report with both graded forms") {
    ojson j = conductor_to_json(
        conductor_report(make_character(parse_elem(k, "1/y^2"))));
    CHECK(j.dump() ==
          R"({"swan":2,"dimtot":3,"classification":"ramified","char_form":{"basis":"ordinary","du":"0","d2":"2/y^3","level":3},"rsw":{"basis":"log","du":"0","d2":"1/y^2","level":2},"cc":{"divisor_coeff":-3,"direction":"dw"}})");
  }

  SECTION("unramified report nulls the forms") {
    ojson j = conductor_to_json(
        conductor_report(make_character(parse_elem(k, "x"))));
    CHECK(j["char_form"].is_null());
    CHECK(j["rsw"].is_null());
    CHECK(j["classification"] == "unramified_nontrivial");
    CHECK(j["cc"] == ojson({{"divisor_coeff", 0}, {"direction", ""}}));
  }

  SECTION("level-free form serializes level null") {
    ojson j = form_to_json(d(parse_elem(k, "x"), FormBasis::ordinary));
    CHECK(j["level"].is_null());
    CHECK(j["basis"] == "ordinary");
    CHECK(j["du"] == "1");
  }

  SECTION("discrepancy lands on status fail with its own state field") {
    ExtensionDesc ext = ext_make(k, 1, 0);
    ASCharacter up = make_character(parse_elem(ext.top, "x^(1/3)/y^3"));
    ojson j = check_to_json(check_sigma(up, ext));
    CHECK(j["status"] == "fail");
    CHECK(j["sigma_state"] == "discrepancy");
    CHECK(j["rhs_form"] == "0");
    CHECK(j["lhs_form"] == "(2*w^-9)*du");
  }

  SECTION("bound check keeps numeric maps keyed by conductor kind") {
    ojson j = check_to_json(
        check_thm_right(make_character(parse_elem(k, "x/y^3")),
                        ext_make(k, 0, 1)));
    CHECK(j.dump() ==
          R"({"theorem":"right","lhs":{"dt":9,"sw":9},"rhs":{},"bound":{"dt":9,"sw":9},"slack":{"dt":0,"sw":0},"status":"equality"})");
  }

  SECTION("oracle witnesses carry exact ratios") {
    OracleResult res = oracle_conductor(
        make_character(parse_elem(k, "x/y^9")), OracleBounds{3, 2, 10, 1});
    ojson j = oracle_to_json(res);
    CHECK(j["sw_ratio"] == "26/3");
    CHECK(j["dt_ratio"] == "9/1");
    CHECK(j["sw_witness"]["mu"] == 3);
    CHECK(j["sw_witness"]["swan_1d"] == 26);
    CHECK(j["sw_witness"]["ratio"] == "26/3");
    CHECK(j["dt_witness"]["dimtot_1d"] == 9);
  }
}

TEST_CASE("cli worked examples") {
  SECTION("conductor of the order-9 pole") {
    CliResult r = run_cli("conductor --p 3 --a 0 --b 0 --expr 'x/y^9' --json");
    CHECK(r.code == 0);
    CHECK(r.out ==
          R"({"swan":9,"dimtot":9,"classification":"ramified","char_form":{"basis":"ordinary","du":"2/y^9","d2":"0","level":9},"rsw":{"basis":"log","du":"1/y^9","d2":"0","level":9},"cc":{"divisor_coeff":-9,"direction":"du"}})"
          "\n");
  }

  SECTION("base change collapses the tower example") {
    CliResult r =
        run_cli("basechange --p 3 --da 1 --db 0 --expr 'x/y^9' --json");
    CHECK(r.code == 0);
    CHECK(r.out ==
          R"({"field":{"p":3,"m":1,"a":1,"b":0},"image":"x^(1/3)/y^3","swan":3,"dimtot":3})"
          "\n");
  }

  SECTION("transport bound is attained on the depth jump") {
    CliResult r = run_cli(
        "check --theorem right --p 3 --a 0 --b 0 --da 0 --db 1 --expr 'x/y^3' --json");
    CHECK(r.code == 0);
    ojson j = ojson::parse(r.out);
    CHECK(j["status"] == "equality");
    CHECK(j["bound"]["sw"] == 9);
    CHECK(j["bound"]["dt"] == 9);
  }

  SECTION("text mode stays human-readable") {
    CliResult r = run_cli("conductor --p 3 --expr 'x/y^9'");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "swan 9  dimtot 9  ramified  char_form (2*w^-9)*du @ 9  rsw (w^-9)*du @ 9  cc(-1, -9, du)\n");
  }

  SECTION("extension-field coefficients round through") {
    CliResult r = run_cli("reduce --p 3 --qdeg 2 --expr '[1,2]*x/y' --json");
    CHECK(r.code == 0);
    ojson j = ojson::parse(r.out);
    CHECK(j["field"]["m"] == 2);
    CHECK(j["f"] == "[1,2]*x/y");
    CHECK(j["witness"] == "0");
  }
}

TEST_CASE("cli reporting paths") {
  SECTION("sigma discrepancy is reported, not asserted") {
    CliResult r = run_cli(
        "check --theorem sigma --p 3 --da 1 --db 0 --expr 'x^(1/3)/y^3' --json");
    CHECK(r.code == 0);
    ojson j = ojson::parse(r.out);
    CHECK(j["status"] == "fail");
    CHECK(j["sigma_state"] == "discrepancy");
  }

  SECTION("diagonal invariance") {
    CliResult r =
        run_cli("check --theorem frobenius --p 3 --da 2 --expr 'x/y^9' --json");
    CHECK(r.code == 0);
    ojson j = ojson::parse(r.out);
    CHECK(j["status"] == "equality");
    CHECK(j["lhs"] == j["rhs"]);
  }

  SECTION("oracle output is identical across runs") {
    std::string args = "oracle --p 3 --expr 'x/y^9 + 1/y^2' --seed 7 --json";
    CliResult r1 = run_cli(args), r2 = run_cli(args);
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
    CHECK(!r1.out.empty());
  }

  SECTION("input files take one expression per line with comments") {
    std::ofstream f("cli_batch_input.txt");
    f << "# transversal and deep poles\n"
      << "x/y^9\n"
      << "  1/y^2  # trailing comment\n"
      << "\n";
    f.close();
    CliResult r = run_cli("conductor --p 3 --in cli_batch_input.txt --json");
    CHECK(r.code == 0);
    auto nl = r.out.find('\n');
    REQUIRE(nl != std::string::npos);
    ojson first = ojson::parse(r.out.substr(0, nl));
    ojson second = ojson::parse(r.out.substr(nl + 1));
    CHECK(first["swan"] == 9);
    CHECK(second["swan"] == 2);
    CHECK(second["dimtot"] == 3);
    std::remove("cli_batch_input.txt");
  }
}

TEST_CASE("cli exit codes") {
  SECTION("syntax error exits 1") {
    CHECK(run_cli("conductor --p 3 --expr 'x/+y'").code == 1);
  }
  SECTION("missing input exits 1") {
    CHECK(run_cli("reduce --p 3").code == 1);
  }
  SECTION("unknown flag value exits 1") {
    CHECK(run_cli("check --theorem sideways --p 3 --expr 'x'").code == 1);
  }
  SECTION("root depth violation exits 2") {
    CHECK(run_cli("conductor --p 3 --expr 'x^(1/3)'").code == 2);
  }
  SECTION("invalid characteristic exits 2") {
    CHECK(run_cli("conductor --p 4 --expr 'x'").code == 2);
  }
  SECTION("charform of an unramified character exits 2") {
    CHECK(run_cli("charform --p 3 --expr 'x'").code == 2);
  }
}

TEST_CASE("corpus verdicts agree with the exit code") {
  CliResult r = run_cli("corpus --json");
  bool all = true;
  std::size_t lines = 0;
  std::string rest = r.out;
  while (!rest.empty()) {
    auto nl = rest.find('\n');
    REQUIRE(nl != std::string::npos);
    ojson j = ojson::parse(rest.substr(0, nl));
    all = all && j["passed"].get<bool>();
    ++lines;
    rest.erase(0, nl + 1);
  }
  CHECK(lines == 11);
  CHECK(r.code == (all ? 0 : 3));
}
