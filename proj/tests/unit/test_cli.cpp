#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fibrekit/cli.hpp"
#include "fibrekit/criteria.hpp"
#include "fibrekit/report.hpp"
#include "support.hpp"

using namespace fibrekit;

#ifndef FIXTURE_DIR
#define FIXTURE_DIR "fixtures"
#endif

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void position_of(const std::string& text, int line, int column) {
  try {
    parse_input(text);
    to_spec(parse_input(text));
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("parse the reference documents") {
  auto doc = parse_input(slurp(fixture("three_generated.fk")));
  CHECK(doc.ring == RingKind::PowerSeriesMonomial);
  CHECK(doc.variables == std::vector<std::string>{"x", "y"});
  CHECK(doc.terms.size() == 1);
  auto spec = to_spec(doc);
  CHECK(spec.I1().format() == "(x^3, x^2*y, y^3)");
  CHECK(spec.J->format() == "(x^3, y^3)");
  CHECK(spec.K == Ideal::maximal(spec.ring));

  auto six = to_spec(parse_input(slurp(fixture("semigroup.fk"))));
  CHECK(six.ring.is_semigroup());
  CHECK(six.I1().format() == "(t^4, t^5, t^6)");
}

TEST_CASE("monomial notation and defaults") {
  auto doc = parse_input("ring: power-series\ndim: 2\nI: x^3, x^2*y, y^3  # comment\n");
  auto spec = to_spec(doc);
  CHECK(spec.I1() == support::example_three().I1());
  CHECK(!spec.J);
  CHECK(doc.K.kind == IdealText::Kind::Maximal);

  auto s = to_spec(parse_input("ring: semigroup\ngenerators: 4, 5, 6, 7\nI: t^4, t^5, t^6\nK: unit\n"));
  CHECK(s.I1() == support::example_six().I1());
  CHECK(s.K.is_unit());

  auto t = to_spec(parse_input("ring: power-series\nvars: a b\nI: a^2, b^2\nI2: a^4, a^3*b, a^2*b^2, a*b^3, b^4\n"));
  CHECK(t.mode == FiltrationMode::TruncatedGood);
  CHECK(t.terms.size() == 2);
}

TEST_CASE("positioned diagnostics") {
  position_of("ring: power-series\nvars: x y\nI: [[3,0],[2,1],[0,3]\n", 3, 22);
  position_of("ring: power-series\nvars: x y\nI: x^3, z\n", 3, 9);
  position_of("ring: power-series\nvars: x y\nI: [[3,0,1]]\n", 3, 5);
  position_of("ring: power-series\nvars: x y\nI: x^3, y^3\nfoo: 1\n", 4, 1);
  position_of("ring: power-series\nvars: x y\nI x^3\n", 3, 1);
  position_of("ring: semigroup\ngenerators: 4 6\nI: [4]\n", 2, 13);
  position_of("ring: power-series\nvars: x y\nI: x^3, y^3\nJ: x^2, y^3\n", 4, 4);
  position_of("ring: semigroup\ngenerators: 4 5 6 7\nI: [3]\n", 3, 4);
  position_of("ring: power-series\nvars: x y\nI: x^3, y^3\nI: x, y\n", 4, 1);
  position_of("ring: power-series\nvars: x y\nI: x^3, y^3\nI3: x, y\n", 4, 1);
  position_of("ring: torus\n", 1, 7);
}

TEST_CASE("canonical text round-trips") {
  for (const char* name : {"three_generated.fk", "equigenerated.fk", "semigroup.fk"}) {
    auto doc = parse_input(slurp(fixture(name)));
    auto again = parse_input(to_text(doc));
    CHECK(to_text(again) == to_text(doc));
    CHECK(to_spec(again).I1() == to_spec(doc).I1());
  }
}

TEST_CASE("analyze prints g for the three-generated example") {
  auto r = run({"analyze", fixture("three_generated.fk")});
  CHECK(r.code == 0);
  CHECK(r.out.find("g = (9, 0, 1)") != std::string::npos);
}

TEST_CASE("series prints the flagged numerator") {
  auto r = run({"series", fixture("equigenerated.fk")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "1 + 2t + 2t^2 - t^3 over (1-t)^2; NEGATIVE COEFFICIENT: F(I) not Cohen-Macaulay\n");
}

TEST_CASE("selftest passes") {
  auto r = run({"selftest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAILED") == std::string::npos);
}

TEST_CASE("every command on every fixture exits 0") {
  for (const char* name : {"three_generated.fk", "equigenerated.fk", "semigroup.fk"}) {
    for (std::vector<std::string> cmd :
         {std::vector<std::string>{"analyze"}, {"coeffs"}, {"series"}, {"reduction"},
          {"check", "cm-fiber"}, {"check", "depth-fiber"}, {"check", "min-mult"}, {"check", "depth-g"}}) {
      cmd.push_back(fixture(name));
      auto r = run(cmd);
      CHECK_MESSAGE(r.code == 0, cmd[0] << " " << name << ": " << r.err);
      CHECK(!r.out.empty());
    }
  }
  CHECK(run({"fundamental-lemma", fixture("three_generated.fk")}).code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"analyze"}).code == cli::kInputError);
  CHECK(run({"analyze", "/nonexistent/file.fk"}).code == cli::kInputError);
  CHECK(run({"check", "bogus", fixture("three_generated.fk")}).code == cli::kInputError);
  CHECK(run({"--help"}).code == cli::kOk);

  auto fl = run({"fundamental-lemma", fixture("semigroup.fk")});
  CHECK(fl.code == cli::kInputError);
  CHECK(fl.out.empty());

  auto short_table = run({"analyze", fixture("equigenerated.fk"), "--n-max", "3"});
  CHECK(short_table.code == cli::kComputationError);
  CHECK(short_table.out.empty());

  InputDocument nj = parse_input("ring: power-series\nvars: x y\nI: x^3, y^3\n");
  std::ostringstream out, err;
  CHECK(cli::run_command("analyze", nj, {}, out, err) == cli::kInputError);
  CHECK(out.str().empty());
}

TEST_CASE("structured report round-trips to identical verdicts") {
  for (const char* name : {"three_generated.fk", "equigenerated.fk", "semigroup.fk"}) {
    const std::string path = "roundtrip_" + std::string(name) + ".json";
    auto first = run({"analyze", fixture(name), "--report", path});
    REQUIRE(first.code == 0);
    const std::string tree = slurp(path);
    auto doc = parse_report_input(tree);
    auto again = analyze(to_spec(doc), AnalysisOptions{doc.n_max, doc.n_check});
    CHECK(render_tree(again, doc) == tree);
    auto second = run({"analyze", path});
    CHECK(second.code == 0);
    CHECK(second.out == first.out);
    std::remove(path.c_str());
  }
}

TEST_CASE("tree format on standard output") {
  auto r = run({"coeffs", fixture("semigroup.fk"), "--format", "tree"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("{", 0) == 0);
  CHECK(r.out.find("\"schema\": \"fibrekit-report/1\"") != std::string::npos);
}

TEST_CASE("overrides reach the analysis") {
  auto r = run({"analyze", fixture("three_generated.fk"), "--n-max", "12", "--n-check", "9"});
  CHECK(r.code == 0);
  CHECK(r.out.find("n_max 12, n_check 9") != std::string::npos);
}
