#include "doctest.h"
#include "fibrekit/criteria.hpp"
#include "fibrekit/error.hpp"
#include "support.hpp"

using namespace fibrekit;
using support::ideal;

namespace {

Status status(const AnalysisReport& r, const char* name) {
  const auto* c = r.find(name);
  REQUIRE(c != nullptr);
  return c->status;
}

}  // namespace

TEST_CASE("three-generated example") {
  auto r = analyze(support::example_three());
  CHECK_FALSE(r.has_violation());
  CHECK(r.coefficients->g.c == std::vector<Int>{9, 0, 1});
  CHECK(r.coefficients->e.c == std::vector<Int>{9, 3, 1});
  CHECK(r.reduction->r == 2);
  CHECK(r.depth_g.cls == DepthClass::AlmostMaximal);
  CHECK(status(r, "fiber-cm") == Status::Pass);
  CHECK(status(r, "fiber-depth-d-minus-1") == Status::Pass);
  CHECK(status(r, "g1-lower-bound") == Status::Pass);
  CHECK(status(r, "g1-upper-bound") == Status::Pass);
  CHECK(status(r, "fundamental-lemma") == Status::Pass);
  CHECK(r.series->h == std::vector<Int>{1, 1, 1});
}

TEST_CASE("four-generated example") {
  auto r = analyze(support::example_four());
  CHECK_FALSE(r.has_violation());
  CHECK(r.coefficients->e.c == std::vector<Int>{16, 6, 0});
  CHECK(r.coefficients->f0() == 4);
  CHECK(r.g1() == 2);
  CHECK(r.depth_g.cls == DepthClass::Low);
  const auto* cm = r.find("fiber-cm");
  CHECK(cm->status == Status::PreconditionNotEstablished);
  CHECK(cm->lhs == 2);
  CHECK(cm->rhs == 2);
  CHECK(status(r, "fiber-series-nonnegative") == Status::Fail);
  CHECK(status(r, "cpv-bound") == Status::Pass);
}

TEST_CASE("semigroup example") {
  auto r = analyze(support::example_six());
  CHECK_FALSE(r.has_violation());
  CHECK(r.minimal_multiplicity.ki_equals_kj);
  CHECK(r.minimal_multiplicity.goto_equality);
  CHECK(r.minimal_multiplicity.g1_is_minus_one);
  CHECK(r.g1() == -1);
  CHECK(*r.g1_onedim == -1);
  CHECK(status(r, "fiber-cm") == Status::Pass);
  CHECK(status(r, "minimal-multiplicity") == Status::Pass);
  // 11 = 5 + 6 lies in I^2 but not in J I, so r = 2 and G is not Cohen-Macaulay;
  // the three conditions of the equivalence are consistently false.
  CHECK(r.reduction->r == 2);
  CHECK(r.depth_g.cls == DepthClass::AlmostMaximal);
  REQUIRE(r.goto_equivalence.has_value());
  CHECK_FALSE(r.goto_equivalence->g_cohen_macaulay);
  CHECK(r.goto_equivalence->f_cohen_macaulay);
  CHECK_FALSE(r.goto_equivalence->r_at_most_one);
  CHECK(status(r, "goto-equivalences") == Status::Pass);
}

TEST_CASE("semigroup J defaults to the least valuation") {
  auto spec = support::example_six();
  spec.J.reset();
  auto r = analyze(spec);
  CHECK(r.J == "(t^4)");
  CHECK(*default_reduction(spec) == support::semigroup_ideal({4}, spec.ring));
}

TEST_CASE("power-series analysis needs J") {
  auto spec = support::example_three();
  spec.J.reset();
  CHECK_THROWS_AS(analyze(spec), Error);
}

TEST_CASE("r <= 1 gives Cohen-Macaulay G and F") {
  // (x^2, xy, y^2) = m^2: G and F are both polynomial-like.
  auto R = Ring::power_series(2);
  auto r = analyze(i_adic(ideal({{2, 0}, {1, 1}, {0, 2}}, R), ideal({{2, 0}, {0, 2}}, R)));
  CHECK_FALSE(r.has_violation());
  CHECK(r.reduction->r == 1);
  CHECK(r.depth_g.cls == DepthClass::CohenMacaulay);
  CHECK(status(r, "valabrega-valla") == Status::Pass);
  CHECK(status(r, "fiber-cm") == Status::Pass);
  CHECK(status(r, "minimal-multiplicity") == Status::Pass);
  CHECK(status(r, "goto-equivalences") == Status::Pass);
  CHECK(r.goto_equivalence->g_cohen_macaulay);
  CHECK(r.goto_equivalence->f_cohen_macaulay);
  CHECK(r.goto_equivalence->r_at_most_one);
}

TEST_CASE("K = R: fiber cone of the whole filtration") {
  auto R = Ring::power_series(2);
  auto I = ideal({{3, 0}, {2, 1}, {0, 3}}, R);
  auto r = analyze(i_adic(I, Ideal::unit(R), ideal({{3, 0}, {0, 3}}, R)));
  CHECK_FALSE(r.has_violation());
  CHECK(r.colength_K == 0);
  // F_R vanishes, so g = e.
  CHECK(r.coefficients->g.c == r.coefficients->e.c);
  CHECK(r.series->h == std::vector<Int>{0});
  CHECK(status(r, "cpv-bound") == Status::PreconditionNotEstablished);
}

TEST_CASE("random ideals never violate a theorem") {
  std::mt19937 rng(2024);
  auto R = Ring::power_series(2);
  int analyzed = 0;
  while (analyzed < 40) {
    auto g = support::random_integral(rng, 7, 1 + analyzed % 4);
    const Int a = g[0][0], b = g[1][1];
    auto I = ideal(g, R);
    auto J = ideal({{a, 0}, {0, b}}, R);
    for (bool k_max : {true, false}) {
      auto r = analyze(i_adic(I, k_max ? Ideal::maximal(R) : Ideal::unit(R), J));
      CHECK_FALSE(r.has_violation());
      const auto& co = *r.coefficients;
      CHECK(co.g[0] == co.e[0]);
      CHECK(co.g[1] == co.e[1] - co.f[0]);
      CHECK(co.g[2] == co.e[2] - co.f[1]);
      CHECK(r.vseq->g1 == co.g[1]);
      CHECK(r.vseq->g2 == co.g[2]);
      CHECK(status(r, "g1-lower-bound") == Status::Pass);
      CHECK(status(r, "g1-upper-bound") == Status::Pass);
      if (k_max) CHECK(status(r, "cpv-bound") == Status::Pass);
    }
    ++analyzed;
  }
}

TEST_CASE("three-variable analysis") {
  auto R = Ring::power_series(3);
  auto I = ideal({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}}, R);
  auto J = ideal({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}, R);
  auto r = analyze(i_adic(I, J));
  CHECK_FALSE(r.has_violation());
  CHECK(r.coefficients->e[0] == 8);
  CHECK(r.coefficients->g[0] == 8);
  CHECK(status(r, "g1-lower-bound") == Status::Pass);
}

TEST_CASE("explicit n_max that is too short is an error") {
  AnalysisOptions o;
  o.n_max = 3;
  try {
    analyze(support::example_four(), o);
    FAIL("expected NotYetPolynomial");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotYetPolynomial);
  }
}
