#include "doctest.h"
#include "fibrekit/error.hpp"
#include "fibrekit/hilbert.hpp"
#include "support.hpp"

using namespace fibrekit;
using support::ideal;

TEST_CASE("generalized binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 2) == 1);
  CHECK(binomial(-2, 3) == -4);
  CHECK(binomial(7, -1) == 0);
}

TEST_CASE("fit recovers known polynomials") {
  // 9 C(n+1, 2) - 3 n + 1 = lambda(R/I^n) for the three-generated example.
  std::vector<Int> H;
  for (Int n = 0; n <= 8; ++n) H.push_back(n == 0 ? 0 : 9 * binomial(n + 1, 2) - 3 * n + 1);
  auto e = fit_coefficients(H, 2, Basis::StandardD, FitTarget::E);
  CHECK(e.c == std::vector<Int>{9, 3, 1});
  CHECK(e.postulation == 1);
  for (Int n = 1; n <= 8; ++n) CHECK(e.value_at(n) == H[n]);
}

TEST_CASE("fit needs enough trailing agreement") {
  std::vector<Int> v = {0, 1, 4, 9, 16, 26};
  try {
    fit_coefficients(v, 2, Basis::StandardD, FitTarget::E);
    FAIL("expected NotYetPolynomial");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotYetPolynomial);
  }
}

TEST_CASE("fitted coefficients agree with an independent linear solve") {
  std::mt19937 rng(33);
  auto R = Ring::power_series(2);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = oracle::random_primary(rng, 2, 6, trial % 4);
    Filtration f(i_adic(ideal(g, R), std::nullopt));
    auto t = build_table(f, 12);
    auto co = coefficient_report(t, 2);
    std::vector<Int> ns = {10, 11, 12};
    CHECK(co.e.c == oracle::solve_coefficients(ns, {t.H[10], t.H[11], t.H[12]}, 2));
    CHECK(co.g.c == oracle::solve_coefficients(ns, {t.HK[10], t.HK[11], t.HK[12]}, 2));
    CHECK(co.f.c == oracle::solve_coefficients({11, 12}, {t.HF[11], t.HF[12]}, 1));
    CHECK(co.g[0] == co.e[0]);
    CHECK(co.g[1] == co.e[1] - co.f[0]);
    CHECK(co.g[2] == co.e[2] - co.f[1]);
  }
}

TEST_CASE("three-generated example: coefficients and v-sequence") {
  Filtration f(support::example_three());
  auto t = build_table(f, 9);
  auto co = coefficient_report(t, 2);
  CHECK(co.e.c == std::vector<Int>{9, 3, 1});
  CHECK(co.g.c == std::vector<Int>{9, 0, 1});
  CHECK(co.f.c == std::vector<Int>{3, 0});
  CHECK(t.HK[1] == 10);
  auto v = v_sequence(f, t, co);
  CHECK(v.v[0] == 9);
  for (int n = 1; n <= 7; ++n) CHECK(v.v[n] == 0);
  CHECK(v.g1 == 0);
  CHECK(v.g2 == 1);
  auto rows = fundamental_lemma_table(f, t, co.e[0], 2, 9);
  CHECK(rows.size() == 8);
}

TEST_CASE("four-generated example: series with a negative coefficient") {
  Filtration f(support::example_four());
  auto t = build_table(f, 8);
  auto co = coefficient_report(t, 2);
  CHECK(co.e.c == std::vector<Int>{16, 6, 0});
  CHECK(co.f0() == 4);
  CHECK(co.g[1] == 2);
  auto s = fiber_hilbert_series(t, co.f, 2);
  CHECK(s.h == std::vector<Int>{1, 2, 2, -1});
  CHECK(s.has_negative());
  CHECK(s.format() == "1 + 2t + 2t^2 - t^3");
  auto v = v_sequence(f, t, co);
  CHECK(v.g1 == 2);
}

TEST_CASE("series numerator reproduces the fiber Hilbert function") {
  std::mt19937 rng(44);
  auto R = Ring::power_series(2);
  for (int trial = 0; trial < 15; ++trial) {
    auto g = oracle::random_primary(rng, 2, 6, 1 + trial % 3);
    Filtration f(i_adic(ideal(g, R), std::nullopt));
    auto t = build_table(f, 12);
    auto co = coefficient_report(t, 2);
    auto s = fiber_hilbert_series(t, co.f, 2);
    // Coefficient of t^n in h(t)/(1-t)^2 is sum_k h_k (n - k + 1).
    for (int n = 0; n <= 12; ++n) {
      Int value = 0;
      for (std::size_t k = 0; k < s.h.size() && static_cast<int>(k) <= n; ++k)
        value += s.h[k] * (n - static_cast<Int>(k) + 1);
      CHECK(value == t.HF[n]);
    }
    Int sum = 0;
    for (Int h : s.h) sum += h;
    CHECK(sum == co.f0());
  }
}

TEST_CASE("one-dimensional g1") {
  Filtration f(support::example_six());
  auto t = build_table(f, 7);
  auto co = coefficient_report(t, 1);
  CHECK(co.e.c == std::vector<Int>{4, 3});
  CHECK(co.g.c == std::vector<Int>{4, -1});
  CHECK(g1_onedim(f, t, co, 2) == -1);
}

TEST_CASE("series formatting") {
  CHECK(SeriesNumerator{2, {1, 1, 1}}.format() == "1 + t + t^2");
  CHECK(SeriesNumerator{1, {1, 2, 1}}.format() == "1 + 2t + t^2");
  CHECK(SeriesNumerator{2, {1, 0, -3}}.format() == "1 - 3t^2");
}
