#include <thread>

#include "doctest.h"
#include "fibrekit/error.hpp"
#include "fibrekit/filtration.hpp"
#include "support.hpp"

using namespace fibrekit;
using support::ideal;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("i-adic terms and companions") {
  Filtration f(support::example_three());
  auto R = f.ring();
  CHECK(f.term(0).is_unit());
  CHECK(f.term(2) == power(f.I1(), 2));
  CHECK(f.kterm(1) == multiply(Ideal::maximal(R), f.I1()));
  CHECK(f.jterm(1) == multiply(f.J(), f.I1()));
  CHECK(f.kjterm(0) == multiply(Ideal::maximal(R), f.J()));
  CHECK(f.k_is_maximal());
  CHECK(f.colength_K() == 1);
}

TEST_CASE("hilbert table of the four-generated example") {
  Filtration f(support::example_four());
  auto t = build_table(f, 8);
  CHECK(t.HF[0] == 1);
  CHECK(t.HF[1] == 4);
  for (int n = 2; n <= 8; ++n) CHECK(t.HF[n] == 4 * n + 1);
  for (int n = 0; n <= 8; ++n) CHECK(t.HF[n] == t.HK[n] - t.H[n]);
  CHECK(t.H[1] == 11);
}

TEST_CASE("hilbert table agrees with brute force") {
  std::mt19937 rng(21);
  auto R = Ring::power_series(2);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = oracle::random_primary(rng, 2, 5, 2);
    Filtration f(i_adic(ideal(g, R), std::nullopt));
    auto t = build_table(f, 4);
    oracle::Gens m = {{1, 0}, {0, 1}};
    for (int n = 0; n <= 4; ++n) {
      auto In = oracle::power(g, n, 2);
      CHECK(t.H[n] == oracle::box_colength(In, 2));
      CHECK(t.HK[n] == oracle::box_colength(oracle::product(m, In), 2));
    }
  }
}

TEST_CASE("filtration validation") {
  auto R = Ring::power_series(2);
  auto I = ideal({{2, 0}, {0, 2}}, R);
  CHECK(kind_of([&] { Filtration f(i_adic(Ideal::unit(R), std::nullopt)); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([&] { Filtration f(i_adic(ideal({{2, 0}, {1, 1}}, R), std::nullopt)); }) ==
        ErrorKind::NotHilbert);
  CHECK(kind_of([&] { Filtration f(i_adic(I, ideal({{1, 0}, {0, 2}}, R))); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([&] { Filtration f(i_adic(I, ideal({{3, 0}, {0, 3}}, R), std::nullopt)); }) ==
        ErrorKind::InvalidInput);
  Filtration nj(i_adic(I, std::nullopt));
  CHECK(kind_of([&] { nj.J(); }) == ErrorKind::Precondition);
}

TEST_CASE("truncated filtration: explicit terms then products") {
  auto R = Ring::power_series(2);
  auto m = Ideal::maximal(R);
  FiltrationSpec spec{R, FiltrationMode::TruncatedGood,
                      {ideal({{2, 0}, {0, 2}}, R), power(m, 4)}, m, ideal({{2, 0}, {0, 2}}, R), {}};
  Filtration f(spec);
  CHECK(f.stored_terms() == 2);
  CHECK(f.term(2) == power(m, 4));
  CHECK(f.term(3) == multiply(f.I1(), power(m, 4)));
  CHECK(f.term(4) == multiply(f.I1(), f.term(3)));
}

TEST_CASE("truncated filtration that is not a filtration is rejected") {
  auto R = Ring::power_series(2);
  auto m = Ideal::maximal(R);
  // I_1 I_1 is not inside I_2.
  FiltrationSpec bad_product{R, FiltrationMode::TruncatedGood,
                             {ideal({{2, 0}, {0, 2}}, R), ideal({{3, 0}, {0, 4}}, R)}, m, std::nullopt, {}};
  CHECK(kind_of([&] { Filtration f(bad_product); }) == ErrorKind::InvalidInput);
  // Not decreasing.
  FiltrationSpec increasing{R, FiltrationMode::TruncatedGood, {power(m, 2), m}, m, std::nullopt, {}};
  CHECK(kind_of([&] { Filtration f(increasing); }) == ErrorKind::InvalidInput);
}

TEST_CASE("memoized terms are safe to share across threads") {
  Filtration f(support::example_four());
  std::vector<std::thread> pool;
  std::vector<Int> out(8);
  for (int i = 0; i < 8; ++i)
    pool.emplace_back([&, i] { out[i] = *colength(f.kjterm(4 + i % 3)); });
  for (auto& t : pool) t.join();
  for (int i = 0; i < 8; ++i)
    CHECK(out[i] == *colength(multiply(multiply(Ideal::maximal(f.ring()), f.J()), power(f.I1(), 4 + i % 3))));
}

TEST_CASE("semigroup filtration table") {
  Filtration f(support::example_six());
  auto t = build_table(f, 5);
  CHECK(t.H == std::vector<Int>{0, 2, 5, 9, 13, 17});
  CHECK(t.HF == std::vector<Int>{1, 3, 4, 4, 4, 4});
}
