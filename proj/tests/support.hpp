#pragma once

#include <random>
#include <string>
#include <vector>

#include "fibrekit/criteria.hpp"
#include "fibrekit/ideal.hpp"
#include "oracles.hpp"

namespace support {

inline fibrekit::Ideal ideal(const oracle::Gens& gens, const fibrekit::Ring& ring) {
  std::vector<fibrekit::Monomial> ms;
  for (const auto& g : gens) ms.push_back(fibrekit::Monomial{g});
  return fibrekit::minimalize(ms, ring);
}

inline fibrekit::Ideal semigroup_ideal(const std::vector<fibrekit::Int>& values,
                                       const fibrekit::Ring& ring) {
  std::vector<fibrekit::Monomial> ms;
  for (auto v : values) ms.push_back(fibrekit::Monomial{{v}});
  return fibrekit::minimalize(ms, ring);
}

inline oracle::Gens gens_of(const fibrekit::Ideal& I) {
  oracle::Gens out;
  for (const auto& m : I.generators()) out.push_back(m.exponents);
  return out;
}

// I = (x^3, x^2 y, y^3), J = (x^3, y^3).
inline fibrekit::FiltrationSpec example_three() {
  auto R = fibrekit::Ring::power_series(2);
  return fibrekit::i_adic(ideal({{3, 0}, {2, 1}, {0, 3}}, R), ideal({{3, 0}, {0, 3}}, R));
}

// I = (x^4, x^3 y, x y^3, y^4), J = (x^4, y^4).
inline fibrekit::FiltrationSpec example_four() {
  auto R = fibrekit::Ring::power_series(2);
  return fibrekit::i_adic(ideal({{4, 0}, {3, 1}, {1, 3}, {0, 4}}, R), ideal({{4, 0}, {0, 4}}, R));
}

// I = (t^4, t^5, t^6) in k[[t^4, t^5, t^6, t^7]], J = (t^4).
inline fibrekit::FiltrationSpec example_six() {
  auto S = fibrekit::Ring::numerical_semigroup({4, 5, 6, 7});
  return fibrekit::i_adic(semigroup_ideal({4, 5, 6}, S), semigroup_ideal({4}, S));
}

// (x^a, y^b, extras) with 2 <= a, b <= max_exp and `extra` generators on or
// above the segment from (a, 0) to (0, b), so that (x^a, y^b) is a reduction.
inline oracle::Gens random_integral(std::mt19937& rng, oracle::Int max_exp, int extra) {
  std::uniform_int_distribution<oracle::Int> axis(2, max_exp);
  const oracle::Int a = axis(rng), b = axis(rng);
  oracle::Gens g = {{a, 0}, {0, b}};
  for (int k = 0; k < extra; ++k) {
    oracle::Int i, j;
    do {
      i = static_cast<oracle::Int>(rng() % a);
      j = static_cast<oracle::Int>(rng() % b);
    } while (i * b + j * a < a * b);
    g.push_back({i, j});
  }
  return g;
}

}  // namespace support
