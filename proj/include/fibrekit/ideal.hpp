#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fibrekit/ring.hpp"

namespace fibrekit {

/// A monomial ideal of k[[x_1..x_d]] or an ideal of a numerical semigroup ring,
/// held in a canonical form so that `==` is ideal equality.
///
/// Power-series model: the minimal monomial generators, an antichain under
/// divisibility, sorted lexicographically.
///
/// Semigroup model: the valuation set is F u {s in S : s >= c} with F in [0, c)
/// and c minimal. The minimal generators are derived from (F, c) and stored as
/// well.
///
/// The zero ideal has no generators; the unit ideal is generated by 1.
class Ideal {
 public:
  static Ideal zero(const Ring& ring);
  static Ideal unit(const Ring& ring);
  static Ideal maximal(const Ring& ring);

  const Ring& ring() const { return ring_; }
  bool is_zero() const { return zero_; }
  bool is_unit() const;

  /// Minimal generators in canonical order.
  const std::vector<Monomial>& generators() const { return generators_; }
  /// Minimal number of generators.
  std::size_t mu() const { return generators_.size(); }

  bool contains(const Monomial& m) const;

  /// Semigroup model only.
  const std::vector<Int>& finite_part() const { return finite_; }
  Int conductor() const { return conductor_; }

  std::string format() const;

  friend bool operator==(const Ideal& a, const Ideal& b);

 private:
  friend class IdealBuilder;
  explicit Ideal(Ring ring) : ring_(std::move(ring)) {}

  Ring ring_;
  bool zero_ = false;
  std::vector<Monomial> generators_;
  std::vector<Int> finite_;
  Int conductor_ = 0;
};

/// Canonical ideal generated by `gens`. Throws InvalidInput for a monomial not
/// in the ring (wrong arity, negative exponent, valuation outside S).
Ideal minimalize(std::span<const Monomial> gens, const Ring& ring);
Ideal minimalize(std::initializer_list<Monomial> gens, const Ring& ring);

Ideal multiply(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, int n);
Ideal sum(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);
/// (a : b). Throws Precondition when b is the zero ideal.
Ideal colon(const Ideal& a, const Ideal& b);
/// (a : m) for a single element m.
Ideal colon(const Ideal& a, const Monomial& m);

/// lambda(R/a); nullopt when a is not m-primary.
std::optional<Int> colength(const Ideal& a);

/// Power-series model only: the two independent colength routes.
std::optional<Int> colength_by_scan(const Ideal& a);
/// Inclusion-exclusion over generator subsets; nullopt also when a has more than
/// kInclusionExclusionCap generators.
std::optional<Int> colength_by_inclusion_exclusion(const Ideal& a);
inline constexpr std::size_t kInclusionExclusionCap = 20;

/// lambda(outer/inner). Throws Precondition unless inner is contained in outer,
/// NotHilbert if inner is not m-primary.
Int quotient_length(const Ideal& outer, const Ideal& inner);

bool equals(const Ideal& a, const Ideal& b);
/// a contains b.
bool contains(const Ideal& a, const Ideal& b);

}  // namespace fibrekit
