#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fibrekit {

using Int = std::int64_t;

enum class RingKind { PowerSeriesMonomial, NumericalSemigroup };

// A monomial of k[[x_1..x_d]] (one exponent per variable) or an element t^s of
// k[[S]] (a single valuation s).
struct Monomial {
  std::vector<Int> exponents;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// One of the two local rings whose ideal arithmetic is exactly computable:
///
///  * k[[x_1, ..., x_d]] restricted to monomial ideals, m = (x_1, ..., x_d);
///  * the numerical semigroup ring k[[t^a_1, ..., t^a_k]] with gcd(a_i) = 1,
///    of dimension one, m = (t^a_1, ..., t^a_k).
///
/// Rings are immutable and cheap to copy; copies share their tables.
class Ring {
 public:
  static Ring power_series(std::vector<std::string> variables);
  /// Variables named x, y, z for d <= 3, else x1..xd.
  static Ring power_series(int dim);
  /// Throws InvalidInput unless the generators are positive with gcd 1.
  static Ring numerical_semigroup(std::vector<Int> generators);

  RingKind kind() const;
  bool is_semigroup() const { return kind() == RingKind::NumericalSemigroup; }
  /// Krull dimension.
  int dim() const;
  /// Number of exponent slots in a Monomial of this ring.
  int arity() const;

  const std::vector<std::string>& variables() const;
  /// Minimal generators of the semigroup, ascending.
  const std::vector<Int>& semigroup_generators() const;
  /// Largest gap of S (-1 when S = N).
  Int frobenius() const;
  /// Frobenius number + 1: every integer >= conductor lies in S.
  Int conductor() const;
  /// Upper end of the explicit membership table.
  Int table_bound() const;
  bool in_semigroup(Int s) const;

  bool valid(const Monomial& m) const;
  Monomial one() const;
  std::vector<Monomial> maximal_ideal_generators() const;

  std::string format(const Monomial& m) const;
  std::string describe() const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  struct Data;
  explicit Ring(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

}  // namespace fibrekit
