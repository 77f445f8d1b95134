#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fibrekit/filtration.hpp"

namespace fibrekit {

inline constexpr int kDefaultReductionBound = 50;

struct ReductionData {
  Ideal J;
  bool is_reduction = false;
  /// Least r with I_{n+1} = J I_n for every n >= r.
  int r = 0;
  /// mu(J) = d and lambda(R/J) finite.
  bool is_minimal = false;
  int bound = kDefaultReductionBound;
};

/// Throws NotAReduction when no r <= bound works.
ReductionData reduction_number(const Filtration& f, int bound = kDefaultReductionBound);

/// Default horizon for every "for all n >= 1" check: r + d + 4.
int default_check_bound(const Filtration& f, const ReductionData& red);

enum class ProbeTarget { Fiber, AssociatedGraded };
enum class ProbeVerdict { HoldsUpToBound, FailsAt, NoneFound };

struct ElementProbe {
  Monomial x;
  ProbeTarget target = ProbeTarget::Fiber;
  ProbeVerdict verdict = ProbeVerdict::HoldsUpToBound;
  /// First failing n (FailsAt) or witnessing c (superficiality, HoldsUpToBound).
  std::optional<int> witness;
  int bound = 0;

  bool holds() const { return verdict == ProbeVerdict::HoldsUpToBound; }
};

/// (KI_n : x) n I_{n-1} = KI_{n-1} for n = 1..n_check. Requires x in I_1 \ KI_1
/// (Precondition otherwise).
ElementProbe is_regular_in_fiber(const Filtration& f, const Monomial& x, int n_check);

/// Least c in [0, c_max] with (KI_n : x) n I_c = KI_{n-1} for all c < n <= n_check.
/// c = 0 reads I_0 = R; it implies the condition for c = 1.
ElementProbe is_superficial_in_fiber(const Filtration& f, const Monomial& x, int c_max,
                                     int n_check);

struct SequenceCheck {
  bool passes = true;
  std::optional<int> failing_n;
  int bound = 0;
};

/// J n I_n = J I_{n-1} for n = 1..n_check.
SequenceCheck valabrega_valla(const Filtration& f, int n_check);

/// (x_1..x_k) n KI_n = (x_1..x_k) KI_{n-1} for n = 1..n_check. Each x_i must lie
/// in I_1 \ KI_1.
SequenceCheck fiber_regular_sequence_check(const Filtration& f, std::span<const Monomial> xs,
                                           int n_check);

enum class DepthClass { CohenMacaulay, AlmostMaximal, Low };

const char* to_string(DepthClass c);

/// Depth of G from e_1 and the two sums
///   sum_cm  = sum_{n>=1} lambda((I_n + J)/J),
///   sum_amd = sum_{n>=1} lambda(I_n/JI_{n-1}).
/// e_1 = sum_cm means G is Cohen-Macaulay; e_1 = sum_amd means depth G >= d-1.
struct DepthOfG {
  DepthClass cls = DepthClass::Low;
  Int e1 = 0;
  Int sum_cm = 0;
  Int sum_amd = 0;
  int bound = 0;
};

DepthOfG hm_depth_G(const Filtration& f, const ReductionData& red, Int e1, int n_check);

}  // namespace fibrekit
