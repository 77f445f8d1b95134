#include "fibrekit/reduction.hpp"

#include <algorithm>

#include "fibrekit/error.hpp"

namespace fibrekit {

ReductionData reduction_number(const Filtration& f, int bound) {
  const Ideal& J = f.J();
  const int stored = f.stored_terms();
  const int horizon = std::max(bound, stored);

  // agrees[n] <=> I_{n+1} = J I_n. Past the stored terms the recursion
  // I_{n+1} = I_1 I_n propagates equality upward, so it suffices to check up
  // to max(r, stored).
  std::vector<bool> agrees;
  for (int n = 0; n <= horizon; ++n) agrees.push_back(f.term(n + 1) == f.jterm(n));

  for (int r = 0; r <= bound; ++r) {
    const int last = std::max(r, stored);
    bool ok = true;
    for (int n = r; n <= last && ok; ++n) ok = agrees[n];
    if (!ok) continue;
    ReductionData out{J, true, r, false, bound};
    out.is_minimal = J.mu() == static_cast<std::size_t>(f.dim()) && colength(J).has_value();
    return out;
  }
  throw Error(ErrorKind::NotAReduction, "J = " + J.format() + " is not a reduction of I_1 = " +
                                            f.I1().format() + " within bound " +
                                            std::to_string(bound));
}

int default_check_bound(const Filtration& f, const ReductionData& red) {
  return red.r + f.dim() + 4;
}

namespace {

void require_degree_one_nonzero(const Filtration& f, const Monomial& x) {
  if (!f.ring().valid(x))
    throw Error(ErrorKind::InvalidInput, "element is not in the ring");
  if (!f.I1().contains(x) || f.kterm(1).contains(x))
    throw Error(ErrorKind::Precondition,
                f.ring().format(x) + " is not a degree-one nonzero element (x must lie in I_1 \\ KI_1)");
}

}  // namespace

ElementProbe is_regular_in_fiber(const Filtration& f, const Monomial& x, int n_check) {
  require_degree_one_nonzero(f, x);
  ElementProbe out{x, ProbeTarget::Fiber, ProbeVerdict::HoldsUpToBound, std::nullopt, n_check};
  for (int n = 1; n <= n_check; ++n) {
    if (intersect(colon(f.kterm(n), x), f.term(n - 1)) != f.kterm(n - 1)) {
      out.verdict = ProbeVerdict::FailsAt;
      out.witness = n;
      return out;
    }
  }
  return out;
}

ElementProbe is_superficial_in_fiber(const Filtration& f, const Monomial& x, int c_max,
                                     int n_check) {
  require_degree_one_nonzero(f, x);
  std::vector<Ideal> colons;
  for (int n = 0; n <= n_check; ++n) colons.push_back(colon(f.kterm(n), x));

  ElementProbe out{x, ProbeTarget::Fiber, ProbeVerdict::NoneFound, std::nullopt, n_check};
  for (int c = 0; c <= c_max && c < n_check; ++c) {
    bool holds = true;
    for (int n = c + 1; n <= n_check && holds; ++n)
      holds = intersect(colons[n], f.term(c)) == f.kterm(n - 1);
    if (holds) {
      out.verdict = ProbeVerdict::HoldsUpToBound;
      out.witness = c;
      return out;
    }
  }
  return out;
}

SequenceCheck valabrega_valla(const Filtration& f, int n_check) {
  SequenceCheck out{true, std::nullopt, n_check};
  for (int n = 1; n <= n_check; ++n)
    if (intersect(f.J(), f.term(n)) != f.jterm(n - 1)) {
      out.passes = false;
      out.failing_n = n;
      break;
    }
  return out;
}

SequenceCheck fiber_regular_sequence_check(const Filtration& f, std::span<const Monomial> xs,
                                           int n_check) {
  if (xs.empty()) throw Error(ErrorKind::Precondition, "empty element sequence");
  for (const auto& x : xs) require_degree_one_nonzero(f, x);
  const Ideal X = minimalize(xs, f.ring());
  SequenceCheck out{true, std::nullopt, n_check};
  for (int n = 1; n <= n_check; ++n)
    if (intersect(X, f.kterm(n)) != multiply(X, f.kterm(n - 1))) {
      out.passes = false;
      out.failing_n = n;
      break;
    }
  return out;
}

const char* to_string(DepthClass c) {
  switch (c) {
    case DepthClass::CohenMacaulay: return "CM";
    case DepthClass::AlmostMaximal: return "DEPTH_GE_D_MINUS_1";
    case DepthClass::Low: return "LOW";
  }
  return "?";
}

DepthOfG hm_depth_G(const Filtration& f, const ReductionData& red, Int e1, int n_check) {
  if (n_check <= red.r)
    throw Error(ErrorKind::Undetermined, "n_check must exceed the reduction number");
  DepthOfG out;
  out.e1 = e1;
  out.bound = n_check;
  const Ideal& J = f.J();
  for (int n = 1; n <= n_check; ++n) {
    Int cm = quotient_length(sum(f.term(n), J), J);
    Int amd = quotient_length(f.term(n), f.jterm(n - 1));
    if (n > red.r && (cm != 0 || amd != 0))
      throw Error(ErrorKind::Undetermined,
                  "depth-of-G sums do not terminate at n = " + std::to_string(n));
    out.sum_cm += cm;
    out.sum_amd += amd;
  }
  if (e1 == out.sum_cm)
    out.cls = DepthClass::CohenMacaulay;
  else if (e1 == out.sum_amd)
    out.cls = DepthClass::AlmostMaximal;
  else
    out.cls = DepthClass::Low;
  return out;
}

}  // namespace fibrekit
