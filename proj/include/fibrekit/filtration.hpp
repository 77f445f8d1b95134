#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "fibrekit/ideal.hpp"

namespace fibrekit {

enum class FiltrationMode { IAdic, TruncatedGood };

/// A Hilbert filtration {I_n} together with the ideal K of the fiber cone
/// F_K = (+) I_n/KI_n and an optional candidate minimal reduction J of I_1.
///
/// In IAdic mode `terms` holds I_1 only and I_n = I_1^n. In TruncatedGood mode
/// `terms` holds I_1..I_N explicitly and I_{n+1} = I_1 I_n for n >= N.
struct FiltrationSpec {
  Ring ring;
  FiltrationMode mode = FiltrationMode::IAdic;
  std::vector<Ideal> terms;
  Ideal K;
  std::optional<Ideal> J;
  std::optional<int> n_max;

  const Ideal& I1() const { return terms.front(); }
};

/// I-adic spec with K = m.
FiltrationSpec i_adic(const Ideal& I, std::optional<Ideal> J = std::nullopt);
FiltrationSpec i_adic(const Ideal& I, const Ideal& K, std::optional<Ideal> J);

/// Validated filtration with memoized terms and K-companions.
///
/// Construction checks: I_1 != R, lambda(R/I_1) finite, I_1 in K, J in I_1, and
/// for TruncatedGood I_{n+1} in I_n, I_n I_m in I_{n+m}, I_{n+1} in K I_n for
/// every n, m up to the verification horizon. Safe to share across threads.
class Filtration {
 public:
  explicit Filtration(FiltrationSpec spec, int verify_horizon = 8);

  Filtration(const Filtration&) = delete;
  Filtration& operator=(const Filtration&) = delete;

  const FiltrationSpec& spec() const { return spec_; }
  const Ring& ring() const { return spec_.ring; }
  int dim() const { return spec_.ring.dim(); }
  const Ideal& I1() const { return spec_.I1(); }
  const Ideal& K() const { return spec_.K; }
  bool has_reduction() const { return spec_.J.has_value(); }
  /// Throws Precondition when no J was supplied.
  const Ideal& J() const;
  /// Largest explicitly stored index (1 for I-adic).
  int stored_terms() const { return static_cast<int>(spec_.terms.size()); }

  /// I_n (R for n = 0).
  const Ideal& term(int n) const;
  /// K I_n.
  const Ideal& kterm(int n) const;
  /// J I_n.
  const Ideal& jterm(int n) const;
  /// K J I_n.
  const Ideal& kjterm(int n) const;

  /// lambda(R/K).
  Int colength_K() const { return colength_K_; }
  bool k_is_maximal() const;

 private:
  FiltrationSpec spec_;
  Int colength_K_ = 0;
  mutable std::recursive_mutex mutex_;
  mutable std::map<int, Ideal> terms_;
  mutable std::map<int, Ideal> kterms_;
  mutable std::map<int, Ideal> jterms_;
  mutable std::map<int, Ideal> kjterms_;
};

/// H(n) = lambda(R/I_n), H_K(n) = lambda(R/KI_n), H_F(n) = lambda(I_n/KI_n).
struct HilbertTable {
  int n_max = 0;
  std::vector<Int> H;
  std::vector<Int> HK;
  std::vector<Int> HF;
};

/// Throws NotHilbert naming the first n with an infinite colength.
HilbertTable build_table(const Filtration& f, int n_max);

}  // namespace fibrekit
