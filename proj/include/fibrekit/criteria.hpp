#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibrekit/filtration.hpp"
#include "fibrekit/hilbert.hpp"
#include "fibrekit/reduction.hpp"

namespace fibrekit {

enum class Status { Pass, Fail, PreconditionNotEstablished, Undetermined };

const char* to_string(Status s);

/// Outcome of one criterion. Both compared quantities are always recorded.
struct CriterionResult {
  std::string name;
  Status status = Status::Pass;
  /// How lhs and rhs are compared, e.g. "g1 >= sum - lambda(R/K)".
  std::string relation;
  Int lhs = 0;
  Int rhs = 0;
  std::optional<int> witness_n;
  int bound = 0;
  /// A proven statement failed: the computation is wrong, not the input.
  bool violation = false;
  std::string note;
};

struct MinimalMultiplicity {
  bool ki_equals_kj = false;           // KI = KJ
  bool g1_is_minus_colength_k = false; // g1 = -lambda(R/K)
  bool goto_equality = false;          // mu(I) = e0 + d - lambda(R/I)
  bool g1_is_minus_one = false;        // g1 = -1
  Int mu = 0;
  Int colength_I = 0;
};

struct GotoEquivalence {
  bool g_cohen_macaulay = false;
  bool f_cohen_macaulay = false;
  bool r_at_most_one = false;
};

struct AnalysisOptions {
  std::optional<int> n_max;
  std::optional<int> n_check;
  int reduction_bound = kDefaultReductionBound;
};

struct AnalysisReport {
  std::string ring;
  std::string mode;
  std::vector<std::string> terms;
  std::string J;
  std::string K;
  int dim = 0;
  bool k_is_maximal = false;
  Int colength_K = 0;
  Int colength_I = 0;
  Int colength_J = 0;
  Int mu_I = 0;

  std::optional<ReductionData> reduction;
  int n_max = 0;
  int n_check = 0;
  HilbertTable table;
  std::optional<CoefficientReport> coefficients;
  std::optional<VSequence> vseq;
  std::vector<LemmaRow> lemma;
  std::optional<Int> g1_onedim;
  std::optional<SeriesNumerator> series;
  DepthOfG depth_g;
  SequenceCheck valabrega_valla;
  /// Generators of J as a sequence in F_K; absent when they vanish in F_K.
  std::optional<SequenceCheck> fiber_sequence;
  MinimalMultiplicity minimal_multiplicity;
  std::optional<GotoEquivalence> goto_equivalence;
  std::vector<CriterionResult> criteria;

  Int g1() const { return coefficients->g[1]; }
  bool has_violation() const;
  /// nullptr when absent.
  const CriterionResult* find(const std::string& name) const;
};

// Criteria. Each reads the fitted data in `report` and recomputes its kernel
// sums from `f` up to report.n_check.

/// g1 >= sum_{n>=1} lambda((KI_n + J)/J) - lambda(R/K).
CriterionResult check_g1_lower_bound(const Filtration& f, const AnalysisReport& report);
/// g1 <= sum_{n>=1} lambda(KI_n/KJI_{n-1}) - lambda(R/K).
CriterionResult check_g1_upper_bound(const Filtration& f, const AnalysisReport& report);
/// With depth G >= d-1 certified: F_K is Cohen-Macaulay iff
/// g1 = sum_{n>=1} lambda((KI_n + JI_{n-1})/JI_{n-1}) - lambda(R/K).
CriterionResult check_fiber_cm(const Filtration& f, const AnalysisReport& report);
/// With depth G >= d-1 certified: depth F_K >= d-1 iff
/// g1 = sum_{n>=1} lambda(KI_n/KJI_{n-1}) - lambda(R/K).
CriterionResult check_fiber_depth_d_minus_1(const Filtration& f, const AnalysisReport& report);
/// Fills `flags` and returns the verdict "I has minimal multiplicity".
CriterionResult check_minimal_multiplicity(const Filtration& f, const AnalysisReport& report,
                                           MinimalMultiplicity& flags);
/// K = m: f0 <= e1 - e0 + lambda(R/I) + mu(I) - d + 1.
CriterionResult cpv_bound(const Filtration& f, const AnalysisReport& report);
/// K = m and I of minimal multiplicity: G CM <=> (F CM and r <= 1) <=> r <= 1.
CriterionResult goto_equivalences(const Filtration& f, const AnalysisReport& report,
                                  std::optional<GotoEquivalence>& out);

/// (t^{min I_1}) in a semigroup ring, a minimal reduction there; nullopt for
/// power-series rings.
std::optional<Ideal> default_reduction(const FiltrationSpec& spec);

/// Runs the whole pipeline. Deterministic. When J is absent in a semigroup
/// ring, J = (t^{min I_1}) is used.
AnalysisReport analyze(const FiltrationSpec& spec, const AnalysisOptions& options = {});

}  // namespace fibrekit
