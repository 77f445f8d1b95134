#include "fibrekit/criteria.hpp"

#include <algorithm>
#include <functional>

#include "fibrekit/error.hpp"

namespace fibrekit {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::PreconditionNotEstablished: return "PRECONDITION_NOT_ESTABLISHED";
    case Status::Undetermined: return "UNDETERMINED";
  }
  return "?";
}

bool AnalysisReport::has_violation() const {
  return std::any_of(criteria.begin(), criteria.end(),
                     [](const CriterionResult& c) { return c.violation; });
}

const CriterionResult* AnalysisReport::find(const std::string& name) const {
  for (const auto& c : criteria)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

struct BoundedSum {
  Int total = 0;
  std::optional<int> nonzero_past_r;
};

// sum_{n=1}^{n_check} summand(n); every summand past the reduction number must vanish.
BoundedSum bounded_sum(const AnalysisReport& report, const std::function<Int(int)>& summand) {
  BoundedSum out;
  for (int n = 1; n <= report.n_check; ++n) {
    Int s = summand(n);
    out.total += s;
    if (n > report.reduction->r && s != 0 && !out.nonzero_past_r) out.nonzero_past_r = n;
  }
  return out;
}

CriterionResult make(std::string name, std::string relation, Int lhs, Int rhs, int bound) {
  CriterionResult c;
  c.name = std::move(name);
  c.relation = std::move(relation);
  c.lhs = lhs;
  c.rhs = rhs;
  c.bound = bound;
  return c;
}

bool undetermined(CriterionResult& c, const BoundedSum& s) {
  if (!s.nonzero_past_r) return false;
  c.status = Status::Undetermined;
  c.witness_n = s.nonzero_past_r;
  c.note = "summand nonzero past the reduction number; sum not certified";
  return true;
}

bool depth_g_at_least_d_minus_1(const AnalysisReport& report) {
  return report.depth_g.cls != DepthClass::Low;
}

// Theorem-level inequality: failure is a violation.
void settle_theorem(CriterionResult& c, bool holds) {
  c.status = holds ? Status::Pass : Status::Fail;
  c.violation = !holds;
}

Int fiber_cm_sum(const Filtration& f, const AnalysisReport& report, BoundedSum& s) {
  s = bounded_sum(report, [&](int n) {
    const Ideal& jn = f.jterm(n - 1);
    return quotient_length(sum(f.kterm(n), jn), jn);
  });
  return s.total - f.colength_K();
}

Int upper_sum(const Filtration& f, const AnalysisReport& report, BoundedSum& s) {
  s = bounded_sum(report, [&](int n) { return quotient_length(f.kterm(n), f.kjterm(n - 1)); });
  return s.total - f.colength_K();
}

Int lower_sum(const Filtration& f, const AnalysisReport& report, BoundedSum& s) {
  const Ideal& J = f.J();
  s = bounded_sum(report, [&](int n) { return quotient_length(sum(f.kterm(n), J), J); });
  return s.total - f.colength_K();
}

}  // namespace

CriterionResult check_g1_lower_bound(const Filtration& f, const AnalysisReport& report) {
  BoundedSum s;
  const Int bound = lower_sum(f, report, s);
  auto c = make("g1-lower-bound", "g1 >= sum lambda((KI_n+J)/J) - lambda(R/K)", report.g1(),
                bound, report.n_check);
  if (!undetermined(c, s)) settle_theorem(c, report.g1() >= bound);
  return c;
}

CriterionResult check_g1_upper_bound(const Filtration& f, const AnalysisReport& report) {
  BoundedSum s;
  const Int bound = upper_sum(f, report, s);
  auto c = make("g1-upper-bound", "g1 <= sum lambda(KI_n/KJI_{n-1}) - lambda(R/K)",
                report.g1(), bound, report.n_check);
  if (!undetermined(c, s)) settle_theorem(c, report.g1() <= bound);
  return c;
}

CriterionResult check_fiber_cm(const Filtration& f, const AnalysisReport& report) {
  BoundedSum s;
  const Int value = fiber_cm_sum(f, report, s);
  auto c = make("fiber-cm", "g1 = sum lambda((KI_n+JI_{n-1})/JI_{n-1}) - lambda(R/K)",
                report.g1(), value, report.n_check);
  if (undetermined(c, s)) return c;
  const bool equal = report.g1() == value;
  if (!depth_g_at_least_d_minus_1(report)) {
    c.status = Status::PreconditionNotEstablished;
    c.note = std::string("depth G >= d-1 not certified; equality ") +
             (equal ? "holds" : "fails") + " but no verdict on F_K";
    return c;
  }
  c.status = equal ? Status::Pass : Status::Fail;
  c.note = equal ? "F_K is Cohen-Macaulay" : "F_K is not Cohen-Macaulay";
  return c;
}

CriterionResult check_fiber_depth_d_minus_1(const Filtration& f, const AnalysisReport& report) {
  BoundedSum s;
  const Int value = upper_sum(f, report, s);
  auto c = make("fiber-depth-d-minus-1", "g1 = sum lambda(KI_n/KJI_{n-1}) - lambda(R/K)",
                report.g1(), value, report.n_check);
  if (undetermined(c, s)) return c;
  const bool equal = report.g1() == value;
  if (!depth_g_at_least_d_minus_1(report)) {
    c.status = Status::PreconditionNotEstablished;
    c.note = std::string("depth G >= d-1 not certified; equality ") +
             (equal ? "holds" : "fails") + " but no verdict on F_K";
    return c;
  }
  c.status = equal ? Status::Pass : Status::Fail;
  c.note = equal ? "depth F_K >= d-1" : "depth F_K < d-1";
  if (f.dim() == 1 && !equal) {
    c.violation = true;
    c.note = "one-dimensional equality must hold unconditionally";
  }
  return c;
}

CriterionResult check_minimal_multiplicity(const Filtration& f, const AnalysisReport& report,
                                           MinimalMultiplicity& flags) {
  const Int d = f.dim();
  const Int e0 = report.coefficients->e[0];
  const Int g1 = report.g1();
  flags.mu = static_cast<Int>(f.I1().mu());
  flags.colength_I = report.colength_I;
  flags.ki_equals_kj = multiply(f.K(), f.I1()) == multiply(f.K(), f.J());
  flags.g1_is_minus_colength_k = g1 == -f.colength_K();
  flags.goto_equality = flags.mu == e0 + d - flags.colength_I;
  flags.g1_is_minus_one = g1 == -1;

  auto c = make("minimal-multiplicity", "mu(I) = e0 + d - lambda(R/I)", flags.mu,
                e0 + d - flags.colength_I, report.n_check);
  c.status = flags.ki_equals_kj ? Status::Pass : Status::Fail;
  c.note = flags.ki_equals_kj ? "KI = KJ" : "KI != KJ";
  if (flags.ki_equals_kj && !flags.g1_is_minus_colength_k) {
    c.violation = true;
    c.note = "KI = KJ but g1 != -lambda(R/K)";
  }
  if (report.k_is_maximal) {
    if (flags.goto_equality != flags.g1_is_minus_one) {
      c.violation = true;
      c.note = "mu(I) = e0 + d - lambda(R/I) disagrees with g1 = -1";
    } else if (flags.goto_equality != flags.ki_equals_kj) {
      c.violation = true;
      c.note = "mu(I) = e0 + d - lambda(R/I) disagrees with mI = mJ";
    }
  }
  return c;
}

CriterionResult cpv_bound(const Filtration& f, const AnalysisReport& report) {
  const auto& co = *report.coefficients;
  const Int rhs = co.e[1] - co.e[0] + report.colength_I + report.mu_I - f.dim() + 1;
  auto c = make("cpv-bound", "f0 <= e1 - e0 + lambda(R/I) + mu(I) - d + 1", co.f0(), rhs,
                report.n_check);
  if (!report.k_is_maximal) {
    c.status = Status::PreconditionNotEstablished;
    c.note = "applies to K = m only";
    return c;
  }
  settle_theorem(c, co.f0() <= rhs);
  return c;
}

CriterionResult goto_equivalences(const Filtration& f, const AnalysisReport& report,
                                  std::optional<GotoEquivalence>& out) {
  auto c = make("goto-equivalences", "G CM <=> (F CM and r <= 1) <=> r <= 1",
                report.reduction->r, 1, report.n_check);
  if (!report.k_is_maximal || f.spec().mode != FiltrationMode::IAdic ||
      !report.minimal_multiplicity.goto_equality) {
    c.status = Status::PreconditionNotEstablished;
    c.note = "needs an I-adic filtration, K = m and I of minimal multiplicity";
    return c;
  }
  GotoEquivalence eq;
  eq.g_cohen_macaulay = report.valabrega_valla.passes;
  eq.r_at_most_one = report.reduction->r <= 1;
  // Without depth G >= d-1, minimal multiplicity forces F non-CM.
  const auto* fiber = report.find("fiber-cm");
  const bool f_cm = fiber && fiber->status == Status::Pass;
  eq.f_cohen_macaulay = f_cm;
  const bool second = f_cm && eq.r_at_most_one;
  out = eq;
  const bool agree = eq.g_cohen_macaulay == second && second == eq.r_at_most_one;
  settle_theorem(c, agree);
  c.note = std::string("G CM: ") + (eq.g_cohen_macaulay ? "yes" : "no") +
           ", F CM: " + (f_cm ? "yes" : "no") + ", r <= 1: " + (eq.r_at_most_one ? "yes" : "no");
  return c;
}

namespace {

// Runs `step`, recording a TheoremViolation as a violated criterion instead of
// aborting the analysis.
template <class Fn>
bool guarded(AnalysisReport& report, const std::string& name, Fn step) {
  try {
    step();
    return true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TheoremViolation) throw;
    CriterionResult c;
    c.name = name;
    c.status = Status::Fail;
    c.violation = true;
    c.bound = report.n_check;
    c.note = e.what();
    report.criteria.push_back(std::move(c));
    return false;
  }
}

}  // namespace

std::optional<Ideal> default_reduction(const FiltrationSpec& spec) {
  if (!spec.ring.is_semigroup() || spec.I1().is_zero()) return std::nullopt;
  Int least = spec.I1().generators().front().exponents[0];
  return minimalize({Monomial{{least}}}, spec.ring);
}

AnalysisReport analyze(const FiltrationSpec& input, const AnalysisOptions& options) {
  FiltrationSpec spec = input;
  if (!spec.J) spec.J = default_reduction(spec);
  if (!spec.J) throw Error(ErrorKind::Precondition, "analysis needs a candidate reduction J");

  Filtration f(spec, std::max(8, options.n_max.value_or(0)));
  const int d = f.dim();

  AnalysisReport report;
  report.ring = f.ring().describe();
  report.mode = spec.mode == FiltrationMode::IAdic ? "i-adic" : "truncated";
  for (const auto& t : spec.terms) report.terms.push_back(t.format());
  report.J = f.J().format();
  report.K = f.K().format();
  report.dim = d;
  report.k_is_maximal = f.k_is_maximal();
  report.colength_K = f.colength_K();
  report.colength_I = *colength(f.I1());
  report.mu_I = static_cast<Int>(f.I1().mu());
  if (auto lj = colength(f.J())) report.colength_J = *lj;

  report.reduction = reduction_number(f, options.reduction_bound);
  const auto& red = *report.reduction;
  if (!red.is_minimal)
    throw Error(ErrorKind::Precondition,
                "J = " + report.J + " is a reduction but not a minimal one (mu(J) != d)");
  report.n_check = options.n_check.value_or(default_check_bound(f, red));
  if (report.n_check <= red.r)
    throw Error(ErrorKind::Precondition, "n_check must exceed the reduction number");

  int n_max = options.n_max.value_or(red.r + d + 4);
  for (int attempt = 0;; ++attempt) {
    report.table = build_table(f, n_max);
    report.n_max = n_max;
    try {
      bool ok = guarded(report, "coefficient-identities",
                        [&] { report.coefficients = coefficient_report(report.table, d); });
      if (!ok) return report;
      break;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotYetPolynomial || options.n_max || attempt >= 8) throw;
      n_max += d + 2;
    }
  }
  const auto& co = *report.coefficients;
  {
    auto c = make("coefficient-identities", "g_i = e_i - f_{i-1}", co.g[1], co.e[1] - co.f[0],
                  report.n_check);
    c.status = Status::Pass;
    report.criteria.push_back(c);
  }

  if (d == 2) {
    report.lemma = fundamental_lemma_rows(f, report.table, co.e[0], 2, report.n_max);
    auto bad = std::find_if(report.lemma.begin(), report.lemma.end(),
                            [](const LemmaRow& r) { return !r.equal(); });
    const LemmaRow& shown = bad != report.lemma.end() ? *bad : report.lemma.back();
    auto c = make("fundamental-lemma", "e0 - Delta^2 H_K(n) = lambda(KI_n/KJI_{n-1}) - "
                  "lambda((KI_{n-1}:J)/KI_{n-2})", shown.lhs, shown.rhs, report.n_max);
    c.witness_n = shown.n;
    settle_theorem(c, bad == report.lemma.end());
    report.criteria.push_back(c);

    if (guarded(report, "g-from-v-sequence",
                [&] { report.vseq = v_sequence(f, report.table, co); })) {
      auto v = make("g-from-v-sequence", "g1 = sum v_n", report.vseq->g1, co.g[1], report.n_max);
      v.status = Status::Pass;
      v.note = "g2 = " + std::to_string(report.vseq->g2);
      report.criteria.push_back(v);
    }
  }
  if (d == 1 && f.J().mu() == 1) {
    if (guarded(report, "g1-onedim",
                [&] { report.g1_onedim = g1_onedim(f, report.table, co, red.r); })) {
      auto c = make("g1-onedim", "g1 = sum lambda(KI_n/xKI_{n-1}) - lambda(R/K)",
                    *report.g1_onedim, co.g[1], report.n_max);
      c.status = Status::Pass;
      report.criteria.push_back(c);
    }
  }

  report.series = fiber_hilbert_series(report.table, co.f, d);
  report.depth_g = hm_depth_G(f, red, co.e[1], report.n_check);
  report.valabrega_valla = valabrega_valla(f, report.n_check);
  try {
    report.fiber_sequence = fiber_regular_sequence_check(f, f.J().generators(), report.n_check);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Precondition) throw;
  }

  {
    const bool amd = report.depth_g.cls != DepthClass::Low;
    auto c = make("depth-g", "e1 = sum lambda(I_n/JI_{n-1})", co.e[1], report.depth_g.sum_amd,
                  report.n_check);
    c.status = amd ? Status::Pass : Status::Fail;
    c.note = std::string("depth G: ") + to_string(report.depth_g.cls) +
             " (sum lambda((I_n+J)/J) = " + std::to_string(report.depth_g.sum_cm) + ")";
    if (d == 1 && !amd) {
      c.violation = true;
      c.note += "; one-dimensional rings always have depth G >= 0";
    }
    report.criteria.push_back(c);
  }
  {
    auto c = make("valabrega-valla", "J n I_n = J I_{n-1}", report.valabrega_valla.passes,
                  report.depth_g.cls == DepthClass::CohenMacaulay, report.n_check);
    c.witness_n = report.valabrega_valla.failing_n;
    c.status = report.valabrega_valla.passes ? Status::Pass : Status::Fail;
    if (report.valabrega_valla.passes && report.depth_g.cls != DepthClass::CohenMacaulay) {
      c.violation = true;
      c.note = "regular sequence in G but e1 != sum lambda((I_n+J)/J)";
    }
    report.criteria.push_back(c);
  }

  report.criteria.push_back(check_g1_lower_bound(f, report));
  report.criteria.push_back(check_g1_upper_bound(f, report));
  report.criteria.push_back(cpv_bound(f, report));
  report.criteria.push_back(check_fiber_cm(f, report));
  report.criteria.push_back(check_fiber_depth_d_minus_1(f, report));

  {
    auto c = make("fiber-series-nonnegative", "min h_k >= 0",
                  *std::min_element(report.series->h.begin(), report.series->h.end()), 0,
                  report.n_max);
    c.status = report.series->has_negative() ? Status::Fail : Status::Pass;
    if (report.series->has_negative()) c.note = "negative coefficient: F_K is not Cohen-Macaulay";
    report.criteria.push_back(c);
  }
  {
    const auto* fiber = report.find("fiber-cm");
    auto c = make("soundness-chain", "F CM => J regular in F_K and h >= 0",
                  fiber->status == Status::Pass, 1, report.n_check);
    c.status = Status::PreconditionNotEstablished;
    if (fiber->status == Status::Pass) {
      bool ok = !report.series->has_negative();
      if (report.depth_g.cls == DepthClass::CohenMacaulay && report.fiber_sequence)
        ok = ok && report.fiber_sequence->passes;
      settle_theorem(c, ok);
    }
    report.criteria.push_back(c);
  }

  report.criteria.push_back(check_minimal_multiplicity(f, report, report.minimal_multiplicity));
  {
    const bool hyp = intersect(multiply(f.K(), f.I1()), f.J()) == multiply(f.K(), f.J()) &&
                     report.minimal_multiplicity.g1_is_minus_colength_k;
    auto c = make("minimal-multiplicity-converse", "KI n J = KJ and g1 = -lambda(R/K) => KI = KJ",
                  hyp, report.minimal_multiplicity.ki_equals_kj, report.n_check);
    if (hyp)
      settle_theorem(c, report.minimal_multiplicity.ki_equals_kj);
    else
      c.status = Status::PreconditionNotEstablished;
    report.criteria.push_back(c);
  }
  {
    // Least t with KI_n n J = KJI_{n-1} (n <= t) and KI_{t+1} = KJI_t.
    std::optional<int> t;
    for (int k = 0; k <= report.n_check && !t; ++k) {
      bool ok = f.kterm(k + 1) == f.kjterm(k);
      for (int n = 1; n <= k && ok; ++n) ok = intersect(f.kterm(n), f.J()) == f.kjterm(n - 1);
      if (ok) t = k;
    }
    BoundedSum su, sl;
    const Int upper = upper_sum(f, report, su);
    const Int lower = lower_sum(f, report, sl);
    auto c = make("intersection-condition", "g1 = upper sum = lower sum", co.g[1], upper,
                  report.n_check);
    c.witness_n = t;
    if (t) {
      bool ok = upper == lower && co.g[1] == upper;
      const auto* fiber = report.find("fiber-cm");
      if (depth_g_at_least_d_minus_1(report)) ok = ok && fiber->status == Status::Pass;
      settle_theorem(c, ok);
      c.note = "lower sum = " + std::to_string(lower);
    } else {
      c.status = Status::PreconditionNotEstablished;
    }
    report.criteria.push_back(c);
  }
  report.criteria.push_back(goto_equivalences(f, report, report.goto_equivalence));
  return report;
}

}  // namespace fibrekit
