#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fibrekit/filtration.hpp"

namespace fibrekit {

/// Generalized binomial coefficient C(a, k) = a(a-1)...(a-k+1)/k!, any integer a.
Int binomial(Int a, Int k);

/// Which Hilbert function a coefficient set describes:
///   E: lambda(R/I_n)    = sum_i (-1)^i e_i C(n+d-1-i, d-i)
///   G: lambda(R/KI_n)   = sum_i (-1)^i g_i C(n+d-1-i, d-i)
///   F: lambda(I_n/KI_n) = sum_i (-1)^i f_i C(n+d-2-i, d-1-i)
enum class FitTarget { E, G, F };

/// Basis of degree d (E, G) or d-1 (F).
enum class Basis { StandardD, FiberDMinus1 };

struct CoefficientSet {
  FitTarget target = FitTarget::E;
  int dim = 0;
  /// Degree of the fitted polynomial (d or d-1).
  int degree = 0;
  std::vector<Int> c;
  /// Least n from which the polynomial agrees with the data.
  int postulation = 0;
  int window = 0;

  Int operator[](std::size_t i) const { return i < c.size() ? c[i] : 0; }
  /// Value of the polynomial at n.
  Int value_at(Int n) const;
};

/// Fits the last degree+1 values exactly and validates the fit on `window`
/// further trailing values (default d + 2). Throws NotYetPolynomial otherwise.
CoefficientSet fit_coefficients(std::span<const Int> values, int d, Basis basis,
                                FitTarget target, std::optional<int> window = std::nullopt);

struct CoefficientReport {
  CoefficientSet e;
  CoefficientSet g;
  CoefficientSet f;

  /// Multiplicity of the fiber cone.
  Int f0() const { return f[0]; }
};

/// Fits all three tables and checks g_0 = e_0 and g_i = e_i - f_{i-1}
/// (TheoremViolation on failure).
CoefficientReport coefficient_report(const HilbertTable& table, int d);

/// v_0 = e_0, v_1 = e_0 - lambda(R/KI_1) + lambda(R/K) and, for n >= 2,
/// v_n = lambda(KI_n/KJI_{n-1}) - lambda((KI_{n-1} : J)/KI_{n-2}).
struct VSequence {
  std::vector<Int> v;
  Int g1 = 0;  // sum_{n>=1} v_n
  Int g2 = 0;  // sum_{n>=1} (n-1) v_n + lambda(R/K)
};

/// Two-dimensional rings only. The derived g_1, g_2 are cross-checked against
/// the fitted ones (TheoremViolation on mismatch).
VSequence v_sequence(const Filtration& f, const HilbertTable& table,
                     const CoefficientReport& coeffs);

/// One row of e_0 - Delta^2 H_K(n) = lambda(KI_n/KJI_{n-1}) - lambda((KI_{n-1}:J)/KI_{n-2}).
struct LemmaRow {
  int n = 0;
  Int lhs = 0;
  Int rhs = 0;
  bool equal() const { return lhs == rhs; }
};

/// Two-dimensional rings only, n in [n_from, n_to] with n_from >= 2 and
/// n_to <= table.n_max. Throws TheoremViolation if any row differs; use
/// `fundamental_lemma_rows` to get the rows unchecked.
std::vector<LemmaRow> fundamental_lemma_table(const Filtration& f, const HilbertTable& table,
                                              Int e0, int n_from, int n_to);
std::vector<LemmaRow> fundamental_lemma_rows(const Filtration& f, const HilbertTable& table,
                                             Int e0, int n_from, int n_to);

/// Numerator h(t) of sum_n H_F(n) t^n = h(t)/(1-t)^d.
struct SeriesNumerator {
  int dim = 0;
  std::vector<Int> h;

  bool has_negative() const;
  /// "1 + 2t + 2t^2 - t^3"
  std::string format() const;
};

/// Extends H_F beyond n_max with the fitted polynomial, so the numerator is
/// exact. Throws Internal if it does not terminate or fails to regenerate the
/// table.
SeriesNumerator fiber_hilbert_series(const HilbertTable& table, const CoefficientSet& f, int d);

/// One-dimensional rings only, J = (x):
/// g_1 = sum_{n>=1} lambda(KI_n / xKI_{n-1}) - lambda(R/K), checked against the fit.
Int g1_onedim(const Filtration& f, const HilbertTable& table, const CoefficientReport& coeffs,
              int reduction_number);

}  // namespace fibrekit
