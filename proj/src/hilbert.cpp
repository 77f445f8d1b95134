#include "fibrekit/hilbert.hpp"

#include <sstream>

#include "fibrekit/error.hpp"

namespace fibrekit {

Int binomial(Int a, Int k) {
  if (k < 0) return 0;
  // Each prefix product of i+1 consecutive integers is divisible by (i+1)!.
  Int r = 1;
  for (Int i = 0; i < k; ++i) r = r * (a - i) / (i + 1);
  return r;
}

namespace {

Int basis_value(int degree, int i, Int n) { return binomial(n + degree - 1 - i, degree - i); }

const char* target_name(FitTarget t) {
  switch (t) {
    case FitTarget::E: return "lambda(R/I_n)";
    case FitTarget::G: return "lambda(R/KI_n)";
    case FitTarget::F: return "lambda(I_n/KI_n)";
  }
  return "?";
}

}  // namespace

Int CoefficientSet::value_at(Int n) const {
  Int v = 0;
  for (int i = 0; i <= degree; ++i) {
    Int term = c[i] * basis_value(degree, i, n);
    v += (i % 2 == 0) ? term : -term;
  }
  return v;
}

CoefficientSet fit_coefficients(std::span<const Int> values, int d, Basis basis,
                                FitTarget target, std::optional<int> window) {
  const int degree = basis == Basis::StandardD ? d : d - 1;
  if (d < 1 || degree < 0) throw Error(ErrorKind::Precondition, "fit needs d >= 1");
  const int w = window.value_or(d + 2);
  const int count = static_cast<int>(values.size());
  if (count < degree + 1 + w)
    throw Error(ErrorKind::NotYetPolynomial,
                std::string("too few values to fit ") + target_name(target) + "; raise n_max");

  CoefficientSet out;
  out.target = target;
  out.dim = d;
  out.degree = degree;
  out.window = w;
  out.c.assign(degree + 1, 0);

  // Peel the basis from the top: Delta^{degree-i} kills every B_k with k < i
  // and maps B_i to 1.
  const int first = count - 1 - degree;
  std::vector<Int> residual(values.begin() + first, values.end());
  for (int i = 0; i <= degree; ++i) {
    const int order = degree - i;
    Int diff = 0;
    for (int t = 0; t <= order; ++t) {
      Int term = binomial(order, t) * residual[degree - t];
      diff += (t % 2 == 0) ? term : -term;
    }
    out.c[i] = (i % 2 == 0) ? diff : -diff;
    for (int k = 0; k <= degree; ++k) residual[k] -= diff * basis_value(degree, i, first + k);
  }
  for (Int r : residual)
    if (r != 0) throw Error(ErrorKind::Internal, "basis peeling left a residual");

  int postulation = count;
  while (postulation > 0 && out.value_at(postulation - 1) == values[postulation - 1])
    --postulation;
  out.postulation = postulation;
  if (count - postulation < degree + 1 + w)
    throw Error(ErrorKind::NotYetPolynomial,
                std::string(target_name(target)) + " is not yet polynomial at n = " +
                    std::to_string(postulation - 1) + "; raise n_max");
  return out;
}

CoefficientReport coefficient_report(const HilbertTable& table, int d) {
  CoefficientReport out{
      fit_coefficients(table.H, d, Basis::StandardD, FitTarget::E),
      fit_coefficients(table.HK, d, Basis::StandardD, FitTarget::G),
      fit_coefficients(table.HF, d, Basis::FiberDMinus1, FitTarget::F),
  };
  if (out.g[0] != out.e[0])
    throw Error(ErrorKind::TheoremViolation, "g_0 != e_0");
  for (int i = 1; i <= d; ++i)
    if (out.g[i] != out.e[i] - out.f[i - 1])
      throw Error(ErrorKind::TheoremViolation,
                  "g_" + std::to_string(i) + " != e_" + std::to_string(i) + " - f_" +
                      std::to_string(i - 1));
  return out;
}

namespace {

Int lemma_rhs(const Filtration& f, int n) {
  const Ideal colon_part = colon(f.kterm(n - 1), f.J());
  return quotient_length(f.kterm(n), f.kjterm(n - 1)) -
         quotient_length(colon_part, f.kterm(n - 2));
}

void require_dim(const Filtration& f, int d, const char* what) {
  if (f.dim() != d)
    throw Error(ErrorKind::Precondition,
                std::string(what) + " requires dimension " + std::to_string(d));
}

}  // namespace

VSequence v_sequence(const Filtration& f, const HilbertTable& table,
                     const CoefficientReport& coeffs) {
  require_dim(f, 2, "v_sequence");
  const Int e0 = coeffs.e[0];
  const Int lk = f.colength_K();
  VSequence out;
  out.v.push_back(e0);
  if (table.n_max >= 1) out.v.push_back(e0 - table.HK[1] + lk);
  for (int n = 2; n <= table.n_max; ++n) out.v.push_back(lemma_rhs(f, n));

  out.g2 = lk;
  for (std::size_t n = 1; n < out.v.size(); ++n) {
    out.g1 += out.v[n];
    out.g2 += static_cast<Int>(n - 1) * out.v[n];
  }
  if (out.g1 != coeffs.g[1] || out.g2 != coeffs.g[2])
    throw Error(ErrorKind::TheoremViolation,
                "v-sequence gives (g1, g2) = (" + std::to_string(out.g1) + ", " +
                    std::to_string(out.g2) + ") but the fit gives (" +
                    std::to_string(coeffs.g[1]) + ", " + std::to_string(coeffs.g[2]) + ")");
  return out;
}

std::vector<LemmaRow> fundamental_lemma_rows(const Filtration& f, const HilbertTable& table,
                                             Int e0, int n_from, int n_to) {
  require_dim(f, 2, "fundamental lemma");
  if (n_from < 2 || n_to > table.n_max)
    throw Error(ErrorKind::Precondition, "fundamental lemma range must lie in [2, n_max]");
  std::vector<LemmaRow> rows;
  for (int n = n_from; n <= n_to; ++n) {
    const Int second_difference = table.HK[n] - 2 * table.HK[n - 1] + table.HK[n - 2];
    rows.push_back(LemmaRow{n, e0 - second_difference, lemma_rhs(f, n)});
  }
  return rows;
}

std::vector<LemmaRow> fundamental_lemma_table(const Filtration& f, const HilbertTable& table,
                                              Int e0, int n_from, int n_to) {
  auto rows = fundamental_lemma_rows(f, table, e0, n_from, n_to);
  for (const auto& row : rows)
    if (!row.equal())
      throw Error(ErrorKind::TheoremViolation,
                  "fundamental lemma fails at n = " + std::to_string(row.n) + ": " +
                      std::to_string(row.lhs) + " != " + std::to_string(row.rhs));
  return rows;
}

bool SeriesNumerator::has_negative() const {
  for (Int c : h)
    if (c < 0) return true;
  return false;
}

std::string SeriesNumerator::format() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < h.size(); ++k) {
    Int c = h[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Int mag = c < 0 ? -c : c;
    if (k == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag;
      out << 't';
      if (k > 1) out << '^' << k;
    }
    first = false;
  }
  return first ? "0" : out.str();
}

SeriesNumerator fiber_hilbert_series(const HilbertTable& table, const CoefficientSet& f, int d) {
  if (f.target != FitTarget::F || f.dim != d)
    throw Error(ErrorKind::Precondition, "series needs the fiber-cone fit of the same dimension");
  auto value = [&](Int n) -> Int {
    if (n < 0) return 0;
    if (n <= table.n_max) return table.HF[n];
    return f.value_at(n);
  };
  // h_k = Delta^d of the extended sequence; vanishes for k >= postulation + d.
  const Int vanish_from = static_cast<Int>(f.postulation) + d;
  SeriesNumerator out;
  out.dim = d;
  for (Int k = 0; k < vanish_from + d + 2; ++k) {
    Int hk = 0;
    for (int j = 0; j <= d; ++j) {
      Int term = binomial(d, j) * value(k - j);
      hk += (j % 2 == 0) ? term : -term;
    }
    if (k >= vanish_from && hk != 0)
      throw Error(ErrorKind::Internal, "fiber series numerator does not terminate");
    out.h.push_back(hk);
  }
  while (out.h.size() > 1 && out.h.back() == 0) out.h.pop_back();

  for (int n = 0; n <= table.n_max; ++n) {
    Int regenerated = 0;
    for (std::size_t k = 0; k < out.h.size() && static_cast<int>(k) <= n; ++k)
      regenerated += out.h[k] * binomial(n - static_cast<Int>(k) + d - 1, d - 1);
    if (regenerated != table.HF[n])
      throw Error(ErrorKind::Internal,
                  "fiber series does not regenerate H_F(" + std::to_string(n) + ")");
  }
  return out;
}

Int g1_onedim(const Filtration& f, const HilbertTable& table, const CoefficientReport& coeffs,
              int reduction_number) {
  require_dim(f, 1, "g1_onedim");
  if (f.J().mu() != 1) throw Error(ErrorKind::Precondition, "g1_onedim needs a principal J");
  if (table.n_max <= reduction_number)
    throw Error(ErrorKind::Undetermined, "n_max must exceed the reduction number");
  Int total = -f.colength_K();
  for (int n = 1; n <= table.n_max; ++n) {
    Int summand = quotient_length(f.kterm(n), f.kjterm(n - 1));
    if (n > reduction_number && summand != 0)
      throw Error(ErrorKind::Undetermined,
                  "lambda(KI_n/xKI_{n-1}) nonzero past the reduction number at n = " +
                      std::to_string(n));
    total += summand;
  }
  if (total != coeffs.g[1])
    throw Error(ErrorKind::TheoremViolation,
                "one-dimensional g_1 formula gives " + std::to_string(total) + ", fit gives " +
                    std::to_string(coeffs.g[1]));
  return total;
}

}  // namespace fibrekit
