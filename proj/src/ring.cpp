#include "fibrekit/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fibrekit/error.hpp"

namespace fibrekit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::RingMismatch: return "ring mismatch";
    case ErrorKind::NotHilbert: return "not a Hilbert filtration";
    case ErrorKind::NotYetPolynomial: return "not yet polynomial";
    case ErrorKind::NotAReduction: return "not a reduction within bound";
    case ErrorKind::Precondition: return "precondition not met";
    case ErrorKind::Undetermined: return "undetermined";
    case ErrorKind::TheoremViolation: return "theorem violation";
    case ErrorKind::Internal: return "internal error";
  }
  return "unknown error";
}

struct Ring::Data {
  RingKind kind;
  std::vector<std::string> variables;
  std::vector<Int> generators;
  std::vector<bool> member;  // member[s] for 0 <= s <= table_bound
  Int frobenius = -1;
  Int table_bound = 0;
};

Ring Ring::power_series(std::vector<std::string> variables) {
  if (variables.empty())
    throw Error(ErrorKind::InvalidInput, "power series ring needs at least one variable");
  auto sorted = variables;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::InvalidInput, "duplicate variable name");
  auto data = std::make_shared<Data>();
  data->kind = RingKind::PowerSeriesMonomial;
  data->variables = std::move(variables);
  return Ring(std::move(data));
}

Ring Ring::power_series(int dim) {
  if (dim < 1) throw Error(ErrorKind::InvalidInput, "dimension must be positive");
  std::vector<std::string> names;
  if (dim <= 3) {
    const char* xyz[] = {"x", "y", "z"};
    for (int i = 0; i < dim; ++i) names.emplace_back(xyz[i]);
  } else {
    for (int i = 1; i <= dim; ++i) names.push_back("x" + std::to_string(i));
  }
  return power_series(std::move(names));
}

Ring Ring::numerical_semigroup(std::vector<Int> generators) {
  if (generators.empty())
    throw Error(ErrorKind::InvalidInput, "semigroup needs at least one generator");
  for (Int a : generators)
    if (a <= 0) throw Error(ErrorKind::InvalidInput, "semigroup generators must be positive");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  Int g = 0;
  for (Int a : generators) g = std::gcd(g, a);
  if (g != 1)
    throw Error(ErrorKind::InvalidInput,
                "semigroup generators must be coprime (gcd = " + std::to_string(g) + ")");

  const Int smallest = generators.front();
  const Int largest = generators.back();
  // Schur: the Frobenius number is at most (a_min - 1)(a_max - 1) - 1.
  const Int schur = std::max<Int>((smallest - 1) * (largest - 1) - 1, 0);
  const Int bound = schur + 2 * largest;

  std::vector<bool> member(static_cast<std::size_t>(bound) + 1, false);
  member[0] = true;
  for (Int s = 1; s <= bound; ++s)
    for (Int a : generators)
      if (a <= s && member[s - a]) {
        member[s] = true;
        break;
      }

  Int frobenius = -1;
  for (Int s = bound; s >= 0; --s)
    if (!member[s]) {
      frobenius = s;
      break;
    }
  if (bound - frobenius < smallest)
    throw Error(ErrorKind::Internal, "semigroup table too short to certify the conductor");

  // Drop generators that are sums of smaller ones.
  std::vector<Int> minimal;
  for (Int a : generators) {
    bool redundant = false;
    for (Int b : minimal)
      if (member[a - b]) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(a);
  }

  auto data = std::make_shared<Data>();
  data->kind = RingKind::NumericalSemigroup;
  data->variables = {"t"};
  data->generators = std::move(minimal);
  data->member = std::move(member);
  data->frobenius = frobenius;
  data->table_bound = bound;
  return Ring(std::move(data));
}

RingKind Ring::kind() const { return data_->kind; }

int Ring::dim() const {
  return is_semigroup() ? 1 : static_cast<int>(data_->variables.size());
}

int Ring::arity() const { return dim(); }

const std::vector<std::string>& Ring::variables() const { return data_->variables; }

const std::vector<Int>& Ring::semigroup_generators() const { return data_->generators; }

Int Ring::frobenius() const { return data_->frobenius; }

Int Ring::conductor() const { return data_->frobenius + 1; }

Int Ring::table_bound() const { return data_->table_bound; }

bool Ring::in_semigroup(Int s) const {
  if (s < 0) return false;
  if (s > data_->frobenius) return true;
  return data_->member[static_cast<std::size_t>(s)];
}

bool Ring::valid(const Monomial& m) const {
  if (static_cast<int>(m.exponents.size()) != arity()) return false;
  if (is_semigroup()) return in_semigroup(m.exponents[0]);
  return std::all_of(m.exponents.begin(), m.exponents.end(), [](Int e) { return e >= 0; });
}

Monomial Ring::one() const { return Monomial{std::vector<Int>(arity(), 0)}; }

std::vector<Monomial> Ring::maximal_ideal_generators() const {
  std::vector<Monomial> gens;
  if (is_semigroup()) {
    for (Int a : data_->generators) gens.push_back(Monomial{{a}});
  } else {
    for (int i = 0; i < dim(); ++i) {
      Monomial m = one();
      m.exponents[i] = 1;
      gens.push_back(std::move(m));
    }
  }
  return gens;
}

std::string Ring::format(const Monomial& m) const {
  if (static_cast<int>(m.exponents.size()) != arity()) {
    // Not a monomial of this ring; show the raw exponents for diagnostics.
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < m.exponents.size(); ++i) out << (i ? "," : "") << m.exponents[i];
    out << ']';
    return out.str();
  }
  if (is_semigroup()) {
    Int s = m.exponents[0];
    if (s == 0) return "1";
    return s == 1 ? "t" : "t^" + std::to_string(s);
  }
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << data_->variables[i];
    if (m.exponents[i] != 1) out << '^' << m.exponents[i];
  }
  return first ? "1" : out.str();
}

std::string Ring::describe() const {
  std::ostringstream out;
  if (is_semigroup()) {
    out << "k[[";
    for (std::size_t i = 0; i < data_->generators.size(); ++i)
      out << (i ? ", " : "") << "t^" << data_->generators[i];
    out << "]]";
  } else {
    out << "k[[";
    for (std::size_t i = 0; i < data_->variables.size(); ++i)
      out << (i ? ", " : "") << data_->variables[i];
    out << "]]";
  }
  return out.str();
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->kind == b.data_->kind && a.data_->generators == b.data_->generators &&
         a.data_->variables.size() == b.data_->variables.size();
}

}  // namespace fibrekit
