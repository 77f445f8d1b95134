#include "fibrekit/ideal.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "fibrekit/error.hpp"

namespace fibrekit {

class IdealBuilder {
 public:
  static Ideal zero(const Ring& ring) {
    Ideal out(ring);
    out.zero_ = true;
    return out;
  }

  // Canonical monomial ideal: drop every generator divisible by another.
  static Ideal monomial(const Ring& ring, std::vector<Monomial> gens) {
    if (gens.empty()) return zero(ring);
    auto degree = [](const Monomial& m) {
      Int d = 0;
      for (Int e : m.exponents) d += e;
      return d;
    };
    std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) {
      Int da = degree(a), db = degree(b);
      return da != db ? da < db : a < b;
    });
    std::vector<Monomial> kept;
    for (auto& g : gens) {
      bool divisible = false;
      for (const auto& k : kept)
        if (divides(k, g)) {
          divisible = true;
          break;
        }
      if (!divisible) kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end());
    Ideal out(ring);
    out.generators_ = std::move(kept);
    return out;
  }

  // Semigroup ideal from a membership predicate on [0, limit); every s >= limit
  // in S must be a member.
  static Ideal semigroup(const Ring& ring, Int limit, const std::function<bool(Int)>& member) {
    Int conductor = 0;
    for (Int s = limit - 1; s >= 0; --s)
      if (ring.in_semigroup(s) && !member(s)) {
        conductor = s + 1;
        break;
      }
    Ideal out(ring);
    out.conductor_ = conductor;
    for (Int s = 0; s < conductor; ++s)
      if (ring.in_semigroup(s) && member(s)) out.finite_.push_back(s);

    const auto& a = ring.semigroup_generators();
    const Int scan = std::max(conductor, ring.conductor()) + a.back();
    for (Int s = 0; s <= scan; ++s) {
      if (!out.contains(Monomial{{s}})) continue;
      bool minimal = true;
      for (Int g : a)
        if (out.contains(Monomial{{s - g}})) {
          minimal = false;
          break;
        }
      if (minimal) out.generators_.push_back(Monomial{{s}});
    }
    return out;
  }

  static bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exponents.size(); ++i)
      if (a.exponents[i] > b.exponents[i]) return false;
    return true;
  }
};

namespace {

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring()))
    throw Error(ErrorKind::RingMismatch, "ideals belong to different rings");
}

Int smallest_element(const Ideal& a) { return a.generators().front().exponents[0]; }

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exponents.size(); ++i)
    out.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
  return out;
}

// Exponent of the smallest pure power of each variable; nullopt if one is missing.
std::optional<std::vector<Int>> bounding_box(const Ideal& a) {
  const int d = a.ring().dim();
  std::vector<Int> box(d, -1);
  for (const auto& g : a.generators()) {
    int support = 0, var = -1;
    for (int i = 0; i < d; ++i)
      if (g.exponents[i] > 0) {
        ++support;
        var = i;
      }
    if (support == 0) return std::vector<Int>(d, 0);
    if (support == 1 && (box[var] < 0 || g.exponents[var] < box[var])) box[var] = g.exponents[var];
  }
  for (Int b : box)
    if (b < 0) return std::nullopt;
  return box;
}

}  // namespace

Ideal Ideal::zero(const Ring& ring) { return IdealBuilder::zero(ring); }

Ideal Ideal::unit(const Ring& ring) {
  if (ring.is_semigroup()) return IdealBuilder::semigroup(ring, 0, [](Int) { return true; });
  return IdealBuilder::monomial(ring, {ring.one()});
}

Ideal Ideal::maximal(const Ring& ring) {
  return minimalize(ring.maximal_ideal_generators(), ring);
}

bool Ideal::is_unit() const {
  return !zero_ && generators_.size() == 1 && generators_[0] == ring_.one();
}

bool Ideal::contains(const Monomial& m) const {
  if (zero_) return false;
  if (ring_.is_semigroup()) {
    Int s = m.exponents.at(0);
    if (!ring_.in_semigroup(s)) return false;
    return s >= conductor_ || std::binary_search(finite_.begin(), finite_.end(), s);
  }
  for (const auto& g : generators_)
    if (IdealBuilder::divides(g, m)) return true;
  return false;
}

std::string Ideal::format() const {
  if (zero_) return "(0)";
  std::ostringstream out;
  out << '(';
  // Power-series generators read best in descending lex order: x^3, x^2*y, y^3.
  std::vector<Monomial> shown = generators_;
  if (!ring_.is_semigroup()) std::reverse(shown.begin(), shown.end());
  for (std::size_t i = 0; i < shown.size(); ++i) out << (i ? ", " : "") << ring_.format(shown[i]);
  out << ')';
  return out.str();
}

bool operator==(const Ideal& a, const Ideal& b) {
  return a.ring_ == b.ring_ && a.zero_ == b.zero_ && a.generators_ == b.generators_;
}

Ideal minimalize(std::span<const Monomial> gens, const Ring& ring) {
  for (const auto& g : gens)
    if (!ring.valid(g))
      throw Error(ErrorKind::InvalidInput, "monomial " + ring.format(g) + " is not an element of " +
                                               ring.describe());
  if (gens.empty()) return Ideal::zero(ring);
  if (!ring.is_semigroup()) return IdealBuilder::monomial(ring, {gens.begin(), gens.end()});

  Int least = gens.front().exponents[0];
  for (const auto& g : gens) least = std::min(least, g.exponents[0]);
  const Int limit = least + ring.conductor() + 1;
  return IdealBuilder::semigroup(ring, limit, [&](Int s) {
    for (const auto& g : gens)
      if (ring.in_semigroup(s - g.exponents[0])) return true;
    return false;
  });
}

Ideal minimalize(std::initializer_list<Monomial> gens, const Ring& ring) {
  return minimalize(std::span<const Monomial>(gens.begin(), gens.size()), ring);
}

Ideal multiply(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const Ring& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  if (!ring.is_semigroup()) {
    std::vector<Monomial> products;
    products.reserve(a.generators().size() * b.generators().size());
    for (const auto& g : a.generators())
      for (const auto& h : b.generators()) {
        Monomial p = g;
        for (std::size_t i = 0; i < p.exponents.size(); ++i) p.exponents[i] += h.exponents[i];
        products.push_back(std::move(p));
      }
    return IdealBuilder::monomial(ring, std::move(products));
  }
  const Int base = smallest_element(a);
  const Int limit = base + std::max(b.conductor(), ring.conductor()) + 1;
  return IdealBuilder::semigroup(ring, limit, [&](Int s) {
    for (Int x = base; x <= s; ++x)
      if (a.contains(Monomial{{x}}) && b.contains(Monomial{{s - x}})) return true;
    return false;
  });
}

Ideal power(const Ideal& a, int n) {
  if (n < 0) throw Error(ErrorKind::Precondition, "negative power");
  Ideal out = Ideal::unit(a.ring());
  for (int i = 0; i < n; ++i) out = multiply(out, a);
  return out;
}

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Ring& ring = a.ring();
  if (!ring.is_semigroup()) {
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return IdealBuilder::monomial(ring, std::move(gens));
  }
  return IdealBuilder::semigroup(ring, std::min(a.conductor(), b.conductor()), [&](Int s) {
    return a.contains(Monomial{{s}}) || b.contains(Monomial{{s}});
  });
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const Ring& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  if (!ring.is_semigroup()) {
    std::vector<Monomial> gens;
    for (const auto& g : a.generators())
      for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
    return IdealBuilder::monomial(ring, std::move(gens));
  }
  return IdealBuilder::semigroup(ring, std::max(a.conductor(), b.conductor()), [&](Int s) {
    return a.contains(Monomial{{s}}) && b.contains(Monomial{{s}});
  });
}

Ideal colon(const Ideal& a, const Monomial& m) {
  const Ring& ring = a.ring();
  if (!ring.valid(m)) throw Error(ErrorKind::InvalidInput, "colon by an element outside the ring");
  if (a.is_zero()) return a;
  if (!ring.is_semigroup()) {
    std::vector<Monomial> gens;
    for (const auto& g : a.generators()) {
      Monomial q = g;
      for (std::size_t i = 0; i < q.exponents.size(); ++i)
        q.exponents[i] = std::max<Int>(0, g.exponents[i] - m.exponents[i]);
      gens.push_back(std::move(q));
    }
    return IdealBuilder::monomial(ring, std::move(gens));
  }
  const Int shift = m.exponents[0];
  return IdealBuilder::semigroup(ring, a.conductor(),
                                 [&](Int s) { return a.contains(Monomial{{s + shift}}); });
}

Ideal colon(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw Error(ErrorKind::Precondition, "colon by the zero ideal");
  std::optional<Ideal> out;
  for (const auto& g : b.generators()) {
    Ideal part = colon(a, g);
    out = out ? intersect(*out, part) : std::move(part);
  }
  return *out;
}

std::optional<Int> colength_by_scan(const Ideal& a) {
  if (a.ring().is_semigroup())
    throw Error(ErrorKind::Precondition, "lattice scan applies to the power-series model");
  if (a.is_zero()) return std::nullopt;
  auto box = bounding_box(a);
  if (!box) return std::nullopt;
  const int d = a.ring().dim();
  const auto& gens = a.generators();
  if (d == 1) return (*box)[0];

  // Walk the first d-1 coordinates of the box; the staircase height over a
  // point p is the least last exponent among generators below p.
  std::vector<Int> p(d - 1, 0);
  Int total = 0;
  while (true) {
    Int height = (*box)[d - 1];
    for (const auto& g : gens) {
      bool below = true;
      for (int i = 0; i < d - 1; ++i)
        if (g.exponents[i] > p[i]) {
          below = false;
          break;
        }
      if (below) height = std::min(height, g.exponents[d - 1]);
    }
    total += height;
    int i = 0;
    for (; i < d - 1; ++i) {
      if (++p[i] < (*box)[i]) break;
      p[i] = 0;
    }
    if (i == d - 1) break;
  }
  return total;
}

std::optional<Int> colength_by_inclusion_exclusion(const Ideal& a) {
  if (a.ring().is_semigroup())
    throw Error(ErrorKind::Precondition, "inclusion-exclusion applies to the power-series model");
  if (a.is_zero()) return std::nullopt;
  auto box = bounding_box(a);
  if (!box) return std::nullopt;
  const auto& gens = a.generators();
  if (gens.size() > kInclusionExclusionCap) return std::nullopt;

  // |box \ A| = |box| - sum over nonempty subsets T of (-1)^{|T|+1} |box n lcm(T)N^d|.
  Int volume = 1;
  for (Int b : *box) volume *= b;
  Int covered = 0;
  std::function<void(std::size_t, const Monomial&, int)> visit = [&](std::size_t start,
                                                                      const Monomial& l, int size) {
    for (std::size_t k = start; k < gens.size(); ++k) {
      Monomial next = size == 0 ? gens[k] : lcm(l, gens[k]);
      Int count = 1;
      for (std::size_t i = 0; i < box->size() && count > 0; ++i)
        count *= std::max<Int>(0, (*box)[i] - next.exponents[i]);
      if (count == 0) continue;  // every superset also misses the box
      covered += (size % 2 == 0) ? count : -count;
      visit(k + 1, next, size + 1);
    }
  };
  visit(0, Monomial{}, 0);
  return volume - covered;
}

std::optional<Int> colength(const Ideal& a) {
  if (a.is_zero()) return std::nullopt;
  const Ring& ring = a.ring();
  if (ring.is_semigroup()) {
    Int count = 0;
    for (Int s = 0; s < a.conductor(); ++s)
      if (ring.in_semigroup(s)) ++count;
    return count - static_cast<Int>(a.finite_part().size());
  }
  auto scanned = colength_by_scan(a);
#ifndef NDEBUG
  if (scanned && a.generators().size() <= kInclusionExclusionCap) {
    auto counted = colength_by_inclusion_exclusion(a);
    if (counted != scanned)
      throw Error(ErrorKind::Internal, "colength routes disagree on " + a.format());
  }
#endif
  return scanned;
}

Int quotient_length(const Ideal& outer, const Ideal& inner) {
  if (!contains(outer, inner))
    throw Error(ErrorKind::Precondition,
                "length of " + outer.format() + "/" + inner.format() + ": not a containment");
  auto lo = colength(outer);
  auto li = colength(inner);
  if (!li || !lo)
    throw Error(ErrorKind::NotHilbert, "infinite colength for " + inner.format());
  return *li - *lo;
}

bool equals(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return a == b;
}

bool contains(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  for (const auto& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

}  // namespace fibrekit
