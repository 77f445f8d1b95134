#include "fibrekit/filtration.hpp"

#include <string>

#include "fibrekit/error.hpp"

namespace fibrekit {

FiltrationSpec i_adic(const Ideal& I, std::optional<Ideal> J) {
  return i_adic(I, Ideal::maximal(I.ring()), std::move(J));
}

FiltrationSpec i_adic(const Ideal& I, const Ideal& K, std::optional<Ideal> J) {
  return FiltrationSpec{I.ring(), FiltrationMode::IAdic, {I}, K, std::move(J), std::nullopt};
}

Filtration::Filtration(FiltrationSpec spec, int verify_horizon) : spec_(std::move(spec)) {
  if (spec_.terms.empty()) throw Error(ErrorKind::InvalidInput, "filtration has no I_1");
  if (spec_.mode == FiltrationMode::IAdic && spec_.terms.size() != 1)
    throw Error(ErrorKind::InvalidInput, "an I-adic filtration is given by I_1 alone");
  for (const auto& t : spec_.terms)
    if (!(t.ring() == spec_.ring)) throw Error(ErrorKind::RingMismatch, "filtration term ring");
  if (!(spec_.K.ring() == spec_.ring)) throw Error(ErrorKind::RingMismatch, "K ring");

  const Ideal& I = spec_.I1();
  if (I.is_unit()) throw Error(ErrorKind::InvalidInput, "I_1 must be a proper ideal");
  if (!colength(I)) throw Error(ErrorKind::NotHilbert, "I_1 = " + I.format() + " is not m-primary");
  if (!contains(spec_.K, I))
    throw Error(ErrorKind::InvalidInput, "K = " + spec_.K.format() + " does not contain I_1");
  auto lk = colength(spec_.K);
  if (!lk) throw Error(ErrorKind::NotHilbert, "K is not m-primary");
  colength_K_ = *lk;
  if (spec_.J) {
    if (!(spec_.J->ring() == spec_.ring)) throw Error(ErrorKind::RingMismatch, "J ring");
    if (!contains(I, *spec_.J))
      throw Error(ErrorKind::InvalidInput, "J = " + spec_.J->format() + " is not contained in I_1");
  }

  const int horizon = std::max(verify_horizon, stored_terms() + 1);
  for (int n = 0; n < horizon; ++n) {
    if (!contains(kterm(n), term(n + 1)))
      throw Error(ErrorKind::InvalidInput,
                  "I_" + std::to_string(n + 1) + " is not contained in K I_" + std::to_string(n));
    if (spec_.mode != FiltrationMode::TruncatedGood) continue;
    if (!contains(term(n), term(n + 1)))
      throw Error(ErrorKind::InvalidInput, "filtration is not decreasing at n = " +
                                               std::to_string(n + 1));
    for (int m = 1; m <= n && n + m <= horizon; ++m)
      if (!contains(term(n + m), multiply(term(n), term(m))))
        throw Error(ErrorKind::InvalidInput, "I_" + std::to_string(n) + " I_" + std::to_string(m) +
                                                 " is not contained in I_" +
                                                 std::to_string(n + m));
  }
}

const Ideal& Filtration::J() const {
  if (!spec_.J) throw Error(ErrorKind::Precondition, "no reduction J was supplied");
  return *spec_.J;
}

bool Filtration::k_is_maximal() const { return spec_.K == Ideal::maximal(spec_.ring); }

const Ideal& Filtration::term(int n) const {
  if (n < 0) throw Error(ErrorKind::Precondition, "negative filtration index");
  std::lock_guard lock(mutex_);
  if (auto it = terms_.find(n); it != terms_.end()) return it->second;
  Ideal value = [&] {
    if (n == 0) return Ideal::unit(spec_.ring);
    if (n <= stored_terms()) return spec_.terms[n - 1];
    return multiply(I1(), term(n - 1));
  }();
  return terms_.emplace(n, std::move(value)).first->second;
}

const Ideal& Filtration::kterm(int n) const {
  std::lock_guard lock(mutex_);
  if (auto it = kterms_.find(n); it != kterms_.end()) return it->second;
  Ideal value = multiply(spec_.K, term(n));
  return kterms_.emplace(n, std::move(value)).first->second;
}

const Ideal& Filtration::jterm(int n) const {
  std::lock_guard lock(mutex_);
  if (auto it = jterms_.find(n); it != jterms_.end()) return it->second;
  Ideal value = multiply(J(), term(n));
  return jterms_.emplace(n, std::move(value)).first->second;
}

const Ideal& Filtration::kjterm(int n) const {
  std::lock_guard lock(mutex_);
  if (auto it = kjterms_.find(n); it != kjterms_.end()) return it->second;
  Ideal value = multiply(spec_.K, jterm(n));
  return kjterms_.emplace(n, std::move(value)).first->second;
}

HilbertTable build_table(const Filtration& f, int n_max) {
  if (n_max < 0) throw Error(ErrorKind::Precondition, "negative n_max");
  HilbertTable table;
  table.n_max = n_max;
  for (int n = 0; n <= n_max; ++n) {
    auto h = colength(f.term(n));
    auto hk = colength(f.kterm(n));
    if (!h || !hk)
      throw Error(ErrorKind::NotHilbert,
                  "infinite colength at n = " + std::to_string(n) + ": filtration is not Hilbert");
    Int hf = quotient_length(f.term(n), f.kterm(n));
    if (*hk != *h + hf)
      throw Error(ErrorKind::Internal, "H_K != H + H_F at n = " + std::to_string(n));
    table.H.push_back(*h);
    table.HK.push_back(*hk);
    table.HF.push_back(hf);
  }
  return table;
}

}  // namespace fibrekit
