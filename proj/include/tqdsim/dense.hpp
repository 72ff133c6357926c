#pragma once
// Dense exact amplitude oracle for n <= 22 qubits. Used to cross-check the
// PhaseState path; same scalar ring, so agreement means bitwise equality.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tqdsim/genop.hpp"
#include "tqdsim/rng.hpp"
#include "tqdsim/scalar.hpp"
#include "tqdsim/state.hpp"

namespace tqdsim {

class DenseState {
 public:
  DenseState() = default;
  explicit DenseState(std::size_t n) : n_(n) {
    if (n > 22) throw std::invalid_argument("DenseState: n > 22");
    amps_.assign(std::size_t(1) << n, Scalar::zero());
  }

  static DenseState from_phase_state(const PhaseState& s) {
    DenseState d(s.num_qubits());
    for (const auto& t : s.terms()) {
      uint64_t npts = uint64_t(1) << t.supp.dim();
      for (uint64_t i = 0; i < npts; ++i) {
        Bitvec x = t.supp.point(i);
        d.amps_[index_of(x)] += t.coeff * Scalar::omega_pow(t.phase.eval(x));
      }
    }
    return d;
  }

  std::size_t num_qubits() const { return n_; }
  const Scalar& amp(uint64_t idx) const { return amps_[idx]; }
  Scalar& amp(uint64_t idx) { return amps_[idx]; }
  std::size_t dim() const { return amps_.size(); }

  static uint64_t index_of(const Bitvec& x) {
    uint64_t idx = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x.get(i)) idx |= uint64_t(1) << i;
    return idx;
  }
  Bitvec bits_of(uint64_t idx) const {
    Bitvec b(n_);
    for (std::size_t i = 0; i < n_; ++i)
      if ((idx >> i) & 1) b.set(i, true);
    return b;
  }

  // ---- gates --------------------------------------------------------------
  void x(uint32_t q) {
    uint64_t m = uint64_t(1) << q;
    for (uint64_t i = 0; i < amps_.size(); ++i)
      if (!(i & m)) std::swap(amps_[i], amps_[i | m]);
  }
  void phase_on(uint32_t q, int e) {
    uint64_t m = uint64_t(1) << q;
    Scalar w = Scalar::omega_pow(e);
    for (uint64_t i = 0; i < amps_.size(); ++i)
      if (i & m) amps_[i] *= w;
  }
  void z(uint32_t q) { phase_on(q, 4); }
  void s(uint32_t q) { phase_on(q, 2); }
  void t(uint32_t q) { phase_on(q, 1); }
  void tdg(uint32_t q) { phase_on(q, 7); }
  void cz(uint32_t a, uint32_t b) {
    uint64_t m = (uint64_t(1) << a) | (uint64_t(1) << b);
    for (uint64_t i = 0; i < amps_.size(); ++i)
      if ((i & m) == m) amps_[i] = -amps_[i];
  }
  void cs(uint32_t a, uint32_t b, bool dagger = false) {
    uint64_t m = (uint64_t(1) << a) | (uint64_t(1) << b);
    Scalar w = Scalar::omega_pow(dagger ? 6 : 2);
    for (uint64_t i = 0; i < amps_.size(); ++i)
      if ((i & m) == m) amps_[i] *= w;
  }
  void ccz(uint32_t a, uint32_t b, uint32_t c) {
    uint64_t m = (uint64_t(1) << a) | (uint64_t(1) << b) | (uint64_t(1) << c);
    for (uint64_t i = 0; i < amps_.size(); ++i)
      if ((i & m) == m) amps_[i] = -amps_[i];
  }
  void cnot(uint32_t c, uint32_t t) {
    uint64_t mc = uint64_t(1) << c, mt = uint64_t(1) << t;
    for (uint64_t i = 0; i < amps_.size(); ++i)
      if ((i & mc) && !(i & mt)) std::swap(amps_[i], amps_[i | mt]);
  }
  void apply_generalized(const GeneralizedOperator& g) {
    std::vector<Scalar> out(amps_.size(), Scalar::zero());
    uint64_t mask = index_of(g.x_mask());
    for (uint64_t i = 0; i < amps_.size(); ++i) {
      if (amps_[i].is_zero()) continue;
      Bitvec xb = bits_of(i);
      int e = (g.global() + g.phase().eval(xb)) % 8;
      out[i ^ mask] += amps_[i] * Scalar::omega_pow(e);
    }
    amps_ = std::move(out);
  }

  // ---- measurement ---------------------------------------------------------
  Scalar norm2() const {
    Scalar acc;
    for (const auto& a : amps_) acc += a.norm2();
    return acc;
  }
  static Scalar inner(const DenseState& a, const DenseState& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("inner: size");
    Scalar acc;
    for (uint64_t i = 0; i < a.amps_.size(); ++i) acc += a.amps_[i].conj() * b.amps_[i];
    return acc;
  }

  MeasurementRecord measure_z(uint32_t q, Rng* rng, int outcome_forced = -1) {
    Scalar before = norm2();
    uint64_t m = uint64_t(1) << q;
    Scalar n0;
    for (uint64_t i = 0; i < amps_.size(); ++i)
      if (!(i & m)) n0 += amps_[i].norm2();
    int outcome;
    if (outcome_forced >= 0) {
      outcome = outcome_forced;
    } else {
      CycQ p0 = CycQ(n0) * CycQ(before).inv();
      outcome = (rng && rng->next_double() < real_approx(p0)) ? 0 : (rng ? 1 : 0);
    }
    Scalar p_sel = outcome == 0 ? n0 : before - n0;
    if (p_sel.is_zero()) throw std::domain_error("dense measure_z: forced outcome has probability 0");
    for (uint64_t i = 0; i < amps_.size(); ++i)
      if ((bool((i & m)) != bool(outcome))) amps_[i] = Scalar::zero();
    MeasurementRecord rec;
    rec.op = "Z" + std::to_string(q);
    rec.outcome = outcome == 0 ? +1 : -1;
    rec.probability = exact_ratio(p_sel, before);
    return rec;
  }

  MeasurementRecord measure_generalized(const GeneralizedOperator& g, Rng* rng,
                                        int outcome_forced = -1) {
    Scalar before = norm2();
    DenseState gpsi = *this;
    gpsi.apply_generalized(g);
    DenseState plus = *this;
    for (uint64_t i = 0; i < amps_.size(); ++i)
      plus.amps_[i] = (plus.amps_[i] + gpsi.amps_[i]).div_pow2(1);
    Scalar np = plus.norm2();
    int outcome;
    if (outcome_forced >= 0) {
      outcome = outcome_forced;
    } else {
      CycQ pq = CycQ(np) * CycQ(before).inv();
      outcome = (rng && rng->next_double() < real_approx(pq)) ? 0 : (rng ? 1 : 0);
    }
    Scalar p_sel;
    if (outcome == 0) {
      p_sel = np;
      *this = std::move(plus);
    } else {
      for (uint64_t i = 0; i < amps_.size(); ++i)
        amps_[i] = (amps_[i] - gpsi.amps_[i]).div_pow2(1);
      p_sel = norm2();
    }
    if (p_sel.is_zero()) throw std::domain_error("dense measure: forced outcome has probability 0");
    MeasurementRecord rec;
    rec.op = g.str();
    rec.outcome = outcome == 0 ? +1 : -1;
    rec.probability = exact_ratio(p_sel, before);
    return rec;
  }

  void apply_projector_half(const GeneralizedOperator& g, int sign) {
    DenseState gpsi = *this;
    gpsi.apply_generalized(g);
    for (uint64_t i = 0; i < amps_.size(); ++i) {
      Scalar v = sign ? (amps_[i] - gpsi.amps_[i]) : (amps_[i] + gpsi.amps_[i]);
      amps_[i] = v.div_pow2(1);
    }
  }

  bool operator==(const DenseState& o) const { return n_ == o.n_ && amps_ == o.amps_; }

 private:
  static double real_approx(const CycQ& q) {
    auto& c = q.coeffs();
    static const double inv_s2 = 0.7071067811865476;
    return c[0].convert_to<double>() +
           (c[1].convert_to<double>() - c[3].convert_to<double>()) * inv_s2;
  }
  static Scalar exact_ratio(const Scalar& num, const Scalar& den) {
    CycQ q = CycQ(num) * CycQ(den).inv();
    Scalar out;
    for (int i = 0; i < 4; ++i) {
      auto c = q.coeffs()[i];
      if (c == 0) continue;
      BigInt nu = mp::numerator(c);
      BigInt de = mp::denominator(c);
      int k = 0;
      while (de % 2 == 0) { de /= 2; ++k; }
      if (de != 1) throw std::domain_error("probability not in dyadic ring");
      bool neg = nu < 0;
      BigInt a = neg ? BigInt(-nu) : nu;
      Scalar acc;
      Scalar shift = Scalar(1);
      Scalar two62 = Scalar(int64_t(1) << 62);
      while (a != 0) {
        BigInt lo = a & ((BigInt(1) << 62) - 1);
        acc += Scalar(lo.convert_to<long long>()) * shift;
        a >>= 62;
        shift *= two62;
      }
      if (neg) acc = -acc;
      out += acc.div_pow2(k) * Scalar::omega_pow(i);
    }
    return out;
  }

  std::size_t n_ = 0;
  std::vector<Scalar> amps_;
};

}  // namespace tqdsim
