#pragma once
// Exact phase-decorated stabilizer-style simulation.
//
// A PhaseState is a sum of terms  c * sum_{x in S} w^{P(x)} |x>  with S an
// affine F2 subspace and P a degree<=3 phase polynomial. The supported gate
// set {X, Z, S, T, CZ, CS, CCZ, CNOT} maps terms to terms; generalized
// measurements at most double the term count before consolidation.
//
// States are stored unnormalized. The physical state is stored/sqrt(norm2());
// all probabilities and fidelities are formed as exact ratios, so no square
// roots are ever taken.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "tqdsim/f2.hpp"
#include "tqdsim/genop.hpp"
#include "tqdsim/phase_poly.hpp"
#include "tqdsim/rng.hpp"
#include "tqdsim/scalar.hpp"

namespace tqdsim {

// Affine F2 subspace offset + span(basis), kept in a canonical form: basis in
// reduced row echelon form, offset reduced so its pivot coordinates vanish.
class AffineSupport {
 public:
  AffineSupport() = default;
  explicit AffineSupport(std::size_t n) : n_(n), offset_(n) {}
  AffineSupport(std::size_t n, Bitvec offset, std::vector<Bitvec> basis)
      : n_(n), offset_(std::move(offset)), basis_(std::move(basis)) {
    canonicalize();
  }

  std::size_t num_qubits() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const Bitvec& offset() const { return offset_; }
  const std::vector<Bitvec>& basis() const { return basis_; }

  bool contains(const Bitvec& x) const {
    Bitvec r = x ^ offset_;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (r.get(pivot_[i])) r ^= basis_[i];
    return !r.any();
  }

  // point for parameter assignment t (bit i of t selects basis_[i])
  Bitvec point(uint64_t t) const {
    Bitvec x = offset_;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if ((t >> i) & 1) x ^= basis_[i];
    return x;
  }

  void translate(const Bitvec& m) {
    offset_ ^= m;
    reduce_offset();
  }
  // linear map x_t ^= x_c applied to the whole set
  void cnot(uint32_t c, uint32_t t) {
    if (offset_.get(c)) offset_.flip(t);
    for (auto& v : basis_)
      if (v.get(c)) v.flip(t);
    canonicalize();
  }

  // Constrain coordinate q to value b. Returns: 0 empty, 1 unchanged (already
  // fixed), 2 sliced (dimension dropped by one).
  int constrain(uint32_t q, bool b) {
    int j = -1;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].get(q)) { j = int(i); break; }
    if (j < 0) return offset_.get(q) == b ? 1 : 0;
    Bitvec vj = basis_[std::size_t(j)];
    basis_.erase(basis_.begin() + j);
    for (auto& v : basis_)
      if (v.get(q)) v ^= vj;
    if (offset_.get(q) != b) offset_ ^= vj;
    canonicalize();
    return 2;
  }

  bool operator==(const AffineSupport& o) const {
    return n_ == o.n_ && offset_ == o.offset_ && basis_ == o.basis_;
  }
  std::size_t hash() const {
    std::size_t h = offset_.hash();
    for (auto& v : basis_) h ^= v.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

  // Intersection with another support over the same qubits. Returns pairs
  // (points are enumerated by the caller via the returned support).
  std::optional<AffineSupport> intersect(const AffineSupport& o) const {
    // x = offset + B t = o.offset + B' s  =>  [B | B'] (t,s)^T = offset + o.offset
    std::size_t k1 = basis_.size(), k2 = o.basis_.size();
    F2Matrix m(n_, k1 + k2);
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t i = 0; i < k1; ++i) m.set(r, i, basis_[i].get(r));
      for (std::size_t i = 0; i < k2; ++i) m.set(r, k1 + i, o.basis_[i].get(r));
    }
    Bitvec rhs = offset_ ^ o.offset_;
    Bitvec sol(k1 + k2);
    if (!m.solve(rhs, sol)) return std::nullopt;
    Bitvec x0 = offset_;
    for (std::size_t i = 0; i < k1; ++i)
      if (sol.get(i)) x0 ^= basis_[i];
    std::vector<Bitvec> bas;
    for (const Bitvec& kv : m.kernel()) {
      Bitvec v(n_);
      for (std::size_t i = 0; i < k1; ++i)
        if (kv.get(i)) v ^= basis_[i];
      if (v.any()) bas.push_back(v);
    }
    return AffineSupport(n_, x0, std::move(bas));
  }

 private:
  void canonicalize() {
    // RREF of basis rows
    std::vector<Bitvec> rows;
    std::vector<std::size_t> piv;
    for (Bitvec v : basis_) {
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (v.get(piv[i])) v ^= rows[i];
      int p = v.lowest_set();
      if (p < 0) continue;
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].get(std::size_t(p))) rows[i] ^= v;
      rows.push_back(v);
      piv.push_back(std::size_t(p));
    }
    // sort rows by pivot
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return piv[a] < piv[b]; });
    basis_.clear();
    pivot_.clear();
    for (std::size_t i : order) {
      basis_.push_back(rows[i]);
      pivot_.push_back(piv[i]);
    }
    reduce_offset();
  }
  void reduce_offset() {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (offset_.get(pivot_[i])) offset_ ^= basis_[i];
  }

  std::size_t n_ = 0;
  Bitvec offset_;
  std::vector<Bitvec> basis_;
  std::vector<std::size_t> pivot_;
};

struct MeasurementRecord {
  std::string op;        // description of the measured operator
  int outcome = +1;      // +1 or -1
  Scalar probability;    // exact; rational for all stabilizer-route protocols
  int64_t timestamp = 0; // instruction index within the run
  BigRat probability_rational() const {
    CycQ p(probability);
    auto& c = p.coeffs();
    if (!(c[1] == 0 && c[2] == 0 && c[3] == 0))
      throw std::domain_error("measurement probability is not rational");
    return c[0];
  }
};

class PhaseState {
 public:
  struct Term {
    Scalar coeff;
    AffineSupport supp;
    PhasePolynomial phase;  // invariant: no constant monomial (folded into coeff)
  };

  PhaseState() = default;
  // basis_spec[i]: '0' -> |0>, '1' -> |1>, '+' -> |+>
  static PhaseState prep_product(std::size_t n, const std::string& basis_spec) {
    if (basis_spec.size() != n) throw std::invalid_argument("prep_product: spec length");
    PhaseState s;
    s.n_ = n;
    Term t;
    Bitvec off(n);
    std::vector<Bitvec> bas;
    int plus = 0;
    for (std::size_t i = 0; i < n; ++i) {
      switch (basis_spec[i]) {
        case '0': break;
        case '1': off.set(i, true); break;
        case '+': {
          Bitvec v(n);
          v.set(i, true);
          bas.push_back(v);
          ++plus;
          break;
        }
        default: throw std::invalid_argument("prep_product: bad basis char");
      }
    }
    t.coeff = Scalar::one();
    for (int i = 0; i < plus; ++i) t.coeff *= Scalar::inv_sqrt2();
    t.supp = AffineSupport(n, off, std::move(bas));
    s.terms_.push_back(std::move(t));
    return s;
  }
  static PhaseState zero_state(std::size_t n) { return prep_product(n, std::string(n, '0')); }

  std::size_t num_qubits() const { return n_; }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero_vector() const { return terms_.empty(); }

  // ---- gates ------------------------------------------------------------
  void x(uint32_t q) {
    for (auto& t : terms_) {
      Bitvec m(n_);
      m.set(q, true);
      t.supp.translate(m);
      t.phase.flip_var(q);
      fold_const(t);
    }
  }
  void z(uint32_t q) { diag({Mono::of({q})}, 4); }
  void s(uint32_t q) { diag({Mono::of({q})}, 2); }
  void sdg(uint32_t q) { diag({Mono::of({q})}, 6); }
  void t(uint32_t q) { diag({Mono::of({q})}, 1); }
  void tdg(uint32_t q) { diag({Mono::of({q})}, 7); }
  void cz(uint32_t a, uint32_t b) { diag({Mono::of({a, b})}, 4); }
  void cs(uint32_t a, uint32_t b) { diag({Mono::of({a, b})}, 2); }
  void csdg(uint32_t a, uint32_t b) { diag({Mono::of({a, b})}, 6); }
  void ccz(uint32_t a, uint32_t b, uint32_t c) { diag({Mono::of({a, b, c})}, 4); }
  void cnot(uint32_t c, uint32_t t) {
    if (c == t) throw std::invalid_argument("cnot: same qubit");
    for (auto& term : terms_) {
      term.supp.cnot(c, t);
      term.phase.xor_var(t, c);
      fold_const(term);
    }
  }
  // w^g X^m D applied to the state
  void apply_generalized(const GeneralizedOperator& g) {
    if (g.num_qubits() != n_) throw std::invalid_argument("apply_generalized: size");
    for (auto& t : terms_) {
      // (X^m D)|x> = w^{P(x)}|x^m>: amplitude at y gets w^{P(y^m)} * amp(y^m)
      t.supp.translate(g.x_mask());
      PhasePolynomial moved = t.phase;
      moved.shift(g.x_mask());
      PhasePolynomial add = g.phase();
      add.shift(g.x_mask());
      moved += add;
      t.phase = std::move(moved);
      t.coeff *= Scalar::omega_pow(g.global());
      fold_const(t);
    }
  }

  // ---- norms, inner products, expectations -------------------------------
  Scalar norm2() const { return inner(*this, *this); }

  // <a|b> on stored (unnormalized) vectors
  static Scalar inner(const PhaseState& a, const PhaseState& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("inner: size");
    Scalar acc;
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) {
        auto isec = ta.supp.intersect(tb.supp);
        if (!isec) continue;
        Scalar sum;
        uint64_t npts = uint64_t(1) << isec->dim();
        if (isec->dim() > 26) throw std::runtime_error("inner: intersection too large");
        for (uint64_t i = 0; i < npts; ++i) {
          Bitvec x = isec->point(i);
          int e = (tb.phase.eval(x) - ta.phase.eval(x) + 8) % 8;
          sum += Scalar::omega_pow(e);
        }
        acc += ta.coeff.conj() * tb.coeff * sum;
      }
    return acc;
  }

  // <psi|op|psi> / <psi|psi>, exact
  CycQ expectation(const GeneralizedOperator& op) const {
    PhaseState t = *this;
    t.apply_generalized(op);
    Scalar num = inner(*this, t);
    Scalar den = norm2();
    return CycQ(num) * CycQ(den).inv();
  }

  // ---- measurement --------------------------------------------------------
  // Z measurement on qubit q. outcome_forced: -1 random, else 0/1.
  MeasurementRecord measure_z(uint32_t q, Rng* rng, int outcome_forced = -1) {
    Scalar before = norm2();
    if (before.is_zero()) throw std::logic_error("measure_z: zero state");
    PhaseState s0 = sliced(q, false);
    Scalar n0 = s0.norm2();
    CycQ p0q = CycQ(n0) * CycQ(before).inv();
    int outcome;
    if (outcome_forced >= 0) {
      outcome = outcome_forced;
    } else {
      double p0 = approx_prob(p0q);
      outcome = (rng && rng->next_double() < p0) ? 0 : (rng ? 1 : 0);
    }
    Scalar p_sel = (outcome == 0) ? n0 : before - n0;
    if (p_sel.is_zero()) throw std::domain_error("measure_z: forced outcome has probability 0");
    *this = (outcome == 0) ? std::move(s0) : sliced(q, true);
    MeasurementRecord rec;
    rec.op = "Z" + std::to_string(q);
    rec.outcome = outcome == 0 ? +1 : -1;
    rec.probability = ratio_to_scalar(p_sel, before);
    return rec;
  }

  // Measurement of a generalized operator m with m^2 = 1 on this state
  // (checked exactly unless allow_non_involutive). Post state = (1 +- m)/2 psi.
  MeasurementRecord measure_generalized(const GeneralizedOperator& m, Rng* rng,
                                        int outcome_forced = -1,
                                        bool allow_non_involutive = false) {
    Scalar before = norm2();
    if (before.is_zero()) throw std::logic_error("measure_generalized: zero state");
    if (!allow_non_involutive) {
      GeneralizedOperator m2 = m * m;
      PhaseState t = *this;
      t.apply_generalized(m2);
      if (inner(*this, t) != before)
        throw std::domain_error("measure_generalized: operator not involutive on state");
    }
    PhaseState mt = *this;
    mt.apply_generalized(m);
    // branch +: (psi + m psi)/2
    PhaseState plus = *this;
    for (auto& t : mt.terms_) plus.terms_.push_back(t);
    for (auto& t : plus.terms_) t.coeff = t.coeff.div_pow2(1);
    plus.consolidate();
    Scalar np = plus.norm2();
    int outcome;
    if (outcome_forced >= 0) {
      outcome = outcome_forced;
    } else {
      CycQ pq = CycQ(np) * CycQ(before).inv();
      outcome = (rng && rng->next_double() < approx_prob(pq)) ? 0 : (rng ? 1 : 0);
    }
    Scalar p_sel;
    if (outcome == 0) {
      p_sel = np;
      *this = std::move(plus);
    } else {
      PhaseState minus = *this;
      for (auto& t : mt.terms_) {
        Term nt = t;
        nt.coeff = -nt.coeff;
        minus.terms_.push_back(std::move(nt));
      }
      for (auto& t : minus.terms_) t.coeff = t.coeff.div_pow2(1);
      minus.consolidate();
      p_sel = minus.norm2();
      *this = std::move(minus);
    }
    if (p_sel.is_zero()) throw std::domain_error("measure_generalized: forced outcome has probability 0");
    MeasurementRecord rec;
    rec.op = m.str();
    rec.outcome = outcome == 0 ? +1 : -1;
    rec.probability = ratio_to_scalar(p_sel, before);
    return rec;
  }

  // (1 + (-1)^sign m)/2 applied without any outcome bookkeeping; returns the
  // branch even if its norm is zero. Used for linear-map extraction.
  void apply_projector_half(const GeneralizedOperator& m, int sign) {
    PhaseState mt = *this;
    mt.apply_generalized(m);
    for (auto& t : mt.terms_) {
      Term nt = t;
      if (sign) nt.coeff = -nt.coeff;
      terms_.push_back(std::move(nt));
    }
    for (auto& t : terms_) t.coeff = t.coeff.div_pow2(1);
    consolidate();
  }

  void scale(const Scalar& c) {
    for (auto& t : terms_) t.coeff *= c;
  }

  // merge terms with identical support whose phase polynomials differ by a
  // constant; drop zero terms
  void consolidate() {
    std::map<std::pair<std::size_t, std::string>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      buckets[{terms_[i].supp.hash(), terms_[i].phase.str()}].push_back(i);
    std::vector<Term> out;
    std::vector<bool> used(terms_.size(), false);
    for (auto& [key, idxs] : buckets) {
      for (std::size_t a = 0; a < idxs.size(); ++a) {
        if (used[idxs[a]]) continue;
        Term acc = terms_[idxs[a]];
        used[idxs[a]] = true;
        for (std::size_t b = a + 1; b < idxs.size(); ++b) {
          if (used[idxs[b]]) continue;
          const Term& tb = terms_[idxs[b]];
          if (tb.supp == acc.supp && tb.phase == acc.phase) {
            acc.coeff += tb.coeff;
            used[idxs[b]] = true;
          }
        }
        if (!acc.coeff.is_zero()) out.push_back(std::move(acc));
      }
    }
    terms_ = std::move(out);
  }

  std::size_t max_intersection_dim() const {
    std::size_t d = 0;
    for (auto& t : terms_) d = std::max(d, t.supp.dim());
    return d;
  }

  // amplitude of computational basis state x (stored, unnormalized)
  Scalar amplitude(const Bitvec& x) const {
    Scalar a;
    for (const auto& t : terms_)
      if (t.supp.contains(x)) a += t.coeff * Scalar::omega_pow(t.phase.eval(x));
    return a;
  }

  std::string debug_str() const {
    std::string s = "PhaseState n=" + std::to_string(n_) + " terms=" + std::to_string(terms_.size());
    return s;
  }

  std::vector<Term>& mutable_terms() { return terms_; }
  void set_num_qubits(std::size_t n) { n_ = n; }

 private:
  PhaseState sliced(uint32_t q, bool b) const {
    PhaseState out;
    out.n_ = n_;
    for (const auto& t : terms_) {
      Term nt = t;
      int r = nt.supp.constrain(q, b);
      if (r == 0) continue;
      out.terms_.push_back(std::move(nt));
    }
    out.consolidate();
    return out;
  }
  void diag(std::initializer_list<Mono> monos, int coeff) {
    for (auto& t : terms_) {
      for (const Mono& m : monos) t.phase.add(m, coeff);
      fold_const(t);
    }
  }
  static void fold_const(Term& t) {
    int c = t.phase.take_constant();
    if (c) t.coeff *= Scalar::omega_pow(c);
  }
  static Scalar ratio_to_scalar(const Scalar& num, const Scalar& den) {
    // exact num/den as a ring element when the ratio lies in the ring;
    // falls back to CycQ and re-embeds (probabilities here are real ring values)
    CycQ q = CycQ(num) * CycQ(den).inv();
    auto& c = q.coeffs();
    // embed back: must be dyadic-ring representable; probabilities like 5/8 are
    Scalar out;
    for (int i = 0; i < 4; ++i) {
      if (c[i] == 0) continue;
      BigInt nu = mp::numerator(c[i]);
      BigInt de = mp::denominator(c[i]);
      int k = 0;
      while (de % 2 == 0) { de /= 2; ++k; }
      if (de != 1)
        throw std::domain_error("probability not in dyadic ring: " + q_to_string(q));
      out += scalar_from_bigint(nu).div_pow2(k) * Scalar::omega_pow(i);
    }
    return out;
  }
  static std::string q_to_string(const CycQ& q) {
    std::string s;
    for (int i = 0; i < 4; ++i) s += q.coeffs()[i].str() + (i < 3 ? "," : "");
    return s;
  }
  static Scalar scalar_from_bigint(const BigInt& v) {
    // decompose into 62-bit chunks
    bool neg = v < 0;
    BigInt a = neg ? BigInt(-v) : v;
    Scalar acc;
    Scalar shift = Scalar(1);
    Scalar two62 = Scalar(int64_t(1) << 62);
    while (a != 0) {
      BigInt lo = a & ((BigInt(1) << 62) - 1);
      acc += Scalar(lo.convert_to<long long>()) * shift;
      a >>= 62;
      shift *= two62;
    }
    return neg ? -acc : acc;
  }

  // real part of an (expected-real) exact value, for sampling only
  static double approx_prob(const CycQ& q) {
    auto& c = q.coeffs();
    static const double inv_s2 = 0.7071067811865476;
    return c[0].convert_to<double>() +
           (c[1].convert_to<double>() - c[3].convert_to<double>()) * inv_s2;
  }

  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

}  // namespace tqdsim
