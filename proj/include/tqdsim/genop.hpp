#pragma once
// Generalized operators: w^g * X^m * D with D a diagonal phase polynomial.
// Normal form keeps the X part to the left of the diagonal, so
//   G|x> = w^{g + P(x)} |x ^ m>.
// Pauli operators are the degree<=1, coefficient-{0,4} specialization.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tqdsim/f2.hpp"
#include "tqdsim/phase_poly.hpp"
#include "tqdsim/scalar.hpp"

namespace tqdsim {

class GeneralizedOperator {
 public:
  GeneralizedOperator() = default;
  explicit GeneralizedOperator(std::size_t n) : n_(n), x_mask_(n) {}

  static GeneralizedOperator identity(std::size_t n) { return GeneralizedOperator(n); }
  static GeneralizedOperator pauli_x(std::size_t n, uint32_t q) {
    GeneralizedOperator g(n);
    g.x_mask_.set(q, true);
    return g;
  }
  static GeneralizedOperator pauli_z(std::size_t n, uint32_t q) {
    GeneralizedOperator g(n);
    g.phase_.add(Mono::of({q}), 4);
    return g;
  }
  static GeneralizedOperator s_gate(std::size_t n, uint32_t q) {
    GeneralizedOperator g(n);
    g.phase_.add(Mono::of({q}), 2);
    return g;
  }
  static GeneralizedOperator t_gate(std::size_t n, uint32_t q) {
    GeneralizedOperator g(n);
    g.phase_.add(Mono::of({q}), 1);
    return g;
  }
  static GeneralizedOperator cz(std::size_t n, uint32_t a, uint32_t b) {
    GeneralizedOperator g(n);
    g.phase_.add(Mono::of({a, b}), 4);
    return g;
  }
  static GeneralizedOperator cs(std::size_t n, uint32_t a, uint32_t b, bool dagger = false) {
    GeneralizedOperator g(n);
    g.phase_.add(Mono::of({a, b}), dagger ? 6 : 2);
    return g;
  }
  static GeneralizedOperator ccz(std::size_t n, uint32_t a, uint32_t b, uint32_t c) {
    GeneralizedOperator g(n);
    g.phase_.add(Mono::of({a, b, c}), 4);
    return g;
  }

  std::size_t num_qubits() const { return n_; }
  const Bitvec& x_mask() const { return x_mask_; }
  Bitvec& x_mask() { return x_mask_; }
  const PhasePolynomial& phase() const { return phase_; }
  PhasePolynomial& phase() { return phase_; }
  int global() const { return global_; }
  void set_global(int g) { global_ = ((g % 8) + 8) % 8; }

  bool is_identity() const { return !x_mask_.any() && phase_.empty() && global_ == 0; }
  bool is_identity_up_to_phase() const { return !x_mask_.any() && phase_.empty(); }

  GeneralizedOperator& operator*=(const GeneralizedOperator& o) {
    if (o.n_ != n_) throw std::invalid_argument("GeneralizedOperator: size mismatch");
    PhasePolynomial pa = phase_;
    pa.shift(o.x_mask_);
    pa += o.phase_;
    phase_ = std::move(pa);
    x_mask_ ^= o.x_mask_;
    global_ = (global_ + o.global_ + phase_.take_constant()) % 8;
    return *this;
  }
  friend GeneralizedOperator operator*(GeneralizedOperator a, const GeneralizedOperator& b) {
    a *= b;
    return a;
  }

  GeneralizedOperator inverse() const {
    GeneralizedOperator g(n_);
    g.x_mask_ = x_mask_;
    PhasePolynomial p = -phase_;
    p.shift(x_mask_);
    int c = p.take_constant();
    g.phase_ = std::move(p);
    g.global_ = (((c - global_) % 8) + 8) % 8;
    return g;
  }

  GeneralizedOperator dagger() const { return inverse(); }  // unitary

  // a b a^-1 b^-1 in normal form
  static GeneralizedOperator group_commutator(const GeneralizedOperator& a,
                                              const GeneralizedOperator& b) {
    return a * b * a.inverse() * b.inverse();
  }

  bool operator==(const GeneralizedOperator& o) const {
    return n_ == o.n_ && x_mask_ == o.x_mask_ && phase_ == o.phase_ && global_ == o.global_;
  }
  bool operator!=(const GeneralizedOperator& o) const { return !(*this == o); }
  bool equal_up_to_phase(const GeneralizedOperator& o) const {
    return n_ == o.n_ && x_mask_ == o.x_mask_ && phase_ == o.phase_;
  }

  // G|x> = w^{global + P(x)} |x ^ mask>
  void apply_to_point(Bitvec& x, int& exponent) const {
    exponent = (exponent + global_ + phase_.eval(x)) % 8;
    x ^= x_mask_;
  }
  Scalar coefficient_at(const Bitvec& x) const {
    return Scalar::omega_pow(global_ + phase_.eval(x));
  }

  bool is_pauli() const { return phase_.is_pauli_diagonal() && global_ % 2 == 0; }

  // sorted-monomial text form for golden tests
  std::string str() const {
    std::ostringstream os;
    os << "w^" << global_ << " X[";
    bool first = true;
    for (std::size_t i = 0; i < n_; ++i)
      if (x_mask_.get(i)) {
        if (!first) os << ",";
        os << i;
        first = false;
      }
    os << "] P[" << phase_.str() << "]";
    return os.str();
  }

 private:
  std::size_t n_ = 0;
  Bitvec x_mask_;
  PhasePolynomial phase_;
  int global_ = 0;
};

// Pauli specialization: w^{2g} X^a Z^b with g an exponent of i.
struct PauliOperator {
  std::size_t n = 0;
  Bitvec x_mask, z_mask;
  int global = 0;  // exponent of i, mod 4

  PauliOperator() = default;
  explicit PauliOperator(std::size_t nn) : n(nn), x_mask(nn), z_mask(nn) {}

  GeneralizedOperator to_generalized() const {
    GeneralizedOperator g(n);
    g.x_mask() = x_mask;
    for (std::size_t i = 0; i < n; ++i)
      if (z_mask.get(i)) g.phase().add(Mono::of({uint32_t(i)}), 4);
    g.set_global(2 * global);
    return g;
  }
  static bool from_generalized(const GeneralizedOperator& g, PauliOperator& out) {
    if (!g.is_pauli()) return false;
    out = PauliOperator(g.num_qubits());
    out.x_mask = g.x_mask();
    for (auto& [mono, c] : g.phase().monomials())
      if (mono.deg == 1) out.z_mask.set(mono.v[0], true);
    out.global = (g.global() / 2) % 4;
    return true;
  }
  bool commutes(const PauliOperator& o) const {
    return !(x_mask.dot(o.z_mask) ^ z_mask.dot(o.x_mask));
  }
  PauliOperator operator*(const PauliOperator& o) const {
    PauliOperator r(n);
    // X^a Z^b X^c Z^d = (-1)^{b.c} X^{a+c} Z^{b+d}
    r.x_mask = x_mask ^ o.x_mask;
    r.z_mask = z_mask ^ o.z_mask;
    r.global = (global + o.global + (z_mask.dot(o.x_mask) ? 2 : 0)) % 4;
    return r;
  }
  bool operator==(const PauliOperator& o) const {
    return n == o.n && x_mask == o.x_mask && z_mask == o.z_mask && global == o.global;
  }
};

}  // namespace tqdsim
