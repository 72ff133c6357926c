#pragma once
// Diagonal phase polynomials: multilinear F2 polynomials of degree <= 3 with
// coefficients in Z8 (exponents of w = exp(i*pi/4)). The diagonal acts as
// D|x> = w^{P(x)}|x>. Degree 3 is closed under the supported gate set and
// under the substitutions x -> x^1 and x -> x^y used for gate conjugation.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tqdsim/f2.hpp"

namespace tqdsim {

// Sorted set of at most 3 variable indices. deg==0 is the constant monomial.
struct Mono {
  std::array<uint32_t, 3> v{0, 0, 0};
  uint8_t deg = 0;

  static Mono constant() { return Mono{}; }
  static Mono of(std::initializer_list<uint32_t> vars) {
    std::vector<uint32_t> s(vars);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.size() > 3) throw std::invalid_argument("Mono: degree > 3");
    Mono m;
    m.deg = uint8_t(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) m.v[i] = s[i];
    return m;
  }
  bool contains(uint32_t x) const {
    for (int i = 0; i < deg; ++i) if (v[i] == x) return true;
    return false;
  }
  // this with variable x removed (x must be present)
  Mono without(uint32_t x) const {
    Mono m;
    for (int i = 0; i < deg; ++i)
      if (v[i] != x) m.v[m.deg++] = v[i];
    return m;
  }
  // this with variable x added; returns false if degree would exceed 3
  bool with(uint32_t x, Mono& out) const {
    if (contains(x)) { out = *this; return true; }
    if (deg == 3) return false;
    out = *this;
    out.v[out.deg++] = x;
    std::sort(out.v.begin(), out.v.begin() + out.deg);
    return true;
  }
  bool eval(const Bitvec& x) const {
    for (int i = 0; i < deg; ++i) if (!x.get(v[i])) return false;
    return true;
  }
  bool operator<(const Mono& o) const {
    if (deg != o.deg) return deg < o.deg;
    for (int i = 0; i < deg; ++i)
      if (v[i] != o.v[i]) return v[i] < o.v[i];
    return false;
  }
  bool operator==(const Mono& o) const {
    if (deg != o.deg) return false;
    for (int i = 0; i < deg; ++i) if (v[i] != o.v[i]) return false;
    return true;
  }
  std::string str() const {
    if (deg == 0) return "1";
    std::string s;
    for (int i = 0; i < deg; ++i) {
      if (i) s += "*";
      s += "x" + std::to_string(v[i]);
    }
    return s;
  }
};

class PhasePolynomial {
 public:
  PhasePolynomial() = default;

  static PhasePolynomial constant(int c) {
    PhasePolynomial p;
    p.add(Mono::constant(), c);
    return p;
  }

  bool empty() const { return m_.empty(); }
  const std::map<Mono, uint8_t>& monomials() const { return m_; }
  // canonical form: zero coefficients never stored
  void add(const Mono& mono, int coeff) {
    int c = ((coeff % 8) + 8) % 8;
    if (c == 0) return;
    auto it = m_.find(mono);
    if (it == m_.end()) {
      m_.emplace(mono, uint8_t(c));
    } else {
      int nc = (it->second + c) % 8;
      if (nc == 0) m_.erase(it); else it->second = uint8_t(nc);
    }
  }
  PhasePolynomial& operator+=(const PhasePolynomial& o) {
    for (auto& [mono, c] : o.m_) add(mono, c);
    return *this;
  }
  friend PhasePolynomial operator+(PhasePolynomial a, const PhasePolynomial& b) { a += b; return a; }
  PhasePolynomial operator-() const {
    PhasePolynomial p;
    for (auto& [mono, c] : m_) p.add(mono, 8 - c);
    return p;
  }
  PhasePolynomial scaled(int s) const {
    PhasePolynomial p;
    for (auto& [mono, c] : m_) p.add(mono, int(c) * s);
    return p;
  }
  bool operator==(const PhasePolynomial& o) const { return m_ == o.m_; }
  bool operator!=(const PhasePolynomial& o) const { return !(*this == o); }

  int constant_term() const {
    auto it = m_.find(Mono::constant());
    return it == m_.end() ? 0 : it->second;
  }
  // strip the constant term, returning it
  int take_constant() {
    auto it = m_.find(Mono::constant());
    if (it == m_.end()) return 0;
    int c = it->second;
    m_.erase(it);
    return c;
  }
  int degree() const {
    int d = 0;
    for (auto& [mono, c] : m_) d = std::max(d, int(mono.deg));
    return d;
  }
  // Z8 exponent at assignment x
  int eval(const Bitvec& x) const {
    int e = 0;
    for (auto& [mono, c] : m_)
      if (mono.eval(x)) e += c;
    return e % 8;
  }

  // substitute x_i -> x_i ^ 1 = 1 - x_i (integer identity on bits):
  // c*x_i*R  ->  c*R - 2c*x_i*R  added on top of the existing term
  void flip_var(uint32_t i) {
    PhasePolynomial extra;
    for (auto& [mono, c] : m_) {
      if (!mono.contains(i)) continue;
      extra.add(mono.without(i), c);
      extra.add(mono, -2 * int(c));
    }
    *this += extra;
  }
  // substitute x_i -> x_i ^ x_j = x_i + x_j - 2 x_i x_j:
  // c*x_i*R  ->  + c*(R u {j})  - 2c*(x_i*R u {j})  on top of the existing term.
  // The -2c piece can formally reach degree 4; it is only realized when its
  // coefficient survives mod 8, which cannot happen for gate-set-reachable
  // polynomials (doubling kills the depth). Throws otherwise.
  void xor_var(uint32_t i, uint32_t j) {
    if (i == j) throw std::invalid_argument("xor_var: same variable");
    PhasePolynomial extra;
    for (auto& [mono, c] : m_) {
      if (!mono.contains(i)) continue;
      Mono lin;
      bool ok_lin = mono.without(i).with(j, lin);
      if (!ok_lin) throw std::logic_error("xor_var: impossible degree");
      extra.add(lin, c);
      Mono quad;
      if (mono.with(j, quad)) {
        extra.add(quad, -2 * int(c));
      } else if ((2 * int(c)) % 8 != 0) {
        throw std::domain_error("PhasePolynomial: substitution exceeds degree 3");
      }
    }
    *this += extra;
  }
  // substitute x -> x ^ m for constant mask m (variables flipped where m=1)
  void shift(const Bitvec& mask) {
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (mask.get(i)) flip_var(uint32_t(i));
  }

  // all variables mentioned
  std::vector<uint32_t> support() const {
    std::vector<uint32_t> s;
    for (auto& [mono, c] : m_)
      for (int i = 0; i < mono.deg; ++i) s.push_back(mono.v[i]);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  // Pauli test: degree <= 1 and all non-constant coefficients in {0,4}
  bool is_pauli_diagonal() const {
    for (auto& [mono, c] : m_) {
      if (mono.deg > 1) return false;
      if (mono.deg == 1 && c != 4) return false;
    }
    return true;
  }

  // sorted-monomial text form, e.g. "4*x0*x2 + 2*x1 + 7"
  std::string str() const {
    if (m_.empty()) return "0";
    std::string s;
    for (auto& [mono, c] : m_) {
      if (!s.empty()) s += " + ";
      if (mono.deg == 0) s += std::to_string(int(c));
      else s += std::to_string(int(c)) + "*" + mono.str();
    }
    return s;
  }

 private:
  std::map<Mono, uint8_t> m_;
};

}  // namespace tqdsim
