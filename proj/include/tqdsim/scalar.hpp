#pragma once
// Exact complex scalars over the 8th cyclotomic field.
//
// The working ring is Z[w, 1/2] with w = exp(i*pi/4), written as
//   (n0 + n1*w + n2*w^2 + n3*w^3) / 2^k,  w^4 = -1.
// It contains sqrt(2) = w - w^3 and 1/sqrt(2), so every amplitude that
// appears in the supported gate set stays in the ring and all comparisons
// are exact integer arithmetic. Rank computations that need division use
// CycQ below (full field Q(w)).

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tqdsim {

namespace mp = boost::multiprecision;
using BigInt = mp::cpp_int;
using BigRat = mp::cpp_rational;

class Scalar {
 public:
  Scalar() : n_{0, 0, 0, 0}, k_(0) {}
  Scalar(long long v) : n_{BigInt(v), 0, 0, 0}, k_(0) {}  // NOLINT: implicit

  // w^e for e in Z (mod 8)
  static Scalar omega_pow(int e) {
    e = ((e % 8) + 8) % 8;
    Scalar s;
    s.n_[e % 4] = (e < 4) ? 1 : -1;
    return s;
  }
  static Scalar one() { return Scalar(1); }
  static Scalar zero() { return Scalar(); }
  static Scalar sqrt2() {
    Scalar s;
    s.n_[1] = 1; s.n_[3] = -1;
    return s;
  }
  static Scalar inv_sqrt2() {
    Scalar s = sqrt2();
    s.k_ = 1;
    return s;
  }
  // v / 2^k
  static Scalar dyadic(long long v, int k) {
    Scalar s(v);
    s.k_ = k;
    s.normalize();
    return s;
  }

  bool is_zero() const { return n_[0] == 0 && n_[1] == 0 && n_[2] == 0 && n_[3] == 0; }
  bool is_real() const { Scalar c = conj(); return *this == c; }
  bool is_one() const { return *this == one(); }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& x : r.n_) x = -x;
    return r;
  }
  Scalar& operator+=(const Scalar& o) {
    int k = std::max(k_, o.k_);
    BigInt a = BigInt(1) << unsigned(k - k_), b = BigInt(1) << unsigned(k - o.k_);
    for (int i = 0; i < 4; ++i) n_[i] = n_[i] * a + o.n_[i] * b;
    k_ = k;
    normalize();
    return *this;
  }
  Scalar& operator-=(const Scalar& o) { return *this += -o; }
  Scalar& operator*=(const Scalar& o) {
    std::array<BigInt, 4> r{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      if (n_[i] == 0) continue;
      for (int j = 0; j < 4; ++j) {
        if (o.n_[j] == 0) continue;
        int e = i + j;
        BigInt p = n_[i] * o.n_[j];
        if (e >= 4) { e -= 4; p = -p; }
        r[e] += p;
      }
    }
    n_ = r;
    k_ += o.k_;
    normalize();
    return *this;
  }
  friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
  friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
  friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }

  // Division by 2^k only; general inverses live in CycQ.
  Scalar div_pow2(int k) const {
    Scalar r = *this;
    r.k_ += k;
    r.normalize();
    return r;
  }

  bool operator==(const Scalar& o) const { return n_ == o.n_ && k_ == o.k_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar conj() const {
    // w -> w^7 = -w^3, w^2 -> -w^2, w^3 -> -w
    Scalar r;
    r.n_[0] = n_[0];
    r.n_[1] = -n_[3];
    r.n_[2] = -n_[2];
    r.n_[3] = -n_[1];
    r.k_ = k_;
    return r;
  }
  Scalar norm2() const { return *this * conj(); }  // |z|^2, real element of the ring

  // Rational value of a real ring element (requires w/w^3 parts to cancel and
  // no w^2 part); throws otherwise.
  BigRat to_rational() const {
    if (n_[2] != 0 || n_[1] != -n_[3])
      throw std::domain_error("Scalar::to_rational: value not rational");
    if (n_[1] != 0)
      throw std::domain_error("Scalar::to_rational: value has sqrt(2) part");
    return BigRat(n_[0], BigInt(1) << unsigned(k_));
  }
  bool is_rational() const {
    return n_[2] == 0 && n_[1] == 0 && n_[3] == 0;
  }

  const std::array<BigInt, 4>& num() const { return n_; }
  int den_log2() const { return k_; }

  double approx_re() const {
    static const double s = 0.7071067811865476;
    double d = std::pow(2.0, double(k_));
    return (n_[0].convert_to<double>() + (n_[1].convert_to<double>() - n_[3].convert_to<double>()) * s) / d;
  }
  double approx_im() const {
    static const double s = 0.7071067811865476;
    double d = std::pow(2.0, double(k_));
    return (n_[2].convert_to<double>() + (n_[1].convert_to<double>() + n_[3].convert_to<double>()) * s) / d;
  }

  std::string str() const {
    std::string s = "(";
    static const char* base[4] = {"", "w", "w2", "w3"};
    bool first = true;
    for (int i = 0; i < 4; ++i) {
      if (n_[i] == 0) continue;
      std::string t = n_[i].str();
      if (!first && n_[i] > 0) s += "+";
      s += t;
      s += base[i];
      first = false;
    }
    if (first) s += "0";
    s += ")";
    if (k_ > 0) s += "/2^" + std::to_string(k_);
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  void normalize() {
    while (k_ > 0 && (n_[0] % 2 == 0) && (n_[1] % 2 == 0) && (n_[2] % 2 == 0) && (n_[3] % 2 == 0)) {
      for (auto& x : n_) x /= 2;
      --k_;
    }
    if (is_zero()) k_ = 0;
  }

  std::array<BigInt, 4> n_;  // coefficients of 1, w, w^2, w^3
  int k_ = 0;                // denominator exponent
};

// Full field Q(w): needed wherever Gaussian elimination divides.
class CycQ {
 public:
  CycQ() : c_{0, 0, 0, 0} {}
  CycQ(const Scalar& s) {  // NOLINT: implicit
    BigRat d(BigInt(1), BigInt(1) << unsigned(s.den_log2()));
    for (int i = 0; i < 4; ++i) c_[i] = BigRat(s.num()[i]) * d;
  }
  CycQ(long long v) : c_{BigRat(v), 0, 0, 0} {}  // NOLINT: implicit

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  CycQ operator-() const {
    CycQ r;
    for (int i = 0; i < 4; ++i) r.c_[i] = -c_[i];
    return r;
  }
  CycQ& operator+=(const CycQ& o) {
    for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
  }
  CycQ& operator-=(const CycQ& o) {
    for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  CycQ& operator*=(const CycQ& o) {
    std::array<BigRat, 4> r{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      if (c_[i] == 0) continue;
      for (int j = 0; j < 4; ++j) {
        if (o.c_[j] == 0) continue;
        int e = i + j;
        BigRat p = c_[i] * o.c_[j];
        if (e >= 4) { e -= 4; p = -p; }
        r[e] += p;
      }
    }
    c_ = r;
    return *this;
  }
  friend CycQ operator+(CycQ a, const CycQ& b) { a += b; return a; }
  friend CycQ operator-(CycQ a, const CycQ& b) { a -= b; return a; }
  friend CycQ operator*(CycQ a, const CycQ& b) { a *= b; return a; }
  bool operator==(const CycQ& o) const { return c_ == o.c_; }
  bool operator!=(const CycQ& o) const { return !(*this == o); }

  CycQ conj() const {
    CycQ r;
    r.c_[0] = c_[0];
    r.c_[1] = -c_[3];
    r.c_[2] = -c_[2];
    r.c_[3] = -c_[1];
    return r;
  }
  // Galois conjugate w -> w^e (e odd)
  CycQ galois(int e) const {
    CycQ r;
    for (int i = 0; i < 4; ++i) {
      if (c_[i] == 0) continue;
      int p = (i * e) % 8;
      if (p < 4) r.c_[p] += c_[i]; else r.c_[p - 4] -= c_[i];
    }
    return r;
  }
  CycQ inv() const {
    if (is_zero()) throw std::domain_error("CycQ: divide by zero");
    CycQ g3 = galois(3), g5 = galois(5), g7 = galois(7);
    CycQ num = g3 * g5 * g7;
    CycQ nrm = *this * num;  // field norm, rational
    if (!(nrm.c_[1] == 0 && nrm.c_[2] == 0 && nrm.c_[3] == 0))
      throw std::logic_error("CycQ: norm not rational");
    BigRat inv_n = BigRat(1) / nrm.c_[0];
    CycQ r;
    for (int i = 0; i < 4; ++i) r.c_[i] = num.c_[i] * inv_n;
    return r;
  }

  const std::array<BigRat, 4>& coeffs() const { return c_; }

 private:
  std::array<BigRat, 4> c_;
};

}  // namespace tqdsim
