#include <catch2/catch_amalgamated.hpp>

#include "tqdsim/f2.hpp"
#include "tqdsim/scalar.hpp"

using namespace tqdsim;

TEST_CASE("omega powers and ring identities") {
  Scalar w = Scalar::omega_pow(1);
  Scalar acc = Scalar::one();
  for (int i = 0; i < 8; ++i) {
    REQUIRE(acc == Scalar::omega_pow(i));
    acc *= w;
  }
  REQUIRE(acc == Scalar::one());
  REQUIRE(Scalar::omega_pow(4) == -Scalar::one());
  REQUIRE(Scalar::sqrt2() * Scalar::sqrt2() == Scalar(2));
  REQUIRE(Scalar::inv_sqrt2() * Scalar::sqrt2() == Scalar::one());
  // w + conj(w) = sqrt(2)
  REQUIRE(w + w.conj() == Scalar::sqrt2());
}

TEST_CASE("dyadic arithmetic stays exact") {
  Scalar half = Scalar::dyadic(1, 1);
  Scalar s = half + half;
  REQUIRE(s == Scalar::one());
  Scalar x = Scalar::dyadic(3, 3);  // 3/8
  REQUIRE(x + Scalar::dyadic(5, 3) == Scalar::one());
  REQUIRE((x * Scalar(8)) == Scalar(3));
  REQUIRE(x.to_rational() == BigRat(3, 8));
}

TEST_CASE("norm2 and conjugation") {
  Scalar z = Scalar::omega_pow(3) * Scalar::dyadic(5, 2);
  REQUIRE(z.norm2() == Scalar::dyadic(25, 4));
  Scalar u = Scalar::one() + Scalar::omega_pow(1);
  // |1+w|^2 = 2 + sqrt(2)
  REQUIRE(u.norm2() == Scalar(2) + Scalar::sqrt2());
}

TEST_CASE("CycQ field inverse") {
  CycQ z = CycQ(Scalar::omega_pow(1) + Scalar(2));
  CycQ inv = z.inv();
  REQUIRE(z * inv == CycQ(1));
  CycQ r = CycQ(Scalar::dyadic(5, 3));
  REQUIRE(r * CycQ(Scalar(8)) == CycQ(5));
  REQUIRE_THROWS(CycQ().inv());
}

TEST_CASE("bitvec basics") {
  Bitvec a(130), b(130);
  a.set(0, true);
  a.set(64, true);
  a.set(129, true);
  b.set(64, true);
  REQUIRE(a.popcount() == 3);
  REQUIRE(a.dot(b));
  b.set(0, true);
  REQUIRE(!a.dot(b));
  REQUIRE((a ^ b).popcount() == 1);
  REQUIRE(a.lowest_set() == 0);
}

TEST_CASE("f2 matrix rank kernel solve") {
  F2Matrix m(3, 4);
  // rows: 1100, 0110, 1010 (third = first + second)
  m.set(0, 0, 1); m.set(0, 1, 1);
  m.set(1, 1, 1); m.set(1, 2, 1);
  m.set(2, 0, 1); m.set(2, 2, 1);
  REQUIRE(m.rank() == 2);
  auto ker = m.kernel();
  REQUIRE(ker.size() == 2);
  for (auto& v : ker) REQUIRE(!m.apply(v).any());
  Bitvec b(3);
  b.set(0, true); b.set(1, true);
  Bitvec x;
  REQUIRE(m.solve(b, x));
  REQUIRE(m.apply(x) == b);
  b.set(2, true);  // now inconsistent: row3 = row1+row2 but rhs parity breaks
  b.set(2, false);
  Bitvec bad(3);
  bad.set(2, true);
  Bitvec y;
  bool ok = m.solve(bad, y);
  if (ok) REQUIRE(m.apply(y) == bad);
}
