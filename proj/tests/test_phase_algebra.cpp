#include <catch2/catch_amalgamated.hpp>

#include "tqdsim/dense.hpp"
#include "tqdsim/genop.hpp"
#include "tqdsim/rng.hpp"

using namespace tqdsim;

namespace {

// dense matrix-free check: compare operators by action on all basis states
bool same_operator(const GeneralizedOperator& a, const GeneralizedOperator& b) {
  REQUIRE(a.num_qubits() == b.num_qubits());
  std::size_t n = a.num_qubits();
  for (uint64_t i = 0; i < (uint64_t(1) << n); ++i) {
    Bitvec x(n);
    for (std::size_t j = 0; j < n; ++j)
      if ((i >> j) & 1) x.set(j, true);
    Bitvec xa = x, xb = x;
    int ea = 0, eb = 0;
    a.apply_to_point(xa, ea);
    b.apply_to_point(xb, eb);
    if (xa != xb || ea != eb) return false;
  }
  return true;
}

GeneralizedOperator random_op(Rng& rng, std::size_t n, int diag_terms) {
  GeneralizedOperator g(n);
  for (std::size_t i = 0; i < n; ++i)
    if (rng.bit()) g.x_mask().set(i, true);
  for (int t = 0; t < diag_terms; ++t) {
    int deg = 1 + int(rng.below(3));
    std::vector<uint32_t> vars;
    for (int d = 0; d < deg; ++d) vars.push_back(uint32_t(rng.below(n)));
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    Mono m = Mono::of({});
    Mono out;
    bool ok = true;
    for (uint32_t v : vars) {
      if (!m.with(v, out)) { ok = false; break; }
      m = out;
    }
    if (ok && m.deg > 0) g.phase().add(m, int(rng.below(8)));
  }
  g.set_global(int(rng.below(8)));
  return g;
}

}  // namespace

TEST_CASE("pauli identities") {
  std::size_t n = 2;
  auto X1 = GeneralizedOperator::pauli_x(n, 0);
  auto Z1 = GeneralizedOperator::pauli_z(n, 0);
  auto XZ = X1 * Z1;
  auto ZX = Z1 * X1;
  // X Z = - Z X: global exponents differ by 4
  REQUIRE(XZ.x_mask() == ZX.x_mask());
  REQUIRE(XZ.phase() == ZX.phase());
  REQUIRE((XZ.global() - ZX.global() + 8) % 8 == 4);
}

TEST_CASE("clifford conjugation CZ X CZ = X Z") {
  std::size_t n = 2;
  auto CZ = GeneralizedOperator::cz(n, 0, 1);
  auto X1 = GeneralizedOperator::pauli_x(n, 0);
  auto Z2 = GeneralizedOperator::pauli_z(n, 1);
  auto conj = CZ * X1 * CZ;
  auto expect = X1 * Z2;
  REQUIRE(same_operator(conj, expect));
}

TEST_CASE("inverse and identity") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_op(rng, 5, 4);
    auto gi = g.inverse();
    auto prod = g * gi;
    REQUIRE(prod.is_identity());
    auto prod2 = gi * g;
    REQUIRE(prod2.is_identity());
  }
}

TEST_CASE("multiply matches dense matrix oracle") {
  Rng rng(13);
  std::size_t n = 4;
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_op(rng, n, 3);
    auto b = random_op(rng, n, 3);
    auto ab = a * b;
    // apply b then a to dense basis states; compare against ab
    for (uint64_t i = 0; i < (uint64_t(1) << n); ++i) {
      DenseState d(n);
      d.amp(i) = Scalar::one();
      DenseState d1 = d;
      d1.apply_generalized(b);
      d1.apply_generalized(a);
      DenseState d2 = d;
      d2.apply_generalized(ab);
      REQUIRE(d1 == d2);
    }
  }
}

TEST_CASE("multiply associativity and unique normal form") {
  Rng rng(99);
  std::size_t n = 6;
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_op(rng, n, 3);
    auto b = random_op(rng, n, 3);
    auto c = random_op(rng, n, 3);
    auto l = (a * b) * c;
    auto r = a * (b * c);
    REQUIRE(l == r);  // normal forms identical, not merely equal action
  }
}

TEST_CASE("group commutator of commuting ops is identity") {
  std::size_t n = 3;
  auto a = GeneralizedOperator::cz(n, 0, 1);
  auto b = GeneralizedOperator::cz(n, 1, 2);
  REQUIRE(GeneralizedOperator::group_commutator(a, b).is_identity());
}

TEST_CASE("pauli round trip") {
  PauliOperator p(4);
  p.x_mask.set(1, true);
  p.z_mask.set(1, true);
  p.z_mask.set(3, true);
  p.global = 1;
  auto g = p.to_generalized();
  PauliOperator q;
  REQUIRE(PauliOperator::from_generalized(g, q));
  REQUIRE(p == q);
  REQUIRE(g.is_pauli());
  auto t = GeneralizedOperator::t_gate(4, 0);
  REQUIRE(!t.is_pauli());
}
