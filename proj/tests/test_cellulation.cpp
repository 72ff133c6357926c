#include <catch2/catch_amalgamated.hpp>

#include "tqdsim/rng.hpp"
#include "tqdsim/tri_lattice.hpp"

using namespace tqdsim;

TEST_CASE("tri torus counting") {
  for (int L : {1, 2, 3}) {
    auto T = build_tri_torus(L);
    REQUIRE(T.n_qubits() == 9 * L * L);
    for (int c = 0; c < 3; ++c) {
      REQUIRE(T.sub[c].num_cells(0) == std::size_t(L * L));
      REQUIRE(T.sub[c].num_cells(1) == std::size_t(3 * L * L));
      REQUIRE(T.sub[c].num_cells(2) == std::size_t(2 * L * L));
    }
  }
  REQUIRE(build_tri_torus(1).n_qubits() == 9);
  REQUIRE(build_tri_torus(2).n_qubits() == 36);
  REQUIRE_THROWS(build_tri_torus(0));
}

TEST_CASE("boundary of boundary vanishes (exhaustive L<=3)") {
  for (int L : {1, 2, 3}) {
    auto T = build_tri_torus(L);
    for (int c = 0; c < 3; ++c) {
      auto& cl = T.sub[c];
      for (uint32_t f = 0; f < cl.num_cells(2); ++f) {
        Chain ch{2, Bitvec(cl.num_cells(2))};
        ch.support.set(f, true);
        Chain e = cl.boundary_apply(ch);
        Chain v = cl.boundary_apply(e);
        REQUIRE(!v.support.any());
      }
    }
  }
}

TEST_CASE("sum of all faces has empty boundary on torus") {
  auto T = build_tri_torus(2);
  auto& cl = T.sub[0];
  Chain all{2, Bitvec(cl.num_cells(2))};
  for (std::size_t f = 0; f < cl.num_cells(2); ++f) all.support.set(f, true);
  REQUIRE(!cl.boundary_apply(all).support.any());
  // single face on torus -> its 3 edges
  Chain one{2, Bitvec(cl.num_cells(2))};
  one.support.set(0, true);
  REQUIRE(cl.boundary_apply(one).support.popcount() == 3);
}

TEST_CASE("boundary and coboundary are adjoint") {
  auto T = build_tri_torus(2);
  Rng rng(5);
  auto& cl = T.sub[1];
  for (int trial = 0; trial < 30; ++trial) {
    Chain a{2, Bitvec(cl.num_cells(2))};
    for (std::size_t i = 0; i < a.support.size(); ++i)
      if (rng.bit()) a.support.set(i, true);
    Chain b{1, Bitvec(cl.num_cells(1))};
    for (std::size_t i = 0; i < b.support.size(); ++i)
      if (rng.bit()) b.support.set(i, true);
    // <da, b> = <a, delta b>
    bool lhs = cl.boundary_apply(a).support.dot(b.support);
    bool rhs = a.support.dot(cl.coboundary_apply(b).support);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("hexagons alternate complementary colors") {
  for (int L : {1, 2, 3}) {
    auto T = build_tri_torus(L);
    for (int c = 0; c < 3; ++c)
      for (uint32_t v = 0; v < uint32_t(L * L); ++v) {
        auto& hex = T.hexagon[c][v];
        int count[3] = {0, 0, 0};
        for (int i = 0; i < 6; ++i) {
          int qc, qx, qy, qd;
          T.qubit_parts(hex[i], qc, qx, qy, qd);
          ++count[qc];
          int nc, nx, ny, nd;
          T.qubit_parts(hex[(i + 1) % 6], nc, nx, ny, nd);
          REQUIRE(qc != c);
          REQUIRE(nc != c);
          REQUIRE(qc != nc);  // alternating
        }
        REQUIRE(count[c] == 0);
        for (int cc = 0; cc < 3; ++cc)
          if (cc != c) REQUIRE(count[cc] == 3);
      }
  }
}

TEST_CASE("ell-inf distance is a wrap-aware metric") {
  Coord period{8, 8, 0};
  REQUIRE(ell_inf_distance({0, 0, 0}, {0, 0, 0}, period) == 0);
  REQUIRE(ell_inf_distance({0, 0, 0}, {2, 1, 5}) == 5);
  REQUIRE(ell_inf_distance({0, 0, 0}, {7, 0, 0}, period) == 1);
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Coord a{int(rng.below(8)), int(rng.below(8)), int(rng.below(5))};
    Coord b{int(rng.below(8)), int(rng.below(8)), int(rng.below(5))};
    Coord c{int(rng.below(8)), int(rng.below(8)), int(rng.below(5))};
    REQUIRE(ell_inf_distance(a, b, period) == ell_inf_distance(b, a, period));
    REQUIRE(ell_inf_distance(a, c, period) <=
            ell_inf_distance(a, b, period) + ell_inf_distance(b, c, period));
    REQUIRE((ell_inf_distance(a, b, period) == 0) ==
            (a[0] == b[0] && a[1] == b[1] && a[2] == b[2]));
  }
}

TEST_CASE("json export carries cells and coordinates") {
  auto T = build_tri_torus(1);
  auto j = T.sub[0].to_json();
  REQUIRE(j["schema"] == "tqdsim.cellulation.v1");
  REQUIRE(j["cells"]["1"].size() == 3);
  REQUIRE(j["cells"]["2"][0]["boundary"].size() == 3);
}
