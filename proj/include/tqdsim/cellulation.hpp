#pragma once
// Cell complexes: F2 boundary/coboundary incidence plus integer geometry.
// Covers the 2D triangular/square lattices and the 3D spacetime complexes.
// Incidence is stored F2-reduced (even multiplicities cancel), which is the
// only structure the homological operations see.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tqdsim/f2.hpp"

namespace tqdsim {

struct Chain {
  int degree = 0;
  Bitvec support;
};

// integer coordinates in "fine" lattice units; unused axes zero
using Coord = std::array<int, 3>;

class Cellulation {
 public:
  int dim = 2;
  // number of k-cells, k = 0..dim
  std::array<std::size_t, 4> counts{0, 0, 0, 0};
  // boundary_[k][i] = sorted F2-reduced list of (k-1)-cells of k-cell i, k>=1
  std::array<std::vector<std::vector<uint32_t>>, 4> bnd;
  // per-cell coordinates (fine units)
  std::array<std::vector<Coord>, 4> coords;
  // periodicity per axis: 0 = open, else period in fine units
  Coord period{0, 0, 0};

  std::size_t num_cells(int k) const { return counts[std::size_t(k)]; }

  const std::vector<uint32_t>& boundary_of(int k, uint32_t cell) const {
    return bnd[std::size_t(k)][cell];
  }

  // transpose incidence, built on demand
  const std::vector<std::vector<uint32_t>>& coboundary(int k) const {
    auto& cache = cob_cache_[std::size_t(k)];
    if (cache.empty() && counts[std::size_t(k)] > 0) {
      cache.assign(counts[std::size_t(k)], {});
      if (k + 1 <= dim)
        for (uint32_t c = 0; c < counts[std::size_t(k + 1)]; ++c)
          for (uint32_t f : bnd[std::size_t(k + 1)][c]) cache[f].push_back(c);
    }
    return cache;
  }

  Chain boundary_apply(const Chain& c) const {
    if (c.degree < 1 || c.degree > dim) throw std::invalid_argument("boundary_apply: degree out of range");
    if (c.support.size() != counts[std::size_t(c.degree)])
      throw std::invalid_argument("boundary_apply: support size");
    Chain out{c.degree - 1, Bitvec(counts[std::size_t(c.degree - 1)])};
    for (std::size_t i = 0; i < c.support.size(); ++i)
      if (c.support.get(i))
        for (uint32_t f : bnd[std::size_t(c.degree)][i]) out.support.flip(f);
    return out;
  }

  Chain coboundary_apply(const Chain& c) const {
    if (c.degree < 0 || c.degree >= dim) throw std::invalid_argument("coboundary_apply: degree out of range");
    if (c.support.size() != counts[std::size_t(c.degree)])
      throw std::invalid_argument("coboundary_apply: support size");
    Chain out{c.degree + 1, Bitvec(counts[std::size_t(c.degree + 1)])};
    const auto& cob = coboundary(c.degree);
    for (std::size_t i = 0; i < c.support.size(); ++i)
      if (c.support.get(i))
        for (uint32_t g : cob[i]) out.support.flip(g);
    return out;
  }

  // F2 boundary matrix, rows = (k-1)-cells, cols = k-cells
  F2Matrix boundary_matrix(int k) const {
    F2Matrix m(counts[std::size_t(k - 1)], counts[std::size_t(k)]);
    for (uint32_t c = 0; c < counts[std::size_t(k)]; ++c)
      for (uint32_t f : bnd[std::size_t(k)][c]) m.set(f, c, true);
    return m;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["schema"] = "tqdsim.cellulation.v1";
    j["dim"] = dim;
    j["periodic"] = {period[0], period[1], period[2]};
    for (int k = 0; k <= dim; ++k) {
      nlohmann::json cells = nlohmann::json::array();
      for (uint32_t i = 0; i < counts[std::size_t(k)]; ++i) {
        nlohmann::json cell;
        cell["id"] = i;
        if (!coords[std::size_t(k)].empty()) {
          auto& c = coords[std::size_t(k)][i];
          cell["coord"] = {c[0], c[1], c[2]};
        }
        if (k >= 1) cell["boundary"] = bnd[std::size_t(k)][i];
        cells.push_back(cell);
      }
      j["cells"][std::to_string(k)] = cells;
    }
    return j;
  }

 private:
  mutable std::array<std::vector<std::vector<uint32_t>>, 4> cob_cache_;
};

// box metric with wrap on periodic axes; coordinates in fine units
inline int ell_inf_distance(const Coord& x, const Coord& y, const Coord& period = {0, 0, 0}) {
  int d = 0;
  for (int a = 0; a < 3; ++a) {
    int v = x[a] - y[a];
    if (v < 0) v = -v;
    if (period[a] > 0) {
      v %= period[a];
      v = std::min(v, period[a] - v);
    }
    d = std::max(d, v);
  }
  return d;
}

}  // namespace tqdsim
