#pragma once
// Three superimposed triangular lattices on an L x L torus, one per color
// r, g, b, with one qubit per edge of each sublattice (9 L^2 qubits total).
//
// Vertex lattice of color c sits at fine offset off[c] (fine unit = 1/6 of a
// lattice vector); the offsets put every vertex of color c at the shared
// center of one face of each complementary color, which is what makes the
// hexagon interleaving work. Edge directions: d0 = +x, d1 = +y, d2 = +x+y.
// Faces: up triangle (v, v+d0, v+d0+d1), down triangle (v, v+d1, v+d1+d0).
//
// Hexagon convention: for vertex (v,c), the six qubits of the two
// complementary-color faces centered on (v,c), ordered clockwise starting
// from the qubit immediately east of the vertex.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "tqdsim/cellulation.hpp"

namespace tqdsim {

enum Color : int { RED = 0, GREEN = 1, BLUE = 2 };
inline const char* color_name(int c) { return c == 0 ? "r" : (c == 1 ? "g" : "b"); }
// the color different from both a and b
inline int third_color(int a, int b) { return 3 - a - b; }

struct TriTorus {
  int L = 0;
  // qubit index: color * 3L^2 + (y*L + x)*3 + dir
  // vertex index (per color): y*L + x
  // face index (per color): (y*L + x)*2 + (0 up, 1 down)

  std::array<Cellulation, 3> sub;  // per-color sublattice

  // hexagon[c][v]: 6 global qubit indices, clockwise from east, alternating colors
  std::array<std::vector<std::array<uint32_t, 6>>, 3> hexagon;
  // star[c][v]: F2-reduced incident edges of sublattice c (global qubit ids)
  std::array<std::vector<std::vector<uint32_t>>, 3> star;
  // face_center_vertex[c][f] = {color c2, vertex v}: the cross-color vertex at
  // the center of face (f, c)
  std::array<std::vector<std::pair<int, uint32_t>>, 3> face_center_vertex;
  // centered_faces[c][v]: the two faces (one per complementary color) centered
  // at vertex (v, c), as (color, face) pairs
  std::array<std::vector<std::array<std::pair<int, uint32_t>, 2>>, 3> centered_faces;

  int n_qubits() const { return 9 * L * L; }
  int n_vertices_per_color() const { return L * L; }
  int n_faces_per_color() const { return 2 * L * L; }

  uint32_t qubit(int c, int x, int y, int d) const {
    x = mod(x); y = mod(y);
    return uint32_t(c * 3 * L * L + (y * L + x) * 3 + d);
  }
  uint32_t vertex(int x, int y) const { return uint32_t(mod(y) * L + mod(x)); }
  uint32_t face(int x, int y, int updown) const { return uint32_t((mod(y) * L + mod(x)) * 2 + updown); }
  int mod(int a) const { return ((a % L) + L) % L; }

  // decompose a global qubit id
  void qubit_parts(uint32_t q, int& c, int& x, int& y, int& d) const {
    c = int(q) / (3 * L * L);
    int rest = int(q) % (3 * L * L);
    d = rest % 3;
    int v = rest / 3;
    x = v % L;
    y = v / L;
  }

  // fine coordinates (x6 units), torus period 6L per axis
  static constexpr std::array<std::array<int, 2>, 3> kOffset6 = {{{0, 0}, {4, 2}, {2, 4}}};
  std::array<int, 2> vertex_pos6(int c, int x, int y) const {
    return {6 * x + kOffset6[std::size_t(c)][0], 6 * y + kOffset6[std::size_t(c)][1]};
  }
  std::array<int, 2> edge_mid6(int c, int x, int y, int d) const {
    auto p = vertex_pos6(c, x, y);
    static constexpr std::array<std::array<int, 2>, 3> half = {{{3, 0}, {0, 3}, {3, 3}}};
    return {p[0] + half[std::size_t(d)][0], p[1] + half[std::size_t(d)][1]};
  }
  // face center: up = v + (4,2), down = v + (2,4) in fine units
  std::array<int, 2> face_center6(int c, int x, int y, int updown) const {
    auto p = vertex_pos6(c, x, y);
    return updown == 0 ? std::array<int, 2>{p[0] + 4, p[1] + 2}
                       : std::array<int, 2>{p[0] + 2, p[1] + 4};
  }
  int wrap6(int a) const { int m = 6 * L; return ((a % m) + m) % m; }

  // edges of face (c, f) as global qubit ids
  std::array<uint32_t, 3> face_edges(int c, uint32_t f) const {
    int updown = int(f) % 2;
    int v = int(f) / 2;
    int x = v % L, y = v / L;
    if (updown == 0)  // up: (v,d0), (v+d0,d1), (v,d2)
      return {qubit(c, x, y, 0), qubit(c, x + 1, y, 1), qubit(c, x, y, 2)};
    // down: (v,d1), (v+d1,d0), (v,d2)
    return {qubit(c, x, y, 1), qubit(c, x, y + 1, 0), qubit(c, x, y, 2)};
  }
};

// displacement reduced to (-p/2, p/2]
inline int wrap_disp(int d, int p) {
  d = ((d % p) + p) % p;
  if (d > p / 2) d -= p;
  return d;
}

// clockwise-from-east angular order on integer vectors (no ties expected)
inline bool cw_less(const std::array<int, 2>& a, const std::array<int, 2>& b) {
  auto key = [](const std::array<int, 2>& v) {
    // clockwise sweep in original coords = CCW sweep on (x, -y)
    int x = v[0], y = -v[1];
    int half = (y < 0 || (y == 0 && x < 0)) ? 1 : 0;  // 0: upper (incl +x), 1: lower
    return std::pair<int, std::array<int, 2>>(half, {x, y});
  };
  auto ka = key(a), kb = key(b);
  if (ka.first != kb.first) return ka.first < kb.first;
  long cx = long(ka.second[0]) * kb.second[1] - long(ka.second[1]) * kb.second[0];
  return cx > 0;
}

inline TriTorus build_tri_torus(int L) {
  if (L < 1) throw std::invalid_argument("build_tri_torus: invalid size L = " + std::to_string(L));
  TriTorus T;
  T.L = L;
  int V = L * L, E = 3 * L * L, F = 2 * L * L;

  for (int c = 0; c < 3; ++c) {
    Cellulation& cl = T.sub[std::size_t(c)];
    cl.dim = 2;
    cl.counts = {std::size_t(V), std::size_t(E), std::size_t(F), 0};
    cl.period = {6 * L, 6 * L, 0};
    cl.coords[0].resize(std::size_t(V));
    cl.coords[1].resize(std::size_t(E));
    cl.coords[2].resize(std::size_t(F));
    cl.bnd[1].resize(std::size_t(E));
    cl.bnd[2].resize(std::size_t(F));
    for (int y = 0; y < L; ++y)
      for (int x = 0; x < L; ++x) {
        auto vp = T.vertex_pos6(c, x, y);
        cl.coords[0][T.vertex(x, y)] = {vp[0], vp[1], 0};
        for (int d = 0; d < 3; ++d) {
          uint32_t e = uint32_t((y * L + x) * 3 + d);
          auto mp = T.edge_mid6(c, x, y, d);
          cl.coords[1][e] = {T.wrap6(mp[0]), T.wrap6(mp[1]), 0};
          // endpoints, F2-reduced
          static constexpr std::array<std::array<int, 2>, 3> dir = {{{1, 0}, {0, 1}, {1, 1}}};
          uint32_t a = T.vertex(x, y), b = T.vertex(x + dir[std::size_t(d)][0], y + dir[std::size_t(d)][1]);
          if (a != b) cl.bnd[1][e] = {std::min(a, b), std::max(a, b)};
        }
        for (int ud = 0; ud < 2; ++ud) {
          uint32_t f = T.face(x, y, ud);
          auto fc = T.face_center6(c, x, y, ud);
          cl.coords[2][f] = {T.wrap6(fc[0]), T.wrap6(fc[1]), 0};
          auto fe = T.face_edges(c, f);
          std::vector<uint32_t> loc;
          for (uint32_t q : fe) loc.push_back(q % uint32_t(3 * L * L));
          std::sort(loc.begin(), loc.end());
          // F2-reduce (repeats possible only at L=1 degeneracies)
          std::vector<uint32_t> red;
          for (std::size_t i = 0; i < loc.size();) {
            std::size_t j = i;
            while (j < loc.size() && loc[j] == loc[i]) ++j;
            if ((j - i) % 2) red.push_back(loc[i]);
            i = j;
          }
          cl.bnd[2][f] = red;
        }
      }
  }

  // position -> (color, vertex) lookup for face-center matching
  std::map<std::pair<int, int>, std::pair<int, uint32_t>> vertex_at;
  for (int c = 0; c < 3; ++c)
    for (int y = 0; y < L; ++y)
      for (int x = 0; x < L; ++x) {
        auto p = T.vertex_pos6(c, x, y);
        vertex_at[{T.wrap6(p[0]), T.wrap6(p[1])}] = {c, T.vertex(x, y)};
      }

  for (int c = 0; c < 3; ++c) {
    T.face_center_vertex[std::size_t(c)].resize(std::size_t(F));
    for (int y = 0; y < L; ++y)
      for (int x = 0; x < L; ++x)
        for (int ud = 0; ud < 2; ++ud) {
          auto fc = T.face_center6(c, x, y, ud);
          auto it = vertex_at.find({T.wrap6(fc[0]), T.wrap6(fc[1])});
          if (it == vertex_at.end())
            throw std::logic_error("build_tri_torus: face center not on a vertex");
          T.face_center_vertex[std::size_t(c)][T.face(x, y, ud)] = it->second;
        }
  }
  // invert: centered faces per vertex
  for (int c = 0; c < 3; ++c)
    T.centered_faces[std::size_t(c)].assign(std::size_t(V), {{{-1, 0}, {-1, 0}}});
  for (int c = 0; c < 3; ++c)
    for (uint32_t f = 0; f < uint32_t(F); ++f) {
      auto [vc, v] = T.face_center_vertex[std::size_t(c)][f];
      auto& slots = T.centered_faces[std::size_t(vc)][v];
      if (slots[0].first < 0) slots[0] = {c, f};
      else if (slots[1].first < 0) slots[1] = {c, f};
      else throw std::logic_error("build_tri_torus: more than two faces per center");
    }

  // stars (F2-reduced incident edges of own color)
  for (int c = 0; c < 3; ++c) {
    T.star[std::size_t(c)].resize(std::size_t(V));
    for (int y = 0; y < L; ++y)
      for (int x = 0; x < L; ++x) {
        std::vector<uint32_t> inc;
        static constexpr std::array<std::array<int, 2>, 3> dir = {{{1, 0}, {0, 1}, {1, 1}}};
        for (int d = 0; d < 3; ++d) {
          inc.push_back(T.qubit(c, x, y, d));
          inc.push_back(T.qubit(c, x - dir[std::size_t(d)][0], y - dir[std::size_t(d)][1], d));
        }
        std::sort(inc.begin(), inc.end());
        std::vector<uint32_t> red;
        for (std::size_t i = 0; i < inc.size();) {
          std::size_t j = i;
          while (j < inc.size() && inc[j] == inc[i]) ++j;
          if ((j - i) % 2) red.push_back(inc[i]);
          i = j;
        }
        T.star[std::size_t(c)][T.vertex(x, y)] = red;
      }
  }

  // hexagons: six edges of the two centered faces, clockwise from east
  for (int c = 0; c < 3; ++c) {
    T.hexagon[std::size_t(c)].resize(std::size_t(V));
    for (uint32_t v = 0; v < uint32_t(V); ++v) {
      auto center = T.sub[std::size_t(c)].coords[0][v];
      std::vector<std::pair<std::array<int, 2>, uint32_t>> pts;
      for (auto [fc, f] : T.centered_faces[std::size_t(c)][v]) {
        if (fc < 0) throw std::logic_error("missing centered face");
        for (uint32_t q : T.face_edges(fc, f)) {
          int qc, qx, qy, qd;
          T.qubit_parts(q, qc, qx, qy, qd);
          auto m = T.edge_mid6(qc, qx, qy, qd);
          // minimal residue displacement from center
          int dx = wrap_disp(m[0] - center[0], 6 * L);
          int dy = wrap_disp(m[1] - center[1], 6 * L);
          pts.push_back({{dx, dy}, q});
        }
      }
      if (pts.size() != 6) throw std::logic_error("hexagon: expected 6 qubits");
      std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return cw_less(a.first, b.first);
      });
      std::array<uint32_t, 6> hex{};
      for (int i = 0; i < 6; ++i) hex[std::size_t(i)] = pts[std::size_t(i)].second;
      T.hexagon[std::size_t(c)][v] = hex;
    }
  }
  return T;
}

}  // namespace tqdsim
