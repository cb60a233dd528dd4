// Copyright 2026 The colorcode authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lattice.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace colorcode {

namespace {
int wrap(int v, int L) {
  v %= L;
  return v < 0 ? v + L : v;
}
}  // namespace

int LevelGeometry::qubit_index(int x, int y, Orientation o) const {
  return (wrap(y, L) * L + wrap(x, L)) * 2 + static_cast<int>(o);
}

int LevelGeometry::check_index(int x, int y) const {
  return wrap(y, L) * L + wrap(x, L);
}

int LevelGeometry::check_color(int check) const {
  int x = check % L;
  int y = check / L;
  return wrap(x - y, 3);
}

namespace {

void build_incidence(LevelGeometry& g) {
  const int L = g.L;
  g.check_qubits.assign(g.num_checks(), {});
  g.qubit_checks.assign(g.num_qubits(), {});
  for (int y = 0; y < L; ++y) {
    for (int x = 0; x < L; ++x) {
      int c = g.check_index(x, y);
      // The six triangles touching vertex (x, y).
      g.check_qubits[c] = {
          g.qubit_index(x, y, Orientation::Lower),
          g.qubit_index(x - 1, y, Orientation::Lower),
          g.qubit_index(x, y - 1, Orientation::Lower),
          g.qubit_index(x - 1, y, Orientation::Upper),
          g.qubit_index(x, y - 1, Orientation::Upper),
          g.qubit_index(x - 1, y - 1, Orientation::Upper),
      };
    }
  }
  for (int y = 0; y < L; ++y) {
    for (int x = 0; x < L; ++x) {
      int lo = g.qubit_index(x, y, Orientation::Lower);
      g.qubit_checks[lo] = {g.check_index(x, y), g.check_index(x + 1, y),
                            g.check_index(x, y + 1)};
      int up = g.qubit_index(x, y, Orientation::Upper);
      g.qubit_checks[up] = {g.check_index(x + 1, y), g.check_index(x, y + 1),
                            g.check_index(x + 1, y + 1)};
    }
  }
}

void build_cells(LevelGeometry& g) {
  const int L = g.L;
  if (L % 2 != 0)
    throw std::invalid_argument("cell decomposition requires an even side");
  const int B = L / 2;  // blocks per axis; block (i,j) anchored at (2i, 2j)

  g.cells.clear();
  g.qubit_cell.assign(g.num_qubits(), -1);
  g.qubit_pos.assign(g.num_qubits(), -1);

  for (int j = 0; j < B; ++j) {
    for (int i = 0; i < B; ++i) {
      const int bx = 2 * i, by = 2 * j;
      CellDescriptor lower;
      lower.qubits = {g.qubit_index(bx, by, Orientation::Lower),
                      g.qubit_index(bx + 1, by, Orientation::Lower),
                      g.qubit_index(bx, by + 1, Orientation::Lower),
                      g.qubit_index(bx, by, Orientation::Upper)};
      lower.mid_checks = {g.check_index(bx + 1, by), g.check_index(bx, by + 1),
                          g.check_index(bx + 1, by + 1)};
      lower.corner_checks = {g.check_index(bx, by), g.check_index(bx + 2, by),
                             g.check_index(bx, by + 2)};
      CellDescriptor upper;
      upper.qubits = {g.qubit_index(bx + 1, by, Orientation::Upper),
                      g.qubit_index(bx, by + 1, Orientation::Upper),
                      g.qubit_index(bx + 1, by + 1, Orientation::Upper),
                      g.qubit_index(bx + 1, by + 1, Orientation::Lower)};
      upper.mid_checks = {g.check_index(bx + 1, by + 1),
                          g.check_index(bx + 2, by + 1),
                          g.check_index(bx + 1, by + 2)};
      upper.corner_checks = {g.check_index(bx + 2, by),
                             g.check_index(bx, by + 2),
                             g.check_index(bx + 2, by + 2)};
      // Cell index matches the coarse qubit index at the next level down.
      g.cells.push_back(lower);
      g.cells.push_back(upper);
    }
  }

  for (std::size_t c = 0; c < g.cells.size(); ++c) {
    for (int k = 0; k < 4; ++k) {
      int q = g.cells[c].qubits[k];
      g.qubit_cell[q] = static_cast<int>(c);
      g.qubit_pos[q] = k;
    }
  }

  // Shared-edge registry: each mid-edge check is listed by exactly two cells.
  g.edges.clear();
  std::map<int, int> edge_of_check;
  for (std::size_t c = 0; c < g.cells.size(); ++c) {
    for (int e = 0; e < 3; ++e) {
      int check = g.cells[c].mid_checks[e];
      auto it = edge_of_check.find(check);
      int id;
      if (it == edge_of_check.end()) {
        id = static_cast<int>(g.edges.size());
        g.edges.push_back(SharedEdge{});
        g.edges[id].check = check;
        edge_of_check.emplace(check, id);
      } else {
        id = it->second;
      }
      SharedEdge& edge = g.edges[id];
      int side = edge.cell[0] == -1 ? 0 : 1;
      if (side == 1 && edge.cell[1] != -1)
        throw std::logic_error("mid-edge check shared by more than two cells");
      edge.cell[side] = static_cast<int>(c);
      edge.local[side] = e;
      g.cells[c].edge_id[e] = id;
      g.cells[c].edge_side[e] = side;
    }
  }
  for (const SharedEdge& e : g.edges)
    if (e.cell[0] == -1 || e.cell[1] == -1)
      throw std::logic_error("mid-edge check with a single owning cell");

  // Corner neighborhoods: checks with both coordinates even.
  g.corners.clear();
  for (int b = 0; b < B; ++b) {
    for (int a = 0; a < B; ++a) {
      CornerInfo info;
      info.check = g.check_index(2 * a, 2 * b);
      info.coarse_check = b * B + a;
      const auto& qs = g.check_qubits[info.check];
      for (int k = 0; k < 6; ++k) {
        info.qubit[k] = qs[k];
        info.cell[k] = g.qubit_cell[qs[k]];
        info.corner_index[k] = g.qubit_pos[qs[k]];
        if (info.corner_index[k] > 2)
          throw std::logic_error("corner check incident to a center qubit");
      }
      g.corners.push_back(info);
    }
  }
}

BinaryMatrix build_check_matrix(const LevelGeometry& g) {
  BinaryMatrix h(g.num_checks(), g.num_qubits());
  for (int c = 0; c < g.num_checks(); ++c)
    for (int q : g.check_qubits[c]) h.set(c, q, true);
  return h;
}

}  // namespace

LatticeHierarchy::LatticeHierarchy(int m) : m_(m) {
  if (m < 0) throw std::invalid_argument("LatticeHierarchy: m must be >= 0");
  levels_.resize(m + 1);
  for (int l = 0; l <= m; ++l) {
    LevelGeometry& g = levels_[l];
    g.level = l;
    g.L = 3 << l;
    build_incidence(g);
    if (l >= 1) build_cells(g);
    check_matrices_.push_back(build_check_matrix(g));
  }
  top_reducer_ = std::make_unique<RowspaceReducer>(check_matrices_[m_]);
}

BitVector LatticeHierarchy::syndrome_of(int l, const BitVector& error) const {
  const LevelGeometry& g = levels_[l];
  if (static_cast<int>(error.size()) != g.num_qubits())
    throw std::invalid_argument("syndrome_of: error length mismatch");
  BitVector s(g.num_checks());
  for (int q = 0; q < g.num_qubits(); ++q) {
    if (!error.get(q)) continue;
    for (int c : g.qubit_checks[q]) s.flip(c);
  }
  return s;
}

std::vector<BitVector> LatticeHierarchy::logical_basis(int l) const {
  return quotient_basis(check_matrices_[l]);
}

bool verify_rescalable(int n) {
  if (n < 1) throw std::invalid_argument("verify_rescalable: n must be >= 1");
  // Side-n triangular cell: vertices (x, y) with x, y >= 0 and x + y <= n;
  // lower triangles for x + y <= n-1 and upper triangles for x + y <= n-2,
  // n^2 qubits in total.
  auto vertex_id = [n](int x, int y) {
    // Row y has n + 1 - y vertices.
    return y * (n + 2) - y * (y + 1) / 2 + x;
  };
  int num_vertices = (n + 1) * (n + 2) / 2;

  std::vector<std::array<int, 3>> qubit_vertices;
  for (int y = 0; y < n; ++y)
    for (int x = 0; x + y <= n - 1; ++x)
      qubit_vertices.push_back(
          {vertex_id(x, y), vertex_id(x + 1, y), vertex_id(x, y + 1)});
  for (int y = 0; y + 1 < n; ++y)
    for (int x = 0; x + y <= n - 2; ++x)
      qubit_vertices.push_back(
          {vertex_id(x + 1, y), vertex_id(x, y + 1), vertex_id(x + 1, y + 1)});

  int num_qubits = static_cast<int>(qubit_vertices.size());
  if (num_qubits != n * n)
    throw std::logic_error("verify_rescalable: qubit count mismatch");

  // Augmented system A e = b: one parity row per vertex, target 1 on the
  // three corners and 0 elsewhere.
  BinaryMatrix aug(num_vertices, num_qubits + 1);
  for (int q = 0; q < num_qubits; ++q)
    for (int v : qubit_vertices[q]) aug.set(v, q, true);
  aug.set(vertex_id(0, 0), num_qubits, true);
  aug.set(vertex_id(n, 0), num_qubits, true);
  aug.set(vertex_id(0, n), num_qubits, true);

  // Consistent iff no reduced row is (0 ... 0 | 1).
  GaussResult g = gauss_reduce(aug);
  for (std::size_t r = 0; r < g.rank; ++r) {
    if (g.pivots[r] == static_cast<std::size_t>(num_qubits)) return false;
  }
  return true;
}

}  // namespace colorcode
