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

#ifndef COLORCODE_LATTICE_HPP
#define COLORCODE_LATTICE_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "f2.hpp"

namespace colorcode {

// Triangular dual lattice of the hexagonal color code on a torus.
//
// Vertices (x, y) mod L are checks; every unit square (x, y) is split by its
// anti-diagonal into two triangular faces (qubits): the Lower triangle with
// vertices (x,y), (x+1,y), (x,y+1) and the Upper triangle with vertices
// (x+1,y), (x,y+1), (x+1,y+1). Check colors follow (x - y) mod 3, which makes
// every triangle tricolored.
//
// Qubit index: (y*L + x)*2 + orientation, orientation 0 = Lower, 1 = Upper.
// Check index: y*L + x.

enum class Orientation : int { Lower = 0, Upper = 1 };

// A 2x2 block of squares holds two side-2 triangular cells of 4 qubits each.
// Qubit order: e0/e1/e2 are the corner triangles matching corner checks
// c0/c1/c2, e3 is the inverted center triangle. Mid-edge check order is fixed
// so that the in-cell supports are s0 -> {e0,e1,e3}, s1 -> {e0,e2,e3},
// s2 -> {e1,e2,e3}.
struct CellDescriptor {
  std::array<int, 4> qubits;        // e0, e1, e2, e3
  std::array<int, 3> mid_checks;    // s0, s1, s2
  std::array<int, 3> corner_checks; // c0, c1, c2 (corner k touches qubit ek)
  std::array<int, 3> edge_id;       // index into LevelGeometry::edges
  std::array<int, 3> edge_side;     // this cell's side (0 or 1) of that edge
};

// A mid-edge check shared by exactly two cells.
struct SharedEdge {
  int check = -1;
  std::array<int, 2> cell{-1, -1};
  std::array<int, 2> local{-1, -1};  // edge index (0..2) within each cell
};

// A corner check (both coordinates even) and its six incident qubits, each
// the matching corner qubit of a distinct cell.
struct CornerInfo {
  int check = -1;
  int coarse_check = -1;  // check index at the next-coarser level
  std::array<int, 6> qubit{};
  std::array<int, 6> cell{};
  std::array<int, 6> corner_index{};  // position of the qubit in its cell (0..2)
};

struct LevelGeometry {
  int level = 0;  // 0 = coarsest (L = 3), m = physical
  int L = 3;

  int num_qubits() const { return 2 * L * L; }
  int num_checks() const { return L * L; }

  int qubit_index(int x, int y, Orientation o) const;
  int check_index(int x, int y) const;
  // Color of check (x,y): (x - y) mod 3 -> 0:R, 1:B, 2:G.
  int check_color(int check) const;

  std::vector<std::vector<int>> check_qubits;        // check -> 6 qubits
  std::vector<std::array<int, 3>> qubit_checks;      // qubit -> 3 checks

  // Decomposition data; empty at level 0 (the base L = 3 is not decomposed).
  std::vector<CellDescriptor> cells;
  std::vector<SharedEdge> edges;
  std::vector<CornerInfo> corners;
  std::vector<int> qubit_cell;  // qubit -> owning cell
  std::vector<int> qubit_pos;   // qubit -> position (0..3) within its cell
};

// The tower of lattices L_l = 3 * 2^l for l = 0..m, with cell decompositions
// and rescale maps. Cell index at level l equals the coarse qubit index at
// level l-1; corner (2a, 2b) maps to coarse check (a, b). Immutable after
// construction and safe for concurrent reads.
class LatticeHierarchy {
 public:
  explicit LatticeHierarchy(int m);

  int m() const { return m_; }
  int num_levels() const { return m_ + 1; }
  const LevelGeometry& level(int l) const { return levels_[l]; }
  const LevelGeometry& top() const { return levels_[m_]; }
  const LevelGeometry& base() const { return levels_[0]; }

  const BinaryMatrix& check_matrix(int l) const { return check_matrices_[l]; }
  BitVector syndrome_of(int l, const BitVector& error) const;

  // Echelonized stabilizer rows of the top level, for residual-class tests.
  const RowspaceReducer& stabilizer_reducer() const { return *top_reducer_; }

  std::vector<BitVector> logical_basis(int l) const;

 private:
  int m_;
  std::vector<LevelGeometry> levels_;
  std::vector<BinaryMatrix> check_matrices_;
  std::unique_ptr<RowspaceReducer> top_reducer_;
};

// Constructive check of the side-n cell rescalability criterion: builds the
// side-n triangular cell and solves the GF(2) system for an error pattern on
// its n^2 qubits whose syndrome flips exactly the three corner checks.
// Returns solvability, which equals (n mod 3 != 0).
bool verify_rescalable(int n);

}  // namespace colorcode

#endif  // COLORCODE_LATTICE_HPP
