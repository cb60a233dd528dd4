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

#ifndef COLORCODE_F2_HPP
#define COLORCODE_F2_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace colorcode {

// Dense bit vector over GF(2), packed into 64-bit words. Unused tail bits of
// the last word are kept zero so that equality and weight work wordwise.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length)
      : length_(length), words_((length + 63) / 64, 0) {}

  static BitVector from_string(const std::string& bits);

  std::size_t size() const { return length_; }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool value) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool is_zero() const;
  std::size_t weight() const;
  // Parity of the inner product <*this, other>.
  bool dot(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }
  bool operator==(const BitVector&) const = default;

  std::string to_string() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, BitVector(cols)) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }

  // M * v over GF(2); v.size() must equal cols().
  BitVector multiply(const BitVector& v) const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct GaussResult {
  std::size_t rank = 0;
  BinaryMatrix reduced;               // reduced row-echelon form
  std::vector<std::size_t> pivots;    // strictly increasing column indices
};

GaussResult gauss_reduce(const BinaryMatrix& m);

// Independent vectors spanning ker(M); count = cols - rank.
std::vector<BitVector> kernel_basis(const BinaryMatrix& m);

bool in_rowspace(const BinaryMatrix& m, const BitVector& v);

// Representatives of a basis of ker(H) / rowspace(H). Requires H*H^T = 0;
// throws std::invalid_argument otherwise. Count = cols - 2*rank(H).
std::vector<BitVector> quotient_basis(const BinaryMatrix& h);

// Precomputed echelon rows for repeated rowspace-membership queries.
class RowspaceReducer {
 public:
  explicit RowspaceReducer(const BinaryMatrix& m);

  std::size_t rank() const { return rows_.size(); }
  // Residual of v after eliminating against the rowspace.
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return reduce(v).is_zero(); }

 private:
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace colorcode

#endif  // COLORCODE_F2_HPP
