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

#include "f2.hpp"

#include <bit>
#include <stdexcept>

namespace colorcode {

BitVector BitVector::from_string(const std::string& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i, true);
    else if (bits[i] != '0')
      throw std::invalid_argument("bitstring must contain only '0' and '1'");
  }
  return v;
}

bool BitVector::is_zero() const {
  for (std::uint64_t w : words_)
    if (w != 0) return false;
  return true;
}

std::size_t BitVector::weight() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

bool BitVector::dot(const BitVector& other) const {
  if (length_ != other.length_)
    throw std::invalid_argument("BitVector::dot: length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (length_ != other.length_)
    throw std::invalid_argument("BitVector::operator^=: length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitVector BinaryMatrix::multiply(const BitVector& v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("BinaryMatrix::multiply: length mismatch");
  BitVector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out.set(r, rows_[r].dot(v));
  return out;
}

GaussResult gauss_reduce(const BinaryMatrix& m) {
  GaussResult res;
  res.reduced = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && !res.reduced.get(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) std::swap(res.reduced.row(pivot), res.reduced.row(r));
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && res.reduced.get(i, c)) res.reduced.row(i) ^= res.reduced.row(r);
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::vector<BitVector> kernel_basis(const BinaryMatrix& m) {
  GaussResult g = gauss_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : g.pivots) is_pivot[p] = true;
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector v(m.cols());
    v.set(f, true);
    for (std::size_t i = 0; i < g.rank; ++i)
      if (g.reduced.get(i, f)) v.set(g.pivots[i], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

RowspaceReducer::RowspaceReducer(const BinaryMatrix& m) {
  GaussResult g = gauss_reduce(m);
  for (std::size_t i = 0; i < g.rank; ++i) rows_.push_back(g.reduced.row(i));
  pivots_ = g.pivots;
}

BitVector RowspaceReducer::reduce(BitVector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(pivots_[i])) v ^= rows_[i];
  return v;
}

bool in_rowspace(const BinaryMatrix& m, const BitVector& v) {
  if (v.size() != m.cols())
    throw std::invalid_argument("in_rowspace: length mismatch");
  return RowspaceReducer(m).contains(v);
}

std::vector<BitVector> quotient_basis(const BinaryMatrix& h) {
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = i; j < h.rows(); ++j)
      if (h.row(i).dot(h.row(j)))
        throw std::invalid_argument(
            "quotient_basis: rowspace is not self-orthogonal (H*H^T != 0)");

  RowspaceReducer rowspace(h);
  std::vector<BitVector> reps;
  // Echelon rows built from residuals of accepted representatives; a kernel
  // vector with a nonzero residual here is independent of the rowspace and of
  // every representative selected so far.
  std::vector<BitVector> ext_rows;
  std::vector<std::size_t> ext_pivots;
  for (BitVector& k : kernel_basis(h)) {
    BitVector res = rowspace.reduce(k);
    for (std::size_t i = 0; i < ext_rows.size(); ++i)
      if (res.get(ext_pivots[i])) res ^= ext_rows[i];
    if (res.is_zero()) continue;
    std::size_t p = 0;
    while (!res.get(p)) ++p;
    ext_rows.push_back(std::move(res));
    ext_pivots.push_back(p);
    reps.push_back(std::move(k));
  }
  return reps;
}

}  // namespace colorcode
