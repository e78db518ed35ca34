// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBMOD_LINALG_HPP
#define SUBMOD_LINALG_HPP

#include <optional>
#include <vector>

#include "submod/rational.hpp"

namespace submod {

// Dense rational matrix; sizes here stay small (at most 2^6 x 2^6 for the
// union-matrix work, n x n for generators).
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool operator==(const QMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
  }

  static QMatrix identity(int n);
  QMatrix transposed() const;
  QMatrix operator*(const QMatrix& other) const;
  bool is_symmetric() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

// Rank by fraction-free-ish Gaussian elimination (exact pivots).
int rational_rank(QMatrix m);

// Solves A x = b for square A; nullopt when singular.
std::optional<std::vector<Rational>> solve_linear(QMatrix a,
                                                  std::vector<Rational> b);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

// Inertia of a symmetric matrix by exact symmetric elimination (congruence
// transforms only, so Sylvester's law applies). When all remaining diagonal
// entries vanish but an off-diagonal entry a_ij does not, the congruence
// row_i += row_j / col_i += col_j manufactures the nonzero pivot 2*a_ij.
// If `positive_direction` is given and a positive pivot appears, it receives
// a vector y with y^T A y > 0.
Inertia symmetric_inertia(QMatrix a,
                          std::vector<Rational>* positive_direction = nullptr);

// Exact positive-definiteness: all pivots positive in diagonal elimination
// without row exchanges (equivalently all leading principal minors > 0).
bool is_positive_definite(const QMatrix& a);

// det(A) by exact elimination.
Rational determinant(QMatrix a);

}  // namespace submod

#endif  // SUBMOD_LINALG_HPP
