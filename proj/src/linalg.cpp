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

#include "submod/linalg.hpp"

#include "submod/errors.hpp"

namespace submod {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) {
    throw SubmodError(ErrorCode::ShapeError, "matrix product shapes");
  }
  QMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        if (other.at(k, j) == 0) continue;
        out.at(i, j) += aik * other.at(k, j);
      }
    }
  }
  return out;
}

bool QMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

int rational_rank(QMatrix m) {
  int rank = 0;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    }
    const Rational p = m.at(row, col);
    for (int i = row + 1; i < m.rows(); ++i) {
      if (m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col) / p;
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rational>> solve_linear(QMatrix a,
                                                  std::vector<Rational> b) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n) {
    throw SubmodError(ErrorCode::ShapeError, "solve_linear shapes");
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i) {
      if (a.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      std::swap(b[pivot], b[col]);
    }
    const Rational p = a.at(col, col);
    for (int i = 0; i < n; ++i) {
      if (i == col || a.at(i, col) == 0) continue;
      const Rational f = a.at(i, col) / p;
      for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
      b[i] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a.at(i, i);
  return x;
}

Inertia symmetric_inertia(QMatrix a,
                          std::vector<Rational>* positive_direction) {
  const int n = a.rows();
  if (!a.is_symmetric()) {
    throw SubmodError(ErrorCode::ShapeError, "inertia needs a symmetric matrix");
  }
  // Columns of E track the congruence: current form = E^T A0 E on the
  // not-yet-eliminated coordinates.
  QMatrix e;
  if (positive_direction) e = QMatrix::identity(n);
  std::vector<bool> done(n, false);
  Inertia inertia;
  for (int step = 0; step < n; ++step) {
    int p = -1;
    for (int i = 0; i < n; ++i) {
      if (!done[i] && a.at(i, i) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) {
      // All active diagonals vanish; look for an off-diagonal entry.
      int oi = -1, oj = -1;
      for (int i = 0; i < n && oi < 0; ++i) {
        if (done[i]) continue;
        for (int j = i + 1; j < n; ++j) {
          if (!done[j] && a.at(i, j) != 0) {
            oi = i;
            oj = j;
            break;
          }
        }
      }
      if (oi < 0) {
        inertia.zero = n - inertia.positive - inertia.negative;
        return inertia;
      }
      // row_i += row_j, col_i += col_j; new a_ii = 2 a_ij != 0.
      for (int k = 0; k < n; ++k) a.at(oi, k) += a.at(oj, k);
      for (int k = 0; k < n; ++k) a.at(k, oi) += a.at(k, oj);
      if (positive_direction) {
        for (int k = 0; k < n; ++k) e.at(k, oi) += e.at(k, oj);
      }
      p = oi;
    }
    const Rational pivot = a.at(p, p);
    if (pivot > 0) {
      ++inertia.positive;
      if (positive_direction && positive_direction->empty()) {
        positive_direction->resize(n);
        for (int k = 0; k < n; ++k) (*positive_direction)[k] = e.at(k, p);
      }
    } else {
      ++inertia.negative;
    }
    done[p] = true;
    // All row eliminations first, then the matching column eliminations;
    // interleaving them per index would read already-zeroed pivot entries.
    std::vector<Rational> factor(n);
    for (int i = 0; i < n; ++i) {
      if (done[i] || a.at(i, p) == 0) continue;
      factor[i] = a.at(i, p) / pivot;
    }
    for (int i = 0; i < n; ++i) {
      if (done[i] || factor[i] == 0) continue;
      for (int k = 0; k < n; ++k) a.at(i, k) -= factor[i] * a.at(p, k);
    }
    for (int i = 0; i < n; ++i) {
      if (done[i] || factor[i] == 0) continue;
      for (int k = 0; k < n; ++k) a.at(k, i) -= factor[i] * a.at(k, p);
      if (positive_direction) {
        for (int k = 0; k < n; ++k) e.at(k, i) -= factor[i] * e.at(k, p);
      }
    }
  }
  inertia.zero = n - inertia.positive - inertia.negative;
  return inertia;
}

bool is_positive_definite(const QMatrix& a) {
  if (!a.is_symmetric()) return false;
  QMatrix m = a;
  const int n = m.rows();
  for (int col = 0; col < n; ++col) {
    if (m.at(col, col) <= 0) return false;
    const Rational p = m.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col) / p;
      for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return true;
}

Rational determinant(QMatrix a) {
  const int n = a.rows();
  if (a.cols() != n) {
    throw SubmodError(ErrorCode::ShapeError, "determinant needs square matrix");
  }
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i) {
      if (a.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    const Rational p = a.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (a.at(i, col) == 0) continue;
      const Rational f = a.at(i, col) / p;
      for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
    }
  }
  return det;
}

}  // namespace submod
