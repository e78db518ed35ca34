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

#include "submod/lp.hpp"

#include <optional>

#include "submod/errors.hpp"
#include "submod/linalg.hpp"

namespace submod {

namespace {

// The primal (free x, constraints a.x <= b or a.x = b, maximize c.x) is
// solved through its dual
//     min  sum_r y_r b_r
//     s.t. sum_r y_r a_r = c,   y_r >= 0 (LE rows), y_r free (EQ rows),
// which has num_vars equality rows and one column per constraint (two for
// EQ constraints, split into +/-). Strong duality recovers x as the simplex
// multipliers of the optimal dual basis.
struct DualColumn {
  std::vector<Rational> a;  // length m = num_vars (after row flips)
  Rational cost;            // b_r (or -b_r for the negative split)
  int constraint = -1;
  int sign = +1;
};

class DualSimplex {
 public:
  explicit DualSimplex(const LinearProgram& lp) : lp_(lp), m_(lp.num_vars) {
    flip_.assign(m_, false);
    rhs_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      rhs_[i] = lp.objective[i];
      if (rhs_[i] < 0) {
        flip_[i] = true;
        rhs_[i] = -rhs_[i];
      }
    }
    for (int r = 0; r < static_cast<int>(lp.constraints.size()); ++r) {
      const LPConstraint& c = lp.constraints[r];
      DualColumn col;
      col.a.resize(m_);
      for (int i = 0; i < m_; ++i) {
        col.a[i] = flip_[i] ? Rational(-c.coeff[i]) : c.coeff[i];
      }
      col.cost = c.rhs;
      col.constraint = r;
      col.sign = +1;
      columns_.push_back(col);
      if (c.sense == ConstraintSense::EQ) {
        DualColumn neg;
        neg.a.resize(m_);
        for (int i = 0; i < m_; ++i) neg.a[i] = -col.a[i];
        neg.cost = -c.rhs;
        neg.constraint = r;
        neg.sign = -1;
        columns_.push_back(neg);
      }
    }
    k_ = static_cast<int>(columns_.size());
    // Tableau columns: real columns, then m artificials.
    tableau_.assign(m_, std::vector<Rational>(k_ + m_));
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < k_; ++j) tableau_[i][j] = columns_[j].a[i];
      tableau_[i][k_ + i] = 1;
      basis_[i] = k_ + i;
    }
  }

  LPSolution run() {
    LPSolution out;
    // Phase 1: drive artificial mass to zero.
    std::vector<Rational> phase1(k_ + m_);
    for (int i = 0; i < m_; ++i) phase1[k_ + i] = 1;
    if (simplex_loop(phase1, /*allow_artificial=*/true)) {
      throw SubmodError(ErrorCode::InternalError, "LP: phase 1 unbounded");
    }
    Rational infeasibility_mass(0);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] >= k_) infeasibility_mass += rhs_[i];
    }
    if (infeasibility_mass > 0) {
      // Dual infeasible: the primal is unbounded (or vacuously infeasible);
      // none of the library's callers generate this.
      out.status = LPStatus::Unbounded;
      return out;
    }
    drive_out_artificials();

    // Phase 2 on the true costs.
    std::vector<Rational> costs(k_ + m_);
    for (int j = 0; j < k_; ++j) costs[j] = columns_[j].cost;
    std::optional<int> unbounded_col = simplex_loop(costs, false);
    if (unbounded_col) {
      out.status = LPStatus::Infeasible;
      out.farkas = extract_ray(*unbounded_col);
      return out;
    }
    return extract_optimum(costs);
  }

 private:
  // Returns the entering column index if the program is unbounded in that
  // direction, nullopt at optimality.
  std::optional<int> simplex_loop(const std::vector<Rational>& costs,
                                  bool allow_artificial) {
    for (;;) {
      // Simplex multipliers: pi solves B^T pi = cost_B; with a canonical
      // tableau the reduced cost is cost_j - cost_B . T_j directly.
      std::vector<Rational> basic_cost(m_);
      for (int i = 0; i < m_; ++i) basic_cost[i] = costs[basis_[i]];
      int entering = -1;
      const int limit = allow_artificial ? k_ + m_ : k_;
      for (int j = 0; j < limit; ++j) {
        Rational rc = costs[j];
        for (int i = 0; i < m_; ++i) {
          if (tableau_[i][j] != 0) rc -= basic_cost[i] * tableau_[i][j];
        }
        if (rc < 0) {
          entering = j;  // Bland: smallest index
          break;
        }
      }
      if (entering < 0) return std::nullopt;
      int leaving = -1;
      Rational best_ratio;
      for (int i = 0; i < m_; ++i) {
        if (tableau_[i][entering] <= 0) continue;
        Rational ratio = rhs_[i] / tableau_[i][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return entering;  // unbounded direction
      pivot(leaving, entering);
    }
  }

  void pivot(int row, int col) {
    const Rational p = tableau_[row][col];
    for (auto& v : tableau_[row]) {
      if (v != 0) v /= p;
    }
    rhs_[row] /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == row || tableau_[i][col] == 0) continue;
      const Rational f = tableau_[i][col];
      for (int j = 0; j < k_ + m_; ++j) {
        if (tableau_[row][j] != 0) tableau_[i][j] -= f * tableau_[row][j];
      }
      rhs_[i] -= f * rhs_[row];
    }
    basis_[row] = col;
  }

  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < k_) continue;
      int j = 0;
      while (j < k_ && tableau_[i][j] == 0) ++j;
      if (j == k_) {
        // Dependent row: cannot happen for the LPs this library builds
        // (every instance contains all singleton-indicator columns).
        throw SubmodError(ErrorCode::InternalError,
                          "LP: linearly dependent dual row");
      }
      pivot(i, j);  // rhs is zero here, so feasibility is preserved
    }
  }

  std::vector<Rational> extract_ray(int entering) {
    // Unbounded dual ray == primal Farkas certificate.
    std::vector<Rational> ray(lp_.constraints.size());
    const DualColumn& ec = columns_[entering];
    ray[ec.constraint] += Rational(ec.sign);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] >= k_ || tableau_[i][entering] == 0) continue;
      const DualColumn& bc = columns_[basis_[i]];
      ray[bc.constraint] -= Rational(bc.sign) * tableau_[i][entering];
    }
    // Sanity: sum_r ray_r a_r = 0 and sum_r ray_r b_r < 0.
    std::vector<Rational> combo(m_);
    Rational cost(0);
    for (std::size_t r = 0; r < ray.size(); ++r) {
      if (ray[r] == 0) continue;
      if (lp_.constraints[r].sense == ConstraintSense::LE && ray[r] < 0) {
        throw SubmodError(ErrorCode::InternalError, "LP: signed Farkas ray");
      }
      for (int i = 0; i < m_; ++i) {
        combo[i] += ray[r] * lp_.constraints[r].coeff[i];
      }
      cost += ray[r] * lp_.constraints[r].rhs;
    }
    for (const Rational& v : combo) {
      if (v != 0) {
        throw SubmodError(ErrorCode::InternalError, "LP: invalid Farkas ray");
      }
    }
    if (cost >= 0) {
      throw SubmodError(ErrorCode::InternalError, "LP: nonnegative Farkas ray");
    }
    return ray;
  }

  LPSolution extract_optimum(const std::vector<Rational>& costs) {
    LPSolution out;
    out.status = LPStatus::Optimal;
    // Dual solution per original constraint.
    out.dual.assign(lp_.constraints.size(), Rational(0));
    Rational value(0);
    for (int i = 0; i < m_; ++i) {
      const DualColumn& bc = columns_[basis_[i]];
      out.dual[bc.constraint] += Rational(bc.sign) * rhs_[i];
      value += costs[basis_[i]] * rhs_[i];
    }
    out.value = value;
    // Primal x = simplex multipliers: solve (A_B)^T pi = cost_B on the
    // original (unpivoted) columns, then undo the row sign flips.
    QMatrix bt(m_, m_);
    std::vector<Rational> cb(m_);
    for (int i = 0; i < m_; ++i) {
      const DualColumn& bc = columns_[basis_[i]];
      for (int r = 0; r < m_; ++r) bt.at(i, r) = bc.a[r];
      cb[i] = bc.cost;
    }
    auto pi = solve_linear(bt, cb);
    if (!pi) {
      throw SubmodError(ErrorCode::InternalError, "LP: singular basis");
    }
    out.x.resize(m_);
    for (int i = 0; i < m_; ++i) {
      out.x[i] = flip_[i] ? Rational(-(*pi)[i]) : (*pi)[i];
    }
    verify(out);
    return out;
  }

  // Exact optimality certificate: primal feasible, dual feasible, objectives
  // equal. Any failure is a solver bug, not a caller error.
  void verify(const LPSolution& out) const {
    Rational primal(0);
    for (int i = 0; i < m_; ++i) primal += lp_.objective[i] * out.x[i];
    if (primal != out.value) {
      throw SubmodError(ErrorCode::InternalError, "LP: duality gap");
    }
    std::vector<Rational> combo(m_);
    Rational dual_value(0);
    for (std::size_t r = 0; r < lp_.constraints.size(); ++r) {
      const LPConstraint& c = lp_.constraints[r];
      Rational lhs(0);
      for (int i = 0; i < m_; ++i) lhs += c.coeff[i] * out.x[i];
      if (c.sense == ConstraintSense::LE ? lhs > c.rhs : lhs != c.rhs) {
        throw SubmodError(ErrorCode::InternalError, "LP: infeasible optimum");
      }
      const Rational& y = out.dual[r];
      if (c.sense == ConstraintSense::LE && y < 0) {
        throw SubmodError(ErrorCode::InternalError, "LP: negative multiplier");
      }
      if (y != 0) {
        for (int i = 0; i < m_; ++i) combo[i] += y * c.coeff[i];
        dual_value += y * c.rhs;
      }
    }
    for (int i = 0; i < m_; ++i) {
      if (combo[i] != lp_.objective[i]) {
        throw SubmodError(ErrorCode::InternalError, "LP: dual infeasible");
      }
    }
    if (dual_value != out.value) {
      throw SubmodError(ErrorCode::InternalError, "LP: dual value mismatch");
    }
  }

  const LinearProgram& lp_;
  int m_ = 0;
  int k_ = 0;
  std::vector<bool> flip_;
  std::vector<DualColumn> columns_;
  std::vector<std::vector<Rational>> tableau_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
};

}  // namespace

LPSolution solve_lp(const LinearProgram& lp) {
  if (lp.num_vars <= 0 ||
      static_cast<int>(lp.objective.size()) != lp.num_vars) {
    throw SubmodError(ErrorCode::ShapeError, "LP objective size");
  }
  for (const auto& c : lp.constraints) {
    if (static_cast<int>(c.coeff.size()) != lp.num_vars) {
      throw SubmodError(ErrorCode::ShapeError, "LP constraint size");
    }
  }
  return DualSimplex(lp).run();
}

}  // namespace submod
