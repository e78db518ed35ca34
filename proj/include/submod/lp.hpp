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

#ifndef SUBMOD_LP_HPP
#define SUBMOD_LP_HPP

#include <vector>

#include "submod/rational.hpp"

namespace submod {

enum class ConstraintSense { LE, EQ };

struct LPConstraint {
  std::vector<Rational> coeff;
  ConstraintSense sense = ConstraintSense::LE;
  Rational rhs;
};

// maximize objective . x over free x subject to the constraints. The
// module's uses have few variables and up to 2^(n+1) constraints, so the
// simplex below works on the dual, whose tableau is (num_vars) rows wide.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LPConstraint> constraints;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  std::vector<Rational> x;      // primal optimum (Optimal)
  Rational value;               // optimal objective (Optimal)
  std::vector<Rational> dual;   // multiplier per constraint (Optimal)
  std::vector<Rational> farkas; // infeasibility certificate (Infeasible):
                                // y >= 0 on LE rows, sum y_r a_r = 0,
                                // sum y_r b_r < 0
};

// Exact primal simplex with Bland's rule (applied to the dual program).
// Optimal solutions are re-verified: primal feasibility, dual feasibility
// and equal objectives are checked exactly before returning.
LPSolution solve_lp(const LinearProgram& lp);

}  // namespace submod

#endif  // SUBMOD_LP_HPP
