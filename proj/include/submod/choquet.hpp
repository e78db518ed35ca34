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

#ifndef SUBMOD_CHOQUET_HPP
#define SUBMOD_CHOQUET_HPP

#include <optional>
#include <vector>

#include "submod/certificate.hpp"
#include "submod/charge.hpp"
#include "submod/linalg.hpp"
#include "submod/set_function.hpp"

namespace submod {

// Per-atom rational weights; on a finite ground set every bounded measurable
// function is one of these.
struct StepFunction {
  GroundSet ground;
  std::vector<Rational> values;

  StepFunction() = default;
  StepFunction(GroundSet g, std::vector<Rational> v);

  int n() const { return ground.size(); }
  const Rational& at(int atom) const { return values[atom]; }

  Rational norm() const;  // max |value|
  Rational min_value() const;
  Rational max_value() const;

  static StepFunction indicator(const GroundSet& g, Subset s);
  static StepFunction constant(const GroundSet& g, const Rational& c);

  StepFunction operator+(const StepFunction& other) const;
  StepFunction operator-(const StepFunction& other) const;
  StepFunction scaled(const Rational& c) const;
  StepFunction pointwise_max(const StepFunction& other) const;
  StepFunction pointwise_min(const StepFunction& other) const;

  bool operator==(const StepFunction& other) const {
    return ground == other.ground && values == other.values;
  }
};

// (f(x)-f(y)) (g(x)-g(y)) >= 0 for all atom pairs; returns a violating pair
// of atoms otherwise.
std::optional<std::pair<int, int>> comonotonicity_violation(
    const StepFunction& f, const StepFunction& g);

struct ChainTerm {
  Rational coeff;  // > 0
  Subset set = 0;
};

// f - base_offset = sum coeff_i * 1_{set_i} with sets strictly nested
// (stored ascending by inclusion). The canonical layer cake puts the offset
// at min(0, min f), so nonnegative functions carry no offset and constants
// appear as a term on the full ground set.
struct ChainRepresentation {
  Rational base_offset;
  std::vector<ChainTerm> terms;

  StepFunction reconstruct(const GroundSet& ground) const;
  bool is_chain() const;  // coefficients positive, sets strictly nested
};

ChainRepresentation layer_cake(const StepFunction& f);

// Choquet integral of f against phi via the layer cake. If phi(empty) != 0
// the integral of the shifted function phi - phi(empty) is returned.
Rational choquet(const SetFunction& phi, const StepFunction& f);

// One uncrossing exchange: coefficient mass moved from an incomparable pair
// onto its union and intersection.
struct UncrossStep {
  Subset h1 = 0;
  Subset h2 = 0;
  Rational transfer;
  Rational weighted_value_after;  // sum b_H phi(H) after the step
};

struct UncrossResult {
  ChainRepresentation chain;
  std::vector<UncrossStep> audit;
  Rational initial_value;
  Rational final_value;
};

// Repeatedly replaces the lexicographically smallest incomparable pair
// (H1, H2), moving min(b_H1, b_H2) of coefficient to H1 u H2 and H1 n H2.
// The represented function is preserved pointwise at every step and the
// weighted phi-sum never increases (phi submodular, phi(empty) = 0). The
// terminal family is a chain, so its weighted sum equals the Choquet
// integral of the represented function.
UncrossResult uncross(const std::vector<ChainTerm>& terms,
                      const SetFunction& phi);

// Convexity certificate for the Choquet extension: submodular inputs get
// seeded random subadditivity trials plus exact comonotonic additivity;
// non-submodular inputs yield the indicator counterexample pair from the
// violated submodular inequality.
Certificate certify_convexity(const SetFunction& phi, int trials,
                              std::uint64_t seed);

// |phi^(f) - phi^(g)| <= var(phi) ||f - g|| on seeded random pairs; the
// sharper ||phi|| bound is asserted too when phi is increasing.
Certificate lipschitz_check(const SetFunction& phi, int trials,
                            std::uint64_t seed);

// phi^(sum_y lambda_y F_y) <= sum_y lambda_y phi^(F_y), exact.
Certificate jensen_mix_check(const SetFunction& phi,
                             const std::vector<StepFunction>& columns,
                             const std::vector<Rational>& lambda);

// Iterated integrals of a slice-comonotonic table agree in both orders, and
// f.(g.alpha) = (fg).alpha for comonotonic step functions built from the
// table's columns. `table` holds F(x, y) with rows indexed by alpha's atoms
// and columns by beta's. Throws NotComonotonic (with a witness pair) when
// the table is not slice-comonotonic.
Certificate comonotonic_fubini_check(const Charge& alpha, const Charge& beta,
                                     const QMatrix& table);

}  // namespace submod

#endif  // SUBMOD_CHOQUET_HPP
