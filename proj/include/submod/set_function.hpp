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

#ifndef SUBMOD_SET_FUNCTION_HPP
#define SUBMOD_SET_FUNCTION_HPP

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "submod/ground.hpp"
#include "submod/rational.hpp"

namespace submod {

// Claimed properties. Flags are claims made by constructors and operations;
// they are never trusted by certification routines, which always recompute.
enum class Property : unsigned {
  Submodular = 1u << 0,
  Supermodular = 1u << 1,
  Modular = 1u << 2,
  Increasing = 1u << 3,
  Decreasing = 1u << 4,
  StronglySubmodular = 1u << 5,
  Normalized = 1u << 6,  // phi(empty) = 0
};

class FlagSet {
 public:
  FlagSet() = default;
  FlagSet(std::initializer_list<Property> props) {
    for (Property p : props) set(p);
  }
  bool has(Property p) const {
    return (bits_ & static_cast<unsigned>(p)) != 0;
  }
  FlagSet& set(Property p) {
    bits_ |= static_cast<unsigned>(p);
    return *this;
  }
  FlagSet with(Property p) const {
    FlagSet f = *this;
    f.set(p);
    return f;
  }
  unsigned bits() const { return bits_; }

 private:
  unsigned bits_ = 0;
};

// Exact functions compare with zero slack. Approximate functions (entropy,
// log-det) carry a declared tolerance; inequality certifications allow
// +/- tolerance per evaluation so rounding never forges a counterexample.
struct NumericMode {
  bool is_exact = true;
  double tolerance = 0.0;

  static NumericMode exact() { return NumericMode{}; }
  static NumericMode approximate(double tol) { return NumericMode{false, tol}; }

  Rational slack() const {
    return is_exact ? Rational(0) : rational_from_double(tolerance);
  }
  NumericMode combined(const NumericMode& other) const {
    if (is_exact && other.is_exact) return exact();
    return approximate(tolerance < other.tolerance ? other.tolerance
                                                   : tolerance);
  }
};

// Total, deterministic evaluation oracle on the subsets of a finite ground
// set. Immutable after construction; evaluation is pure and safe for
// concurrent use.
class SetFunction {
 public:
  using EvalFn = std::function<Rational(Subset)>;

  SetFunction() = default;
  SetFunction(GroundSet ground, EvalFn eval, FlagSet flags = {},
              NumericMode mode = {});

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  Subset full() const { return ground_.full_mask(); }

  Rational operator()(Subset mask) const { return (*eval_)(mask & full()); }

  FlagSet flags() const { return flags_; }
  bool has_flag(Property p) const { return flags_.has(p); }
  SetFunction with_flags(FlagSet flags) const;
  NumericMode mode() const { return mode_; }

  // Materializes all 2^n values into a table-backed copy.
  SetFunction tabulated() const;
  std::vector<Rational> table() const;

 private:
  GroundSet ground_;
  std::shared_ptr<const EvalFn> eval_;
  FlagSet flags_;
  NumericMode mode_;
};

// Table-backed construction used throughout the library.
SetFunction table_function(GroundSet ground, std::vector<Rational> values,
                           FlagSet flags = {}, NumericMode mode = {});

// User-facing tabled constructor: `values` must list every subset exactly
// once. IncompleteTable / DuplicateEntry otherwise. No flags are set.
SetFunction make_table_function(
    const GroundSet& ground,
    const std::vector<std::pair<Subset, Rational>>& values);

// ----- Exhaustive property certification (with witness extraction) -----

struct PairViolation {
  Subset x = 0;
  Subset y = 0;
};

// First incomparable pair violating phi(X u Y) + phi(X n Y) <= phi(X) + phi(Y).
std::optional<PairViolation> submodular_violation(const SetFunction& phi);
std::optional<PairViolation> supermodular_violation(const SetFunction& phi);
// Violation of modularity, reported as a pair (X, X u {i}).
std::optional<PairViolation> modular_violation(const SetFunction& phi);
// First single-atom step going the wrong way; pair is (X, X u {i}).
std::optional<PairViolation> increasing_violation(const SetFunction& phi);
std::optional<PairViolation> decreasing_violation(const SetFunction& phi);
// First disjoint pair with phi(X u Y) > phi(X) + phi(Y).
std::optional<PairViolation> subadditive_violation(const SetFunction& phi);

bool is_submodular(const SetFunction& phi);
bool is_supermodular(const SetFunction& phi);
bool is_modular(const SetFunction& phi);
bool is_increasing(const SetFunction& phi);
bool is_decreasing(const SetFunction& phi);
bool is_nonnegative(const SetFunction& phi);
bool is_normalized(const SetFunction& phi);  // phi(empty) == 0 (within slack)

void require_submodular(const SetFunction& phi, const char* operation);
void require_supermodular(const SetFunction& phi, const char* operation);
void require_increasing(const SetFunction& phi, const char* operation);
void require_normalized(const SetFunction& phi, const char* operation);

// max_X |phi(X)|.
Rational sup_norm(const SetFunction& phi);

}  // namespace submod

#endif  // SUBMOD_SET_FUNCTION_HPP
