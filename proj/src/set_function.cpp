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

#include "submod/set_function.hpp"

namespace submod {

SetFunction::SetFunction(GroundSet ground, EvalFn eval, FlagSet flags,
                         NumericMode mode)
    : ground_(std::move(ground)),
      eval_(std::make_shared<const EvalFn>(std::move(eval))),
      flags_(flags),
      mode_(mode) {
  require_ground_size(ground_.size(), "SetFunction");
}

SetFunction SetFunction::with_flags(FlagSet flags) const {
  SetFunction copy = *this;
  copy.flags_ = flags;
  return copy;
}

SetFunction SetFunction::tabulated() const {
  return table_function(ground_, table(), flags_, mode_);
}

std::vector<Rational> SetFunction::table() const {
  const std::uint64_t count = ground_.subset_count();
  std::vector<Rational> values(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    values[mask] = (*eval_)(static_cast<Subset>(mask));
  }
  return values;
}

SetFunction table_function(GroundSet ground, std::vector<Rational> values,
                           FlagSet flags, NumericMode mode) {
  if (values.size() != ground.subset_count()) {
    throw SubmodError(ErrorCode::ShapeError, "table size mismatch");
  }
  auto data = std::make_shared<const std::vector<Rational>>(std::move(values));
  return SetFunction(
      std::move(ground), [data](Subset mask) { return (*data)[mask]; }, flags,
      mode);
}

SetFunction make_table_function(
    const GroundSet& ground,
    const std::vector<std::pair<Subset, Rational>>& values) {
  const std::uint64_t count = ground.subset_count();
  std::vector<Rational> table(count);
  std::vector<bool> seen(count, false);
  for (const auto& [mask, value] : values) {
    if (mask > ground.full_mask()) {
      throw SubmodError(ErrorCode::BadArgument, "subset outside ground set");
    }
    if (seen[mask]) {
      throw SubmodError(ErrorCode::DuplicateEntry,
                        "duplicate table entry for " +
                            ground.subset_name(mask));
    }
    seen[mask] = true;
    table[mask] = value;
  }
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (!seen[mask]) {
      throw SubmodError(ErrorCode::IncompleteTable,
                        "missing table entry for " +
                            ground.subset_name(static_cast<Subset>(mask)));
    }
  }
  return table_function(ground, std::move(table));
}

namespace {

// Comparable pairs satisfy the (sub/super)modular inequality with equality,
// so only incomparable pairs are scanned.
template <typename Cmp>
std::optional<PairViolation> pair_scan(const SetFunction& phi, Cmp violates) {
  const SetFunction tab = phi.tabulated();
  const Subset full = tab.full();
  const Rational slack = tab.mode().slack() * 4;
  for (Subset x = 1; x < full; ++x) {
    for (Subset y = x + 1; y <= full; ++y) {
      if ((x & y) == x || (x & y) == y) continue;
      const Rational lhs = tab(x | y) + tab(x & y);
      const Rational rhs = tab(x) + tab(y);
      if (violates(lhs, rhs, slack)) return PairViolation{x, y};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<PairViolation> submodular_violation(const SetFunction& phi) {
  return pair_scan(phi,
                   [](const Rational& lhs, const Rational& rhs,
                      const Rational& slack) { return lhs > rhs + slack; });
}

std::optional<PairViolation> supermodular_violation(const SetFunction& phi) {
  return pair_scan(phi,
                   [](const Rational& lhs, const Rational& rhs,
                      const Rational& slack) { return lhs < rhs - slack; });
}

std::optional<PairViolation> modular_violation(const SetFunction& phi) {
  // Modular <=> every single-atom increment is independent of the base set.
  const SetFunction tab = phi.tabulated();
  const Subset full = tab.full();
  const Rational slack = tab.mode().slack() * 4;
  for (int i = 0; i < tab.n(); ++i) {
    const Subset bit = Subset{1} << i;
    const Rational base_step = tab(bit) - tab(0);
    for (Subset x = 0; x <= full; ++x) {
      if (x & bit) continue;
      const Rational step = tab(x | bit) - tab(x);
      if (abs_value(step - base_step) > slack) {
        return PairViolation{x, x | bit};
      }
    }
  }
  return std::nullopt;
}

namespace {

std::optional<PairViolation> step_scan(const SetFunction& phi, bool want_up) {
  const SetFunction tab = phi.tabulated();
  const Subset full = tab.full();
  const Rational slack = tab.mode().slack() * 2;
  for (Subset x = 0; x <= full; ++x) {
    for (int i = 0; i < tab.n(); ++i) {
      const Subset bit = Subset{1} << i;
      if (x & bit) continue;
      const Rational lo = tab(x);
      const Rational hi = tab(x | bit);
      if (want_up ? (hi < lo - slack) : (hi > lo + slack)) {
        return PairViolation{x, x | bit};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<PairViolation> increasing_violation(const SetFunction& phi) {
  return step_scan(phi, true);
}

std::optional<PairViolation> decreasing_violation(const SetFunction& phi) {
  return step_scan(phi, false);
}

std::optional<PairViolation> subadditive_violation(const SetFunction& phi) {
  const SetFunction tab = phi.tabulated();
  const Subset full = tab.full();
  const Rational slack = tab.mode().slack() * 3;
  for (Subset x = 1; x <= full; ++x) {
    const Subset rest = full & ~x;
    // Enumerate nonempty y disjoint from x; submask trick.
    for (Subset y = rest; y != 0; y = (y - 1) & rest) {
      if (tab(x | y) > tab(x) + tab(y) + slack) return PairViolation{x, y};
    }
  }
  return std::nullopt;
}

bool is_submodular(const SetFunction& phi) {
  return !submodular_violation(phi).has_value();
}
bool is_supermodular(const SetFunction& phi) {
  return !supermodular_violation(phi).has_value();
}
bool is_modular(const SetFunction& phi) {
  return !modular_violation(phi).has_value();
}
bool is_increasing(const SetFunction& phi) {
  return !increasing_violation(phi).has_value();
}
bool is_decreasing(const SetFunction& phi) {
  return !decreasing_violation(phi).has_value();
}

bool is_nonnegative(const SetFunction& phi) {
  const Subset full = phi.full();
  const Rational slack = phi.mode().slack();
  for (Subset x = 0;; ++x) {
    if (phi(x) < -slack) return false;
    if (x == full) break;
  }
  return true;
}

bool is_normalized(const SetFunction& phi) {
  return abs_value(phi(0)) <= phi.mode().slack();
}

void require_submodular(const SetFunction& phi, const char* operation) {
  if (auto v = submodular_violation(phi)) {
    throw SubmodError(ErrorCode::NotSubmodular,
                      std::string(operation) + ": violated at " +
                          phi.ground().subset_name(v->x) + ", " +
                          phi.ground().subset_name(v->y),
                      {v->x, v->y});
  }
}

void require_supermodular(const SetFunction& phi, const char* operation) {
  if (auto v = supermodular_violation(phi)) {
    throw SubmodError(ErrorCode::NotSupermodular,
                      std::string(operation) + ": violated at " +
                          phi.ground().subset_name(v->x) + ", " +
                          phi.ground().subset_name(v->y),
                      {v->x, v->y});
  }
}

void require_increasing(const SetFunction& phi, const char* operation) {
  if (auto v = increasing_violation(phi)) {
    throw SubmodError(ErrorCode::NotIncreasing,
                      std::string(operation) + ": decreases from " +
                          phi.ground().subset_name(v->x) + " to " +
                          phi.ground().subset_name(v->y),
                      {v->x, v->y});
  }
}

void require_normalized(const SetFunction& phi, const char* operation) {
  if (!is_normalized(phi)) {
    throw SubmodError(ErrorCode::NormalizationViolated,
                      std::string(operation) + ": phi(empty) != 0");
  }
}

Rational sup_norm(const SetFunction& phi) {
  const Subset full = phi.full();
  Rational best(0);
  for (Subset x = 0;; ++x) {
    Rational a = abs_value(phi(x));
    if (a > best) best = a;
    if (x == full) break;
  }
  return best;
}

}  // namespace submod
