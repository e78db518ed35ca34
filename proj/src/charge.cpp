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

#include "submod/charge.hpp"

#include "submod/choquet.hpp"

namespace submod {

Charge::Charge(GroundSet g, std::vector<Rational> values)
    : ground(std::move(g)), atom(std::move(values)) {
  if (static_cast<int>(atom.size()) != ground.size()) {
    throw SubmodError(ErrorCode::ShapeError, "one atom value per atom");
  }
}

Rational Charge::operator()(Subset mask) const {
  Rational sum(0);
  for (int i = 0; i < n(); ++i) {
    if (mask & (Subset{1} << i)) sum += atom[i];
  }
  return sum;
}

Rational Charge::dot(const StepFunction& w) const {
  require_same_ground(ground, w.ground, "Charge::dot");
  Rational sum(0);
  for (int i = 0; i < n(); ++i) sum += w.values[i] * atom[i];
  return sum;
}

bool Charge::nonnegative() const {
  for (const Rational& v : atom) {
    if (v < 0) return false;
  }
  return true;
}

SetFunction Charge::as_setfunction() const {
  auto atoms = std::make_shared<const std::vector<Rational>>(atom);
  const int count = n();
  return SetFunction(
      ground,
      [atoms, count](Subset mask) {
        Rational sum(0);
        for (int i = 0; i < count; ++i) {
          if (mask & (Subset{1} << i)) sum += (*atoms)[i];
        }
        return sum;
      },
      FlagSet{Property::Modular, Property::Normalized});
}

Charge Charge::operator+(const Charge& other) const {
  require_same_ground(ground, other.ground, "Charge::operator+");
  std::vector<Rational> out(atom);
  for (int i = 0; i < n(); ++i) out[i] += other.atom[i];
  return Charge(ground, std::move(out));
}

Charge Charge::operator-(const Charge& other) const {
  require_same_ground(ground, other.ground, "Charge::operator-");
  std::vector<Rational> out(atom);
  for (int i = 0; i < n(); ++i) out[i] -= other.atom[i];
  return Charge(ground, std::move(out));
}

Charge Charge::scaled(const Rational& c) const {
  std::vector<Rational> out(atom);
  for (auto& v : out) v *= c;
  return Charge(ground, std::move(out));
}

Charge Charge::join(const Charge& other) const {
  require_same_ground(ground, other.ground, "Charge::join");
  std::vector<Rational> out(atom);
  for (int i = 0; i < n(); ++i) {
    if (other.atom[i] > out[i]) out[i] = other.atom[i];
  }
  return Charge(ground, std::move(out));
}

Charge Charge::meet(const Charge& other) const {
  require_same_ground(ground, other.ground, "Charge::meet");
  std::vector<Rational> out(atom);
  for (int i = 0; i < n(); ++i) {
    if (other.atom[i] < out[i]) out[i] = other.atom[i];
  }
  return Charge(ground, std::move(out));
}

Charge Charge::positive() const {
  std::vector<Rational> out(atom);
  for (auto& v : out) v = positive_part(v);
  return Charge(ground, std::move(out));
}

Charge Charge::negative() const {
  std::vector<Rational> out(atom);
  for (auto& v : out) v = negative_part(v);
  return Charge(ground, std::move(out));
}

std::optional<Subset> minorization_violation(const Charge& alpha,
                                             const SetFunction& phi) {
  require_same_ground(alpha.ground, phi.ground(), "minorization_violation");
  const Subset full = phi.full();
  const Rational slack = phi.mode().slack();
  for (Subset x = 0;; ++x) {
    if (alpha(x) > phi(x) + slack) return x;
    if (x == full) break;
  }
  return std::nullopt;
}

}  // namespace submod
