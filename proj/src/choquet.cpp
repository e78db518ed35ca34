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

#include "submod/choquet.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "submod/rng.hpp"

namespace submod {

StepFunction::StepFunction(GroundSet g, std::vector<Rational> v)
    : ground(std::move(g)), values(std::move(v)) {
  if (static_cast<int>(values.size()) != ground.size()) {
    throw SubmodError(ErrorCode::ShapeError, "one value per atom");
  }
}

Rational StepFunction::norm() const {
  Rational best(0);
  for (const Rational& v : values) {
    Rational a = abs_value(v);
    if (a > best) best = a;
  }
  return best;
}

Rational StepFunction::min_value() const {
  if (values.empty()) return Rational(0);
  Rational best = values[0];
  for (const Rational& v : values) {
    if (v < best) best = v;
  }
  return best;
}

Rational StepFunction::max_value() const {
  if (values.empty()) return Rational(0);
  Rational best = values[0];
  for (const Rational& v : values) {
    if (v > best) best = v;
  }
  return best;
}

StepFunction StepFunction::indicator(const GroundSet& g, Subset s) {
  std::vector<Rational> v(g.size());
  for (int i = 0; i < g.size(); ++i) {
    if (s & (Subset{1} << i)) v[i] = 1;
  }
  return StepFunction(g, std::move(v));
}

StepFunction StepFunction::constant(const GroundSet& g, const Rational& c) {
  return StepFunction(g, std::vector<Rational>(g.size(), c));
}

StepFunction StepFunction::operator+(const StepFunction& other) const {
  require_same_ground(ground, other.ground, "StepFunction::operator+");
  std::vector<Rational> v(values);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.values[i];
  return StepFunction(ground, std::move(v));
}

StepFunction StepFunction::operator-(const StepFunction& other) const {
  require_same_ground(ground, other.ground, "StepFunction::operator-");
  std::vector<Rational> v(values);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= other.values[i];
  return StepFunction(ground, std::move(v));
}

StepFunction StepFunction::scaled(const Rational& c) const {
  std::vector<Rational> v(values);
  for (auto& x : v) x *= c;
  return StepFunction(ground, std::move(v));
}

StepFunction StepFunction::pointwise_max(const StepFunction& other) const {
  require_same_ground(ground, other.ground, "pointwise_max");
  std::vector<Rational> v(values);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (other.values[i] > v[i]) v[i] = other.values[i];
  }
  return StepFunction(ground, std::move(v));
}

StepFunction StepFunction::pointwise_min(const StepFunction& other) const {
  require_same_ground(ground, other.ground, "pointwise_min");
  std::vector<Rational> v(values);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (other.values[i] < v[i]) v[i] = other.values[i];
  }
  return StepFunction(ground, std::move(v));
}

std::optional<std::pair<int, int>> comonotonicity_violation(
    const StepFunction& f, const StepFunction& g) {
  require_same_ground(f.ground, g.ground, "comonotonicity_violation");
  for (int x = 0; x < f.n(); ++x) {
    for (int y = x + 1; y < f.n(); ++y) {
      if ((f.values[x] - f.values[y]) * (g.values[x] - g.values[y]) < 0) {
        return std::make_pair(x, y);
      }
    }
  }
  return std::nullopt;
}

StepFunction ChainRepresentation::reconstruct(const GroundSet& ground) const {
  std::vector<Rational> v(ground.size(), base_offset);
  for (const ChainTerm& t : terms) {
    for (int i = 0; i < ground.size(); ++i) {
      if (t.set & (Subset{1} << i)) v[i] += t.coeff;
    }
  }
  return StepFunction(ground, std::move(v));
}

bool ChainRepresentation::is_chain() const {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff <= 0) return false;
    if (i + 1 < terms.size()) {
      const Subset a = terms[i].set;
      const Subset b = terms[i + 1].set;
      if (a == b || (a & b) != a) return false;  // need a strictly inside b
    }
  }
  return true;
}

ChainRepresentation layer_cake(const StepFunction& f) {
  ChainRepresentation rep;
  Rational offset = f.min_value();
  if (offset > 0) offset = 0;
  rep.base_offset = offset;
  // Distinct values above the offset, ascending; level sets {f >= t} are
  // strictly nested descending as t grows.
  std::set<Rational> levels(f.values.begin(), f.values.end());
  Rational prev = offset;
  std::vector<ChainTerm> descending;
  for (const Rational& t : levels) {
    if (t <= offset) continue;
    Subset level_set = 0;
    for (int i = 0; i < f.n(); ++i) {
      if (f.values[i] >= t) level_set |= Subset{1} << i;
    }
    descending.push_back(ChainTerm{t - prev, level_set});
    prev = t;
  }
  // Store ascending by inclusion.
  rep.terms.assign(descending.rbegin(), descending.rend());
  return rep;
}

Rational choquet(const SetFunction& phi, const StepFunction& f) {
  require_same_ground(phi.ground(), f.ground, "choquet");
  const Rational shift = phi(0);
  ChainRepresentation rep = layer_cake(f);
  Rational result = rep.base_offset * (phi(phi.full()) - shift);
  for (const ChainTerm& t : rep.terms) {
    result += t.coeff * (phi(t.set) - shift);
  }
  return result;
}

UncrossResult uncross(const std::vector<ChainTerm>& terms,
                      const SetFunction& phi) {
  require_normalized(phi, "uncross");
  std::map<Subset, Rational> weight;
  for (const ChainTerm& t : terms) {
    if (t.coeff <= 0) {
      throw SubmodError(ErrorCode::BadCoefficient,
                        "uncross needs positive coefficients");
    }
    weight[t.set] += t.coeff;
  }
  weight.erase(0);  // 1_empty contributes nothing, phi(empty) = 0

  auto weighted_value = [&phi](const std::map<Subset, Rational>& w) {
    Rational sum(0);
    for (const auto& [set, b] : w) sum += b * phi(set);
    return sum;
  };

  UncrossResult out;
  out.initial_value = weighted_value(weight);

  auto potential = [](const std::map<Subset, Rational>& w) {
    Rational sum(0);
    for (const auto& [set, b] : w) sum += b * popcount(set) * popcount(set);
    return sum;
  };

  // Termination: every exchange strictly increases sum b_H |H|^2 while all
  // coefficients stay in (1/D) Z for D = lcm of the input denominators, so
  // the number of steps is at most mass * n^2 * D / 2. That exact bound is
  // the hard cap; exceeding it means a bug, not a hard instance.
  Integer lcm_den(1);
  Rational mass(0);
  for (const auto& [set, b] : weight) {
    lcm_den = lcm(lcm_den, denominator(b));
    mass += b;
  }
  const Rational cap =
      mass * phi.n() * phi.n() * Rational(lcm_den) / 2 + weight.size() + 4;
  Rational last_potential = potential(weight);
  Rational steps(0);
  for (;;) {
    Subset h1 = 0, h2 = 0;
    bool found = false;
    // Lexicographically smallest incomparable pair (by mask order).
    for (auto it = weight.begin(); it != weight.end() && !found; ++it) {
      for (auto jt = std::next(it); jt != weight.end(); ++jt) {
        const Subset a = it->first;
        const Subset b = jt->first;
        if ((a & b) == a || (a & b) == b) continue;
        h1 = a;
        h2 = b;
        found = true;
        break;
      }
    }
    if (!found) break;
    steps += 1;
    if (steps > cap) {
      throw SubmodError(ErrorCode::InternalError,
                        "uncross failed to terminate within its step bound");
    }
    const Rational t = std::min(weight[h1], weight[h2]);
    weight[h1] -= t;
    weight[h2] -= t;
    if (weight[h1] == 0) weight.erase(h1);
    if (weight[h2] == 0) weight.erase(h2);
    if ((h1 | h2) != 0) weight[h1 | h2] += t;
    if ((h1 & h2) != 0) weight[h1 & h2] += t;
    const Rational now = potential(weight);
    if (now <= last_potential) {
      throw SubmodError(ErrorCode::InternalError,
                        "uncross potential failed to increase");
    }
    last_potential = now;
    out.audit.push_back(UncrossStep{h1, h2, t, weighted_value(weight)});
  }

  out.final_value = weighted_value(weight);
  // The terminal family is totally ordered; emit ascending.
  std::vector<ChainTerm> chain;
  for (const auto& [set, b] : weight) chain.push_back(ChainTerm{b, set});
  std::sort(chain.begin(), chain.end(),
            [](const ChainTerm& x, const ChainTerm& y) {
              return popcount(x.set) < popcount(y.set);
            });
  out.chain.base_offset = 0;
  out.chain.terms = std::move(chain);
  if (!out.chain.is_chain()) {
    throw SubmodError(ErrorCode::InternalError, "uncross output not a chain");
  }
  return out;
}

namespace {

StepFunction random_step(const GroundSet& g, Rng& rng, int range, int den) {
  std::vector<Rational> v(g.size());
  for (auto& x : v) x = rng.next_rational(range, den);
  return StepFunction(g, std::move(v));
}

// Two functions nondecreasing along a common atom order are comonotonic.
std::pair<StepFunction, StepFunction> random_comonotonic_pair(
    const GroundSet& g, Rng& rng) {
  std::vector<int> order = rng.permutation(g.size());
  std::vector<Rational> f(g.size()), h(g.size());
  Rational fv = rng.next_rational(3, 3);
  Rational hv = rng.next_rational(3, 3);
  for (int i = 0; i < g.size(); ++i) {
    fv += rng.next_nonneg_rational(3, 3);
    hv += rng.next_nonneg_rational(3, 3);
    f[order[i]] = fv;
    h[order[i]] = hv;
  }
  return {StepFunction(g, std::move(f)), StepFunction(g, std::move(h))};
}

}  // namespace

Certificate certify_convexity(const SetFunction& phi, int trials,
                              std::uint64_t seed) {
  const char* claim = "choquet extension is convex iff phi is submodular";
  if (auto v = submodular_violation(phi)) {
    // Indicators of the violated pair witness non-convexity directly:
    // phi^(1_S + 1_T) = phi(S u T) + phi(S n T) > phi(S) + phi(T).
    const StepFunction f = StepFunction::indicator(phi.ground(), v->x);
    const StepFunction g = StepFunction::indicator(phi.ground(), v->y);
    const Rational lhs = choquet(phi, f + g);
    const Rational rhs = choquet(phi, f) + choquet(phi, g);
    if (lhs <= rhs + phi.mode().slack() * 4) {
      throw SubmodError(ErrorCode::InternalError,
                        "convexity counterexample did not reproduce");
    }
    return Certificate::fail(
        claim,
        "not submodular; counterexample pair 1_" +
            phi.ground().subset_name(v->x) + " + 1_" +
            phi.ground().subset_name(v->y),
        seed, 0);
  }
  Rng rng(seed);
  const Rational slack = phi.mode().slack() * 4;
  for (int t = 0; t < trials; ++t) {
    Rng trial = rng.child(static_cast<std::uint64_t>(t));
    const StepFunction f = random_step(phi.ground(), trial, 6, 4);
    const StepFunction g = random_step(phi.ground(), trial, 6, 4);
    if (choquet(phi, f + g) > choquet(phi, f) + choquet(phi, g) + slack) {
      return Certificate::fail(claim, "subadditivity failed on trial " +
                                          std::to_string(t),
                               seed, trials);
    }
    auto [cf, cg] = random_comonotonic_pair(phi.ground(), trial);
    const Rational sum = choquet(phi, cf + cg);
    const Rational parts = choquet(phi, cf) + choquet(phi, cg);
    if (abs_value(sum - parts) > slack) {
      return Certificate::fail(claim, "comonotonic additivity failed on trial " +
                                          std::to_string(t),
                               seed, trials);
    }
  }
  return Certificate::pass(claim, seed, trials);
}

Certificate lipschitz_check(const SetFunction& phi, int trials,
                            std::uint64_t seed) {
  const char* claim = "|phi^(f)-phi^(g)| <= var(phi) ||f-g||";
  // Variation of a tabulated function via the chain DP (kept local: the
  // calculus module depends on this one).
  const SetFunction tab = phi.tabulated();
  const Rational shift = tab(0);
  const Subset full = tab.full();
  std::vector<Rational> best(static_cast<std::size_t>(full) + 1, Rational(0));
  for (Subset x = 1; x <= full; ++x) {
    Rational b;
    bool first = true;
    for (Subset y = (x - 1) & x;; y = (y - 1) & x) {
      Rational cand = best[y] + abs_value((tab(x) - shift) - (tab(y) - shift));
      if (first || cand > b) {
        b = cand;
        first = false;
      }
      if (y == 0) break;
    }
    best[x] = b;
  }
  const Rational var = best[full];
  const bool increasing = is_increasing(tab);
  const Rational norm = sup_norm(tab);

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Rng trial = rng.child(static_cast<std::uint64_t>(t));
    const StepFunction f = random_step(tab.ground(), trial, 8, 4);
    const StepFunction g = random_step(tab.ground(), trial, 8, 4);
    const Rational diff = abs_value(choquet(tab, f) - choquet(tab, g));
    const Rational dist = (f - g).norm();
    if (diff > var * dist + tab.mode().slack() * 8) {
      return Certificate::fail(claim, "variation bound failed on trial " +
                                          std::to_string(t),
                               seed, trials);
    }
    if (increasing && diff > norm * dist + tab.mode().slack() * 8) {
      return Certificate::fail(claim, "norm bound failed on trial " +
                                          std::to_string(t),
                               seed, trials);
    }
  }
  return Certificate::pass(claim, seed, trials);
}

Certificate jensen_mix_check(const SetFunction& phi,
                             const std::vector<StepFunction>& columns,
                             const std::vector<Rational>& lambda) {
  const char* claim = "phi^(mix) <= mixed phi^ values";
  if (columns.empty() || columns.size() != lambda.size()) {
    throw SubmodError(ErrorCode::ShapeError, "one weight per column");
  }
  Rational total(0);
  for (const Rational& l : lambda) {
    if (l < 0) {
      throw SubmodError(ErrorCode::InvalidDistribution, "negative weight");
    }
    total += l;
  }
  if (total != 1) {
    throw SubmodError(ErrorCode::InvalidDistribution, "weights must sum to 1");
  }
  require_increasing(phi, "jensen_mix_check");
  require_submodular(phi, "jensen_mix_check");

  StepFunction mix = StepFunction::constant(phi.ground(), Rational(0));
  Rational rhs(0);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    mix = mix + columns[i].scaled(lambda[i]);
    rhs += lambda[i] * choquet(phi, columns[i]);
  }
  const Rational lhs = choquet(phi, mix);
  if (lhs > rhs + phi.mode().slack() * 4) {
    return Certificate::fail(claim, "mixture inequality violated");
  }
  return Certificate::pass(claim);
}

Certificate comonotonic_fubini_check(const Charge& alpha, const Charge& beta,
                                     const QMatrix& table) {
  const char* claim = "comonotonic iterated integrals agree";
  const int nx = alpha.n();
  const int ny = beta.n();
  if (table.rows() != nx || table.cols() != ny) {
    throw SubmodError(ErrorCode::ShapeError, "table shape vs charge grounds");
  }
  // Slice comonotonicity: columns pairwise comonotonic as functions of x,
  // rows pairwise comonotonic as functions of y.
  for (int y1 = 0; y1 < ny; ++y1) {
    for (int y2 = y1 + 1; y2 < ny; ++y2) {
      for (int x1 = 0; x1 < nx; ++x1) {
        for (int x2 = x1 + 1; x2 < nx; ++x2) {
          if ((table.at(x1, y1) - table.at(x2, y1)) *
                  (table.at(x1, y2) - table.at(x2, y2)) <
              0) {
            throw SubmodError(ErrorCode::NotComonotonic,
                              "columns " + std::to_string(y1) + "," +
                                  std::to_string(y2) + " at rows " +
                                  std::to_string(x1) + "," +
                                  std::to_string(x2));
          }
        }
      }
    }
  }
  for (int x1 = 0; x1 < nx; ++x1) {
    for (int x2 = x1 + 1; x2 < nx; ++x2) {
      for (int y1 = 0; y1 < ny; ++y1) {
        for (int y2 = y1 + 1; y2 < ny; ++y2) {
          if ((table.at(x1, y1) - table.at(x1, y2)) *
                  (table.at(x2, y1) - table.at(x2, y2)) <
              0) {
            throw SubmodError(ErrorCode::NotComonotonic,
                              "rows " + std::to_string(x1) + "," +
                                  std::to_string(x2) + " at columns " +
                                  std::to_string(y1) + "," +
                                  std::to_string(y2));
          }
        }
      }
    }
  }

  // Iterated integrals via the Choquet machinery in both orders.
  const SetFunction alpha_fn = alpha.as_setfunction();
  const SetFunction beta_fn = beta.as_setfunction();
  std::vector<Rational> inner_x(nx);
  for (int x = 0; x < nx; ++x) {
    std::vector<Rational> row(ny);
    for (int y = 0; y < ny; ++y) row[y] = table.at(x, y);
    inner_x[x] = choquet(beta_fn, StepFunction(beta.ground, std::move(row)));
  }
  const Rational order_xy =
      choquet(alpha_fn, StepFunction(alpha.ground, std::move(inner_x)));
  std::vector<Rational> inner_y(ny);
  for (int y = 0; y < ny; ++y) {
    std::vector<Rational> col(nx);
    for (int x = 0; x < nx; ++x) col[x] = table.at(x, y);
    inner_y[y] = choquet(alpha_fn, StepFunction(alpha.ground, std::move(col)));
  }
  const Rational order_yx =
      choquet(beta_fn, StepFunction(beta.ground, std::move(inner_y)));
  if (order_xy != order_yx) {
    return Certificate::fail(claim, "iterated integrals differ");
  }

  // Product identity f.(g.alpha) = (fg).alpha with f, g comonotonic columns
  // of the table (requires nonnegative data to stay in the weighting realm).
  if (ny >= 1) {
    std::vector<Rational> fv(nx), gv(nx), fgv(nx);
    for (int x = 0; x < nx; ++x) {
      fv[x] = positive_part(table.at(x, 0));
      gv[x] = positive_part(table.at(x, ny - 1));
      fgv[x] = fv[x] * gv[x];
    }
    const StepFunction f(alpha.ground, fv);
    const StepFunction g(alpha.ground, gv);
    const StepFunction fg(alpha.ground, fgv);
    // g.alpha evaluated through the Choquet path: (g.alpha)(X) = alpha^(g 1_X).
    const Subset full = alpha.ground.full_mask();
    for (Subset x = 0;; ++x) {
      std::vector<Rational> g_masked(nx), fg_masked(nx);
      for (int i = 0; i < nx; ++i) {
        const bool in = (x >> i) & 1u;
        g_masked[i] = in ? g.values[i] : Rational(0);
        fg_masked[i] = in ? fg.values[i] : Rational(0);
      }
      // f.(g.alpha)(X) = integral of f 1_X against the charge g.alpha, whose
      // atom values are g(i) alpha(i).
      Rational lhs(0);
      for (int i = 0; i < nx; ++i) {
        if ((x >> i) & 1u) lhs += f.values[i] * g.values[i] * alpha.atom[i];
      }
      const Rational rhs =
          choquet(alpha_fn, StepFunction(alpha.ground, fg_masked));
      const Rational via_choquet =
          choquet(alpha_fn, StepFunction(alpha.ground, g_masked));
      // Consistency of the two (g.alpha)(X) routes for charges.
      Rational direct(0);
      for (int i = 0; i < nx; ++i) {
        if ((x >> i) & 1u) direct += g.values[i] * alpha.atom[i];
      }
      if (via_choquet != direct) {
        return Certificate::fail(claim, "charge weighting mismatch at " +
                                            alpha.ground.subset_name(x));
      }
      if (lhs != rhs) {
        return Certificate::fail(claim, "product identity failed at " +
                                            alpha.ground.subset_name(x));
      }
      if (x == full) break;
    }
  }
  return Certificate::pass(claim);
}

}  // namespace submod
