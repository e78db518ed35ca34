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

#include "submod/calculus.hpp"

#include <algorithm>

namespace submod {

namespace {

void require_increasing_pre(const SetFunction& phi, const char* operation) {
  if (increasing_violation(phi)) {
    throw SubmodError(ErrorCode::PreconditionFailed,
                      std::string(operation) + ": input must be increasing");
  }
}

}  // namespace

SetFunction monotonize(const SetFunction& phi, Monotonize which) {
  require_ground_size(phi.n(), "monotonize");
  const Subset full = phi.full();
  std::vector<Rational> table = phi.tabulated().table();
  const int n = phi.n();
  const bool over_subsets =
      which == Monotonize::LowerInf || which == Monotonize::LowerSup;
  const bool take_min =
      which == Monotonize::LowerInf || which == Monotonize::UpperInf;
  if (over_subsets) {
    // best(X) over Y subseteq X: combine along single-bit removals.
    for (Subset x = 1; x <= full; ++x) {
      for (int i = 0; i < n; ++i) {
        if (!(x & (Subset{1} << i))) continue;
        const Rational& below = table[x & ~(Subset{1} << i)];
        if (take_min ? below < table[x] : below > table[x]) table[x] = below;
      }
    }
  } else {
    for (Subset xr = full; xr != 0; --xr) {
      const Subset x = xr - 1;  // descending, so supersets are finished
      for (int i = 0; i < n; ++i) {
        if (x & (Subset{1} << i)) continue;
        const Rational& above = table[x | (Subset{1} << i)];
        if (take_min ? above < table[x] : above > table[x]) table[x] = above;
      }
    }
  }
  FlagSet flags;
  if (which == Monotonize::UpperInf || which == Monotonize::LowerSup) {
    flags.set(Property::Increasing);
  } else {
    flags.set(Property::Decreasing);
  }
  return table_function(phi.ground(), std::move(table), flags, phi.mode());
}

SetFunction join_meet(const SetFunction& phi, const SetFunction& psi,
                      JoinMeet which) {
  require_same_ground(phi.ground(), psi.ground(), "join_meet");
  require_ground_size(phi.n(), "join_meet");
  const Subset full = phi.full();
  const std::vector<Rational> f = phi.tabulated().table();
  const std::vector<Rational> g = psi.tabulated().table();
  std::vector<Rational> out(f.size());
  const bool take_max = which == JoinMeet::Join;
  for (Subset x = 0;; ++x) {
    Rational best = f[0] + g[x];  // Y = empty
    for (Subset y = x; y != 0; y = (y - 1) & x) {
      Rational cand = f[y] + g[x & ~y];
      if (take_max ? cand > best : cand < best) best = cand;
    }
    out[x] = best;
    if (x == full) break;
  }
  return table_function(phi.ground(), std::move(out), {},
                        phi.mode().combined(psi.mode()));
}

VariationDecomposition variation(const SetFunction& phi) {
  require_ground_size(phi.n(), "variation");
  const Subset full = phi.full();
  std::vector<Rational> f = phi.tabulated().table();
  const Rational shift = f[0];
  if (shift != 0) {
    for (auto& v : f) v -= shift;
  }
  const std::size_t count = f.size();
  std::vector<Rational> mu(count), nu(count), var(count);
  // Last-step DP over chains from the empty set; proper submasks only.
  for (Subset x = 1; x <= full; ++x) {
    bool first = true;
    for (Subset y = (x - 1) & x;; y = (y - 1) & x) {
      const Rational step = f[x] - f[y];
      const Rational cand_mu = mu[y] + positive_part(step);
      const Rational cand_nu = nu[y] + negative_part(step);
      const Rational cand_var = var[y] + abs_value(step);
      if (first || cand_mu > mu[x]) mu[x] = cand_mu;
      if (first || cand_nu > nu[x]) nu[x] = cand_nu;
      if (first || cand_var > var[x]) var[x] = cand_var;
      first = false;
      if (y == 0) break;
    }
  }
  // nu = mu - phi and var = mu(J) + nu(J) are identities of the optimal
  // chains; failure here would be a DP bug.
  for (Subset x = 0;; ++x) {
    if (nu[x] != mu[x] - f[x]) {
      throw SubmodError(ErrorCode::InternalError, "variation: nu != mu - phi");
    }
    if (x == full) break;
  }
  if (var[full] != mu[full] + nu[full]) {
    throw SubmodError(ErrorCode::InternalError, "variation: var != mu+nu at J");
  }
  VariationDecomposition out;
  out.total_variation = var[full];
  const FlagSet inc = FlagSet{Property::Increasing, Property::Normalized};
  out.mu = table_function(phi.ground(), std::move(mu), inc, phi.mode());
  out.nu = table_function(phi.ground(), std::move(nu), inc, phi.mode());
  return out;
}

std::pair<SetFunction, SetFunction> decompose_submodular(
    const SetFunction& phi) {
  require_submodular(phi, "decompose_submodular");
  require_normalized(phi, "decompose_submodular");
  SetFunction ls = monotonize(phi, Monotonize::LowerSup);
  const std::vector<Rational> top = ls.table();
  const std::vector<Rational> f = phi.tabulated().table();
  std::vector<Rational> rest(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) rest[i] = f[i] - top[i];
  SetFunction beta =
      table_function(phi.ground(), std::move(rest),
                     FlagSet{Property::Decreasing, Property::Normalized},
                     phi.mode());
  // Postconditions of the decomposition lemma; violations are library bugs.
  if (increasing_violation(ls) || decreasing_violation(beta) ||
      subadditive_violation(ls) || subadditive_violation(beta)) {
    throw SubmodError(ErrorCode::InternalError,
                      "decompose_submodular postcondition failed");
  }
  return {ls.with_flags(FlagSet{Property::Increasing, Property::Normalized}),
          beta};
}

SetFunction weighting(const StepFunction& w, const SetFunction& phi) {
  require_same_ground(w.ground, phi.ground(), "weighting");
  for (const Rational& v : w.values) {
    if (v < 0) {
      throw SubmodError(ErrorCode::NegativeWeight,
                        "weighting needs nonnegative weights");
    }
  }
  const SetFunction tab = phi.tabulated();
  const Subset full = tab.full();
  std::vector<Rational> out(tab.ground().subset_count());
  for (Subset x = 0;; ++x) {
    std::vector<Rational> masked(w.values.size(), Rational(0));
    for (int i = 0; i < tab.n(); ++i) {
      if (x & (Subset{1} << i)) masked[i] = w.values[i];
    }
    out[x] = choquet(tab, StepFunction(tab.ground(), std::move(masked)));
    if (x == full) break;
  }
  FlagSet flags{Property::Normalized};
  if (phi.has_flag(Property::Submodular)) flags.set(Property::Submodular);
  if (phi.has_flag(Property::Increasing)) flags.set(Property::Increasing);
  if (phi.has_flag(Property::Modular)) flags.set(Property::Modular);
  return table_function(tab.ground(), std::move(out), flags, tab.mode());
}

SetFunction restrict_to(const SetFunction& phi, Subset a) {
  if (a > phi.full()) {
    throw SubmodError(ErrorCode::BadArgument, "restrict_to: not a subset");
  }
  const GroundSet sub(phi.ground().subset_labels(a));
  std::vector<int> positions;
  for (int i = 0; i < phi.n(); ++i) {
    if (a & (Subset{1} << i)) positions.push_back(i);
  }
  SetFunction base = phi;
  FlagSet flags;
  if (phi.has_flag(Property::Submodular)) flags.set(Property::Submodular);
  if (phi.has_flag(Property::Increasing)) flags.set(Property::Increasing);
  return SetFunction(
      sub,
      [base, positions](Subset x) {
        Subset embedded = 0;
        for (std::size_t i = 0; i < positions.size(); ++i) {
          if (x & (Subset{1} << i)) embedded |= Subset{1} << positions[i];
        }
        return base(embedded);
      },
      flags, phi.mode());
}

SetFunction project_to(const SetFunction& phi, Subset a) {
  if (a > phi.full()) {
    throw SubmodError(ErrorCode::BadArgument, "project_to: not a subset");
  }
  const Subset complement = phi.full() & ~a;
  const GroundSet sub(phi.ground().subset_labels(a));
  std::vector<int> positions;
  for (int i = 0; i < phi.n(); ++i) {
    if (a & (Subset{1} << i)) positions.push_back(i);
  }
  SetFunction base = phi;
  const Rational offset = phi(complement);
  FlagSet flags{Property::Normalized};
  if (phi.has_flag(Property::Submodular)) flags.set(Property::Submodular);
  if (phi.has_flag(Property::Increasing)) flags.set(Property::Increasing);
  return SetFunction(
      sub,
      [base, positions, complement, offset](Subset x) {
        Subset embedded = complement;
        for (std::size_t i = 0; i < positions.size(); ++i) {
          if (x & (Subset{1} << i)) embedded |= Subset{1} << positions[i];
        }
        return Rational(base(embedded) - offset);
      },
      flags, phi.mode());
}

SetFunction complement_fn(const SetFunction& phi) {
  SetFunction base = phi;
  const Subset full = phi.full();
  FlagSet flags;
  if (phi.has_flag(Property::Submodular)) flags.set(Property::Submodular);
  if (phi.has_flag(Property::Supermodular)) flags.set(Property::Supermodular);
  if (phi.has_flag(Property::Increasing)) flags.set(Property::Decreasing);
  if (phi.has_flag(Property::Decreasing)) flags.set(Property::Increasing);
  return SetFunction(
      phi.ground(), [base, full](Subset x) { return base(full & ~x); }, flags,
      phi.mode());
}

SetFunction truncate(const SetFunction& phi, const Rational& c) {
  require_increasing_pre(phi, "truncate");
  SetFunction base = phi;
  const Rational cap = c;
  FlagSet flags{Property::Increasing};
  if (phi.has_flag(Property::Submodular)) flags.set(Property::Submodular);
  return SetFunction(
      phi.ground(),
      [base, cap](Subset x) {
        Rational v = base(x);
        return v < cap ? v : cap;
      },
      flags, phi.mode());
}

SetFunction quotient_map(const SetFunction& phi,
                         const std::vector<int>& atom_to_target,
                         const GroundSet& target) {
  if (static_cast<int>(atom_to_target.size()) != phi.n()) {
    throw SubmodError(ErrorCode::ShapeError, "quotient: one image per atom");
  }
  Subset hit = 0;
  for (int img : atom_to_target) {
    if (img < 0 || img >= target.size()) {
      throw SubmodError(ErrorCode::BadArgument, "quotient: image out of range");
    }
    hit |= Subset{1} << img;
  }
  if (hit != target.full_mask()) {
    throw SubmodError(ErrorCode::NotSurjective,
                      "quotient map must cover every target atom");
  }
  SetFunction base = phi;
  std::vector<int> map = atom_to_target;
  FlagSet flags;
  if (phi.has_flag(Property::Submodular)) flags.set(Property::Submodular);
  if (phi.has_flag(Property::Increasing)) flags.set(Property::Increasing);
  return SetFunction(
      target,
      [base, map](Subset x) {
        Subset preimage = 0;
        for (std::size_t i = 0; i < map.size(); ++i) {
          if (x & (Subset{1} << map[i])) preimage |= Subset{1} << i;
        }
        return base(preimage);
      },
      flags, phi.mode());
}

SetFunction pullback(const SetFunction& phi, const Relation& rel) {
  require_same_ground(rel.right(), phi.ground(), "pullback");
  require_increasing_pre(phi, "pullback");
  SetFunction base = phi;
  Relation r = rel;
  FlagSet flags{Property::Increasing};
  if (phi.has_flag(Property::Submodular)) flags.set(Property::Submodular);
  if (phi.has_flag(Property::StronglySubmodular)) {
    flags.set(Property::StronglySubmodular);
  }
  return SetFunction(
      rel.left(), [base, r](Subset x) { return base(r.image(x)); }, flags,
      phi.mode());
}

SetFunction add_representative(const SetFunction& phi, Subset a,
                               const std::string& new_label) {
  if (a > phi.full()) {
    throw SubmodError(ErrorCode::BadArgument,
                      "add_representative: not a subset");
  }
  require_increasing_pre(phi, "add_representative");
  std::vector<std::string> labels = phi.ground().labels();
  labels.push_back(new_label);
  GroundSet extended(labels);
  const Subset new_bit = Subset{1} << phi.n();
  SetFunction base = phi;
  const Subset rep = a;
  FlagSet flags{Property::Increasing};
  if (phi.has_flag(Property::Submodular)) flags.set(Property::Submodular);
  return SetFunction(
      extended,
      [base, rep, new_bit](Subset x) {
        if (x & new_bit) return base((x & ~new_bit) | rep);
        return base(x);
      },
      flags, phi.mode());
}

DivergingPair check_diverging(const SetFunction& phi, const SetFunction& psi) {
  require_same_ground(phi.ground(), psi.ground(), "check_diverging");
  require_submodular(phi, "check_diverging");
  require_submodular(psi, "check_diverging");
  const SetFunction f = phi.tabulated();
  const SetFunction g = psi.tabulated();
  const Rational slack = (f.mode().slack() + g.mode().slack()) * 2;
  const Subset full = f.full();
  for (Subset x = 0; x < full; ++x) {
    for (int i = 0; i < f.n(); ++i) {
      const Subset bit = Subset{1} << i;
      if (x & bit) continue;
      const Rational lo = f(x) - g(x);
      const Rational hi = f(x | bit) - g(x | bit);
      if (hi < lo - slack) {
        throw SubmodError(ErrorCode::NotDiverging,
                          "difference decreases from " +
                              f.ground().subset_name(x) + " to " +
                              f.ground().subset_name(x | bit),
                          {x, x | bit});
      }
    }
  }
  return DivergingPair{f, g};
}

SetFunction min_of_pair(const DivergingPair& pair) {
  const SetFunction& f = pair.phi;
  const SetFunction& g = pair.psi;
  const Subset full = f.full();
  std::vector<Rational> out(f.ground().subset_count());
  for (Subset x = 0;; ++x) {
    out[x] = std::min(f(x), g(x));
    if (x == full) break;
  }
  SetFunction result =
      table_function(f.ground(), std::move(out), {},
                     f.mode().combined(g.mode()));
  require_submodular(result, "min_of_pair");
  return result.with_flags(FlagSet{Property::Submodular});
}

SetFunction lift_diverging_pair(const DivergingPair& pair,
                                const std::string& new_label) {
  // Re-verify: pairs can be aggregate-initialized without going through
  // check_diverging, and the error contract here is NotDiverging.
  const DivergingPair checked = check_diverging(pair.phi, pair.psi);
  const SetFunction& f1 = checked.phi;
  const SetFunction& f2 = checked.psi;
  require_increasing_pre(f1, "lift_diverging_pair");
  require_increasing_pre(f2, "lift_diverging_pair");
  std::vector<std::string> labels = f1.ground().labels();
  labels.push_back(new_label);
  GroundSet extended(labels);
  const Subset new_bit = Subset{1} << f1.n();
  const Rational top_shift = f1(f1.full()) - f2(f2.full());
  SetFunction a = f1, b = f2;
  SetFunction lifted(
      extended,
      [a, b, new_bit, top_shift](Subset x) {
        if (x & new_bit) return Rational(b(x & ~new_bit) + top_shift);
        return a(x);
      },
      FlagSet{Property::Increasing, Property::Submodular},
      f1.mode().combined(f2.mode()));
  require_submodular(lifted, "lift_diverging_pair");
  if (increasing_violation(lifted)) {
    throw SubmodError(ErrorCode::InternalError,
                      "lifted extension is not increasing");
  }
  // Restriction and projection must recover the pair.
  const Subset full1 = f1.full();
  for (Subset x = 0;; ++x) {
    if (lifted(x) != f1(x)) {
      throw SubmodError(ErrorCode::InternalError, "lift: restriction mismatch");
    }
    if (lifted(x | new_bit) - lifted(new_bit) != f2(x) - f2(0)) {
      throw SubmodError(ErrorCode::InternalError, "lift: projection mismatch");
    }
    if (x == full1) break;
  }
  return lifted;
}

SetFunction splice(const SetFunction& phi, const SetFunction& psi, Subset a,
                   Subset b) {
  require_increasing_pre(phi, "splice");
  require_increasing_pre(psi, "splice");
  require_normalized(phi, "splice");
  require_normalized(psi, "splice");
  require_submodular(phi, "splice");
  require_submodular(psi, "splice");
  if (a > phi.full() || b > psi.full()) {
    throw SubmodError(ErrorCode::BadArgument, "splice: set out of range");
  }
  if (phi(a) != psi(b)) {
    throw SubmodError(ErrorCode::RankMismatch,
                      "splice requires phi(A) = psi(B)");
  }
  GroundSet united = disjoint_union_ground(phi.ground(), psi.ground());
  require_ground_size(united.size(), "splice");
  const int nl = phi.n();
  const Subset left_mask = phi.full();
  const Rational glue = phi(a);
  SetFunction f = phi, g = psi;
  SetFunction sigma(
      united,
      [f, g, a, b, nl, left_mask, glue](Subset z) {
        const Subset x = z & left_mask;
        const Subset y = static_cast<Subset>(z >> nl);
        const Rational apart = f(x) + g(y);
        const Rational glued = f(x | a) + g(y | b) - glue;
        return apart < glued ? apart : glued;
      },
      FlagSet{Property::Increasing, Property::Submodular,
              Property::Normalized},
      phi.mode().combined(psi.mode()));
  require_submodular(sigma, "splice");
  // sigma restricted to either side reproduces the inputs.
  for (Subset x = 0;; ++x) {
    if (sigma(x) != phi(x)) {
      throw SubmodError(ErrorCode::InternalError, "splice: left restriction");
    }
    if (x == phi.full()) break;
  }
  for (Subset y = 0;; ++y) {
    if (sigma(static_cast<Subset>(y) << nl) != psi(y)) {
      throw SubmodError(ErrorCode::InternalError, "splice: right restriction");
    }
    if (y == psi.full()) break;
  }
  return sigma;
}

}  // namespace submod
