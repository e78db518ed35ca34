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

#ifndef SUBMOD_CALCULUS_HPP
#define SUBMOD_CALCULUS_HPP

#include <string>
#include <utility>
#include <vector>

#include "submod/choquet.hpp"
#include "submod/relation.hpp"
#include "submod/set_function.hpp"

namespace submod {

// The four monotonized companions: infimum/supremum over subsets/supersets.
enum class Monotonize { LowerInf, UpperInf, LowerSup, UpperSup };

// Lattice dynamic programming in O(n 2^n); traversal order fixed by mask
// value so results are deterministic.
SetFunction monotonize(const SetFunction& phi, Monotonize which);

enum class JoinMeet { Join, Meet };  // lor / land

// (phi v psi)(X) = max_{Y subseteq X} phi(Y) + psi(X \ Y), meet with min.
SetFunction join_meet(const SetFunction& phi, const SetFunction& psi,
                      JoinMeet which);

// phi = mu - nu with mu, nu increasing, normalized, and
// mu(J) + nu(J) = var(phi) (the most economical decomposition).
struct VariationDecomposition {
  Rational total_variation;
  SetFunction mu;
  SetFunction nu;
};

// Chain suprema by subset DP (O(3^n)). phi is shifted to phi(empty) = 0
// first; differences are shift-invariant.
VariationDecomposition variation(const SetFunction& phi);

// (phi^ls, phi - phi^ls): increasing + decreasing, both subadditive.
// Requires certified submodular, normalized input.
std::pair<SetFunction, SetFunction> decompose_submodular(
    const SetFunction& phi);

// (w . phi)(X) = Choquet(phi, w 1_X); submodularity and monotonicity flags
// carry over from phi (both are preserved by weighting).
SetFunction weighting(const StepFunction& w, const SetFunction& phi);

// ----- Structural operations -----

SetFunction restrict_to(const SetFunction& phi, Subset a);
// phi^A(X) = phi(A^c u X) - phi(A^c) on the ground set A.
SetFunction project_to(const SetFunction& phi, Subset a);
SetFunction complement_fn(const SetFunction& phi);
// min(c, phi); requires increasing phi.
SetFunction truncate(const SetFunction& phi, const Rational& c);
// phi(Pi^-1(X)) for a surjection of atoms onto `target`'s atoms.
SetFunction quotient_map(const SetFunction& phi,
                         const std::vector<int>& atom_to_target,
                         const GroundSet& target);
// phi(Gamma(X)) where Gamma is the union-preserving monotone map sending a
// subset of rel's left ground to the union of its neighborhoods in phi's
// ground. Requires increasing phi.
SetFunction pullback(const SetFunction& phi, const Relation& rel);
// Extension to ground + {new_label} where the new atom behaves as the set A.
// Requires increasing phi.
SetFunction add_representative(const SetFunction& phi, Subset a,
                               const std::string& new_label);

// phi - psi increasing, verified exhaustively on construction.
struct DivergingPair {
  SetFunction phi;
  SetFunction psi;
};

// Certifies submodularity of both and the diverging property; NotDiverging
// carries a witness pair X subset Y with (phi-psi)(X) > (phi-psi)(Y).
DivergingPair check_diverging(const SetFunction& phi, const SetFunction& psi);

// min(phi, psi) pointwise; submodularity of the output re-certified.
SetFunction min_of_pair(const DivergingPair& pair);

// The one-extra-atom extension whose restriction / projection recover the
// pair: psi(X) = phi1(X) for a not in X, else phi2(X\a) + phi1(J) - phi2(J).
// Verified increasing submodular; requires increasing inputs.
SetFunction lift_diverging_pair(const DivergingPair& pair,
                                const std::string& new_label);

// Splicing along sets A (in phi's ground) and B (in psi's ground) with
// phi(A) = psi(B):
//   sigma(X u Y) = min(phi(X) + psi(Y), phi(X u A) + psi(Y u B) - phi(A)).
// Inputs must be increasing submodular and normalized; output certified
// submodular, restrictions recover the inputs. Atoms keep their labels,
// with right-side collisions renamed by appending "'".
SetFunction splice(const SetFunction& phi, const SetFunction& psi, Subset a,
                   Subset b);

}  // namespace submod

#endif  // SUBMOD_CALCULUS_HPP
