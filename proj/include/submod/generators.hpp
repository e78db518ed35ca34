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

#ifndef SUBMOD_GENERATORS_HPP
#define SUBMOD_GENERATORS_HPP

#include <utility>
#include <vector>

#include "submod/linalg.hpp"
#include "submod/relation.hpp"
#include "submod/set_function.hpp"

namespace submod {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  Rational weight;
};

// Cut capacity of a weighted graph whose vertices are the atoms:
// phi(X) = total weight of edges with exactly one end in X.
SetFunction gen_cut(const GroundSet& ground,
                    const std::vector<WeightedEdge>& edges);

// phi(X) = weight of the relation image R(X); the weighted neighborhood
// function of a bigraph.
SetFunction gen_coverage(const Relation& rel,
                         const std::vector<Rational>& right_weights);

// Rank functions. Graphic: atoms are the edges of a graph, rank = spanning
// forest size (union-find). Linear: atoms index rational matrix columns,
// rank by exact elimination. Uniform: min(|X|, k).
SetFunction gen_matroid_rank_graphic(
    const GroundSet& ground, const std::vector<std::pair<int, int>>& edges,
    int num_vertices);
SetFunction gen_matroid_rank_linear(const GroundSet& ground,
                                    const QMatrix& columns);
SetFunction gen_matroid_rank_uniform(const GroundSet& ground, int k);

// phi(X) = f(mu(X)) for a piecewise-linear concave f given by breakpoints
// (x, f(x)) with strictly increasing x; extended beyond the ends with the
// boundary slopes. Concavity of the breakpoints is verified.
SetFunction gen_concave_of_measure(
    const GroundSet& ground, const std::vector<Rational>& atom_weights,
    const std::vector<std::pair<Rational, Rational>>& breakpoints);

// Shannon entropy of marginals, in bits. `joint` is a flat table over the
// product alphabet, atom i having alphabet_sizes[i] symbols, with index
// sum_i symbol_i * stride_i and stride_i = prod_{j<i} alphabet_sizes[j].
// Approximate mode with tolerance 1e-9.
SetFunction gen_entropy(const GroundSet& ground,
                        const std::vector<int>& alphabet_sizes,
                        const std::vector<double>& joint);

// phi(S) = log det(A_S) (natural log), phi(empty) = 0. Positive
// definiteness is checked exactly on the rational input; determinants are
// exact, only the final logarithm is floating point (tolerance 1e-9).
SetFunction gen_logdet(const GroundSet& ground, const QMatrix& matrix);

// Probability that a Markov chain started from `start` ever hits X.
// States are the atoms; `kernel` is row-stochastic. States that cannot
// reach X are resolved by a reachability pre-pass, so the exact linear
// solve on the remaining states is never singular.
SetFunction gen_hitting(const GroundSet& ground, const QMatrix& kernel,
                        const std::vector<Rational>& start);

// phi(X) = 1 if X is outside the (down-closed) ideal, else 0.
SetFunction gen_ideal_indicator(const GroundSet& ground,
                                const std::vector<Subset>& ideal);

// phi(X) = number of homomorphisms F_X -> G, where F_X keeps exactly the
// edges of F indexed by X. Exhaustive map enumeration; both graphs are
// capped at 6 vertices.
SetFunction gen_hom_count(const GroundSet& ground, int f_vertices,
                          const std::vector<std::pair<int, int>>& f_edges,
                          int g_vertices,
                          const std::vector<std::pair<int, int>>& g_edges);

}  // namespace submod

#endif  // SUBMOD_GENERATORS_HPP
