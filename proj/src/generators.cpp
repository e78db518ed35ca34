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

#include "submod/generators.hpp"

#include <cmath>
#include <numeric>

namespace submod {

namespace {

// Union-find over a fixed vertex count; small enough to copy per call.
int forest_size(const std::vector<std::pair<int, int>>& edges,
                std::vector<int>& parent) {
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  int rank = 0;
  for (const auto& [u, v] : edges) {
    int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      ++rank;
    }
  }
  return rank;
}

}  // namespace

SetFunction gen_cut(const GroundSet& ground,
                    const std::vector<WeightedEdge>& edges) {
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= ground.size() || e.v < 0 || e.v >= ground.size()) {
      throw SubmodError(ErrorCode::BadArgument, "cut edge out of range");
    }
    if (e.weight < 0) {
      throw SubmodError(ErrorCode::NegativeCapacity,
                        "cut weights must be nonnegative");
    }
  }
  auto data = std::make_shared<const std::vector<WeightedEdge>>(edges);
  return SetFunction(
      ground,
      [data](Subset x) {
        Rational total(0);
        for (const auto& e : *data) {
          const bool in_u = (x >> e.u) & 1u;
          const bool in_v = (x >> e.v) & 1u;
          if (in_u != in_v) total += e.weight;
        }
        return total;
      },
      FlagSet{Property::Submodular, Property::Normalized});
}

SetFunction gen_coverage(const Relation& rel,
                         const std::vector<Rational>& right_weights) {
  if (static_cast<int>(right_weights.size()) != rel.right().size()) {
    throw SubmodError(ErrorCode::ShapeError, "one weight per right atom");
  }
  for (const Rational& w : right_weights) {
    if (w < 0) {
      throw SubmodError(ErrorCode::NegativeCapacity,
                        "coverage weights must be nonnegative");
    }
  }
  auto weights = std::make_shared<const std::vector<Rational>>(right_weights);
  Relation r = rel;
  return SetFunction(
      rel.left(),
      [r, weights](Subset x) {
        Rational total(0);
        const Subset image = r.image(x);
        for (std::size_t i = 0; i < weights->size(); ++i) {
          if (image & (Subset{1} << i)) total += (*weights)[i];
        }
        return total;
      },
      FlagSet{Property::Submodular, Property::Increasing, Property::Normalized,
              Property::StronglySubmodular});
}

SetFunction gen_matroid_rank_graphic(
    const GroundSet& ground, const std::vector<std::pair<int, int>>& edges,
    int num_vertices) {
  if (static_cast<int>(edges.size()) != ground.size()) {
    throw SubmodError(ErrorCode::ShapeError, "one edge per atom");
  }
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices) {
      throw SubmodError(ErrorCode::ShapeError, "edge endpoint out of range");
    }
  }
  auto data = std::make_shared<const std::vector<std::pair<int, int>>>(edges);
  return SetFunction(
      ground,
      [data, num_vertices](Subset x) {
        std::vector<std::pair<int, int>> chosen;
        for (std::size_t i = 0; i < data->size(); ++i) {
          if (x & (Subset{1} << i)) chosen.push_back((*data)[i]);
        }
        std::vector<int> parent(num_vertices);
        return Rational(forest_size(chosen, parent));
      },
      FlagSet{Property::Submodular, Property::Increasing,
              Property::Normalized});
}

SetFunction gen_matroid_rank_linear(const GroundSet& ground,
                                    const QMatrix& columns) {
  if (columns.cols() != ground.size()) {
    throw SubmodError(ErrorCode::ShapeError, "one matrix column per atom");
  }
  auto data = std::make_shared<const QMatrix>(columns);
  return SetFunction(
      ground,
      [data](Subset x) {
        const int k = popcount(x);
        if (k == 0) return Rational(0);
        QMatrix sub(data->rows(), k);
        int col = 0;
        for (int j = 0; j < data->cols(); ++j) {
          if (!(x & (Subset{1} << j))) continue;
          for (int i = 0; i < data->rows(); ++i) {
            sub.at(i, col) = data->at(i, j);
          }
          ++col;
        }
        return Rational(rational_rank(std::move(sub)));
      },
      FlagSet{Property::Submodular, Property::Increasing,
              Property::Normalized});
}

SetFunction gen_matroid_rank_uniform(const GroundSet& ground, int k) {
  if (k < 0) {
    throw SubmodError(ErrorCode::BadArgument, "uniform rank needs k >= 0");
  }
  return SetFunction(
      ground,
      [k](Subset x) { return Rational(std::min(popcount(x), k)); },
      FlagSet{Property::Submodular, Property::Increasing,
              Property::Normalized});
}

SetFunction gen_concave_of_measure(
    const GroundSet& ground, const std::vector<Rational>& atom_weights,
    const std::vector<std::pair<Rational, Rational>>& breakpoints) {
  if (static_cast<int>(atom_weights.size()) != ground.size()) {
    throw SubmodError(ErrorCode::ShapeError, "one weight per atom");
  }
  for (const Rational& w : atom_weights) {
    if (w < 0) {
      throw SubmodError(ErrorCode::NegativeWeight,
                        "measure weights must be nonnegative");
    }
  }
  if (breakpoints.empty()) {
    throw SubmodError(ErrorCode::BadArgument, "need at least one breakpoint");
  }
  std::vector<Rational> slopes;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1].first <= breakpoints[i].first) {
      throw SubmodError(ErrorCode::BadArgument,
                        "breakpoint abscissas must increase");
    }
    slopes.push_back((breakpoints[i + 1].second - breakpoints[i].second) /
                     (breakpoints[i + 1].first - breakpoints[i].first));
  }
  for (std::size_t i = 0; i + 1 < slopes.size(); ++i) {
    if (slopes[i + 1] > slopes[i]) {
      throw SubmodError(ErrorCode::NotConcave,
                        "breakpoint slopes must be nonincreasing");
    }
  }
  bool nondecreasing = true;
  for (const Rational& s : slopes) {
    if (s < 0) nondecreasing = false;
  }
  auto bp = std::make_shared<
      const std::vector<std::pair<Rational, Rational>>>(breakpoints);
  auto mu = std::make_shared<const std::vector<Rational>>(atom_weights);
  auto eval_f = [bp](const Rational& x) {
    const auto& pts = *bp;
    if (pts.size() == 1) return pts[0].second;
    std::size_t seg = 0;  // extrapolate with boundary slopes beyond the ends
    while (seg + 2 < pts.size() && pts[seg + 1].first < x) ++seg;
    const Rational slope = (pts[seg + 1].second - pts[seg].second) /
                           (pts[seg + 1].first - pts[seg].first);
    return Rational(pts[seg].second + slope * (x - pts[seg].first));
  };
  FlagSet flags{Property::Submodular};
  if (nondecreasing) flags.set(Property::Increasing);
  return SetFunction(
      ground,
      [mu, eval_f](Subset x) {
        Rational total(0);
        for (std::size_t i = 0; i < mu->size(); ++i) {
          if (x & (Subset{1} << i)) total += (*mu)[i];
        }
        return eval_f(total);
      },
      flags);
}

SetFunction gen_entropy(const GroundSet& ground,
                        const std::vector<int>& alphabet_sizes,
                        const std::vector<double>& joint) {
  if (static_cast<int>(alphabet_sizes.size()) != ground.size()) {
    throw SubmodError(ErrorCode::ShapeError, "one alphabet per atom");
  }
  std::size_t total = 1;
  for (int a : alphabet_sizes) {
    if (a < 1) {
      throw SubmodError(ErrorCode::BadArgument, "alphabet size must be >= 1");
    }
    total *= static_cast<std::size_t>(a);
  }
  if (joint.size() != total) {
    throw SubmodError(ErrorCode::ShapeError, "joint table size mismatch");
  }
  double sum = 0.0;
  for (double p : joint) {
    if (p < 0.0) {
      throw SubmodError(ErrorCode::InvalidDistribution,
                        "negative probability");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw SubmodError(ErrorCode::InvalidDistribution,
                      "probabilities must sum to 1");
  }
  auto sizes = std::make_shared<const std::vector<int>>(alphabet_sizes);
  auto table = std::make_shared<const std::vector<double>>(joint);
  return SetFunction(
      ground,
      [sizes, table](Subset u) {
        // Marginal key: mixed radix over the coordinates kept by u.
        std::map<std::uint64_t, double> marginal;
        for (std::size_t idx = 0; idx < table->size(); ++idx) {
          std::uint64_t key = 0;
          std::uint64_t stride = 1;
          std::size_t rest = idx;
          for (std::size_t i = 0; i < sizes->size(); ++i) {
            const int symbol = static_cast<int>(rest % (*sizes)[i]);
            rest /= (*sizes)[i];
            if (u & (Subset{1} << i)) {
              key += static_cast<std::uint64_t>(symbol) * stride;
              stride *= static_cast<std::uint64_t>((*sizes)[i]);
            }
          }
          marginal[key] += (*table)[idx];
        }
        double h = 0.0;
        for (const auto& [key, p] : marginal) {
          if (p > 0.0) h -= p * std::log2(p);
        }
        return rational_from_double(h);
      },
      FlagSet{Property::Submodular, Property::Increasing,
              Property::Normalized},
      NumericMode::approximate(1e-9));
}

SetFunction gen_logdet(const GroundSet& ground, const QMatrix& matrix) {
  if (matrix.rows() != ground.size() || matrix.cols() != ground.size()) {
    throw SubmodError(ErrorCode::ShapeError, "matrix side must equal n");
  }
  if (!matrix.is_symmetric() || !is_positive_definite(matrix)) {
    throw SubmodError(ErrorCode::NotPD,
                      "matrix must be symmetric positive definite");
  }
  auto data = std::make_shared<const QMatrix>(matrix);
  return SetFunction(
      ground,
      [data](Subset s) {
        const int k = popcount(s);
        if (k == 0) return Rational(0);
        QMatrix sub(k, k);
        std::vector<int> keep;
        for (int i = 0; i < data->rows(); ++i) {
          if (s & (Subset{1} << i)) keep.push_back(i);
        }
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) {
            sub.at(i, j) = data->at(keep[i], keep[j]);
          }
        }
        const Rational det = determinant(std::move(sub));
        return rational_from_double(
            std::log(det.convert_to<double>()));
      },
      FlagSet{Property::Submodular, Property::Normalized},
      NumericMode::approximate(1e-9));
}

SetFunction gen_hitting(const GroundSet& ground, const QMatrix& kernel,
                        const std::vector<Rational>& start) {
  const int n = ground.size();
  if (kernel.rows() != n || kernel.cols() != n ||
      static_cast<int>(start.size()) != n) {
    throw SubmodError(ErrorCode::ShapeError, "kernel/start size mismatch");
  }
  Rational start_sum(0);
  for (const Rational& p : start) {
    if (p < 0) {
      throw SubmodError(ErrorCode::InvalidDistribution,
                        "negative start probability");
    }
    start_sum += p;
  }
  if (start_sum != 1) {
    throw SubmodError(ErrorCode::InvalidDistribution, "start must sum to 1");
  }
  for (int i = 0; i < n; ++i) {
    Rational row(0);
    for (int j = 0; j < n; ++j) {
      if (kernel.at(i, j) < 0) {
        throw SubmodError(ErrorCode::InvalidKernel, "negative transition");
      }
      row += kernel.at(i, j);
    }
    if (row != 1) {
      throw SubmodError(ErrorCode::InvalidKernel, "rows must sum to 1");
    }
  }
  auto p = std::make_shared<const QMatrix>(kernel);
  auto sigma = std::make_shared<const std::vector<Rational>>(start);
  return SetFunction(
      ground,
      [p, sigma, n](Subset x) {
        if (x == 0) return Rational(0);
        // States that can reach X along positive-probability edges.
        std::vector<bool> reach(n, false);
        for (int i = 0; i < n; ++i) reach[i] = (x >> i) & 1u;
        bool grew = true;
        while (grew) {
          grew = false;
          for (int i = 0; i < n; ++i) {
            if (reach[i]) continue;
            for (int j = 0; j < n; ++j) {
              if (reach[j] && p->at(i, j) > 0) {
                reach[i] = true;
                grew = true;
                break;
              }
            }
          }
        }
        std::vector<int> inner;  // reach \ X: unknown hitting probabilities
        for (int i = 0; i < n; ++i) {
          if (reach[i] && !((x >> i) & 1u)) inner.push_back(i);
        }
        std::vector<Rational> h(n, Rational(0));
        for (int i = 0; i < n; ++i) {
          if ((x >> i) & 1u) h[i] = 1;
        }
        if (!inner.empty()) {
          const int m = static_cast<int>(inner.size());
          QMatrix a(m, m);
          std::vector<Rational> b(m);
          for (int r = 0; r < m; ++r) {
            for (int c = 0; c < m; ++c) {
              a.at(r, c) = (r == c ? Rational(1) : Rational(0)) -
                           p->at(inner[r], inner[c]);
            }
            for (int j = 0; j < n; ++j) {
              if ((x >> j) & 1u) b[r] += p->at(inner[r], j);
            }
          }
          auto solved = solve_linear(std::move(a), std::move(b));
          if (!solved) {
            throw SubmodError(ErrorCode::InternalError,
                              "hitting system singular after pre-pass");
          }
          for (int r = 0; r < m; ++r) h[inner[r]] = (*solved)[r];
        }
        Rational value(0);
        for (int i = 0; i < n; ++i) value += (*sigma)[i] * h[i];
        return value;
      },
      FlagSet{Property::Submodular, Property::Increasing,
              Property::Normalized});
}

SetFunction gen_ideal_indicator(const GroundSet& ground,
                                const std::vector<Subset>& ideal) {
  std::vector<bool> member(ground.subset_count(), false);
  for (Subset s : ideal) {
    if (s > ground.full_mask()) {
      throw SubmodError(ErrorCode::BadArgument, "ideal member out of range");
    }
    member[s] = true;
  }
  if (!member[0]) {
    throw SubmodError(ErrorCode::NotAnIdeal, "ideal must contain empty set");
  }
  for (Subset s = 1; s <= ground.full_mask(); ++s) {
    if (!member[s]) continue;
    for (int i = 0; i < ground.size(); ++i) {
      const Subset bit = Subset{1} << i;
      if ((s & bit) && !member[s & ~bit]) {
        throw SubmodError(ErrorCode::NotAnIdeal,
                          "family is not down-closed at " +
                              ground.subset_name(s));
      }
    }
  }
  auto data = std::make_shared<const std::vector<bool>>(std::move(member));
  return SetFunction(
      ground,
      [data](Subset x) { return Rational((*data)[x] ? 0 : 1); },
      FlagSet{Property::Submodular, Property::Increasing});
}

SetFunction gen_hom_count(const GroundSet& ground, int f_vertices,
                          const std::vector<std::pair<int, int>>& f_edges,
                          int g_vertices,
                          const std::vector<std::pair<int, int>>& g_edges) {
  if (static_cast<int>(f_edges.size()) != ground.size()) {
    throw SubmodError(ErrorCode::ShapeError, "one F-edge per atom");
  }
  if (f_vertices > 6 || g_vertices > 6) {
    throw SubmodError(ErrorCode::TooLarge,
                      "hom counting capped at 6 vertices per graph");
  }
  if (f_vertices < 1 || g_vertices < 1) {
    throw SubmodError(ErrorCode::BadArgument, "graphs must have vertices");
  }
  for (const auto& [u, v] : f_edges) {
    if (u < 0 || u >= f_vertices || v < 0 || v >= f_vertices) {
      throw SubmodError(ErrorCode::ShapeError, "F edge out of range");
    }
  }
  std::vector<std::vector<bool>> adj(
      g_vertices, std::vector<bool>(g_vertices, false));
  for (const auto& [u, v] : g_edges) {
    if (u < 0 || u >= g_vertices || v < 0 || v >= g_vertices) {
      throw SubmodError(ErrorCode::ShapeError, "G edge out of range");
    }
    adj[u][v] = adj[v][u] = true;
  }
  auto fe = std::make_shared<const std::vector<std::pair<int, int>>>(f_edges);
  auto ga = std::make_shared<const std::vector<std::vector<bool>>>(adj);
  return SetFunction(
      ground,
      [fe, ga, f_vertices, g_vertices](Subset x) {
        std::uint64_t maps = 1;
        for (int i = 0; i < f_vertices; ++i) {
          maps *= static_cast<std::uint64_t>(g_vertices);
        }
        std::uint64_t count = 0;
        std::vector<int> image(f_vertices);
        for (std::uint64_t code = 0; code < maps; ++code) {
          std::uint64_t rest = code;
          for (int i = 0; i < f_vertices; ++i) {
            image[i] = static_cast<int>(rest % g_vertices);
            rest /= g_vertices;
          }
          bool ok = true;
          for (std::size_t e = 0; e < fe->size() && ok; ++e) {
            if (!(x & (Subset{1} << e))) continue;
            const auto& [u, v] = (*fe)[e];
            if (!(*ga)[image[u]][image[v]]) ok = false;
          }
          if (ok) ++count;
        }
        return Rational(count);
      },
      FlagSet{Property::Supermodular});
}

}  // namespace submod
