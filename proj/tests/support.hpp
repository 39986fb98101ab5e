// SPDX-License-Identifier: Apache-2.0
//
// Test-only helpers. Everything here is written against the plain graph and
// must not call into the solver, recognizer or normalizer it is used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "cochain/chain_form.hpp"
#include "cochain/graph.hpp"

namespace cochain::testing {

inline SimpleGraph cycle(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return SimpleGraph(n, edges);
}

inline SimpleGraph complete(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  return SimpleGraph(n, edges);
}

inline SimpleGraph path(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return SimpleGraph(n, edges);
}

/// Graph from an adjacency bitmask over the pairs (u < v) in row-major order.
inline SimpleGraph from_pair_mask(VertexId n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1U) edges.push_back({u, v});
  return SimpleGraph(n, edges);
}

/// Tries every split of the vertex set into two sides and accepts when both
/// sides are cliques and the cross neighborhoods of one side form a chain
/// under inclusion.
inline bool is_cochain_by_enumeration(const SimpleGraph& g) {
  const VertexId n = g.vertex_count();
  for (std::uint64_t side = 0; side < (std::uint64_t{1} << n); ++side) {
    auto in_k = [&](VertexId v) { return ((side >> v) & 1U) != 0; };
    bool cliques = true;
    for (VertexId u = 0; u < n && cliques; ++u)
      for (VertexId v = u + 1; v < n && cliques; ++v)
        if (in_k(u) == in_k(v) && !g.adjacent(u, v)) cliques = false;
    if (!cliques) continue;
    std::vector<std::uint64_t> cross;
    for (VertexId u = 0; u < n; ++u) {
      if (!in_k(u)) continue;
      std::uint64_t nb = 0;
      for (VertexId v = 0; v < n; ++v)
        if (!in_k(v) && g.adjacent(u, v)) nb |= std::uint64_t{1} << v;
      cross.push_back(nb);
    }
    bool chain = true;
    for (std::size_t a = 0; a < cross.size() && chain; ++a)
      for (std::size_t b = 0; b < cross.size() && chain; ++b) {
        const bool a_in_b = (cross[a] & ~cross[b]) == 0;
        const bool b_in_a = (cross[b] & ~cross[a]) == 0;
        if (!a_in_b && !b_in_a) chain = false;
      }
    if (chain) return true;
  }
  return false;
}

/// Cut size computed on the materialized graph.
inline Count cut_size_by_expansion(const ChainForm& form,
                                   const CutAssignment& cut) {
  const Expansion e = expand_with_map(form);
  return cut_size(e.graph, materialize(form, e.map, cut));
}

/// Calls `visit` on every valid nonempty chain form with at most
/// `max_vertices` vertices.
inline void for_each_form(Count max_vertices,
                          const std::function<void(const ChainForm&)>& visit) {
  // Row by row: m_i >= 1; m'_i >= 1 except possibly on the last row.
  std::vector<Count> m;
  std::vector<Count> mp;
  std::function<void(Count)> grow = [&](Count budget) {
    for (Count a = 1; a <= budget; ++a) {
      m.push_back(a);
      // Close the form here: last row m' in [0, budget - a].
      for (Count b = 0; b <= budget - a; ++b) {
        mp.push_back(b);
        visit(ChainForm(m, mp));
        if (b >= 1 && budget - a - b >= 1) grow(budget - a - b);
        mp.pop_back();
      }
      m.pop_back();
    }
  };
  grow(max_vertices);
}

/// Every cut function of `form`.
inline void for_each_cut(const ChainForm& form,
                         const std::function<void(const CutAssignment&)>& visit) {
  const std::size_t rows = form.rows();
  CutAssignment cut{std::vector<Count>(rows, 0), std::vector<Count>(rows, 0)};
  for (;;) {
    visit(cut);
    std::size_t d = 0;
    for (; d < 2 * rows; ++d) {
      Count& digit = d < rows ? cut.s[d] : cut.s_prime[d - rows];
      const Count top = d < rows ? form.m()[d] : form.m_prime()[d - rows];
      if (digit < top) {
        ++digit;
        break;
      }
      digit = 0;
    }
    if (d == 2 * rows) return;
  }
}

}  // namespace cochain::testing
