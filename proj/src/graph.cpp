// SPDX-License-Identifier: Apache-2.0
#include "cochain/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "cochain/error.hpp"

namespace cochain {

SimpleGraph::SimpleGraph(VertexId n) : adjacency_(n) {}

SimpleGraph::SimpleGraph(VertexId n, std::span<const Edge> edges)
    : adjacency_(n) {
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::InvalidGraph,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                      ") has an endpoint >= " + std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::InvalidGraph,
                  "loop at vertex " + std::to_string(e.u));
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (VertexId v = 0; v < n; ++v) {
    auto& list = adjacency_[v];
    std::sort(list.begin(), list.end());
    if (auto dup = std::adjacent_find(list.begin(), list.end());
        dup != list.end()) {
      throw Error(ErrorCode::InvalidGraph,
                  "parallel edge (" + std::to_string(v) + ", " +
                      std::to_string(*dup) + ")");
    }
  }
  edge_count_ = edges.size();
}

bool SimpleGraph::adjacent(VertexId u, VertexId v) const {
  const auto& list = adjacency_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Count cut_size(const SimpleGraph& g, const std::vector<bool>& in_s) {
  if (in_s.size() != g.vertex_count()) {
    throw Error(ErrorCode::InvalidCut, "subset size does not match graph");
  }
  Count total = 0;
  for (const Edge& e : g.edges()) {
    if (in_s[e.u] != in_s[e.v]) ++total;
  }
  return total;
}

std::string_view to_string(RejectStage stage) noexcept {
  switch (stage) {
    case RejectStage::ComplementNotBipartite:
      return "complement not bipartite";
    case RejectStage::ChainViolated:
      return "chain condition violated";
  }
  return "unknown";
}

namespace {

// Returns the color of every vertex, or the vertex where an odd cycle of the
// complement closes.
std::variant<std::vector<int>, VertexId> color_complement(const SimpleGraph& g) {
  const VertexId n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<char> is_neighbor(n, 0);
  std::deque<VertexId> queue;

  for (VertexId root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      for (VertexId w : g.neighbors(u)) is_neighbor[w] = 1;
      for (VertexId w = 0; w < n; ++w) {
        if (w == u || is_neighbor[w]) continue;
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          for (VertexId x : g.neighbors(u)) is_neighbor[x] = 0;
          return u;
        }
      }
      for (VertexId w : g.neighbors(u)) is_neighbor[w] = 0;
    }
  }
  return color;
}

}  // namespace

Recognition recognize(const SimpleGraph& g) {
  auto coloring = color_complement(g);
  if (auto* bad = std::get_if<VertexId>(&coloring)) {
    return Rejection{RejectStage::ComplementNotBipartite,
                     "odd cycle in the complement through vertex " +
                         std::to_string(*bad)};
  }
  const auto& color = std::get<std::vector<int>>(coloring);
  const VertexId n = g.vertex_count();

  // Neighbors on the other side, sorted (inherits the adjacency order).
  std::vector<std::vector<VertexId>> cross(n);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.neighbors(v)) {
      if (color[w] != color[v]) cross[v].push_back(w);
    }
  }

  CliqueBipartition split;
  for (VertexId v = 0; v < n; ++v) {
    (color[v] == 0 ? split.clique : split.co_clique).push_back(v);
  }
  auto by_cross_degree = [&](VertexId a, VertexId b) {
    return cross[a].size() < cross[b].size();
  };
  std::stable_sort(split.clique.begin(), split.clique.end(), by_cross_degree);
  std::stable_sort(split.co_clique.begin(), split.co_clique.end(),
                   [&](VertexId a, VertexId b) {
                     return cross[a].size() > cross[b].size();
                   });

  for (std::size_t i = 1; i < split.clique.size(); ++i) {
    const auto& smaller = cross[split.clique[i - 1]];
    const auto& larger = cross[split.clique[i]];
    if (!std::includes(larger.begin(), larger.end(), smaller.begin(),
                       smaller.end())) {
      return Rejection{RejectStage::ChainViolated,
                       "neighborhoods of vertices " +
                           std::to_string(split.clique[i - 1]) + " and " +
                           std::to_string(split.clique[i]) +
                           " are not nested"};
    }
  }
  return split;
}

}  // namespace cochain
