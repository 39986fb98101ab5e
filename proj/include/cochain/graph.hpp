// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cochain {

using VertexId = std::uint32_t;
using Count = std::int64_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1. Immutable once built; loops,
/// parallel edges and out-of-range endpoints are rejected at construction.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(VertexId n);
  SimpleGraph(VertexId n, std::span<const Edge> edges);

  VertexId vertex_count() const noexcept {
    return static_cast<VertexId>(adjacency_.size());
  }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

  /// Sorted neighbor list of `v`.
  std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_.at(v);
  }
  bool adjacent(VertexId u, VertexId v) const;

  /// All edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Number of edges of `g` with exactly one endpoint in `in_s`.
Count cut_size(const SimpleGraph& g, const std::vector<bool>& in_s);

/// Two cliques covering the vertex set. `clique` is ordered by nondecreasing
/// number of neighbors in `co_clique`; `co_clique` by nonincreasing number of
/// neighbors in `clique`. For chain graphs both orders are inclusion chains.
struct CliqueBipartition {
  std::vector<VertexId> clique;
  std::vector<VertexId> co_clique;
};

enum class RejectStage {
  ComplementNotBipartite,
  ChainViolated,
};

std::string_view to_string(RejectStage stage) noexcept;

struct Rejection {
  RejectStage stage;
  std::string detail;
};

using Recognition = std::variant<CliqueBipartition, Rejection>;

/// Decides whether `g` is a co-bipartite chain graph: 2-colors the complement
/// to get candidate cliques, then checks that neighborhoods across the split
/// are nested. Quadratic in the vertex count.
Recognition recognize(const SimpleGraph& g);

}  // namespace cochain
