// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "cochain/graph.hpp"

namespace cochain {

/// Canonical co-bipartite chain instance: a twin-free skeleton with rows
/// 0..k, where v_i (clique side K) is adjacent to v'_j (side K') iff j < i,
/// plus the number of twin instances behind each skeleton vertex.
///
/// m'_k == 0 encodes the skeleton without v'_k. The single exception to
/// m_i >= 1 is the empty form {m=(0), m'=(0)} standing for the empty graph.
class ChainForm {
 public:
  /// Throws Error(InvalidForm) when the multiplicities violate the invariants.
  ChainForm(std::vector<Count> m, std::vector<Count> m_prime);

  static ChainForm empty();

  std::size_t k() const noexcept { return m_.size() - 1; }
  std::size_t rows() const noexcept { return m_.size(); }
  std::span<const Count> m() const noexcept { return m_; }
  std::span<const Count> m_prime() const noexcept { return m_prime_; }

  /// True when v'_k is absent (m'_k == 0).
  bool is_minus() const noexcept { return m_prime_.back() == 0; }

  Count clique_size() const noexcept;     // sum of m
  Count co_clique_size() const noexcept;  // sum of m'
  Count vertex_count() const noexcept {
    return clique_size() + co_clique_size();
  }

  friend bool operator==(const ChainForm&, const ChainForm&) = default;
  friend std::strong_ordering operator<=>(const ChainForm& a,
                                          const ChainForm& b) {
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    return a.m_prime_ <=> b.m_prime_;
  }

 private:
  ChainForm() = default;

  std::vector<Count> m_;
  std::vector<Count> m_prime_;
};

/// Cut function: s_i (resp. s'_i) instances of v_i (resp. v'_i) lie in S.
struct CutAssignment {
  std::vector<Count> s;
  std::vector<Count> s_prime;

  friend bool operator==(const CutAssignment&, const CutAssignment&) = default;
};

/// Throws Error(InvalidCut) unless 0 <= s_i <= m_i and 0 <= s'_i <= m'_i.
void validate(const ChainForm& form, const CutAssignment& cut);

/// Exchanges S and its complement.
CutAssignment complement(const ChainForm& form, const CutAssignment& cut);

/// Cut size of the cut function on the expanded graph, in O(k).
Count cut_size(const ChainForm& form, const CutAssignment& cut);

/// Edges of the expanded graph: C(M,2) + C(M',2) + sum_{i>j} m_i m'_j.
Count edge_count(const ChainForm& form);

enum class Side : unsigned char { K, KPrime };

struct RowCoord {
  Side side = Side::K;
  std::size_t row = 0;

  friend bool operator==(const RowCoord&, const RowCoord&) = default;
};

/// Skeleton coordinate of every original vertex id.
using VertexMap = std::vector<RowCoord>;

struct Expansion {
  SimpleGraph graph;
  VertexMap map;
};

/// Materializes every twin instance. Ids are assigned row by row, K first:
/// instances of v_0, v_1, ..., v_k, then v'_0, ..., v'_k.
Expansion expand_with_map(const ChainForm& form);
SimpleGraph expand(const ChainForm& form);

/// Vertex subset realizing a cut function: the first s_i vertices mapped to
/// (K, i) (in id order) go to S, likewise for K'.
std::vector<bool> materialize(const ChainForm& form, const VertexMap& map,
                              const CutAssignment& cut);

/// Relabeling by the skeleton automorphism (v_i <-> v'_{k-i}; for the minus
/// variant v_k is fixed and the remaining rows use the k-1 map). The result
/// describes an isomorphic graph.
ChainForm mirror(const ChainForm& form);

/// Lexicographic minimum of `form` and `mirror(form)`.
ChainForm canonical(const ChainForm& form);

/// Where a vertex lands under `mirror`.
RowCoord mirror(const ChainForm& form, RowCoord coord);

struct Normalized {
  ChainForm form;
  VertexMap map;
};

using Normalization = std::variant<Normalized, Rejection>;

/// Contracts twin classes and returns the canonical form together with the
/// coordinate of every input vertex. Rejections from `recognize` are passed
/// through; a contraction that does not fit the skeleton is an
/// Error(InternalFault).
Normalization normalize(const SimpleGraph& g);

}  // namespace cochain
