// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <map>
#include <string>

#include "cochain/chain_form.hpp"
#include "cochain/error.hpp"

namespace cochain {

namespace {

[[noreturn]] void fault(const std::string& what) {
  throw Error(ErrorCode::InternalFault, "normalize: " + what);
}

// Twin classes of one side, keyed by the number of neighbors on the other
// side. Nested neighborhoods make equal counts equal neighborhoods.
std::map<std::size_t, std::vector<VertexId>> group_by_cross_degree(
    const SimpleGraph& g, const std::vector<VertexId>& side,
    const std::vector<char>& on_side) {
  std::map<std::size_t, std::vector<VertexId>> groups;
  for (VertexId v : side) {
    std::size_t cross = 0;
    for (VertexId w : g.neighbors(v)) cross += on_side[w] ? 0 : 1;
    groups[cross].push_back(v);
  }
  return groups;
}

}  // namespace

Normalization normalize(const SimpleGraph& g) {
  auto recognition = recognize(g);
  if (auto* rejection = std::get_if<Rejection>(&recognition)) {
    return *rejection;
  }
  const auto& split = std::get<CliqueBipartition>(recognition);
  const VertexId n = g.vertex_count();
  if (n == 0) return Normalized{ChainForm::empty(), {}};

  // Universal vertices are twins of each other wherever they sit; they all
  // become v_k of a skeleton without v'_k, so collect them in K.
  std::vector<VertexId> clique = split.clique;
  std::vector<VertexId> co_clique;
  for (VertexId v : split.co_clique) {
    (g.degree(v) + 1 == n ? clique : co_clique).push_back(v);
  }

  if (co_clique.empty()) {
    VertexMap map(n, RowCoord{Side::K, 0});
    return Normalized{ChainForm({static_cast<Count>(n)}, {0}), std::move(map)};
  }

  std::vector<char> in_clique(n, 0);
  for (VertexId v : clique) in_clique[v] = 1;
  std::vector<char> in_co_clique(n, 0);
  for (VertexId v : co_clique) in_co_clique[v] = 1;

  const auto rows = group_by_cross_degree(g, clique, in_clique);
  const auto rows_prime = group_by_cross_degree(g, co_clique, in_co_clique);

  if (rows.begin()->first != 0) {
    fault("clique side has no vertex without cross neighbors");
  }
  const std::size_t k = rows.size() - 1;
  const bool has_isolated_prime = rows_prime.begin()->first == 0;
  const bool minus = !has_isolated_prime;
  if (rows_prime.size() != (minus ? k : k + 1)) {
    fault("expected " + std::to_string(minus ? k : k + 1) +
          " twin classes on the co-clique side, found " +
          std::to_string(rows_prime.size()));
  }

  std::vector<Count> m;
  std::vector<const std::vector<VertexId>*> class_of_row;
  for (const auto& [degree, members] : rows) {
    m.push_back(static_cast<Count>(members.size()));
    class_of_row.push_back(&members);
  }
  // v'_0 has the most neighbors in K.
  std::vector<Count> m_prime;
  std::vector<const std::vector<VertexId>*> class_of_row_prime;
  for (auto it = rows_prime.rbegin(); it != rows_prime.rend(); ++it) {
    m_prime.push_back(static_cast<Count>(it->second.size()));
    class_of_row_prime.push_back(&it->second);
  }
  if (minus) m_prime.push_back(0);

  for (std::size_t i = 0; i <= k; ++i) {
    for (std::size_t j = 0; j < class_of_row_prime.size(); ++j) {
      const bool expected = j < i;
      if (g.adjacent(class_of_row[i]->front(), class_of_row_prime[j]->front()) !=
          expected) {
        fault("row " + std::to_string(i) + " and co-row " + std::to_string(j) +
              " break the staircase adjacency");
      }
    }
  }

  VertexMap map(n);
  for (std::size_t i = 0; i <= k; ++i) {
    for (VertexId v : *class_of_row[i]) map[v] = {Side::K, i};
  }
  for (std::size_t j = 0; j < class_of_row_prime.size(); ++j) {
    for (VertexId v : *class_of_row_prime[j]) map[v] = {Side::KPrime, j};
  }

  ChainForm form(std::move(m), std::move(m_prime));
  ChainForm flipped = mirror(form);
  if (flipped < form) {
    for (RowCoord& coord : map) coord = mirror(form, coord);
    return Normalized{std::move(flipped), std::move(map)};
  }
  return Normalized{std::move(form), std::move(map)};
}

}  // namespace cochain
