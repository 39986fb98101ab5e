// SPDX-License-Identifier: Apache-2.0
#include "cochain/chain_form.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cochain/error.hpp"

namespace cochain {

ChainForm::ChainForm(std::vector<Count> m, std::vector<Count> m_prime)
    : m_(std::move(m)), m_prime_(std::move(m_prime)) {
  if (m_.empty() || m_.size() != m_prime_.size()) {
    throw Error(ErrorCode::InvalidForm,
                "multiplicity vectors must be non-empty and of equal length");
  }
  const bool empty_graph = m_.size() == 1 && m_[0] == 0 && m_prime_[0] == 0;
  if (empty_graph) return;
  const std::size_t last = m_.size() - 1;
  for (std::size_t i = 0; i <= last; ++i) {
    if (m_[i] < 1) {
      throw Error(ErrorCode::InvalidForm,
                  "m_" + std::to_string(i) + " must be at least 1");
    }
    const Count floor_prime = i == last ? 0 : 1;
    if (m_prime_[i] < floor_prime) {
      throw Error(ErrorCode::InvalidForm,
                  "m'_" + std::to_string(i) + " must be at least " +
                      std::to_string(floor_prime));
    }
  }
}

ChainForm ChainForm::empty() {
  ChainForm form;
  form.m_ = {0};
  form.m_prime_ = {0};
  return form;
}

Count ChainForm::clique_size() const noexcept {
  return std::accumulate(m_.begin(), m_.end(), Count{0});
}

Count ChainForm::co_clique_size() const noexcept {
  return std::accumulate(m_prime_.begin(), m_prime_.end(), Count{0});
}

void validate(const ChainForm& form, const CutAssignment& cut) {
  if (cut.s.size() != form.rows() || cut.s_prime.size() != form.rows()) {
    throw Error(ErrorCode::InvalidCut,
                "cut has " + std::to_string(cut.s.size()) + "/" +
                    std::to_string(cut.s_prime.size()) + " entries, form has " +
                    std::to_string(form.rows()) + " rows");
  }
  for (std::size_t i = 0; i < form.rows(); ++i) {
    if (cut.s[i] < 0 || cut.s[i] > form.m()[i]) {
      throw Error(ErrorCode::InvalidCut,
                  "s_" + std::to_string(i) + " = " + std::to_string(cut.s[i]) +
                      " outside [0, " + std::to_string(form.m()[i]) + "]");
    }
    if (cut.s_prime[i] < 0 || cut.s_prime[i] > form.m_prime()[i]) {
      throw Error(ErrorCode::InvalidCut,
                  "s'_" + std::to_string(i) + " = " +
                      std::to_string(cut.s_prime[i]) + " outside [0, " +
                      std::to_string(form.m_prime()[i]) + "]");
    }
  }
}

CutAssignment complement(const ChainForm& form, const CutAssignment& cut) {
  validate(form, cut);
  CutAssignment out = cut;
  for (std::size_t i = 0; i < form.rows(); ++i) {
    out.s[i] = form.m()[i] - cut.s[i];
    out.s_prime[i] = form.m_prime()[i] - cut.s_prime[i];
  }
  return out;
}

Count cut_size(const ChainForm& form, const CutAssignment& cut) {
  validate(form, cut);
  const Count total = form.clique_size();
  const Count total_prime = form.co_clique_size();
  const Count in_s = std::accumulate(cut.s.begin(), cut.s.end(), Count{0});
  const Count in_s_prime =
      std::accumulate(cut.s_prime.begin(), cut.s_prime.end(), Count{0});

  Count size = in_s * (total - in_s) + in_s_prime * (total_prime - in_s_prime);
  // Diagonal edges: instances of v_i see v'_j for j < i.
  Count outside_before = 0;  // sum_{j<i} (m'_j - s'_j)
  Count inside_before = 0;   // sum_{j<i} s'_j
  for (std::size_t i = 0; i < form.rows(); ++i) {
    size += cut.s[i] * outside_before + (form.m()[i] - cut.s[i]) * inside_before;
    outside_before += form.m_prime()[i] - cut.s_prime[i];
    inside_before += cut.s_prime[i];
  }
  return size;
}

Count edge_count(const ChainForm& form) {
  const Count total = form.clique_size();
  const Count total_prime = form.co_clique_size();
  Count edges = total * (total - 1) / 2 + total_prime * (total_prime - 1) / 2;
  Count prime_before = 0;
  for (std::size_t i = 0; i < form.rows(); ++i) {
    edges += form.m()[i] * prime_before;
    prime_before += form.m_prime()[i];
  }
  return edges;
}

Expansion expand_with_map(const ChainForm& form) {
  const auto n = static_cast<VertexId>(form.vertex_count());
  Expansion out;
  out.map.reserve(n);
  std::vector<VertexId> first_of_row(form.rows());
  std::vector<VertexId> first_of_row_prime(form.rows());
  for (std::size_t i = 0; i < form.rows(); ++i) {
    first_of_row[i] = static_cast<VertexId>(out.map.size());
    for (Count c = 0; c < form.m()[i]; ++c) out.map.push_back({Side::K, i});
  }
  for (std::size_t i = 0; i < form.rows(); ++i) {
    first_of_row_prime[i] = static_cast<VertexId>(out.map.size());
    for (Count c = 0; c < form.m_prime()[i]; ++c) {
      out.map.push_back({Side::KPrime, i});
    }
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(edge_count(form)));
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const RowCoord a = out.map[u];
      const RowCoord b = out.map[v];
      bool adjacent = a.side == b.side;
      if (!adjacent) {
        const RowCoord& k_side = a.side == Side::K ? a : b;
        const RowCoord& prime_side = a.side == Side::K ? b : a;
        adjacent = prime_side.row < k_side.row;
      }
      if (adjacent) edges.push_back({u, v});
    }
  }
  out.graph = SimpleGraph(n, edges);
  return out;
}

SimpleGraph expand(const ChainForm& form) {
  return expand_with_map(form).graph;
}

std::vector<bool> materialize(const ChainForm& form, const VertexMap& map,
                              const CutAssignment& cut) {
  validate(form, cut);
  std::vector<Count> left_k = cut.s;
  std::vector<Count> left_prime = cut.s_prime;
  std::vector<bool> in_s(map.size(), false);
  for (std::size_t v = 0; v < map.size(); ++v) {
    auto& left = map[v].side == Side::K ? left_k : left_prime;
    if (left.at(map[v].row) > 0) {
      in_s[v] = true;
      --left[map[v].row];
    }
  }
  return in_s;
}

RowCoord mirror(const ChainForm& form, RowCoord coord) {
  const std::size_t k = form.k();
  const Side other = coord.side == Side::K ? Side::KPrime : Side::K;
  if (!form.is_minus()) return {other, k - coord.row};
  if (coord.side == Side::K && coord.row == k) return coord;
  return {other, k - 1 - coord.row};
}

ChainForm mirror(const ChainForm& form) {
  const std::size_t k = form.k();
  std::vector<Count> m(form.rows());
  std::vector<Count> m_prime(form.rows());
  if (!form.is_minus()) {
    for (std::size_t i = 0; i <= k; ++i) {
      m[i] = form.m_prime()[k - i];
      m_prime[i] = form.m()[k - i];
    }
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      m[i] = form.m_prime()[k - 1 - i];
      m_prime[i] = form.m()[k - 1 - i];
    }
    m[k] = form.m()[k];
    m_prime[k] = 0;
  }
  if (form.vertex_count() == 0) return ChainForm::empty();
  return ChainForm(std::move(m), std::move(m_prime));
}

ChainForm canonical(const ChainForm& form) {
  ChainForm other = mirror(form);
  return other < form ? other : form;
}

}  // namespace cochain
