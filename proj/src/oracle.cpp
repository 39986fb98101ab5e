// SPDX-License-Identifier: Apache-2.0
#include "cochain/oracle.hpp"

#include <bit>
#include <limits>

#include "cochain/error.hpp"

namespace cochain::oracle {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

}  // namespace

std::uint64_t subset_state_count(const SimpleGraph& g) {
  const VertexId n = g.vertex_count();
  if (n <= 1) return 1;
  if (n - 1 >= 64) return kSaturated;
  return std::uint64_t{1} << (n - 1);
}

std::uint64_t multiplicity_state_count(const ChainForm& form) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < form.rows(); ++i) {
    total = saturating_mul(total, static_cast<std::uint64_t>(form.m()[i]) + 1);
    total = saturating_mul(total,
                           static_cast<std::uint64_t>(form.m_prime()[i]) + 1);
  }
  return total;
}

OracleResult brute_force_subsets(const SimpleGraph& g, std::uint64_t limit) {
  const std::uint64_t required = subset_state_count(g);
  if (required > limit) throw BudgetExceeded(required, limit);
  if (g.vertex_count() > 64) {
    throw Error(ErrorCode::OutOfRange, "subset oracle supports at most 64 vertices");
  }

  const VertexId n = g.vertex_count();
  OracleResult result;
  result.states_examined = 1;
  if (n == 0) {
    result.witness = std::vector<bool>{};
    return result;
  }
  // n <= 64 here, so every neighborhood fits one word.
  std::vector<std::uint64_t> adjacency(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.neighbors(v)) adjacency[v] |= std::uint64_t{1} << w;
  }

  // Vertex 0 stays in S; the other n-1 vertices walk a Gray code.
  std::uint64_t mask = 1;
  Count cut = static_cast<Count>(g.degree(0));
  Count best = cut;
  std::uint64_t best_mask = mask;
  for (std::uint64_t step = 1; step < required; ++step) {
    const int bit = std::countr_zero(step) + 1;
    const std::uint64_t v_bit = std::uint64_t{1} << bit;
    const auto inside = static_cast<Count>(std::popcount(adjacency[bit] & mask));
    const auto degree = static_cast<Count>(std::popcount(adjacency[bit]));
    if (mask & v_bit) {
      cut += 2 * inside - degree;  // leaving S
      mask &= ~v_bit;
    } else {
      cut += degree - 2 * inside;  // joining S
      mask |= v_bit;
    }
    ++result.states_examined;
    if (cut > best) {
      best = cut;
      best_mask = mask;
    }
  }

  result.size = best;
  std::vector<bool> in_s(n);
  for (VertexId v = 0; v < n; ++v) in_s[v] = (best_mask >> v) & 1U;
  result.witness = std::move(in_s);
  return result;
}

OracleResult brute_force_multiplicity(const ChainForm& form,
                                      std::uint64_t limit) {
  const std::uint64_t required = multiplicity_state_count(form);
  if (required > limit) throw BudgetExceeded(required, limit);

  const std::size_t rows = form.rows();
  // Odometer over (s_0..s_k, s'_0..s'_k); s_0 capped at m_0 / 2 since a cut
  // and its complement have the same size.
  std::vector<Count> bound(2 * rows);
  for (std::size_t i = 0; i < rows; ++i) {
    bound[i] = form.m()[i];
    bound[rows + i] = form.m_prime()[i];
  }
  bound[0] = form.m()[0] / 2;

  CutAssignment current{std::vector<Count>(rows, 0),
                        std::vector<Count>(rows, 0)};
  auto digit = [&](std::size_t d) -> Count& {
    return d < rows ? current.s[d] : current.s_prime[d - rows];
  };

  OracleResult result;
  result.size = -1;
  for (;;) {
    const Count size = cut_size(form, current);
    ++result.states_examined;
    if (size > result.size) {
      result.size = size;
      result.witness = current;
    }
    std::size_t d = 0;
    while (d < bound.size() && digit(d) == bound[d]) {
      digit(d) = 0;
      ++d;
    }
    if (d == bound.size()) break;
    ++digit(d);
  }
  return result;
}

}  // namespace cochain::oracle
