// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "cochain/chain_form.hpp"

namespace cochain::oracle {

inline constexpr std::uint64_t kDefaultLimit = std::uint64_t{1} << 26;

struct OracleResult {
  Count size = 0;
  /// Vertex subset for graph inputs, cut function for chain forms.
  std::variant<std::vector<bool>, CutAssignment> witness;
  std::uint64_t states_examined = 0;
};

/// 2^(n-1), saturated at UINT64_MAX.
std::uint64_t subset_state_count(const SimpleGraph& g);
/// prod (m_i + 1) * prod (m'_i + 1), saturated at UINT64_MAX.
std::uint64_t multiplicity_state_count(const ChainForm& form);

/// Maximum cut by enumerating every subset that contains vertex 0, in Gray
/// code order. Throws BudgetExceeded when 2^(n-1) > limit.
OracleResult brute_force_subsets(const SimpleGraph& g,
                                 std::uint64_t limit = kDefaultLimit);

/// Maximum cut by enumerating every cut function with s_0 <= m_0 / 2.
/// Throws BudgetExceeded when the full product of (m+1) exceeds limit.
OracleResult brute_force_multiplicity(const ChainForm& form,
                                      std::uint64_t limit = kDefaultLimit);

}  // namespace cochain::oracle
