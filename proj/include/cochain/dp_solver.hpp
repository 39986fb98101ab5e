// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "cochain/chain_form.hpp"

namespace cochain {

/// Marker for states of a layer that no cut reaches.
inline constexpr Count kInfeasible = std::numeric_limits<Count>::min();

/// One layer of the table: best cut size of the prefix graph over rows 0..i
/// for every pair (x, x') of S-counts on each side.
struct DpLayer {
  Count max_x = 0;
  Count max_x_prime = 0;
  std::vector<Count> values;              // kInfeasible when unreachable
  std::vector<Count> choice_s;            // argmax s_i, empty in rolling mode
  std::vector<Count> choice_s_prime;      // argmax s'_i, empty in rolling mode

  std::size_t index(Count x, Count x_prime) const noexcept {
    return static_cast<std::size_t>(x * (max_x_prime + 1) + x_prime);
  }
  bool contains(Count x, Count x_prime) const noexcept {
    return x >= 0 && x_prime >= 0 && x <= max_x && x_prime <= max_x_prime;
  }
  /// nullopt outside the domain or for infeasible states.
  std::optional<Count> value(Count x, Count x_prime) const;
};

/// The empty-prefix layer: only (0, 0) is defined, with value 0.
DpLayer base_layer();

struct StepChoice {
  Count value = 0;
  Count s = 0;
  Count s_prime = 0;
};

/// Prefix sums of rows strictly before i.
struct PrefixSums {
  Count m = 0;        // sum_{j<i} m_j
  Count m_prime = 0;  // sum_{j<i} m'_j
};

/// Best extension of `previous` (layer i-1) to state (x, x') of layer i.
/// Scans s_i then s'_i in increasing order and keeps the first maximum, so
/// the argmax is the lexicographically smallest pair. nullopt when every
/// predecessor in the window is infeasible.
std::optional<StepChoice> calculate_opt(Count m_i, Count m_prime_i,
                                        Count x, Count x_prime,
                                        const PrefixSums& before,
                                        const DpLayer& previous);

/// Full table, layers 0..k.
std::vector<DpLayer> build_table(const ChainForm& form);

struct SolveOptions {
  /// Keep every layer and backtrack a witness cut. When false only two layers
  /// are alive at a time and Solution::cut is empty.
  bool reconstruct = true;
};

struct Solution {
  Count size = 0;
  std::optional<CutAssignment> cut;
  Count x = 0;        // sum of s at the optimum
  Count x_prime = 0;  // sum of s'
};

/// Exact maximum cut of the expanded graph. Runs in O(N^4) for N vertices.
Solution solve(const ChainForm& form, const SolveOptions& options = {});

}  // namespace cochain
