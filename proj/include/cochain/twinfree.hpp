// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "cochain/chain_form.hpp"

namespace cochain::twinfree {

/// Full skeleton CC_k (rows 0..k on both sides) or the minus skeleton without
/// v'_k, in which v_k is universal.
enum class Variant { Full, Minus };

/// All-ones form of the skeleton. Minus requires k >= 1.
ChainForm build_cc(std::size_t k, Variant variant);

/// Row-reversing automorphism of the skeleton as a permutation of the vertex
/// ids used by `expand(build_cc(k, variant))`: perm[v] is the image of v.
/// The permutation is checked against the adjacency before it is returned.
std::vector<VertexId> automorphism(std::size_t k, Variant variant);

/// Where the two vertices of a row sit: first letter is v_i, second v'_i;
/// S for the cut side, B for its complement.
enum class RowType : unsigned char { SS, BB, SB, BS };

constexpr bool monochromatic(RowType t) noexcept {
  return t == RowType::SS || t == RowType::BB;
}

/// Cut of a twin-free skeleton described row by row. `rows` has k+1 entries
/// for Full and k for Minus; in the Minus case `apex_in_s` places v_k.
struct RowCut {
  std::vector<RowType> rows;
  Variant variant = Variant::Full;
  bool apex_in_s = false;

  std::size_t k() const noexcept {
    return variant == Variant::Full ? rows.size() - 1 : rows.size();
  }

  friend bool operator==(const RowCut&, const RowCut&) = default;
};

ChainForm skeleton(const RowCut& cut);
CutAssignment to_cut_assignment(const RowCut& cut);
/// Inverse of to_cut_assignment; `cut` must live on the all-ones form.
RowCut to_row_cut(const CutAssignment& cut, Variant variant);
Count cut_size(const RowCut& cut);

/// Exchanges the types of rows i and i+1.
RowCut swap_rows(const RowCut& cut, std::size_t i);

/// Change of the cut size caused by swap_rows(cut, i), read off the row types:
/// 0 when both rows are mono- or both bi-chromatic; otherwise +1 if the vertex
/// separated from the other three is v_i or v'_{i+1}, and -1 if not.
int swap_delta(const RowCut& cut, std::size_t i);

/// Moves the type of row j to row i and shifts rows i..j-1 down by one:
/// swaps at j-1, j-2, ..., i in that order.
RowCut rotate(const RowCut& cut, std::size_t i, std::size_t j);
/// Inverse of rotate: swaps at i, i+1, ..., j-1.
RowCut rev_rotate(const RowCut& cut, std::size_t i, std::size_t j);

/// Block lengths of the row pattern ([S], [B-S], [B], [S-B]), i.e. x rows of
/// type SS, then y of BS, z of BB and t of SB.
struct BlockPattern {
  Count x = 0;
  Count y = 0;
  Count z = 0;
  Count t = 0;

  Count length() const noexcept { return x + y + z + t; }
  friend bool operator==(const BlockPattern&, const BlockPattern&) = default;
};

RowCut pattern_to_row_cut(const BlockPattern& p, Variant variant,
                          bool apex_in_s = false);
CutAssignment pattern_to_cut(const BlockPattern& p, Variant variant,
                             bool apex_in_s = false);

/// Closed cut-size polynomial of a block pattern. Templated so that the
/// fractional optimum of the relaxation can be evaluated as well.
template <class T>
T pattern_objective(T x, T y, T z, T t, Variant variant, bool apex_in_s) {
  const T two = T(2);
  T f = (y + z) * (x + t) + (x + y) * (z + t) + y * (y - T(1)) / two +
        t * (t - T(1)) / two + x * y + y * z + x * z + z * t;
  if (variant == Variant::Full) return f;
  // v_k sees every other vertex; it gains the vertices on the opposite side.
  return apex_in_s ? f + two * z + y + t : f + two * x + y + t;
}

Count pattern_cut_size(const BlockPattern& p, Variant variant,
                       bool apex_in_s = false);

struct PatternOptimum {
  BlockPattern pattern;
  bool apex_in_s = false;
  Count value = 0;
};

/// Rounded optimum of the relaxed pattern problem. For Full the fractional
/// optimum (k/3 + 1/2, k/3, k/3 + 1/2, 0) is rounded along (1, -2, 1, 0)
/// (nearest integer, ties to even); for Minus the optimum with v_k outside S,
/// (k/3 + 1/2, k/3 - 1/3, k/3 - 1/6, 0), is shifted by a table indexed by
/// k mod 3. The value is always pattern_cut_size of the returned pattern.
PatternOptimum closed_form_optimum(std::size_t k, Variant variant);

/// Exhaustive maximum over integral patterns, O(k^3). Ties keep the first
/// pattern in the order: t ascending, then x, then y; apex outside S first.
PatternOptimum pattern_search(std::size_t k, Variant variant);

}  // namespace cochain::twinfree
