// SPDX-License-Identifier: Apache-2.0
#include "cochain/twinfree.hpp"

#include <string>

#include "cochain/error.hpp"

namespace cochain::twinfree {

namespace {

constexpr bool k_in_s(RowType t) noexcept {
  return t == RowType::SS || t == RowType::SB;
}
constexpr bool prime_in_s(RowType t) noexcept {
  return t == RowType::SS || t == RowType::BS;
}
constexpr RowType row_type(bool k_side, bool prime_side) noexcept {
  if (k_side) return prime_side ? RowType::SS : RowType::SB;
  return prime_side ? RowType::BS : RowType::BB;
}

void check_row_pair(const RowCut& cut, std::size_t i) {
  if (i + 1 >= cut.rows.size()) {
    throw Error(ErrorCode::OutOfRange,
                "row pair (" + std::to_string(i) + ", " + std::to_string(i + 1) +
                    ") outside " + std::to_string(cut.rows.size()) + " rows");
  }
}

void check_range(const RowCut& cut, std::size_t i, std::size_t j) {
  if (i > j || j >= cut.rows.size()) {
    throw Error(ErrorCode::OutOfRange,
                "row range [" + std::to_string(i) + ", " + std::to_string(j) +
                    "] invalid for " + std::to_string(cut.rows.size()) +
                    " rows");
  }
}

std::size_t pattern_k(const BlockPattern& p, Variant variant) {
  if (p.x < 0 || p.y < 0 || p.z < 0 || p.t < 0) {
    throw Error(ErrorCode::InvalidArgument, "negative block length");
  }
  const Count rows = p.length();
  const Count k = variant == Variant::Full ? rows - 1 : rows;
  if (k < (variant == Variant::Full ? 0 : 1)) {
    throw Error(ErrorCode::InvalidArgument, "pattern too short for variant");
  }
  return static_cast<std::size_t>(k);
}

}  // namespace

ChainForm build_cc(std::size_t k, Variant variant) {
  if (variant == Variant::Minus && k == 0) {
    throw Error(ErrorCode::InvalidArgument, "minus skeleton needs k >= 1");
  }
  std::vector<Count> m(k + 1, 1);
  std::vector<Count> m_prime(k + 1, 1);
  if (variant == Variant::Minus) m_prime[k] = 0;
  return ChainForm(std::move(m), std::move(m_prime));
}

std::vector<VertexId> automorphism(std::size_t k, Variant variant) {
  const ChainForm form = build_cc(k, variant);
  const Expansion skeleton = expand_with_map(form);
  const auto n = skeleton.graph.vertex_count();

  // All-ones forms give each coordinate exactly one vertex.
  auto id_of = [&](RowCoord c) -> VertexId {
    return c.side == Side::K
               ? static_cast<VertexId>(c.row)
               : static_cast<VertexId>(form.rows() + c.row);
  };
  std::vector<VertexId> perm(n);
  for (VertexId v = 0; v < n; ++v) {
    perm[v] = id_of(mirror(form, skeleton.map[v]));
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (skeleton.graph.adjacent(u, v) !=
          skeleton.graph.adjacent(perm[u], perm[v])) {
        throw Error(ErrorCode::InternalFault,
                    "row reversal is not an automorphism");
      }
    }
  }
  return perm;
}

ChainForm skeleton(const RowCut& cut) {
  return build_cc(cut.k(), cut.variant);
}

CutAssignment to_cut_assignment(const RowCut& cut) {
  const std::size_t rows = cut.k() + 1;
  CutAssignment out{std::vector<Count>(rows, 0), std::vector<Count>(rows, 0)};
  for (std::size_t i = 0; i < cut.rows.size(); ++i) {
    out.s[i] = k_in_s(cut.rows[i]) ? 1 : 0;
    out.s_prime[i] = prime_in_s(cut.rows[i]) ? 1 : 0;
  }
  if (cut.variant == Variant::Minus) out.s[cut.k()] = cut.apex_in_s ? 1 : 0;
  return out;
}

RowCut to_row_cut(const CutAssignment& cut, Variant variant) {
  RowCut out;
  out.variant = variant;
  const std::size_t full_rows =
      variant == Variant::Full ? cut.s.size() : cut.s.size() - 1;
  for (std::size_t i = 0; i < full_rows; ++i) {
    out.rows.push_back(row_type(cut.s[i] != 0, cut.s_prime[i] != 0));
  }
  if (variant == Variant::Minus) out.apex_in_s = cut.s.back() != 0;
  return out;
}

Count cut_size(const RowCut& cut) {
  return cochain::cut_size(skeleton(cut), to_cut_assignment(cut));
}

RowCut swap_rows(const RowCut& cut, std::size_t i) {
  check_row_pair(cut, i);
  RowCut out = cut;
  std::swap(out.rows[i], out.rows[i + 1]);
  return out;
}

int swap_delta(const RowCut& cut, std::size_t i) {
  check_row_pair(cut, i);
  const RowType upper = cut.rows[i];
  const RowType lower = cut.rows[i + 1];
  if (monochromatic(upper) == monochromatic(lower)) return 0;

  // Exactly one of the four vertices disagrees with the other three.
  const bool sides[4] = {k_in_s(upper), k_in_s(lower), prime_in_s(upper),
                         prime_in_s(lower)};  // v_i, v_{i+1}, v'_i, v'_{i+1}
  int in_s = 0;
  for (bool b : sides) in_s += b ? 1 : 0;
  const bool odd_one_in_s = in_s == 1;
  int separated = -1;
  for (int idx = 0; idx < 4; ++idx) {
    if (sides[idx] == odd_one_in_s) separated = idx;
  }
  return separated == 0 || separated == 3 ? +1 : -1;
}

RowCut rotate(const RowCut& cut, std::size_t i, std::size_t j) {
  check_range(cut, i, j);
  RowCut out = cut;
  for (std::size_t r = j; r > i; --r) out = swap_rows(out, r - 1);
  return out;
}

RowCut rev_rotate(const RowCut& cut, std::size_t i, std::size_t j) {
  check_range(cut, i, j);
  RowCut out = cut;
  for (std::size_t r = i; r < j; ++r) out = swap_rows(out, r);
  return out;
}

RowCut pattern_to_row_cut(const BlockPattern& p, Variant variant,
                          bool apex_in_s) {
  pattern_k(p, variant);
  RowCut out;
  out.variant = variant;
  out.apex_in_s = variant == Variant::Minus && apex_in_s;
  out.rows.insert(out.rows.end(), static_cast<std::size_t>(p.x), RowType::SS);
  out.rows.insert(out.rows.end(), static_cast<std::size_t>(p.y), RowType::BS);
  out.rows.insert(out.rows.end(), static_cast<std::size_t>(p.z), RowType::BB);
  out.rows.insert(out.rows.end(), static_cast<std::size_t>(p.t), RowType::SB);
  return out;
}

CutAssignment pattern_to_cut(const BlockPattern& p, Variant variant,
                             bool apex_in_s) {
  return to_cut_assignment(pattern_to_row_cut(p, variant, apex_in_s));
}

Count pattern_cut_size(const BlockPattern& p, Variant variant,
                       bool apex_in_s) {
  pattern_k(p, variant);
  return pattern_objective<Count>(p.x, p.y, p.z, p.t, variant, apex_in_s);
}

namespace {

// Nearest integer to num / den (den > 0, num >= 0), ties to even.
Count round_half_even(Count num, Count den) {
  Count q = num / den;
  const Count r2 = 2 * (num % den);
  if (r2 > den || (r2 == den && q % 2 != 0)) ++q;
  return q;
}

}  // namespace

PatternOptimum closed_form_optimum(std::size_t k, Variant variant) {
  if (k == 0) {
    throw Error(ErrorCode::InvalidArgument, "closed form needs k >= 1");
  }
  const auto kk = static_cast<Count>(k);
  PatternOptimum out;
  if (variant == Variant::Full) {
    // x* = z* = k/3 + 1/2 = (2k + 3) / 6, y = k + 1 - 2x.
    const Count x = round_half_even(2 * kk + 3, 6);
    out.pattern = {x, kk + 1 - 2 * x, x, 0};
  } else {
    // Work in sixths: x* = (2k + 3)/6, z* = (2k - 1)/6 with v_k outside S.
    static constexpr Count kShiftX[3] = {-3, 1, -1};
    static constexpr Count kShiftZ[3] = {1, -1, 3};
    const Count x6 = 2 * kk + 3 + kShiftX[kk % 3];
    const Count z6 = 2 * kk - 1 + kShiftZ[kk % 3];
    if (x6 % 6 != 0 || z6 % 6 != 0) {
      throw Error(ErrorCode::InternalFault, "rounding table left a fraction");
    }
    const Count x = x6 / 6;
    const Count z = z6 / 6;
    out.pattern = {x, kk - x - z, z, 0};
    out.apex_in_s = false;
  }
  out.value = pattern_cut_size(out.pattern, variant, out.apex_in_s);
  return out;
}

PatternOptimum pattern_search(std::size_t k, Variant variant) {
  if (k == 0) {
    throw Error(ErrorCode::InvalidArgument, "pattern search needs k >= 1");
  }
  const auto rows = static_cast<Count>(variant == Variant::Full ? k + 1 : k);
  PatternOptimum best;
  bool found = false;
  for (Count t = 0; t <= rows; ++t) {
    for (Count x = 0; x + t <= rows; ++x) {
      for (Count y = 0; x + y + t <= rows; ++y) {
        const BlockPattern p{x, y, rows - x - y - t, t};
        for (bool apex : {false, true}) {
          if (apex && variant == Variant::Full) continue;
          const Count value = pattern_objective<Count>(p.x, p.y, p.z, p.t,
                                                       variant, apex);
          if (!found || value > best.value) {
            best = {p, apex, value};
            found = true;
          }
        }
      }
    }
  }
  return best;
}

}  // namespace cochain::twinfree
