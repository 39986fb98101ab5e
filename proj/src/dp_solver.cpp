// SPDX-License-Identifier: Apache-2.0
#include "cochain/dp_solver.hpp"

#include <algorithm>

#include "cochain/error.hpp"

namespace cochain {

std::optional<Count> DpLayer::value(Count x, Count x_prime) const {
  if (!contains(x, x_prime)) return std::nullopt;
  const Count v = values[index(x, x_prime)];
  if (v == kInfeasible) return std::nullopt;
  return v;
}

DpLayer base_layer() {
  DpLayer layer;
  layer.values = {0};
  return layer;
}

std::optional<StepChoice> calculate_opt(Count m_i, Count m_prime_i, Count x,
                                        Count x_prime,
                                        const PrefixSums& before,
                                        const DpLayer& previous) {
  if (previous.max_x != before.m || previous.max_x_prime != before.m_prime) {
    throw Error(ErrorCode::InvalidArgument,
                "previous layer does not match the prefix sums");
  }
  const Count w = before.m + before.m_prime - 2 * (x + x_prime);
  const Count w_prime = before.m_prime - m_i - 2 * x_prime;
  const Count lo = std::max<Count>(0, x - before.m);
  const Count hi = std::min(m_i, x);
  const Count lo_prime = std::max<Count>(0, x_prime - before.m_prime);
  const Count hi_prime = std::min(m_prime_i, x_prime);

  std::optional<StepChoice> best;
  for (Count s = lo; s <= hi; ++s) {
    for (Count sp = lo_prime; sp <= hi_prime; ++sp) {
      const Count prev = previous.values[previous.index(x - s, x_prime - sp)];
      if (prev == kInfeasible) continue;
      const Count val = prev + w * s + w_prime * sp + (s + sp) * (s + sp);
      if (!best || val > best->value) best = StepChoice{val, s, sp};
    }
  }
  if (best) best->value += m_i * (x + x_prime) + m_prime_i * x_prime;
  return best;
}

namespace {

DpLayer next_layer(const DpLayer& previous, Count m_i, Count m_prime_i,
                   const PrefixSums& before, bool keep_choice) {
  DpLayer layer;
  layer.max_x = before.m + m_i;
  layer.max_x_prime = before.m_prime + m_prime_i;
  const auto size =
      static_cast<std::size_t>((layer.max_x + 1) * (layer.max_x_prime + 1));
  layer.values.assign(size, kInfeasible);
  if (keep_choice) {
    layer.choice_s.assign(size, 0);
    layer.choice_s_prime.assign(size, 0);
  }
  for (Count x = 0; x <= layer.max_x; ++x) {
    for (Count xp = 0; xp <= layer.max_x_prime; ++xp) {
      const auto step = calculate_opt(m_i, m_prime_i, x, xp, before, previous);
      if (!step) continue;
      const std::size_t at = layer.index(x, xp);
      layer.values[at] = step->value;
      if (keep_choice) {
        layer.choice_s[at] = step->s;
        layer.choice_s_prime[at] = step->s_prime;
      }
    }
  }
  return layer;
}

struct OuterMax {
  Count value = kInfeasible;
  Count x = 0;
  Count x_prime = 0;
};

OuterMax outer_max(const DpLayer& last) {
  OuterMax best;
  for (Count x = 0; x <= last.max_x; ++x) {
    for (Count xp = 0; xp <= last.max_x_prime; ++xp) {
      const Count v = last.values[last.index(x, xp)];
      if (v > best.value) best = {v, x, xp};
    }
  }
  if (best.value == kInfeasible) {
    throw Error(ErrorCode::InternalFault, "no feasible final state");
  }
  return best;
}

}  // namespace

std::vector<DpLayer> build_table(const ChainForm& form) {
  std::vector<DpLayer> layers;
  layers.reserve(form.rows());
  DpLayer base = base_layer();
  PrefixSums before;
  for (std::size_t i = 0; i < form.rows(); ++i) {
    const DpLayer& previous = i == 0 ? base : layers.back();
    layers.push_back(next_layer(previous, form.m()[i], form.m_prime()[i],
                                before, true));
    before.m += form.m()[i];
    before.m_prime += form.m_prime()[i];
  }
  return layers;
}

Solution solve(const ChainForm& form, const SolveOptions& options) {
  Solution solution;
  if (!options.reconstruct) {
    DpLayer layer = base_layer();
    PrefixSums before;
    for (std::size_t i = 0; i < form.rows(); ++i) {
      layer = next_layer(layer, form.m()[i], form.m_prime()[i], before, false);
      before.m += form.m()[i];
      before.m_prime += form.m_prime()[i];
    }
    const OuterMax best = outer_max(layer);
    solution.size = best.value;
    solution.x = best.x;
    solution.x_prime = best.x_prime;
    return solution;
  }

  const std::vector<DpLayer> layers = build_table(form);
  const OuterMax best = outer_max(layers.back());
  solution.size = best.value;
  solution.x = best.x;
  solution.x_prime = best.x_prime;

  CutAssignment cut{std::vector<Count>(form.rows(), 0),
                    std::vector<Count>(form.rows(), 0)};
  Count x = best.x;
  Count xp = best.x_prime;
  for (std::size_t i = form.rows(); i-- > 0;) {
    const DpLayer& layer = layers[i];
    const std::size_t at = layer.index(x, xp);
    cut.s[i] = layer.choice_s[at];
    cut.s_prime[i] = layer.choice_s_prime[at];
    x -= cut.s[i];
    xp -= cut.s_prime[i];
  }
  if (x != 0 || xp != 0) {
    throw Error(ErrorCode::InternalFault, "backtracking did not reach (0, 0)");
  }
  solution.cut = std::move(cut);
  return solution;
}

}  // namespace cochain
