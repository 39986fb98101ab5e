// SPDX-License-Identifier: Apache-2.0
#include "cochain/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cochain/error.hpp"

namespace cochain {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  for (auto& word : state_) word = splitmix64(seed);
}

std::uint64_t Xoshiro256::next() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

std::uint64_t Xoshiro256::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty uniform range");
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return next();
  const std::uint64_t range = span + 1;
  // Largest multiple of `range` that fits; draws above it are rejected.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw = next();
  while (draw >= limit) draw = next();
  return lo + draw % range;
}

void GenSpec::validate() const {
  if (k_min > k_max) throw Error(ErrorCode::InvalidArgument, "k_min > k_max");
  if (multiplicity_min < 1 || multiplicity_min > multiplicity_max) {
    throw Error(ErrorCode::InvalidArgument,
                "multiplicity range must satisfy 1 <= min <= max");
  }
  if (full_weight == 0 && minus_weight == 0) {
    throw Error(ErrorCode::InvalidArgument, "both variant weights are zero");
  }
}

ChainFormGenerator::ChainFormGenerator(const GenSpec& spec)
    : spec_(spec), rng_(spec.seed) {
  spec_.validate();
}

ChainForm ChainFormGenerator::next() {
  const auto k = static_cast<std::size_t>(rng_.uniform(spec_.k_min, spec_.k_max));
  const std::uint64_t weight_total =
      std::uint64_t{spec_.full_weight} + spec_.minus_weight;
  const bool minus = rng_.uniform(0, weight_total - 1) < spec_.minus_weight;

  auto draw = [&] {
    return static_cast<Count>(
        rng_.uniform(static_cast<std::uint64_t>(spec_.multiplicity_min),
                     static_cast<std::uint64_t>(spec_.multiplicity_max)));
  };
  std::vector<Count> m(k + 1);
  std::vector<Count> m_prime(k + 1);
  for (std::size_t i = 0; i <= k; ++i) m[i] = draw();
  for (std::size_t i = 0; i <= k; ++i) m_prime[i] = draw();
  if (minus) m_prime[k] = 0;
  return ChainForm(std::move(m), std::move(m_prime));
}

ChainForm random_chain_form(const GenSpec& spec) {
  return ChainFormGenerator(spec).next();
}

ChainForm counterexample_instance() {
  return ChainForm({1, 1, 1, 10, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 10, 1, 1, 1});
}

SimpleGraph shuffle_expand(const ChainForm& form, std::uint64_t seed) {
  SimpleGraph plain = expand(form);
  if (seed == kIdentitySeed) return plain;

  const VertexId n = plain.vertex_count();
  std::vector<VertexId> label(n);
  std::iota(label.begin(), label.end(), VertexId{0});
  Xoshiro256 rng(seed);
  for (VertexId i = n; i > 1; --i) {
    const auto j = static_cast<VertexId>(rng.uniform(0, i - 1));
    std::swap(label[i - 1], label[j]);
  }
  std::vector<Edge> edges = plain.edges();
  for (Edge& e : edges) e = {label[e.u], label[e.v]};
  return SimpleGraph(n, edges);
}

ChainForm scaling_instance(Count n_vertices, std::uint64_t seed) {
  if (n_vertices < 2) {
    throw Error(ErrorCode::InvalidArgument, "scaling instance needs >= 2 vertices");
  }
  const Count extra = n_vertices / 8;
  const Count rows = std::max<Count>(1, (n_vertices - extra) / 2);
  std::vector<Count> m(static_cast<std::size_t>(rows), 1);
  std::vector<Count> m_prime(static_cast<std::size_t>(rows), 1);
  Xoshiro256 rng(seed);
  for (Count left = n_vertices - 2 * rows; left > 0; --left) {
    const auto slot = rng.uniform(0, static_cast<std::uint64_t>(2 * rows - 1));
    auto& target = slot < static_cast<std::uint64_t>(rows) ? m : m_prime;
    ++target[slot % static_cast<std::uint64_t>(rows)];
  }
  return ChainForm(std::move(m), std::move(m_prime));
}

double fitted_exponent(const std::vector<double>& sizes,
                       const std::vector<double>& seconds) {
  if (sizes.size() != seconds.size() || sizes.size() < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "exponent fit needs at least two (size, time) pairs");
  }
  const auto count = static_cast<double>(sizes.size());
  double mean_x = 0;
  double mean_y = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] <= 0 || seconds[i] <= 0) {
      throw Error(ErrorCode::InvalidArgument, "exponent fit needs positive data");
    }
    mean_x += std::log(sizes[i]);
    mean_y += std::log(seconds[i]);
  }
  mean_x /= count;
  mean_y /= count;
  double sxy = 0;
  double sxx = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double dx = std::log(sizes[i]) - mean_x;
    sxy += dx * (std::log(seconds[i]) - mean_y);
    sxx += dx * dx;
  }
  if (sxx == 0) throw Error(ErrorCode::InvalidArgument, "sizes are all equal");
  return sxy / sxx;
}

}  // namespace cochain
