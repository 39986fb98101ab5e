// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "cochain/chain_form.hpp"

namespace cochain {

/// xoshiro256** (Blackman and Vigna), state filled from the seed by
/// splitmix64. Integer ranges use rejection sampling so every platform
/// produces the same stream.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform integer in [lo, hi]. Requires lo <= hi.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

 private:
  std::array<std::uint64_t, 4> state_;
};

struct GenSpec {
  std::size_t k_min = 0;
  std::size_t k_max = 5;
  Count multiplicity_min = 1;
  Count multiplicity_max = 3;
  std::uint64_t seed = 1;
  /// Relative odds of drawing the full skeleton vs the one without v'_k.
  std::uint32_t full_weight = 1;
  std::uint32_t minus_weight = 1;

  /// Throws Error(InvalidArgument) for empty ranges, multiplicities below 1
  /// or all-zero weights.
  void validate() const;
};

/// Stream of random chain forms; equal specs give equal streams.
class ChainFormGenerator {
 public:
  explicit ChainFormGenerator(const GenSpec& spec);

  ChainForm next();

 private:
  GenSpec spec_;
  Xoshiro256 rng_;
};

/// First form of the stream for `spec`.
ChainForm random_chain_form(const GenSpec& spec);

/// Nine rows, m = (1,1,1,10,1,1,1,1,1), m' = (1,1,1,1,1,10,1,1,1). Its
/// optimum (223) is not a balanced three-block cut.
ChainForm counterexample_instance();

/// Seed value for which shuffle_expand applies no relabeling.
inline constexpr std::uint64_t kIdentitySeed = 0;

/// expand() followed by a seeded Fisher-Yates relabeling of the vertices.
SimpleGraph shuffle_expand(const ChainForm& form, std::uint64_t seed);

/// Mostly twin-free instance with exactly `n_vertices` vertices: an all-ones
/// full skeleton on about 7/8 of the vertices, the rest spread as extra twins.
/// Requires n_vertices >= 2.
ChainForm scaling_instance(Count n_vertices, std::uint64_t seed);

/// Least-squares slope of log(seconds) against log(size).
double fitted_exponent(const std::vector<double>& sizes,
                       const std::vector<double>& seconds);

}  // namespace cochain
