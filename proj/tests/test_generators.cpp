// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "cochain/error.hpp"
#include "cochain/generators.hpp"
#include "support.hpp"

using namespace cochain;

TEST_CASE("xoshiro256** stream is frozen") {
  Xoshiro256 one(1);
  CHECK(one.next() == 0xb3f2af6d0fc710c5ULL);
  CHECK(one.next() == 0x853b559647364ceaULL);
  CHECK(one.next() == 0x92f89756082a4514ULL);
  CHECK(one.next() == 0x642e1c7bc266a3a7ULL);
  Xoshiro256 zero(0);
  CHECK(zero.next() == 0x99ec5f36cb75f2b4ULL);
  CHECK(zero.next() == 0xbf6e1f784956452aULL);

  Xoshiro256 digits(42);
  std::vector<std::uint64_t> got;
  for (int i = 0; i < 12; ++i) got.push_back(digits.uniform(0, 9));
  CHECK(got == std::vector<std::uint64_t>{2, 2, 9, 3, 6, 4, 4, 7, 8, 5, 9, 3});
  Xoshiro256 small(7);
  got.clear();
  for (int i = 0; i < 12; ++i) got.push_back(small.uniform(3, 5));
  CHECK(got == std::vector<std::uint64_t>{3, 5, 3, 4, 5, 5, 4, 4, 4, 4, 5, 4});
  CHECK_THROWS_AS(small.uniform(2, 1), Error);
  CHECK(small.uniform(4, 4) == 4);
}

TEST_CASE("generator determinism and ranges") {
  GenSpec spec;
  spec.k_min = 2;
  spec.k_max = 7;
  spec.multiplicity_min = 2;
  spec.multiplicity_max = 4;
  spec.seed = 123;
  ChainFormGenerator a(spec);
  ChainFormGenerator b(spec);
  bool saw_minus = false;
  bool saw_full = false;
  for (int i = 0; i < 300; ++i) {
    const ChainForm f = a.next();
    CHECK(f == b.next());
    CHECK(f.k() >= 2);
    CHECK(f.k() <= 7);
    for (std::size_t r = 0; r < f.rows(); ++r) {
      CHECK(f.m()[r] >= 2);
      CHECK(f.m()[r] <= 4);
      if (r < f.k() || !f.is_minus()) {
        CHECK(f.m_prime()[r] >= 2);
        CHECK(f.m_prime()[r] <= 4);
      }
    }
    (f.is_minus() ? saw_minus : saw_full) = true;
  }
  CHECK(saw_minus);
  CHECK(saw_full);
  CHECK(random_chain_form(spec) == ChainFormGenerator(spec).next());

  spec.seed = 124;
  bool differs = false;
  ChainFormGenerator c(spec);
  ChainFormGenerator d(GenSpec{2, 7, 2, 4, 123, 1, 1});
  for (int i = 0; i < 20; ++i) differs = differs || !(c.next() == d.next());
  CHECK(differs);
}

TEST_CASE("unit multiplicities give twin-free skeletons") {
  GenSpec spec;
  spec.multiplicity_min = 1;
  spec.multiplicity_max = 1;
  spec.k_max = 9;
  ChainFormGenerator gen(spec);
  for (int i = 0; i < 50; ++i) {
    const ChainForm f = gen.next();
    for (std::size_t r = 0; r < f.rows(); ++r) {
      CHECK(f.m()[r] == 1);
      CHECK(f.m_prime()[r] == (r == f.k() && f.is_minus() ? 0 : 1));
    }
  }
  GenSpec only_full = spec;
  only_full.minus_weight = 0;
  ChainFormGenerator full(only_full);
  for (int i = 0; i < 50; ++i) CHECK_FALSE(full.next().is_minus());
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(GenSpec({3, 2}).validate(), Error);
  GenSpec bad;
  bad.multiplicity_min = 0;
  CHECK_THROWS_AS(ChainFormGenerator{bad}, Error);
  bad = {};
  bad.multiplicity_min = 4;
  bad.multiplicity_max = 3;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = {};
  bad.full_weight = 0;
  bad.minus_weight = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("nine-row instance") {
  const ChainForm f = counterexample_instance();
  CHECK(f.k() == 8);
  CHECK(f.vertex_count() == 36);
  CHECK(f.m()[3] == 10);
  CHECK(f.m_prime()[5] == 10);
}

TEST_CASE("shuffle_expand") {
  const ChainForm f({2, 1, 3}, {1, 2, 1});
  CHECK(shuffle_expand(f, kIdentitySeed) == expand(f));
  CHECK(shuffle_expand(f, 9) == shuffle_expand(f, 9));
  bool relabeled = false;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const SimpleGraph g = shuffle_expand(f, seed);
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == expand(f).edge_count());
    relabeled = relabeled || !(g == expand(f));
    // degree multiset is a relabeling invariant
    std::vector<std::size_t> a;
    std::vector<std::size_t> b;
    for (VertexId v = 0; v < 10; ++v) {
      a.push_back(g.degree(v));
      b.push_back(expand(f).degree(v));
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
  CHECK(relabeled);
}

TEST_CASE("scaling instances") {
  for (Count n : {2, 3, 8, 64, 65, 128, 257}) {
    const ChainForm f = scaling_instance(n, 3);
    CHECK(f.vertex_count() == n);
    CHECK_FALSE(f.is_minus());
  }
  CHECK(scaling_instance(64, 1) == scaling_instance(64, 1));
  const ChainForm f = scaling_instance(64, 1);
  CHECK(f.rows() == 28);  // (64 - 8) / 2
  CHECK_THROWS_AS(scaling_instance(1, 1), Error);
}

TEST_CASE("fitted_exponent") {
  const std::vector<double> sizes{64, 128, 256, 512};
  std::vector<double> quartic;
  std::vector<double> cubic;
  for (double s : sizes) {
    quartic.push_back(1e-9 * std::pow(s, 4));
    cubic.push_back(3.0 * std::pow(s, 3));
  }
  CHECK(fitted_exponent(sizes, quartic) == doctest::Approx(4.0));
  CHECK(fitted_exponent(sizes, cubic) == doctest::Approx(3.0));
  CHECK_THROWS_AS(fitted_exponent({1}, {1}), Error);
  CHECK_THROWS_AS(fitted_exponent({2, 2}, {1, 3}), Error);
  CHECK_THROWS_AS(fitted_exponent({1, 2}, {0, 3}), Error);
}
