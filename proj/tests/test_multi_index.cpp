// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "aprank/binomial.hpp"
#include "aprank/common.hpp"
#include "aprank/multi_index.hpp"

using namespace aprank;

TEST_CASE("binom_u64 against Pascal's triangle") {
  std::vector<std::vector<std::uint64_t>> pascal(40);
  for (int i = 0; i < 40; ++i) {
    pascal[i].resize(i + 1, 1);
    for (int j = 1; j < i; ++j) pascal[i][j] = pascal[i - 1][j - 1] + pascal[i - 1][j];
  }
  for (int i = 0; i < 40; ++i)
    for (int j = 0; j <= i; ++j) CHECK(binom_u64(i, j) == pascal[i][j]);
  CHECK(binom_u64(5, -1) == 0);
  CHECK(binom_u64(5, 6) == 0);
}

TEST_CASE("binom_u64 saturates instead of overflowing") {
  CHECK(binom_u64(64, 32) == 1832624140942590534ull);
  CHECK(binom_u64(200, 100) == kBinomSaturated);
  CHECK(binom_u64(66, 33) == 7219428434016265740ull);
}

TEST_CASE("log_binom matches exact values") {
  for (int m : {5, 20, 61}) {
    for (int k : {0, 1, 2, m / 2}) {
      double exact = static_cast<double>(binom_u64(m, k));
      CHECK(std::exp(log_binom(m, k)) == doctest::Approx(exact).epsilon(1e-12));
    }
  }
}

TEST_CASE("multinomial examples") {
  std::vector<std::int32_t> a{1, 1};
  CHECK(multinomial_coeff(2, a) == 2.0);
  std::vector<std::int32_t> b{2, 1, 1};
  CHECK(multinomial_coeff(4, b) == 12.0);
  std::vector<std::int32_t> c{3, 0, 0};
  CHECK(multinomial_coeff(3, c) == 1.0);
}

TEST_CASE("basis dims match the experiment table") {
  CHECK(basis_dim(4, 4) == 35);
  CHECK(basis_dim(4, 24) == 2925);
  CHECK(basis_dim(6, 18) == 33649);
  CHECK(basis_dim(8, 8) == 6435);
}

TEST_CASE("descending-lex enumeration at n=2,3") {
  auto b = MonomialBasis::get(2, 3);
  REQUIRE(b->size() == 4);
  std::vector<std::vector<std::int32_t>> want{{3, 0}, {2, 1}, {1, 2}, {0, 3}};
  for (std::int64_t i = 0; i < 4; ++i) {
    auto a = b->exponents(i);
    CHECK(std::equal(a.begin(), a.end(), want[i].begin()));
  }
  auto b3 = MonomialBasis::get(3, 2);
  std::vector<std::vector<std::int32_t>> want3{{2, 0, 0}, {1, 1, 0}, {1, 0, 1},
                                               {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  for (std::int64_t i = 0; i < b3->size(); ++i) {
    auto a = b3->exponents(i);
    CHECK(std::equal(a.begin(), a.end(), want3[i].begin()));
  }
}

TEST_CASE("index_of inverts enumeration") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + static_cast<int>(gen() % 6);
    int d = static_cast<int>(gen() % 9);
    auto b = MonomialBasis::get(n, d);
    for (std::int64_t i = 0; i < b->size(); ++i) {
      CHECK(b->index_of(b->exponents(i)) == i);
    }
  }
}

TEST_CASE("index_of rejects malformed input") {
  auto b = MonomialBasis::get(3, 4);
  std::vector<std::int32_t> short_alpha{4, 0};
  CHECK_THROWS_AS(b->index_of(short_alpha), ShapeMismatch);
  std::vector<std::int32_t> wrong_sum{1, 1, 1};
  CHECK_THROWS_AS(b->index_of(wrong_sum), ShapeMismatch);
}

TEST_CASE("basis size cap is enforced") {
  CHECK_THROWS_AS(MonomialBasis::get(12, 40), BudgetExceeded);
}

TEST_CASE("log_dfact_odd small values") {
  CHECK(log_dfact_odd(0) == 0.0);
  CHECK(std::exp(log_dfact_odd(1)) == doctest::Approx(1.0));
  CHECK(std::exp(log_dfact_odd(2)) == doctest::Approx(3.0));
  CHECK(std::exp(log_dfact_odd(3)) == doctest::Approx(15.0));
  CHECK(std::exp(log_dfact_odd(5)) == doctest::Approx(945.0));
}
