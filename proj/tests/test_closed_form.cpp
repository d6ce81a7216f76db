#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treecount/closed_form.hpp"
#include "treecount/oracle.hpp"

using namespace treecount;

TEST_CASE("forest_count branches") {
  CHECK(forest_count(0, 0) == 1);
  CHECK(forest_count(5, 2) == 50);
  CHECK(forest_count(2, 3) == 0);
  CHECK(forest_count(4, 4) == 1);   // exponent -1, rational path
  CHECK(forest_count(3, 0) == 0);
  CHECK_THROWS_AS(forest_count(-1, 0), std::invalid_argument);
}

TEST_CASE("refined_count examples") {
  CHECK(refined_count(0, 1, 0, 0, 0) == 1);
  CHECK(refined_count(2, 2, 1, 1, 1) == 1);
  for (long l = 0; l <= 4; ++l)
    for (long m = 0; m <= 4; ++m) CHECK(refined_count(4, 1, 1, l, m) == 0);
  CHECK_THROWS_AS(refined_count(2, 0, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("refined_count matches the oracle census entrywise") {
  for (int N = 1; N <= 6; ++N) {
    auto o = census(N);
    long n = N - 1;
    for (long i = 1; i <= N; ++i)
      for (long k = 0; k <= n; ++k)
        for (long l = 0; l <= n; ++l)
          for (long m = 0; m <= n; ++m) {
            RootSignature s{static_cast<int>(i), static_cast<int>(k),
                            static_cast<int>(l), static_cast<int>(m)};
            CHECK(refined_count(n, i, k, l, m) == o.count(s));
          }
  }
}

TEST_CASE("count_any_root examples") {
  // Cross-checked against the census: on {1,2,3} the only tree with one low
  // and one high root child is the star rooted at 2.
  CHECK(count_any_root(2, 1, 1, 1) == 1);
  {
    CensusTable o = census(3);
    BigInt from_census = 0;
    for (int i = 1; i <= 3; ++i)
      from_census += o.count(RootSignature{i, 1, 1, 1});
    CHECK(count_any_root(2, 1, 1, 1) == from_census);
  }
  for (long m = 0; m <= 2; ++m) CHECK(count_any_root(2, 0, 0, m) == 0);
  CHECK(count_any_root(1, 0, 1, 0) == 1);
}

TEST_CASE("count_root_and_children examples") {
  CHECK(count_root_and_children(2, 2, 1, 1) == 1);
  for (long l = 0; l <= 2; ++l) CHECK(count_root_and_children(2, 1, 1, l) == 0);
  CHECK(count_root_and_children(3, 4, 2, 0) == 6);
}

TEST_CASE("count_children examples") {
  CHECK(count_children(2, 1, 1) == 1);
  for (long n = 1; n <= 8; ++n) CHECK(count_children(n, 0, 0) == 0);
  CHECK(count_children(3, 1, 0) == 18);
  CHECK_THROWS_AS(count_children(2, 2, 1), std::invalid_argument);
}

TEST_CASE("tree_count_by_split examples") {
  for (long n = 1; n <= 8; ++n) CHECK(tree_count_by_split(n, 0) == 0);
  CHECK(tree_count_by_split(2, 2) == 1);
  CHECK(tree_count_by_split(3, 1) == 18);
  CHECK(tree_count_by_split(3, 1) == count_children(3, 1, 0) );
}

TEST_CASE("count_low_children examples and dual computation") {
  for (long n = 0; n <= 12; ++n) CHECK(count_low_children(n, n) == 1);
  CHECK(count_low_children(2, 1) == 4);
  CHECK(count_low_children(2, 0) == 4);
  CHECK(count_low_children(2, 0) + count_low_children(2, 1) + count_low_children(2, 2) == 9);
  CHECK_THROWS_AS(count_low_children(2, 5), std::invalid_argument);
}

TEST_CASE("count_with_root examples") {
  CHECK(count_with_root(2, 1, 0) == 3);
  CHECK(count_with_root(2, 3, 2) == 1);
  CHECK(count_with_root(2, 2, 1) == 2);
}

TEST_CASE("count_root_degree examples") {
  for (long n = 1; n <= 8; ++n) CHECK(count_root_degree(n, 0) == 0);
  CHECK(count_root_degree(2, 1) == 6);
  CHECK(count_root_degree(2, 2) == 3);
  for (long n = 1; n <= 10; ++n)
    for (long K = 0; K <= n; ++K)
      CHECK(count_root_degree(n, K) == (K + 1) * tree_count_by_split(n, K));
}

TEST_CASE("binomial split of (n+1)^n for n up to 200") {
  for (long n = 0; n <= 200; ++n) {
    std::vector<BigInt> row = count_low_children_row(n);
    BigInt sum = 0;
    for (const BigInt& v : row) sum += v;
    CHECK(sum == pow_big(n + 1, static_cast<unsigned long>(n)));
  }
  // The row computation agrees with the per-entry evaluation.
  for (long n : {0L, 1L, 5L, 17L, 40L}) {
    std::vector<BigInt> row = count_low_children_row(n);
    for (long k = 0; k <= n; ++k)
      CHECK(row[static_cast<size_t>(k)] == count_low_children(n, k));
  }
}

TEST_CASE("backward recurrence residual vanishes for n up to 60") {
  for (long n = 1; n <= 60; ++n)
    for (long k = 0; k < n; ++k) {
      BigInt step = as_integer(Rat(binomial(n + 1, k + 1)) * Rat(k) *
                               pow_int_rational(n, n - k - 1));
      CHECK(count_low_children(n, k) - count_low_children(n, k + 1) == step);
    }
}

TEST_CASE("split counts sum to the root-degree count") {
  for (long n = 1; n <= 30; ++n)
    for (long K = 1; K <= n; ++K) {
      BigInt sum = 0;
      for (long k = 0; k <= K; ++k) sum += count_children(n, k, K - k);
      CHECK(sum == count_root_degree(n, K));
    }
}

TEST_CASE("root-and-children counts sum to the fixed-root count") {
  for (long n = 1; n <= 30; ++n)
    for (long i = 1; i <= n + 1; ++i)
      for (long k = 0; k <= i - 1; ++k) {
        BigInt sum = 0;
        for (long l = 0; l <= n + 1 - i; ++l) sum += count_root_and_children(n, i, k, l);
        CHECK(sum == count_with_root(n, i, k));
      }
}

TEST_CASE("oracle groupings by root and by degree") {
  for (int N = 2; N <= 6; ++N) {
    long n = N - 1;
    auto o = census(N);
    std::map<std::pair<int, int>, BigInt> by_root_k;
    std::map<int, BigInt> by_degree;
    std::map<int, BigInt> by_k;
    for (const auto& [s, c] : o.entries) {
      by_root_k[{s.root, s.low_children}] += c;
      by_degree[s.low_children + s.high_children] += c;
      by_k[s.low_children] += c;
    }
    for (long i = 1; i <= N; ++i)
      for (long k = 0; k <= i - 1; ++k) {
        BigInt got = 0;
        auto it = by_root_k.find({static_cast<int>(i), static_cast<int>(k)});
        if (it != by_root_k.end()) got = it->second;
        CHECK(got == count_with_root(n, i, k));
      }
    for (long K = 1; K <= n; ++K)
      CHECK(by_degree[static_cast<int>(K)] == count_root_degree(n, K));
    for (long k = 0; k <= n; ++k)
      CHECK(by_k[static_cast<int>(k)] == count_low_children(n, k));
  }
}

TEST_CASE("formula census equals oracle census as tables") {
  for (int N = 1; N <= 6; ++N)
    CHECK(census_from_formula(N).entries == census(N).entries);
}
