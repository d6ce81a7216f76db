#pragma once

#include <stdexcept>
#include <vector>

#include "treecount/census.hpp"
#include "treecount/numeric.hpp"

namespace treecount {

// Number of forests on m labeled vertices with k fixed roots:
// 1 if m = k = 0; k * m^(m-k-1) if m >= 1 and 0 <= k <= m; 0 if k > m.
// The k = m case has exponent -1 and is evaluated rationally.
inline BigInt forest_count(long m, long k) {
  if (m < 0 || k < 0) throw std::invalid_argument("forest_count: m, k must be >= 0");
  if (k > m) return 0;
  if (m == 0) return 1;  // k == 0 here
  return as_integer(Rat(k) * pow_int_rational(m, m - k - 1));
}

// Trees on {1..n+1} with root i, k children below i, l children above i, and
// m vertices in the forest hanging from the lower children. Total with value
// zero outside the feasible region.
inline BigInt refined_count(long n, long i, long k, long l, long m) {
  if (n < 0) throw std::invalid_argument("refined_count: n must be >= 0");
  if (i < 1 || i > n + 1) throw std::invalid_argument("refined_count: i out of range");
  if (k < 0 || l < 0 || m < 0) return 0;
  if (m > n) return 0;
  BigInt b1 = binomial(i - 1, k);
  if (b1 == 0) return 0;
  BigInt b2 = binomial(n + 1 - i, l);
  if (b2 == 0) return 0;
  // b1, b2 nonzero forces k + l <= n, so the remaining upper index n-k-l >= 0
  return b1 * b2 * binomial(n - k - l, m - k) * forest_count(m, k) *
         forest_count(n - m, l);
}

// Marginal over the root label i: trees with k lower children, l higher
// children and lower-forest size m, any root.
inline BigInt count_any_root(long n, long k, long l, long m) {
  if (n < 1) throw std::invalid_argument("count_any_root: n must be >= 1");
  if (k < 0 || l < 0 || m < 0 || m > n || k + l > n) return 0;
  return binomial(n + 1, k + l + 1) * binomial(n - k - l, m - k) *
         forest_count(m, k) * forest_count(n - m, l);
}

// Marginal over the split size m: trees with root i, k lower and l higher
// children. The k + l = n case has exponent -1 and is evaluated rationally.
inline BigInt count_root_and_children(long n, long i, long k, long l) {
  if (n < 1) throw std::invalid_argument("count_root_and_children: n must be >= 1");
  if (i < 1 || i > n + 1)
    throw std::invalid_argument("count_root_and_children: i out of range");
  if (k < 0 || l < 0) return 0;
  BigInt b = binomial(i - 1, k) * binomial(n + 1 - i, l);
  if (b == 0) return 0;  // in particular whenever k + l > n
  return as_integer(Rat(b) * Rat(k + l) * pow_int_rational(n, n - k - l - 1));
}

// Trees whose root has a total of K children, split as k below and l above;
// depends on k, l only through K = k + l.
inline BigInt tree_count_by_split(long n, long K) {
  if (n < 1) throw std::invalid_argument("tree_count_by_split: n must be >= 1");
  if (K < 0 || K > n) throw std::invalid_argument("tree_count_by_split: K out of range");
  return as_integer(Rat(binomial(n + 1, K + 1)) * Rat(K) *
                    pow_int_rational(n, n - K - 1));
}

// Trees with exactly k lower and l higher root children.
inline BigInt count_children(long n, long k, long l) {
  if (n < 1) throw std::invalid_argument("count_children: n must be >= 1");
  if (k < 0 || l < 0 || k + l > n)
    throw std::invalid_argument("count_children: need k, l >= 0 and k + l <= n");
  return tree_count_by_split(n, k + l);
}

// Trees on {1..n+1} with exactly k lower-numbered root children:
// C(n,k) * n^(n-k). Always computed a second way, as the tail sum of
// tree_count_by_split; a disagreement means an implementation bug.
inline BigInt count_low_children(long n, long k) {
  if (n < 0) throw std::invalid_argument("count_low_children: n must be >= 0");
  if (k < 0 || k > n) throw std::invalid_argument("count_low_children: k out of range");
  if (n == 0) return 1;
  BigInt closed = binomial(n, k) * pow_big(n, static_cast<unsigned long>(n - k));
  BigInt summed = 0;
  for (long K = k; K <= n; ++K) summed += tree_count_by_split(n, K);
  if (closed != summed)
    throw std::logic_error("count_low_children: closed form disagrees with tail sum");
  return closed;
}

// Whole row k = 0..n of count_low_children in O(n) big-integer steps, with
// the closed form and the tail-sum route both built incrementally and
// compared entrywise.
inline std::vector<BigInt> count_low_children_row(long n) {
  if (n < 0) throw std::invalid_argument("count_low_children_row: n must be >= 0");
  if (n == 0) return {BigInt(1)};
  std::vector<BigInt> split(static_cast<size_t>(n) + 1);
  BigInt binom = n + 1;             // C(n+1, K+1), starting at K = 0
  BigInt npow = pow_big(n, static_cast<unsigned long>(n - 1));  // n^(n-K-1)
  for (long K = 0; K <= n; ++K) {
    split[static_cast<size_t>(K)] = K == n ? BigInt(1) : binom * K * npow;
    if (K < n) {
      binom *= n - K;
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                      static_cast<unsigned long>(K + 2));
      if (K < n - 1)
        mpz_divexact_ui(npow.get_mpz_t(), npow.get_mpz_t(),
                        static_cast<unsigned long>(n));
    }
  }
  std::vector<BigInt> summed(static_cast<size_t>(n) + 1);
  BigInt acc = 0;
  for (long k = n; k >= 0; --k) {
    acc += split[static_cast<size_t>(k)];
    summed[static_cast<size_t>(k)] = acc;
  }
  std::vector<BigInt> closed(static_cast<size_t>(n) + 1);
  closed[0] = pow_big(n, static_cast<unsigned long>(n));
  for (long k = 0; k < n; ++k) {
    BigInt next = closed[static_cast<size_t>(k)] * (n - k);
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(),
                    static_cast<unsigned long>(k + 1));
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(),
                    static_cast<unsigned long>(n));
    closed[static_cast<size_t>(k) + 1] = next;
  }
  if (closed != summed)
    throw std::logic_error("count_low_children_row: routes disagree");
  return closed;
}

// Trees with root i and exactly k lower root children:
// C(i-1,k) * [(k+1)(n+1) - i] * n^(i-k-2) * (n+1)^(n-i), rationally.
inline BigInt count_with_root(long n, long i, long k) {
  if (n < 1) throw std::invalid_argument("count_with_root: n must be >= 1");
  if (i < 1 || i > n + 1) throw std::invalid_argument("count_with_root: i out of range");
  if (k < 0 || k > i - 1) throw std::invalid_argument("count_with_root: k out of range");
  BigInt b = binomial(i - 1, k);
  if (b == 0) return 0;
  Rat v = Rat(b) * Rat(BigInt(k + 1) * (n + 1) - i) *
          pow_int_rational(n, i - k - 2) * pow_int_rational(n + 1, n - i);
  return as_integer(v);
}

// Trees whose root has exactly K children: (n+1) * C(n,K) * K * n^(n-K-1).
inline BigInt count_root_degree(long n, long K) {
  if (n < 1) throw std::invalid_argument("count_root_degree: n must be >= 1");
  if (K < 0 || K > n) throw std::invalid_argument("count_root_degree: K out of range");
  return as_integer(Rat(n + 1) * Rat(binomial(n, K)) * Rat(K) *
                    pow_int_rational(n, n - K - 1));
}

// K-component forests of rooted trees on n labeled vertices (roots free):
// C(n,K) * forest_count(n,K).
inline BigInt forest_component_count(long n, long K) {
  if (n < 0 || K < 0) throw std::invalid_argument("forest_component_count: negative argument");
  return binomial(n, K) * forest_count(n, K);
}

// Full signature table for N = n+1 vertices from the closed formula; only
// nonzero entries are stored, same convention as the oracle census.
inline CensusTable census_from_formula(int N) {
  if (N < 1) throw std::invalid_argument("census_from_formula: N must be >= 1");
  CensusTable table;
  table.N = N;
  long n = N - 1;
  for (long i = 1; i <= N; ++i)
    for (long k = 0; k <= n; ++k)
      for (long l = 0; l <= n; ++l)
        for (long m = 0; m <= n; ++m) {
          BigInt c = refined_count(n, i, k, l, m);
          if (c != 0)
            table.entries[RootSignature{static_cast<int>(i), static_cast<int>(k),
                                        static_cast<int>(l), static_cast<int>(m)}] = c;
        }
  return table;
}

}  // namespace treecount
