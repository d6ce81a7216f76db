#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "treecount/closed_form.hpp"
#include "treecount/numeric.hpp"
#include "treecount/tree.hpp"

namespace treecount {

// Deterministic 64-bit source. mt19937_64 has a fully specified output
// sequence, and the bounded draws below use plain rejection, so identical
// seeds give identical samples on every platform.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t reject = (-bound) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t r = gen_();
      if (r >= reject) return r % bound;
    }
  }

  // Uniform in [0, bound) for arbitrary-precision bound >= 1.
  BigInt below_big(const BigInt& bound) {
    if (bound <= 0) throw std::invalid_argument("below_big: bound must be >= 1");
    size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    size_t words = (bits + 63) / 64;
    for (;;) {
      BigInt r = 0;
      for (size_t w = 0; w < words; ++w) {
        r <<= 64;
        BigInt word(static_cast<unsigned long>(gen_() >> 32));
        word <<= 32;
        word += static_cast<unsigned long>(gen_() & 0xffffffffu);
        r += word;
      }
      // keep only the low `bits` bits
      BigInt mask = (BigInt(1) << bits) - 1;
      r &= mask;
      if (r < bound) return r;
    }
  }

 private:
  std::mt19937_64 gen_;
};

// Uniform k-subset of pool, returned sorted ascending.
inline std::vector<int> sample_subset(std::vector<int> pool, size_t k,
                                      RandomSource& rng) {
  if (k > pool.size()) throw std::invalid_argument("sample_subset: k too large");
  for (size_t j = 0; j < k; ++j) {
    size_t pick = j + static_cast<size_t>(rng.below(pool.size() - j));
    std::swap(pool[j], pool[pick]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

struct ForestSample {
  RootedForest forest;
  long attempts = 0;
};

// Uniform forest on {1..m} with the given fixed roots, by rejection: every
// non-root picks an independent uniform parent, resample until acyclic.
// Acceptance probability is exactly |roots| / m.
inline ForestSample sample_forest_counted(int m, const std::set<int>& roots,
                                          RandomSource& rng) {
  if (m < 1) throw std::invalid_argument("sample_forest: m must be >= 1");
  if (roots.empty())
    throw std::invalid_argument("sample_forest: no forests with zero roots");
  for (int r : roots)
    if (r < 1 || r > m) throw std::invalid_argument("sample_forest: root out of range");
  std::vector<int> others;
  for (int v = 1; v <= m; ++v)
    if (!roots.count(v)) others.push_back(v);
  ForestSample out;
  for (;;) {
    ++out.attempts;
    std::map<int, int> parent;
    for (int v : others)
      parent[v] = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    if (all_reach_roots(m, roots, parent)) {
      out.forest = RootedForest{m, roots, parent};
      return out;
    }
  }
}

inline RootedForest sample_forest(int m, const std::set<int>& roots,
                                  RandomSource& rng) {
  return sample_forest_counted(m, roots, rng).forest;
}

namespace detail {

// Copies forest edges onto an actual vertex set: forest label j stands for
// the j-th smallest element of `labels`.
inline void relabel_forest_into(const RootedForest& f, const std::vector<int>& labels,
                                std::map<int, int>& parent_out) {
  for (const auto& [c, p] : f.parent)
    parent_out[labels[static_cast<size_t>(c) - 1]] = labels[static_cast<size_t>(p) - 1];
}

// Uniform forest on the given sorted vertex labels with the given roots,
// appended into parent_out.
inline void sample_forest_on(const std::vector<int>& labels,
                             const std::vector<int>& root_labels, RandomSource& rng,
                             std::map<int, int>& parent_out) {
  if (labels.empty()) return;
  std::set<int> roots;
  for (int r : root_labels) {
    auto it = std::lower_bound(labels.begin(), labels.end(), r);
    roots.insert(static_cast<int>(it - labels.begin()) + 1);
  }
  RootedForest f = sample_forest(static_cast<int>(labels.size()), roots, rng);
  relabel_forest_into(f, labels, parent_out);
}

}  // namespace detail

// Uniform sampler over trees on {1..n+1} with exactly k lower-numbered root
// children. The (i, l, m) cell is drawn with exact integer weights, then the
// vertex sets and the two forests are drawn uniformly and assembled.
class TreeGivenKSampler {
 public:
  TreeGivenKSampler(long n, long k) : n_(n), k_(k) {
    if (n < 1 || k < 0 || k > n)
      throw std::invalid_argument("TreeGivenKSampler: infeasible (n, k)");
    BigInt cum = 0;
    for (long i = 1; i <= n + 1; ++i)
      for (long l = 0; l + k <= n; ++l)
        for (long m = k; m <= n - l; ++m) {
          BigInt w = refined_count(n, i, k, l, m);
          if (w == 0) continue;
          cum += w;
          cells_.push_back(Cell{i, l, m, cum});
        }
    total_ = cum;
    if (total_ == 0)
      throw std::invalid_argument("TreeGivenKSampler: no trees for (n, k)");
    if (total_ != count_low_children(n, k))
      throw std::logic_error("TreeGivenKSampler: weight total mismatch");
  }

  const BigInt& total() const { return total_; }

  RootedTree draw(RandomSource& rng) const {
    BigInt u = rng.below_big(total_);
    auto it = std::lower_bound(cells_.begin(), cells_.end(), u,
                               [](const Cell& c, const BigInt& v) { return c.cum <= v; });
    const Cell& cell = *it;
    long i = cell.i, l = cell.l, m = cell.m;
    long N = n_ + 1;

    std::vector<int> below, above;
    for (long v = 1; v < i; ++v) below.push_back(static_cast<int>(v));
    for (long v = i + 1; v <= N; ++v) above.push_back(static_cast<int>(v));
    std::vector<int> low_children = sample_subset(below, static_cast<size_t>(k_), rng);
    std::vector<int> high_children = sample_subset(above, static_cast<size_t>(l), rng);

    std::vector<int> rest;
    for (long v = 1; v <= N; ++v) {
      if (v == i) continue;
      int vi = static_cast<int>(v);
      if (std::binary_search(low_children.begin(), low_children.end(), vi)) continue;
      if (std::binary_search(high_children.begin(), high_children.end(), vi)) continue;
      rest.push_back(vi);
    }
    std::vector<int> low_extra =
        sample_subset(rest, static_cast<size_t>(m - k_), rng);

    std::vector<int> low_set = low_children;
    low_set.insert(low_set.end(), low_extra.begin(), low_extra.end());
    std::sort(low_set.begin(), low_set.end());
    std::vector<int> high_set;
    for (int v : rest)
      if (!std::binary_search(low_extra.begin(), low_extra.end(), v))
        high_set.push_back(v);
    high_set.insert(high_set.end(), high_children.begin(), high_children.end());
    std::sort(high_set.begin(), high_set.end());

    RootedTree t;
    t.n = static_cast<int>(N);
    t.root = static_cast<int>(i);
    for (int c : low_children) t.parent[c] = t.root;
    for (int c : high_children) t.parent[c] = t.root;
    detail::sample_forest_on(low_set, low_children, rng, t.parent);
    detail::sample_forest_on(high_set, high_children, rng, t.parent);
    return t;
  }

 private:
  struct Cell {
    long i, l, m;
    BigInt cum;
  };
  long n_, k_;
  std::vector<Cell> cells_;
  BigInt total_;
};

inline RootedTree sample_tree_given_k(long n, long k, RandomSource& rng) {
  return TreeGivenKSampler(n, k).draw(rng);
}

// Uniform sampler over trees with exactly k lower and l higher root
// children: draw a uniform (k+l+1)-subset, root at its (k+1)-st smallest
// element, make the rest root children, and fill in a uniform forest on the
// remaining vertices with those children as roots.
class SplitSampler {
 public:
  SplitSampler(long n, long k, long l) : n_(n), k_(k), l_(l) {
    if (n < 1 || k < 0 || l < 0 || k + l > n || k + l == 0 ||
        count_children(n, k, l) == 0)
      throw std::invalid_argument("SplitSampler: infeasible (n, k, l)");
  }

  RootedTree draw(RandomSource& rng) const {
    long N = n_ + 1;
    std::vector<int> all;
    for (long v = 1; v <= N; ++v) all.push_back(static_cast<int>(v));
    std::vector<int> s = sample_subset(all, static_cast<size_t>(k_ + l_ + 1), rng);
    int root = s[static_cast<size_t>(k_)];
    std::vector<int> children;
    for (int v : s)
      if (v != root) children.push_back(v);

    RootedTree t;
    t.n = static_cast<int>(N);
    t.root = root;
    for (int c : children) t.parent[c] = root;
    std::vector<int> rest;
    for (long v = 1; v <= N; ++v)
      if (static_cast<int>(v) != root) rest.push_back(static_cast<int>(v));
    detail::sample_forest_on(rest, children, rng, t.parent);
    return t;
  }

 private:
  long n_, k_, l_;
};

inline RootedTree sample_tree_given_split(long n, long k, long l, RandomSource& rng) {
  return SplitSampler(n, k, l).draw(rng);
}

}  // namespace treecount
