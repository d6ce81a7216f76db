#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "treecount/census.hpp"
#include "treecount/tree.hpp"

namespace treecount {

inline constexpr int kDefaultOracleCap = 8;

namespace detail {

inline std::uint64_t upow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Decodes a Prufer sequence over {1..N} (length N-2, N >= 2) into the edge
// list of the unique labeled tree it encodes.
inline std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq,
                                                      int N) {
  std::vector<int> degree(static_cast<size_t>(N) + 1, 1);
  for (int s : seq) ++degree[static_cast<size_t>(s)];
  std::set<int> leaves;
  for (int v = 1; v <= N; ++v)
    if (degree[static_cast<size_t>(v)] == 1) leaves.insert(v);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(N) - 1);
  for (int s : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, s);
    if (--degree[static_cast<size_t>(s)] == 1) leaves.insert(s);
  }
  int a = *leaves.begin();
  int b = *leaves.rbegin();
  edges.emplace_back(a, b);
  return edges;
}

// Orients an edge list away from the chosen root.
inline RootedTree root_edges(int N, int root,
                             const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(N) + 1);
  for (auto [a, b] : edges) {
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  RootedTree t;
  t.n = N;
  t.root = root;
  std::vector<int> stack{root};
  std::vector<bool> seen(static_cast<size_t>(N) + 1, false);
  seen[static_cast<size_t>(root)] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[static_cast<size_t>(u)]) {
      if (seen[static_cast<size_t>(v)]) continue;
      seen[static_cast<size_t>(v)] = true;
      t.parent[v] = u;
      stack.push_back(v);
    }
  }
  return t;
}

inline std::vector<int> prufer_from_index(std::uint64_t idx, int N, int len) {
  std::vector<int> seq(static_cast<size_t>(len));
  for (int p = len - 1; p >= 0; --p) {
    seq[static_cast<size_t>(p)] = 1 + static_cast<int>(idx % static_cast<std::uint64_t>(N));
    idx /= static_cast<std::uint64_t>(N);
  }
  return seq;
}

}  // namespace detail

// Yields every rooted labeled tree on {1..N} exactly once, in lexicographic
// order of (Prufer sequence, root). Total yielded: N^(N-1).
inline void enumerate_rooted_trees(int N,
                                   const std::function<void(const RootedTree&)>& fn,
                                   int cap = kDefaultOracleCap) {
  if (N < 1) throw std::invalid_argument("enumerate_rooted_trees: N must be >= 1");
  if (N > cap) throw std::invalid_argument("enumerate_rooted_trees: cap exceeded");
  if (N == 1) {
    fn(RootedTree{1, 1, {}});
    return;
  }
  int len = N - 2;
  std::uint64_t total = detail::upow(static_cast<std::uint64_t>(N), static_cast<unsigned>(len));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    auto edges = detail::prufer_decode(detail::prufer_from_index(idx, N, len), N);
    for (int root = 1; root <= N; ++root) fn(detail::root_edges(N, root, edges));
  }
}

// Independent slow-path enumerator: every parent assignment filtered by
// reachability. Guards the Prufer path in tests; keep N small.
inline void enumerate_rooted_trees_naive(int N,
                                         const std::function<void(const RootedTree&)>& fn) {
  if (N < 1) throw std::invalid_argument("enumerate_rooted_trees_naive: N must be >= 1");
  for (int root = 1; root <= N; ++root) {
    std::vector<int> others;
    for (int v = 1; v <= N; ++v)
      if (v != root) others.push_back(v);
    std::vector<int> choice(others.size(), 1);
    while (true) {
      std::map<int, int> parent;
      for (size_t j = 0; j < others.size(); ++j) parent[others[j]] = choice[j];
      if (all_reach_roots(N, {root}, parent)) fn(RootedTree{N, root, parent});
      size_t p = 0;
      while (p < choice.size() && choice[p] == N) choice[p++] = 1;
      if (p == choice.size()) break;
      ++choice[p];
    }
  }
}

// Every forest on {1..m} whose components are rooted at the given set, by
// exhaustive parent assignment filtered for reachability.
inline void enumerate_forests(int m, const std::set<int>& roots,
                              const std::function<void(const RootedForest&)>& fn,
                              int cap = kDefaultOracleCap) {
  if (m < 0) throw std::invalid_argument("enumerate_forests: m must be >= 0");
  if (m > cap) throw std::invalid_argument("enumerate_forests: cap exceeded");
  for (int r : roots)
    if (r < 1 || r > m) throw std::invalid_argument("enumerate_forests: root out of range");
  if (m == 0) {
    fn(RootedForest{});
    return;
  }
  if (roots.empty()) return;  // no vertex can reach a root
  std::vector<int> others;
  for (int v = 1; v <= m; ++v)
    if (!roots.count(v)) others.push_back(v);
  std::vector<int> choice(others.size(), 1);
  while (true) {
    std::map<int, int> parent;
    for (size_t j = 0; j < others.size(); ++j) parent[others[j]] = choice[j];
    if (all_reach_roots(m, roots, parent)) fn(RootedForest{m, roots, parent});
    size_t p = 0;
    while (p < choice.size() && choice[p] == m) choice[p++] = 1;
    if (p == choice.size()) break;
    ++choice[p];
  }
}

// Ground-truth signature census over all N^(N-1) trees. With threads > 1 the
// Prufer index space is split into contiguous chunks and the partial tables
// are merged by summation.
inline CensusTable census(int N, int cap = kDefaultOracleCap, int threads = 1) {
  if (N < 1) throw std::invalid_argument("census: N must be >= 1");
  if (N > cap) throw std::invalid_argument("census: cap exceeded");
  CensusTable table;
  table.N = N;
  if (N == 1) {
    table.entries[RootSignature{1, 0, 0, 0}] = 1;
    return table;
  }
  int len = N - 2;
  std::uint64_t total = detail::upow(static_cast<std::uint64_t>(N), static_cast<unsigned>(len));
  auto scan = [N, len](std::uint64_t lo, std::uint64_t hi,
                       std::map<RootSignature, std::uint64_t>& out) {
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      auto edges = detail::prufer_decode(detail::prufer_from_index(idx, N, len), N);
      for (int root = 1; root <= N; ++root)
        ++out[signature(detail::root_edges(N, root, edges))];
    }
  };
  std::map<RootSignature, std::uint64_t> counts;
  if (threads <= 1 || total < 2) {
    scan(0, total, counts);
  } else {
    auto t = static_cast<std::uint64_t>(threads);
    if (t > total) t = total;
    std::vector<std::map<RootSignature, std::uint64_t>> partial(t);
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < t; ++w) {
      std::uint64_t lo = total * w / t;
      std::uint64_t hi = total * (w + 1) / t;
      pool.emplace_back(scan, lo, hi, std::ref(partial[static_cast<size_t>(w)]));
    }
    for (auto& th : pool) th.join();
    for (const auto& part : partial)
      for (const auto& [sig, c] : part) counts[sig] += c;
  }
  for (const auto& [sig, c] : counts)
    table.entries[sig] = BigInt(static_cast<unsigned long>(c));
  return table;
}

}  // namespace treecount
