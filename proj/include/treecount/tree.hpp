#pragma once

#include <compare>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace treecount {

// Rooted labeled tree on {1..n}: root plus a parent entry for every
// non-root vertex. Construct through validate_tree() unless the parent map
// is known-valid (oracle and sampler output).
struct RootedTree {
  int n = 1;
  int root = 1;
  std::map<int, int> parent;

  friend bool operator==(const RootedTree&, const RootedTree&) = default;
};

// Forest on {1..m} in which every vertex reaches one of the fixed roots.
struct RootedForest {
  int m = 0;
  std::set<int> roots;
  std::map<int, int> parent;

  friend bool operator==(const RootedForest&, const RootedForest&) = default;
};

// Root statistics of a tree: root label, children below/above it by label,
// and the vertex count of the forest hanging from the lower children.
struct RootSignature {
  int root = 1;            // i
  int low_children = 0;    // k
  int high_children = 0;   // l
  int low_forest_size = 0; // m

  friend auto operator<=>(const RootSignature&, const RootSignature&) = default;
};

// Checks that every non-root vertex reaches a root by parent-chasing, with
// no cycles. Works for trees (single root) and forests alike.
// state: 0 = unseen, 1 = known good, 2 = on the current chain.
inline bool all_reach_roots(int n, const std::set<int>& roots,
                            const std::map<int, int>& parent) {
  std::vector<int> state(static_cast<size_t>(n) + 1, 0);
  for (int r : roots) state[static_cast<size_t>(r)] = 1;
  for (int v = 1; v <= n; ++v) {
    if (state[static_cast<size_t>(v)] != 0) continue;
    std::vector<int> chain;
    int u = v;
    while (state[static_cast<size_t>(u)] == 0) {
      state[static_cast<size_t>(u)] = 2;
      chain.push_back(u);
      auto it = parent.find(u);
      if (it == parent.end()) return false;  // dangling vertex
      u = it->second;
      if (state[static_cast<size_t>(u)] == 2) return false;  // cycle
    }
    for (int c : chain) state[static_cast<size_t>(c)] = 1;
  }
  return true;
}

inline RootedTree validate_tree(int n, int root, const std::map<int, int>& parent) {
  if (n < 1) throw std::invalid_argument("tree: n must be >= 1");
  if (root < 1 || root > n) throw std::invalid_argument("tree: root out of range");
  if (parent.count(root)) throw std::invalid_argument("tree: root has a parent entry");
  if (static_cast<int>(parent.size()) != n - 1)
    throw std::invalid_argument("tree: expected " + std::to_string(n - 1) +
                                " parent entries, got " + std::to_string(parent.size()));
  for (const auto& [c, p] : parent) {
    if (c < 1 || c > n || p < 1 || p > n)
      throw std::invalid_argument("tree: label out of range");
  }
  if (!all_reach_roots(n, {root}, parent))
    throw std::invalid_argument("tree: cycle or disconnected vertex");
  return RootedTree{n, root, parent};
}

inline RootedForest validate_forest(int m, const std::set<int>& roots,
                                    const std::map<int, int>& parent) {
  if (m < 0) throw std::invalid_argument("forest: m must be >= 0");
  for (int r : roots) {
    if (r < 1 || r > m) throw std::invalid_argument("forest: root out of range");
    if (parent.count(r)) throw std::invalid_argument("forest: root has a parent entry");
  }
  if (parent.size() + roots.size() != static_cast<size_t>(m))
    throw std::invalid_argument("forest: wrong parent entry count");
  for (const auto& [c, p] : parent) {
    if (c < 1 || c > m || p < 1 || p > m)
      throw std::invalid_argument("forest: label out of range");
  }
  if (!all_reach_roots(m, roots, parent))
    throw std::invalid_argument("forest: cycle or vertex not reaching a root");
  return RootedForest{m, roots, parent};
}

inline RootSignature signature(const RootedTree& t) {
  RootSignature s;
  s.root = t.root;
  for (const auto& [c, p] : t.parent) {
    if (p != t.root) continue;
    if (c < t.root)
      ++s.low_children;
    else
      ++s.high_children;
  }
  // A vertex belongs to the lower forest iff its branch below the root
  // starts at a child < root.
  for (int v = 1; v <= t.n; ++v) {
    if (v == t.root) continue;
    int u = v;
    while (t.parent.at(u) != t.root) u = t.parent.at(u);
    if (u < t.root) ++s.low_forest_size;
  }
  return s;
}

// {"n": int, "root": int, "parent": {"<child>": int, ...}} with parent keys
// emitted as decimal strings in ascending numeric order.
inline std::string serialize_tree(const RootedTree& t) {
  std::ostringstream os;
  os << "{\"n\":" << t.n << ",\"root\":" << t.root << ",\"parent\":{";
  bool first = true;
  for (const auto& [c, p] : t.parent) {  // std::map<int,int> iterates ascending
    if (!first) os << ",";
    os << "\"" << c << "\":" << p;
    first = false;
  }
  os << "}}";
  return os.str();
}

inline RootedTree parse_tree(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("tree parse: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("root") || !j.contains("parent"))
    throw std::invalid_argument("tree parse: expected keys n, root, parent");
  if (!j["n"].is_number_integer() || !j["root"].is_number_integer() ||
      !j["parent"].is_object())
    throw std::invalid_argument("tree parse: wrong field types");
  std::map<int, int> parent;
  for (const auto& [key, val] : j["parent"].items()) {
    size_t pos = 0;
    int c;
    try {
      c = std::stoi(key, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("tree parse: non-numeric child key '" + key + "'");
    }
    if (pos != key.size())
      throw std::invalid_argument("tree parse: malformed child key '" + key + "'");
    if (!val.is_number_integer())
      throw std::invalid_argument("tree parse: non-integer parent value");
    if (!parent.emplace(c, val.get<int>()).second)
      throw std::invalid_argument("tree parse: duplicate child key");
  }
  return validate_tree(j["n"].get<int>(), j["root"].get<int>(), parent);
}

}  // namespace treecount
