#pragma once

#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "treecount/numeric.hpp"
#include "treecount/tree.hpp"

namespace treecount {

// Exact signature -> count table for a fixed vertex count N. Only nonzero
// entries are stored; count() is total over the full signature box.
struct CensusTable {
  int N = 1;
  std::map<RootSignature, BigInt> entries;

  BigInt total() const {
    BigInt t = 0;
    for (const auto& [sig, c] : entries) t += c;
    return t;
  }

  BigInt count(const RootSignature& s) const {
    auto it = entries.find(s);
    return it == entries.end() ? BigInt(0) : it->second;
  }
};

inline std::string census_to_csv(const CensusTable& t) {
  std::ostringstream os;
  os << "i,k,l,m,count\n";
  for (const auto& [s, c] : t.entries)
    os << s.root << "," << s.low_children << "," << s.high_children << ","
       << s.low_forest_size << "," << c.get_str() << "\n";
  return os.str();
}

inline std::string census_to_json(const CensusTable& t) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [s, c] : t.entries) {
    nlohmann::json row;
    row["i"] = s.root;
    row["k"] = s.low_children;
    row["l"] = s.high_children;
    row["m"] = s.low_forest_size;
    // counts fit in 64 bits up to the oracle cap; keep JSON numeric
    row["count"] = static_cast<long>(c.get_si());
    arr.push_back(row);
  }
  return arr.dump();
}

}  // namespace treecount
