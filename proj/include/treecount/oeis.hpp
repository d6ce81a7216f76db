#pragma once

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "treecount/closed_form.hpp"
#include "treecount/numeric.hpp"
#include "treecount/oeis_fixtures.hpp"

namespace treecount {

// Parsed OEIS b-file: consecutive (index, value) pairs.
struct BFile {
  std::string id;
  long first_index = 0;
  std::vector<BigInt> values;
};

struct FetchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool valid_oeis_id(const std::string& id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (size_t i = 1; i < id.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  return true;
}

// Lines are "<index> <value>"; blank lines and '#' comments are ignored.
// Indices must increase by exactly 1.
inline BFile parse_bfile(const std::string& text) {
  BFile out;
  std::istringstream is(text);
  std::string line;
  bool have_first = false;
  long expect = 0;
  while (std::getline(is, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    if (line[a] == '#') continue;
    std::istringstream ls(line);
    long idx;
    std::string val;
    if (!(ls >> idx >> val)) throw std::invalid_argument("b-file: malformed line: " + line);
    std::string tail;
    if (ls >> tail) throw std::invalid_argument("b-file: trailing token: " + line);
    BigInt v;
    if (mpz_set_str(v.get_mpz_t(), val.c_str(), 10) != 0)
      throw std::invalid_argument("b-file: non-numeric value: " + val);
    if (!have_first) {
      out.first_index = idx;
      have_first = true;
    } else if (idx != expect) {
      throw std::invalid_argument("b-file: index gap at " + std::to_string(idx));
    }
    expect = idx + 1;
    out.values.push_back(v);
  }
  return out;
}

namespace detail {

inline const char* bundled_fixture(const std::string& id) {
  if (id == "A071207") return fixtures::kA071207;
  if (id == "A232006") return fixtures::kA232006;
  return nullptr;
}

inline std::string http_get_bfile(const std::string& id) {
  std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
  for (int attempt = 0; attempt < 2; ++attempt) {
    if (attempt > 0) std::this_thread::sleep_for(std::chrono::seconds(2));
    httplib::SSLClient cli("oeis.org");
    cli.set_follow_location(true);
    cli.set_connection_timeout(10);
    cli.set_read_timeout(30);
    auto res = cli.Get(path);
    if (res && res->status == 200) return res->body;
  }
  throw FetchError("failed to fetch " + path + " from oeis.org");
}

inline void write_atomic(const std::filesystem::path& target, const std::string& data) {
  std::filesystem::create_directories(target.parent_path());
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    os << data;
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace detail

// Returns the b-file from <cache_dir>/<id>.txt when present; otherwise
// fetches and caches it, or falls back to the bundled fixture when offline.
inline BFile fetch_bfile(const std::string& id, const std::string& cache_dir,
                         bool offline) {
  if (!valid_oeis_id(id)) throw std::invalid_argument("malformed OEIS id: " + id);
  std::filesystem::path cached = std::filesystem::path(cache_dir) / (id + ".txt");
  std::string text;
  if (!cache_dir.empty() && std::filesystem::exists(cached)) {
    std::ifstream is(cached, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    text = os.str();
  } else if (offline) {
    const char* fx = detail::bundled_fixture(id);
    if (!fx) throw FetchError("offline, no cache and no bundled fixture for " + id);
    text = fx;
  } else {
    text = detail::http_get_bfile(id);
    if (!cache_dir.empty()) detail::write_atomic(cached, text);
  }
  BFile b = parse_bfile(text);
  b.id = id;
  return b;
}

// Triangle row r of the sequence the artifact generates for this id.
inline std::vector<BigInt> triangle_row(const std::string& id, long r) {
  std::vector<BigInt> row;
  if (id == "A071207") {
    for (long k = 0; k <= r; ++k) row.push_back(count_low_children(r, k));
  } else if (id == "A232006") {
    for (long k = 0; k <= r; ++k) row.push_back(forest_count(r, k));
  } else {
    throw std::invalid_argument("no generator for sequence " + id);
  }
  return row;
}

struct CrosscheckReport {
  std::string id;
  bool pass = false;
  long matched_terms = 0;
  long matched_rows = 0;
  long start_row = -1;       // discovered row offset of the b-file
  bool skipped_column = false;  // layout drops the k=0 column
  std::string message;
};

// Aligns the b-file against the generated triangle, trying candidate row
// offsets and the column-0-dropped layout, and keeps the longest matching
// prefix. Passes when at least `rows` complete rows match.
inline CrosscheckReport crosscheck(const std::string& id, long rows, const BFile& b) {
  CrosscheckReport rep;
  rep.id = id;
  if (b.values.empty()) {
    rep.message = "empty b-file";
    return rep;
  }
  constexpr long kStartWindow = 4;
  constexpr long kMaxRows = 200;
  long gen_rows = std::min<long>(kMaxRows, rows + kStartWindow + 40);

  std::vector<std::vector<BigInt>> tri;
  for (long r = 0; r < gen_rows; ++r) tri.push_back(triangle_row(id, r));

  for (bool skip0 : {false, true}) {
    for (long start = 0; start < kStartWindow; ++start) {
      std::vector<const BigInt*> stream;
      std::vector<long> row_end;  // stream position one past each row
      for (long r = start; r < gen_rows; ++r) {
        for (size_t c = (skip0 && r > 0) ? 1 : 0; c < tri[static_cast<size_t>(r)].size(); ++c)
          stream.push_back(&tri[static_cast<size_t>(r)][c]);
        row_end.push_back(static_cast<long>(stream.size()));
      }
      long limit = std::min<long>(static_cast<long>(stream.size()),
                                  static_cast<long>(b.values.size()));
      long match = 0;
      while (match < limit && *stream[static_cast<size_t>(match)] == b.values[static_cast<size_t>(match)])
        ++match;
      long full_rows = 0;
      while (full_rows < static_cast<long>(row_end.size()) &&
             row_end[static_cast<size_t>(full_rows)] <= match)
        ++full_rows;
      if (match > rep.matched_terms) {
        rep.matched_terms = match;
        rep.matched_rows = full_rows;
        rep.start_row = start;
        rep.skipped_column = skip0;
      }
    }
  }
  rep.pass = rep.matched_rows >= rows;
  std::ostringstream os;
  if (rep.matched_terms == 0) {
    os << "no alignment: first b-file value " << b.values[0].get_str()
       << " does not start any candidate layout";
  } else {
    os << rep.matched_terms << " terms / " << rep.matched_rows
       << " full rows match (b-file starts at triangle row " << rep.start_row
       << (rep.skipped_column ? ", k=0 column dropped" : "") << ")";
    if (!rep.pass) os << "; first mismatch at term " << rep.matched_terms;
  }
  rep.message = os.str();
  return rep;
}

inline CrosscheckReport crosscheck(const std::string& id, long rows,
                                   const std::string& cache_dir, bool offline) {
  return crosscheck(id, rows, fetch_bfile(id, cache_dir, offline));
}

}  // namespace treecount
