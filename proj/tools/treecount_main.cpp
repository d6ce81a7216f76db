// treecount: exact counts, censuses, identity verification, uniform
// sampling and OEIS cross-checks for rooted labeled trees.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "treecount/census.hpp"
#include "treecount/closed_form.hpp"
#include "treecount/identities.hpp"
#include "treecount/oeis.hpp"
#include "treecount/oracle.hpp"
#include "treecount/sampler.hpp"
#include "treecount/tree.hpp"

namespace {

// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 oracle/formula mismatch, 4 external-fetch failure.
constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;
constexpr int kMismatch = 3;
constexpr int kFetchFail = 4;

struct CountArgs {
  long n = 0;
  long i = -1, k = -1, l = -1, m = -1;
  long degree = -1;
};

int run_count(const CountArgs& a) {
  using namespace treecount;
  bool has_i = a.i >= 0, has_k = a.k >= 0, has_l = a.l >= 0, has_m = a.m >= 0;
  bool has_deg = a.degree >= 0;
  try {
    BigInt v;
    if (has_deg) {
      if (has_i || has_k || has_l || has_m) {
        std::cerr << "count: --degree cannot be combined with --i/--k/--l/--m\n";
        return kUsage;
      }
      v = count_root_degree(a.n, a.degree);
    } else if (has_i && has_k && has_l && has_m) {
      v = refined_count(a.n, a.i, a.k, a.l, a.m);
    } else if (has_i && has_k && !has_l && !has_m) {
      v = count_with_root(a.n, a.i, a.k);
    } else if (has_k && has_l && !has_i && !has_m) {
      v = count_children(a.n, a.k, a.l);
    } else if (has_k && !has_i && !has_l && !has_m) {
      v = count_low_children(a.n, a.k);
    } else {
      std::cerr << "count: supported flag combinations are --k | --k --l | "
                   "--i --k | --i --k --l --m | --degree\n";
      return kUsage;
    }
    std::cout << v.get_str() << "\n";
    return kOk;
  } catch (const std::invalid_argument& e) {
    std::cerr << "count: " << e.what() << "\n";
    return kUsage;
  }
}

struct TableArgs {
  long n = 0;
  std::string source = "formula";
  std::string format = "csv";
  int cap = treecount::kDefaultOracleCap;
  int threads = 1;
};

int run_table(const TableArgs& a) {
  using namespace treecount;
  try {
    int N = static_cast<int>(a.n) + 1;
    if (a.source == "both") {
      CensusTable o = census(N, a.cap, a.threads);
      CensusTable f = census_from_formula(N);
      bool same = true;
      for (const auto& [sig, c] : o.entries)
        if (f.count(sig) != c) {
          same = false;
          std::cout << "mismatch at i=" << sig.root << " k=" << sig.low_children
                    << " l=" << sig.high_children << " m=" << sig.low_forest_size
                    << ": oracle=" << c.get_str()
                    << " formula=" << f.count(sig).get_str() << "\n";
        }
      for (const auto& [sig, c] : f.entries)
        if (o.count(sig) != c && o.entries.count(sig) == 0) {
          same = false;
          std::cout << "mismatch at i=" << sig.root << " k=" << sig.low_children
                    << " l=" << sig.high_children << " m=" << sig.low_forest_size
                    << ": oracle=0 formula=" << c.get_str() << "\n";
        }
      return same ? kOk : kMismatch;
    }
    CensusTable t;
    if (a.source == "oracle")
      t = census(N, a.cap, a.threads);
    else if (a.source == "formula")
      t = census_from_formula(N);
    else {
      std::cerr << "table: --source must be oracle, formula or both\n";
      return kUsage;
    }
    if (a.format == "csv")
      std::cout << census_to_csv(t);
    else if (a.format == "json")
      std::cout << census_to_json(t) << "\n";
    else {
      std::cerr << "table: --format must be csv or json\n";
      return kUsage;
    }
    return kOk;
  } catch (const std::invalid_argument& e) {
    std::cerr << "table: " << e.what() << "\n";
    return kUsage;
  }
}

struct VerifyArgs {
  std::string suite = "all";
  long max_n = 6;
  int cap = treecount::kDefaultOracleCap;
  int threads = 1;
  bool json = false;
  treecount::SuiteConfig cfg;
};

int run_verify(const VerifyArgs& a) {
  using namespace treecount;
  if (a.suite != "identities" && a.suite != "census" && a.suite != "all") {
    std::cerr << "verify: --suite must be identities, census or all\n";
    return kUsage;
  }
  bool ok = true;
  nlohmann::json out = nlohmann::json::array();
  if (a.suite == "identities" || a.suite == "all") {
    auto reports = run_suite(a.cfg);
    ok = all_pass(reports);
    if (a.json)
      for (const auto& r : reports) out.push_back(r.to_json());
    else
      std::cout << suite_summary(reports);
  }
  if (a.suite == "census" || a.suite == "all") {
    for (long n = 0; n <= a.max_n; ++n) {
      int N = static_cast<int>(n) + 1;
      if (N > a.cap) {
        std::cerr << "verify: census N=" << N << " exceeds oracle cap " << a.cap << "\n";
        return kUsage;
      }
      CensusTable o = census(N, a.cap, a.threads);
      CensusTable f = census_from_formula(N);
      bool same = o.entries == f.entries;
      ok = ok && same;
      if (a.json)
        out.push_back({{"identity", "census_equivalence"},
                       {"params", {{"N", N}}},
                       {"lhs", o.total().get_str()},
                       {"rhs", f.total().get_str()},
                       {"pass", same}});
      else
        std::cout << (same ? "PASS" : "FAIL") << "  census_equivalence  N=" << N << "\n";
    }
  }
  if (a.json) std::cout << out.dump(2) << "\n";
  return ok ? kOk : kVerifyFail;
}

struct SampleArgs {
  long n = 0;
  long k = -1;
  long l = -1;
  long count = 1;
  std::uint64_t seed = 0;
};

int run_sample(const SampleArgs& a) {
  using namespace treecount;
  try {
    RandomSource rng(a.seed);
    if (a.l >= 0) {
      SplitSampler s(a.n, a.k, a.l);
      for (long j = 0; j < a.count; ++j)
        std::cout << serialize_tree(s.draw(rng)) << "\n";
    } else {
      TreeGivenKSampler s(a.n, a.k);
      for (long j = 0; j < a.count; ++j)
        std::cout << serialize_tree(s.draw(rng)) << "\n";
    }
    return kOk;
  } catch (const std::invalid_argument& e) {
    std::cerr << "sample: " << e.what() << "\n";
    return kUsage;
  }
}

struct OeisArgs {
  std::string id;
  long rows = 8;
  bool offline = false;
  std::string cache_dir;
};

int run_oeis(const OeisArgs& a) {
  using namespace treecount;
  try {
    auto rep = crosscheck(a.id, a.rows, a.cache_dir, a.offline);
    std::cout << (rep.pass ? "PASS" : "FAIL") << "  " << rep.id << "  "
              << rep.message << "\n";
    return rep.pass ? kOk : kVerifyFail;
  } catch (const FetchError& e) {
    std::cerr << "oeis: " << e.what() << "\n";
    return kFetchFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "oeis: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration of rooted labeled trees by root statistics"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read defaults from a key=value config file");

  CountArgs ca;
  auto* count = app.add_subcommand("count", "Print one exact count");
  count->add_option("--n", ca.n, "Tree size parameter n (trees live on n+1 vertices)")
      ->required();
  count->add_option("--i", ca.i, "Root label");
  count->add_option("--k", ca.k, "Lower-numbered root children");
  count->add_option("--l", ca.l, "Higher-numbered root children");
  count->add_option("--m", ca.m, "Lower-forest vertex count");
  count->add_option("--degree", ca.degree, "Total root degree K");

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Emit the full signature census");
  table->add_option("--n", ta.n, "Tree size parameter n")->required();
  table->add_option("--source", ta.source, "oracle | formula | both");
  table->add_option("--format", ta.format, "csv | json");
  table->add_option("--cap", ta.cap, "Oracle vertex cap");
  table->add_option("--threads", ta.threads, "Oracle worker threads");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run identity and census checks");
  verify->add_option("--suite", va.suite, "identities | census | all");
  verify->add_option("--max-n", va.max_n, "Largest n for the census suite");
  verify->add_option("--cap", va.cap, "Oracle vertex cap");
  verify->add_option("--threads", va.threads, "Oracle worker threads");
  verify->add_flag("--json", va.json, "Machine-readable report");
  verify->add_option("--sum1-max-n", va.cfg.sum1_n_max, "Grid bound");
  verify->add_option("--sum2-max-n", va.cfg.sum2_n_max, "Grid bound");
  verify->add_option("--chu-max-N", va.cfg.chu_N_max, "Grid bound");
  verify->add_option("--abel-max-N", va.cfg.abel_N_max, "Grid bound");
  verify->add_option("--chen-max-n", va.cfg.chen_n_max, "Grid bound");

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "Draw uniform trees as JSON lines");
  sample->add_option("--n", sa.n, "Tree size parameter n")->required();
  sample->add_option("--k", sa.k, "Lower-numbered root children")->required();
  sample->add_option("--l", sa.l, "Higher children (selects the subset sampler)");
  sample->add_option("--count", sa.count, "Number of trees to draw");
  sample->add_option("--seed", sa.seed, "RNG seed");

  OeisArgs oa;
  auto* oeis = app.add_subcommand("oeis", "Cross-check a cited OEIS sequence");
  oeis->add_option("--id", oa.id, "Sequence id, A followed by six digits")->required();
  oeis->add_option("--rows", oa.rows, "Triangle rows that must match");
  oeis->add_flag("--offline", oa.offline, "Never touch the network");
  oeis->add_option("--cache-dir", oa.cache_dir, "b-file cache directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*count) return run_count(ca);
    if (*table) return run_table(ta);
    if (*verify) return run_verify(va);
    if (*sample) return run_sample(sa);
    if (*oeis) return run_oeis(oa);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
