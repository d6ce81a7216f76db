#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "treecount/closed_form.hpp"
#include "treecount/numeric.hpp"
#include "treecount/poly.hpp"

namespace treecount {

// One verified identity instance. Failures are data, not exceptions; the
// fault-injection tests rely on observable failed reports.
struct IdentityReport {
  std::string identity;
  nlohmann::json params;
  std::string lhs;
  std::string rhs;
  bool pass = false;

  nlohmann::json to_json() const {
    return {{"identity", identity}, {"params", params}, {"lhs", lhs},
            {"rhs", rhs},           {"pass", pass}};
  }
};

// sum_{i=1}^{n+1} C(i-1,k) C(n+1-i,l) = C(n+1, k+l+1)
inline IdentityReport check_sum1(long n, long k, long l) {
  if (n < 0 || k < 0 || l < 0)
    throw std::invalid_argument("check_sum1: arguments must be >= 0");
  BigInt lhs = 0;
  for (long i = 1; i <= n + 1; ++i) lhs += binomial(i - 1, k) * binomial(n + 1 - i, l);
  BigInt rhs = binomial(n + 1, k + l + 1);
  return {"sum_over_root", {{"n", n}, {"k", k}, {"l", l}},
          lhs.get_str(), rhs.get_str(), lhs == rhs};
}

// sum_{j=k-m}^{n-l} C(m+j,k) C(n-j,l) = C(m+n+1, k+l+1),
// for k,l >= 0 and m+n >= -1 (m, n may be negative).
inline IdentityReport check_general_binomial(long k, long l, long m, long n) {
  if (k < 0 || l < 0)
    throw std::invalid_argument("check_general_binomial: k, l must be >= 0");
  if (m + n < -1)
    throw std::invalid_argument("check_general_binomial: need m + n >= -1");
  BigInt lhs = 0;
  for (long j = k - m; j <= n - l; ++j) lhs += binomial(m + j, k) * binomial(n - j, l);
  BigInt rhs = binomial(m + n + 1, k + l + 1);
  return {"general_binomial", {{"k", k}, {"l", l}, {"m", m}, {"n", n}},
          lhs.get_str(), rhs.get_str(), lhs == rhs};
}

// Chu-Vandermonde and its dual, as exact bivariate polynomial identities:
//   sum_{j=0}^N C(x,j) C(y,N-j) = C(x+y,N)
//   sum_{j=0}^N C(x+j-1,j) C(y+N-j-1,N-j) = C(x+y+N-1,N)
inline std::vector<IdentityReport> check_chu_vandermonde(long N) {
  if (N < 0) throw std::invalid_argument("check_chu_vandermonde: N must be >= 0");
  auto x = Polynomial2::x();
  auto y = Polynomial2::y();
  std::vector<IdentityReport> out;

  Polynomial2 lhs;
  for (long j = 0; j <= N; ++j)
    lhs = lhs + binomial_poly(x, j) * binomial_poly(y, N - j);
  Polynomial2 rhs = binomial_poly(x + y, N);
  out.push_back({"chu_vandermonde", {{"N", N}}, lhs.str(), rhs.str(), lhs == rhs});

  Polynomial2 dlhs;
  for (long j = 0; j <= N; ++j)
    dlhs = dlhs + binomial_poly(x + Polynomial2(j - 1), j) *
                      binomial_poly(y + Polynomial2(N - j - 1), N - j);
  Polynomial2 drhs = binomial_poly(x + y + Polynomial2(N - 1), N);
  out.push_back({"dual_chu_vandermonde", {{"N", N}}, dlhs.str(), drhs.str(),
                 dlhs == drhs});
  return out;
}

using ForestCountFn = std::function<BigInt(long, long)>;

// sum_{m=k}^{n-l} C(n-k-l,m-k) phi(m,k) phi(n-m,l) = phi(n,k+l).
// The forest-count function is injectable for fault-injection tests.
inline IdentityReport check_sum2(long n, long k, long l,
                                 const ForestCountFn& phi = forest_count) {
  if (n < 1 || k < 0 || l < 0 || k + l > n)
    throw std::invalid_argument("check_sum2: need n >= 1, k,l >= 0, k+l <= n");
  BigInt lhs = 0;
  for (long m = k; m <= n - l; ++m)
    lhs += binomial(n - k - l, m - k) * phi(m, k) * phi(n - m, l);
  BigInt rhs = phi(n, k + l);
  return {"sum_over_split", {{"n", n}, {"k", k}, {"l", l}},
          lhs.get_str(), rhs.get_str(), lhs == rhs};
}

namespace detail {

// Abel polynomial specialized to unit step: P_0 = 1, P_M(x) = x (x+M)^(M-1).
inline Polynomial1 abel_poly1(long M) {
  if (M == 0) return Polynomial1(1);
  Polynomial1 x = Polynomial1::x();
  return x * (x + Polynomial1(M)).pow(static_cast<unsigned>(M - 1));
}

inline Polynomial2 abel_poly2(const Polynomial2& v, long M) {
  if (M == 0) return Polynomial2(1);
  return v * (v + Polynomial2(M)).pow(static_cast<unsigned>(M - 1));
}

}  // namespace detail

// sum_{M=0}^N C(N,M) P_M(x) P_{N-M}(y) = (x+y)(x+y+N)^(N-1), exactly as
// bivariate polynomials; the right-hand side degenerates to 1 at N = 0.
inline IdentityReport check_abel(long N) {
  if (N < 0) throw std::invalid_argument("check_abel: N must be >= 0");
  auto x = Polynomial2::x();
  auto y = Polynomial2::y();
  Polynomial2 lhs;
  for (long M = 0; M <= N; ++M)
    lhs = lhs + Rat(binomial(N, M)) *
                    (detail::abel_poly2(x, M) * detail::abel_poly2(y, N - M));
  Polynomial2 rhs =
      N == 0 ? Polynomial2(1)
             : (x + y) * (x + y + Polynomial2(N)).pow(static_cast<unsigned>(N - 1));
  return {"abel", {{"N", N}}, lhs.str(), rhs.str(), lhs == rhs};
}

// Specializing the Abel identity at x = k, y = l must reproduce the forest
// split identity: every term equals the corresponding phi product, and the
// two sides equal phi(n, k+l) = (k+l) n^(n-k-l-1).
inline IdentityReport check_abel_specialization(long n, long k, long l) {
  if (n < 1 || k < 0 || l < 0 || k + l > n)
    throw std::invalid_argument(
        "check_abel_specialization: need n >= 1, k,l >= 0, k+l <= n");
  bool pass = true;
  BigInt lhs = 0;
  for (long m = k; m <= n - l; ++m) {
    Rat low = detail::abel_poly1(m - k).eval(Rat(k));
    Rat high = detail::abel_poly1(n - m - l).eval(Rat(l));
    if (low != Rat(forest_count(m, k)) || high != Rat(forest_count(n - m, l)))
      pass = false;
    lhs += binomial(n - k - l, m - k) * as_integer(low) * as_integer(high);
  }
  BigInt rhs = as_integer(Rat(k + l) * pow_int_rational(n, n - k - l - 1));
  pass = pass && lhs == rhs && rhs == forest_count(n, k + l);
  return {"abel_specialization", {{"n", n}, {"k", k}, {"l", l}},
          lhs.get_str(), rhs.get_str(), pass};
}

// Generating-polynomial route to the main count. All parts exact over the
// rationals, with F_n(x) = sum_K C(n+1,K+1) K x^K:
//   (a) F_n(x) = (n+1)(x+1)^n - ((x+1)^(n+1) - 1)/x
//   (b) F_n(1/n) = n
//   (c) x F_n(x/n) = (x-1)(x+n)^n / n^(n-1) + n
//   (d) n^(n-1) (n - x F_n(x/n)) / (1-x) = (x+n)^n
//   (e) [x^k] (x+n)^n = count_low_children(n,k) for every k
inline std::vector<IdentityReport> check_chen(long n) {
  if (n < 1) throw std::invalid_argument("check_chen: n must be >= 1");
  std::vector<IdentityReport> out;
  Polynomial1 x = Polynomial1::x();

  std::vector<Rat> fc(static_cast<size_t>(n) + 1, Rat(0));
  for (long K = 0; K <= n; ++K) fc[static_cast<size_t>(K)] = Rat(binomial(n + 1, K + 1) * K);
  Polynomial1 f{std::vector<Rat>(fc)};

  Polynomial1 xp1n = (x + Polynomial1(1)).pow(static_cast<unsigned>(n));
  auto quot = divide_exact((x + Polynomial1(1)).pow(static_cast<unsigned>(n + 1)) -
                               Polynomial1(1),
                           x);
  Polynomial1 closed = Rat(n + 1) * xp1n - (quot ? *quot : Polynomial1());
  out.push_back({"chen_row_poly", {{"n", n}, {"part", "closed_form"}},
                 f.str(), closed.str(), quot.has_value() && f == closed});

  Rat at = f.eval(make_rat(1, n));
  out.push_back({"chen_row_poly", {{"n", n}, {"part", "eval_1_over_n"}},
                 at.get_str(), BigInt(n).get_str(), at == Rat(n)});

  // x * F_n(x/n): coefficient K of F scaled by n^-K, shifted up by one.
  std::vector<Rat> sc(static_cast<size_t>(n) + 2, Rat(0));
  for (long K = 0; K <= n; ++K)
    sc[static_cast<size_t>(K) + 1] = fc[static_cast<size_t>(K)] * pow_int_rational(n, -K);
  Polynomial1 xfxn{std::vector<Rat>(sc)};
  Polynomial1 xpnn = (x + Polynomial1(n)).pow(static_cast<unsigned>(n));
  Polynomial1 crhs =
      pow_int_rational(n, -(n - 1)) * ((x - Polynomial1(1)) * xpnn) + Polynomial1(n);
  out.push_back({"chen_row_poly", {{"n", n}, {"part", "scaled_identity"}},
                 xfxn.str(), crhs.str(), xfxn == crhs});

  Polynomial1 numer = pow_int_rational(n, n - 1) * (Polynomial1(n) - xfxn);
  auto gen = divide_exact(numer, Polynomial1(1) - x);
  out.push_back({"chen_row_poly", {{"n", n}, {"part", "generating_poly"}},
                 gen ? gen->str() : "not divisible", xpnn.str(),
                 gen.has_value() && *gen == xpnn});

  bool coeffs_ok = true;
  for (long kk = 0; kk <= n; ++kk)
    if (xpnn.coeff(static_cast<int>(kk)) != Rat(count_low_children(n, kk)))
      coeffs_ok = false;
  out.push_back({"chen_row_poly", {{"n", n}, {"part", "coefficients"}},
                 xpnn.str(), "C(n,k) n^(n-k) per k", coeffs_ok});
  return out;
}

// Grid bounds for a full suite run.
struct SuiteConfig {
  long sum1_n_max = 40;
  long sum1_kl_max = 10;
  long general_kl_max = 5;
  long general_mn_min = -6;
  long general_mn_max = 8;
  long chu_N_max = 12;
  long sum2_n_max = 25;
  long abel_N_max = 10;
  long abel_spec_n_max = 25;
  long chen_n_max = 25;
};

inline std::vector<IdentityReport> run_suite(const SuiteConfig& cfg = {}) {
  std::vector<IdentityReport> out;
  for (long n = 0; n <= cfg.sum1_n_max; ++n)
    for (long k = 0; k <= cfg.sum1_kl_max; ++k)
      for (long l = 0; l <= cfg.sum1_kl_max; ++l) out.push_back(check_sum1(n, k, l));
  for (long k = 0; k <= cfg.general_kl_max; ++k)
    for (long l = 0; l <= cfg.general_kl_max; ++l)
      for (long m = cfg.general_mn_min; m <= cfg.general_mn_max; ++m)
        for (long n = cfg.general_mn_min; n <= cfg.general_mn_max; ++n) {
          if (m + n < -1) continue;
          out.push_back(check_general_binomial(k, l, m, n));
        }
  for (long N = 0; N <= cfg.chu_N_max; ++N)
    for (auto& r : check_chu_vandermonde(N)) out.push_back(std::move(r));
  for (long n = 1; n <= cfg.sum2_n_max; ++n)
    for (long k = 0; k <= n; ++k)
      for (long l = 0; l + k <= n; ++l) out.push_back(check_sum2(n, k, l));
  for (long N = 0; N <= cfg.abel_N_max; ++N) out.push_back(check_abel(N));
  for (long n = 1; n <= cfg.abel_spec_n_max; ++n)
    for (long k = 0; k <= n; ++k)
      for (long l = 0; l + k <= n; ++l)
        out.push_back(check_abel_specialization(n, k, l));
  for (long n = 1; n <= cfg.chen_n_max; ++n)
    for (auto& r : check_chen(n)) out.push_back(std::move(r));
  return out;
}

inline bool all_pass(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

inline std::string suite_summary(const std::vector<IdentityReport>& reports) {
  // Aggregate per identity name; list first counterexample on failure.
  std::map<std::string, std::pair<long, long>> tally;  // name -> (pass, total)
  std::map<std::string, const IdentityReport*> first_fail;
  for (const auto& r : reports) {
    auto& t = tally[r.identity];
    ++t.second;
    if (r.pass)
      ++t.first;
    else if (!first_fail.count(r.identity))
      first_fail[r.identity] = &r;
  }
  std::ostringstream os;
  for (const auto& [name, t] : tally) {
    os << (t.first == t.second ? "PASS" : "FAIL") << "  " << name << "  "
       << t.first << "/" << t.second << "\n";
    auto it = first_fail.find(name);
    if (it != first_fail.end())
      os << "      first counterexample: params=" << it->second->params.dump()
         << " lhs=" << it->second->lhs << " rhs=" << it->second->rhs << "\n";
  }
  return os.str();
}

}  // namespace treecount
