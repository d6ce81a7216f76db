#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "treecount/numeric.hpp"

namespace treecount {

// Dense univariate polynomial over the rationals, coefficient index = degree.
// Canonical form: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector and degree() == -1.
class Polynomial1 {
 public:
  Polynomial1() = default;
  Polynomial1(const Rat& c) {
    if (c != 0) coeffs_.push_back(c);
  }
  Polynomial1(long c) : Polynomial1(Rat(c)) {}
  explicit Polynomial1(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial1 x() { return Polynomial1(std::vector<Rat>{Rat(0), Rat(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rat coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[d];
  }

  friend Polynomial1 operator+(const Polynomial1& a, const Polynomial1& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial1(std::move(c));
  }
  friend Polynomial1 operator-(const Polynomial1& a, const Polynomial1& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return Polynomial1(std::move(c));
  }
  friend Polynomial1 operator*(const Polynomial1& a, const Polynomial1& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial1();
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial1(std::move(c));
  }
  friend Polynomial1 operator*(const Rat& s, const Polynomial1& p) {
    std::vector<Rat> c = p.coeffs_;
    for (auto& v : c) v *= s;
    return Polynomial1(std::move(c));
  }

  Polynomial1 pow(unsigned e) const {
    Polynomial1 r(1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  Rat eval(const Rat& x) const {
    Rat r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
  }

  friend bool operator==(const Polynomial1& a, const Polynomial1& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
      if (coeffs_[d] == 0) continue;
      if (!first) os << " + ";
      os << coeffs_[d].get_str();
      if (d >= 1) os << "*x";
      if (d >= 2) os << "^" << d;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rat> coeffs_;
};

// Exact quotient p / q; empty when q does not divide p.
inline std::optional<Polynomial1> divide_exact(const Polynomial1& p,
                                               const Polynomial1& q) {
  if (q.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  Polynomial1 rem = p;
  std::vector<Rat> quot;
  int dq = q.degree();
  if (rem.degree() >= dq)
    quot.assign(static_cast<size_t>(rem.degree() - dq + 1), Rat(0));
  while (!rem.is_zero() && rem.degree() >= dq) {
    int d = rem.degree() - dq;
    Rat c = rem.coeff(rem.degree()) / q.coeff(dq);
    quot[static_cast<size_t>(d)] = c;
    std::vector<Rat> mono(static_cast<size_t>(d) + 1, Rat(0));
    mono.back() = c;
    rem = rem - Polynomial1(std::move(mono)) * q;
  }
  if (!rem.is_zero()) return std::nullopt;
  return Polynomial1(std::move(quot));
}

// Sparse bivariate polynomial over the rationals, keyed by (deg_x, deg_y).
// No zero coefficients are stored, so equality is structural.
class Polynomial2 {
 public:
  Polynomial2() = default;
  Polynomial2(const Rat& c) {
    if (c != 0) c_[{0, 0}] = c;
  }
  Polynomial2(long c) : Polynomial2(Rat(c)) {}

  static Polynomial2 x() {
    Polynomial2 p;
    p.c_[{1, 0}] = 1;
    return p;
  }
  static Polynomial2 y() {
    Polynomial2 p;
    p.c_[{0, 1}] = 1;
    return p;
  }

  Rat coeff(int dx, int dy) const {
    auto it = c_.find({dx, dy});
    return it == c_.end() ? Rat(0) : it->second;
  }

  bool is_zero() const { return c_.empty(); }

  friend Polynomial2 operator+(const Polynomial2& a, const Polynomial2& b) {
    Polynomial2 r = a;
    for (const auto& [k, v] : b.c_) r.add_term(k.first, k.second, v);
    return r;
  }
  friend Polynomial2 operator-(const Polynomial2& a, const Polynomial2& b) {
    Polynomial2 r = a;
    for (const auto& [k, v] : b.c_) r.add_term(k.first, k.second, -v);
    return r;
  }
  friend Polynomial2 operator*(const Polynomial2& a, const Polynomial2& b) {
    Polynomial2 r;
    for (const auto& [ka, va] : a.c_)
      for (const auto& [kb, vb] : b.c_)
        r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
    return r;
  }
  friend Polynomial2 operator*(const Rat& s, const Polynomial2& p) {
    Polynomial2 r;
    for (const auto& [k, v] : p.c_) r.add_term(k.first, k.second, s * v);
    return r;
  }

  Polynomial2 pow(unsigned e) const {
    Polynomial2 r(1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  Rat eval(const Rat& x, const Rat& y) const {
    Rat r(0);
    for (const auto& [k, v] : c_) {
      Rat t = v;
      for (int i = 0; i < k.first; ++i) t *= x;
      for (int i = 0; i < k.second; ++i) t *= y;
      r += t;
    }
    return r;
  }

  friend bool operator==(const Polynomial2& a, const Polynomial2& b) {
    return a.c_ == b.c_;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : c_) {
      if (!first) os << " + ";
      os << v.get_str();
      if (k.first >= 1) os << "*x";
      if (k.first >= 2) os << "^" << k.first;
      if (k.second >= 1) os << "*y";
      if (k.second >= 2) os << "^" << k.second;
      first = false;
    }
    return os.str();
  }

 private:
  void add_term(int dx, int dy, const Rat& v) {
    auto key = std::make_pair(dx, dy);
    auto it = c_.find(key);
    if (it == c_.end()) {
      if (v != 0) c_.emplace(key, v);
      return;
    }
    it->second += v;
    if (it->second == 0) c_.erase(it);
  }

  std::map<std::pair<int, int>, Rat> c_;
};

// Product_{j=0..k-1} (p - j) / k!; the zero polynomial for k < 0. Matches the
// integer binomial() when p is specialized to an integer point.
inline Polynomial2 binomial_poly(const Polynomial2& p, long k) {
  if (k < 0) return Polynomial2();
  Polynomial2 r(1);
  for (long j = 0; j < k; ++j) r = r * (p - Polynomial2(j));
  return make_rat(1, factorial(k)) * r;
}

}  // namespace treecount
