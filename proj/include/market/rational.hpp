#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 the bidmatch authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "market/error.hpp"

namespace market {

/// Exact rational number. All monetary quantities (valuations, reserve and
/// maximum prices, prices, utilities) are Rat; the solver relies on exact
/// equality tests, so there is no floating point anywhere in the core.
///
/// Canonical form (denominator > 0, gcd(|num|, den) = 1) is maintained by
/// the GMP mpq layer on every operation.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(long num, long den) {
    if (den == 0) throw UsageError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rat(const mpq_class &v) : v_(v) { v_.canonicalize(); }

  /// Accepts "a", "-a" and "a/b" with arbitrary-precision decimal digits.
  static std::optional<Rat> parse(std::string_view text);

  const mpz_class &numerator() const { return v_.get_num(); }
  const mpz_class &denominator() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// "a" when integral, "a/b" otherwise.
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat &operator+=(const Rat &o) { v_ += o.v_; return *this; }
  Rat &operator-=(const Rat &o) { v_ -= o.v_; return *this; }
  Rat &operator*=(const Rat &o) { v_ *= o.v_; return *this; }
  Rat &operator/=(const Rat &o) {
    if (o.v_ == 0) throw UsageError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat &b) { return a += b; }
  friend Rat operator-(Rat a, const Rat &b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat &b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat &b) { return a /= b; }

  friend bool operator==(const Rat &a, const Rat &b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat &a, const Rat &b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat &a, const Rat &b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat &a, const Rat &b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat &a, const Rat &b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat &a, const Rat &b) { return a.v_ >= b.v_; }

  friend std::ostream &operator<<(std::ostream &os, const Rat &r);

private:
  mpq_class v_;
};

/// Least common multiple of the denominators of a range of Rats; used to
/// rescale rational data onto an integer grid.
mpz_class denominator_lcm(const std::vector<Rat> &values);

/// A price bound: either a finite rational or +infinity. +infinity compares
/// strictly greater than every finite value. Maximum prices live here (the
/// dummy item has an infinite one).
class Ceiling {
public:
  Ceiling() : finite_(std::nullopt) {}

  static Ceiling infinity() { return Ceiling(); }
  static Ceiling finite(Rat value) {
    Ceiling c;
    c.finite_ = std::move(value);
    return c;
  }

  bool is_finite() const { return finite_.has_value(); }
  bool is_infinite() const { return !finite_.has_value(); }
  const Rat &finite_value() const {
    if (!finite_) throw InternalError("finite_value() on +infinity");
    return *finite_;
  }

  std::string str() const { return finite_ ? finite_->str() : "inf"; }

  friend bool operator==(const Ceiling &a, const Ceiling &b) {
    if (a.is_finite() != b.is_finite()) return false;
    return !a.is_finite() || a.finite_value() == b.finite_value();
  }
  friend bool operator!=(const Ceiling &a, const Ceiling &b) { return !(a == b); }
  friend bool operator<(const Ceiling &a, const Ceiling &b) {
    if (!a.is_finite()) return false;
    if (!b.is_finite()) return true;
    return a.finite_value() < b.finite_value();
  }
  friend bool operator<=(const Ceiling &a, const Ceiling &b) { return !(b < a); }
  friend bool operator>(const Ceiling &a, const Ceiling &b) { return b < a; }
  friend bool operator>=(const Ceiling &a, const Ceiling &b) { return !(a < b); }

  // Mixed comparisons against finite rationals.
  friend bool operator<(const Rat &a, const Ceiling &b) { return Ceiling::finite(a) < b; }
  friend bool operator>=(const Rat &a, const Ceiling &b) { return !(a < b); }
  friend bool operator<=(const Ceiling &a, const Rat &b) { return a <= Ceiling::finite(b); }
  friend bool operator>(const Ceiling &a, const Rat &b) { return Ceiling::finite(b) < a; }

  /// +infinity - r = +infinity; used for the delta_max candidates.
  friend Ceiling operator-(const Ceiling &a, const Rat &b) {
    return a.is_finite() ? Ceiling::finite(a.finite_value() - b) : a;
  }
  /// Scaling by a positive rational keeps +infinity infinite.
  friend Ceiling operator*(const Rat &a, const Ceiling &b) {
    return b.is_finite() ? Ceiling::finite(a * b.finite_value()) : b;
  }

  friend Ceiling min(const Ceiling &a, const Ceiling &b) { return a < b ? a : b; }

private:
  std::optional<Rat> finite_;  // nullopt encodes +infinity
};

/// A bidder utility: either a finite rational or -infinity (the value of an
/// item priced at or above its maximum price). -infinity compares strictly
/// less than every finite value.
class Utility {
public:
  Utility() : finite_(Rat(0)) {}

  static Utility minus_infinity() {
    Utility u;
    u.finite_ = std::nullopt;
    return u;
  }
  static Utility finite(Rat value) {
    Utility u;
    u.finite_ = std::move(value);
    return u;
  }

  bool is_finite() const { return finite_.has_value(); }
  bool is_minus_infinity() const { return !finite_.has_value(); }
  const Rat &finite_value() const {
    if (!finite_) throw InternalError("finite_value() on -infinity");
    return *finite_;
  }

  std::string str() const { return finite_ ? finite_->str() : "-inf"; }

  friend bool operator==(const Utility &a, const Utility &b) {
    if (a.is_finite() != b.is_finite()) return false;
    return !a.is_finite() || a.finite_value() == b.finite_value();
  }
  friend bool operator!=(const Utility &a, const Utility &b) { return !(a == b); }
  friend bool operator<(const Utility &a, const Utility &b) {
    if (!b.is_finite()) return false;
    if (!a.is_finite()) return true;
    return a.finite_value() < b.finite_value();
  }
  friend bool operator<=(const Utility &a, const Utility &b) { return !(b < a); }
  friend bool operator>(const Utility &a, const Utility &b) { return b < a; }
  friend bool operator>=(const Utility &a, const Utility &b) { return !(a < b); }

  friend bool operator>=(const Utility &a, const Rat &b) { return a >= Utility::finite(b); }
  friend bool operator<(const Utility &a, const Rat &b) { return a < Utility::finite(b); }

private:
  std::optional<Rat> finite_;  // nullopt encodes -infinity
};

}  // namespace market
