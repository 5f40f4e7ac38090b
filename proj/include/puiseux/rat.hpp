#pragma once

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace puiseux {

/// Raised on violated preconditions and malformed inputs throughout the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rat {
 public:
  Rat() = default;
  template <std::integral I>
  Rat(I value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(mpq_class value);

  /// Accepts "p", "-p" or "p/q" with q > 0.
  static Rat parse(std::string_view text);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Denominator as a machine integer; throws if it does not fit.
  long den_long() const;
  /// Value as a machine integer; throws unless integral and in range.
  long to_long() const;

  Rat pow(long exponent) const;
  Rat abs() const { return Rat(mpq_class(::abs(q_))); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// "p/q" in lowest terms, or "p" when integral.
  std::string str() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

long lcm_checked(long a, long b);

/// A rational value or +infinity. Used for orders and valuations, where the
/// zero polynomial has no finite order.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  static Valuation finite(Rat v) { return Valuation(std::move(v)); }

  bool is_infinite() const { return !value_.has_value(); }
  const Rat& value() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

  /// Rational string, or "inf".
  std::string str() const;

 private:
  Valuation() = default;
  explicit Valuation(Rat v) : value_(std::move(v)) {}
  std::optional<Rat> value_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

}  // namespace puiseux
