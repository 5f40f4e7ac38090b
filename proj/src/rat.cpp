#include "puiseux/rat.hpp"

#include <limits>
#include <numeric>

namespace puiseux {

Rat::Rat(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat::Rat(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  auto is_int = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char ch : t)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-')
    throw Error("malformed rational '" + s + "'");
  return Rat(mpz_class(num), mpz_class(den));
}

long Rat::den_long() const {
  const mpz_class d = q_.get_den();
  if (!d.fits_slong_p()) throw Error("denominator too large: " + str());
  return d.get_si();
}

long Rat::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p()) throw Error("not a machine integer: " + str());
  return q_.get_num().get_si();
}

Rat Rat::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw Error("zero to a negative power");
    return Rat(1) / pow(-exponent);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(n, d);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

long lcm_checked(long a, long b) {
  const long g = std::gcd(a, b);
  const long q = a / g;
  if (b != 0 && q > std::numeric_limits<long>::max() / b) throw Error("ramification overflow");
  return q * b;
}

const Rat& Valuation::value() const {
  if (!value_) throw Error("infinite valuation has no value");
  return *value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() == b.is_infinite() ? std::strong_ordering::equal
           : a.is_infinite()                  ? std::strong_ordering::greater
                                              : std::strong_ordering::less;
  }
  return *a.value_ <=> *b.value_;
}

std::string Valuation::str() const { return value_ ? value_->str() : "inf"; }

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.str(); }

}  // namespace puiseux
