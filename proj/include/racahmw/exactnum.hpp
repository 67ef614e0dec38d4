// Exact rational arithmetic and the terminating hypergeometric kernel.
//
// Every scalar in the library that must be exact is a Rational: an
// arbitrary-precision fraction kept in canonical lowest terms (positive
// denominator, gcd(|num|, den) = 1, zero stored as 0/1). Arithmetic is
// backed by GMP; canonical form is an invariant of every operation.

#pragma once

#include <gmpxx.h>

#include <iosfwd>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rmw {

using BigInt = mpz_class;

/// Thrown when a fraction with zero denominator is formed, or when a
/// terminating hypergeometric sum hits a vanishing denominator Pochhammer
/// with a nonzero numerator product (parameters outside the valid regime).
class ZeroDenominator : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long v) : v_(v) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(const BigInt& v) : v_(v) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den);

  /// Strict parse of the serialization format: optional sign, decimal
  /// numerator, optional "/<positive decimal denominator>". "0" and "p/q"
  /// both accepted; input is canonicalized ("2/4" -> 1/2).
  static Rational from_string(std::string_view s);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Canonical decimal form: "p/q", integers without "/1", zero as "0".
  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
  }

 private:
  mpq_class v_;  // canonical: den > 0, gcd(|num|, den) = 1
};

/// C(m, k) exactly; 0 when k < 0 or k > m. Requires m >= 0.
BigInt binomial(long m, long k);

/// Rising factorial z(z+1)...(z+k-1); 1 when k = 0.
Rational pochhammer(const Rational& z, unsigned long k);

/// Terminating 4F3 at unit argument:
///   sum_{k=0}^{kmax} [prod_j (num_j)_k] / [prod_j (den_j)_k * k!].
/// A vanishing numerator factor truncates the sum (the term and all later
/// terms are zero before any denominator is touched). A vanishing
/// denominator factor with a live numerator product throws ZeroDenominator.
Rational hyp4f3_terminating(const std::array<Rational, 4>& num,
                            const std::array<Rational, 3>& den,
                            unsigned long kmax);

}  // namespace rmw
