#include "racahmw/exactnum.hpp"

#include <cctype>

namespace rmw {

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
  if (sgn(den) == 0) throw ZeroDenominator("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational Rational::from_string(std::string_view s) {
  // shape: [+-]digits[/digits], denominator unsigned and nonzero
  auto fail = [&] { throw std::invalid_argument("malformed rational: \"" + std::string(s) + "\""); };
  if (s.empty()) fail();
  std::size_t i = 0;
  if (s[i] == '-') ++i;
  std::size_t num_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_start) fail();
  if (i < s.size()) {
    if (s[i] != '/') fail();
    std::size_t den_start = ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_start || i != s.size()) fail();
  }
  mpq_class v;
  if (v.set_str(std::string(s), 10) != 0) fail();
  if (sgn(v.get_den()) == 0) throw ZeroDenominator("rational with zero denominator");
  v.canonicalize();
  Rational r;
  r.v_ = std::move(v);
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ZeroDenominator("division by zero");
  v_ /= o.v_;
  return *this;
}

BigInt binomial(long m, long k) {
  if (m < 0) throw std::invalid_argument("binomial: m must be non-negative");
  if (k < 0 || k > m) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return r;
}

Rational pochhammer(const Rational& z, unsigned long k) {
  Rational p = 1;
  Rational f = z;
  for (unsigned long j = 0; j < k; ++j) {
    p *= f;
    f += 1;
  }
  return p;
}

Rational hyp4f3_terminating(const std::array<Rational, 4>& num,
                            const std::array<Rational, 3>& den,
                            unsigned long kmax) {
  Rational sum = 1;
  Rational term = 1;
  for (unsigned long k = 0; k < kmax; ++k) {
    // ratio update: term_{k+1} = term_k * prod(num_j + k) / [prod(den_j + k) * (k+1)]
    Rational np = 1;
    for (const auto& p : num) np *= p + Rational(static_cast<long>(k));
    if (np.is_zero()) break;  // this and every later term vanish
    Rational dp = Rational(static_cast<long>(k) + 1);
    for (const auto& p : den) dp *= p + Rational(static_cast<long>(k));
    if (dp.is_zero())
      throw ZeroDenominator("hyp4f3_terminating: denominator Pochhammer vanishes at k=" +
                            std::to_string(k + 1));
    term *= np / dp;
    sum += term;
  }
  return sum;
}

}  // namespace rmw
