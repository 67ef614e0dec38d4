#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "racahmw/exactnum.hpp"

using namespace rmw;

namespace {

Rational random_rational(std::mt19937& rng, int lo = -20, int hi = 20, int den_hi = 12) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, den_hi);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 0) == 1);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  // q = 2, n = 5: C(n+q-1, n) = 6 = n+1
  CHECK(binomial(6, 5) == 6);
  CHECK(binomial(34, 4) == 46376);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(0), 0) == 1);
  CHECK(pochhammer(Rational(-7, 2), 0) == 1);
  CHECK(pochhammer(Rational(-3), 2) == 6);
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));  // 1/2 * 3/2 * 5/2

  // (q-1)_a / a! = C(a+q-2, q-2): the q = 3, a = 2 instance and a sweep
  CHECK(pochhammer(Rational(2), 2) / pochhammer(Rational(1), 2) == Rational(3));
  for (int q = 2; q <= 6; ++q)
    for (int a = 0; a <= 8; ++a)
      CHECK(pochhammer(Rational(q - 1), a) / pochhammer(Rational(1), a) ==
            Rational(binomial(a + q - 2, q - 2)));
}

TEST_CASE("pochhammer shift identity") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<unsigned> len(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational z = random_rational(rng);
    const unsigned j = len(rng), k = len(rng);
    CHECK(pochhammer(z, j + k) ==
          pochhammer(z, j) * pochhammer(z + Rational(static_cast<long>(j)), k));
  }
}

TEST_CASE("hyp4f3 terminating values") {
  // only the k = 0 term survives
  CHECK(hyp4f3_terminating({Rational(0), 5, -3, 7}, {Rational(2), -4, 9}, 0) == 1);

  // hand-summed two-term series (the q=2, n=2, b=2, a=1 parameter set)
  CHECK(hyp4f3_terminating({Rational(-2), 3, -1, 2}, {Rational(1), -2, 4}, 1) ==
        Rational(-1, 2));

  // first numerator -1: truncation after the linear term, against the
  // closed form 1 - q a(a+q-1) / (n(q-1)(n+q))
  for (long q = 2; q <= 6; ++q)
    for (long n = 1; n <= 8; ++n)
      for (long a = 0; a <= n; ++a) {
        const Rational got = hyp4f3_terminating(
            {Rational(-1), Rational(q), Rational(-a), Rational(a + q - 1)},
            {Rational(q - 1), Rational(-n), Rational(n + q)}, 1);
        const Rational expected =
            Rational(1) - Rational(q * a * (a + q - 1), n * (q - 1) * (n + q));
        CHECK(got == expected);
      }
}

TEST_CASE("hyp4f3 zero numerator wins over zero denominator") {
  // numerator factor vanishes at the same step the denominator would:
  // the term is zero, no error, later terms dropped
  const Rational v =
      hyp4f3_terminating({Rational(-1), 1, 1, 1}, {Rational(-1), 5, 5}, 2);
  CHECK(v == Rational(26, 25));  // 1 + (-1)/(-25)

  // live numerator product against a vanishing denominator factor
  CHECK_THROWS_AS(
      hyp4f3_terminating({Rational(1), 1, 1, 1}, {Rational(-1), 5, 5}, 2),
      ZeroDenominator);
}

TEST_CASE("hyp4f3 parameter permutation symmetry") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> khi(0, 6);
  std::uniform_int_distribution<int> pos(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<Rational, 4> num;
    for (auto& v : num) v = random_rational(rng, -6, 6, 4);
    std::array<Rational, 3> den;
    for (auto& v : den) v = Rational(pos(rng), 2);  // positive: always admissible
    const unsigned kmax = khi(rng);
    const Rational base = hyp4f3_terminating(num, den, kmax);

    std::array<Rational, 4> num2 = num;
    std::array<Rational, 3> den2 = den;
    std::shuffle(num2.begin(), num2.end(), rng);
    std::shuffle(den2.begin(), den2.end(), rng);
    CHECK(hyp4f3_terminating(num2, den2, kmax) == base);
  }
}

TEST_CASE("hyp4f3 numerator pair swap invariance") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> qd(2, 6), nd(1, 10);
  for (int trial = 0; trial < 150; ++trial) {
    const long q = qd(rng), n = nd(rng);
    std::uniform_int_distribution<long> ad(0, n);
    const long a = ad(rng), b = ad(rng);
    const std::array<Rational, 3> den = {Rational(q - 1), Rational(-n), Rational(n + q)};
    const unsigned kmax = std::min(a, b);
    const Rational lhs = hyp4f3_terminating(
        {Rational(-b), Rational(b + q - 1), Rational(-a), Rational(a + q - 1)}, den, kmax);
    const Rational rhs = hyp4f3_terminating(
        {Rational(-a), Rational(a + q - 1), Rational(-b), Rational(b + q - 1)}, den, kmax);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("rational canonical form") {
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(8, 4).str() == "2");
  CHECK_THROWS_AS(Rational(1, 0), ZeroDenominator);
  CHECK_THROWS_AS(Rational(1) / Rational(0), ZeroDenominator);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    Rational v = random_rational(rng);
    for (int step = 0; step < 4; ++step) {
      const Rational w = random_rational(rng);
      switch (step) {
        case 0: v += w; break;
        case 1: v -= w; break;
        case 2: v *= w; break;
        case 3: if (!w.is_zero()) v /= w; break;
      }
    }
    CHECK(v.denominator() > 0);
    CHECK(gcd(abs(v.numerator()), v.denominator()) == 1);
    CHECK(Rational::from_string(v.str()) == v);  // round-trip
  }
}

TEST_CASE("rational parsing") {
  CHECK(Rational::from_string("0") == Rational(0));
  CHECK(Rational::from_string("0/1") == Rational(0));
  CHECK(Rational::from_string("-5/6") == Rational(-5, 6));
  CHECK(Rational::from_string("2/4") == Rational(1, 2));  // canonicalized
  CHECK(Rational::from_string("17") == Rational(17));

  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1 /2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), ZeroDenominator);
}
