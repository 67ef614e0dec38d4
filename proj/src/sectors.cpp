#include "racahmw/sectors.hpp"

namespace rmw {

ModelParams::ModelParams(int q_, int n_) : q(q_), n(n_) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  if (n < 0) throw std::invalid_argument("n must be >= 0");
}

BigInt dim_vn(const ModelParams& params) {
  return binomial(params.n + params.q - 1, params.n);
}

BigInt sector_dim(const ModelParams& params, int a) {
  const int q = params.q;
  if (a < 0 || a > params.n) throw std::invalid_argument("sector index out of range");
  BigInt binom = binomial(a + q - 2, q - 2);
  Rational d = Rational(BigInt(2 * a + q - 1), BigInt(q - 1)) * Rational(binom * binom);
  if (!d.is_integer()) throw NonInteger("sector_dim: non-integral dimension");
  return d.numerator();
}

std::pair<Rational, std::vector<Rational>> casimirs(const ModelParams& params) {
  const long q = params.q, n = params.n;
  Rational cV(BigInt(n * (q - 1) * (n + q)), BigInt(q));
  std::vector<Rational> c;
  c.reserve(n + 1);
  for (long a = 0; a <= n; ++a) c.emplace_back(2 * a * (a + q - 1));
  return {cV, c};
}

Rational racah_weight(const ModelParams& params, int a) {
  const long q = params.q;
  Rational ratio = pochhammer(Rational(q - 1), a) / pochhammer(Rational(1), a);  // (q-1)_a / a!
  return Rational(2 * a + q - 1, q - 1) * ratio * ratio;
}

SectorTable spectral_grid(const ModelParams& params) {
  if (params.n < 1) throw std::invalid_argument("spectral grid needs n >= 1");
  const long q = params.q, n = params.n;

  SectorTable t;
  t.dimV = dim_vn(params);
  t.d.reserve(n + 1);
  t.y.reserve(n + 1);
  t.x.reserve(n + 1);
  for (long a = 0; a <= n; ++a) {
    t.d.push_back(sector_dim(params, static_cast<int>(a)));
    t.y.push_back(BigInt(a * (a + q - 1)));
  }
  t.A = Rational(BigInt(q * q - 1), t.dimV);
  t.B = Rational(BigInt(q * (q * q - 1)), t.dimV * (n * (q - 1) * (n + q)));
  for (long a = 0; a <= n; ++a) t.x.push_back(t.A - t.B * Rational(t.y[a]));
  return t;
}

std::vector<Rational> casimir_grid(const ModelParams& params) {
  if (params.n < 1) throw std::invalid_argument("casimir grid needs n >= 1");
  auto [cV, c] = casimirs(params);
  Rational x0(BigInt(params.q * params.q - 1), dim_vn(params));
  std::vector<Rational> x;
  x.reserve(c.size());
  for (const auto& ca : c) x.push_back(x0 * (Rational(1) - ca / (Rational(2) * cV)));
  return x;
}

SectorTable make_sector_table(const ModelParams& params) {
  SectorTable t = spectral_grid(params);
  auto [cV, c] = casimirs(params);
  t.cV = cV;
  t.c = std::move(c);
  return t;
}

}  // namespace rmw
