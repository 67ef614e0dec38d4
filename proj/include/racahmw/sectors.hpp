// Per-sector scalar data of the operator-space decomposition on Sym^n(C^q):
// sector dimensions, the quadratic lattice, the spectral grid of the
// degree-one twirl, and the two Casimir eigenvalue closed forms.

#pragma once

#include <vector>

#include "racahmw/exactnum.hpp"

namespace rmw {

/// Thrown when a quantity required to be an exact integer is not
/// (indicates a bug; never fires for valid parameters).
class NonInteger : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Local dimension q >= 2 and block length n >= 0.
struct ModelParams {
  int q;
  int n;

  ModelParams(int q_, int n_);
};

/// All sector scalars for a model, indexed a = 0..n.
struct SectorTable {
  BigInt dimV;              // dim of the symmetric power
  std::vector<BigInt> d;    // sector dimensions d_a
  std::vector<BigInt> y;    // quadratic lattice y_a = a(a+q-1)
  std::vector<Rational> x;  // spectral grid, strictly decreasing
  Rational cV;              // ordinary Casimir on the symmetric power
  std::vector<Rational> c;  // conjugation Casimirs c_a = 2a(a+q-1)
  Rational A;               // x_a = A - B*y_a
  Rational B;
};

/// C(n+q-1, n).
BigInt dim_vn(const ModelParams& params);

/// d_a = (2a+q-1)/(q-1) * C(a+q-2, q-2)^2, an exact integer.
BigInt sector_dim(const ModelParams& params, int a);

/// cV = n(q-1)(n+q)/q and c_a = 2a(a+q-1) for a = 0..n.
std::pair<Rational, std::vector<Rational>> casimirs(const ModelParams& params);

/// Unnormalized Racah weight at a, computed through the Pochhammer form
/// (2a+q-1)/(q-1) * [(q-1)_a / a!]^2 — a code path independent of
/// sector_dim, with which it must agree exactly.
Rational racah_weight(const ModelParams& params, int a);

/// Spectral grid via the affine form x_a = A - B*y_a. Requires n >= 1
/// (the n = 0 model has no degree-one sector; matrix construction
/// special-cases it).
SectorTable spectral_grid(const ModelParams& params);

/// Spectral grid via the Casimir route (q^2-1)/dimV * (1 - c_a/(2 cV)),
/// kept as an independent code path for cross-checking.
std::vector<Rational> casimir_grid(const ModelParams& params);

/// Full table: dimensions, lattice, grid (affine form), Casimirs.
/// Requires n >= 1.
SectorTable make_sector_table(const ModelParams& params);

}  // namespace rmw
