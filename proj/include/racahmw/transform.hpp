// Exact construction of the MacWilliams matrix for the twirl/projector
// basis pair, verification of its structural identities, row-polynomial
// reconstruction on the spectral grid, and extraction of the tridiagonal
// three-term recurrence coefficients.

#pragma once

#include <string>
#include <vector>

#include "racahmw/sectors.hpp"

namespace rmw {

class DegenerateGrid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when the recurrence system is solvable but some equation is not
/// satisfied by the solution — a violation of tridiagonality (never fires).
class InconsistentRecurrence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense (n+1)x(n+1) exact matrix, entries[b][a] = scalar by which the
/// degree-b twirl acts on sector a.
struct MacWilliamsMatrix {
  ModelParams params;
  std::vector<std::vector<Rational>> entries;

  int n() const { return params.n; }
  const Rational& at(int b, int a) const { return entries[b][a]; }
};

/// Tridiagonal coefficients of multiplication by the degree-one twirl:
///   x_a M[b][a] = forward[b] M[b+1][a] + diagonal[b] M[b][a] + backward[b-1] M[b-1][a]
/// forward has length n (b = 0..n-1), diagonal n+1 (b = 0..n),
/// backward n (entry b-1 holds the coefficient for row b, b = 1..n).
struct RecurrenceCoefficients {
  std::vector<Rational> forward;
  std::vector<Rational> diagonal;
  std::vector<Rational> backward;
};

struct CheckViolation {
  int i;
  int j;  // -1 for single-index checks
  std::string got;
  std::string expected;
};

/// Pass/fail of one structural identity, with the first few violating
/// entries as witnesses.
struct CheckReport {
  std::string check;
  bool pass = true;
  std::size_t violation_count = 0;
  std::vector<CheckViolation> witnesses;
  std::string note;  // set when a check aborts rather than compares

  void record(int i, int j, const Rational& got, const Rational& expected);
};

/// Polynomial with exact coefficients, ascending degree, trailing zeros trimmed.
using Polynomial = std::vector<Rational>;

Rational poly_eval(const Polynomial& p, const Rational& x);
int poly_degree(const Polynomial& p);  // degree of the zero polynomial is -1

/// entries[b][a] = (d_b/dimV) * 4F3(-b, b+q-1, -a, a+q-1; q-1, -n, n+q; 1),
/// the series truncated at k = min(a,b). The n = 0 model is the 1x1 identity.
MacWilliamsMatrix build_matrix(const ModelParams& params);

/// sum_a d_a M[b][a] M[c][a] = d_b delta_bc, exactly.
CheckReport verify_orthogonality(const MacWilliamsMatrix& M);

/// M * M = I, exactly.
CheckReport verify_involution(const MacWilliamsMatrix& M);

/// d_a M[b][a] = d_b M[a][b], exactly.
CheckReport verify_detailed_balance(const MacWilliamsMatrix& M);

/// Row 1 equals the spectral grid (n >= 1).
CheckReport check_row1(const MacWilliamsMatrix& M);

/// Column 0 equals d_b/dimV.
CheckReport check_col0(const MacWilliamsMatrix& M);

/// The affine-form grid and the Casimir-form grid agree entrywise and are
/// strictly decreasing (n >= 1).
CheckReport check_grid(const ModelParams& params);

/// Unique degree-<=n interpolant through {(x_a, M[b][a])} via the Lagrange
/// basis on the grid. Returns exact coefficients; degree is exactly b.
Polynomial row_polynomial(const MacWilliamsMatrix& M, const SectorTable& sectors, int b);

/// Solves the per-row linear systems for the three-term coefficients and
/// verifies every equation of the recurrence holds exactly (n >= 1).
RecurrenceCoefficients extract_recurrence(const MacWilliamsMatrix& M,
                                          const SectorTable& sectors);

/// Racah polynomial value R_b(y_a) with the normalization R_b(y_0) = 1;
/// satisfies M[b][a] = (d_b/dimV) * R_b(y_a).
Rational racah_polynomial_value(const ModelParams& params, int b, int a);

}  // namespace rmw
