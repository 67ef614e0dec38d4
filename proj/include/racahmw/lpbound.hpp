// Exact-rational feasibility harness for Delsarte-style constraint systems
// driven by the transform: variables are the primal sector counts A_a, the
// dual counts B = M*A are derived, and feasibility is decided by an exact
// phase-one simplex with Bland's rule. Infeasibility is certified by an
// exact Farkas combination.
//
// The default "enumerator" profile is a convention of this tool, not a
// consequence of the transform theory; every constraint can be overridden
// or extended through the extra-constraint mechanism.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "racahmw/transform.hpp"

namespace rmw {

class ProfileUnknown : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Relation { LessEq, Equal, GreaterEq };

struct LinearConstraint {
  std::vector<Rational> coeffs;  // over A_0..A_n
  Relation rel;
  Rational rhs;
  std::string tag;
};

enum class LPProfile { Enumerator };

/// Parses a profile name ("enumerator"); throws ProfileUnknown otherwise.
LPProfile parse_profile(const std::string& name);
std::string profile_name(LPProfile profile);

struct LPInstance {
  ModelParams params;
  int distance = 1;  // 1 <= distance <= n+1
  LPProfile profile = LPProfile::Enumerator;
  std::vector<LinearConstraint> extra;
};

struct ConstraintSystem {
  int num_vars = 0;  // n+1
  std::vector<LinearConstraint> rows;
  MacWilliamsMatrix transform;  // for deriving B from a primal point
};

enum class LPStatus { Feasible, Infeasible };

struct FeasiblePoint {
  std::vector<Rational> A;
  std::vector<Rational> B;  // = M*A
};

/// Multipliers lambda_i, one per system row, with lambda >= 0 on >=-rows,
/// lambda <= 0 on <=-rows, free on =-rows, such that sum_i lambda_i *
/// coeffs_i = 0 while sum_i lambda_i * rhs_i > 0.
struct FarkasCertificate {
  std::vector<Rational> multipliers;
  Rational contradiction;  // the strictly positive combined right-hand side
};

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  std::optional<FeasiblePoint> point;
  std::optional<FarkasCertificate> farkas;
};

/// Assembles the profile constraints (normalization A_0 = 1, nonnegativity
/// of A and of B = M*A, dual domination B >= A, equality B_a = A_a for
/// 1 <= a < distance) plus any extra rows.
ConstraintSystem build_lp(const LPInstance& instance, const MacWilliamsMatrix& M);

/// Exact phase-one simplex, deterministic under Bland's rule. The returned
/// certificate is re-verified before being handed back.
LPResult solve_feasibility(const ConstraintSystem& system);

/// Exact re-substitution of a primal point into every row.
bool satisfies(const ConstraintSystem& system, const std::vector<Rational>& A);

/// Exact contraction of a Farkas certificate against the rows.
bool certifies_infeasibility(const ConstraintSystem& system, const FarkasCertificate& cert);

}  // namespace rmw
