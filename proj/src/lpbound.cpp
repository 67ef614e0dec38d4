#include "racahmw/lpbound.hpp"

#include <algorithm>

namespace rmw {

LPProfile parse_profile(const std::string& name) {
  if (name == "enumerator") return LPProfile::Enumerator;
  throw ProfileUnknown("unknown constraint profile: " + name);
}

std::string profile_name(LPProfile) { return "enumerator"; }

ConstraintSystem build_lp(const LPInstance& instance, const MacWilliamsMatrix& M) {
  const int n = instance.params.n;
  if (M.params.q != instance.params.q || M.params.n != instance.params.n)
    throw DimensionMismatch("transform parameters do not match the instance");
  if (instance.distance < 1 || instance.distance > n + 1)
    throw std::invalid_argument("distance must be in [1, n+1]");

  ConstraintSystem sys{n + 1, {}, M};

  auto unit = [&](int a) {
    std::vector<Rational> c(n + 1, Rational(0));
    c[a] = 1;
    return c;
  };

  sys.rows.push_back({unit(0), Relation::Equal, Rational(1), "A0=1"});
  for (int a = 0; a <= n; ++a)
    sys.rows.push_back({unit(a), Relation::GreaterEq, Rational(0),
                        "A" + std::to_string(a) + ">=0"});
  for (int b = 0; b <= n; ++b)
    sys.rows.push_back({M.entries[b], Relation::GreaterEq, Rational(0),
                        "B" + std::to_string(b) + ">=0"});
  for (int b = 0; b <= n; ++b) {
    std::vector<Rational> c = M.entries[b];
    c[b] -= 1;
    sys.rows.push_back({std::move(c), Relation::GreaterEq, Rational(0),
                        "B" + std::to_string(b) + ">=A" + std::to_string(b)});
  }
  for (int a = 1; a < instance.distance; ++a) {
    std::vector<Rational> c = M.entries[a];
    c[a] -= 1;
    sys.rows.push_back({std::move(c), Relation::Equal, Rational(0),
                        "B" + std::to_string(a) + "=A" + std::to_string(a)});
  }
  for (std::size_t i = 0; i < instance.extra.size(); ++i) {
    const auto& extra = instance.extra[i];
    if (static_cast<int>(extra.coeffs.size()) != n + 1)
      throw DimensionMismatch("extra constraint " + std::to_string(i) + " has " +
                              std::to_string(extra.coeffs.size()) + " coefficients, needs " +
                              std::to_string(n + 1));
    auto row = extra;
    if (row.tag.empty()) row.tag = "extra" + std::to_string(i);
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

bool satisfies(const ConstraintSystem& system, const std::vector<Rational>& A) {
  if (static_cast<int>(A.size()) != system.num_vars) return false;
  for (const auto& row : system.rows) {
    Rational lhs = 0;
    for (int j = 0; j < system.num_vars; ++j) lhs += row.coeffs[j] * A[j];
    switch (row.rel) {
      case Relation::LessEq:
        if (!(lhs <= row.rhs)) return false;
        break;
      case Relation::Equal:
        if (lhs != row.rhs) return false;
        break;
      case Relation::GreaterEq:
        if (!(lhs >= row.rhs)) return false;
        break;
    }
  }
  return true;
}

bool certifies_infeasibility(const ConstraintSystem& system, const FarkasCertificate& cert) {
  if (cert.multipliers.size() != system.rows.size()) return false;
  for (std::size_t i = 0; i < system.rows.size(); ++i) {
    const Rational& m = cert.multipliers[i];
    if (system.rows[i].rel == Relation::GreaterEq && m.sign() < 0) return false;
    if (system.rows[i].rel == Relation::LessEq && m.sign() > 0) return false;
  }
  std::vector<Rational> combined(system.num_vars, Rational(0));
  Rational rhs = 0;
  for (std::size_t i = 0; i < system.rows.size(); ++i) {
    if (cert.multipliers[i].is_zero()) continue;
    for (int j = 0; j < system.num_vars; ++j)
      combined[j] += cert.multipliers[i] * system.rows[i].coeffs[j];
    rhs += cert.multipliers[i] * system.rows[i].rhs;
  }
  for (const auto& c : combined)
    if (!c.is_zero()) return false;
  return rhs.sign() > 0;
}

namespace {

// Dense phase-one tableau over exact rationals. Variables covered by an
// explicit unit row "x_j >= 0" enter the tableau directly as nonnegative
// columns and the covering row is lifted out (its Farkas multiplier is the
// optimal reduced cost of that column); remaining variables are split into
// nonnegative pairs. One slack per inequality row, one artificial per row;
// rightmost column is the right-hand side.
struct Tableau {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> reduced;  // reduced-cost row for min(sum of artificials)
  std::vector<int> basis;         // column basic in each row
  int cols = 0;                   // excluding rhs

  Rational& rhs(int i) { return rows[i].back(); }
};

bool is_unit_bound_row(const LinearConstraint& row, int j) {
  if (row.rel != Relation::GreaterEq || !row.rhs.is_zero()) return false;
  for (std::size_t k = 0; k < row.coeffs.size(); ++k) {
    const Rational expected = (static_cast<int>(k) == j) ? Rational(1) : Rational(0);
    if (row.coeffs[k] != expected) return false;
  }
  return true;
}

}  // namespace

LPResult solve_feasibility(const ConstraintSystem& system) {
  const int total_rows = static_cast<int>(system.rows.size());
  const int nv = system.num_vars;

  // variables with a covering unit bound row need no sign split
  std::vector<int> bound_row(nv, -1);
  for (int i = 0; i < total_rows; ++i)
    for (int j = 0; j < nv; ++j)
      if (bound_row[j] < 0 && is_unit_bound_row(system.rows[i], j)) bound_row[j] = i;

  std::vector<int> tableau_rows;  // original indices of rows kept in the tableau
  {
    std::vector<char> lifted(total_rows, 0);
    for (int j = 0; j < nv; ++j)
      if (bound_row[j] >= 0) lifted[bound_row[j]] = 1;
    for (int i = 0; i < total_rows; ++i)
      if (!lifted[i]) tableau_rows.push_back(i);
  }
  const int m = static_cast<int>(tableau_rows.size());

  std::vector<int> col_pos(nv), col_neg(nv, -1);
  int next_col = 0;
  for (int j = 0; j < nv; ++j) {
    col_pos[j] = next_col++;
    if (bound_row[j] < 0) col_neg[j] = next_col++;
  }
  int num_slacks = 0;
  for (int i : tableau_rows)
    if (system.rows[i].rel != Relation::Equal) ++num_slacks;
  const int col_slack = next_col;
  const int col_art = col_slack + num_slacks;
  const int cols = col_art + m;

  Tableau t;
  t.cols = cols;
  t.rows.assign(m, std::vector<Rational>(cols + 1, Rational(0)));
  t.basis.resize(m);

  std::vector<int> flip(m, 1);
  int slack = 0;
  for (int i = 0; i < m; ++i) {
    const auto& row = system.rows[tableau_rows[i]];
    const bool negate = row.rhs.sign() < 0;
    if (negate) flip[i] = -1;
    const Rational sgn(flip[i]);
    for (int j = 0; j < nv; ++j) {
      t.rows[i][col_pos[j]] = sgn * row.coeffs[j];
      if (col_neg[j] >= 0) t.rows[i][col_neg[j]] = -t.rows[i][col_pos[j]];
    }
    if (row.rel != Relation::Equal) {
      const int dir = (row.rel == Relation::GreaterEq) ? -1 : 1;
      t.rows[i][col_slack + slack++] = sgn * Rational(dir);
    }
    t.rows[i][col_art + i] = 1;
    t.rhs(i) = sgn * row.rhs;
    t.basis[i] = col_art + i;
  }

  // reduced costs r_j = c_j - sum_i T[i][j] with all-artificial basis
  t.reduced.assign(cols + 1, Rational(0));
  for (int j = 0; j <= cols; ++j) {
    Rational s = 0;
    for (int i = 0; i < m; ++i) s += t.rows[i][j];
    t.reduced[j] = -s;
  }
  for (int i = 0; i < m; ++i) t.reduced[col_art + i] += 1;

  // Dantzig pivoting while the objective makes progress; a stall of
  // stall_limit pivots (degeneracy) switches permanently to Bland's rule,
  // which cannot cycle, so termination is guaranteed either way.
  const int stall_limit = m + 16;
  bool bland_mode = false;
  int stall = 0;
  Rational prev_objective = -t.reduced[cols];
  for (;;) {
    int enter = -1;
    if (bland_mode) {
      for (int j = 0; j < cols; ++j)
        if (t.reduced[j].sign() < 0) {
          enter = j;
          break;
        }
    } else {
      for (int j = 0; j < cols; ++j)
        if (t.reduced[j].sign() < 0 && (enter < 0 || t.reduced[j] < t.reduced[enter]))
          enter = j;
    }
    if (enter < 0) break;

    // ratio test, ties broken by smallest basic variable index
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (t.rows[i][enter].sign() <= 0) continue;
      Rational ratio = t.rhs(i) / t.rows[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && t.basis[i] < t.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0)
      throw std::logic_error("phase-one objective unbounded");  // cannot happen

    // pivot
    const Rational pivot = t.rows[leave][enter];
    for (auto& v : t.rows[leave]) v /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t.rows[i][enter].is_zero()) continue;
      const Rational f = t.rows[i][enter];
      for (int j = 0; j <= cols; ++j) t.rows[i][j] -= f * t.rows[leave][j];
    }
    if (!t.reduced[enter].is_zero()) {
      const Rational f = t.reduced[enter];
      for (int j = 0; j <= cols; ++j) t.reduced[j] -= f * t.rows[leave][j];
    }
    t.basis[leave] = enter;

    if (!bland_mode) {
      const Rational objective_now = -t.reduced[cols];
      if (objective_now == prev_objective) {
        if (++stall >= stall_limit) bland_mode = true;
      } else {
        stall = 0;
        prev_objective = objective_now;
      }
    }
  }

  Rational objective = 0;
  for (int i = 0; i < m; ++i)
    if (t.basis[i] >= col_art) objective += t.rhs(i);

  LPResult result;
  if (objective.is_zero()) {
    std::vector<Rational> A(nv, Rational(0));
    std::vector<int> var_of_col(col_slack, -1);  // structural column -> variable
    for (int j = 0; j < nv; ++j) {
      var_of_col[col_pos[j]] = j;
      if (col_neg[j] >= 0) var_of_col[col_neg[j]] = j;
    }
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] >= col_slack) continue;
      const int j = var_of_col[t.basis[i]];
      if (t.basis[i] == col_pos[j]) A[j] += t.rhs(i);
      else A[j] -= t.rhs(i);
    }
    if (!satisfies(system, A))
      throw std::logic_error("simplex returned an invalid feasible point");
    FeasiblePoint point;
    point.B.assign(nv, Rational(0));
    for (int b = 0; b < nv; ++b)
      for (int a = 0; a < nv; ++a) point.B[b] += system.transform.at(b, a) * A[a];
    point.A = std::move(A);
    result.status = LPStatus::Feasible;
    result.point = std::move(point);
  } else {
    // dual multipliers: pi_i = 1 - reduced cost of artificial i, mapped
    // back through the row sign normalization; a lifted bound row takes
    // the optimal reduced cost of its column as multiplier
    FarkasCertificate cert;
    cert.multipliers.assign(total_rows, Rational(0));
    for (int i = 0; i < m; ++i)
      cert.multipliers[tableau_rows[i]] =
          Rational(flip[i]) * (Rational(1) - t.reduced[col_art + i]);
    for (int j = 0; j < nv; ++j)
      if (bound_row[j] >= 0) cert.multipliers[bound_row[j]] = t.reduced[col_pos[j]];
    cert.contradiction = 0;
    for (int i = 0; i < total_rows; ++i)
      cert.contradiction += cert.multipliers[i] * system.rows[i].rhs;
    if (!certifies_infeasibility(system, cert))
      throw std::logic_error("simplex returned an invalid Farkas certificate");
    result.status = LPStatus::Infeasible;
    result.farkas = std::move(cert);
  }
  return result;
}

}  // namespace rmw
