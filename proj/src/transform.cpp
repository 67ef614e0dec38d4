#include "racahmw/transform.hpp"

#include <algorithm>

namespace rmw {

namespace {

constexpr std::size_t kMaxWitnesses = 8;

std::vector<BigInt> sector_dims(const ModelParams& params) {
  std::vector<BigInt> d;
  d.reserve(params.n + 1);
  for (int a = 0; a <= params.n; ++a) d.push_back(sector_dim(params, a));
  return d;
}

}  // namespace

void CheckReport::record(int i, int j, const Rational& got, const Rational& expected) {
  pass = false;
  ++violation_count;
  if (witnesses.size() < kMaxWitnesses)
    witnesses.push_back({i, j, got.str(), expected.str()});
}

Rational poly_eval(const Polynomial& p, const Rational& x) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

int poly_degree(const Polynomial& p) {
  for (std::size_t i = p.size(); i > 0; --i)
    if (!p[i - 1].is_zero()) return static_cast<int>(i - 1);
  return -1;
}

MacWilliamsMatrix build_matrix(const ModelParams& params) {
  const long q = params.q, n = params.n;
  MacWilliamsMatrix M{params, {}};
  if (n == 0) {
    M.entries = {{Rational(1)}};
    return M;
  }
  const BigInt dimV = dim_vn(params);
  const auto d = sector_dims(params);
  const std::array<Rational, 3> den = {Rational(q - 1), Rational(-n), Rational(n + q)};
  M.entries.assign(n + 1, std::vector<Rational>(n + 1));
  for (long b = 0; b <= n; ++b) {
    const Rational scale(d[b], dimV);
    for (long a = 0; a <= n; ++a) {
      const std::array<Rational, 4> num = {Rational(-b), Rational(b + q - 1), Rational(-a),
                                           Rational(a + q - 1)};
      M.entries[b][a] = scale * hyp4f3_terminating(num, den, std::min(a, b));
    }
  }
  return M;
}

CheckReport verify_orthogonality(const MacWilliamsMatrix& M) {
  CheckReport report{"orthogonality"};
  const int n = M.n();
  const auto d = sector_dims(M.params);
  for (int b = 0; b <= n; ++b) {
    for (int c = b; c <= n; ++c) {
      Rational sum = 0;
      for (int a = 0; a <= n; ++a) sum += Rational(d[a]) * M.at(b, a) * M.at(c, a);
      const Rational expected = (b == c) ? Rational(d[b]) : Rational(0);
      if (sum != expected) report.record(b, c, sum, expected);
    }
  }
  return report;
}

CheckReport verify_involution(const MacWilliamsMatrix& M) {
  CheckReport report{"involution"};
  const int n = M.n();
  for (int b = 0; b <= n; ++b) {
    for (int c = 0; c <= n; ++c) {
      Rational sum = 0;
      for (int a = 0; a <= n; ++a) sum += M.at(b, a) * M.at(a, c);
      const Rational expected = (b == c) ? Rational(1) : Rational(0);
      if (sum != expected) report.record(b, c, sum, expected);
    }
  }
  return report;
}

CheckReport verify_detailed_balance(const MacWilliamsMatrix& M) {
  CheckReport report{"detailed_balance"};
  const int n = M.n();
  const auto d = sector_dims(M.params);
  for (int b = 0; b <= n; ++b)
    for (int a = b + 1; a <= n; ++a) {
      const Rational lhs = Rational(d[a]) * M.at(b, a);
      const Rational rhs = Rational(d[b]) * M.at(a, b);
      if (lhs != rhs) report.record(b, a, lhs, rhs);
    }
  return report;
}

CheckReport check_row1(const MacWilliamsMatrix& M) {
  if (M.n() < 1) throw std::invalid_argument("row-1 check needs n >= 1");
  CheckReport report{"row1"};
  const SectorTable t = spectral_grid(M.params);
  for (int a = 0; a <= M.n(); ++a)
    if (M.at(1, a) != t.x[a]) report.record(a, -1, M.at(1, a), t.x[a]);
  return report;
}

CheckReport check_col0(const MacWilliamsMatrix& M) {
  CheckReport report{"col0"};
  const BigInt dimV = dim_vn(M.params);
  for (int b = 0; b <= M.n(); ++b) {
    const Rational expected(sector_dim(M.params, b), dimV);
    if (M.at(b, 0) != expected) report.record(b, -1, M.at(b, 0), expected);
  }
  return report;
}

CheckReport check_grid(const ModelParams& params) {
  if (params.n < 1) throw std::invalid_argument("grid check needs n >= 1");
  CheckReport report{"grid"};
  const SectorTable t = spectral_grid(params);
  const auto via_casimir = casimir_grid(params);
  for (int a = 0; a <= params.n; ++a)
    if (t.x[a] != via_casimir[a]) report.record(a, -1, t.x[a], via_casimir[a]);
  for (int a = 0; a < params.n; ++a)
    if (!(t.x[a] > t.x[a + 1])) report.record(a, a + 1, t.x[a], t.x[a + 1]);
  return report;
}

Polynomial row_polynomial(const MacWilliamsMatrix& M, const SectorTable& sectors, int b) {
  const int n = M.n();
  if (n < 1) throw std::invalid_argument("row polynomial needs n >= 1");
  if (b < 0 || b > n) throw std::invalid_argument("row index out of range");
  const auto& x = sectors.x;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (x[i] == x[j]) throw DegenerateGrid("coincident grid nodes");

  // master polynomial W(t) = prod_a (t - x_a)
  Polynomial master{Rational(1)};
  for (int a = 0; a <= n; ++a) {
    Polynomial next(master.size() + 1);
    for (std::size_t i = 0; i < master.size(); ++i) {
      next[i + 1] += master[i];
      next[i] -= x[a] * master[i];
    }
    master = std::move(next);
  }

  Polynomial acc(n + 1, Rational(0));
  Polynomial basis(n + 1);  // W(t)/(t - x_a) by synthetic division
  for (int a = 0; a <= n; ++a) {
    Rational carry = master[n + 1];
    for (int i = n; i >= 0; --i) {
      basis[i] = carry;
      carry = master[i] + x[a] * carry;
    }
    const Rational denom = poly_eval(basis, x[a]);  // prod_{c != a} (x_a - x_c)
    const Rational weight = M.at(b, a) / denom;
    for (int i = 0; i <= n; ++i) acc[i] += weight * basis[i];
  }
  while (acc.size() > 1 && acc.back().is_zero()) acc.pop_back();
  return acc;
}

namespace {

// Exact solve of the overdetermined system sys * u = rhs (m x k, m >= k).
// Throws SingularSystem when rank < k; the caller re-verifies consistency
// against the original data.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> sys,
                                  std::vector<Rational> rhs) {
  const std::size_t m = sys.size();
  const std::size_t k = sys.empty() ? 0 : sys[0].size();
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_of_col(k);
  for (std::size_t col = 0; col < k && pivot_row < m; ++col) {
    std::size_t sel = pivot_row;
    while (sel < m && sys[sel][col].is_zero()) ++sel;
    if (sel == m) throw SingularSystem("recurrence system is rank-deficient");
    std::swap(sys[sel], sys[pivot_row]);
    std::swap(rhs[sel], rhs[pivot_row]);
    for (std::size_t r = pivot_row + 1; r < m; ++r) {
      if (sys[r][col].is_zero()) continue;
      const Rational f = sys[r][col] / sys[pivot_row][col];
      for (std::size_t cc = col; cc < k; ++cc) sys[r][cc] -= f * sys[pivot_row][cc];
      rhs[r] -= f * rhs[pivot_row];
    }
    pivot_of_col[col] = pivot_row;
    ++pivot_row;
  }
  if (pivot_row < k) throw SingularSystem("recurrence system is rank-deficient");

  std::vector<Rational> u(k);
  for (std::size_t col = k; col > 0; --col) {
    const std::size_t c = col - 1;
    const std::size_t r = pivot_of_col[c];
    Rational v = rhs[r];
    for (std::size_t cc = c + 1; cc < k; ++cc) v -= sys[r][cc] * u[cc];
    u[c] = v / sys[r][c];
  }
  return u;
}

}  // namespace

RecurrenceCoefficients extract_recurrence(const MacWilliamsMatrix& M,
                                          const SectorTable& sectors) {
  const int n = M.n();
  if (n < 1) throw std::invalid_argument("recurrence extraction needs n >= 1");
  RecurrenceCoefficients coeffs;
  coeffs.forward.resize(n);
  coeffs.diagonal.resize(n + 1);
  coeffs.backward.resize(n);

  for (int b = 0; b <= n; ++b) {
    const bool has_fwd = b < n;
    const bool has_bwd = b > 0;
    std::vector<int> rows;  // matrix rows backing each unknown, order: fwd, diag, bwd
    if (has_fwd) rows.push_back(b + 1);
    rows.push_back(b);
    if (has_bwd) rows.push_back(b - 1);

    std::vector<std::vector<Rational>> sys(n + 1, std::vector<Rational>(rows.size()));
    std::vector<Rational> rhs(n + 1);
    for (int a = 0; a <= n; ++a) {
      for (std::size_t u = 0; u < rows.size(); ++u) sys[a][u] = M.at(rows[u], a);
      rhs[a] = sectors.x[a] * M.at(b, a);
    }
    const auto u = solve_exact(sys, rhs);

    std::size_t idx = 0;
    if (has_fwd) coeffs.forward[b] = u[idx++];
    coeffs.diagonal[b] = u[idx++];
    if (has_bwd) coeffs.backward[b - 1] = u[idx++];

    // substitute back into every equation of the row recurrence
    for (int a = 0; a <= n; ++a) {
      Rational lhs = sectors.x[a] * M.at(b, a);
      Rational acc = coeffs.diagonal[b] * M.at(b, a);
      if (has_fwd) acc += coeffs.forward[b] * M.at(b + 1, a);
      if (has_bwd) acc += coeffs.backward[b - 1] * M.at(b - 1, a);
      if (lhs != acc)
        throw InconsistentRecurrence("nonzero residual at row " + std::to_string(b) +
                                     ", sector " + std::to_string(a));
    }
  }
  return coeffs;
}

Rational racah_polynomial_value(const ModelParams& params, int b, int a) {
  const long q = params.q, n = params.n;
  if (a < 0 || a > n || b < 0 || b > n) throw std::invalid_argument("index out of range");
  const std::array<Rational, 4> num = {Rational(-b), Rational(b + q - 1), Rational(-a),
                                       Rational(a + q - 1)};
  const std::array<Rational, 3> den = {Rational(q - 1), Rational(-n), Rational(n + q)};
  return hyp4f3_terminating(num, den, std::min(a, b));
}

}  // namespace rmw
