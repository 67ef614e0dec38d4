#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "racahmw/lpbound.hpp"

using namespace rmw;

namespace {

LinearConstraint unit_row(int n, int a, Relation rel, Rational rhs) {
  std::vector<Rational> c(n + 1, Rational(0));
  c[a] = 1;
  return {std::move(c), rel, std::move(rhs), ""};
}

// A = (dimV e_0 + d) / (dimV + 1) satisfies B = A exactly, so it lies in
// the default profile's feasible region at every distance.
std::vector<Rational> fixed_point(const ModelParams& params) {
  const Rational scale = Rational(1) / Rational(dim_vn(params) + 1);
  std::vector<Rational> A(params.n + 1);
  for (int a = 0; a <= params.n; ++a) A[a] = scale * Rational(sector_dim(params, a));
  A[0] += scale * Rational(dim_vn(params));
  return A;
}

}  // namespace

TEST_CASE("profile parsing") {
  CHECK(parse_profile("enumerator") == LPProfile::Enumerator);
  CHECK_THROWS_AS(parse_profile("shadow"), ProfileUnknown);
}

TEST_CASE("build validation") {
  const ModelParams params(2, 2);
  const MacWilliamsMatrix M = build_matrix(params);
  CHECK_THROWS_AS(build_lp({ModelParams(2, 3), 1, LPProfile::Enumerator, {}}, M),
                  DimensionMismatch);
  CHECK_THROWS_AS(build_lp({params, 0, LPProfile::Enumerator, {}}, M),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_lp({params, 4, LPProfile::Enumerator, {}}, M),
                  std::invalid_argument);

  LPInstance bad{params, 1, LPProfile::Enumerator, {}};
  bad.extra.push_back({{Rational(1)}, Relation::Equal, Rational(0), ""});
  CHECK_THROWS_AS(build_lp(bad, M), DimensionMismatch);

  // distance d adds equality rows for 1 <= a < d on top of the profile
  const auto sys1 = build_lp({params, 1, LPProfile::Enumerator, {}}, M);
  const auto sys3 = build_lp({params, 3, LPProfile::Enumerator, {}}, M);
  CHECK(sys3.rows.size() == sys1.rows.size() + 2);
}

TEST_CASE("the fixed point is feasible at every distance") {
  for (auto [q, n] : {std::pair{2, 2}, {2, 5}, {3, 4}}) {
    const ModelParams params(q, n);
    const MacWilliamsMatrix M = build_matrix(params);
    const auto A = fixed_point(params);
    for (int distance = 1; distance <= n + 1; ++distance) {
      const auto sys = build_lp({params, distance, LPProfile::Enumerator, {}}, M);
      CHECK(satisfies(sys, A));
    }
  }
}

TEST_CASE("distance-1 instances are feasible with sound certificates") {
  for (auto [q, n] : {std::pair{2, 1}, {2, 4}, {3, 3}, {4, 2}, {5, 1}}) {
    const ModelParams params(q, n);
    const MacWilliamsMatrix M = build_matrix(params);
    const auto sys = build_lp({params, 1, LPProfile::Enumerator, {}}, M);
    const LPResult result = solve_feasibility(sys);
    REQUIRE(result.status == LPStatus::Feasible);
    CHECK(satisfies(sys, result.point->A));

    // B is the exact transform of A
    for (int bb = 0; bb <= n; ++bb) {
      Rational expect = 0;
      for (int a = 0; a <= n; ++a) expect += M.at(bb, a) * result.point->A[a];
      CHECK(result.point->B[bb] == expect);
    }
  }
}

TEST_CASE("transform consistency of feasible points") {
  // M(M A) = A, so applying M to B recovers A exactly
  const ModelParams params(3, 4);
  const MacWilliamsMatrix M = build_matrix(params);
  const auto sys = build_lp({params, 2, LPProfile::Enumerator, {}}, M);
  const LPResult result = solve_feasibility(sys);
  REQUIRE(result.status == LPStatus::Feasible);
  for (int bb = 0; bb <= 4; ++bb) {
    Rational back = 0;
    for (int a = 0; a <= 4; ++a) back += M.at(bb, a) * result.point->B[a];
    CHECK(back == result.point->A[bb]);
  }
}

TEST_CASE("contradictory extras are infeasible with a Farkas certificate") {
  const ModelParams params(2, 2);
  const MacWilliamsMatrix M = build_matrix(params);
  LPInstance instance{params, 1, LPProfile::Enumerator, {}};
  instance.extra.push_back(unit_row(2, 1, Relation::GreaterEq, Rational(1)));
  instance.extra.push_back(unit_row(2, 1, Relation::LessEq, Rational(0)));
  const auto sys = build_lp(instance, M);
  const LPResult result = solve_feasibility(sys);
  REQUIRE(result.status == LPStatus::Infeasible);
  REQUIRE(result.farkas.has_value());
  CHECK(certifies_infeasibility(sys, *result.farkas));
  CHECK(result.farkas->contradiction.sign() > 0);
}

TEST_CASE("extras pinning the point propagate into B") {
  const ModelParams params(2, 2);
  const MacWilliamsMatrix M = build_matrix(params);
  const auto target = fixed_point(params);  // (1, 3/4, 5/4)

  LPInstance instance{params, 1, LPProfile::Enumerator, {}};
  for (int a = 1; a <= 2; ++a)
    instance.extra.push_back(unit_row(2, a, Relation::Equal, target[a]));
  const auto sys = build_lp(instance, M);
  const LPResult result = solve_feasibility(sys);
  REQUIRE(result.status == LPStatus::Feasible);
  CHECK(result.point->A == target);
  CHECK(result.point->B == target);  // fixed point of the transform
}

TEST_CASE("forcing the unit vector exposes the dual column") {
  // Pinning A = e_0 forces B = column 0 = (d_b/dimV)_b, whose leading
  // entry 1/dimV < 1 = A_0 violates dual domination: infeasible.
  const ModelParams params(2, 2);
  const MacWilliamsMatrix M = build_matrix(params);
  LPInstance instance{params, 1, LPProfile::Enumerator, {}};
  for (int a = 1; a <= 2; ++a)
    instance.extra.push_back(unit_row(2, a, Relation::Equal, Rational(0)));
  const auto sys = build_lp(instance, M);
  const LPResult result = solve_feasibility(sys);
  // B_0 = 1/dimV < 1 = A_0 violates dual domination at index 0: infeasible
  REQUIRE(result.status == LPStatus::Infeasible);
  CHECK(certifies_infeasibility(sys, *result.farkas));
}

TEST_CASE("monotonicity in the distance") {
  const ModelParams params(3, 4);
  const MacWilliamsMatrix M = build_matrix(params);
  for (int distance = 1; distance <= 4; ++distance) {
    const auto tighter = build_lp({params, distance + 1, LPProfile::Enumerator, {}}, M);
    const auto looser = build_lp({params, distance, LPProfile::Enumerator, {}}, M);
    const LPResult result = solve_feasibility(tighter);
    if (result.status == LPStatus::Feasible) CHECK(satisfies(looser, result.point->A));
  }
}

TEST_CASE("regression: q=2, n=2, distance=3") {
  const ModelParams params(2, 2);
  const MacWilliamsMatrix M = build_matrix(params);
  const auto sys = build_lp({params, 3, LPProfile::Enumerator, {}}, M);
  const LPResult result = solve_feasibility(sys);
  REQUIRE(result.status == LPStatus::Feasible);
  // frozen output of the deterministic pivot order
  CHECK(result.point->A == std::vector<Rational>{Rational(1), Rational(2), Rational(0)});
  CHECK(result.point->B == result.point->A);
}

TEST_CASE("certificates stay sound under random extras") {
  std::mt19937 rng(321);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> rel(0, 2);
  std::uniform_int_distribution<int> rhs(-2, 4);
  std::uniform_int_distribution<int> extras(1, 4);

  const ModelParams params(2, 3);
  const MacWilliamsMatrix M = build_matrix(params);
  int feasible_seen = 0, infeasible_seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    LPInstance instance{params, 1, LPProfile::Enumerator, {}};
    const int count = extras(rng);
    for (int e = 0; e < count; ++e) {
      LinearConstraint c;
      c.coeffs.resize(4);
      for (auto& v : c.coeffs) v = Rational(coeff(rng));
      c.rel = static_cast<Relation>(rel(rng));
      c.rhs = Rational(rhs(rng));
      instance.extra.push_back(std::move(c));
    }
    const auto sys = build_lp(instance, M);
    const LPResult result = solve_feasibility(sys);
    if (result.status == LPStatus::Feasible) {
      ++feasible_seen;
      CHECK(satisfies(sys, result.point->A));
    } else {
      ++infeasible_seen;
      CHECK(certifies_infeasibility(sys, *result.farkas));
    }
  }
  CHECK(feasible_seen > 0);
  CHECK(infeasible_seen > 0);
}

TEST_CASE("solver is deterministic") {
  const ModelParams params(3, 3);
  const MacWilliamsMatrix M = build_matrix(params);
  const auto sys = build_lp({params, 2, LPProfile::Enumerator, {}}, M);
  const LPResult r1 = solve_feasibility(sys);
  const LPResult r2 = solve_feasibility(sys);
  REQUIRE(r1.status == r2.status);
  REQUIRE(r1.status == LPStatus::Feasible);
  CHECK(r1.point->A == r2.point->A);
}
