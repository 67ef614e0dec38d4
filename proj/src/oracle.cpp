#include "racahmw/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "racahmw/transform.hpp"

namespace rmw {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

MatrixXcd unvec(const VectorXcd& v, int dim) {
  return Eigen::Map<const MatrixXcd>(v.data(), dim, dim);
}

// Split ascending eigenvalues into `clusters` groups at the largest gaps.
std::vector<std::pair<double, int>> cluster_spectrum(const VectorXd& eigs, int clusters) {
  const int m = static_cast<int>(eigs.size());
  std::vector<int> cut(m - 1);
  std::iota(cut.begin(), cut.end(), 0);
  std::sort(cut.begin(), cut.end(),
            [&](int i, int j) { return eigs[i + 1] - eigs[i] > eigs[j + 1] - eigs[j]; });
  cut.resize(clusters - 1);
  std::sort(cut.begin(), cut.end());

  std::vector<std::pair<double, int>> out;  // (mean, count), ascending
  int start = 0;
  for (int g = 0; g < clusters; ++g) {
    const int end = (g < clusters - 1) ? cut[g] + 1 : m;
    double mean = 0.0;
    for (int i = start; i < end; ++i) mean += eigs[i];
    out.emplace_back(mean / (end - start), end - start);
    start = end;
  }
  return out;
}

}  // namespace

SymBasis SymBasis::build(const ModelParams& params) {
  SymBasis basis;
  basis.q = params.q;
  basis.n = params.n;
  std::vector<int> occ(params.q, 0);
  // lexicographic enumeration of occupation vectors summing to n
  auto recurse = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == params.q - 1) {
      occ[pos] = remaining;
      basis.occupations.push_back(occ);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      occ[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  recurse(recurse, 0, params.n);
  return basis;
}

int SymBasis::index_of(const std::vector<int>& m) const {
  auto it = std::lower_bound(occupations.begin(), occupations.end(), m);
  if (it == occupations.end() || *it != m) throw std::invalid_argument("unknown monomial");
  return static_cast<int>(it - occupations.begin());
}

GeneratorSet build_generators(const ModelParams& params, int cap) {
  const int q = params.q;
  const BigInt dimV = dim_vn(params);
  if (dimV > cap)
    throw CapExceeded("dim " + dimV.get_str() + " exceeds cap " + std::to_string(cap));

  GeneratorSet gens{params, SymBasis::build(params), {}, 0.0, 0.0, 0.0, 0.0};
  const int dim = gens.basis.dim();

  // su(q) generators as q x q matrices, orthonormal under Tr(T S) = delta
  std::vector<MatrixXcd> su;
  const std::complex<double> I(0.0, 1.0);
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      MatrixXcd x = MatrixXcd::Zero(q, q), y = MatrixXcd::Zero(q, q);
      x(i, j) = x(j, i) = 1.0 / std::sqrt(2.0);
      y(i, j) = -I / std::sqrt(2.0);
      y(j, i) = I / std::sqrt(2.0);
      su.push_back(x);
      su.push_back(y);
    }
  for (int k = 1; k < q; ++k) {
    MatrixXcd dgen = MatrixXcd::Zero(q, q);
    const double s = 1.0 / std::sqrt(double(k) * (k + 1));
    for (int i = 0; i < k; ++i) dgen(i, i) = s;
    dgen(k, k) = -k * s;
    su.push_back(dgen);
  }

  // lift via a_i^dag a_j on occupation vectors
  for (const auto& t : su) {
    MatrixXcd J = MatrixXcd::Zero(dim, dim);
    for (int col = 0; col < dim; ++col) {
      const auto& m = gens.basis.occupations[col];
      for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
          if (t(i, j) == std::complex<double>(0.0)) continue;
          if (i == j) {
            J(col, col) += t(i, i) * double(m[i]);
          } else if (m[j] > 0) {
            std::vector<int> shifted = m;
            --shifted[j];
            ++shifted[i];
            const int row = gens.basis.index_of(shifted);
            J(row, col) += t(i, j) * std::sqrt(double(m[j]) * (m[i] + 1));
          }
        }
      }
    }
    gens.matrices.push_back(std::move(J));
  }

  // measure kappa and the defining properties
  const int g = static_cast<int>(gens.matrices.size());
  double kappa_sum = 0.0;
  for (const auto& J : gens.matrices) {
    kappa_sum += std::real((J * J).trace());
    gens.hermiticity = std::max(gens.hermiticity,
                                (J - J.adjoint()).cwiseAbs().maxCoeff());
    gens.tracelessness = std::max(gens.tracelessness, std::abs(J.trace()));
  }
  gens.kappa = kappa_sum / g;
  for (int mu = 0; mu < g; ++mu)
    for (int nu = 0; nu < g; ++nu) {
      const double overlap = std::real((gens.matrices[mu] * gens.matrices[nu]).trace());
      const double expected = (mu == nu) ? gens.kappa : 0.0;
      gens.orthonormality = std::max(gens.orthonormality, std::abs(overlap - expected));
    }
  return gens;
}

Eigen::MatrixXcd twirl_one(const GeneratorSet& gens) {
  if (gens.params.n < 1)
    throw std::invalid_argument("degree-one twirl needs n >= 1");
  const int dim = gens.basis.dim();
  MatrixXcd s = MatrixXcd::Zero(dim * dim, dim * dim);
  for (const auto& J : gens.matrices) s += kron(J.transpose(), J);
  return s / gens.kappa;
}

Eigen::MatrixXcd conjugation_casimir(const GeneratorSet& gens) {
  const int dim = gens.basis.dim();
  const MatrixXcd id = MatrixXcd::Identity(dim, dim);
  MatrixXcd s = MatrixXcd::Zero(dim * dim, dim * dim);
  for (const auto& J : gens.matrices) {
    const MatrixXcd j2 = J * J;
    s += kron(id, j2) + kron(j2.transpose(), id) - 2.0 * kron(J.transpose(), J);
  }
  return s;
}

std::vector<Eigen::MatrixXcd> sector_basis(const Eigen::MatrixXcd& projector,
                                           double rank_threshold) {
  const int dim = static_cast<int>(std::lround(std::sqrt(double(projector.cols()))));
  MatrixXcd residual = projector;
  const double largest = residual.colwise().norm().maxCoeff();
  std::vector<MatrixXcd> basis;
  std::vector<VectorXcd> chosen;
  while (chosen.size() < static_cast<std::size_t>(projector.cols())) {
    Eigen::Index pivot;
    const double norm = residual.colwise().norm().maxCoeff(&pivot);
    if (norm <= rank_threshold * largest) break;
    VectorXcd v = residual.col(pivot);
    for (const auto& u : chosen) v -= u * u.dot(v);  // re-orthogonalize
    v.normalize();
    residual -= v * (v.adjoint() * residual);
    basis.push_back(unvec(v, dim));
    chosen.push_back(std::move(v));
  }
  return basis;
}

Eigen::MatrixXcd twirl_from_basis(const std::vector<Eigen::MatrixXcd>& basis) {
  const Eigen::Index dim = basis.at(0).rows();
  MatrixXcd s = MatrixXcd::Zero(dim * dim, dim * dim);
  for (const auto& e : basis) s += kron(e.transpose(), e.adjoint());
  return s;
}

bool OracleReport::within_tolerance() const {
  for (double dev : {max_abs_deviation, grid_deviation, casimir_deviation,
                     projector_deviation, kappa_deviation, generator_deviation})
    if (!(dev <= tol) || !std::isfinite(dev)) return false;
  return true;
}

OracleReport oracle_matrix(const ModelParams& params, double tol, int cap) {
  if (params.n < 1) throw std::invalid_argument("oracle needs n >= 1");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  const int n = params.n;

  const GeneratorSet gens = build_generators(params, cap);
  const int dim = gens.basis.dim();

  OracleReport report{params};
  report.dim = dim;
  report.tol = tol;
  report.kappa = gens.kappa;
  report.generator_deviation =
      std::max({gens.orthonormality, gens.hermiticity, gens.tracelessness});

  const SectorTable sectors = make_sector_table(params);
  report.kappa_deviation =
      std::abs(gens.kappa - (sectors.cV * Rational(sectors.dimV) /
                             Rational(params.q * params.q - 1)).to_double());

  // spectral grid of the degree-one twirl, from clustered eigenvalues
  const MatrixXcd s1 = twirl_one(gens);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es1(s1);
  auto grid_clusters = cluster_spectrum(es1.eigenvalues(), n + 1);
  std::reverse(grid_clusters.begin(), grid_clusters.end());  // descending x <-> ascending a
  std::vector<double> grid(n + 1);
  for (int a = 0; a <= n; ++a) {
    grid[a] = grid_clusters[a].first;
    if (BigInt(grid_clusters[a].second) != sectors.d[a])
      throw RankMismatch("eigenvalue cluster " + std::to_string(a) + " has size " +
                         std::to_string(grid_clusters[a].second));
    report.grid_deviation =
        std::max(report.grid_deviation, std::abs(grid[a] - sectors.x[a].to_double()));
  }

  // conjugation-Casimir spectrum, ascending c_a against ascending clusters
  Eigen::SelfAdjointEigenSolver<MatrixXcd> esc(conjugation_casimir(gens));
  const auto casimir_clusters = cluster_spectrum(esc.eigenvalues(), n + 1);
  for (int a = 0; a <= n; ++a) {
    if (BigInt(casimir_clusters[a].second) != sectors.d[a])
      throw RankMismatch("Casimir cluster " + std::to_string(a) + " has size " +
                         std::to_string(casimir_clusters[a].second));
    report.casimir_deviation = std::max(
        report.casimir_deviation,
        std::abs(casimir_clusters[a].first - sectors.c[a].to_double()));
  }

  // Lagrange projectors on the numeric grid
  const MatrixXcd id = MatrixXcd::Identity(dim * dim, dim * dim);
  std::vector<MatrixXcd> projectors(n + 1);
  for (int a = 0; a <= n; ++a) {
    MatrixXcd p = id;
    for (int c = 0; c <= n; ++c) {
      if (c == a) continue;
      p = p * (s1 - grid[c] * id) / (grid[a] - grid[c]);
    }
    projectors[a] = std::move(p);
  }
  MatrixXcd completeness = -id;
  for (int a = 0; a <= n; ++a) completeness += projectors[a];
  report.projector_deviation = completeness.cwiseAbs().maxCoeff();
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      MatrixXcd rel = projectors[a] * projectors[b];
      if (a == b) rel -= projectors[a];
      report.projector_deviation =
          std::max(report.projector_deviation, rel.cwiseAbs().maxCoeff());
    }

  // per-sector twirls and the numeric transform
  const MacWilliamsMatrix exact = build_matrix(params);
  report.matrix.assign(n + 1, std::vector<double>(n + 1));
  for (int b = 0; b <= n; ++b) {
    const auto basis = sector_basis(projectors[b]);
    if (BigInt(basis.size()) != sectors.d[b])
      throw RankMismatch("projector " + std::to_string(b) + " has numerical rank " +
                         std::to_string(basis.size()));
    const MatrixXcd tw = twirl_from_basis(basis);
    for (int a = 0; a <= n; ++a) {
      const std::complex<double> m_ba =
          (projectors[a] * tw).trace() / sectors.d[a].get_d();
      report.matrix[b][a] = std::real(m_ba);
      report.max_abs_deviation =
          std::max(report.max_abs_deviation,
                   std::abs(m_ba - std::complex<double>(exact.at(b, a).to_double())));
    }
  }
  return report;
}

}  // namespace rmw
