// Brute-force numerical construction of the twirling superoperators
// directly on the symmetric power, independent of every closed form in the
// exact modules. Runs in double precision; all agreement is to tolerance.

#pragma once

#include <Eigen/Dense>

#include "racahmw/sectors.hpp"

namespace rmw {

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a numerically determined sector dimension (eigenvalue
/// cluster size or projector rank) disagrees with the exact one.
class RankMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Monomial basis of Sym^n(C^q): occupation vectors of length q summing
/// to n, in lexicographic order.
struct SymBasis {
  int q = 0;
  int n = 0;
  std::vector<std::vector<int>> occupations;

  static SymBasis build(const ModelParams& params);
  int dim() const { return static_cast<int>(occupations.size()); }
  int index_of(const std::vector<int>& m) const;
};

/// The q^2-1 orthonormal Hermitian su(q) generators lifted to Sym^n(C^q)
/// via the occupation-number action, with the measured Dynkin index and
/// the deviations of the defining properties.
struct GeneratorSet {
  ModelParams params;
  SymBasis basis;
  std::vector<Eigen::MatrixXcd> matrices;
  double kappa = 0.0;          // mean of Tr(J_mu^2)
  double orthonormality = 0.0; // max |Tr(J_mu J_nu) - kappa delta|
  double hermiticity = 0.0;
  double tracelessness = 0.0;
};

struct OracleReport {
  ModelParams params;
  int dim = 0;
  double tol = 0.0;
  double kappa = 0.0;
  std::vector<std::vector<double>> matrix;  // numeric transform, row-major

  double max_abs_deviation = 0.0;  // vs the exact matrix
  double grid_deviation = 0.0;
  double casimir_deviation = 0.0;
  double projector_deviation = 0.0;
  double kappa_deviation = 0.0;
  double generator_deviation = 0.0;

  bool within_tolerance() const;
};

/// Off-diagonal symmetric/antisymmetric pairs scaled by 1/sqrt(2) and the
/// diagonals diag(1,..,1,-k,0,..)/sqrt(k(k+1)), lifted by the bosonic
/// action a_i^dag a_j with sqrt(m_j(m_i+1)) amplitudes.
GeneratorSet build_generators(const ModelParams& params, int cap = 200);

/// X -> (1/kappa) sum_mu J_mu X J_mu as a dense dim^2 x dim^2 matrix on
/// column-stacked operators. Requires n >= 1.
Eigen::MatrixXcd twirl_one(const GeneratorSet& gens);

/// X -> sum_mu [J_mu, [J_mu, X]].
Eigen::MatrixXcd conjugation_casimir(const GeneratorSet& gens);

/// Orthonormal basis (Hilbert-Schmidt) of the image of a numeric sector
/// projector, as operators; rank decided at rank_threshold times the
/// largest column norm.
std::vector<Eigen::MatrixXcd> sector_basis(const Eigen::MatrixXcd& projector,
                                           double rank_threshold = 1e-7);

/// Twirl superoperator sum_i E_i^dag X E_i built from an operator basis.
Eigen::MatrixXcd twirl_from_basis(const std::vector<Eigen::MatrixXcd>& basis);

/// Full pipeline: generators, degree-one twirl, spectral clustering,
/// Lagrange projectors, per-sector twirls, numeric transform readout, and
/// comparison against the exact construction. Requires n >= 1.
OracleReport oracle_matrix(const ModelParams& params, double tol = 1e-8, int cap = 200);

}  // namespace rmw
