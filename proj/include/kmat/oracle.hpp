#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "kmat/sympair.hpp"

namespace kmat {

using cd = std::complex<double>;

/// Explicit generators of g on its defining representation, orthonormal in
/// the trace form (gamma = identity), ordered with the h generators first.
/// Everything here is double precision; this module is the independent
/// numeric check of the exact symbolic path.
struct MatrixRealization {
  std::string label;
  ClassicalName g_classical;
  AlgebraId algebra;
  int dim_v = 0;
  int dim_h = 0;  // generators [0, dim_h) span h, the rest span k
  std::vector<Eigen::MatrixXcd> gens;          // Hermitian T^a
  std::vector<int> h_factor_of;                // size dim_h; -1 = abelian
  int num_factors = 0;                         // simple h-factors
  std::vector<std::vector<std::vector<double>>> f;  // structure constants
  double c_adjoint = 0;  // Casimir on the adjoint, matrix units

  int dim_g() const { return static_cast<int>(gens.size()); }
  int dim_k() const { return dim_g() - dim_h; }

  // Restricted Casimir C_h = sum_{i in h} T^i T^i on the defining rep.
  Eigen::MatrixXcd casimir_h() const;
  // Twisted level-1 generator theta*(c_A/4i pi) T^p + (1/4)[C_h, T^p].
  Eigen::MatrixXcd twisted_q1(int p, cd theta) const;
};

/// Residuals of the defining identities: commutator closure, total
/// antisymmetry of f, and the scalar-Casimir property.
struct RealizationChecks {
  double closure;
  double antisymmetry;
  double casimir_scatter;
  bool pass(double tol = 1e-12) const {
    return closure < tol && antisymmetry < tol && casimir_scatter < tol;
  }
};

/// Evaluation representation: the level-1 charges act as the fixed
/// rapidity-dependent multiple theta * c_A/(4 i pi) of the level-0 ones.
struct EvaluationRep {
  const MatrixRealization& realization;
  cd theta;

  cd scale() const;                 // theta * c_A / (4 i pi)
  Eigen::MatrixXcd q0(int a) const { return realization.gens[a]; }
  Eigen::MatrixXcd q1(int a) const { return scale() * realization.gens[a]; }
};

MatrixRealization build_realization(const SymmetricPair& pair);
/// Realization of a bare algebra (h = g, k empty).
MatrixRealization build_algebra_realization(ClassicalName g);
/// The su(2)-block subalgebra of su(3) with k its orthogonal complement;
/// not a symmetric pair, used as the negative control.
MatrixRealization non_symmetric_control();

RealizationChecks verify_realization(const MatrixRealization& r);

struct SparsityReport {
  bool pass;
  double max_violation;  // largest |f| with all-k or two-h/one-k indices
};
SparsityReport check_structure_sparsity(const MatrixRealization& r,
                                        double tol = 1e-12);

/// Both sides of the cubic Serre identity evaluated on the evaluation
/// representation; each must vanish there.
struct SerreReport {
  double lhs_norm;
  double rhs_norm;
  double residual;  // |lhs - rhs|
};
SerreReport check_serre(const MatrixRealization& r, cd theta);

/// Max residual of [D(Q0^a), D(Q1^b)] = i f^ab_c D(Q1^c) on V^phi (x) V^theta.
double check_coproduct_hom(const MatrixRealization& r, cd theta, cd phi);

struct CoidealReport {
  double identity_residual;  // defining identity of the twisted coproduct
  double subspace_residual;  // distance of the correction term from
                             // span{X (x) Q0^i, X (x) 1} in the second slot
};
CoidealReport check_coideal(const MatrixRealization& r, cd theta, cd phi);

struct IntertwinerResult {
  Eigen::MatrixXcd K;  // normalized solution, defined up to a scalar
  std::vector<std::pair<cd, int>> eigenvalues;  // (value, multiplicity)
  int nullity;
  double residual;  // how well K satisfies the full system
};

/// Solve K rho_theta(x) = rho_{-theta}(x) K over all Q0^i and twisted Q1^p.
IntertwinerResult solve_boundary_intertwiner(const MatrixRealization& r,
                                             cd theta);

/// Scaling factors c_i recovered from the trace of the adjoint action of
/// C_h on g, rationalized with denominators up to 10^4.
struct TraceScalingResult {
  std::vector<Rat> c;          // same order as scaling_factors(pair)
  std::vector<double> raw;     // unrationalized values
  bool rationalized;
};
TraceScalingResult trace_scaling_factors(const MatrixRealization& r,
                                         const SymmetricPair& pair);

/// Numeric-vs-symbolic comparison of the reflection-matrix eigenvalue
/// ratios on the defining representation.
struct OracleComparison {
  bool pass = false;
  double max_rel_err = 0;
  std::string message;
};
OracleComparison compare_intertwiner_with_symbolic(
    const SymmetricPair& pair, const std::vector<ComplexTheta>& thetas,
    double tol = 1e-8);

}  // namespace kmat
