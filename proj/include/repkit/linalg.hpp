#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "repkit/scalar.hpp"

namespace repkit {

using CMat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using CVec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using FMat = Eigen::MatrixXcd;
using FVec = Eigen::VectorXcd;

/// Conjugate transpose of an exact matrix (Eigen's adjoint() is unaware of
/// the custom scalar's conjugation).
CMat adjoint_of(const CMat& m);

bool is_zero(const CMat& m);

CMat identity(int n);

struct Rref {
  CMat R;
  std::vector<int> pivots; // pivot column per pivot row
  int rank = 0;
};

/// Reduced row echelon form over the exact field; fully deterministic.
Rref rref(CMat m);

int rank_of(const CMat& m);

/// Basis of {v : Mv = 0}, as columns.  Empty matrix (n x 0) when injective.
CMat nullspace(const CMat& m);

/// Float nullspace with a singular-value threshold: right singular vectors
/// whose singular value is <= tol * sigma_max.
FMat nullspace(const FMat& m, double tol);

Scalar det(CMat m);

CMat inverse(const CMat& m);

/// Product a*b that skips zero entries of both factors; worthwhile for the
/// block-permutation shaped matrices this library deals in.
CMat sparse_mul(const CMat& a, const CMat& b);

/// Exact solver for A X = B with a fixed A factored once.
class ExactSolver {
public:
  explicit ExactSolver(const CMat& a);
  int rank() const { return rref_.rank; }
  /// Solves A x = b; throws consistency_failure if no exact solution exists.
  CMat solve(const CMat& b) const;

private:
  int rows_, cols_;
  Rref rref_;
  CMat ops_; // row operations applied to the identity
};

template <typename S>
Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& b) {
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                       a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Monic minimal polynomial of a square exact matrix, coefficients low to high.
std::vector<Scalar> minimal_polynomial(const CMat& m);

/// All rational roots of a polynomial with rational coefficients (low to high),
/// plus Gaussian-unit multiples i*r, -i*r of each rational candidate r.
std::vector<Scalar> small_field_roots(const std::vector<Scalar>& poly);

struct Eigenspace {
  Scalar value;
  CMat basis; // columns
};

/// Exact eigen decomposition for matrices whose minimal polynomial splits over
/// the scanned root set; throws non_diagonalizable otherwise.
std::vector<Eigenspace> eigenspaces(const CMat& m);

struct FloatEigenspace {
  std::complex<double> value;
  FMat basis;
};

/// Float eigenspaces with eigenvalue clustering at tolerance tol.
std::vector<FloatEigenspace> eigenspaces(const FMat& m, double tol);

} // namespace repkit
