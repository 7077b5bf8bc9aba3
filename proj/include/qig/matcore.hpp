#ifndef QIG_MATCORE_HPP
#define QIG_MATCORE_HPP

#include <Eigen/Dense>
#include <functional>

#include "qig/errors.hpp"

namespace qig {

using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

struct MonotoneFunction; // fcatalog.hpp

// Default tolerances used by validation and spectral routines.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kEigenvalueClipTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kReconstructionTol = 1e-10;

//------------------------------------------------------------------------------
// Matrix helpers
//------------------------------------------------------------------------------

inline ComplexMatrix dagger(const ComplexMatrix &a) { return a.adjoint(); }

// Max-entry norm of A - A^dagger.
double hermiticity_defect(const ComplexMatrix &a);

bool is_hermitian(const ComplexMatrix &a, double tol = kHermitianTol);

bool all_finite(const ComplexMatrix &a);

// Result of diagonalizing a Hermitian matrix, eigenvalues ascending.
struct Spectral {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors; // columns; unitary
};

// Diagonalize a Hermitian matrix. Throws NotHermitian if the defect exceeds
// tol; the matrix is symmetrized before factorization.
Spectral spectral_decompose(const ComplexMatrix &m, double tol = kHermitianTol);

// V f(diag lambda) V^dagger for Hermitian input.
ComplexMatrix apply_spectral_function(const ComplexMatrix &m,
                                      const std::function<double(double)> &fun,
                                      double tol = kHermitianTol);

// Kronecker product.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

// i(AB - BA); Hermitian whenever A and B are.
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

//------------------------------------------------------------------------------
// Domain types
//------------------------------------------------------------------------------

// Hermitian matrix. Symmetrized on construction when the defect is below
// tolerance, rejected otherwise.
class Observable {
public:
  explicit Observable(const ComplexMatrix &m);

  Eigen::Index dim() const { return mat_.rows(); }
  const ComplexMatrix &matrix() const { return mat_; }

private:
  ComplexMatrix mat_;
};

// Unit-trace positive semi-definite Hermitian matrix with cached spectral
// decomposition. Eigenvalues in [-1e-12, 0) are clipped to zero.
class DensityMatrix {
public:
  explicit DensityMatrix(const ComplexMatrix &m);

  Eigen::Index dim() const { return mat_.rows(); }
  const ComplexMatrix &matrix() const { return mat_; }
  const RealVector &eigenvalues() const { return eig_; } // ascending
  const ComplexMatrix &eigenvectors() const { return vec_; }

  double min_eigenvalue() const { return eig_(0); }
  bool faithful(double tol = kEigenvalueClipTol) const { return eig_(0) > tol; }

private:
  ComplexMatrix mat_;
  RealVector eig_;
  ComplexMatrix vec_;
};

// Density matrix on H1 (x) H2 together with the factorization (d1, d2).
class BipartiteState {
public:
  BipartiteState(DensityMatrix state, Eigen::Index d1, Eigen::Index d2);

  const DensityMatrix &state() const { return state_; }
  Eigen::Index d1() const { return d1_; }
  Eigen::Index d2() const { return d2_; }

private:
  DensityMatrix state_;
  Eigen::Index d1_, d2_;
};

//------------------------------------------------------------------------------
// Operations
//------------------------------------------------------------------------------

// Tr(rho A); the imaginary residue must stay below 1e-12.
double expectation(const DensityMatrix &rho, const Observable &a);

// Trace out subsystem 2 (keep == 1) or subsystem 1 (keep == 2).
DensityMatrix partial_trace(const BipartiteState &s, int keep);

// Kubo-Ando matrix mean A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2} for positive
// definite A, B (min eigenvalue > 1e-12).
ComplexMatrix matrix_mean(const MonotoneFunction &f, const ComplexMatrix &a,
                          const ComplexMatrix &b);

} // namespace qig

#endif
