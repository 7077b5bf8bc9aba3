#include "qig/matcore.hpp"

#include <cmath>
#include <sstream>

#include "qig/fcatalog.hpp"

namespace qig {

double hermiticity_defect(const ComplexMatrix &a) {
  if (a.rows() != a.cols())
    return std::numeric_limits<double>::infinity();
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix &a, double tol) {
  return a.rows() == a.cols() && hermiticity_defect(a) <= tol;
}

bool all_finite(const ComplexMatrix &a) {
  return a.allFinite();
}

static ComplexMatrix require_hermitian(const ComplexMatrix &m, double tol,
                                       const char *what) {
  if (m.rows() != m.cols())
    throw NotHermitian(std::string(what) + ": matrix is not square");
  if (!all_finite(m))
    throw NotHermitian(std::string(what) + ": matrix has non-finite entries");
  const double defect = hermiticity_defect(m);
  if (defect > tol) {
    std::ostringstream os;
    os << what << ": asymmetry " << defect << " exceeds tolerance " << tol;
    throw NotHermitian(os.str());
  }
  return (m + m.adjoint()) / 2.0;
}

Spectral spectral_decompose(const ComplexMatrix &m, double tol) {
  const ComplexMatrix h = require_hermitian(m, tol, "spectral_decompose");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw Error("spectral_decompose: eigensolver did not converge");
  return Spectral{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix apply_spectral_function(const ComplexMatrix &m,
                                      const std::function<double(double)> &fun,
                                      double tol) {
  const Spectral s = spectral_decompose(m, tol);
  RealVector mapped(s.eigenvalues.size());
  for (Eigen::Index i = 0; i < mapped.size(); ++i)
    mapped(i) = fun(s.eigenvalues(i));
  ComplexMatrix out = s.eigenvectors * mapped.asDiagonal() *
                      s.eigenvectors.adjoint();
  return (out + out.adjoint()) / 2.0;
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw DimensionMismatch("commutator: incompatible shapes");
  return std::complex<double>(0.0, 1.0) * (a * b - b * a);
}

//------------------------------------------------------------------------------
// Domain types
//------------------------------------------------------------------------------

Observable::Observable(const ComplexMatrix &m)
    : mat_(require_hermitian(m, kHermitianTol, "Observable")) {}

DensityMatrix::DensityMatrix(const ComplexMatrix &m) {
  mat_ = require_hermitian(m, kHermitianTol, "DensityMatrix");
  const double tr = mat_.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream os;
    os << "DensityMatrix: trace " << tr << " is not 1 within " << kTraceTol;
    throw NotNormalized(os.str());
  }
  Spectral s = spectral_decompose(mat_);
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
    const double lam = s.eigenvalues(i);
    if (lam < -kEigenvalueClipTol) {
      std::ostringstream os;
      os << "DensityMatrix: eigenvalue " << lam << " below -"
         << kEigenvalueClipTol;
      throw NotPositiveDefinite(os.str());
    }
    s.eigenvalues(i) = lam < 0.0 ? 0.0 : lam;
  }
  eig_ = std::move(s.eigenvalues);
  vec_ = std::move(s.eigenvectors);
}

BipartiteState::BipartiteState(DensityMatrix state, Eigen::Index d1,
                               Eigen::Index d2)
    : state_(std::move(state)), d1_(d1), d2_(d2) {
  if (d1 < 1 || d2 < 1 || d1 * d2 != state_.dim()) {
    std::ostringstream os;
    os << "BipartiteState: " << d1 << " x " << d2 << " does not factor dim "
       << state_.dim();
    throw DimensionMismatch(os.str());
  }
}

//------------------------------------------------------------------------------
// Operations
//------------------------------------------------------------------------------

double expectation(const DensityMatrix &rho, const Observable &a) {
  if (rho.dim() != a.dim())
    throw DimensionMismatch("expectation: state and observable dims differ");
  const std::complex<double> tr = (rho.matrix() * a.matrix()).trace();
  if (std::abs(tr.imag()) > 1e-12)
    throw Error("expectation: imaginary residue exceeds 1e-12");
  return tr.real();
}

DensityMatrix partial_trace(const BipartiteState &s, int keep) {
  if (keep != 1 && keep != 2)
    throw DimensionMismatch("partial_trace: keep must be 1 or 2");
  const Eigen::Index d1 = s.d1(), d2 = s.d2();
  const ComplexMatrix &rho = s.state().matrix();
  if (keep == 1) {
    ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
    for (Eigen::Index i = 0; i < d1; ++i)
      for (Eigen::Index j = 0; j < d1; ++j)
        for (Eigen::Index k = 0; k < d2; ++k)
          out(i, j) += rho(i * d2 + k, j * d2 + k);
    return DensityMatrix(out);
  }
  ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
  for (Eigen::Index i = 0; i < d2; ++i)
    for (Eigen::Index j = 0; j < d2; ++j)
      for (Eigen::Index k = 0; k < d1; ++k)
        out(i, j) += rho(k * d2 + i, k * d2 + j);
  return DensityMatrix(out);
}

static void require_positive_definite(const Spectral &s, const char *what) {
  if (s.eigenvalues(0) <= kEigenvalueClipTol) {
    std::ostringstream os;
    os << what << ": min eigenvalue " << s.eigenvalues(0)
       << " is not > " << kEigenvalueClipTol;
    throw NotPositiveDefinite(os.str());
  }
}

ComplexMatrix matrix_mean(const MonotoneFunction &f, const ComplexMatrix &a,
                          const ComplexMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix_mean: dims differ");
  const Spectral sa = spectral_decompose(a);
  require_positive_definite(sa, "matrix_mean (A)");
  const Spectral sb = spectral_decompose(b);
  require_positive_definite(sb, "matrix_mean (B)");

  RealVector sqrt_a(sa.eigenvalues.size()), isqrt_a(sa.eigenvalues.size());
  for (Eigen::Index i = 0; i < sa.eigenvalues.size(); ++i) {
    sqrt_a(i) = std::sqrt(sa.eigenvalues(i));
    isqrt_a(i) = 1.0 / sqrt_a(i);
  }
  const ComplexMatrix root = sa.eigenvectors * sqrt_a.asDiagonal() *
                             sa.eigenvectors.adjoint();
  const ComplexMatrix iroot = sa.eigenvectors * isqrt_a.asDiagonal() *
                              sa.eigenvectors.adjoint();
  const ComplexMatrix inner = iroot * b * iroot;
  const ComplexMatrix fInner =
      apply_spectral_function(inner, [&f](double t) { return f(t); }, 1e-9);
  ComplexMatrix out = root * fInner * root;
  return (out + out.adjoint()) / 2.0;
}

} // namespace qig
