#ifndef QIG_INFOMEASURES_HPP
#define QIG_INFOMEASURES_HPP

#include <complex>

#include "qig/superop.hpp"

namespace qig {

enum class SkewPath { CommutatorKernel, VarianceDifference };

// Skew information with both evaluation paths. The reported value is the
// VarianceDifference result (negatives within -1e-10 clamped to zero);
// cross_residual is |path1 - path2|.
struct MeasureReport {
  double value = 0.0;
  SkewPath path = SkewPath::VarianceDifference;
  double cross_residual = 0.0;
};

// Quantum f-covariance Cov^f_rho(A,B) = Tr B0^dagger m_f(L,R) A0 with
// centered arguments X0 = X - (Tr rho X) I. Real for Hermitian pairs.
std::complex<double> f_covariance(const MonotoneFunction &f,
                                  const DensityMatrix &rho,
                                  const Observable &a, const Observable &b);

double f_variance(const MonotoneFunction &f, const DensityMatrix &rho,
                  const Observable &a);

// Standard (symmetrized) variance Tr rho A^2 - (Tr rho A)^2.
double variance(const DensityMatrix &rho, const Observable &a);

// Monotone metric <A,B>_{rho,f} = Tr(A^dagger c_f(L,R) B); rho faithful.
// Normalized so that [A,rho]=0 gives Tr(rho^{-1} A^2) for Hermitian A.
std::complex<double> qfi_metric(const MonotoneFunction &f,
                                const DensityMatrix &rho,
                                const ComplexMatrix &a, const ComplexMatrix &b);

// Metric adjusted skew information for regular f. Evaluates both
//   Var_rho(A) - Var^{f~}_rho(A)          (reported value)
//   (1/2) Tr i[rho,A] c~(L,R) i[rho,A]    (verification path)
// and works for singular rho through the continuous kernel extensions.
MeasureReport skew_information(const MonotoneFunction &f,
                               const DensityMatrix &rho, const Observable &a);

// Sesquilinear extension I^f(A,B) = Cov_rho(A,B) - Cov^{f~}_rho(A,B).
std::complex<double> skew_information_sesquilinear(const MonotoneFunction &f,
                                                   const DensityMatrix &rho,
                                                   const Observable &a,
                                                   const Observable &b);

// Reusable evaluator for many observables against one (f, rho) pair; this is
// the hot path of the LQU optimizer. Holds the m_{f~} kernel table.
class SkewEvaluator {
public:
  SkewEvaluator(const MonotoneFunction &f, const DensityMatrix &rho);

  // VarianceDifference value for a Hermitian argument, unclamped.
  double value(const ComplexMatrix &a_hermitian) const;

  // Both paths, as skew_information reports them.
  MeasureReport report(const ComplexMatrix &a_hermitian) const;

  Eigen::Index dim() const { return mean_tilde_.dim(); }

private:
  double f_at_zero_;
  KernelTable mean_tilde_; // Mean kernel for f~
};

} // namespace qig

#endif
