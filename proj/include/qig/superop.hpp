#ifndef QIG_SUPEROP_HPP
#define QIG_SUPEROP_HPP

#include "qig/fcatalog.hpp"
#include "qig/matcore.hpp"

namespace qig {

// Scalar kernels applied entrywise in the eigenbasis of rho:
//   Mean      m_f(x,y) = y f(x/y), extended by m_f(0,y)=f(0)y, m_f(0,0)=0
//   Morozova  c_f(x,y) = 1/m_f(x,y); requires faithful rho
//   Check     c~(x,y)  = f(0)/m_f(x,y); requires regular f;
//             extended by c~(0,y)=1/y, c~(x,0)=1/x and 0 at (0,0)
enum class KernelKind { Mean, Morozova, Check };

// Precomputed dim x dim kernel table for one (kind, f, rho) triple. Immutable
// once built; reusable across many observables against the same state.
class KernelTable {
public:
  KernelTable(KernelKind kind, const MonotoneFunction &f,
              const DensityMatrix &rho);

  // V (k .* (V^dagger a V)) V^dagger
  ComplexMatrix apply(const ComplexMatrix &a) const;

  // Entrywise product in the eigenbasis, without the final basis change.
  Eigen::MatrixXcd apply_in_eigenbasis(const Eigen::MatrixXcd &a_eig) const;

  KernelKind kind() const { return kind_; }
  Eigen::Index dim() const { return table_.rows(); }
  const Eigen::MatrixXd &values() const { return table_; }
  const RealVector &eigenvalues() const { return eig_; }
  const ComplexMatrix &eigenvectors() const { return vec_; }

private:
  KernelKind kind_;
  Eigen::MatrixXd table_;
  RealVector eig_;
  ComplexMatrix vec_;
};

// One-shot form of KernelTable::apply.
ComplexMatrix apply_kernel(KernelKind kind, const MonotoneFunction &f,
                           const DensityMatrix &rho, const ComplexMatrix &a);

} // namespace qig

#endif
