#ifndef QIG_FCATALOG_HPP
#define QIG_FCATALOG_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qig/errors.hpp"

namespace qig {

// Weight function on [0,1] from the canonical exponential-integral
// representation of operator monotone functions.
using WeightFunction = std::function<double(double)>;

// Element of the class of normalized symmetric operator monotone functions
// on the positive reals. `eval` is defined for t > 0; `f_at_zero` is the
// analytic limit at 0 and drives the regular/non-regular split.
struct MonotoneFunction {
  std::string name;
  std::function<double(double)> eval;
  double f_at_zero = 0.0;
  bool regular = false; // f_at_zero > 0
  std::optional<WeightFunction> weight;

  double operator()(double t) const { return eval(t); }
};

// Fixed spectrum for local observables, with a non-degeneracy flag
// (all pairwise gaps > 1e-9).
struct SpectrumLambda {
  std::vector<double> values;

  explicit SpectrumLambda(std::vector<double> v);
  Eigen::Index size() const { return static_cast<Eigen::Index>(values.size()); }
  bool non_degenerate() const { return non_degenerate_; }

private:
  bool non_degenerate_ = true;
};

//------------------------------------------------------------------------------
// Catalog
//------------------------------------------------------------------------------
// Built-in entries (parameter-free):
//   sld        (1+x)/2            f(0)=1/2   regular
//   wy         ((sqrt x + 1)/2)^2 f(0)=1/4   regular
//   kubo_mori  (x-1)/log x        f(0)=0
//   harmonic   2x/(x+1)           f(0)=0     (alias f_min; weight h == 1)
//   geometric  sqrt x             f(0)=0
// Parameterized:
//   wyd(p), p in (0,1)            f(0)=p(1-p) regular; arctan weight
//   bridge(alpha), alpha in [0,1] t^a ((1+t)/2)^{1-2a}; weight h == alpha;
//                                 regular only at alpha=0 (= f_max)
//   variant_bridge(p), p in [0,1] step weight h = p on [1-p,1]; regular
//                                 except p=1

MonotoneFunction catalog(const std::string &name);
MonotoneFunction catalog(const std::string &name, double param);

// Parse "name" or "name:param" (CLI spelling).
MonotoneFunction catalog_parse(const std::string &spec);

//------------------------------------------------------------------------------
// Transforms
//------------------------------------------------------------------------------

// The non-regular partner of a regular f:
//   f~(x) = ((x+1) - (x-1)^2 f(0)/f(x)) / 2.
MonotoneFunction f_tilde(const MonotoneFunction &f);

// t -> f(0)/f(t) for regular f.
std::function<double(double)> f_check(const MonotoneFunction &f);

//------------------------------------------------------------------------------
// Canonical weight representation
//------------------------------------------------------------------------------

// Build f from a measurable weight h: [0,1] -> [0,1] via
//   f(t) = ((1+t)/2) exp int_0^1 (l^2-1)(1-t)^2 /
//          ((l+t)(1+l t)(1+l)^2) h(l) dl.
// Regularity is decided numerically from int h(l)/l dl over shrinking lower
// limits (see implementation notes); the quadrature targets absolute error
// 1e-8 and throws QuadratureFailure when the estimate exceeds it.
MonotoneFunction from_weight(const WeightFunction &h,
                             const std::string &name = "from_weight");

//------------------------------------------------------------------------------
// Majorization order and lattice
//------------------------------------------------------------------------------

enum class MajorizationStatus { Holds, Fails, Inconclusive };

// A <= B but phi(A) <= phi(B) + tol fails; scalar witnesses are 1x1.
struct MajorizationWitness {
  Eigen::MatrixXcd a, b;
};

struct MajorizationCertificate {
  MajorizationStatus status = MajorizationStatus::Inconclusive;
  std::optional<MajorizationWitness> witness;

  bool holds() const { return status == MajorizationStatus::Holds; }
  bool fails() const { return status == MajorizationStatus::Fails; }
};

// Statistical falsifier for "f majorized by g": phi(t) = ((t+1)/2) f(t)/g(t)
// must lie in the operator monotone class. Checks phi on a scalar grid, then
// n_pairs random pairs A <= B of dims 2..5 for phi(A) <= phi(B) + 1e-8 I.
// Holds is a falsification failure, never a proof.
MajorizationCertificate majorizes(const MonotoneFunction &f,
                                  const MonotoneFunction &g,
                                  int n_pairs = 200,
                                  std::uint64_t seed = 0x5eed5eedULL);

// Lattice meet/join through the weight representation:
//   h_{f and g} = max{h_f, h_g},  h_{f or g} = min{h_f, h_g}.
// Both arguments must carry weights (MissingWeight otherwise). The meet of a
// non-regular function is forced non-regular.
MonotoneFunction lattice_meet(const MonotoneFunction &f,
                              const MonotoneFunction &g);
MonotoneFunction lattice_join(const MonotoneFunction &f,
                              const MonotoneFunction &g);

} // namespace qig

#endif
