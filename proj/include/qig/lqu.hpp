#ifndef QIG_LQU_HPP
#define QIG_LQU_HPP

#include <cstdint>

#include "qig/infomeasures.hpp"

namespace qig {

struct OptimizerConfig {
  int n_starts = 32;
  int max_iters = 500; // pattern-search sweeps per start
  double tol = 1e-9;   // terminal step size
  std::uint64_t seed = 0;
};

struct LquResult {
  double value = 0.0;
  Observable minimizer; // on subsystem 1, spectrum Lambda
  int starts = 0;
  int best_start_index = 0;
  bool converged = false; // best two starts agree within 10*tol
  double spread = 0.0;    // max - min over start results
};

// Zero-mean scaled (1, 2, ..., d1); the documented default spectrum.
SpectrumLambda default_spectrum(Eigen::Index d1);

// Metric adjusted local quantum uncertainty: minimum of
// I^f(rho, K1 (x) 1_2) over K1 = U diag(Lambda) U^dagger, U unitary on
// subsystem 1. Multi-start pattern search over exp(G) U0 with G traceless
// skew-Hermitian; deterministic given cfg.seed.
LquResult f_lqu(const MonotoneFunction &f, const BipartiteState &s,
                const SpectrumLambda &lambda,
                const OptimizerConfig &cfg = OptimizerConfig{});

// f = wy and f = sld specializations.
LquResult lqu(const BipartiteState &s, const SpectrumLambda &lambda,
              const OptimizerConfig &cfg = OptimizerConfig{});
LquResult interferometric_power(const BipartiteState &s,
                                const SpectrumLambda &lambda,
                                const OptimizerConfig &cfg = OptimizerConfig{});

// Dense-grid oracle for d1 == 2: minimum of the objective over a
// grid_density^2 midpoint grid on the Bloch sphere.
double brute_force_lqu(const MonotoneFunction &f, const BipartiteState &s,
                       const SpectrumLambda &lambda, int grid_density);

// Thresholded f_lqu (wy, non-degenerate default spectrum).
bool is_classical_quantum(const BipartiteState &s, double tol = 1e-6);

} // namespace qig

#endif
