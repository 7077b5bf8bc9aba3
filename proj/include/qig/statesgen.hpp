#ifndef QIG_STATESGEN_HPP
#define QIG_STATESGEN_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "qig/matcore.hpp"

namespace qig {

// Deterministic random stream: mt19937_64 with uniforms built as
// (x >> 11) * 2^-53 and normals via Box-Muller. Fully specified so that
// the same seed reproduces the same values on any platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(); // [0,1)
  double normal();  // standard normal
  std::complex<double> complex_normal();
  std::uint64_t raw() { return gen_(); }

private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Completely positive trace-preserving map in Kraus form,
// sum_i K_i^dagger K_i = I within 1e-10.
struct Channel {
  std::vector<ComplexMatrix> kraus_ops;

  explicit Channel(std::vector<ComplexMatrix> ops);
  Eigen::Index dim_in() const { return kraus_ops.front().cols(); }
  Eigen::Index dim_out() const { return kraus_ops.front().rows(); }
};

// Wishart-style state G G^dagger / Tr(G G^dagger) with G dim x rank Gaussian.
DensityMatrix random_density(Eigen::Index dim, Eigen::Index rank,
                             std::uint64_t seed);

// sum_i p_i |i><i| (x) states[i]; block-diagonal in the computational basis
// of subsystem 1.
BipartiteState classical_quantum(const std::vector<double> &probs,
                                 const std::vector<DensityMatrix> &states);

// Seeded convenience: random probabilities and random full-rank components.
BipartiteState random_classical_quantum(Eigen::Index d1, Eigen::Index d2,
                                        std::uint64_t seed);

// Haar unitary via QR of a complex Gaussian matrix with the phase-fix
// convention (diagonal of R made positive).
ComplexMatrix random_unitary(Eigen::Index dim, std::uint64_t seed);
ComplexMatrix haar_unitary(Eigen::Index dim, Rng &rng);

// Random channel from a Haar isometry split into kraus_count blocks.
Channel random_channel(Eigen::Index d, int kraus_count, std::uint64_t seed);

// Fully depolarizing channel rho -> Tr(rho) I/d.
Channel depolarizing_channel(Eigen::Index d);

// (1 (x) Phi) applied to the second subsystem.
BipartiteState apply_channel_on_2(const BipartiteState &s, const Channel &ch);

// Random Hermitian matrix with independent Gaussian entries.
ComplexMatrix random_hermitian(Eigen::Index dim, std::uint64_t seed);

} // namespace qig

#endif
