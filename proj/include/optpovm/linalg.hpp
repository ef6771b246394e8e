#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace optpovm {

using Complex = std::complex<double>;

// Tolerances shared by every module. Constructive identities (a single norm,
// a single Hermiticity check) are held to kExactTol; identities that
// aggregate many floating-point sums are held to kAggregateTol.
inline constexpr double kExactTol = 1e-12;
inline constexpr double kAggregateTol = 1e-9;

/// A normalized vector in C^D.
class PureState {
 public:
  /// Takes amplitudes that must already have unit norm (within kExactTol).
  explicit PureState(std::vector<Complex> amplitudes);

  /// Normalizes arbitrary nonzero amplitudes.
  static PureState normalized(std::vector<Complex> amplitudes);

  int dim() const { return static_cast<int>(amps_.size()); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  const Complex& operator[](int i) const { return amps_[static_cast<std::size_t>(i)]; }

  bool operator==(const PureState&) const = default;

 private:
  std::vector<Complex> amps_;
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const PureState& a, const PureState& b);

/// |<a|b>|^2.
double overlap_sq(const PureState& a, const PureState& b);

/// Number of size-N multisets over D symbols. Accepts D >= 1 and N >= 0,
/// unlike sym_dim which only admits physically meaningful arguments.
std::int64_t multiset_count(int dim, int copies);

/// Dimension (N+D-1)!/(N!(D-1)!) of the symmetric subspace of N copies of C^D.
/// Throws std::invalid_argument for D < 2 or N < 1.
std::int64_t sym_dim(int dim, int copies);

/// Occupation numbers (n_1..n_D), summing to N.
using SymMultiIndex = std::vector<int>;

/// All multi-indices for (D, N) in lexicographically decreasing order,
/// starting from (N, 0, ..., 0).
std::vector<SymMultiIndex> enumerate_multi_indices(int dim, int copies);

/// Coordinates of a vector in the symmetric subspace, in the basis of
/// normalized occupation-number states ordered as enumerate_multi_indices.
class SymmetricVector {
 public:
  SymmetricVector(int dim, int copies, std::vector<Complex> coords);

  int dim() const { return dim_; }
  int copies() const { return copies_; }
  const std::vector<Complex>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }

 private:
  int dim_;
  int copies_;
  std::vector<Complex> coords_;
};

Complex inner(const SymmetricVector& a, const SymmetricVector& b);

/// |psi>^{(x)N} restricted to the symmetric subspace. The coordinate at
/// (n_1..n_D) is sqrt(N!/prod n_j!) * prod a_j^{n_j}.
SymmetricVector symmetric_power(const PureState& state, int copies);

/// Dense Hermitian accumulator.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }

  /// this += weight * v v^dagger
  void add_rank_one(double weight, std::span<const Complex> v);

  /// Largest |M_ij - conj(M_ji)|.
  double hermiticity_residual() const;

  /// Frobenius norm of (M - I).
  double identity_residual() const;

  const Eigen::MatrixXcd& matrix() const { return m_; }

 private:
  Eigen::MatrixXcd m_;
};

struct WeightedSymmetricVector {
  double weight;
  SymmetricVector vector;
};

/// Frobenius norm of (sum_r c_r v_r v_r^dagger - I) on the symmetric
/// subspace. All terms must share (D, N) and have positive weight.
double accumulate_identity_residual(std::span<const WeightedSymmetricVector> terms);

/// Seeded generator. The engine is std::mt19937_64, whose output sequence is
/// fixed by the standard; the uniform and Gaussian transforms are done here
/// rather than by <random> distributions, whose algorithms vary between
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Marsaglia polar method).
  double normal();

  /// Seed of an independent stream for shard `index` of a run seeded `seed`.
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-random pure state: normalized vector of i.i.d. standard complex
/// Gaussians.
PureState haar_random_state(int dim, Rng& rng);

}  // namespace optpovm
