#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "optpovm/povm.hpp"

namespace optpovm {

/// Simulation refused because the POVM does not resolve the identity.
class UnverifiedPovm : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EstimationConfig {
  std::int64_t trials = 100000;
  std::uint64_t seed = 0;
  // Each shard draws from its own stream seeded by (seed, shard index).
  // Results are bit-stable for a fixed shard count.
  int shards = 1;
  bool record_trials = false;
};

struct EstimationReport {
  std::string povm_id;
  int dim = 0;
  int copies = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  int shards = 1;
  double mean_fidelity = 0.0;
  double standard_error = 0.0;  // sample stdev / sqrt(trials)
  double exact_fidelity = 0.0;
  double optimal_bound = 0.0;   // (N+1)/(N+D)
  std::vector<double> per_trial;  // filled when record_trials is set
};

/// (N+1)/(N+D).
double optimal_fidelity_bound(int copies, int dim);

/// Haar average of |<psi|phi>|^{2M} over psi in C^D: M!(D-1)!/(M+D-1)!.
double haar_moment(int dim, int moment);

/// Average fidelity under a Haar-uniform input when the guess for outcome r
/// is psi_r itself: sum_r c_r (N+1)!(D-1)!/(N+D)!. Throws UnverifiedPovm if
/// the POVM fails verify_completeness.
double exact_average_fidelity(const Povm& povm);

/// Monte Carlo run of the estimation protocol: draw a Haar state, sample an
/// outcome with probability c_r |<psi_r|psi>|^{2N}, score |<psi_r|psi>|^2.
/// Throws UnverifiedPovm for a POVM that fails verification and
/// std::out_of_range for N < 2.
EstimationReport simulate(const Povm& povm, const EstimationConfig& config);

}  // namespace optpovm
