#include "optpovm/estimator.hpp"

#include <cmath>
#include <thread>

#include "optpovm/linalg.hpp"
#include "optpovm/verifier.hpp"

namespace optpovm {

namespace {

void require_verified(const Povm& povm) {
  const auto rep = verify_completeness(povm.elements, povm.copies);
  if (!rep.pass()) {
    throw UnverifiedPovm("POVM " + povm.id + " does not resolve the identity (worst residual " +
                         std::to_string(rep.worst()) + ")");
  }
}

// Running count/mean/M2 (Welford), merged with Chan's pairwise update.
struct Moments {
  std::int64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0) return;
    const std::int64_t total = n + o.n;
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.n) / static_cast<double>(total);
    m2 += o.m2 + delta * delta * static_cast<double>(n) * static_cast<double>(o.n) /
                     static_cast<double>(total);
    n = total;
  }
};

struct Shard {
  Moments moments;
  std::vector<double> fidelities;
  std::string error;
};

void run_shard(const Povm& povm, std::int64_t trials, std::uint64_t seed, bool record,
               Shard& out) {
  Rng rng(seed);
  const std::size_t k = povm.elements.size();
  std::vector<double> overlaps(k);
  std::vector<double> cdf(k);
  if (record) out.fidelities.reserve(static_cast<std::size_t>(trials));
  for (std::int64_t t = 0; t < trials; ++t) {
    const PureState psi = haar_random_state(povm.dim, rng);
    double acc = 0.0;
    for (std::size_t r = 0; r < k; ++r) {
      const double o = overlap_sq(povm.elements[r].state, psi);
      double p = 1.0;
      for (int c = 0; c < povm.copies; ++c) p *= o;
      overlaps[r] = o;
      acc += povm.elements[r].weight * p;
      cdf[r] = acc;
    }
    if (std::abs(acc - 1.0) > kAggregateTol) {
      out.error = "outcome probabilities sum to " + std::to_string(acc);
      return;
    }
    const double u = rng.uniform();
    std::size_t pick = k - 1;
    for (std::size_t r = 0; r < k; ++r) {
      if (u < cdf[r]) {
        pick = r;
        break;
      }
    }
    out.moments.push(overlaps[pick]);
    if (record) out.fidelities.push_back(overlaps[pick]);
  }
}

}  // namespace

double optimal_fidelity_bound(int copies, int dim) {
  return static_cast<double>(copies + 1) / static_cast<double>(copies + dim);
}

double haar_moment(int dim, int moment) {
  if (dim < 1 || moment < 0) throw std::invalid_argument("haar_moment: need D >= 1, M >= 0");
  // M!(D-1)!/(M+D-1)! = 1/C(M+D-1, D-1).
  return 1.0 / static_cast<double>(multiset_count(dim, moment));
}

double exact_average_fidelity(const Povm& povm) {
  require_verified(povm);
  return povm.weight_sum() * haar_moment(povm.dim, povm.copies + 1);
}

EstimationReport simulate(const Povm& povm, const EstimationConfig& config) {
  if (povm.copies < 2) throw std::out_of_range("simulate: N must be at least 2");
  if (config.trials < 1) throw std::invalid_argument("simulate: trials must be positive");
  if (config.shards < 1) throw std::invalid_argument("simulate: shards must be positive");
  require_verified(povm);

  const auto n_shards = static_cast<std::size_t>(config.shards);
  std::vector<Shard> shards(n_shards);
  {
    std::vector<std::jthread> workers;
    for (std::size_t i = 0; i < n_shards; ++i) {
      const std::int64_t count = config.trials / config.shards +
                                 (static_cast<std::int64_t>(i) < config.trials % config.shards ? 1 : 0);
      const std::uint64_t seed = Rng::derive_seed(config.seed, i);
      workers.emplace_back([&, i, count, seed] {
        run_shard(povm, count, seed, config.record_trials, shards[i]);
      });
    }
  }

  Moments total;
  EstimationReport rep;
  for (const auto& s : shards) {
    if (!s.error.empty()) throw UnverifiedPovm("POVM " + povm.id + ": " + s.error);
    total.merge(s.moments);
    if (config.record_trials) {
      rep.per_trial.insert(rep.per_trial.end(), s.fidelities.begin(), s.fidelities.end());
    }
  }

  rep.povm_id = povm.id;
  rep.dim = povm.dim;
  rep.copies = povm.copies;
  rep.trials = total.n;
  rep.seed = config.seed;
  rep.shards = config.shards;
  rep.mean_fidelity = total.mean;
  const double var = total.n > 1 ? total.m2 / static_cast<double>(total.n - 1) : 0.0;
  rep.standard_error = std::sqrt(var / static_cast<double>(total.n));
  rep.exact_fidelity = povm.weight_sum() * haar_moment(povm.dim, povm.copies + 1);
  rep.optimal_bound = optimal_fidelity_bound(povm.copies, povm.dim);
  return rep;
}

}  // namespace optpovm
