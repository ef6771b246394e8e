#include "optpovm/verifier.hpp"

#include <cmath>

#include "optpovm/spin32.hpp"

namespace optpovm {

int common_dimension(std::span<const PovmElement> elements) {
  if (elements.empty()) throw std::invalid_argument("POVM has no elements");
  const int d = elements.front().state.dim();
  for (const auto& e : elements) {
    if (e.state.dim() != d) throw DimensionMismatch("POVM elements have mixed dimensions");
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
      throw std::invalid_argument("POVM weights must be finite and non-negative");
    }
  }
  return d;
}

VerificationReport verify_completeness(std::span<const PovmElement> elements, int copies,
                                       double tolerance) {
  const int d = common_dimension(elements);
  const auto dim = sym_dim(d, copies);
  std::vector<WeightedSymmetricVector> terms;
  terms.reserve(elements.size());
  double weights = 0.0;
  for (const auto& e : elements) {
    terms.push_back({e.weight, symmetric_power(e.state, copies)});
    weights += e.weight;
  }
  VerificationReport rep;
  rep.add("completeness", accumulate_identity_residual(terms), tolerance);
  rep.add("weight_sum", std::abs(weights - static_cast<double>(dim)), tolerance);
  return rep;
}

VerificationReport verify_scalar_identity(std::span<const PovmElement> elements, int copies,
                                          int trials, Rng& rng, double tolerance) {
  const int d = common_dimension(elements);
  if (trials < 1) throw std::invalid_argument("verify_scalar_identity: trials must be positive");
  if (copies < 1) throw std::invalid_argument("verify_scalar_identity: N must be at least 1");
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const PureState psi = haar_random_state(d, rng);
    double s = 0.0;
    for (const auto& e : elements) {
      const double o = overlap_sq(psi, e.state);
      double p = 1.0;
      for (int k = 0; k < copies; ++k) p *= o;
      s += e.weight * p;
    }
    worst = std::max(worst, std::abs(s - 1.0));
  }
  VerificationReport rep;
  rep.add("scalar_identity", worst, tolerance);
  return rep;
}

VerificationReport verify_povm(const Povm& povm, int trials, std::uint64_t seed,
                               double tolerance) {
  if (common_dimension(povm.elements) != povm.dim) {
    throw DimensionMismatch("POVM dimension does not match its states");
  }
  VerificationReport rep;
  rep.povm_id = povm.id;
  rep.append(verify_completeness(povm.elements, povm.copies, tolerance));
  Rng rng(seed);
  rep.append(verify_scalar_identity(povm.elements, povm.copies, trials, rng, tolerance));
  if (povm.dim == 4 && (povm.copies == 2 || povm.copies == 3)) {
    const auto h = povm.copies == 2 ? spin32::verify_hierarchy_n2(povm, tolerance)
                                    : spin32::verify_hierarchy_n3(povm, tolerance);
    for (auto c : h.checks) {
      c.name = "hierarchy." + c.name;
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

}  // namespace optpovm
