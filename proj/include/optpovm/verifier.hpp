#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include "optpovm/linalg.hpp"
#include "optpovm/povm.hpp"
#include "optpovm/report.hpp"

namespace optpovm {

/// Elements of one POVM live in different dimensions.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dimension shared by all elements; throws DimensionMismatch otherwise and
/// std::invalid_argument for an empty list or a negative weight.
int common_dimension(std::span<const PovmElement> elements);

/// Operator check on the symmetric subspace: Frobenius norm of
/// sum_r c_r sym(psi_r)sym(psi_r)^dagger - I ("completeness") and
/// |sum_r c_r - sym_dim(D, N)| ("weight_sum").
VerificationReport verify_completeness(std::span<const PovmElement> elements, int copies,
                                       double tolerance = kAggregateTol);

/// Scalar check: max over `trials` Haar-random states of
/// |sum_r c_r |<psi|psi_r>|^{2N} - 1| ("scalar_identity").
VerificationReport verify_scalar_identity(std::span<const PovmElement> elements, int copies,
                                          int trials, Rng& rng,
                                          double tolerance = kAggregateTol);

/// Everything that applies to `povm`: completeness, the scalar identity
/// with a stream seeded by `seed`, and for D = 4, N in {2, 3} the Bloch
/// moment hierarchy (rows prefixed "hierarchy.").
VerificationReport verify_povm(const Povm& povm, int trials, std::uint64_t seed,
                               double tolerance = kAggregateTol);

}  // namespace optpovm
