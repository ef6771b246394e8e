#pragma once

#include <optional>
#include <string>
#include <vector>

#include "optpovm/linalg.hpp"

namespace optpovm {

/// Rank-one POVM element c_r |psi_r><psi_r|^{(x)N}.
struct PovmElement {
  double weight;
  PureState state;
};

/// A weighted set of pure states acting on N copies of C^D.
struct Povm {
  std::string id;
  int dim = 0;
  int copies = 0;
  std::optional<double> spin;  // J = (D-1)/2 when meaningful
  std::string provenance;
  std::vector<PovmElement> elements;

  double weight_sum() const {
    double s = 0.0;
    for (const auto& e : elements) s += e.weight;
    return s;
  }
};

}  // namespace optpovm
