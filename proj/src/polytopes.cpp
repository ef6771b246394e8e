#include "optpovm/polytopes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace optpovm {

std::string_view to_string(PolytopeKind kind) {
  return kind == PolytopeKind::Cell24 ? "cell24" : "cell600";
}

PolytopeKind parse_polytope(std::string_view name) {
  if (name == "cell24" || name == "24-cell") return PolytopeKind::Cell24;
  if (name == "cell600" || name == "600-cell") return PolytopeKind::Cell600;
  throw std::invalid_argument("unknown polytope '" + std::string(name) +
                              "' (expected cell24 or cell600)");
}

double golden_ratio() { return 0.5 * (1.0 + std::sqrt(5.0)); }

std::vector<std::array<int, 4>> even_permutations4() {
  std::vector<std::array<int, 4>> out;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inversions;
    if (inversions % 2 == 0) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Vertex4> vertices_24cell() {
  std::vector<Vertex4> out;
  out.reserve(24);
  for (int mask = 0; mask < 16; ++mask) {
    Vertex4 v{};
    for (int k = 0; k < 4; ++k) v.x[static_cast<std::size_t>(k)] = (mask >> (3 - k) & 1) ? -0.5 : 0.5;
    out.push_back(v);
  }
  for (int k = 0; k < 4; ++k) {
    for (double s : {1.0, -1.0}) {
      Vertex4 v{};
      v.x[static_cast<std::size_t>(k)] = s;
      out.push_back(v);
    }
  }
  return out;
}

std::vector<Vertex4> vertices_600cell() {
  std::vector<Vertex4> out = vertices_24cell();
  out.reserve(120);
  const double tau = golden_ratio();
  const std::array<double, 4> tmpl{0.5 * tau, 0.5, 0.5 / tau, 0.0};
  for (const auto& perm : even_permutations4()) {
    // Signs only on the three nonzero template slots.
    for (int mask = 0; mask < 8; ++mask) {
      Vertex4 v{};
      for (int k = 0; k < 4; ++k) {
        double c = tmpl[static_cast<std::size_t>(k)];
        if (k < 3 && (mask >> (2 - k) & 1)) c = -c;
        v.x[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = c;
      }
      out.push_back(v);
    }
  }
  return out;
}

std::vector<Vertex4> vertices(PolytopeKind kind) {
  return kind == PolytopeKind::Cell24 ? vertices_24cell() : vertices_600cell();
}

}  // namespace optpovm
