#pragma once

#include <array>
#include <string_view>
#include <vector>

namespace optpovm {

/// Point on the unit 3-sphere in R^4.
struct Vertex4 {
  std::array<double, 4> x;

  double dot(const Vertex4& o) const {
    return x[0] * o.x[0] + x[1] * o.x[1] + x[2] * o.x[2] + x[3] * o.x[3];
  }
  Vertex4 operator-() const { return {{-x[0], -x[1], -x[2], -x[3]}}; }
};

enum class PolytopeKind { Cell24, Cell600 };

std::string_view to_string(PolytopeKind kind);
/// Accepts "cell24"/"24-cell" and "cell600"/"600-cell"; throws std::invalid_argument otherwise.
PolytopeKind parse_polytope(std::string_view name);

/// The golden mean (1 + sqrt 5)/2.
double golden_ratio();

/// 16 vectors (+-1,+-1,+-1,+-1)/2 followed by the 8 signed unit coordinate
/// vectors.
std::vector<Vertex4> vertices_24cell();

/// The 24-cell vertices followed by the 96 even permutations of
/// (+-tau, +-1, +-1/tau, 0)/2.
std::vector<Vertex4> vertices_600cell();

std::vector<Vertex4> vertices(PolytopeKind kind);

/// The 12 even permutations of {0,1,2,3}; entry p maps template slot k to
/// coordinate position p[k].
std::vector<std::array<int, 4>> even_permutations4();

}  // namespace optpovm
