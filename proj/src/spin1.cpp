#include "optpovm/spin1.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

namespace optpovm::spin1 {

namespace {

constexpr double kPi = std::numbers::pi;

void check_theta(double theta) {
  if (!(theta >= -kExactTol && theta <= 0.5 * kPi + kExactTol)) {
    throw std::invalid_argument("polar angle must lie in [0, pi/2]");
  }
}

double ipow(double x, int n) {
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= x;
  return r;
}

bool same_vector(const PureState& a, const PureState& b) {
  for (int i = 0; i < a.dim(); ++i) {
    if (std::abs(a[i] - b[i]) > kExactTol) return false;
  }
  return true;
}

std::string describe(PolytopeKind polytope, int copies) {
  std::ostringstream os;
  os << to_string(polytope) << ", N=" << copies;
  return os.str();
}

}  // namespace

PureState state_from_point(double theta, const Vertex4& v) {
  check_theta(theta);
  const double n2 = v.dot(v);
  if (std::abs(n2 - 1.0) > kExactTol) throw std::invalid_argument("vertex is not a unit vector");
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  // Re-normalize to absorb rounding in sin/cos and the vertex coordinates.
  return PureState::normalized({Complex(s * v.x[0], s * v.x[1]),
                                Complex(s * v.x[2], s * v.x[3]), Complex(c, 0.0)});
}

std::vector<PureState> shell_states(PolytopeKind polytope, double theta) {
  std::vector<PureState> out;
  for (const auto& v : vertices(polytope)) {
    PureState s = state_from_point(theta, v);
    bool seen = false;
    for (const auto& prev : out) {
      if (same_vector(prev, s)) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(std::move(s));
  }
  return out;
}

Spin1Povm assemble(std::vector<ShellSpec> shells, int copies, std::string id) {
  Spin1Povm out;
  out.povm.id = std::move(id);
  out.povm.dim = 3;
  out.povm.copies = copies;
  out.povm.spin = 1.0;
  for (const auto& sh : shells) {
    check_theta(sh.theta);
    if (!(sh.weight >= 0.0)) throw std::invalid_argument("shell weight must be non-negative");
    if (sh.weight == 0.0) continue;
    for (auto& s : shell_states(sh.polytope, sh.theta)) {
      out.povm.elements.push_back({sh.weight, std::move(s)});
    }
  }
  out.shells = std::move(shells);
  return out;
}

std::vector<double> table1_angles(int copies) {
  switch (copies) {
    case 2: return {kPi / 4, kPi / 2};
    case 3:
    case 4: return {kPi / 6, kPi / 4, kPi / 3, kPi / 2};
    case 5: return {kPi / 6, kPi / 4, kPi / 3, kPi / 2, kPi / 8, 3 * kPi / 8};
    default: throw std::out_of_range("spin-1 POVMs are available for N = 2..5 only");
  }
}

std::vector<double> table1_weights(int copies) {
  const double r2 = std::sqrt(2.0);
  switch (copies) {
    case 2: return {1.0 / 6, 1.0 / 12};
    case 3: return {2.0 / 27, 1.0 / 18, 2.0 / 9, 7.0 / 108};
    case 4: return {1.0 / 45, 1.0 / 60, 1.0 / 15, 7.0 / 360};
    case 5: return {2.0 / 225, 17.0 / 300, 2.0 / 75, 29.0 / 1800, (2 - r2) / 60, (2 + r2) / 60};
    default: throw std::out_of_range("spin-1 POVMs are available for N = 2..5 only");
  }
}

PolytopeKind table1_polytope(int copies) {
  if (copies < 2 || copies > 5) throw std::out_of_range("spin-1 POVMs are available for N = 2..5 only");
  return copies <= 3 ? PolytopeKind::Cell24 : PolytopeKind::Cell600;
}

Spin1Povm build_table1_povm(int copies) {
  const auto angles = table1_angles(copies);
  const auto weights = table1_weights(copies);
  const auto poly = table1_polytope(copies);
  std::vector<ShellSpec> shells;
  for (std::size_t i = 0; i < angles.size(); ++i) shells.push_back({angles[i], weights[i], poly});
  Spin1Povm out = assemble(std::move(shells), copies, "table1-N" + std::to_string(copies));
  out.povm.provenance = "spin-1 optimal POVM, " + describe(poly, copies);
  return out;
}

double shell_sum(const std::vector<PureState>& shell, int copies, double theta, double phi,
                 double chi1, double chi2) {
  const double st = std::sin(theta);
  const PureState probe = PureState::normalized({std::polar(st * std::cos(phi), chi1),
                                                 std::polar(st * std::sin(phi), chi2),
                                                 Complex(std::cos(theta), 0.0)});
  double s = 0.0;
  for (const auto& r : shell) s += ipow(overlap_sq(probe, r), copies);
  return s;
}

double ShellPolynomial::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

AngularDependenceError::AngularDependenceError(PolytopeKind polytope, int copies,
                                               double deviation)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "shell sum on " << to_string(polytope) << " for N=" << copies
           << " depends on the azimuthal angles (max deviation " << deviation << ")";
        return os.str();
      }()),
      deviation_(deviation) {}

InfeasibleWeightsError::InfeasibleWeightsError(const std::string& what, double residual,
                                               int offending_index, double offending_weight)
    : std::runtime_error(what),
      residual_(residual),
      offending_index_(offending_index),
      offending_weight_(offending_weight) {}

ShellPolynomial shell_polynomial(PolytopeKind polytope, double theta_r, int copies) {
  if (copies < 1) throw std::invalid_argument("shell_polynomial: N must be at least 1");
  check_theta(theta_r);
  const auto shell = shell_states(polytope, theta_r);
  const int m = copies + 1;

  // Fit on Chebyshev nodes in t at a fixed azimuthal triple.
  constexpr double kFitPhi = 0.3, kFitChi1 = 0.7, kFitChi2 = 1.9;
  Eigen::MatrixXd vander(m, m);
  Eigen::VectorXd rhs(m);
  for (int k = 0; k < m; ++k) {
    const double t = 0.5 * (1.0 - std::cos((2.0 * k + 1.0) * kPi / (2.0 * m)));
    double tp = 1.0;
    for (int j = 0; j < m; ++j, tp *= t) vander(k, j) = tp;
    rhs(k) = shell_sum(shell, copies, std::acos(std::sqrt(t)), kFitPhi, kFitChi1, kFitChi2);
  }
  const Eigen::VectorXd c = vander.colPivHouseholderQr().solve(rhs);

  ShellPolynomial poly{polytope, theta_r, copies, std::vector<double>(c.data(), c.data() + m), 0.0};

  Rng rng(0x5eedULL + static_cast<std::uint64_t>(copies));
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const double theta = 0.5 * kPi * rng.uniform();
    const double phi = 0.5 * kPi * rng.uniform();
    const double chi1 = 2.0 * kPi * rng.uniform();
    const double chi2 = 2.0 * kPi * rng.uniform();
    const double ct = std::cos(theta);
    const double direct = shell_sum(shell, copies, theta, phi, chi1, chi2);
    worst = std::max(worst, std::abs(direct - poly(ct * ct)));
  }
  poly.angular_deviation = worst;
  if (worst > kAggregateTol) throw AngularDependenceError(polytope, copies, worst);
  return poly;
}

WeightSolution solve_weights(PolytopeKind polytope, const std::vector<double>& angles,
                             int copies) {
  if (angles.empty()) throw std::invalid_argument("solve_weights: need at least one angle");
  for (std::size_t i = 0; i < angles.size(); ++i) {
    for (std::size_t j = i + 1; j < angles.size(); ++j) {
      if (std::abs(angles[i] - angles[j]) <= kExactTol) {
        throw std::invalid_argument("solve_weights: angles must be distinct");
      }
    }
  }
  const int m = copies + 1;
  const int k = static_cast<int>(angles.size());
  Eigen::MatrixXd a(m, k);
  for (int r = 0; r < k; ++r) {
    const auto poly = shell_polynomial(polytope, angles[static_cast<std::size_t>(r)], copies);
    for (int j = 0; j < m; ++j) a(j, r) = poly.coeffs[static_cast<std::size_t>(j)];
  }
  Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
  b(0) = 1.0;
  const Eigen::VectorXd c = a.completeOrthogonalDecomposition().solve(b);
  const double residual = (a * c - b).norm();
  if (residual > kAggregateTol) {
    std::ostringstream os;
    os << "no weights make the shell sum identically 1 for these angles (residual " << residual
       << ")";
    throw InfeasibleWeightsError(os.str(), residual, -1, 0.0);
  }
  WeightSolution sol{std::vector<double>(static_cast<std::size_t>(k)), residual};
  for (int r = 0; r < k; ++r) {
    const double w = c(r);
    if (w < -kExactTol) {
      std::ostringstream os;
      os << "weight for angle #" << r << " is negative (" << w << ")";
      throw InfeasibleWeightsError(os.str(), residual, r, w);
    }
    sol.weights[static_cast<std::size_t>(r)] = std::max(w, 0.0);
  }
  return sol;
}

}  // namespace optpovm::spin1
