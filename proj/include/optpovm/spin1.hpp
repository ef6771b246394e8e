#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "optpovm/linalg.hpp"
#include "optpovm/polytopes.hpp"
#include "optpovm/povm.hpp"

namespace optpovm::spin1 {

/// One shell: every polytope vertex combined with a common polar angle and
/// a common per-state weight.
struct ShellSpec {
  double theta;
  double weight;
  PolytopeKind polytope;
};

struct Spin1Povm {
  std::vector<ShellSpec> shells;
  Povm povm;
};

/// (sin(theta)(x1 + i x2), sin(theta)(x3 + i x4), cos(theta)).
PureState state_from_point(double theta, const Vertex4& v);

/// The distinct states of one shell. Identical vectors are merged, so the
/// theta = 0 shell collapses to the single state (0, 0, 1); antipodal
/// vertices give states that differ by a sign and are both kept.
std::vector<PureState> shell_states(PolytopeKind polytope, double theta);

/// Spin-1 POVM assembled from shells; zero-weight shells are dropped.
Spin1Povm assemble(std::vector<ShellSpec> shells, int copies, std::string id);

/// The optimal spin-1 POVMs for N = 2..5 copies (24-cell for N = 2, 3;
/// 600-cell for N = 4, 5). Throws std::out_of_range for other N.
Spin1Povm build_table1_povm(int copies);

/// Polar angles and exact weights shipped for build_table1_povm.
std::vector<double> table1_angles(int copies);
std::vector<double> table1_weights(int copies);
PolytopeKind table1_polytope(int copies);

/// Sum over a shell of |<psi(theta, phi, chi1, chi2)|psi_r>|^{2N}, where the
/// probe state is (e^{i chi1} sin(theta) cos(phi), e^{i chi2} sin(theta) sin(phi), cos(theta)).
double shell_sum(const std::vector<PureState>& shell, int copies, double theta, double phi,
                 double chi1, double chi2);

/// Coefficients of the shell sum as a polynomial in t = cos^2(theta).
struct ShellPolynomial {
  PolytopeKind polytope;
  double theta_r;
  int copies;
  std::vector<double> coeffs;  // t^0 .. t^N
  double angular_deviation;    // worst mismatch seen while checking

  double operator()(double t) const;
};

class AngularDependenceError : public std::runtime_error {
 public:
  AngularDependenceError(PolytopeKind polytope, int copies, double deviation);
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

class InfeasibleWeightsError : public std::runtime_error {
 public:
  InfeasibleWeightsError(const std::string& what, double residual, int offending_index,
                         double offending_weight);
  double residual() const { return residual_; }
  /// -1 when the failure is the residual, not a negative weight.
  int offending_index() const { return offending_index_; }
  double offending_weight() const { return offending_weight_; }

 private:
  double residual_;
  int offending_index_;
  double offending_weight_;
};

/// Fits the shell sum at N+1 Chebyshev-spaced values of t, then checks the
/// fit against direct sums at 20 random (theta, phi, chi1, chi2) points.
/// Throws AngularDependenceError when the deviation exceeds kAggregateTol,
/// which is how a polytope that cannot cancel the angular dependence for
/// this N shows up.
ShellPolynomial shell_polynomial(PolytopeKind polytope, double theta_r, int copies);

struct WeightSolution {
  std::vector<double> weights;  // per state, one per angle
  double residual;              // ||A c - e_0||
};

/// Per-state weights that make the combined shell polynomial identically 1.
/// Least squares over the N+1 coefficient equations; fails when the residual
/// exceeds kAggregateTol or a weight is below -kExactTol (tiny negatives are
/// clamped to 0).
WeightSolution solve_weights(PolytopeKind polytope, const std::vector<double>& angles,
                             int copies);

}  // namespace optpovm::spin1
