#include "optpovm/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace optpovm {

namespace {

double squared_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return s;
}

void require_finite(const std::vector<Complex>& v) {
  for (const auto& a : v) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("non-finite amplitude");
    }
  }
}

// Exact in double up to 22!.
double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

void enumerate_rec(int slot, int remaining, SymMultiIndex& cur,
                   std::vector<SymMultiIndex>& out) {
  const int last = static_cast<int>(cur.size()) - 1;
  if (slot == last) {
    cur[static_cast<std::size_t>(slot)] = remaining;
    out.push_back(cur);
    return;
  }
  for (int n = remaining; n >= 0; --n) {
    cur[static_cast<std::size_t>(slot)] = n;
    enumerate_rec(slot + 1, remaining - n, cur, out);
  }
}

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw std::invalid_argument("PureState: empty amplitude vector");
  require_finite(amps_);
  const double n2 = squared_norm(amps_);
  if (std::abs(n2 - 1.0) > kExactTol) {
    throw std::invalid_argument("PureState: squared norm " + std::to_string(n2) + " is not 1");
  }
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
  require_finite(amplitudes);
  const double n = std::sqrt(squared_norm(amplitudes));
  if (!(n > 0.0)) throw std::invalid_argument("PureState: zero vector cannot be normalized");
  for (auto& a : amplitudes) a /= n;
  return PureState(std::move(amplitudes));
}

Complex inner(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
  Complex s{0.0, 0.0};
  for (int i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double overlap_sq(const PureState& a, const PureState& b) { return std::norm(inner(a, b)); }

std::int64_t multiset_count(int dim, int copies) {
  if (dim < 1 || copies < 0) throw std::invalid_argument("multiset_count: need D >= 1, N >= 0");
  // C(N+D-1, D-1), built incrementally so every intermediate is an integer.
  std::int64_t c = 1;
  for (int k = 1; k <= dim - 1; ++k) c = c * (copies + k) / k;
  return c;
}

std::int64_t sym_dim(int dim, int copies) {
  if (dim < 2) throw std::invalid_argument("sym_dim: D must be at least 2");
  if (copies < 1) throw std::invalid_argument("sym_dim: N must be at least 1");
  return multiset_count(dim, copies);
}

std::vector<SymMultiIndex> enumerate_multi_indices(int dim, int copies) {
  std::vector<SymMultiIndex> out;
  out.reserve(static_cast<std::size_t>(multiset_count(dim, copies)));
  SymMultiIndex cur(static_cast<std::size_t>(dim), 0);
  enumerate_rec(0, copies, cur, out);
  return out;
}

SymmetricVector::SymmetricVector(int dim, int copies, std::vector<Complex> coords)
    : dim_(dim), copies_(copies), coords_(std::move(coords)) {
  if (static_cast<std::int64_t>(coords_.size()) != multiset_count(dim, copies)) {
    throw std::invalid_argument("SymmetricVector: coordinate count does not match (D, N)");
  }
  require_finite(coords_);
}

Complex inner(const SymmetricVector& a, const SymmetricVector& b) {
  if (a.dim() != b.dim() || a.copies() != b.copies()) {
    throw std::invalid_argument("inner: (D, N) mismatch");
  }
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a.coords()[i]) * b.coords()[i];
  return s;
}

SymmetricVector symmetric_power(const PureState& state, int copies) {
  if (copies < 1) throw std::invalid_argument("symmetric_power: N must be at least 1");
  const double n2 = squared_norm(state.amplitudes());
  if (std::abs(n2 - 1.0) > kExactTol) {
    throw std::invalid_argument("symmetric_power: input state is not normalized");
  }
  const int d = state.dim();
  const double n_fact = factorial(copies);
  std::vector<Complex> coords;
  for (const auto& idx : enumerate_multi_indices(d, copies)) {
    double denom = 1.0;
    Complex prod{1.0, 0.0};
    for (int j = 0; j < d; ++j) {
      const int n = idx[static_cast<std::size_t>(j)];
      denom *= factorial(n);
      for (int k = 0; k < n; ++k) prod *= state[j];
    }
    coords.push_back(std::sqrt(n_fact / denom) * prod);
  }
  return SymmetricVector(d, copies, std::move(coords));
}

HermitianMatrix::HermitianMatrix(int dim) : m_(Eigen::MatrixXcd::Zero(dim, dim)) {
  if (dim < 1) throw std::invalid_argument("HermitianMatrix: dimension must be positive");
}

void HermitianMatrix::add_rank_one(double weight, std::span<const Complex> v) {
  if (static_cast<Eigen::Index>(v.size()) != m_.rows()) {
    throw std::invalid_argument("add_rank_one: vector length does not match matrix");
  }
  const Eigen::Map<const Eigen::VectorXcd> col(v.data(), m_.rows());
  m_.noalias() += weight * (col * col.adjoint());
}

double HermitianMatrix::hermiticity_residual() const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

double HermitianMatrix::identity_residual() const {
  return (m_ - Eigen::MatrixXcd::Identity(m_.rows(), m_.cols())).norm();
}

double accumulate_identity_residual(std::span<const WeightedSymmetricVector> terms) {
  if (terms.empty()) throw std::invalid_argument("accumulate_identity_residual: no terms");
  const int d = terms.front().vector.dim();
  const int n = terms.front().vector.copies();
  HermitianMatrix acc(static_cast<int>(terms.front().vector.size()));
  for (const auto& t : terms) {
    if (t.vector.dim() != d || t.vector.copies() != n) {
      throw std::invalid_argument("accumulate_identity_residual: mixed (D, N) among terms");
    }
    if (!(t.weight >= 0.0) || !std::isfinite(t.weight)) {
      throw std::invalid_argument("accumulate_identity_residual: weights must be non-negative");
    }
    acc.add_rank_one(t.weight, t.vector.coords());
  }
  return acc.identity_residual();
}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  have_spare_ = true;
  return u * f;
}

std::uint64_t Rng::derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

PureState haar_random_state(int dim, Rng& rng) {
  if (dim < 2) throw std::invalid_argument("haar_random_state: D must be at least 2");
  std::vector<Complex> amps(static_cast<std::size_t>(dim));
  for (auto& a : amps) {
    const double re = rng.normal();
    const double im = rng.normal();
    a = Complex(re, im);
  }
  return PureState::normalized(std::move(amps));
}

}  // namespace optpovm
