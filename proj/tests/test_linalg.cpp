#include <cmath>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "optpovm/estimator.hpp"
#include "optpovm/linalg.hpp"

using namespace optpovm;

TEST_CASE("sym_dim") {
  CHECK(sym_dim(3, 2) == 6);
  for (int d = 2; d <= 5; ++d) CHECK(sym_dim(d, 1) == d);
  CHECK(oracle::count_multisets(4, 3) == 20);
  CHECK(sym_dim(4, 3) == 20);
  CHECK(sym_dim(3, 5) == 21);

  CHECK_THROWS_AS(sym_dim(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(sym_dim(3, 0), std::invalid_argument);
}

TEST_CASE("multi-index enumeration is a bijection in decreasing lexicographic order") {
  for (int d = 2; d <= 4; ++d) {
    for (int n = 1; n <= 5; ++n) {
      const auto idx = enumerate_multi_indices(d, n);
      CHECK(static_cast<long>(idx.size()) == oracle::count_multisets(d, n));
      CHECK(static_cast<std::int64_t>(idx.size()) == sym_dim(d, n));
      std::set<SymMultiIndex> unique(idx.begin(), idx.end());
      CHECK(unique.size() == idx.size());
      for (std::size_t i = 1; i < idx.size(); ++i) CHECK(idx[i - 1] > idx[i]);
      for (const auto& m : idx) {
        int s = 0;
        for (int x : m) s += x;
        CHECK(s == n);
      }
    }
  }
  const auto first = enumerate_multi_indices(3, 2);
  CHECK(first.front() == SymMultiIndex{2, 0, 0});
  CHECK(first.back() == SymMultiIndex{0, 0, 2});
}

TEST_CASE("PureState construction") {
  CHECK_NOTHROW(PureState({1.0, 0.0, 0.0}));
  CHECK_THROWS_AS(PureState({1.0, 1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(PureState::normalized({0.0, 0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(PureState::normalized({std::nan(""), 1.0}), std::invalid_argument);
  const auto s = PureState::normalized({Complex(1, 1), 2.0, Complex(0, -1)});
  CHECK(inner(s, s).real() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("symmetric_power of a basis state") {
  const auto v = symmetric_power(PureState({0.0, 0.0, 1.0}), 3);
  const auto idx = enumerate_multi_indices(3, 3);
  // Basis state e_3 puts all occupation in the last slot.
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const bool hit = idx[i] == SymMultiIndex{0, 0, 3};
    CHECK(std::abs(v.coords()[i] - Complex(hit ? 1.0 : 0.0)) < 1e-15);
  }
  const auto e1 = symmetric_power(PureState({1.0, 0.0, 0.0}), 3);
  CHECK(std::abs(e1.coords()[0] - Complex(1.0)) < 1e-15);
}

TEST_CASE("symmetric_power preconditions") {
  // Non-normalized amplitudes never reach symmetric_power: PureState refuses them.
  CHECK_THROWS_AS(PureState({1.0, 1e-5}), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_power(PureState({1.0, 0.0}), 0), std::invalid_argument);
}

TEST_CASE("symmetric-power overlap law against explicit tensor products") {
  Rng rng(11);
  for (int d : {3, 4}) {
    for (int n = 1; n <= 3; ++n) {
      for (int trial = 0; trial < 100; ++trial) {
        const auto a = haar_random_state(d, rng);
        const auto b = haar_random_state(d, rng);
        const Complex sym = inner(symmetric_power(a, n), symmetric_power(b, n));
        const Complex full = oracle::dot(oracle::full_tensor_power(a.amplitudes(), n),
                                         oracle::full_tensor_power(b.amplitudes(), n));
        CHECK(std::abs(sym - full) < 1e-12);
        CHECK(std::abs(sym - std::pow(inner(a, b), n)) < 1e-12);
      }
    }
  }
}

TEST_CASE("symmetric_power output has unit norm") {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = haar_random_state(3, rng);
    const auto v = symmetric_power(s, 5);
    CHECK(std::abs(inner(v, v).real() - 1.0) < 1e-12);
  }
}

TEST_CASE("haar_random_state is deterministic per seed") {
  Rng a(99), b(99);
  CHECK(haar_random_state(4, a) == haar_random_state(4, b));
  Rng c(100);
  CHECK_FALSE(haar_random_state(4, c) == haar_random_state(4, b));
  CHECK_THROWS_AS(haar_random_state(1, a), std::invalid_argument);
}

TEST_CASE("Haar first moment and higher moments") {
  Rng rng(2024);
  const int draws = 100000;
  for (int d : {3, 4}) {
    const PureState e1 = [&] {
      std::vector<Complex> v(static_cast<std::size_t>(d), 0.0);
      v[0] = 1.0;
      return PureState(v);
    }();
    const PureState ref = haar_random_state(d, rng);
    for (int m = 1; m <= 3; ++m) {
      double sum = 0.0, sum2 = 0.0;
      double s1 = 0.0;
      for (int i = 0; i < draws; ++i) {
        const auto psi = haar_random_state(d, rng);
        const double x = std::pow(overlap_sq(ref, psi), m);
        sum += x;
        sum2 += x * x;
        if (m == 1) s1 += overlap_sq(e1, psi);
      }
      const double mean = sum / draws;
      const double se = std::sqrt((sum2 / draws - mean * mean) / (draws - 1));
      CAPTURE(d);
      CAPTURE(m);
      CHECK(std::abs(mean - haar_moment(d, m)) < 5 * se);
      if (m == 1) CHECK(std::abs(s1 / draws - 1.0 / d) < 5 * se);
    }
  }
}

TEST_CASE("Haar moment formula matches quadrature over the polar parametrization") {
  const auto ref = PureState::normalized({Complex(0.3, 0.2), -0.5, Complex(0.1, 0.7)});
  for (int m = 1; m <= 6; ++m) {
    CAPTURE(m);
    CHECK(std::abs(oracle::haar_moment_quadrature_d3(ref.amplitudes(), m) - haar_moment(3, m)) < 1e-6);
  }
}

TEST_CASE("accumulate_identity_residual") {
  SUBCASE("single term on a one-dimensional space") {
    std::vector<WeightedSymmetricVector> t{{1.0, SymmetricVector(1, 1, {1.0})}};
    CHECK(accumulate_identity_residual(t) == doctest::Approx(0.0));
  }
  SUBCASE("orthonormal basis of C^3, one copy") {
    std::vector<WeightedSymmetricVector> t;
    for (int k = 0; k < 3; ++k) {
      std::vector<Complex> v(3, 0.0);
      v[static_cast<std::size_t>(k)] = 1.0;
      t.push_back({1.0, symmetric_power(PureState(v), 1)});
    }
    CHECK(accumulate_identity_residual(t) < 1e-15);
    t.pop_back();
    CHECK(accumulate_identity_residual(t) == doctest::Approx(1.0));
  }
  SUBCASE("mixed (D, N) rejected") {
    std::vector<WeightedSymmetricVector> t{
        {1.0, symmetric_power(PureState({1.0, 0.0, 0.0}), 2)},
        {1.0, symmetric_power(PureState({1.0, 0.0, 0.0}), 3)}};
    CHECK_THROWS_AS(accumulate_identity_residual(t), std::invalid_argument);
  }
  SUBCASE("empty rejected") {
    CHECK_THROWS_AS(accumulate_identity_residual({}), std::invalid_argument);
  }
}

TEST_CASE("HermitianMatrix stays Hermitian") {
  Rng rng(5);
  HermitianMatrix m(6);
  for (int i = 0; i < 20; ++i) {
    const auto v = symmetric_power(haar_random_state(3, rng), 2);
    m.add_rank_one(0.3, v.coords());
  }
  CHECK(m.hermiticity_residual() < 1e-12);
}

TEST_CASE("derived seeds differ per shard and are stable") {
  CHECK(Rng::derive_seed(1, 0) == Rng::derive_seed(1, 0));
  CHECK(Rng::derive_seed(1, 0) != Rng::derive_seed(1, 1));
  CHECK(Rng::derive_seed(1, 0) != Rng::derive_seed(2, 0));
}
