#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "bhdimer/error.hpp"
#include "bhdimer/model.hpp"
#include "bhdimer/tridiagonal_eigen.hpp"
#include "oracles/dense_oracle.hpp"

using namespace bhdimer;

namespace {

double orthonormality_error(const Spectrum& s) {
  const std::size_t n = s.size();
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      double dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) dot += s.eigenvectors(k, a) * s.eigenvectors(k, b);
      worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double reconstruction_error(const Spectrum& s, const TridiagonalHamiltonian& h) {
  const std::size_t n = s.size();
  double worst = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      double v = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        v += s.eigenvectors(r, j) * s.eigenvalues[j] * s.eigenvectors(c, j);
      }
      double expected = 0.0;
      if (r == c) expected = h.diag[r];
      if (c == r + 1) expected = h.offdiag[r];
      if (r == c + 1) expected = h.offdiag[c];
      worst = std::max(worst, std::abs(v - expected));
    }
  }
  return worst;
}

double spectral_radius(const Spectrum& s) {
  return std::max(std::abs(s.eigenvalues.front()), std::abs(s.eigenvalues.back()));
}

}  // namespace

TEST_SUITE("exact-engine") {

TEST_CASE("eigendecompose: 2x2 free hopping") {
  const auto s = eigendecompose(build_hamiltonian(ModelParams(1.0, 0.0, 1)));
  REQUIRE(s.size() == 2);
  CHECK(s.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(s.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("eigendecompose: U = 0 ladder with spacing 2J") {
  for (double J : {1.0, 0.7}) {
    const int N = 100;
    const auto s = eigendecompose(build_hamiltonian(ModelParams(J, 0.0, N)));
    for (int j = 0; j <= N; ++j) {
      CHECK(std::abs(s.eigenvalues[static_cast<std::size_t>(j)] - J * (2.0 * j - N)) <= 1e-9);
    }
  }
}

TEST_CASE("eigendecompose: N = 2 against the characteristic polynomial") {
  const ModelParams p(1.0, 0.1, 2);
  const auto h = build_hamiltonian(p);
  Eigen::Matrix3d a = Eigen::Matrix3d::Zero();
  for (int k = 0; k < 3; ++k) a(k, k) = h.diag[static_cast<std::size_t>(k)];
  for (int k = 0; k < 2; ++k) {
    a(k, k + 1) = a(k + 1, k) = h.offdiag[static_cast<std::size_t>(k)];
  }
  const auto roots = oracle::symmetric3_eigenvalues(a);
  const auto s = eigendecompose(h);
  for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(s.eigenvalues[j] - roots[j]) <= 1e-12);
}

TEST_CASE("eigendecompose: agrees with a dense solver, orthonormal, reconstructs H") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> J(0.2, 2.0), u(0.0, 3.0);
  std::uniform_int_distribution<int> N(1, 120);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = N(rng);
    const auto p = ModelParams::from_coupling(J(rng), u(rng), n);
    const auto h = build_hamiltonian(p);
    const auto s = eigendecompose(h);
    const auto dense = oracle::dense_eigenvalues(p.J(), p.U(), n);
    const double radius = spectral_radius(s);
    CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
    for (std::size_t j = 0; j < s.size(); ++j) {
      CHECK(std::abs(s.eigenvalues[j] - dense(static_cast<Eigen::Index>(j))) <= 1e-12 * radius);
    }
    CHECK(orthonormality_error(s) <= 1e-10);
    CHECK(reconstruction_error(s, h) <= 1e-10 * radius);
  }
}

TEST_CASE("eigendecompose: large N stays accurate") {
  const ModelParams p(1.0, 0.002, 500);
  const auto h = build_hamiltonian(p);
  const auto s = eigendecompose(h);
  CHECK(orthonormality_error(s) <= 1e-10);
  CHECK(reconstruction_error(s, h) <= 1e-10 * spectral_radius(s));
}

TEST_CASE("eigendecompose is deterministic") {
  const auto h = build_hamiltonian(ModelParams(1.0, 0.005, 100));
  const auto a = eigendecompose(h);
  const auto b = eigendecompose(h);
  CHECK(a.eigenvalues == b.eigenvalues);
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < a.size(); ++c) CHECK(a.eigenvectors(r, c) == b.eigenvectors(r, c));
  }
}

TEST_CASE("eigendecompose: already diagonal and trivial sizes") {
  TridiagonalHamiltonian h{{3.0, -1.0, 2.0}, {0.0, 0.0}};
  const auto s = eigendecompose(h);
  CHECK(s.eigenvalues == std::vector<double>{-1.0, 2.0, 3.0});
  CHECK(s.eigenvectors(1, 0) == 1.0);

  TridiagonalHamiltonian one{{4.5}, {}};
  CHECK(eigendecompose(one).eigenvalues == std::vector<double>{4.5});

  // Exactly tied eigenvalues keep their original order.
  TridiagonalHamiltonian tie{{1.0, 1.0}, {0.0}};
  const auto t = eigendecompose(tie);
  CHECK(t.eigenvectors(0, 0) == 1.0);
  CHECK(t.eigenvectors(1, 1) == 1.0);
}

TEST_CASE("eigendecompose: errors") {
  TridiagonalHamiltonian bad{{1.0, 2.0}, {}};
  CHECK_THROWS_AS(eigendecompose(bad), DimensionMismatch);
  CHECK_THROWS_AS(eigendecompose(TridiagonalHamiltonian{}), DimensionMismatch);

  const auto h = build_hamiltonian(ModelParams(1.0, 0.1, 10));
  try {
    eigendecompose(h, {.max_iterations_per_eigenvalue = 0});
    FAIL("expected ConvergenceFailure");
  } catch (const ConvergenceFailure& e) {
    CHECK(e.index() == 0);
  }
}

}  // TEST_SUITE
