#include <cmath>
#include <complex>
#include <random>

#include "core/bialternate.hpp"
#include "core/dense_matrix.hpp"
#include "core/eigen_qr.hpp"
#include "core/errors.hpp"
#include "core/lu.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace bifkit;
using namespace bifkit::testing;

namespace {

std::vector<std::complex<double>> pairwise_sums(
    const std::vector<std::complex<double>>& ev) {
  std::vector<std::complex<double>> sums;
  for (size_t i = 0; i < ev.size(); ++i)
    for (size_t j = 0; j < i; ++j) sums.push_back(ev[i] + ev[j]);
  return sums;
}

}  // namespace

TEST_CASE("dense matrix rejects non-finite entries") {
  CHECK_THROWS_AS(DenseMatrix(2, 2, {1.0, 2.0, std::nan(""), 4.0}), Error);
  CHECK_THROWS_AS(DenseMatrix(2, 2, {1.0, 2.0, 3.0}), Error);
  CHECK_NOTHROW(DenseMatrix(2, 2, {1.0, 2.0, 3.0, 4.0}));
}

TEST_CASE("lu: identity factors trivially") {
  const auto f = lu_factor(DenseMatrix::identity(3));
  CHECK(!f.singular);
  CHECK(f.parity == 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(f.lu(i, j) == (i == j ? 1.0 : 0.0));
  CHECK(f.determinant() == 1.0);
}

TEST_CASE("lu: swap matrix has parity -1 and det -1") {
  const auto f = lu_factor(DenseMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}));
  CHECK(!f.singular);
  CHECK(f.parity == -1);
  CHECK(f.determinant() == -1.0);
}

TEST_CASE("lu: reconstruction of random 6x6") {
  std::mt19937 rng(42);
  const DenseMatrix a = random_matrix(rng, 6);
  const auto f = lu_factor(a);
  REQUIRE(!f.singular);
  // P*A = L*U, so A[perm[i]][j] must equal (L*U)(i,j).
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      double lu_ij = 0.0;
      for (int k = 0; k <= i; ++k) {
        const double l = (k == i) ? 1.0 : f.lu(i, k);
        const double u = (k <= j) ? f.lu(k, j) : 0.0;
        lu_ij += l * u;
      }
      CHECK(std::abs(a(f.perm[i], j) - lu_ij) < 1e-12);
    }
  }
}

TEST_CASE("lu_solve: identity and diagonal") {
  {
    const auto f = lu_factor(DenseMatrix::identity(3));
    const std::vector<double> b{1.0, -2.0, 3.0};
    CHECK(f.solve(b) == b);
  }
  {
    const auto f = lu_factor(DenseMatrix(2, 2, {2.0, 0.0, 0.0, 4.0}));
    const auto x = f.solve(std::vector<double>{2.0, 8.0});
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(x[1] == doctest::Approx(2.0).epsilon(1e-15));
  }
}

TEST_CASE("lu_solve: random 8x8 agrees with elimination oracle") {
  std::mt19937 rng(7);
  const DenseMatrix a = random_matrix(rng, 8);
  std::vector<double> b(8);
  for (auto& x : b) x = std::uniform_real_distribution<double>(-1, 1)(rng);

  const auto x_lu = lu_factor(a).solve(b);
  const auto x_oracle = gauss_solve(a, b);
  for (int i = 0; i < 8; ++i) CHECK(std::abs(x_lu[i] - x_oracle[i]) < 1e-10);
}

TEST_CASE("lu_solve: residual bound on well-conditioned systems") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 6;
    DenseMatrix a = random_matrix(rng, n);
    for (int i = 0; i < n; ++i) a(i, i) += 3.0;  // keep it well conditioned
    std::vector<double> b(n);
    for (auto& x : b) x = std::uniform_real_distribution<double>(-1, 1)(rng);
    const auto x = lu_factor(a).solve(b);

    double norm_a = 0.0, norm_x = 0.0, norm_b = 0.0, resid = 0.0;
    for (int i = 0; i < n; ++i) {
      double row = 0.0, ax = 0.0;
      for (int j = 0; j < n; ++j) {
        row += std::abs(a(i, j));
        ax += a(i, j) * x[j];
      }
      norm_a = std::max(norm_a, row);
      norm_x = std::max(norm_x, std::abs(x[i]));
      norm_b = std::max(norm_b, std::abs(b[i]));
      resid = std::max(resid, std::abs(ax - b[i]));
    }
    CHECK(resid <= 1e-10 * (norm_a * norm_x + norm_b));
  }
}

TEST_CASE("lu: singular input is reported, solve throws, det is 0") {
  // duplicated row
  const DenseMatrix a(3, 3, {1.0, 2.0, 3.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
  const auto f = lu_factor(a);
  CHECK(f.singular);
  CHECK(f.determinant() == 0.0);
  CHECK(determinant(a) == 0.0);
  CHECK_THROWS_AS((void)f.solve(std::vector<double>{1.0, 2.0, 3.0}), Error);
}

TEST_CASE("determinant: identity and cofactor oracle") {
  CHECK(determinant(DenseMatrix::identity(5)) == 1.0);

  std::mt19937 rng(3);
  const DenseMatrix a = random_matrix(rng, 5);
  const double expected = cofactor_determinant(a);
  CHECK(determinant(a) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("eigenvalues: diagonal matrix") {
  const auto e = eigenvalues(DenseMatrix(3, 3, {1, 0, 0, 0, 2, 0, 0, 0, 3}));
  CHECK(e.converged);
  CHECK(multiset_match_distance(e.values, {{1, 0}, {2, 0}, {3, 0}}) < 1e-12);
}

TEST_CASE("eigenvalues: rotation block gives +-i") {
  const auto e = eigenvalues(DenseMatrix(2, 2, {0.0, -1.0, 1.0, 0.0}));
  CHECK(e.converged);
  CHECK(multiset_match_distance(e.values, {{0, 1}, {0, -1}}) < 1e-12);
}

TEST_CASE("eigenvalues: companion matrix of (x-1)(x-2)(x-3)") {
  const auto coeffs = poly_from_roots({1.0, 2.0, 3.0});
  // x^3 - 6x^2 + 11x - 6
  CHECK(coeffs == std::vector<double>{1.0, -6.0, 11.0, -6.0});
  const auto e = eigenvalues(companion_matrix(coeffs));
  CHECK(e.converged);
  CHECK(multiset_match_distance(e.values, {{1, 0}, {2, 0}, {3, 0}}) < 1e-8);
}

TEST_CASE("eigenvalues: companion matrices up to degree 8") {
  const std::vector<std::vector<double>> root_sets = {
      {1, -1},
      {1, 2, 3, 4},
      {-3, -1, 0, 2, 5},
      {1, 2, 3, 4, 5, 6, 7},
      {-4, -3, -2, -1, 1, 2, 3, 4},
  };
  for (const auto& roots : root_sets) {
    const auto e = eigenvalues(companion_matrix(poly_from_roots(roots)));
    REQUIRE(e.converged);
    std::vector<std::complex<double>> expected;
    for (double r : roots) expected.emplace_back(r, 0.0);
    CHECK(multiset_match_distance(e.values, expected) < 1e-8);
  }
}

TEST_CASE("eigenvalues: conjugate-pair closure on random matrices") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 6;
    const auto e = eigenvalues(random_matrix(rng, n));
    REQUIRE(e.converged);
    REQUIRE(static_cast<int>(e.values.size()) == n);
    for (const auto& ev : e.values) {
      if (std::abs(ev.imag()) <= 1e-10) continue;
      bool found = false;
      for (const auto& other : e.values)
        if (std::abs(other - std::conj(ev)) < 1e-10 * std::max(1.0, std::abs(ev)))
          found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("property: det from LU equals product of QR eigenvalues") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 6;
    const DenseMatrix a = random_matrix(rng, n);
    const auto e = eigenvalues(a);
    REQUIRE(e.converged);
    std::complex<double> prod{1.0, 0.0};
    for (const auto& ev : e.values) prod *= ev;
    const double det = determinant(a);
    const double scale = std::max(1.0, std::abs(det));
    CHECK(std::abs(prod.real() - det) < 1e-6 * scale);
    CHECK(std::abs(prod.imag()) < 1e-6 * scale);
  }
}

TEST_CASE("bialternate: n=2 collapses to the trace") {
  const auto b = bialternate(DenseMatrix(2, 2, {1.5, 2.0, 3.0, -0.5}));
  REQUIRE(b.rows() == 1);
  CHECK(b(0, 0) == 1.0);  // a + d
}

TEST_CASE("bialternate: diagonal input gives pairwise sums on the diagonal") {
  const std::vector<double> lam{2.0, -1.0, 0.5, 3.0};
  DenseMatrix a(4, 4);
  for (int i = 0; i < 4; ++i) a(i, i) = lam[i];
  const auto b = bialternate(a);
  REQUIRE(b.rows() == 6);
  int row = 0;
  for (int p = 1; p < 4; ++p) {
    for (int q = 0; q < p; ++q, ++row) {
      for (int col = 0; col < 6; ++col)
        CHECK(b(row, col) == (col == row ? lam[p] + lam[q] : 0.0));
    }
  }
}

TEST_CASE("bialternate: identity maps to 2I") {
  for (int n : {2, 3, 5, 8}) {
    const auto b = bialternate(DenseMatrix::identity(n));
    const int m = n * (n - 1) / 2;
    REQUIRE(b.rows() == m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) CHECK(b(i, j) == (i == j ? 2.0 : 0.0));
  }
}

TEST_CASE("bialternate: rejects n < 2") {
  CHECK_THROWS_AS((void)bialternate(DenseMatrix(1, 1, {3.0})), Error);
}

TEST_CASE("bialternate: spectrum is the pairwise eigenvalue sums (5x5)") {
  std::mt19937 rng(5);
  const DenseMatrix a = random_matrix(rng, 5);
  const auto ea = eigenvalues(a);
  const auto eb = eigenvalues(bialternate(a));
  REQUIRE(ea.converged);
  REQUIRE(eb.converged);
  CHECK(multiset_match_distance(eb.values, pairwise_sums(ea.values)) < 1e-8);
}

TEST_CASE("property: bialternate eigenvalue identity on 100 random matrices") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 4;
    const DenseMatrix a = random_matrix(rng, n);
    const auto ea = eigenvalues(a);
    const auto eb = eigenvalues(bialternate(a));
    REQUIRE(ea.converged);
    REQUIRE(eb.converged);
    CHECK(multiset_match_distance(eb.values, pairwise_sums(ea.values)) < 1e-8);
  }
}
