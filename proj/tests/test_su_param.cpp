#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "qkr/errors.hpp"
#include "qkr/game.hpp"
#include "qkr/optimize.hpp"
#include "qkr/su_param.hpp"
#include "qkr/sweep.hpp"

using namespace qkr;

namespace {

double hermitian_defect(const SquareMatrix& t) {
  double worst = 0.0;
  for (int r = 0; r < t.dim(); ++r) {
    for (int c = 0; c < t.dim(); ++c) {
      worst = std::max(worst, std::abs(t(r, c) - std::conj(t(c, r))));
    }
  }
  return worst;
}

Complex trace_product(const SquareMatrix& a, const SquareMatrix& b) {
  return (a * b).trace();
}

}  // namespace

TEST_CASE("generator basis has m^2-1 orthonormal traceless Hermitian elements") {
  CHECK(generator_basis(2).matrices.size() == 3);
  CHECK(generator_basis(3).matrices.size() == 8);
  CHECK_THROWS_AS(generator_basis(1), InputError);
  CHECK_THROWS_AS(generator_basis(9), InputError);

  for (int m = 2; m <= 5; ++m) {
    const GeneratorBasis basis = generator_basis(m);
    REQUIRE(basis.matrices.size() == static_cast<std::size_t>(m) * m - 1);
    for (std::size_t a = 0; a < basis.matrices.size(); ++a) {
      CHECK(hermitian_defect(basis.matrices[a]) < 1e-14);
      CHECK(std::abs(basis.matrices[a].trace()) < 1e-14);
      for (std::size_t b = 0; b < basis.matrices.size(); ++b) {
        const Complex inner = trace_product(basis.matrices[a], basis.matrices[b]);
        CHECK(std::abs(inner - (a == b ? Complex{2.0, 0.0} : Complex{0.0, 0.0})) < 1e-12);
      }
    }
  }
}

TEST_CASE("zero parameters give the identity") {
  const GeneratorBasis basis = generator_basis(3);
  const UnitaryParams zero{3, std::vector<double>(8, 0.0)};
  const SquareMatrix u = unitary_from_params(zero, basis);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      CHECK(u(r, c) == (r == c ? Complex{1.0, 0.0} : Complex{0.0, 0.0}));
    }
  }
}

TEST_CASE("random parameter draws produce special unitaries") {
  const GeneratorBasis basis = generator_basis(3);
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const SquareMatrix u = unitary_from_params(random_params(seed, 3, 1.0), basis);
    CHECK(u.unitarity_defect() < 1e-12);
    CHECK(std::abs(u.determinant() - Complex{1.0, 0.0}) < 1e-10);
  }
}

TEST_CASE("unitary_from_params validates its input") {
  const GeneratorBasis basis = generator_basis(3);
  CHECK_THROWS_AS(unitary_from_params(UnitaryParams{3, std::vector<double>(7, 0.0)}, basis),
                  InputError);
  CHECK_THROWS_AS(unitary_from_params(UnitaryParams{2, std::vector<double>(3, 0.0)}, basis),
                  InputError);
  std::vector<double> bad(8, 0.0);
  bad[4] = std::nan("");
  CHECK_THROWS_AS(unitary_from_params(UnitaryParams{3, bad}, basis), InputError);
}

TEST_CASE("matrix exponential matches a plain series oracle") {
  for (int m = 2; m <= 3; ++m) {
    const GeneratorBasis basis = generator_basis(m);
    for (const auto& t : basis.matrices) {
      SquareMatrix arg(m);
      for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
          arg(r, c) = Complex{0.0, 1.0} * t(r, c);
        }
      }
      const SquareMatrix via_library = matrix_exp(arg);
      const SquareMatrix via_series = oracles::taylor_exp(arg, 60);
      double worst = 0.0;
      for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
          worst = std::max(worst, std::abs(via_library(r, c) - via_series(r, c)));
        }
      }
      CHECK(worst < 1e-10);
    }
  }

  // Larger arguments exercise the scaling path; exp(A)exp(-A) must be I.
  for (std::uint64_t seed = 11; seed <= 20; ++seed) {
    const GeneratorBasis basis = generator_basis(3);
    const UnitaryParams params = random_params(seed, 3, 1.0);
    SquareMatrix arg(3);
    for (std::size_t a = 0; a < params.coeffs.size(); ++a) {
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
          arg(r, c) += Complex{0.0, params.coeffs[a]} * basis.matrices[a](r, c);
        }
      }
    }
    SquareMatrix neg = arg;
    neg *= Complex{-1.0, 0.0};
    SquareMatrix product = matrix_exp(arg) * matrix_exp(neg);
    for (int i = 0; i < 3; ++i) {
      product(i, i) -= Complex{1.0, 0.0};
    }
    CHECK(product.max_abs() < 1e-13);
  }
}

TEST_CASE("fourier gate definition") {
  const SquareMatrix f3 = fourier_gate(3);
  const double w = 1.0 / std::sqrt(3.0);
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(f3(0, k) - Complex{w, 0.0}) < 1e-15);
  }
  CHECK(f3.unitarity_defect() < 1e-14);
  // omega^(jk) phase pattern: entry (1,1) is exp(2*pi*i/3).
  CHECK(std::abs(f3(1, 1) - std::polar(w, 2.0 * std::numbers::pi / 3.0)) < 1e-15);

  const SquareMatrix f2 = fourier_gate(2);
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(f2(0, 0) - Complex{h, 0.0}) < 1e-15);
  CHECK(std::abs(f2(0, 1) - Complex{h, 0.0}) < 1e-15);
  CHECK(std::abs(f2(1, 0) - Complex{h, 0.0}) < 1e-15);
  CHECK(std::abs(f2(1, 1) - Complex{-h, 0.0}) < 1e-15);

  CHECK_THROWS_AS(fourier_gate(1), InputError);
}

TEST_CASE("fourier gate maps GHZ onto the nine-state support") {
  const std::vector<SquareMatrix> ops(3, fourier_gate(3));
  const auto full = oracles::kron_full(ops);
  std::vector<Complex> ghz(27, Complex{0.0, 0.0});
  const double w = 1.0 / std::sqrt(3.0);
  ghz[0] = ghz[13] = ghz[26] = Complex{w, 0.0};
  const auto out = oracles::dense_apply(full, ghz);
  const std::vector<std::size_t> support = {0, 5, 7, 11, 13, 15, 19, 21, 26};
  for (std::size_t k = 0; k < 27; ++k) {
    const bool hit = std::find(support.begin(), support.end(), k) != support.end();
    CHECK(std::abs(std::norm(out[k]) - (hit ? 1.0 / 9.0 : 0.0)) < 1e-12);
  }
}

TEST_CASE("random_params is deterministic and range-bounded") {
  const UnitaryParams a = random_params(42, 3, 1.0);
  const UnitaryParams b = random_params(42, 3, 1.0);
  CHECK(a.coeffs == b.coeffs);

  const UnitaryParams c = random_params(43, 3, 1.0);
  bool any_different = false;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] != c.coeffs[i]) {
      any_different = true;
    }
  }
  CHECK(any_different);

  REQUIRE(a.coeffs.size() == 8);
  for (const double x : a.coeffs) {
    CHECK(x >= -std::numbers::pi);
    CHECK(x <= std::numbers::pi);
  }

  const UnitaryParams narrow = random_params(7, 3, 0.01);
  for (const double x : narrow.coeffs) {
    CHECK(std::abs(x) <= 0.01 * std::numbers::pi);
  }

  CHECK_THROWS_AS(random_params(1, 3, 0.0), InputError);
  CHECK_THROWS_AS(random_params(1, 1, 1.0), InputError);
}

TEST_CASE("global phase leaves payoffs untouched") {
  const OutcomePartition partition = build_partition(GameSpec{3, 3});
  const GeneratorBasis basis = generator_basis(3);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PureState initial = oracles::random_span_l_state(seed);
    const SquareMatrix u = unitary_from_params(random_params(seed, 3, 1.0), basis);
    const double base = symmetric_payoff(u, initial, partition);

    std::uint64_t phase_seed = seed * 31 + 7;
    const double phase = oracles::unit_double(phase_seed) * 2.0 * std::numbers::pi;
    SquareMatrix rotated = u;
    rotated *= std::polar(1.0, phase);
    CHECK(std::abs(symmetric_payoff(rotated, initial, partition) - base) < 1e-12);
  }
}

TEST_CASE("seed mixing separates restart streams") {
  CHECK(mix_seed(1, 0) != mix_seed(1, 1));
  CHECK(mix_seed(1, 0) != mix_seed(2, 0));
  CHECK(mix_seed(1, 5) == mix_seed(1, 5));
}
