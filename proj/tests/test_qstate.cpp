#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "oracles.hpp"
#include "qkr/errors.hpp"
#include "qkr/qstate.hpp"
#include "qkr/su_param.hpp"

using namespace qkr;

namespace {

PureState ghz3() {
  const WeightedChoice terms[] = {
      {{0, 0, 0}, Complex{1.0, 0.0}},
      {{1, 1, 1}, Complex{1.0, 0.0}},
      {{2, 2, 2}, Complex{1.0, 0.0}},
  };
  return superpose(terms, 3);
}

// Equal-weight superposition over the nine i+j+k = 0 (mod 3) outcomes.
PureState nine_state() {
  std::vector<WeightedChoice> terms;
  for (const auto& c : {std::vector<int>{0, 0, 0}, {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 1, 1},
                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {2, 2, 2}}) {
    terms.push_back({c, Complex{1.0, 0.0}});
  }
  return superpose(terms, 3);
}

}  // namespace

TEST_CASE("basis_index encodes player 1 as the most significant digit") {
  CHECK(basis_index(std::array{0, 0, 0}, 3) == 0);
  CHECK(basis_index(std::array{0, 1, 2}, 3) == 5);
  CHECK(basis_index(std::array{2, 2, 2}, 3) == 26);
  CHECK(basis_index(std::array{2, 0, 1}, 3) == 19);
  CHECK_THROWS_AS(basis_index(std::array{0, 3, 0}, 3), InputError);
  CHECK_THROWS_AS(basis_index(std::array{-1, 0, 0}, 3), InputError);
}

TEST_CASE("decode_index inverts the encoding") {
  CHECK(decode_index(5, 3, 3) == std::vector<int>{0, 1, 2});
  CHECK(decode_index(0, 3, 3) == std::vector<int>{0, 0, 0});
  CHECK(decode_index(13, 3, 3) == std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(decode_index(27, 3, 3), InputError);
}

TEST_CASE("round trip over every index for small shapes") {
  for (int m = 2; m <= 4; ++m) {
    for (int n = 2; n <= 5; ++n) {
      std::size_t dim = 1;
      for (int i = 0; i < n; ++i) {
        dim *= static_cast<std::size_t>(m);
      }
      if (dim > kDimensionCap) {
        continue;
      }
      for (std::size_t k = 0; k < dim; ++k) {
        CHECK(basis_index(decode_index(k, n, m), m) == k);
      }
    }
  }
}

TEST_CASE("basis_state puts unit amplitude at the encoded index") {
  const PureState s = basis_state(std::array{1, 1, 1}, 3);
  CHECK(s.dim() == 27);
  CHECK(s.amps[13] == Complex{1.0, 0.0});
  CHECK(probability(s, 13) == 1.0);
  CHECK(basis_state(std::array{0, 1, 2}, 3).amps[5] == Complex{1.0, 0.0});
  CHECK(basis_state(std::array{2, 0, 1}, 3).amps[19] == Complex{1.0, 0.0});
}

TEST_CASE("superpose normalizes and accumulates") {
  const PureState ghz = ghz3();
  const double w = 1.0 / std::sqrt(3.0);
  for (const std::size_t k : {0u, 13u, 26u}) {
    CHECK(std::abs(ghz.amps[k] - Complex{w, 0.0}) < 1e-15);
  }
  CHECK(std::abs(ghz.norm() - 1.0) < 1e-15);

  const WeightedChoice single[] = {{{0, 0, 0}, Complex{2.5, 0.0}}};
  CHECK(superpose(single, 3).amps[0] == Complex{1.0, 0.0});

  const WeightedChoice pair[] = {
      {{0, 0, 0}, Complex{1.0, 0.0}},
      {{1, 1, 1}, Complex{1.0, 0.0}},
  };
  const PureState two = superpose(pair, 3);
  CHECK(std::abs(two.amps[0].real() - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(two.amps[13].real() - 1.0 / std::sqrt(2.0)) < 1e-15);

  // Same outcome listed twice accumulates before normalization.
  const WeightedChoice dup[] = {
      {{0, 0, 0}, Complex{1.0, 0.0}},
      {{0, 0, 0}, Complex{-1.0, 0.0}},
      {{1, 1, 1}, Complex{1.0, 0.0}},
  };
  CHECK(superpose(dup, 3).amps[13] == Complex{1.0, 0.0});

  const WeightedChoice cancel[] = {
      {{0, 0, 0}, Complex{1.0, 0.0}},
      {{0, 0, 0}, Complex{-1.0, 0.0}},
  };
  CHECK_THROWS_AS(superpose(cancel, 3), InputError);
  CHECK_THROWS_AS(superpose({}, 3), InputError);
}

TEST_CASE("apply_local with identities is a no-op") {
  const PureState ghz = ghz3();
  const std::vector<SquareMatrix> ops(3, SquareMatrix::identity(3));
  const PureState out = apply_local(ghz, ops);
  CHECK(oracles::max_abs_diff(out.amps, ghz.amps) == 0.0);
}

TEST_CASE("Fourier strategy on GHZ matches the dense oracle and the nine-state support") {
  const PureState ghz = ghz3();
  const std::vector<SquareMatrix> ops(3, fourier_gate(3));

  const PureState fast = apply_local(ghz, ops);
  const auto dense = oracles::dense_apply(oracles::kron_full(ops), ghz.amps);
  CHECK(oracles::max_abs_diff(fast.amps, dense) < 1e-14);

  const std::vector<std::size_t> support = {0, 5, 7, 11, 13, 15, 19, 21, 26};
  for (std::size_t k = 0; k < 27; ++k) {
    const bool in_support = std::find(support.begin(), support.end(), k) != support.end();
    if (in_support) {
      CHECK(std::abs(probability(fast, k) - 1.0 / 9.0) < 1e-12);
    } else {
      CHECK(probability(fast, k) < 1e-12);
    }
  }
}

TEST_CASE("Fourier strategy on |000> spreads mass uniformly") {
  const PureState start = basis_state(std::array{0, 0, 0}, 3);
  const std::vector<SquareMatrix> ops(3, fourier_gate(3));
  const PureState out = apply_local(start, ops);
  const auto dense = oracles::dense_apply(oracles::kron_full(ops), start.amps);
  CHECK(oracles::max_abs_diff(out.amps, dense) < 1e-14);
  for (std::size_t k = 0; k < 27; ++k) {
    CHECK(std::abs(probability(out, k) - 1.0 / 27.0) < 1e-14);
  }
}

TEST_CASE("apply_local rejects mismatched operators") {
  const PureState ghz = ghz3();
  CHECK_THROWS_AS(apply_local(ghz, std::vector<SquareMatrix>(2, SquareMatrix::identity(3))),
                  InputError);
  CHECK_THROWS_AS(apply_local(ghz, std::vector<SquareMatrix>(3, SquareMatrix::identity(2))),
                  InputError);
}

TEST_CASE("probability reads Born weights") {
  const PureState ghz = ghz3();
  CHECK(std::abs(probability(ghz, 0) - 1.0 / 3.0) < 1e-15);
  CHECK(probability(ghz, 5) == 0.0);
  CHECK(std::abs(probability(nine_state(), 5) - 1.0 / 9.0) < 1e-15);
  CHECK_THROWS_AS(probability(ghz, 27), InputError);
}

TEST_CASE("unitary strategies preserve the norm") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const PureState state = oracles::random_state(seed, 3, 3);
    const GeneratorBasis basis = generator_basis(3);
    std::vector<SquareMatrix> ops;
    for (int player = 0; player < 3; ++player) {
      ops.push_back(
          unitary_from_params(random_params(seed * 977 + static_cast<std::uint64_t>(player), 3, 1.0), basis));
    }
    const PureState out = apply_local(state, ops);
    CHECK(std::abs(out.norm() - 1.0) < 1e-12);

    double total = 0.0;
    for (std::size_t k = 0; k < out.dim(); ++k) {
      total += probability(out, k);
    }
    CHECK(std::abs(total - 1.0) < 1e-12);
  }
}

TEST_CASE("apply_local_raw is linear on raw vectors") {
  const GeneratorBasis basis = generator_basis(3);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PureState psi = oracles::random_state(seed, 3, 3);
    const PureState phi = oracles::random_state(seed + 5000, 3, 3);
    const Complex a{0.7, -0.2};
    const Complex b{-0.4, 1.1};
    const std::vector<SquareMatrix> ops(3, unitary_from_params(random_params(seed, 3, 1.0), basis));

    std::vector<Complex> combined(psi.dim());
    for (std::size_t k = 0; k < psi.dim(); ++k) {
      combined[k] = a * psi.amps[k] + b * phi.amps[k];
    }
    apply_local_raw(combined, 3, 3, ops);

    std::vector<Complex> lhs = psi.amps;
    std::vector<Complex> rhs = phi.amps;
    apply_local_raw(lhs, 3, 3, ops);
    apply_local_raw(rhs, 3, 3, ops);
    for (std::size_t k = 0; k < psi.dim(); ++k) {
      lhs[k] = a * lhs[k] + b * rhs[k];
    }
    CHECK(oracles::max_abs_diff(combined, lhs) < 1e-12);
  }
}

TEST_CASE("dimension cap and state validation") {
  // 2^12 = 4096 sits exactly at the cap; one more player overflows it.
  CHECK(basis_state(std::vector<int>(12, 0), 2).dim() == 4096);
  CHECK_THROWS_AS(basis_state(std::vector<int>(13, 0), 2), InputError);
  CHECK_THROWS_AS(basis_state(std::array{0, 0}, 65), InputError);

  CHECK_THROWS_AS(make_state(3, 3, std::vector<Complex>(26, Complex{0.0, 0.0})), InputError);
  std::vector<Complex> bad(27, Complex{0.0, 0.0});
  bad[0] = Complex{0.5, 0.0};
  CHECK_THROWS_AS(make_state(3, 3, bad), InputError);
  bad[0] = Complex{std::nan(""), 0.0};
  CHECK_THROWS_AS(make_state(3, 3, bad), InputError);

  // A norm within rounding of 1 is accepted and cleaned up.
  std::vector<Complex> near(27, Complex{0.0, 0.0});
  near[0] = Complex{1.0 + 1e-9, 0.0};
  const PureState s = make_state(3, 3, near);
  CHECK(std::abs(s.norm() - 1.0) < 1e-15);
}
