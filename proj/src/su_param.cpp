#include "qkr/su_param.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qkr/errors.hpp"

namespace qkr {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit_double(std::uint64_t bits) {
  // 53 high bits -> [0, 1); identical on every platform.
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace

GeneratorBasis generator_basis(int m) {
  if (m < 2 || m > 8) {
    throw InputError("generator basis supports 2 <= m <= 8, got " + std::to_string(m));
  }
  GeneratorBasis basis;
  basis.m = m;
  basis.matrices.reserve(static_cast<std::size_t>(m) * m - 1);
  // Symmetric pair generators: E_ab + E_ba.
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      SquareMatrix t(m);
      t(a, b) = Complex{1.0, 0.0};
      t(b, a) = Complex{1.0, 0.0};
      basis.matrices.push_back(std::move(t));
    }
  }
  // Antisymmetric pair generators: -i E_ab + i E_ba.
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      SquareMatrix t(m);
      t(a, b) = Complex{0.0, -1.0};
      t(b, a) = Complex{0.0, 1.0};
      basis.matrices.push_back(std::move(t));
    }
  }
  // Diagonal generators: sqrt(2/(l(l+1))) diag(1,...,1,-l,0,...,0).
  for (int l = 1; l < m; ++l) {
    SquareMatrix t(m);
    const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    for (int i = 0; i < l; ++i) {
      t(i, i) = Complex{scale, 0.0};
    }
    t(l, l) = Complex{-scale * l, 0.0};
    basis.matrices.push_back(std::move(t));
  }
  return basis;
}

SquareMatrix matrix_exp(const SquareMatrix& a) {
  const int m = a.dim();
  const std::size_t size = static_cast<std::size_t>(m) * m;

  // Scale down until the infinity norm is at most 1/2.
  double norm = 0.0;
  for (int r = 0; r < m; ++r) {
    double row = 0.0;
    for (int c = 0; c < m; ++c) {
      row += std::abs(a(r, c));
    }
    norm = std::max(norm, row);
  }
  int squarings = 0;
  double factor = 1.0;
  while (norm * factor > 0.5) {
    factor *= 0.5;
    ++squarings;
  }

  // Flat buffers; this sits on the optimizer's innermost path.
  std::vector<Complex> scaled(size);
  for (std::size_t i = 0; i < size; ++i) {
    scaled[i] = a.entries()[i] * factor;
  }
  std::vector<Complex> sum(size, Complex{0.0, 0.0});
  std::vector<Complex> term = scaled;
  std::vector<Complex> scratch(size);
  for (int i = 0; i < m; ++i) {
    sum[static_cast<std::size_t>(i) * m + i] = Complex{1.0, 0.0};
  }

  const auto mul_into = [m](const Complex* lhs, const Complex* rhs, Complex* out) {
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) {
        Complex acc{0.0, 0.0};
        for (int k = 0; k < m; ++k) {
          acc += lhs[r * m + k] * rhs[k * m + c];
        }
        out[r * m + c] = acc;
      }
    }
  };

  // Taylor series of the scaled matrix; terms decay at least as (1/2)^k / k!.
  for (std::size_t i = 0; i < size; ++i) {
    sum[i] += term[i];
  }
  for (int k = 2; k <= 32; ++k) {
    mul_into(term.data(), scaled.data(), scratch.data());
    term.swap(scratch);
    double largest = 0.0;
    const double inv_k = 1.0 / k;
    for (std::size_t i = 0; i < size; ++i) {
      term[i] *= inv_k;
      sum[i] += term[i];
      largest = std::max(largest, std::abs(term[i]));
    }
    if (largest < 1e-20) {
      break;
    }
  }
  for (int s = 0; s < squarings; ++s) {
    mul_into(sum.data(), sum.data(), scratch.data());
    sum.swap(scratch);
  }
  return SquareMatrix(m, std::move(sum));
}

SquareMatrix unitary_from_params(const UnitaryParams& params, const GeneratorBasis& basis) {
  const int m = basis.m;
  const std::size_t expected = static_cast<std::size_t>(m) * m - 1;
  if (params.m != m || params.coeffs.size() != expected) {
    throw InputError("parameter vector length must be m^2-1 = " + std::to_string(expected));
  }
  for (const double c : params.coeffs) {
    if (!std::isfinite(c)) {
      throw InputError("parameter vector contains a non-finite value");
    }
  }
  // A = i * sum_a coeffs[a] T_a, anti-Hermitian and traceless.
  SquareMatrix arg(m);
  for (std::size_t a = 0; a < expected; ++a) {
    const double c = params.coeffs[a];
    if (c == 0.0) {
      continue;
    }
    const SquareMatrix& t = basis.matrices[a];
    for (int r = 0; r < m; ++r) {
      for (int col = 0; col < m; ++col) {
        const Complex e = t(r, col);
        arg(r, col) += Complex{-c * e.imag(), c * e.real()};
      }
    }
  }
  return matrix_exp(arg);
}

SquareMatrix fourier_gate(int m) {
  if (m < 2) {
    throw InputError("Fourier gate needs m >= 2");
  }
  SquareMatrix f(m);
  const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(m));
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      const double angle = 2.0 * kPi * ((j * k) % m) / m;
      f(j, k) = Complex{std::cos(angle) * inv_sqrt, std::sin(angle) * inv_sqrt};
    }
  }
  return f;
}

UnitaryParams random_params(std::uint64_t seed, int m, double scale) {
  if (m < 2) {
    throw InputError("random_params needs m >= 2");
  }
  if (!(scale > 0.0)) {
    throw InputError("scale must be positive");
  }
  const std::size_t count = static_cast<std::size_t>(m) * m - 1;
  UnitaryParams params;
  params.m = m;
  params.coeffs.resize(count);
  std::uint64_t state = seed;
  for (auto& c : params.coeffs) {
    const double u = unit_double(splitmix64(state));
    c = (2.0 * u - 1.0) * scale * kPi;
  }
  return params;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t state = seed ^ (0xd6e8feb86659fd93ULL * (salt + 1));
  return splitmix64(state);
}

}  // namespace qkr
