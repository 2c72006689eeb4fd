#include "qkr/matrix.hpp"

#include <cmath>
#include <utility>

#include "qkr/errors.hpp"

namespace qkr {

SquareMatrix::SquareMatrix(int dim) {
  if (dim < 1) {
    throw InputError("matrix dimension must be positive");
  }
  dim_ = dim;
  entries_.assign(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
}

SquareMatrix::SquareMatrix(int dim, std::vector<Complex> entries) {
  if (dim < 1) {
    throw InputError("matrix dimension must be positive");
  }
  if (entries.size() != static_cast<std::size_t>(dim) * dim) {
    throw InputError("matrix entry count does not match dimension");
  }
  dim_ = dim;
  entries_ = std::move(entries);
}

SquareMatrix SquareMatrix::identity(int dim) {
  SquareMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    m(i, i) = Complex{1.0, 0.0};
  }
  return m;
}

SquareMatrix SquareMatrix::adjoint() const {
  SquareMatrix out(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      out(c, r) = std::conj((*this)(r, c));
    }
  }
  return out;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& rhs) const {
  if (dim_ != rhs.dim_) {
    throw InputError("matrix dimension mismatch in product");
  }
  SquareMatrix out(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int k = 0; k < dim_; ++k) {
      const Complex a = (*this)(r, k);
      if (a == Complex{0.0, 0.0}) {
        continue;
      }
      for (int c = 0; c < dim_; ++c) {
        out(r, c) += a * rhs(k, c);
      }
    }
  }
  return out;
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& rhs) {
  if (dim_ != rhs.dim_) {
    throw InputError("matrix dimension mismatch in sum");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] += rhs.entries_[i];
  }
  return *this;
}

SquareMatrix& SquareMatrix::operator*=(Complex scale) {
  for (auto& e : entries_) {
    e *= scale;
  }
  return *this;
}

Complex SquareMatrix::trace() const {
  Complex t{0.0, 0.0};
  for (int i = 0; i < dim_; ++i) {
    t += (*this)(i, i);
  }
  return t;
}

Complex SquareMatrix::determinant() const {
  // Gaussian elimination with partial pivoting on a working copy.
  std::vector<Complex> a = entries_;
  const int n = dim_;
  Complex det{1.0, 0.0};
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(a[static_cast<std::size_t>(col) * n + col]);
    for (int r = col + 1; r < n; ++r) {
      const double mag = std::abs(a[static_cast<std::size_t>(r) * n + col]);
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best == 0.0) {
      return Complex{0.0, 0.0};
    }
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(a[static_cast<std::size_t>(pivot) * n + c], a[static_cast<std::size_t>(col) * n + c]);
      }
      det = -det;
    }
    const Complex diag = a[static_cast<std::size_t>(col) * n + col];
    det *= diag;
    for (int r = col + 1; r < n; ++r) {
      const Complex factor = a[static_cast<std::size_t>(r) * n + col] / diag;
      if (factor == Complex{0.0, 0.0}) {
        continue;
      }
      for (int c = col; c < n; ++c) {
        a[static_cast<std::size_t>(r) * n + c] -= factor * a[static_cast<std::size_t>(col) * n + c];
      }
    }
  }
  return det;
}

double SquareMatrix::max_abs() const {
  double best = 0.0;
  for (const auto& e : entries_) {
    best = std::max(best, std::abs(e));
  }
  return best;
}

double SquareMatrix::unitarity_defect() const {
  SquareMatrix gram = adjoint() * (*this);
  for (int i = 0; i < dim_; ++i) {
    gram(i, i) -= Complex{1.0, 0.0};
  }
  return gram.max_abs();
}

bool SquareMatrix::all_finite() const {
  for (const auto& e : entries_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
      return false;
    }
  }
  return true;
}

}  // namespace qkr
