#ifndef QKR_MATRIX_HPP
#define QKR_MATRIX_HPP

#include <complex>
#include <span>
#include <vector>

namespace qkr {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major. Sized for strategy operators
// (m <= 8), not for large linear algebra.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int dim);
  SquareMatrix(int dim, std::vector<Complex> entries);

  static SquareMatrix identity(int dim);

  int dim() const { return dim_; }

  Complex& operator()(int row, int col) { return entries_[static_cast<std::size_t>(row) * dim_ + col]; }
  const Complex& operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(row) * dim_ + col];
  }

  std::span<const Complex> entries() const { return entries_; }

  SquareMatrix adjoint() const;
  SquareMatrix operator*(const SquareMatrix& rhs) const;
  SquareMatrix& operator+=(const SquareMatrix& rhs);
  SquareMatrix& operator*=(Complex scale);

  Complex trace() const;
  Complex determinant() const;

  // Largest entry modulus.
  double max_abs() const;
  // Largest entry modulus of U†U - I; ~0 for unitary matrices.
  double unitarity_defect() const;
  bool all_finite() const;

 private:
  int dim_ = 0;
  std::vector<Complex> entries_;
};

}  // namespace qkr

#endif
