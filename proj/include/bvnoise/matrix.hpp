#ifndef BVNOISE_MATRIX_HPP_
#define BVNOISE_MATRIX_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace bvnoise {

using Complex = std::complex<double>;

/// Largest qubit count for any object with a 2^n axis.
inline constexpr int kMaxQubits = 12;
/// Largest row or column count a ComplexMatrix may have (2^kMaxQubits).
inline constexpr std::size_t kMaxDimension = std::size_t{1} << kMaxQubits;

/// Thrown when a result would exceed kMaxDimension along either axis.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Thrown when operand shapes are incompatible.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  /// Row-by-row literal, e.g. {{1, 0}, {0, 1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Complex> entries() const { return entries_; }
  std::span<Complex> entries() { return entries_; }

  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

namespace gates {
ComplexMatrix hadamard();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix identity2();
}  // namespace gates

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Largest elementwise |a - b|. Shapes must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// Frobenius norm of a - b. Shapes must match.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues of a Hermitian matrix, ascending. Only the Hermitian part of
/// the input is used.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

struct DensityTolerances {
  double hermitian = 1e-10;
  double trace = 1e-10;
  double psd = 1e-9;
};

struct ValidationReport {
  bool hermitian = false;
  bool unit_trace = false;
  bool positive_semidefinite = false;
  double hermitian_error = 0.0;  // max |A - A†|
  double trace_error = 0.0;      // |tr A - 1|
  double min_eigenvalue = 0.0;

  bool ok() const { return hermitian && unit_trace && positive_semidefinite; }
};

/// Checks the density-matrix axioms. Failures are reported, not thrown.
/// Throws DimensionError only for a non-square input.
ValidationReport validate_density(const ComplexMatrix& a, const DensityTolerances& tol = {});

}  // namespace bvnoise

#endif  // BVNOISE_MATRIX_HPP_
