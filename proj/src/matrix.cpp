#include "bvnoise/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace bvnoise {

namespace {

void check_dimension(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  if (rows > kMaxDimension || cols > kMaxDimension) {
    throw CapacityError("matrix dimension " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " exceeds the cap of " + std::to_string(kMaxDimension) + " per axis");
  }
}

void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix shapes differ");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {
  check_dimension(rows, cols);
  entries_.assign(rows * cols, Complex{});
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  check_dimension(rows, cols);
  if (entries_.size() != rows * cols) {
    throw DimensionError("entry count does not equal rows * cols");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  check_dimension(rows_, cols_);
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionError("ragged matrix literal");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t{};
  const std::size_t d = std::min(rows_, cols_);
  for (std::size_t i = 0; i < d; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  check_same_shape(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  check_same_shape(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

namespace gates {

ComplexMatrix hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return {{h, h}, {h, -h}};
}

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }

ComplexMatrix pauli_y() {
  const Complex i{0.0, 1.0};
  return {{0.0, -i}, {i, 0.0}};
}

ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

ComplexMatrix identity2() { return ComplexMatrix::identity(2); }

}  // namespace gates

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > kMaxDimension || cols > kMaxDimension) {
    throw CapacityError("kron result exceeds the cap of " + std::to_string(kMaxDimension) +
                        " per axis");
  }
  ComplexMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: a.cols (" + std::to_string(a.cols()) + ") != b.rows (" +
                         std::to_string(b.rows()) + ")");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(j, i) = std::conj(a(i, j));
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b);
  double worst = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
  return worst;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b);
  double sum = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) sum += std::norm(ea[i] - eb[i]);
  return std::sqrt(sum);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("eigenvalues need a square matrix");
  const auto n = static_cast<Eigen::Index>(a.rows());
  Eigen::MatrixXcd h(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      // Hermitian part (A + A†)/2.
      h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue iteration did not converge");
  const Eigen::VectorXd& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

ValidationReport validate_density(const ComplexMatrix& a, const DensityTolerances& tol) {
  if (!a.is_square()) throw DimensionError("validate_density needs a square matrix");
  ValidationReport report;
  report.hermitian_error = max_abs_diff(a, adjoint(a));
  report.hermitian = report.hermitian_error <= tol.hermitian;
  report.trace_error = std::abs(a.trace() - Complex{1.0});
  report.unit_trace = report.trace_error <= tol.trace;
  report.min_eigenvalue = hermitian_eigenvalues(a).front();
  report.positive_semidefinite = report.min_eigenvalue >= -tol.psd;
  return report;
}

}  // namespace bvnoise
