#include "bvnoise/density.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <span>
#include <string>

namespace bvnoise {

namespace {

using Block = std::array<Complex, 4>;  // row-major 2x2

Block to_block(const ComplexMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw DimensionError("expected a 2x2 operator");
  return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

// K B K† for 2x2 blocks.
Block conjugate(const Block& k, const Block& b) {
  const Block kb{k[0] * b[0] + k[1] * b[2], k[0] * b[1] + k[1] * b[3],
                 k[2] * b[0] + k[3] * b[2], k[2] * b[1] + k[3] * b[3]};
  return {kb[0] * std::conj(k[0]) + kb[1] * std::conj(k[1]),
          kb[0] * std::conj(k[2]) + kb[1] * std::conj(k[3]),
          kb[2] * std::conj(k[0]) + kb[3] * std::conj(k[1]),
          kb[2] * std::conj(k[2]) + kb[3] * std::conj(k[3])};
}

std::size_t qubit_mask(int n, int qubit) {
  if (qubit < 1 || qubit > n) {
    throw std::out_of_range("qubit index " + std::to_string(qubit) + " outside 1.." +
                            std::to_string(n));
  }
  return std::size_t{1} << (n - qubit);
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("error probability must lie in [0, 1], got " + std::to_string(p));
  }
}

// Rewrites every 2x2 block of the target qubit through fn(block), in place.
template <typename Fn>
void map_qubit_blocks(DensityMatrix& rho, int qubit, Fn&& fn) {
  const std::size_t mask = qubit_mask(rho.num_qubits(), qubit);
  const std::size_t dim = rho.dim();
  ComplexMatrix& m = rho.matrix();
  for (std::size_t r0 = 0; r0 < dim; ++r0) {
    if (r0 & mask) continue;
    const std::size_t r1 = r0 | mask;
    for (std::size_t c0 = 0; c0 < dim; ++c0) {
      if (c0 & mask) continue;
      const std::size_t c1 = c0 | mask;
      const Block b = fn(Block{m(r0, c0), m(r0, c1), m(r1, c0), m(r1, c1)});
      m(r0, c0) = b[0];
      m(r0, c1) = b[1];
      m(r1, c0) = b[2];
      m(r1, c1) = b[3];
    }
  }
}

// Sum of K B K† over the Kraus set, folded into a 4x4 map on the block entries.
using BlockMap = std::array<Complex, 16>;

BlockMap kraus_block_map(std::span<const ComplexMatrix> kraus) {
  BlockMap s{};
  for (const auto& km : kraus) {
    const Block k = to_block(km);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            s[(2 * i + j) * 4 + 2 * a + b] += k[2 * i + a] * std::conj(k[2 * j + b]);
          }
        }
      }
    }
  }
  return s;
}

void apply_block_map(DensityMatrix& rho, int qubit, const BlockMap& s) {
  map_qubit_blocks(rho, qubit, [&](const Block& b) {
    Block out{};
    for (int r = 0; r < 4; ++r) {
      out[r] = s[4 * r] * b[0] + s[4 * r + 1] * b[1] + s[4 * r + 2] * b[2] + s[4 * r + 3] * b[3];
    }
    return out;
  });
}

}  // namespace

void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::out_of_range("qubit count " + std::to_string(n) + " outside 1.." +
                            std::to_string(kMaxQubits) + " for the full density backend");
  }
}

DensityMatrix::DensityMatrix(int n, ComplexMatrix mat) : n_(n), mat_(std::move(mat)) {
  check_qubit_count(n);
  const std::size_t dim = std::size_t{1} << n;
  if (mat_.rows() != dim || mat_.cols() != dim) {
    throw DimensionError("density matrix for " + std::to_string(n) + " qubits must be " +
                         std::to_string(dim) + "x" + std::to_string(dim));
  }
}

DensityMatrix init_zero_state(int n) {
  check_qubit_count(n);
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix m(dim, dim);
  m(0, 0) = 1.0;
  return DensityMatrix(n, std::move(m));
}

ComplexMatrix build_oracle(const HiddenString& s) {
  const int n = static_cast<int>(s.size());
  check_qubit_count(n);
  const std::uint64_t mask = s.basis_index();
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Complex> diag(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    diag[x] = (std::popcount(mask & x) & 1) ? -1.0 : 1.0;
  }
  return ComplexMatrix::diagonal(diag);
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim()) {
    throw DimensionError("unitary dimension does not match the state");
  }
  return DensityMatrix(rho.num_qubits(), matmul(matmul(u, rho.matrix()), adjoint(u)));
}

DensityMatrix apply_single_qubit_unitary(const DensityMatrix& rho, int qubit,
                                         const ComplexMatrix& u) {
  const Block k = to_block(u);
  DensityMatrix out = rho;
  map_qubit_blocks(out, qubit, [&](const Block& b) { return conjugate(k, b); });
  return out;
}

DensityMatrix apply_single_qubit_kraus(const DensityMatrix& rho, int qubit,
                                       std::span<const ComplexMatrix> kraus) {
  DensityMatrix out = rho;
  apply_block_map(out, qubit, kraus_block_map(kraus));
  return out;
}

std::vector<ComplexMatrix> depolarizing_kraus(double p) {
  check_probability(p);
  const double keep = std::sqrt(1.0 - 0.75 * p);
  const double flip = std::sqrt(0.25 * p);
  return {gates::identity2() * keep, gates::pauli_x() * flip, gates::pauli_y() * flip,
          gates::pauli_z() * flip};
}

DensityMatrix apply_depolarizing(const DensityMatrix& rho, int qubit, double p) {
  const auto kraus = depolarizing_kraus(p);
  return apply_single_qubit_kraus(rho, qubit, kraus);
}

DensityMatrix run_bv_full(const HiddenString& s, double p, const StageObserver& observer) {
  check_probability(p);
  const int n = static_cast<int>(s.size());
  check_qubit_count(n);
  const BlockMap noise = kraus_block_map(depolarizing_kraus(p));
  const Block h = to_block(gates::hadamard());

  auto notify = [&](std::string_view label, const DensityMatrix& rho) {
    if (observer) observer(label, rho);
  };
  auto noise_layer = [&](DensityMatrix& rho) {
    for (int q = 1; q <= n; ++q) apply_block_map(rho, q, noise);
  };
  auto hadamard_layer = [&](DensityMatrix& rho) {
    for (int q = 1; q <= n; ++q) {
      map_qubit_blocks(rho, q, [&](const Block& b) { return conjugate(h, b); });
    }
  };

  DensityMatrix rho = init_zero_state(n);
  notify("rho0", rho);
  hadamard_layer(rho);
  notify("sigma1", rho);
  noise_layer(rho);
  notify("sigma2", rho);

  // The oracle is diagonal: rho[x, y] *= (-1)^(s.x + s.y).
  {
    const std::uint64_t mask = s.basis_index();
    ComplexMatrix& m = rho.matrix();
    for (std::size_t x = 0; x < rho.dim(); ++x) {
      const int sx = std::popcount(mask & x) & 1;
      for (std::size_t y = 0; y < rho.dim(); ++y) {
        if ((sx ^ (std::popcount(mask & y) & 1)) != 0) m(x, y) = -m(x, y);
      }
    }
  }
  notify("sigma3", rho);
  noise_layer(rho);
  notify("sigma4", rho);
  hadamard_layer(rho);
  notify("sigma5", rho);
  noise_layer(rho);
  notify("sigma6", rho);
  return rho;
}

double measure_probability(const DensityMatrix& rho, const HiddenString& x) {
  if (static_cast<int>(x.size()) != rho.num_qubits()) {
    throw DimensionError("bit string length " + std::to_string(x.size()) +
                         " does not match qubit count " + std::to_string(rho.num_qubits()));
  }
  const std::uint64_t idx = x.basis_index();
  const double value = rho.matrix()(idx, idx).real();
  constexpr double kSlack = 1e-9;
  if (value < -kSlack || value > 1.0 + kSlack) {
    throw std::domain_error("diagonal entry " + std::to_string(value) +
                            " is not a probability; state is not a valid density matrix");
  }
  return std::clamp(value, 0.0, 1.0);
}

}  // namespace bvnoise
