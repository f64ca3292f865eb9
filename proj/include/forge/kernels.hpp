#pragma once

// Inner-loop kernels for the embedding propagation. Each instruction set
// provides the same table of row operations; the matrix routines below are
// written once against the table. Implementations perform identical
// floating-point operations in identical order (no fused multiply-add), so
// every ISA produces bit-identical results.

#include <cstddef>
#include <string_view>

#include "forge/matrix.hpp"

namespace forge::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

struct KernelTable {
  Isa isa;
  /// y += a * x
  void (*axpy)(double a, const double* x, double* y, size_t n);
  /// y += x
  void (*add)(const double* x, double* y, size_t n);
  /// grad = upstream * (1 - out * out)
  void (*tanh_backward)(const double* out, const double* upstream, double* grad, size_t n);
  /// grad = pre > 0 ? upstream : 0
  void (*relu_backward)(const double* pre, const double* upstream, double* grad, size_t n);
  /// x = max(x, 0)
  void (*relu)(double* x, size_t n);
};

const KernelTable& scalar_table();
/// Null when the binary was built without AVX2 support.
const KernelTable* avx2_table();

bool available(Isa isa);
/// Best ISA the CPU supports; FORGE_SIMD=scalar|avx2 overrides.
Isa detect();
const KernelTable& table(Isa isa);
/// Table used by default everywhere.
const KernelTable& active();
void select(Isa isa);

// Matrix routines (C is overwritten unless accumulate is set).
void gemm(const KernelTable& k, const linalg::Matrix& a, const linalg::Matrix& b, linalg::Matrix& c,
          bool accumulate = false);
/// c = aᵀ b
void gemm_at_b(const KernelTable& k, const linalg::Matrix& a, const linalg::Matrix& b, linalg::Matrix& c);
/// y = g x
void spmm(const KernelTable& k, const linalg::CsrMatrix& g, const linalg::Matrix& x, linalg::Matrix& y,
          bool accumulate = false);
/// y = gᵀ x
void spmm_transposed(const KernelTable& k, const linalg::CsrMatrix& g, const linalg::Matrix& x, linalg::Matrix& y,
                     bool accumulate = false);

}  // namespace forge::kernels
