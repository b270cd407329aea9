#include "latmf/core/kernels.hpp"

// Reference kernels.  Plain loops, no ISA assumptions; these define the
// semantics the SIMD variants are tested against.

namespace latmf::kernels {
namespace {

void gemm_scalar(std::size_t m, std::size_t n, std::size_t k, cplx alpha,
                 const cplx* A, std::size_t lda, const cplx* B, std::size_t ldb,
                 cplx beta, cplx* C, std::size_t ldc) {
  for (std::size_t j = 0; j < n; ++j) {
    cplx* Cj = C + j * ldc;
    if (beta == cplx(0.0, 0.0)) {
      for (std::size_t i = 0; i < m; ++i) Cj[i] = cplx(0.0, 0.0);
    } else if (beta != cplx(1.0, 0.0)) {
      for (std::size_t i = 0; i < m; ++i) Cj[i] *= beta;
    }
    const cplx* Bj = B + j * ldb;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx w = alpha * Bj[p];
      if (w == cplx(0.0, 0.0)) continue;
      const cplx* Ap = A + p * lda;
      for (std::size_t i = 0; i < m; ++i) Cj[i] += w * Ap[i];
    }
  }
}

void axpy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scal_scalar(std::size_t n, cplx alpha, cplx* x) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

cplx dotc_scalar(std::size_t n, const cplx* x, const cplx* y) {
  cplx acc(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

cplx trace_product_scalar(std::size_t n, const cplx* A, std::size_t lda,
                          const cplx* B, std::size_t ldb) {
  cplx acc(0.0, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const cplx* Aj = A + j * lda;  // column j of A: entries A(i,j)
    const cplx* Bj = B + j;        // row j of B: entries B(j,i), stride ldb
    for (std::size_t i = 0; i < n; ++i) acc += Aj[i] * Bj[i * ldb];
  }
  return acc;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{gemm_scalar, axpy_scalar, scal_scalar, dotc_scalar,
                       trace_product_scalar};
  return ops;
}

}  // namespace latmf::kernels
