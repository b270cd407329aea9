#pragma once
// Dense complex-double arithmetic kernels.
//
// Every kernel has a scalar reference implementation and (on x86-64) an
// AVX2+FMA variant selected once at startup via cpuid.  The environment
// variable LATMF_KERNEL=scalar|avx2 overrides the choice; the two variants
// are equivalence-tested against each other in tests/test_kernels.cpp.
//
// All matrices are column-major with a leading dimension, matching the
// storage of CMatrix and of Eigen's default layout.

#include <complex>
#include <cstddef>
#include <string>

namespace latmf::kernels {

using cplx = std::complex<double>;

struct Ops {
  // C <- alpha*A*B + beta*C   (m x k times k x n)
  void (*gemm)(std::size_t m, std::size_t n, std::size_t k, cplx alpha,
               const cplx* A, std::size_t lda, const cplx* B, std::size_t ldb,
               cplx beta, cplx* C, std::size_t ldc);
  // y <- y + alpha*x
  void (*axpy)(std::size_t n, cplx alpha, const cplx* x, cplx* y);
  // x <- alpha*x
  void (*scal)(std::size_t n, cplx alpha, cplx* x);
  // sum_i conj(x_i) * y_i
  cplx (*dotc)(std::size_t n, const cplx* x, const cplx* y);
  // sum_{i,j} A(i,j) * B(j,i)  == tr(A*B)
  cplx (*trace_product)(std::size_t n, const cplx* A, std::size_t lda,
                        const cplx* B, std::size_t ldb);
};

enum class Backend { Scalar, Avx2 };

const Ops& active();
Backend active_backend();
std::string backend_name();

// Force a backend (no-op if unavailable; returns the backend in effect).
Backend select(Backend b);

// Reference and SIMD tables, exposed for equivalence tests.
const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when not compiled in or not supported

}  // namespace latmf::kernels
