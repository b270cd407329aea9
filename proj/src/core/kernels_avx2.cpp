#include "latmf/core/kernels.hpp"

// AVX2+FMA kernels for interleaved complex<double>.
//
// A __m256d holds two complex doubles [re0 im0 re1 im1].  Complex multiply
// uses the usual shuffle/FMA scheme:
//   w*x = [wr*xr - wi*xi, wr*xi + wi*xr]
// with wr, wi broadcast once per scalar weight.

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>

namespace latmf::kernels {
namespace {

// w * x for two packed complexes; wr/wi are broadcast parts of w.
inline __m256d cmul(__m256d wr, __m256d wi, __m256d x) {
  __m256d x_swap = _mm256_permute_pd(x, 0x5);
  __m256d t = _mm256_mul_pd(wi, x_swap);             // [wi*xi, wi*xr]
  return _mm256_fmaddsub_pd(wr, x, t);               // [wr*xr-wi*xi, wr*xi+wi*xr]
}

inline void axpy_block(std::size_t m, cplx alpha, const cplx* x, cplx* y) {
  const __m256d wr = _mm256_set1_pd(alpha.real());
  const __m256d wi = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  for (; i + 2 <= m; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    yv = _mm256_add_pd(yv, cmul(wr, wi, xv));
    _mm256_storeu_pd(yd + 2 * i, yv);
  }
  for (; i < m; ++i) y[i] += alpha * x[i];
}

void gemm_avx2(std::size_t m, std::size_t n, std::size_t k, cplx alpha,
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
    // Two rank-1 updates per pass halve the traffic on C.
    std::size_t p = 0;
    for (; p + 2 <= k; p += 2) {
      const cplx w0 = alpha * Bj[p];
      const cplx w1 = alpha * Bj[p + 1];
      const cplx* A0 = A + p * lda;
      const cplx* A1 = A0 + lda;
      const __m256d w0r = _mm256_set1_pd(w0.real());
      const __m256d w0i = _mm256_set1_pd(w0.imag());
      const __m256d w1r = _mm256_set1_pd(w1.real());
      const __m256d w1i = _mm256_set1_pd(w1.imag());
      const double* a0 = reinterpret_cast<const double*>(A0);
      const double* a1 = reinterpret_cast<const double*>(A1);
      double* c = reinterpret_cast<double*>(Cj);
      std::size_t i = 0;
      for (; i + 2 <= m; i += 2) {
        __m256d cv = _mm256_loadu_pd(c + 2 * i);
        cv = _mm256_add_pd(cv, cmul(w0r, w0i, _mm256_loadu_pd(a0 + 2 * i)));
        cv = _mm256_add_pd(cv, cmul(w1r, w1i, _mm256_loadu_pd(a1 + 2 * i)));
        _mm256_storeu_pd(c + 2 * i, cv);
      }
      for (; i < m; ++i) Cj[i] += w0 * A0[i] + w1 * A1[i];
    }
    for (; p < k; ++p) {
      const cplx w = alpha * Bj[p];
      if (w != cplx(0.0, 0.0)) axpy_block(m, w, A + p * lda, Cj);
    }
  }
}

void axpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  axpy_block(n, alpha, x, y);
}

void scal_avx2(std::size_t n, cplx alpha, cplx* x) {
  const __m256d wr = _mm256_set1_pd(alpha.real());
  const __m256d wi = _mm256_set1_pd(alpha.imag());
  double* xd = reinterpret_cast<double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    _mm256_storeu_pd(xd + 2 * i, cmul(wr, wi, xv));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

cplx dotc_avx2(std::size_t n, const cplx* x, const cplx* y) {
  // conj(x)*y = [xr*yr + xi*yi, xr*yi - xi*yr]
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    __m256d y_swap = _mm256_permute_pd(yv, 0x5);
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);      // xr*yr at even, xi*yi at odd
    acc_im = _mm256_fmadd_pd(xv, y_swap, acc_im);  // xr*yi at even, xi*yr at odd
  }
  alignas(32) double re[4], im[4];
  _mm256_store_pd(re, acc_re);
  _mm256_store_pd(im, acc_im);
  cplx acc(re[0] + re[1] + re[2] + re[3], (im[0] - im[1]) + (im[2] - im[3]));
  for (; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

cplx trace_product_avx2(std::size_t n, const cplx* A, std::size_t lda,
                        const cplx* B, std::size_t ldb) {
  // Columns of A stream contiguously; B is walked along rows, so the inner
  // product is done per column with plain complex multiply (no conjugation).
  cplx acc(0.0, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const cplx* Aj = A + j * lda;
    const cplx* Bj = B + j;
    cplx cacc(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) cacc += Aj[i] * Bj[i * ldb];
    acc += cacc;
  }
  return acc;
}

}  // namespace

const Ops* avx2_ops_impl() {
  static const Ops ops{gemm_avx2, axpy_avx2, scal_avx2, dotc_avx2,
                       trace_product_avx2};
  return &ops;
}

}  // namespace latmf::kernels
#endif  // __AVX2__ && __FMA__
