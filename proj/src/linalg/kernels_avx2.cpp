#include "gbt/linalg/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define GBT_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

#include <algorithm>
#include <cmath>

namespace gbt::linalg::kernels {

#if defined(GBT_HAVE_AVX2_KERNELS)

#define GBT_AVX2 __attribute__((target("avx2,fma")))

namespace {

GBT_AVX2 inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

GBT_AVX2 inline double hmax(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d m = _mm_max_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_max_sd(m, _mm_unpackhi_pd(m, m)));
}

GBT_AVX2 void matmul_avx2(ConstPlanes a, ConstPlanes b, Planes c, std::size_t n) {
    std::fill(c.re.begin(), c.re.end(), 0.0);
    std::fill(c.im.begin(), c.im.end(), 0.0);
    const std::size_t vec_end = n - n % 4;
    for (std::size_t i = 0; i < n; ++i) {
        double* cr = c.re.data() + i * n;
        double* ci = c.im.data() + i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const double ar = a.re[i * n + k];
            const double ai = a.im[i * n + k];
            const double* br = b.re.data() + k * n;
            const double* bi = b.im.data() + k * n;
            const __m256d var = _mm256_set1_pd(ar);
            const __m256d vai = _mm256_set1_pd(ai);
            std::size_t j = 0;
            for (; j < vec_end; j += 4) {
                const __m256d vbr = _mm256_loadu_pd(br + j);
                const __m256d vbi = _mm256_loadu_pd(bi + j);
                __m256d vcr = _mm256_loadu_pd(cr + j);
                __m256d vci = _mm256_loadu_pd(ci + j);
                vcr = _mm256_fmadd_pd(var, vbr, vcr);
                vcr = _mm256_fnmadd_pd(vai, vbi, vcr);
                vci = _mm256_fmadd_pd(var, vbi, vci);
                vci = _mm256_fmadd_pd(vai, vbr, vci);
                _mm256_storeu_pd(cr + j, vcr);
                _mm256_storeu_pd(ci + j, vci);
            }
            for (; j < n; ++j) {
                cr[j] += ar * br[j] - ai * bi[j];
                ci[j] += ar * bi[j] + ai * br[j];
            }
        }
    }
}

GBT_AVX2 void axpy_avx2(std::complex<double> alpha, ConstPlanes x, Planes y) {
    const double ar = alpha.real();
    const double ai = alpha.imag();
    const __m256d var = _mm256_set1_pd(ar);
    const __m256d vai = _mm256_set1_pd(ai);
    const std::size_t len = y.re.size();
    const std::size_t vec_end = len - len % 4;
    std::size_t k = 0;
    for (; k < vec_end; k += 4) {
        const __m256d xr = _mm256_loadu_pd(x.re.data() + k);
        const __m256d xi = _mm256_loadu_pd(x.im.data() + k);
        __m256d yr = _mm256_loadu_pd(y.re.data() + k);
        __m256d yi = _mm256_loadu_pd(y.im.data() + k);
        yr = _mm256_fmadd_pd(var, xr, yr);
        yr = _mm256_fnmadd_pd(vai, xi, yr);
        yi = _mm256_fmadd_pd(var, xi, yi);
        yi = _mm256_fmadd_pd(vai, xr, yi);
        _mm256_storeu_pd(y.re.data() + k, yr);
        _mm256_storeu_pd(y.im.data() + k, yi);
    }
    for (; k < len; ++k) {
        const double xr = x.re[k];
        const double xi = x.im[k];
        y.re[k] += ar * xr - ai * xi;
        y.im[k] += ar * xi + ai * xr;
    }
}

GBT_AVX2 double max_abs_diff_avx2(ConstPlanes a, ConstPlanes b) {
    const std::size_t len = a.re.size();
    const std::size_t vec_end = len - len % 4;
    __m256d best = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k < vec_end; k += 4) {
        const __m256d dr = _mm256_sub_pd(_mm256_loadu_pd(a.re.data() + k), _mm256_loadu_pd(b.re.data() + k));
        const __m256d di = _mm256_sub_pd(_mm256_loadu_pd(a.im.data() + k), _mm256_loadu_pd(b.im.data() + k));
        best = _mm256_max_pd(best, _mm256_fmadd_pd(dr, dr, _mm256_mul_pd(di, di)));
    }
    double m = hmax(best);
    for (; k < len; ++k) {
        const double dr = a.re[k] - b.re[k];
        const double di = a.im[k] - b.im[k];
        m = std::max(m, dr * dr + di * di);
    }
    return std::sqrt(m);
}

template <bool Conjugate>
GBT_AVX2 std::complex<double> dot_avx2_impl(ConstPlanes a, ConstPlanes b) {
    const std::size_t len = a.re.size();
    const std::size_t vec_end = len - len % 4;
    __m256d sr = _mm256_setzero_pd();
    __m256d si = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k < vec_end; k += 4) {
        const __m256d ar = _mm256_loadu_pd(a.re.data() + k);
        const __m256d ai = _mm256_loadu_pd(a.im.data() + k);
        const __m256d br = _mm256_loadu_pd(b.re.data() + k);
        const __m256d bi = _mm256_loadu_pd(b.im.data() + k);
        sr = _mm256_fmadd_pd(ar, br, sr);
        si = _mm256_fmadd_pd(ar, bi, si);
        if constexpr (Conjugate) {
            sr = _mm256_fmadd_pd(ai, bi, sr);
            si = _mm256_fnmadd_pd(ai, br, si);
        } else {
            sr = _mm256_fnmadd_pd(ai, bi, sr);
            si = _mm256_fmadd_pd(ai, br, si);
        }
    }
    double rr = hsum(sr);
    double ri = hsum(si);
    for (; k < len; ++k) {
        if constexpr (Conjugate) {
            rr += a.re[k] * b.re[k] + a.im[k] * b.im[k];
            ri += a.re[k] * b.im[k] - a.im[k] * b.re[k];
        } else {
            rr += a.re[k] * b.re[k] - a.im[k] * b.im[k];
            ri += a.re[k] * b.im[k] + a.im[k] * b.re[k];
        }
    }
    return {rr, ri};
}

GBT_AVX2 std::complex<double> dot_avx2(ConstPlanes a, ConstPlanes b) { return dot_avx2_impl<false>(a, b); }
GBT_AVX2 std::complex<double> dotc_avx2(ConstPlanes a, ConstPlanes b) { return dot_avx2_impl<true>(a, b); }

constexpr KernelTable kAvx2{
    Isa::Avx2, matmul_avx2, axpy_avx2, max_abs_diff_avx2, dot_avx2, dotc_avx2,
};

}  // namespace

namespace detail {

const KernelTable* avx2_table() noexcept { return &kAvx2; }

bool cpu_has_avx2_fma() noexcept {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

}  // namespace detail

#else

namespace detail {
const KernelTable* avx2_table() noexcept { return nullptr; }
bool cpu_has_avx2_fma() noexcept { return false; }
}  // namespace detail

#endif

}  // namespace gbt::linalg::kernels
