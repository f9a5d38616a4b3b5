#include "gbt/linalg/kernels.hpp"

#if defined(__aarch64__) || defined(_M_ARM64)
#define GBT_HAVE_NEON_KERNELS 1
#include <arm_neon.h>
#endif

#include <algorithm>
#include <cmath>

namespace gbt::linalg::kernels {

#if defined(GBT_HAVE_NEON_KERNELS)

// NEON is baseline on aarch64, so no runtime feature probe is needed.
namespace {

void matmul_neon(ConstPlanes a, ConstPlanes b, Planes c, std::size_t n) {
    std::fill(c.re.begin(), c.re.end(), 0.0);
    std::fill(c.im.begin(), c.im.end(), 0.0);
    const std::size_t vec_end = n - n % 2;
    for (std::size_t i = 0; i < n; ++i) {
        double* cr = c.re.data() + i * n;
        double* ci = c.im.data() + i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const double ar = a.re[i * n + k];
            const double ai = a.im[i * n + k];
            const double* br = b.re.data() + k * n;
            const double* bi = b.im.data() + k * n;
            const float64x2_t var = vdupq_n_f64(ar);
            const float64x2_t vai = vdupq_n_f64(ai);
            std::size_t j = 0;
            for (; j < vec_end; j += 2) {
                const float64x2_t vbr = vld1q_f64(br + j);
                const float64x2_t vbi = vld1q_f64(bi + j);
                float64x2_t vcr = vld1q_f64(cr + j);
                float64x2_t vci = vld1q_f64(ci + j);
                vcr = vfmaq_f64(vcr, var, vbr);
                vcr = vfmsq_f64(vcr, vai, vbi);
                vci = vfmaq_f64(vci, var, vbi);
                vci = vfmaq_f64(vci, vai, vbr);
                vst1q_f64(cr + j, vcr);
                vst1q_f64(ci + j, vci);
            }
            for (; j < n; ++j) {
                cr[j] += ar * br[j] - ai * bi[j];
                ci[j] += ar * bi[j] + ai * br[j];
            }
        }
    }
}

void axpy_neon(std::complex<double> alpha, ConstPlanes x, Planes y) {
    const double ar = alpha.real();
    const double ai = alpha.imag();
    const float64x2_t var = vdupq_n_f64(ar);
    const float64x2_t vai = vdupq_n_f64(ai);
    const std::size_t len = y.re.size();
    const std::size_t vec_end = len - len % 2;
    std::size_t k = 0;
    for (; k < vec_end; k += 2) {
        const float64x2_t xr = vld1q_f64(x.re.data() + k);
        const float64x2_t xi = vld1q_f64(x.im.data() + k);
        float64x2_t yr = vld1q_f64(y.re.data() + k);
        float64x2_t yi = vld1q_f64(y.im.data() + k);
        yr = vfmaq_f64(yr, var, xr);
        yr = vfmsq_f64(yr, vai, xi);
        yi = vfmaq_f64(yi, var, xi);
        yi = vfmaq_f64(yi, vai, xr);
        vst1q_f64(y.re.data() + k, yr);
        vst1q_f64(y.im.data() + k, yi);
    }
    for (; k < len; ++k) {
        const double xr = x.re[k];
        const double xi = x.im[k];
        y.re[k] += ar * xr - ai * xi;
        y.im[k] += ar * xi + ai * xr;
    }
}

double max_abs_diff_neon(ConstPlanes a, ConstPlanes b) {
    const std::size_t len = a.re.size();
    const std::size_t vec_end = len - len % 2;
    float64x2_t best = vdupq_n_f64(0.0);
    std::size_t k = 0;
    for (; k < vec_end; k += 2) {
        const float64x2_t dr = vsubq_f64(vld1q_f64(a.re.data() + k), vld1q_f64(b.re.data() + k));
        const float64x2_t di = vsubq_f64(vld1q_f64(a.im.data() + k), vld1q_f64(b.im.data() + k));
        best = vmaxq_f64(best, vfmaq_f64(vmulq_f64(di, di), dr, dr));
    }
    double m = vmaxvq_f64(best);
    for (; k < len; ++k) {
        const double dr = a.re[k] - b.re[k];
        const double di = a.im[k] - b.im[k];
        m = std::max(m, dr * dr + di * di);
    }
    return std::sqrt(m);
}

template <bool Conjugate>
std::complex<double> dot_neon_impl(ConstPlanes a, ConstPlanes b) {
    const std::size_t len = a.re.size();
    const std::size_t vec_end = len - len % 2;
    float64x2_t sr = vdupq_n_f64(0.0);
    float64x2_t si = vdupq_n_f64(0.0);
    std::size_t k = 0;
    for (; k < vec_end; k += 2) {
        const float64x2_t ar = vld1q_f64(a.re.data() + k);
        const float64x2_t ai = vld1q_f64(a.im.data() + k);
        const float64x2_t br = vld1q_f64(b.re.data() + k);
        const float64x2_t bi = vld1q_f64(b.im.data() + k);
        sr = vfmaq_f64(sr, ar, br);
        si = vfmaq_f64(si, ar, bi);
        if constexpr (Conjugate) {
            sr = vfmaq_f64(sr, ai, bi);
            si = vfmsq_f64(si, ai, br);
        } else {
            sr = vfmsq_f64(sr, ai, bi);
            si = vfmaq_f64(si, ai, br);
        }
    }
    double rr = vaddvq_f64(sr);
    double ri = vaddvq_f64(si);
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

std::complex<double> dot_neon(ConstPlanes a, ConstPlanes b) { return dot_neon_impl<false>(a, b); }
std::complex<double> dotc_neon(ConstPlanes a, ConstPlanes b) { return dot_neon_impl<true>(a, b); }

constexpr KernelTable kNeon{
    Isa::Neon, matmul_neon, axpy_neon, max_abs_diff_neon, dot_neon, dotc_neon,
};

}  // namespace

namespace detail {
const KernelTable* neon_table() noexcept { return &kNeon; }
}  // namespace detail

#else

namespace detail {
const KernelTable* neon_table() noexcept { return nullptr; }
}  // namespace detail

#endif

}  // namespace gbt::linalg::kernels
