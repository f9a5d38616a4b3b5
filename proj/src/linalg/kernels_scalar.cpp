#include "gbt/linalg/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace gbt::linalg::kernels {

namespace {

void matmul_scalar(ConstPlanes a, ConstPlanes b, Planes c, std::size_t n) {
    std::fill(c.re.begin(), c.re.end(), 0.0);
    std::fill(c.im.begin(), c.im.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double* cr = c.re.data() + i * n;
        double* ci = c.im.data() + i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const double ar = a.re[i * n + k];
            const double ai = a.im[i * n + k];
            const double* br = b.re.data() + k * n;
            const double* bi = b.im.data() + k * n;
            for (std::size_t j = 0; j < n; ++j) {
                cr[j] += ar * br[j] - ai * bi[j];
                ci[j] += ar * bi[j] + ai * br[j];
            }
        }
    }
}

void axpy_scalar(std::complex<double> alpha, ConstPlanes x, Planes y) {
    const double ar = alpha.real();
    const double ai = alpha.imag();
    for (std::size_t k = 0; k < y.re.size(); ++k) {
        const double xr = x.re[k];
        const double xi = x.im[k];
        y.re[k] += ar * xr - ai * xi;
        y.im[k] += ar * xi + ai * xr;
    }
}

double max_abs_diff_scalar(ConstPlanes a, ConstPlanes b) {
    double best = 0.0;
    for (std::size_t k = 0; k < a.re.size(); ++k) {
        const double dr = a.re[k] - b.re[k];
        const double di = a.im[k] - b.im[k];
        best = std::max(best, dr * dr + di * di);
    }
    return std::sqrt(best);
}

std::complex<double> dot_scalar(ConstPlanes a, ConstPlanes b) {
    double sr = 0.0;
    double si = 0.0;
    for (std::size_t k = 0; k < a.re.size(); ++k) {
        sr += a.re[k] * b.re[k] - a.im[k] * b.im[k];
        si += a.re[k] * b.im[k] + a.im[k] * b.re[k];
    }
    return {sr, si};
}

std::complex<double> dotc_scalar(ConstPlanes a, ConstPlanes b) {
    double sr = 0.0;
    double si = 0.0;
    for (std::size_t k = 0; k < a.re.size(); ++k) {
        sr += a.re[k] * b.re[k] + a.im[k] * b.im[k];
        si += a.re[k] * b.im[k] - a.im[k] * b.re[k];
    }
    return {sr, si};
}

constexpr KernelTable kScalar{
    Isa::Scalar, matmul_scalar, axpy_scalar, max_abs_diff_scalar, dot_scalar, dotc_scalar,
};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

}  // namespace gbt::linalg::kernels
