#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

// Arithmetic kernels over split (real, imaginary) planes.
//
// Every kernel exists as a scalar reference and, where the target supports
// it, an AVX2+FMA (x86-64) or NEON (aarch64) variant. The variant used by
// ComplexMatrix is chosen once at first use from the CPU's capabilities; the
// GBT_SIMD environment variable ("scalar", "avx2", "neon") overrides the
// choice. All variants must agree with the scalar reference up to rounding
// (FMA contraction), which the equivalence tests pin down.
namespace gbt::linalg::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa) noexcept;

// Read-only view of a matrix/vector stored as two planes.
struct ConstPlanes {
    std::span<const double> re;
    std::span<const double> im;
};

struct Planes {
    std::span<double> re;
    std::span<double> im;
};

struct KernelTable {
    Isa isa;

    // c = a * b for n x n row-major matrices; c must not alias a or b.
    void (*matmul)(ConstPlanes a, ConstPlanes b, Planes c, std::size_t n);

    // y += alpha * x, elementwise over the planes.
    void (*axpy)(std::complex<double> alpha, ConstPlanes x, Planes y);

    // max_k |a_k - b_k| using the complex modulus.
    double (*max_abs_diff)(ConstPlanes a, ConstPlanes b);

    // sum_k a_k * b_k (unconjugated) and sum_k conj(a_k) * b_k.
    std::complex<double> (*dot)(ConstPlanes a, ConstPlanes b);
    std::complex<double> (*dotc)(ConstPlanes a, ConstPlanes b);
};

const KernelTable& scalar_kernels() noexcept;

// Tables compiled into this binary and supported by the running CPU,
// scalar first.
std::vector<Isa> available_isas();

// Throws std::invalid_argument if the ISA is not available at run time.
const KernelTable& kernels_for(Isa isa);

// The table ComplexMatrix arithmetic dispatches through.
const KernelTable& active_kernels() noexcept;

namespace detail {
// Each returns nullptr when the variant was not compiled in.
const KernelTable* avx2_table() noexcept;
const KernelTable* neon_table() noexcept;
bool cpu_has_avx2_fma() noexcept;
}  // namespace detail

}  // namespace gbt::linalg::kernels
