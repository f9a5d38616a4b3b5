#include "gbt/errors.hpp"
#include "gbt/linalg/complex_matrix.hpp"
#include "gbt/linalg/kernels.hpp"
#include "gbt/linalg/spectral.hpp"
#include "gbt/quantum/sampling.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

namespace {

using gbt::Rng;
using gbt::linalg::Complex;
using gbt::linalg::ComplexMatrix;
using gbt::linalg::ToleranceConfig;
namespace kernels = gbt::linalg::kernels;

constexpr double kTight = 1e-10;

ComplexMatrix rotate(const ComplexMatrix& m, std::size_t d, std::uint64_t seed) {
    Rng rng(seed);
    const ComplexMatrix u = gbt::quantum::random_unitary(d, rng);
    return u * m * u.adjoint();
}

// Random split planes of length n.
struct Buf {
    std::vector<double> re, im;
    Buf(std::size_t n, Rng& rng) : re(n), im(n) {
        for (auto& x : re) x = rng.normal();
        for (auto& x : im) x = rng.normal();
    }
    kernels::ConstPlanes view() const { return {re, im}; }
    kernels::Planes view() { return {re, im}; }
};

double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

TEST(Kernels, ScalarIsAlwaysAvailableAndFirst) {
    const auto isas = kernels::available_isas();
    ASSERT_FALSE(isas.empty());
    EXPECT_EQ(isas.front(), kernels::Isa::Scalar);
    EXPECT_EQ(kernels::kernels_for(kernels::Isa::Scalar).isa, kernels::Isa::Scalar);
}

TEST(Kernels, ActiveTableFollowsEnvironment) {
    const auto isas = kernels::available_isas();
    const char* forced = std::getenv("GBT_SIMD");
    if (forced != nullptr && std::string(forced) == "scalar") {
        EXPECT_EQ(kernels::active_kernels().isa, kernels::Isa::Scalar);
    } else if (forced == nullptr) {
        EXPECT_EQ(kernels::active_kernels().isa, isas.back());
    }
}

TEST(Kernels, UnavailableVariantThrows) {
    const auto isas = kernels::available_isas();
    for (auto isa : {kernels::Isa::Avx2, kernels::Isa::Neon}) {
        if (std::find(isas.begin(), isas.end(), isa) == isas.end()) {
            EXPECT_THROW(kernels::kernels_for(isa), std::invalid_argument);
        }
    }
}

// Every compiled variant against the scalar reference, including sizes that
// leave a tail after the vector lanes.
TEST(Kernels, VariantsMatchScalar) {
    const auto& ref = kernels::scalar_kernels();
    for (auto isa : kernels::available_isas()) {
        SCOPED_TRACE(std::string(kernels::isa_name(isa)));
        const auto& k = kernels::kernels_for(isa);
        for (std::size_t n = 1; n <= 9; ++n) {
            Rng rng(100 + n);
            const Buf a(n * n, rng), b(n * n, rng);
            Buf c1(n * n, rng), c2 = c1;
            ref.matmul(a.view(), b.view(), c1.view(), n);
            k.matmul(a.view(), b.view(), c2.view(), n);
            EXPECT_LE(max_gap(c1.re, c2.re), 1e-12 * n);
            EXPECT_LE(max_gap(c1.im, c2.im), 1e-12 * n);

            const Complex alpha{0.7, -1.3};
            Buf y1(n * n, rng), y2 = y1;
            ref.axpy(alpha, a.view(), y1.view());
            k.axpy(alpha, a.view(), y2.view());
            EXPECT_LE(max_gap(y1.re, y2.re), 1e-13);
            EXPECT_LE(max_gap(y1.im, y2.im), 1e-13);

            EXPECT_NEAR(ref.max_abs_diff(a.view(), b.view()), k.max_abs_diff(a.view(), b.view()), 1e-13);
            EXPECT_LE(std::abs(ref.dot(a.view(), b.view()) - k.dot(a.view(), b.view())), 1e-12 * n * n);
            EXPECT_LE(std::abs(ref.dotc(a.view(), b.view()) - k.dotc(a.view(), b.view())), 1e-12 * n * n);
        }
    }
}

TEST(Kernels, ScalarDotOracle) {
    Rng rng(5);
    const Buf a(7, rng), b(7, rng);
    Complex dot = 0.0, dotc = 0.0;
    for (std::size_t i = 0; i < 7; ++i) {
        const Complex x{a.re[i], a.im[i]}, y{b.re[i], b.im[i]};
        dot += x * y;
        dotc += std::conj(x) * y;
    }
    const auto& ref = kernels::scalar_kernels();
    EXPECT_LE(std::abs(ref.dot(a.view(), b.view()) - dot), 1e-13);
    EXPECT_LE(std::abs(ref.dotc(a.view(), b.view()) - dotc), 1e-13);
}

TEST(ComplexMatrix, ProductMatchesNaiveLoop) {
    for (std::size_t d = 1; d <= 8; ++d) {
        Rng rng(d);
        const auto a = gbt::testing::random_matrix(d, rng);
        const auto b = gbt::testing::random_matrix(d, rng);
        EXPECT_LE(gbt::linalg::max_abs_diff(a * b, gbt::testing::naive_matmul(a, b)), 1e-12);
    }
}

TEST(ComplexMatrix, ConstructionAndAccess) {
    const ComplexMatrix m{{1, {0, 2}}, {3, 4}};
    EXPECT_EQ(m.dim(), 2u);
    EXPECT_EQ(m.at(0, 1), Complex(0, 2));
    EXPECT_EQ(m.trace(), Complex(5, 0));
    EXPECT_EQ(m.adjoint().at(1, 0), Complex(0, -2));
    EXPECT_EQ(m.transpose().at(1, 0), Complex(0, 2));
    EXPECT_THROW(m.at(2, 0), gbt::StructuralError);
    EXPECT_THROW((ComplexMatrix{{1, 2}, {3}}), gbt::StructuralError);
    EXPECT_THROW(ComplexMatrix(2) + ComplexMatrix(3), gbt::StructuralError);
    EXPECT_EQ(ComplexMatrix::identity(3), ComplexMatrix::diagonal({1, 1, 1}));
}

TEST(ComplexMatrix, TraceFormsAgreeWithProducts) {
    Rng rng(11);
    for (std::size_t d = 1; d <= 6; ++d) {
        const auto a = gbt::testing::random_matrix(d, rng);
        const auto b = gbt::testing::random_matrix(d, rng);
        const auto k = gbt::testing::random_matrix(d, rng);
        EXPECT_LE(std::abs(gbt::linalg::trace_product(a, b) - (a * b).trace()), 1e-11);
        EXPECT_LE(std::abs(gbt::linalg::hs_inner(a, b) - (a.adjoint() * b).trace()), 1e-11);
        EXPECT_LE(gbt::linalg::max_abs_diff(gbt::linalg::sandwich(k, a), k * a * k.adjoint()), 1e-11);
        EXPECT_LE(gbt::linalg::max_abs_diff(gbt::linalg::adjoint_sandwich(k, a), k.adjoint() * a * k), 1e-11);
    }
}

TEST(ComplexMatrix, AxpyAndScaling) {
    Rng rng(3);
    const auto a = gbt::testing::random_matrix(4, rng);
    auto b = gbt::testing::random_matrix(4, rng);
    const auto expected = b + a * Complex(2, -1);
    b.axpy({2, -1}, a);
    EXPECT_LE(gbt::linalg::max_abs_diff(b, expected), 1e-13);
}

TEST(ToleranceConfig, RejectsOutOfRange) {
    EXPECT_THROW(ToleranceConfig(0.0, 1e-10), std::invalid_argument);
    EXPECT_THROW(ToleranceConfig(1e-9, 1e-2), std::invalid_argument);
    EXPECT_NO_THROW(ToleranceConfig(1e-8, 1e-12));
}

TEST(IsProjector, Examples) {
    EXPECT_TRUE(gbt::linalg::is_projector(ComplexMatrix::diagonal({1, 0})));
    EXPECT_FALSE(gbt::linalg::is_projector(ComplexMatrix::diagonal({0.5, 0.5})));
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto p = rotate(ComplexMatrix::diagonal({1, 1, 0}), 3, s);
        // Oracle: P P computed by the naive loop.
        EXPECT_LE(gbt::linalg::max_abs_diff(gbt::testing::naive_matmul(p, p), p), 1e-12);
        EXPECT_TRUE(gbt::linalg::is_projector(p));
    }
    EXPECT_FALSE(gbt::linalg::is_projector(ComplexMatrix{{0, 1}, {0, 1}}));
}

TEST(IsDensityMatrix, Examples) {
    for (std::size_t d = 1; d <= 6; ++d) {
        EXPECT_TRUE(gbt::linalg::is_density_matrix(ComplexMatrix::identity(d) * (1.0 / d)));
    }
    EXPECT_FALSE(gbt::linalg::is_density_matrix(ComplexMatrix::diagonal({1.2, -0.2})));
    EXPECT_FALSE(gbt::linalg::is_density_matrix(ComplexMatrix::diagonal({0.5, 0.4})));
    Rng rng(8);
    for (int t = 0; t < 20; ++t) {
        const auto psi = gbt::quantum::random_unit_vector(4, rng);
        EXPECT_TRUE(gbt::linalg::is_density_matrix(ComplexMatrix::outer(psi)));
    }
}

TEST(SupportProjector, Examples) {
    EXPECT_EQ(gbt::linalg::support_projector(ComplexMatrix(3)), ComplexMatrix(3));
    EXPECT_LE(gbt::linalg::max_abs_diff(gbt::linalg::support_projector(ComplexMatrix::diagonal({0.3, 0, 0.7})),
                                        ComplexMatrix::diagonal({1, 0, 1})),
              1e-12);
    Rng rng(21);
    for (int t = 0; t < 10; ++t) {
        // Rank 2 in d = 4: G G^dagger with G of two columns.
        ComplexMatrix g(4);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 2; ++j) g.set(i, j, {rng.normal(), rng.normal()});
        }
        const auto a = g * g.adjoint();
        const auto pi = gbt::linalg::support_projector(a);
        EXPECT_NEAR(pi.trace().real(), 2.0, 1e-9);
        EXPECT_TRUE(gbt::linalg::is_projector(pi));
        EXPECT_LE(gbt::linalg::max_abs(a * (ComplexMatrix::identity(4) - pi)), 1e-9);
    }
    EXPECT_THROW(gbt::linalg::support_projector(ComplexMatrix{{0, 1}, {0, 0}}), gbt::DomainError);
}

TEST(Eigh, ReconstructsAndSorts) {
    Rng rng(4);
    for (std::size_t d = 1; d <= 8; ++d) {
        const auto h = gbt::testing::random_hermitian(d, rng);
        const auto e = gbt::linalg::eigh(h);
        ASSERT_EQ(e.values.size(), d);
        EXPECT_TRUE(std::is_sorted(e.values.begin(), e.values.end()));
        const auto recon = e.vectors * ComplexMatrix::diagonal(e.values) * e.vectors.adjoint();
        EXPECT_LE(gbt::linalg::max_abs_diff(recon, h), 1e-10);
        EXPECT_LE(gbt::linalg::max_abs_diff(e.vectors.adjoint() * e.vectors, ComplexMatrix::identity(d)), 1e-10);
    }
}

TEST(PsdRoots, SquareAndInverseOnSupport) {
    Rng rng(9);
    for (std::size_t d = 1; d <= 5; ++d) {
        const auto g = gbt::testing::random_matrix(d, rng);
        const auto a = g * g.adjoint();
        const auto s = gbt::linalg::psd_sqrt(a);
        EXPECT_LE(gbt::linalg::max_abs_diff(s * s, a), 1e-9);
        const auto inv = gbt::linalg::psd_inv_sqrt(a);
        EXPECT_LE(gbt::linalg::max_abs_diff(inv * a * inv, ComplexMatrix::identity(d)), 1e-7);
    }
    const auto inv = gbt::linalg::psd_inv_sqrt(ComplexMatrix::diagonal({4, 0}));
    EXPECT_LE(gbt::linalg::max_abs_diff(inv, ComplexMatrix::diagonal({0.5, 0})), kTight);
}

TEST(IsHermitian, DetectsAntiHermitianPart) {
    Rng rng(12);
    const auto h = gbt::testing::random_hermitian(3, rng);
    EXPECT_TRUE(gbt::linalg::is_hermitian(h));
    auto bad = h;
    bad.add_to(0, 1, {0, 1e-6});
    EXPECT_FALSE(gbt::linalg::is_hermitian(bad));
}

}  // namespace
