#include "gbt/linalg/spectral.hpp"

#include "gbt/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace gbt::linalg {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
    const auto n = static_cast<Eigen::Index>(m.dim());
    Eigen::MatrixXcd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
    return out;
}

ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
    ComplexMatrix out(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) out.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), m(i, j));
    }
    return out;
}

// sum_k f(lambda_k) |v_k><v_k|
template <class F>
ComplexMatrix spectral_map(const HermitianEigen& eig, F&& f) {
    const std::size_t n = eig.values.size();
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double w = f(eig.values[k]);
        if (w == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vi = eig.vectors.at(i, k);
            for (std::size_t j = 0; j < n; ++j) out.add_to(i, j, w * vi * std::conj(eig.vectors.at(j, k)));
        }
    }
    return out;
}

}  // namespace

bool is_hermitian(const ComplexMatrix& m, const ToleranceConfig& tol) {
    return max_abs_diff(m, m.adjoint()) <= tol.eq_tol();
}

HermitianEigen eigh(const ComplexMatrix& m) {
    if (m.dim() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(hermitian_part(m)));
    if (solver.info() != Eigen::Success) throw DomainError("eigh: eigendecomposition did not converge");
    HermitianEigen out;
    out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    out.vectors = from_eigen(solver.eigenvectors());
    return out;
}

bool is_projector(const ComplexMatrix& m, const ToleranceConfig& tol) {
    if (!is_hermitian(m, tol)) return false;
    return max_abs_diff(m * m, m) <= tol.eq_tol();
}

bool is_psd(const ComplexMatrix& m, const ToleranceConfig& tol) {
    if (!m.all_finite() || !is_hermitian(m, tol)) return false;
    const auto eig = eigh(m);
    return eig.values.empty() || eig.values.front() >= -tol.psd_tol();
}

bool is_density_matrix(const ComplexMatrix& m, const ToleranceConfig& tol) {
    if (m.dim() == 0 || !is_psd(m, tol)) return false;
    return std::abs(m.trace() - Complex{1.0, 0.0}) <= tol.eq_tol();
}

ComplexMatrix support_projector(const ComplexMatrix& a, const ToleranceConfig& tol) {
    if (!is_hermitian(a, tol)) throw DomainError("support_projector: input is not Hermitian");
    const auto eig = eigh(a);
    return spectral_map(eig, [&](double v) { return v > tol.psd_tol() ? 1.0 : 0.0; });
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
    const auto eig = eigh(a);
    return spectral_map(eig, [](double v) { return std::sqrt(std::max(v, 0.0)); });
}

ComplexMatrix psd_inv_sqrt(const ComplexMatrix& a, const ToleranceConfig& tol) {
    const auto eig = eigh(a);
    return spectral_map(eig, [&](double v) { return v > tol.psd_tol() ? 1.0 / std::sqrt(v) : 0.0; });
}

}  // namespace gbt::linalg
