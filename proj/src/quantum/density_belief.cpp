#include "gbt/quantum/density_belief.hpp"

#include "gbt/errors.hpp"
#include "gbt/linalg/spectral.hpp"

#include <cmath>
#include <string>

namespace gbt::quantum {

DensityBelief::DensityBelief(ComplexMatrix rho, const ToleranceConfig& tol) : rho_(std::move(rho)) {
    if (rho_.empty()) throw StructuralError("density matrix must have dimension >= 1");
    if (!rho_.all_finite()) throw DomainError("density matrix has non-finite entries");
    if (!linalg::is_density_matrix(rho_, tol)) {
        throw DomainError("not a density matrix (Hermitian, PSD, unit trace), trace = " +
                          std::to_string(rho_.trace().real()));
    }
}

DensityBelief DensityBelief::unchecked(const ComplexMatrix& rho) {
    return DensityBelief(linalg::hermitian_part(rho), Unchecked{});
}

DensityBelief DensityBelief::maximally_mixed(std::size_t dim) {
    if (dim == 0) throw StructuralError("dimension must be >= 1");
    ComplexMatrix m = ComplexMatrix::identity(dim);
    m *= 1.0 / static_cast<double>(dim);
    return DensityBelief(std::move(m), Unchecked{});
}

DensityBelief DensityBelief::pure(std::span<const Complex> psi) {
    if (psi.empty()) throw StructuralError("state vector must be nonempty");
    double norm2 = 0.0;
    for (const Complex& c : psi) norm2 += std::norm(c);
    if (!(norm2 > 0.0) || !std::isfinite(norm2)) throw DomainError("state vector has zero or non-finite norm");
    ComplexMatrix m = ComplexMatrix::outer(psi);
    m *= 1.0 / norm2;
    return DensityBelief(std::move(m), Unchecked{});
}

DensityBelief DensityBelief::basis_state(std::size_t dim, std::size_t k) {
    if (k >= dim) throw StructuralError("basis index " + std::to_string(k) + " out of range for d = " + std::to_string(dim));
    ComplexMatrix m(dim);
    m.set(k, k, 1.0);
    return DensityBelief(std::move(m), Unchecked{});
}

}  // namespace gbt::quantum
