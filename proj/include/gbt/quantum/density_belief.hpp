#pragma once

#include "gbt/linalg/complex_matrix.hpp"
#include "gbt/linalg/tolerance.hpp"

#include <span>

namespace gbt::quantum {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::ToleranceConfig;

// A belief of the quantum model: a density matrix on C^d.
class DensityBelief {
public:
    // Validates with is_density_matrix; throws DomainError otherwise.
    explicit DensityBelief(ComplexMatrix rho, const ToleranceConfig& tol = {});

    // Skips validation. For outputs of maps already known to preserve
    // density matrices (channels, normalized Lueders updates); the Hermitian
    // part is taken to wash out rounding.
    static DensityBelief unchecked(const ComplexMatrix& rho);

    static DensityBelief maximally_mixed(std::size_t dim);
    // |psi><psi| / <psi|psi>
    static DensityBelief pure(std::span<const Complex> psi);
    // |k><k|
    static DensityBelief basis_state(std::size_t dim, std::size_t k);

    const ComplexMatrix& matrix() const noexcept { return rho_; }
    std::size_t dim() const noexcept { return rho_.dim(); }

private:
    struct Unchecked {};
    DensityBelief(ComplexMatrix rho, Unchecked) : rho_(std::move(rho)) {}

    ComplexMatrix rho_;
};

}  // namespace gbt::quantum
