#pragma once

#include "gbt/linalg/complex_matrix.hpp"
#include "gbt/linalg/tolerance.hpp"

#include <vector>

namespace gbt::linalg {

struct HermitianEigen {
    std::vector<double> values;   // ascending
    ComplexMatrix vectors;        // column k is the eigenvector of values[k]
};

bool is_hermitian(const ComplexMatrix& m, const ToleranceConfig& tol = {});

// Spectral decomposition of a Hermitian matrix. Only the Hermitian part of
// the input is used; callers check Hermiticity first when it matters.
HermitianEigen eigh(const ComplexMatrix& m);

// M = M^dagger and M^2 = M, both within eq_tol.
bool is_projector(const ComplexMatrix& m, const ToleranceConfig& tol = {});

// Hermitian within eq_tol, eigenvalues >= -psd_tol, |Tr M - 1| <= eq_tol.
bool is_density_matrix(const ComplexMatrix& m, const ToleranceConfig& tol = {});

// Hermitian within eq_tol and eigenvalues >= -psd_tol.
bool is_psd(const ComplexMatrix& m, const ToleranceConfig& tol = {});

// Sum of eigenprojectors with eigenvalue > psd_tol.
// Throws DomainError for non-Hermitian input.
ComplexMatrix support_projector(const ComplexMatrix& a, const ToleranceConfig& tol = {});

// Principal square root of a PSD matrix (negative rounding noise clamped).
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

// Moore-Penrose inverse square root on the support: eigenvalues <= psd_tol map to 0.
ComplexMatrix psd_inv_sqrt(const ComplexMatrix& a, const ToleranceConfig& tol = {});

}  // namespace gbt::linalg
