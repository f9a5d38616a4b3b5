#pragma once

#include "gbt/linalg/complex_matrix.hpp"
#include "gbt/linalg/tolerance.hpp"

#include <optional>
#include <vector>

namespace gbt::quantum {

using linalg::ComplexMatrix;
using linalg::ToleranceConfig;

// Completely positive trace-preserving map rho -> sum_j K_j rho K_j^dagger.
// Immutable once built; sum_j K_j^dagger K_j = I is checked at construction.
class KrausChannel {
public:
    explicit KrausChannel(std::vector<ComplexMatrix> kraus_ops, const ToleranceConfig& tol = {});

    static KrausChannel identity(std::size_t dim);
    // rho -> U rho U^dagger; throws DomainError unless U is unitary.
    static KrausChannel unitary(const ComplexMatrix& u, const ToleranceConfig& tol = {});

    std::size_t dim() const noexcept { return ops_.front().dim(); }
    const std::vector<ComplexMatrix>& kraus_ops() const noexcept { return ops_; }

    ComplexMatrix apply(const ComplexMatrix& rho) const;
    // Heisenberg picture: O -> sum_j K_j^dagger O K_j.
    ComplexMatrix adjoint(const ComplexMatrix& o) const;

    // "this after first": rho -> this(first(rho)).
    KrausChannel after(const KrausChannel& first) const;

    // The unitary U when the channel has a single unitary Kraus operator.
    std::optional<ComplexMatrix> as_unitary(const ToleranceConfig& tol = {}) const;

private:
    struct Trusted {};
    KrausChannel(std::vector<ComplexMatrix> ops, Trusted) : ops_(std::move(ops)) {}

    std::vector<ComplexMatrix> ops_;
};

}  // namespace gbt::quantum
