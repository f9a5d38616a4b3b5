#include "gbt/quantum/kraus_channel.hpp"

#include "gbt/errors.hpp"

#include <string>

namespace gbt::quantum {

namespace {

ComplexMatrix completeness(const std::vector<ComplexMatrix>& ops) {
    ComplexMatrix sum(ops.front().dim());
    for (const ComplexMatrix& k : ops) sum += k.adjoint() * k;
    return sum;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus_ops, const ToleranceConfig& tol) : ops_(std::move(kraus_ops)) {
    if (ops_.empty()) throw StructuralError("channel needs at least one Kraus operator");
    const std::size_t d = ops_.front().dim();
    if (d == 0) throw StructuralError("Kraus operators must have dimension >= 1");
    for (std::size_t j = 0; j < ops_.size(); ++j) {
        if (ops_[j].dim() != d) {
            throw StructuralError("Kraus operator " + std::to_string(j) + " has dimension " + std::to_string(ops_[j].dim()) +
                                  ", expected " + std::to_string(d));
        }
        if (!ops_[j].all_finite()) throw DomainError("Kraus operator " + std::to_string(j) + " has non-finite entries");
    }
    const double residual = max_abs_diff(completeness(ops_), ComplexMatrix::identity(d));
    if (residual > tol.eq_tol()) {
        throw DomainError("Kraus operators are not trace preserving: |sum K^dagger K - I|_max = " + std::to_string(residual));
    }
}

KrausChannel KrausChannel::identity(std::size_t dim) {
    if (dim == 0) throw StructuralError("dimension must be >= 1");
    return KrausChannel({ComplexMatrix::identity(dim)}, Trusted{});
}

KrausChannel KrausChannel::unitary(const ComplexMatrix& u, const ToleranceConfig& tol) {
    if (u.empty()) throw StructuralError("unitary must have dimension >= 1");
    const ComplexMatrix id = ComplexMatrix::identity(u.dim());
    if (max_abs_diff(u.adjoint() * u, id) > tol.eq_tol() || max_abs_diff(u * u.adjoint(), id) > tol.eq_tol()) {
        throw DomainError("matrix is not unitary");
    }
    return KrausChannel({u}, Trusted{});
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix& rho) const {
    linalg::require_same_dim(ops_.front(), rho, "KrausChannel::apply");
    ComplexMatrix out(rho.dim());
    for (const ComplexMatrix& k : ops_) out += sandwich(k, rho);
    return out;
}

ComplexMatrix KrausChannel::adjoint(const ComplexMatrix& o) const {
    linalg::require_same_dim(ops_.front(), o, "KrausChannel::adjoint");
    ComplexMatrix out(o.dim());
    for (const ComplexMatrix& k : ops_) out += adjoint_sandwich(k, o);
    return out;
}

KrausChannel KrausChannel::after(const KrausChannel& first) const {
    linalg::require_same_dim(ops_.front(), first.ops_.front(), "KrausChannel::after");
    std::vector<ComplexMatrix> ops;
    ops.reserve(ops_.size() * first.ops_.size());
    for (const ComplexMatrix& k2 : ops_) {
        for (const ComplexMatrix& k1 : first.ops_) ops.push_back(k2 * k1);
    }
    return KrausChannel(std::move(ops), Trusted{});
}

std::optional<ComplexMatrix> KrausChannel::as_unitary(const ToleranceConfig& tol) const {
    if (ops_.size() != 1) return std::nullopt;
    const ComplexMatrix& u = ops_.front();
    const ComplexMatrix id = ComplexMatrix::identity(u.dim());
    if (max_abs_diff(u * u.adjoint(), id) > tol.eq_tol()) return std::nullopt;
    return u;
}

}  // namespace gbt::quantum
