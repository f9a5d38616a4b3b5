#include "gbt/linalg/complex_matrix.hpp"

#include "gbt/errors.hpp"
#include "gbt/linalg/kernels.hpp"
#include "gbt/linalg/tolerance.hpp"

#include <cmath>
#include <string>

namespace gbt::linalg {

namespace {

kernels::ConstPlanes planes(const ComplexMatrix& m) { return {m.real(), m.imag()}; }
kernels::Planes planes(ComplexMatrix& m) { return {m.real(), m.imag()}; }

}  // namespace

ToleranceConfig::ToleranceConfig(double eq_tol, double psd_tol) : eq_tol_(eq_tol), psd_tol_(psd_tol) {
    if (!(eq_tol > 0.0 && eq_tol < 1e-3) || !(psd_tol > 0.0 && psd_tol < 1e-3)) {
        throw std::invalid_argument("ToleranceConfig: tolerances must lie in (0, 1e-3)");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), re_(dim * dim, 0.0), im_(dim * dim, 0.0) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix(rows.size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != dim_) {
            throw StructuralError("ComplexMatrix: initializer rows must form a square matrix");
        }
        std::size_t c = 0;
        for (const auto& v : row) set(r, c++, v);
        ++r;
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.re_[i * dim + i] = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> entries) {
    ComplexMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.re_[i * m.dim_ + i] = entries[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> entries) {
    return diagonal(std::span<const double>(entries.begin(), entries.size()));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) { return outer(v, v); }

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> u, std::span<const Complex> v) {
    if (u.size() != v.size()) throw StructuralError("outer: vector lengths differ");
    ComplexMatrix m(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) m.set(i, j, u[i] * std::conj(v[j]));
    }
    return m;
}

Complex ComplexMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= dim_ || col >= dim_) throw StructuralError("ComplexMatrix::at: index out of range");
    const std::size_t k = row * dim_ + col;
    return {re_[k], im_[k]};
}

void ComplexMatrix::set(std::size_t row, std::size_t col, Complex value) {
    if (row >= dim_ || col >= dim_) throw StructuralError("ComplexMatrix::set: index out of range");
    const std::size_t k = row * dim_ + col;
    re_[k] = value.real();
    im_[k] = value.imag();
}

void ComplexMatrix::add_to(std::size_t row, std::size_t col, Complex value) {
    if (row >= dim_ || col >= dim_) throw StructuralError("ComplexMatrix::add_to: index out of range");
    const std::size_t k = row * dim_ + col;
    re_[k] += value.real();
    im_[k] += value.imag();
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out.re_[j * dim_ + i] = re_[i * dim_ + j];
            out.im_[j * dim_ + i] = -im_[i * dim_ + j];
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out.re_[j * dim_ + i] = re_[i * dim_ + j];
            out.im_[j * dim_ + i] = im_[i * dim_ + j];
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) t += Complex{re_[i * dim_ + i], im_[i * dim_ + i]};
    return t;
}

bool ComplexMatrix::all_finite() const noexcept {
    for (std::size_t k = 0; k < re_.size(); ++k) {
        if (!std::isfinite(re_[k]) || !std::isfinite(im_[k])) return false;
    }
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) { return axpy(1.0, rhs); }

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) { return axpy(-1.0, rhs); }

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (std::size_t k = 0; k < re_.size(); ++k) {
        const Complex v = Complex{re_[k], im_[k]} * scalar;
        re_[k] = v.real();
        im_[k] = v.imag();
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double scalar) {
    for (auto& v : re_) v *= scalar;
    for (auto& v : im_) v *= scalar;
    return *this;
}

ComplexMatrix& ComplexMatrix::axpy(Complex alpha, const ComplexMatrix& x) {
    require_same_dim(*this, x, "axpy");
    kernels::active_kernels().axpy(alpha, planes(x), planes(*this));
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    require_same_dim(lhs, rhs, "matmul");
    ComplexMatrix out(lhs.dim());
    kernels::active_kernels().matmul(planes(lhs), planes(rhs), planes(out), lhs.dim());
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "max_abs_diff");
    return kernels::active_kernels().max_abs_diff(planes(a), planes(b));
}

double max_abs(const ComplexMatrix& a) { return max_abs_diff(a, ComplexMatrix(a.dim())); }

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "trace_product");
    // Tr(ab) = sum_ik a_ik b_ki = <a, b^T> without conjugation.
    const ComplexMatrix bt = b.transpose();
    return kernels::active_kernels().dot(planes(a), planes(bt));
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "hs_inner");
    return kernels::active_kernels().dotc(planes(a), planes(b));
}

ComplexMatrix sandwich(const ComplexMatrix& k, const ComplexMatrix& rho) { return (k * rho) * k.adjoint(); }

ComplexMatrix adjoint_sandwich(const ComplexMatrix& k, const ComplexMatrix& o) { return (k.adjoint() * o) * k; }

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    ComplexMatrix h = m;
    h += m.adjoint();
    h *= 0.5;
    return h;
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* where) {
    if (a.dim() != b.dim()) {
        throw StructuralError(std::string(where) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                              std::to_string(b.dim()) + ")");
    }
}

}  // namespace gbt::linalg
