#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gbt::linalg {

using Complex = std::complex<double>;

// Dense square complex matrix for small dimensions (d <= ~64).
//
// Storage is split into a real and an imaginary plane, each row-major, so the
// arithmetic kernels can stream lanes of doubles without shuffling. Element
// access goes through at()/set(); bulk arithmetic dispatches to the active
// kernel table (see kernels.hpp).
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);

    // Row-major nested initializer, e.g. {{1, 0}, {0, {0, 1}}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> entries);
    static ComplexMatrix diagonal(std::initializer_list<double> entries);
    // |v><v| for a column vector v (not normalized here).
    static ComplexMatrix outer(std::span<const Complex> v);
    // |u><v|
    static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return re_.size(); }
    bool empty() const noexcept { return dim_ == 0; }

    Complex at(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col, Complex value);
    void add_to(std::size_t row, std::size_t col, Complex value);

    std::span<double> real() noexcept { return re_; }
    std::span<double> imag() noexcept { return im_; }
    std::span<const double> real() const noexcept { return re_; }
    std::span<const double> imag() const noexcept { return im_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    Complex trace() const;
    bool all_finite() const noexcept;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scalar);
    ComplexMatrix& operator*=(double scalar);
    // this += alpha * x
    ComplexMatrix& axpy(Complex alpha, const ComplexMatrix& x);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix lhs, Complex s) { return lhs *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix rhs) { return rhs *= s; }
    friend ComplexMatrix operator*(ComplexMatrix lhs, double s) { return lhs *= s; }
    friend ComplexMatrix operator*(double s, ComplexMatrix rhs) { return rhs *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

    // Bitwise equality of both planes; numerical comparison uses max_abs_diff.
    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<double> re_;
    std::vector<double> im_;
};

// Entrywise max-norm of (a - b), using the complex modulus per entry.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
// Entrywise max-norm of a.
double max_abs(const ComplexMatrix& a);
// Tr(a b) without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);
// Tr(a^dagger b), the Hilbert-Schmidt inner product.
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);
// k rho k^dagger
ComplexMatrix sandwich(const ComplexMatrix& k, const ComplexMatrix& rho);
// k^dagger o k
ComplexMatrix adjoint_sandwich(const ComplexMatrix& k, const ComplexMatrix& o);
// (m + m^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

// Throws StructuralError unless a and b have the same dimension.
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* where);

}  // namespace gbt::linalg
