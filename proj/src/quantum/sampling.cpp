#include "gbt/quantum/sampling.hpp"

#include "gbt/errors.hpp"
#include "gbt/linalg/spectral.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace gbt::quantum {

namespace {

Eigen::MatrixXcd gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    Eigen::MatrixXcd g(rows, cols);
    const double s = 1.0 / std::sqrt(2.0);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(i, j) = Complex(s * re, s * im);
        }
    }
    return g;
}

// Haar unitary of size n (Mezzadri's recipe).
Eigen::MatrixXcd haar(Eigen::Index n, Rng& rng) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gaussian(n, n, rng));
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd& r = qr.matrixQR();
    for (Eigen::Index j = 0; j < n; ++j) {
        const Complex rjj = r(j, j);
        const double mod = std::abs(rjj);
        if (mod > 0.0) q.col(j) *= rjj / mod;
    }
    return q;
}

ComplexMatrix block(const Eigen::MatrixXcd& m, Eigen::Index row0, std::size_t d) {
    ComplexMatrix out(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) out.set(i, j, m(row0 + static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    }
    return out;
}

void require_dim(std::size_t dim) {
    if (dim == 0) throw StructuralError("sampling dimension must be >= 1");
}

}  // namespace

ComplexMatrix ginibre(std::size_t dim, Rng& rng) {
    require_dim(dim);
    return block(gaussian(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim), rng), 0, dim);
}

std::vector<Complex> random_unit_vector(std::size_t dim, Rng& rng) {
    require_dim(dim);
    std::vector<Complex> v(dim);
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (Complex& c : v) {
            const double re = rng.normal();
            const double im = rng.normal();
            c = Complex(re, im);
            norm2 += std::norm(c);
        }
    } while (norm2 == 0.0);
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& c : v) c *= inv;
    return v;
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
    require_dim(dim);
    return block(haar(static_cast<Eigen::Index>(dim), rng), 0, dim);
}

DensityBelief random_density(std::size_t dim, Rng& rng) {
    return DensityBelief::unchecked(random_density_on(ComplexMatrix::identity(dim), rng));
}

DensityBelief random_pure(std::size_t dim, Rng& rng) {
    const auto v = random_unit_vector(dim, rng);
    return DensityBelief::pure(v);
}

ComplexMatrix random_density_on(const ComplexMatrix& p, Rng& rng) {
    require_dim(p.dim());
    const ComplexMatrix g = p * ginibre(p.dim(), rng);
    ComplexMatrix rho = g * g.adjoint();
    const double tr = rho.trace().real();
    if (!(tr > 0.0)) throw DomainError("random_density_on: projector has empty range");
    rho *= 1.0 / tr;
    return linalg::hermitian_part(rho);
}

KrausChannel random_channel(std::size_t dim, std::size_t kraus, Rng& rng) {
    require_dim(dim);
    if (kraus < 1 || kraus > dim * dim) {
        throw StructuralError("Kraus count " + std::to_string(kraus) + " outside 1..d^2 = " + std::to_string(dim * dim));
    }
    const auto d = static_cast<Eigen::Index>(dim);
    const auto n = d * static_cast<Eigen::Index>(kraus);
    // First d columns of a Haar unitary: an isometry C^d -> C^(kd).
    const Eigen::MatrixXcd v = haar(n, rng).leftCols(d);
    std::vector<ComplexMatrix> ops;
    ops.reserve(kraus);
    ComplexMatrix s(dim);
    for (std::size_t j = 0; j < kraus; ++j) {
        ops.push_back(block(v, static_cast<Eigen::Index>(j) * d, dim));
        s += ops.back().adjoint() * ops.back();
    }
    // Remove the rounding left in V^dagger V.
    const ComplexMatrix fix = linalg::psd_inv_sqrt(s);
    for (ComplexMatrix& k : ops) k = k * fix;
    return KrausChannel(std::move(ops));
}

KrausChannel random_channel(std::size_t dim, Rng& rng) {
    const std::size_t cap = std::min<std::size_t>(dim * dim, 4);
    return random_channel(dim, rng.index(1, cap), rng);
}

std::vector<ComplexMatrix> random_kraus_between(const Event& from, const Event& to, std::size_t kraus, Rng& rng) {
    if (from.is_empty() || to.is_empty()) throw StructuralError("random_kraus_between: empty event");
    if (from.space() != to.space()) throw StructuralError("random_kraus_between: events over different spaces");
    const auto cols = from.members();
    const auto rows = to.members();
    const std::size_t d = from.space().size();
    // An isometry needs kraus * |to| >= |from|.
    kraus = std::max(kraus, (cols.size() + rows.size() - 1) / rows.size());
    const auto n = static_cast<Eigen::Index>(kraus * rows.size());
    const Eigen::MatrixXcd v = haar(n, rng).leftCols(static_cast<Eigen::Index>(cols.size()));
    std::vector<ComplexMatrix> ops;
    ops.reserve(kraus);
    for (std::size_t j = 0; j < kraus; ++j) {
        ComplexMatrix k(d);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t c = 0; c < cols.size(); ++c) {
                k.set(rows[r], cols[c], v(static_cast<Eigen::Index>(j * rows.size() + r), static_cast<Eigen::Index>(c)));
            }
        }
        ops.push_back(std::move(k));
    }
    return ops;
}

Partition random_partition(SampleSpace space, Rng& rng, std::size_t min_blocks) {
    const std::size_t d = space.size();
    if (min_blocks < 1 || min_blocks > d) {
        throw StructuralError("cannot split " + std::to_string(d) + " elements into at least " + std::to_string(min_blocks) +
                              " blocks");
    }
    const std::size_t blocks = rng.index(min_blocks, d);
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = d; i > 1; --i) std::swap(order[i - 1], order[rng.index(0, i - 1)]);
    std::vector<std::size_t> raw(d);
    for (std::size_t i = 0; i < d; ++i) raw[order[i]] = i < blocks ? i : rng.index(0, blocks - 1);
    // Relabel by first appearance so labels are 0..blocks-1 in element order.
    std::vector<std::size_t> relabel(blocks, d);
    std::vector<std::size_t> labels(d);
    std::size_t next = 0;
    for (std::size_t x = 0; x < d; ++x) {
        if (relabel[raw[x]] == d) relabel[raw[x]] = next++;
        labels[x] = relabel[raw[x]];
    }
    return Partition::from_labels(space, labels);
}

Sampled sample(SampleKind kind, std::size_t dim, std::uint64_t seed) {
    Rng rng(derive_seed(seed, "sample", static_cast<std::uint64_t>(kind)));
    switch (kind) {
        case SampleKind::Density: return random_density(dim, rng);
        case SampleKind::Pure: return random_pure(dim, rng);
        case SampleKind::Unitary: return random_unitary(dim, rng);
        case SampleKind::Channel: return random_channel(dim, rng);
    }
    throw StructuralError("unknown sample kind");
}

}  // namespace gbt::quantum
