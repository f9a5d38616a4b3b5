#pragma once

#include "gbt/core/axioms.hpp"
#include "gbt/core/seeding.hpp"
#include "gbt/linalg/complex_matrix.hpp"
#include "gbt/quantum/axiom_sampler.hpp"
#include "gbt/quantum/instrument.hpp"
#include "gbt/quantum/quantum_model.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gbt::testing {

inline std::string data_path(const std::string& rel) { return std::string(GBT_DATA_DIR) + "/" + rel; }

// Naive triple loop, independent of the kernel tables.
inline linalg::ComplexMatrix naive_matmul(const linalg::ComplexMatrix& a, const linalg::ComplexMatrix& b) {
    const std::size_t d = a.dim();
    linalg::ComplexMatrix c(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            std::complex<double> s = 0.0;
            for (std::size_t k = 0; k < d; ++k) s += a.at(i, k) * b.at(k, j);
            c.set(i, j, s);
        }
    }
    return c;
}

inline linalg::ComplexMatrix random_matrix(std::size_t d, Rng& rng) {
    linalg::ComplexMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m.set(i, j, {rng.normal(), rng.normal()});
    }
    return m;
}

inline linalg::ComplexMatrix random_hermitian(std::size_t d, Rng& rng) {
    const auto m = random_matrix(d, rng);
    return linalg::hermitian_part(m);
}

// |+> on a qubit.
inline std::vector<std::complex<double>> plus_state() {
    const double h = 1.0 / std::sqrt(2.0);
    return {h, h};
}

// Quantum model whose update renormalizes by sqrt(p) instead of p.
class BrokenUpdateModel {
public:
    using Belief = quantum::DensityBelief;
    using Action = quantum::KrausChannel;

    explicit BrokenUpdateModel(std::size_t dim) : inner_(dim) {}

    SampleSpace sample_space() const { return inner_.sample_space(); }
    double prob(const Event& e, const Belief& b) const { return inner_.prob(e, b); }
    Belief update(const Event& e, const Belief& b) const {
        const double p = inner_.prob(e, b);
        if (p <= kZeroProbability) throw UndefinedUpdate("broken model: zero probability");
        const auto proj = quantum::projector_of_event(e, b.dim());
        return Belief::unchecked((proj * b.matrix() * proj) * (1.0 / std::sqrt(p)));
    }
    Belief act(const Action& a, const Belief& b) const { return inner_.act(a, b); }
    Action compose(const Action& a, const Action& b) const { return inner_.compose(a, b); }
    Action identity_action() const { return inner_.identity_action(); }
    double distance(const Belief& a, const Belief& b) const { return inner_.distance(a, b); }

private:
    quantum::QuantumModel inner_;
};

static_assert(TheoryModel<BrokenUpdateModel>);

// Reuses the quantum trials for a model with the same belief and action types.
template <class M>
auto adapt_sampler(quantum::QuantumAxiomSampler s) {
    return [s](std::size_t k) -> std::optional<AxiomTrial<M>> {
        auto t = s(k);
        if (!t) return std::nullopt;
        return AxiomTrial<M>{t->belief, t->a, t->outer, t->b, t->inner, t->e_block, t->f_block};
    };
}

}  // namespace gbt::testing
