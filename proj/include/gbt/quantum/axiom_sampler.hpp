#pragma once

#include "gbt/core/axioms.hpp"
#include "gbt/core/seeding.hpp"
#include "gbt/quantum/quantum_model.hpp"

#include <cstdint>
#include <optional>

namespace gbt::quantum {

// Trials for check_axioms on the quantum model.
//
// Even trials are generic: random belief, channels and partitions. Odd trials
// are built so that the conditional preconditions actually occur:
//   - the belief is supported inside P_E, so p(E|belief) = 1;
//   - B maps the range of P_E anywhere but sends the complement of E only
//     into the complement of F, so P(E|F) = 1 and p(F|BA) = P(F).
// Trial k draws from derive_seed(seed, "axioms", k).
class QuantumAxiomSampler {
public:
    QuantumAxiomSampler(std::size_t dim, std::uint64_t seed) : dim_(dim), seed_(seed) {}

    std::optional<AxiomTrial<QuantumModel>> operator()(std::size_t k) const;

private:
    std::size_t dim_;
    std::uint64_t seed_;
};

// B with P(E|F) = 1 for every input: Kraus ops {V_j P_E} from a random channel
// V, plus sqrt(l_m)|s_m><x| for x outside E, where sum_m l_m |s_m><s_m| is a
// random density on the range of (I - P_F).
KrausChannel retrodiction_channel(const Event& e, const Event& f, Rng& rng);

}  // namespace gbt::quantum
