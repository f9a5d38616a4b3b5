#pragma once

#include "gbt/core/event.hpp"
#include "gbt/core/seeding.hpp"
#include "gbt/linalg/complex_matrix.hpp"
#include "gbt/quantum/density_belief.hpp"
#include "gbt/quantum/kraus_channel.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace gbt::quantum {

// Random objects for the checkers. Each function is deterministic in the
// state of the generator it is handed.

// Entries i.i.d. complex normal with unit variance.
ComplexMatrix ginibre(std::size_t dim, Rng& rng);
// Unit vector, uniform on the sphere.
std::vector<Complex> random_unit_vector(std::size_t dim, Rng& rng);
// Haar unitary: QR of a Ginibre matrix with the phases of diag(R) removed.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);
// G G^dagger / Tr, G Ginibre (Hilbert-Schmidt measure).
DensityBelief random_density(std::size_t dim, Rng& rng);
DensityBelief random_pure(std::size_t dim, Rng& rng);
// Same, restricted to the range of the projector p (p nonzero).
ComplexMatrix random_density_on(const ComplexMatrix& p, Rng& rng);
// Channel with `kraus` operators (1 <= kraus <= d^2) cut from a random
// isometry C^d -> C^(kd) and renormalized to be trace preserving.
KrausChannel random_channel(std::size_t dim, std::size_t kraus, Rng& rng);
// Kraus count drawn uniformly from 1..min(d^2, 4).
KrausChannel random_channel(std::size_t dim, Rng& rng);
// Kraus operators of a random channel from span{|x> : x in from} into
// span{|y> : y in to}, written as d x d matrices: rows inside `to`, columns
// inside `from`, sum K^dagger K = P_from. Both events must be nonempty.
std::vector<ComplexMatrix> random_kraus_between(const Event& from, const Event& to, std::size_t kraus, Rng& rng);
// Random partition of {0..d-1} into between min_blocks and d blocks.
Partition random_partition(SampleSpace space, Rng& rng, std::size_t min_blocks = 1);

enum class SampleKind { Density, Pure, Unitary, Channel };
using Sampled = std::variant<DensityBelief, ComplexMatrix, KrausChannel>;

// Seeded entry point: the same (kind, dim, seed) always gives the same object.
Sampled sample(SampleKind kind, std::size_t dim, std::uint64_t seed);

}  // namespace gbt::quantum
