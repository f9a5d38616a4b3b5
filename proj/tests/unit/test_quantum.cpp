#include "gbt/errors.hpp"
#include "gbt/linalg/spectral.hpp"
#include "gbt/quantum/axiom_sampler.hpp"
#include "gbt/quantum/density_belief.hpp"
#include "gbt/quantum/instrument.hpp"
#include "gbt/quantum/kraus_channel.hpp"
#include "gbt/quantum/matrix_json.hpp"
#include "gbt/quantum/quantum_model.hpp"
#include "gbt/quantum/sampling.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <variant>
#include <vector>

namespace {

using gbt::Event;
using gbt::Partition;
using gbt::Rng;
using gbt::SampleSpace;
using gbt::linalg::Complex;
using gbt::linalg::ComplexMatrix;
using gbt::linalg::max_abs_diff;
using namespace gbt::quantum;

TEST(ProjectorOfEvent, Examples) {
    const SampleSpace x(3);
    EXPECT_EQ(projector_of_event(Event::all(x), 3), ComplexMatrix::identity(3));
    EXPECT_EQ(projector_of_event(Event::none(x), 3), ComplexMatrix(3));
    EXPECT_EQ(projector_of_event(Event(x, {0, 2}), 3), ComplexMatrix::diagonal({1, 0, 1}));
    EXPECT_THROW(projector_of_event(Event(x, {0}), 2), gbt::StructuralError);
}

TEST(DensityBelief, Validation) {
    EXPECT_THROW(DensityBelief(ComplexMatrix::diagonal({1.2, -0.2})), gbt::DomainError);
    EXPECT_THROW(DensityBelief(ComplexMatrix{{0.5, 0.5}, {0, 0.5}}), gbt::DomainError);
    EXPECT_NO_THROW(DensityBelief(ComplexMatrix::diagonal({0.25, 0.75})));
    EXPECT_THROW(DensityBelief::basis_state(2, 2), gbt::StructuralError);
    const std::vector<Complex> zero{0.0, 0.0};
    EXPECT_THROW(DensityBelief::pure(zero), gbt::DomainError);
    const auto plus = DensityBelief::pure(gbt::testing::plus_state());
    EXPECT_NEAR(plus.matrix().at(0, 1).real(), 0.5, 1e-15);
}

TEST(BornProbability, Examples) {
    const SampleSpace x(2);
    const DensityBelief rho(ComplexMatrix::diagonal({0.3, 0.7}));
    EXPECT_NEAR(born_probability(rho, Event::all(x)), 1.0, 1e-15);
    EXPECT_NEAR(born_probability(rho, Event(x, {0})), 0.3, 1e-15);
    EXPECT_NEAR(born_probability(DensityBelief::pure(gbt::testing::plus_state()), Event(x, {0})), 0.5, 1e-15);
}

TEST(BornProbability, PartitionSumsToOne) {
    Rng rng(1);
    for (std::size_t d = 2; d <= 5; ++d) {
        for (int t = 0; t < 20; ++t) {
            const auto rho = random_density(d, rng);
            const auto p = random_partition(SampleSpace(d), rng);
            double s = 0.0;
            for (const auto& b : p.blocks()) s += born_probability(rho, b);
            EXPECT_NEAR(s, 1.0, 1e-12);
        }
    }
}

TEST(LudersUpdate, Examples) {
    const SampleSpace x(2);
    const auto out = luders_update(DensityBelief(ComplexMatrix::diagonal({0.3, 0.7})), Event(x, {0}));
    EXPECT_LE(max_abs_diff(out.matrix(), ComplexMatrix::diagonal({1, 0})), 1e-15);
    const auto mixed = luders_update(DensityBelief::maximally_mixed(2), Event(x, {1}));
    EXPECT_LE(max_abs_diff(mixed.matrix(), ComplexMatrix::diagonal({0, 1})), 1e-15);
    EXPECT_THROW(luders_update(DensityBelief::basis_state(2, 0), Event(x, {1})), gbt::UndefinedUpdate);
}

TEST(LudersUpdate, CertainEventKeepsBelief) {
    Rng rng(2);
    const SampleSpace x(4);
    const Event e(x, {1, 3});
    for (int t = 0; t < 20; ++t) {
        const DensityBelief rho(random_density_on(projector_of_event(e, 4), rng));
        EXPECT_NEAR(born_probability(rho, e), 1.0, 1e-12);
        EXPECT_LE(max_abs_diff(luders_update(rho, e).matrix(), rho.matrix()), 1e-12);
    }
}

TEST(LudersUpdate, MatchesExplicitFormula) {
    Rng rng(3);
    const SampleSpace x(3);
    const Event e(x, {0, 1});
    const auto p = ComplexMatrix::diagonal({1, 1, 0});
    for (int t = 0; t < 10; ++t) {
        const auto rho = random_density(3, rng);
        const auto num = p * rho.matrix() * p;
        const auto expected = num * (1.0 / num.trace().real());
        EXPECT_LE(max_abs_diff(luders_update(rho, e).matrix(), expected), 1e-12);
    }
}

TEST(KrausChannel, Validation) {
    EXPECT_THROW(KrausChannel({ComplexMatrix::diagonal({1, 0.5})}), gbt::DomainError);
    EXPECT_THROW(KrausChannel({ComplexMatrix(2), ComplexMatrix(3)}), gbt::StructuralError);
    EXPECT_THROW(KrausChannel::unitary(ComplexMatrix{{1, 1}, {0, 1}}), gbt::DomainError);
    EXPECT_THROW(KrausChannel(std::vector<ComplexMatrix>{}), gbt::StructuralError);
    const double h = std::sqrt(0.5);
    EXPECT_NO_THROW(KrausChannel({ComplexMatrix::diagonal({h, h}), ComplexMatrix{{0, h}, {h, 0}}}));
}

TEST(KrausChannel, IdentityAndAdjointOfIdentity) {
    Rng rng(4);
    for (std::size_t d = 1; d <= 5; ++d) {
        const auto rho = random_density(d, rng);
        EXPECT_EQ(apply_channel(KrausChannel::identity(d), rho).matrix(), rho.matrix());
        for (int t = 0; t < 5; ++t) {
            const auto ch = random_channel(d, rng);
            EXPECT_LE(max_abs_diff(adjoint_effect(ch, ComplexMatrix::identity(d)), ComplexMatrix::identity(d)), 1e-12);
        }
    }
}

TEST(KrausChannel, Duality) {
    Rng rng(5);
    for (std::size_t d = 2; d <= 5; ++d) {
        for (int t = 0; t < 20; ++t) {
            const auto ch = random_channel(d, rng);
            const auto rho = random_density(d, rng);
            const auto o = gbt::testing::random_hermitian(d, rng);
            const Complex lhs = (o * ch.apply(rho.matrix())).trace();
            const Complex rhs = (adjoint_effect(ch, o) * rho.matrix()).trace();
            EXPECT_LE(std::abs(lhs - rhs), 1e-10);
        }
    }
}

TEST(KrausChannel, CompositionOrder) {
    Rng rng(6);
    const auto a = random_channel(3, rng);
    const auto b = random_channel(3, rng);
    const auto rho = random_density(3, rng);
    EXPECT_LE(max_abs_diff(a.after(b).apply(rho.matrix()), a.apply(b.apply(rho.matrix()))), 1e-12);
    const QuantumModel m(3);
    EXPECT_LE(m.distance(m.act(m.compose(a, b), rho), m.act(a, m.act(b, rho))), 1e-12);
}

TEST(KrausChannel, AsUnitary) {
    Rng rng(7);
    const auto u = random_unitary(3, rng);
    const auto ch = KrausChannel::unitary(u);
    ASSERT_TRUE(ch.as_unitary().has_value());
    EXPECT_EQ(*ch.as_unitary(), u);
    EXPECT_FALSE(random_channel(3, 2, rng).as_unitary().has_value());
}

TEST(Instrument, IdentitySingletons) {
    const SampleSpace x(3);
    const auto inst = instrument_of(KrausChannel::identity(3), Partition::singletons(x));
    ASSERT_EQ(inst.outcomes(), 3u);
    Rng rng(8);
    const auto rho = random_density(3, rng).matrix();
    for (std::size_t i = 0; i < 3; ++i) {
        const auto p = projector_of_event(Event(x, {i}), 3);
        EXPECT_LE(max_abs_diff(inst.apply_branch(i, rho), p * rho * p), 1e-14);
    }
}

TEST(Instrument, ProbabilitiesMatchBornAfterChannel) {
    Rng rng(9);
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
        const auto ch = random_channel(d, rng);
        const auto part = random_partition(SampleSpace(d), rng);
        const auto rho = random_density(d, rng);
        const auto inst = instrument_of(ch, part);
        const auto after = apply_channel(ch, rho);
        for (std::size_t i = 0; i < part.size(); ++i) {
            EXPECT_NEAR(inst.branch_probability(i, rho.matrix()), born_probability(after, part[i]), 1e-10);
        }
    }
}

TEST(Instrument, UnitaryWithTrivialPartition) {
    Rng rng(10);
    const auto u = random_unitary(3, rng);
    const auto inst = instrument_of(KrausChannel::unitary(u), Partition::trivial(SampleSpace(3)));
    ASSERT_EQ(inst.outcomes(), 1u);
    const auto rho = random_density(3, rng).matrix();
    EXPECT_LE(max_abs_diff(inst.apply_branch(0, rho), u * rho * u.adjoint()), 1e-12);
}

TEST(Instrument, Validation) {
    EXPECT_THROW(QuantumInstrument({{ComplexMatrix::diagonal({1, 0})}}), gbt::DomainError);
    EXPECT_THROW(QuantumInstrument::luders({ComplexMatrix::diagonal({0.5, 1})}), gbt::DomainError);
    EXPECT_THROW(Effect(ComplexMatrix::diagonal({1.5, 0})), gbt::DomainError);
    EXPECT_THROW(Effect(ComplexMatrix{{0, 1}, {0, 0}}), gbt::DomainError);
}

TEST(Povm, LudersEffectsAreTheProjectors) {
    Rng rng(11);
    const auto u = random_unitary(3, rng);
    const std::vector<ComplexMatrix> ps{u * ComplexMatrix::diagonal({1, 0, 0}) * u.adjoint(),
                                        u * ComplexMatrix::diagonal({0, 1, 1}) * u.adjoint()};
    const auto effects = povm_of_instrument(QuantumInstrument::luders(ps));
    ASSERT_EQ(effects.size(), 2u);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_LE(max_abs_diff(effects[i].op(), ps[i]), 1e-12);
}

TEST(Povm, TrineEffects) {
    // Built here from the angles, independently of the library fixture.
    const double c = std::sqrt(2.0 / 3.0);
    std::vector<QuantumInstrument::Branch> branches;
    std::vector<ComplexMatrix> expected;
    for (int k = 0; k < 3; ++k) {
        const double th = 2.0 * std::numbers::pi * k / 3.0;
        const std::vector<Complex> psi{std::cos(th / 2), std::sin(th / 2)};
        const auto proj = ComplexMatrix::outer(psi);
        branches.push_back({proj * c});
        expected.push_back(proj * (2.0 / 3.0));
    }
    const QuantumInstrument trine(branches);
    const auto effects = povm_of_instrument(trine);
    ComplexMatrix sum(2);
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_LE(max_abs_diff(effects[k].op(), expected[k]), 1e-12);
        sum += effects[k].op();
    }
    EXPECT_LE(max_abs_diff(sum, ComplexMatrix::identity(2)), 1e-12);
}

TEST(Povm, RandomInstrumentSumsToIdentity) {
    Rng rng(12);
    for (int t = 0; t < 30; ++t) {
        const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
        const auto inst = instrument_of(random_channel(d, rng), random_partition(SampleSpace(d), rng));
        ComplexMatrix sum(d);
        for (const auto& e : povm_of_instrument(inst)) sum += e.op();
        EXPECT_LE(max_abs_diff(sum, ComplexMatrix::identity(d)), 1e-10);
    }
}

TEST(Sampling, ValidObjects) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto rho = std::get<DensityBelief>(sample(SampleKind::Density, 2, s));
        EXPECT_TRUE(gbt::linalg::is_density_matrix(rho.matrix()));
        const auto pure = std::get<DensityBelief>(sample(SampleKind::Pure, 3, s));
        EXPECT_NEAR((pure.matrix() * pure.matrix()).trace().real(), 1.0, 1e-12);
        for (std::size_t d = 1; d <= 5; ++d) {
            const auto u = std::get<ComplexMatrix>(sample(SampleKind::Unitary, d, s));
            EXPECT_LE(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(d)), 1e-10);
        }
        const auto ch = std::get<KrausChannel>(sample(SampleKind::Channel, 3, s));
        EXPECT_LE(max_abs_diff(ch.adjoint(ComplexMatrix::identity(3)), ComplexMatrix::identity(3)), 1e-10);
    }
}

TEST(Sampling, SameSeedSameObject) {
    for (auto kind : {SampleKind::Density, SampleKind::Pure, SampleKind::Unitary, SampleKind::Channel}) {
        const auto a = sample(kind, 4, 1234);
        const auto b = sample(kind, 4, 1234);
        const auto c = sample(kind, 4, 1235);
        ASSERT_EQ(a.index(), b.index());
        if (const auto* u = std::get_if<ComplexMatrix>(&a)) {
            EXPECT_EQ(*u, std::get<ComplexMatrix>(b));
            EXPECT_NE(*u, std::get<ComplexMatrix>(c));
        } else if (const auto* r = std::get_if<DensityBelief>(&a)) {
            EXPECT_EQ(r->matrix(), std::get<DensityBelief>(b).matrix());
            EXPECT_NE(r->matrix(), std::get<DensityBelief>(c).matrix());
        } else {
            EXPECT_EQ(std::get<KrausChannel>(a).kraus_ops(), std::get<KrausChannel>(b).kraus_ops());
        }
    }
    EXPECT_THROW(sample(SampleKind::Density, 0, 1), gbt::StructuralError);
}

TEST(Sampling, KrausBetweenBlocks) {
    Rng rng(13);
    const SampleSpace x(4);
    const Event from(x, {0, 2});
    const Event to(x, {1});
    const auto ops = random_kraus_between(from, to, 2, rng);
    ComplexMatrix sum(4);
    for (const auto& k : ops) {
        sum += k.adjoint() * k;
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 4; ++c) {
                if (!to.contains(r) || !from.contains(c)) {
                    EXPECT_EQ(k.at(r, c), Complex(0.0));
                }
            }
        }
    }
    EXPECT_LE(max_abs_diff(sum, projector_of_event(from, 4)), 1e-12);
}

TEST(AxiomSampler, CertaintyTrialsAreCertain) {
    const QuantumAxiomSampler s(3, 42);
    const QuantumModel m(3);
    for (std::size_t k = 1; k < 40; k += 2) {
        const auto t = s(k);
        ASSERT_TRUE(t.has_value());
        EXPECT_NEAR(m.prob(t->e(), t->belief), 1.0, 1e-12);
    }
}

TEST(MatrixJson, RoundTripAndErrors) {
    Rng rng(14);
    const auto m = gbt::testing::random_matrix(3, rng);
    EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
    const auto real_only = matrix_from_json(nlohmann::json{{"dim", 2}, {"re", {{1, 0}, {0, 0}}}});
    EXPECT_EQ(real_only, ComplexMatrix::diagonal({1, 0}));
    EXPECT_THROW(matrix_from_json(nlohmann::json{{"dim", 2}, {"re", {{1, 0}}}}), gbt::StructuralError);
    EXPECT_THROW(matrix_from_json(nlohmann::json{{"dim", 2}, {"re", {{1, "x"}, {0, 0}}}}), gbt::StructuralError);
    EXPECT_THROW(matrix_from_json(nlohmann::json{{"re", {{1}}}}), gbt::StructuralError);

    const auto inst = QuantumInstrument::luders({ComplexMatrix::diagonal({1, 0}), ComplexMatrix::diagonal({0, 1})});
    const auto back = instrument_from_json(instrument_to_json(inst));
    EXPECT_EQ(back.branches(), inst.branches());
}

}  // namespace
