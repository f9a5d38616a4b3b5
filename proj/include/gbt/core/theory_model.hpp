#pragma once

#include "gbt/core/event.hpp"

#include <concepts>

namespace gbt {

// Probabilities below this are treated as zero: updates are undefined and
// joint-table entries vanish.
inline constexpr double kZeroProbability = 1e-12;

// p(E|b) >= 1 - kCertaintyTol counts as certainty for forward consistency.
inline constexpr double kCertaintyTol = 1e-12;

// A general Bayesian theory as seen by the checkers.
//
// Beliefs and actions are opaque to the framework; a model supplies
//   prob(E, b)        probability assignment, a measure over events
//   update(E, b)      the belief E b after learning E (throws UndefinedUpdate
//                     when prob(E, b) <= kZeroProbability)
//   act(A, b)         belief change under an action
//   compose(A, B)     the action "B then A", so act(compose(A,B), b) == act(A, act(B, b))
//   identity_action()
//   distance(b, b')   model-defined distance used to decide belief equality
template <class M>
concept TheoryModel = requires(const M& m, const typename M::Belief& b, const typename M::Action& a, const Event& e) {
    typename M::Belief;
    typename M::Action;
    { m.sample_space() } -> std::convertible_to<SampleSpace>;
    { m.prob(e, b) } -> std::convertible_to<double>;
    { m.update(e, b) } -> std::same_as<typename M::Belief>;
    { m.act(a, b) } -> std::same_as<typename M::Belief>;
    { m.compose(a, a) } -> std::same_as<typename M::Action>;
    { m.identity_action() } -> std::same_as<typename M::Action>;
    { m.distance(b, b) } -> std::convertible_to<double>;
};

}  // namespace gbt
