#pragma once

#include "gbt/core/event.hpp"
#include "gbt/core/theory_model.hpp"
#include "gbt/errors.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gbt {

// Joint distribution of a sequential experiment (A, E, B, F):
//   P(E_i, F_j) = p(F_j | B E_i A b) p(E_i | A b), or 0 when p(E_i | A b) = 0.
// direct_f[j] = p(F_j | B A b) is the same later experiment without the
// intermediate one, kept for the "unaffected" test.
struct JointTable {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;
    std::vector<double> direct_f;

    double at(std::size_t i, std::size_t j) const { return values.at(i * cols + j); }
    double marginal_e(std::size_t i) const;
    double marginal_f(std::size_t j) const;
    double total() const;
};

template <TheoryModel M>
JointTable joint_distribution(const M& model, const typename M::Belief& belief, const typename M::Action& a,
                              const Partition& outer, const typename M::Action& b, const Partition& inner) {
    JointTable table;
    table.rows = outer.size();
    table.cols = inner.size();
    table.values.assign(table.rows * table.cols, 0.0);

    const auto after_a = model.act(a, belief);
    for (std::size_t i = 0; i < outer.size(); ++i) {
        const double p_e = model.prob(outer[i], after_a);
        if (p_e <= kZeroProbability) continue;
        const auto after_b = model.act(b, model.update(outer[i], after_a));
        for (std::size_t j = 0; j < inner.size(); ++j) {
            table.values[i * table.cols + j] = model.prob(inner[j], after_b) * p_e;
        }
    }
    const auto direct = model.act(b, after_a);
    table.direct_f.reserve(inner.size());
    for (std::size_t j = 0; j < inner.size(); ++j) table.direct_f.push_back(model.prob(inner[j], direct));
    return table;
}

struct RetrodictionReport {
    // P(E|F); empty when the marginal P(F) vanishes.
    std::optional<double> conditional;
    double marginal_f = 0.0;
    double direct_f = 0.0;
    // P(F) equals p(F | B A b): the intermediate experiment leaves F alone.
    bool unaffected = false;
    // conditional == 1 and unaffected.
    bool implies = false;
};

RetrodictionReport retrodiction_report(const JointTable& table, std::size_t e_block, std::size_t f_block, double tol);

// One letter of a history word: an action or an event update.
template <TheoryModel M>
using HistoryStep = std::variant<typename M::Action, Event>;

// Applies the word left to right: the first step acts on the belief first.
// The expression "F B E A b" corresponds to the word [A, E, B, F].
template <TheoryModel M>
typename M::Belief evaluate_history(const M& model, typename M::Belief belief, const std::vector<HistoryStep<M>>& word) {
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (const auto* event = std::get_if<Event>(&word[k])) {
            const double p = model.prob(*event, belief);
            if (p <= kZeroProbability) {
                throw UndefinedUpdate("undefined update at step " + std::to_string(k) + ": p(" + event->to_string() +
                                      ") = " + std::to_string(p) +
                                      "; the update map is only defined for events of nonzero probability");
            }
            belief = model.update(*event, belief);
        } else {
            belief = model.act(std::get<typename M::Action>(word[k]), belief);
        }
    }
    return belief;
}

}  // namespace gbt
