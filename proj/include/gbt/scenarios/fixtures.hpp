#pragma once

#include "gbt/linalg/complex_matrix.hpp"
#include "gbt/scenarios/scenario.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gbt::scenarios {

// Three experiments {a,d,f}, {d,b,e}, {a,b,c}.
Scenario figure1_scenario();
// p(a) = 1/2, p(b) = p(d) = 3/8, p(c) = p(f) = 1/8, p(e) = 1/4.
Assignment figure1_assignment();
Assignment uniform_assignment(const Scenario& s, const Rational& p);

// Five two-outcome experiments {v_i, v_(i+1 mod 5)}: the exclusivity graph is a 5-cycle.
Scenario kcbs_scenario();
// {a,b} and {c,d,e}
Scenario disjoint_scenario();

// Named scenarios available without a file: figure1, kcbs, disjoint.
std::vector<std::string> builtin_names();
// Throws StructuralError for unknown names.
Scenario builtin_scenario(const std::string& name);
std::optional<Assignment> builtin_assignment(const std::string& name);

// Qutrit rank-1 projectors realizing the figure-1 scenario, rotated by u
// when given: a, b, d form a basis and e = a, f = b, c = d.
std::map<std::string, linalg::ComplexMatrix> figure1_projectors(const std::optional<linalg::ComplexMatrix>& u = std::nullopt);

}  // namespace gbt::scenarios
