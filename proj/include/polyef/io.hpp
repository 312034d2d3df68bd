#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polyef/count_matroid.hpp"
#include "polyef/graph.hpp"
#include "polyef/linear_system.hpp"
#include "polyef/verify.hpp"

namespace polyef {

// Text graph format: "n m" header, then m lines "u v" with integer node ids
// 0..n-1 and u != v; '#' starts a comment, blank lines are skipped. Parse
// errors carry 1-based line numbers.
Graph parse_graph(std::istream& in, const std::string& name = "<graph>");
Graph load_graph_file(const std::string& path);

// {variables, inequalities: [{coeffs: {var: "p/q"}, rhs: "p/q"}], equations,
// projection} with rationals as canonical strings.
std::string system_to_json(const ExtendedFormulation& e, int indent = 2);
ExtendedFormulation system_from_json(const std::string& text);

// Objective-free LP-like listing for human inspection.
std::string system_to_lp_text(const ExtendedFormulation& e);

// Objective lines "var value" with exact rationals; every named variable
// must exist in `vars`; unnamed variables get coefficient zero.
RatVector parse_objective(std::istream& in, const std::vector<std::string>& vars,
                          const std::string& name = "<objective>");
RatVector load_objective_file(const std::string& path, const std::vector<std::string>& vars);

// {"ell": <int>, "m": <int> | {"<node>": <int>, ...}}; the object form must
// cover every node of the graph.
CountMatroidSpec matroid_spec_from_json(const std::string& text, const Graph& g);
CountMatroidSpec load_matroid_spec_file(const std::string& path, const Graph& g);

std::string report_to_json(const VerificationReport& r, int indent = 2);
std::string report_to_text(const VerificationReport& r);

}  // namespace polyef
