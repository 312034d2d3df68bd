#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polyef/rational.hpp"

namespace polyef {

// One linear row: coeffs . x (<= | =) rhs, dense over the system's variables.
struct Row {
    RatVector coeffs;
    Rational rhs;
};

using SparseTerms = std::vector<std::pair<std::string, Rational>>;

// Named variables, inequality rows (all sense <=) and equation rows, with
// exact coefficients. Size audits count inequality rows only.
class LinearSystem {
public:
    LinearSystem() = default;
    explicit LinearSystem(std::vector<std::string> variables);

    int var_count() const { return static_cast<int>(vars_.size()); }
    int ineq_count() const { return static_cast<int>(ineqs_.size()); }
    int eq_count() const { return static_cast<int>(eqs_.size()); }

    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& var_name(int i) const { return vars_.at(i); }
    int var_index(const std::string& name) const;  // InputError if unknown
    bool has_var(const std::string& name) const;

    const std::vector<Row>& inequalities() const { return ineqs_; }
    const std::vector<Row>& equations() const { return eqs_; }

    int add_var(const std::string& name);
    // a . x <= rhs; ">=" rows are negated by callers on ingestion.
    void add_ineq(const SparseTerms& terms, const Rational& rhs);
    void add_eq(const SparseTerms& terms, const Rational& rhs);
    void add_ineq_dense(RatVector coeffs, Rational rhs);
    void add_eq_dense(RatVector coeffs, Rational rhs);

    // Exact evaluation of a full assignment against every row.
    bool satisfies(const RatVector& point) const;

private:
    RatVector densify(const SparseTerms& terms) const;

    std::vector<std::string> vars_;
    std::unordered_map<std::string, int> var_index_;
    std::vector<Row> ineqs_;
    std::vector<Row> eqs_;
};

// A linear system plus a designated ordered subset of projection variables;
// the polytope it describes is the coordinate projection onto them. Its size
// is the number of inequalities.
struct ExtendedFormulation {
    LinearSystem system;
    std::vector<std::string> projection;

    int size() const { return system.ineq_count(); }
    std::vector<int> projection_indices() const;
    void validate() const;  // projection vars exist and are distinct
};

ExtendedFormulation as_formulation(LinearSystem s);  // projection = all variables

// List of distinct 0/1 points over a declared variable ordering.
struct VertexSet {
    std::vector<std::string> vars;
    std::vector<RatVector> points;

    int count() const { return static_cast<int>(points.size()); }
};

bool same_point_set(const VertexSet& a, const VertexSet& b);

// EF of the intersection: shared projection variables, disjoint copies of
// auxiliary variables (prefixed blk0. / blk1.), all rows of both systems.
// size = size(e1) + size(e2). Requires identical projection lists.
ExtendedFormulation intersect(const ExtendedFormulation& e1, const ExtendedFormulation& e2);

// Pins projection variables to constants: each assignment becomes an
// equation and the variable leaves the projection list. Inequality count
// is unchanged.
ExtendedFormulation fix_coordinates(const ExtendedFormulation& e,
                                    const std::vector<std::pair<std::string, Rational>>& assignment);

// Adds fresh variables pinned to constants by equations and appends them to
// the projection list (constant coordinates of a product polytope).
ExtendedFormulation append_constant_coordinates(
    const ExtendedFormulation& e,
    const std::vector<std::pair<std::string, Rational>>& coords);

// All 0/1 assignments to `vars` extendable to a feasible point of s
// (remaining variables solved by LP feasibility; plain membership when
// `vars` covers every variable). Listed in increasing bitmask order.
VertexSet enumerate_01_points(const LinearSystem& s, const std::vector<std::string>& vars,
                              int cap = 20);
VertexSet enumerate_01_points(const ExtendedFormulation& e, int cap = 20);

}  // namespace polyef
