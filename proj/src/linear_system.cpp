#include "polyef/linear_system.hpp"

#include <algorithm>
#include <set>

namespace polyef {

LinearSystem::LinearSystem(std::vector<std::string> variables) {
    for (auto& v : variables) add_var(v);
    (void)variables;
}

int LinearSystem::var_index(const std::string& name) const {
    auto it = var_index_.find(name);
    if (it == var_index_.end()) throw InputError("unknown variable '" + name + "'");
    return it->second;
}

bool LinearSystem::has_var(const std::string& name) const {
    return var_index_.count(name) > 0;
}

int LinearSystem::add_var(const std::string& name) {
    if (name.empty()) throw InputError("empty variable name");
    auto [it, fresh] = var_index_.emplace(name, static_cast<int>(vars_.size()));
    if (!fresh) throw InputError("duplicate variable '" + name + "'");
    vars_.push_back(name);
    // New variable has coefficient 0 in every existing row.
    for (auto& r : ineqs_) r.coeffs.emplace_back();
    for (auto& r : eqs_) r.coeffs.emplace_back();
    return it->second;
}

RatVector LinearSystem::densify(const SparseTerms& terms) const {
    RatVector c(vars_.size());
    for (const auto& [name, val] : terms) c[var_index(name)] += val;
    return c;
}

void LinearSystem::add_ineq(const SparseTerms& terms, const Rational& rhs) {
    ineqs_.push_back(Row{densify(terms), rhs});
}

void LinearSystem::add_eq(const SparseTerms& terms, const Rational& rhs) {
    eqs_.push_back(Row{densify(terms), rhs});
}

void LinearSystem::add_ineq_dense(RatVector coeffs, Rational rhs) {
    if (coeffs.size() != vars_.size()) throw DimensionError("row length mismatch");
    ineqs_.push_back(Row{std::move(coeffs), std::move(rhs)});
}

void LinearSystem::add_eq_dense(RatVector coeffs, Rational rhs) {
    if (coeffs.size() != vars_.size()) throw DimensionError("row length mismatch");
    eqs_.push_back(Row{std::move(coeffs), std::move(rhs)});
}

bool LinearSystem::satisfies(const RatVector& point) const {
    if (point.size() != vars_.size()) throw DimensionError("point length mismatch");
    for (const auto& r : ineqs_)
        if (dot(r.coeffs, point) > r.rhs) return false;
    for (const auto& r : eqs_)
        if (dot(r.coeffs, point) != r.rhs) return false;
    return true;
}

std::vector<int> ExtendedFormulation::projection_indices() const {
    std::vector<int> idx;
    idx.reserve(projection.size());
    for (const auto& name : projection) idx.push_back(system.var_index(name));
    return idx;
}

void ExtendedFormulation::validate() const {
    std::set<std::string> seen;
    for (const auto& name : projection) {
        system.var_index(name);
        if (!seen.insert(name).second)
            throw CompositionError("projection variable '" + name + "' listed twice");
    }
}

ExtendedFormulation as_formulation(LinearSystem s) {
    ExtendedFormulation e{std::move(s), {}};
    e.projection = e.system.variables();
    return e;
}

bool same_point_set(const VertexSet& a, const VertexSet& b) {
    if (a.vars != b.vars) return false;
    auto key = [](const VertexSet& vs) {
        std::vector<std::vector<std::string>> k;
        for (const auto& p : vs.points) {
            std::vector<std::string> row;
            row.reserve(p.size());
            for (const auto& x : p) row.push_back(x.str());
            k.push_back(std::move(row));
        }
        std::sort(k.begin(), k.end());
        return k;
    };
    return key(a) == key(b);
}

ExtendedFormulation intersect(const ExtendedFormulation& e1, const ExtendedFormulation& e2) {
    e1.validate();
    e2.validate();
    if (e1.projection != e2.projection)
        throw CompositionError("intersect requires identical projection variable lists");

    LinearSystem out;
    for (const auto& p : e1.projection) out.add_var(p);

    // Maps a block's variable indices into the output system, copying
    // auxiliary variables under a block prefix.
    auto map_block = [&](const ExtendedFormulation& e, const std::string& prefix) {
        std::set<std::string> proj(e.projection.begin(), e.projection.end());
        std::vector<int> to_out(e.system.var_count());
        for (int i = 0; i < e.system.var_count(); ++i) {
            const std::string& name = e.system.var_name(i);
            to_out[i] = proj.count(name) ? out.var_index(name) : out.add_var(prefix + name);
        }
        return to_out;
    };
    auto copy_rows = [&](const ExtendedFormulation& e, const std::vector<int>& to_out) {
        for (const auto& r : e.system.inequalities()) {
            RatVector c(out.var_count());
            for (int i = 0; i < static_cast<int>(r.coeffs.size()); ++i) c[to_out[i]] = r.coeffs[i];
            out.add_ineq_dense(std::move(c), r.rhs);
        }
        for (const auto& r : e.system.equations()) {
            RatVector c(out.var_count());
            for (int i = 0; i < static_cast<int>(r.coeffs.size()); ++i) c[to_out[i]] = r.coeffs[i];
            out.add_eq_dense(std::move(c), r.rhs);
        }
    };

    auto m1 = map_block(e1, "blk0.");
    auto m2 = map_block(e2, "blk1.");
    // add_var above appended zero columns; rows must be added after all vars exist
    copy_rows(e1, m1);
    copy_rows(e2, m2);

    ExtendedFormulation result{std::move(out), e1.projection};
    return result;
}

ExtendedFormulation fix_coordinates(const ExtendedFormulation& e,
                                    const std::vector<std::pair<std::string, Rational>>& assignment) {
    e.validate();
    ExtendedFormulation out = e;
    std::set<std::string> proj(out.projection.begin(), out.projection.end());
    std::set<std::string> fixed;
    for (const auto& [name, value] : assignment) {
        if (!proj.count(name))
            throw CompositionError("fix_coordinates: '" + name + "' is not a projection variable");
        if (!fixed.insert(name).second)
            throw CompositionError("fix_coordinates: '" + name + "' assigned twice");
        out.system.add_eq({{name, Rational(1)}}, value);
    }
    std::vector<std::string> remaining;
    for (const auto& p : out.projection)
        if (!fixed.count(p)) remaining.push_back(p);
    out.projection = std::move(remaining);
    return out;
}

ExtendedFormulation append_constant_coordinates(
    const ExtendedFormulation& e,
    const std::vector<std::pair<std::string, Rational>>& coords) {
    e.validate();
    ExtendedFormulation out = e;
    for (const auto& [name, value] : coords) {
        out.system.add_var(name);
        out.system.add_eq({{name, Rational(1)}}, value);
        out.projection.push_back(name);
    }
    return out;
}

}  // namespace polyef
