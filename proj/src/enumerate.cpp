#include <set>

#include "polyef/linear_system.hpp"
#include "polyef/simplex.hpp"

namespace polyef {

VertexSet enumerate_01_points(const LinearSystem& s, const std::vector<std::string>& vars,
                              int cap) {
    if (static_cast<int>(vars.size()) > cap)
        throw ScaleError("0/1 enumeration over " + std::to_string(vars.size()) +
                         " variables exceeds the cap of " + std::to_string(cap));
    std::vector<int> idx;
    std::set<int> seen;
    for (const auto& name : vars) {
        int i = s.var_index(name);
        if (!seen.insert(i).second) throw InputError("duplicate variable '" + name + "'");
        idx.push_back(i);
    }

    VertexSet out;
    out.vars = vars;
    const int d = static_cast<int>(vars.size());
    const long total = 1L << d;

    if (d == s.var_count()) {  // plain membership
        RatVector p(s.var_count());
        for (long mask = 0; mask < total; ++mask) {
            for (int i = 0; i < d; ++i) p[idx[i]] = (mask >> i) & 1 ? rat(1) : rat(0);
            if (s.satisfies(p)) {
                RatVector coords(d);
                for (int i = 0; i < d; ++i) coords[i] = p[idx[i]];
                out.points.push_back(std::move(coords));
            }
        }
        return out;
    }

    LpSolver solver(s);
    if (!solver.feasible()) return out;

    // When every enumerated coordinate ranges inside [0,1], membership of a
    // 0/1 vector chi reduces to max <2 chi - 1, x> = |chi|, which reuses the
    // solver's cached phase-one basis instead of refactoring per candidate.
    bool cube = true;
    for (int i = 0; cube && i < d; ++i) {
        RatVector o(s.var_count());
        o[idx[i]] = rat(1);
        LpResult hi = solver.maximize(o);
        if (hi.status != LpStatus::Optimal || hi.value > rat(1)) cube = false;
        o[idx[i]] = rat(-1);
        LpResult lo = solver.maximize(o);
        if (lo.status != LpStatus::Optimal || lo.value > rat(0)) cube = false;
    }

    for (long mask = 0; mask < total; ++mask) {
        bool in;
        if (cube) {
            RatVector o(s.var_count());
            long ones = 0;
            for (int i = 0; i < d; ++i) {
                bool bit = (mask >> i) & 1;
                o[idx[i]] = bit ? rat(1) : rat(-1);
                ones += bit;
            }
            in = solver.maximize(o).value == rat(ones);
        } else {
            LinearSystem fixed = s;
            for (int i = 0; i < d; ++i)
                fixed.add_eq({{vars[i], rat(1)}}, (mask >> i) & 1 ? rat(1) : rat(0));
            in = is_feasible(fixed);
        }
        if (in) {
            RatVector coords(d);
            for (int i = 0; i < d; ++i) coords[i] = (mask >> i) & 1 ? rat(1) : rat(0);
            out.points.push_back(std::move(coords));
        }
    }
    return out;
}

VertexSet enumerate_01_points(const ExtendedFormulation& e, int cap) {
    return enumerate_01_points(e.system, e.projection, cap);
}

}  // namespace polyef
