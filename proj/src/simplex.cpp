#include "polyef/simplex.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace polyef {

const char* to_string(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
    }
    return "?";
}

namespace {

// Sparse row over integer column indices, kept sorted by column.
using Terms = std::vector<std::pair<int, Rational>>;

Terms to_sparse(const RatVector& dense) {
    Terms t;
    for (int j = 0; j < static_cast<int>(dense.size()); ++j)
        if (!dense[j].is_zero()) t.emplace_back(j, dense[j]);
    return t;
}

// out + f * row, merging sorted terms and dropping exact zeros.
Terms axpy(const Terms& out, const Rational& f, const Terms& row) {
    Terms res;
    res.reserve(out.size() + row.size());
    std::size_t a = 0, b = 0;
    while (a < out.size() || b < row.size()) {
        if (b == row.size() || (a < out.size() && out[a].first < row[b].first)) {
            res.push_back(out[a++]);
        } else if (a == out.size() || row[b].first < out[a].first) {
            Rational v = f * row[b].second;
            if (!v.is_zero()) res.emplace_back(row[b].first, v);
            ++b;
        } else {
            Rational v = out[a].second + f * row[b].second;
            if (!v.is_zero()) res.emplace_back(out[a].first, v);
            ++a, ++b;
        }
    }
    return res;
}

const Rational* find_term(const Terms& t, int col) {
    auto it = std::lower_bound(t.begin(), t.end(), col,
                               [](const std::pair<int, Rational>& p, int c) { return p.first < c; });
    if (it != t.end() && it->first == col) return &it->second;
    return nullptr;
}

// Fraction-free integer dictionary: all entries share the positive
// denominator delta. Row i encodes basic_i = (T[i][n] - sum_j T[i][j] x_j)
// / delta; row m encodes the objective the same way.
struct Dict {
    int m = 0;  // constraint rows
    int n = 0;  // nonbasic columns
    std::vector<std::vector<Int>> T;  // (m+1) x (n+1), last column = rhs
    Int delta{1};
    std::vector<int> cols;   // nonbasic variable ids
    std::vector<int> basic;  // basic variable ids per row
    long pivots = 0;

    void pivot(int r, int s) {
        static thread_local Int t1, t2;
        const Int piv = T[r][s];
        for (int i = 0; i <= m; ++i) {
            if (i == r) continue;
            auto& Ti = T[i];
            const Int tis = Ti[s];
            if (mpz_sgn(tis.get_mpz_t()) == 0) {
                if (piv == delta) continue;
                for (int j = 0; j <= n; ++j) {
                    if (j == s) continue;
                    mpz_mul(t1.get_mpz_t(), Ti[j].get_mpz_t(), piv.get_mpz_t());
                    mpz_divexact(Ti[j].get_mpz_t(), t1.get_mpz_t(), delta.get_mpz_t());
                }
            } else {
                const auto& Tr = T[r];
                for (int j = 0; j <= n; ++j) {
                    if (j == s) continue;
                    mpz_mul(t1.get_mpz_t(), Ti[j].get_mpz_t(), piv.get_mpz_t());
                    mpz_mul(t2.get_mpz_t(), tis.get_mpz_t(), Tr[j].get_mpz_t());
                    mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                    mpz_divexact(Ti[j].get_mpz_t(), t1.get_mpz_t(), delta.get_mpz_t());
                }
                mpz_neg(Ti[s].get_mpz_t(), tis.get_mpz_t());
            }
        }
        T[r][s] = delta;
        delta = piv;
        std::swap(cols[s], basic[r]);
        if (mpz_sgn(delta.get_mpz_t()) < 0) {
            mpz_neg(delta.get_mpz_t(), delta.get_mpz_t());
            for (int i = 0; i <= m; ++i)
                for (int j = 0; j <= n; ++j) mpz_neg(T[i][j].get_mpz_t(), T[i][j].get_mpz_t());
        }
        ++pivots;
    }

    // Bland's rule: entering = negative objective entry with least variable
    // id; leaving = exact ratio test with least-id tie break. Returns false
    // on unboundedness.
    bool run() {
        static thread_local Int t1, t2;
        for (;;) {
            int s = -1, sid = std::numeric_limits<int>::max();
            for (int j = 0; j < n; ++j)
                if (mpz_sgn(T[m][j].get_mpz_t()) < 0 && cols[j] < sid) { sid = cols[j]; s = j; }
            if (s < 0) return true;
            int r = -1;
            for (int i = 0; i < m; ++i) {
                if (mpz_sgn(T[i][s].get_mpz_t()) <= 0) continue;
                if (r < 0) { r = i; continue; }
                mpz_mul(t1.get_mpz_t(), T[i][n].get_mpz_t(), T[r][s].get_mpz_t());
                mpz_mul(t2.get_mpz_t(), T[r][n].get_mpz_t(), T[i][s].get_mpz_t());
                int c = mpz_cmp(t1.get_mpz_t(), t2.get_mpz_t());
                if (c < 0 || (c == 0 && basic[i] < basic[r])) r = i;
            }
            if (r < 0) return false;
            pivot(r, s);
        }
    }

    void erase_col(int s) {
        for (int i = 0; i <= m; ++i) T[i].erase(T[i].begin() + s);
        cols.erase(cols.begin() + s);
        --n;
    }

    void erase_row(int r) {
        T.erase(T.begin() + r);
        basic.erase(basic.begin() + r);
        --m;
    }
};

}  // namespace

struct LpSolver::Impl {
    int nvars = 0;

    // Original rows, sparse, for dual recovery and certificate audits.
    std::vector<Terms> ineq;
    RatVector ineq_rhs;
    std::vector<Terms> eq;
    RatVector eq_rhs;

    // Bound absorption: inequality rows of the form a*x_j <= 0 with a < 0
    // make x_j an implicitly nonnegative dictionary variable.
    std::vector<int> bound_row_of_var;  // -1 if the variable is free
    std::vector<Rational> bound_coeff;  // the a < 0 above
    std::vector<char> row_absorbed;

    // Gauss-Jordan elimination of equations. Each pivot records
    // x_var = rhs - expr . x_free, together with the combination of
    // original equation rows realizing it (for equation-dual recovery).
    struct EqPivot {
        int var;
        Terms expr;  // over free original columns
        Rational rhs;
        Terms combo;  // over original equation indices
    };
    std::vector<EqPivot> pivots;
    std::vector<int> pivot_of_var;  // -1 or index into pivots
    bool eq_infeasible = false;

    std::vector<Terms> red_ineq;  // inequality rows after substitution
    RatVector red_rhs;

    // Dictionary skeleton cached after phase one.
    bool feas = false;
    Dict base;
    long phase1_pivots = 0;

    // structural id -> (original variable, kind); kind 0 = nonneg column,
    // +1/-1 = positive/negative part of a split free variable
    std::vector<int> id_var;
    std::vector<int> id_kind;
    int nstruct = 0;
    int pseudo_id = 0;

    struct RowInfo {
        int orig_row = -1;  // inequality index the dual maps back to
        Rational factor;    // y_orig += y_dict * factor
    };
    std::vector<RowInfo> slack_info;  // indexed by id - nstruct

    mutable Dict work;

    explicit Impl(const LinearSystem& s) { build(s); }

    void build(const LinearSystem& s);
    void eliminate_equations();
    void phase_one(const std::vector<Terms>& rows, const RatVector& rhs);
    LpResult maximize(const RatVector& objective) const;
    void audit(const RatVector& objective, const LpResult& res) const;
};

void LpSolver::Impl::build(const LinearSystem& s) {
    nvars = s.var_count();
    for (const Row& r : s.inequalities()) {
        ineq.push_back(to_sparse(r.coeffs));
        ineq_rhs.push_back(r.rhs);
    }
    for (const Row& r : s.equations()) {
        eq.push_back(to_sparse(r.coeffs));
        eq_rhs.push_back(r.rhs);
    }

    bound_row_of_var.assign(nvars, -1);
    bound_coeff.assign(nvars, Rational());
    row_absorbed.assign(ineq.size(), 0);
    for (std::size_t i = 0; i < ineq.size(); ++i) {
        if (ineq[i].size() != 1 || !ineq_rhs[i].is_zero()) continue;
        int v = ineq[i][0].first;
        const Rational& a = ineq[i][0].second;
        if (a.sign() >= 0 || bound_row_of_var[v] >= 0) continue;
        bound_row_of_var[v] = static_cast<int>(i);
        bound_coeff[v] = a;
        row_absorbed[i] = 1;
    }

    eliminate_equations();
    if (eq_infeasible) return;

    // Dictionary rows: kept inequality rows, then bound rows of eliminated
    // nonnegative variables (x_p >= 0 becomes expr . x_free <= rhs).
    std::vector<Terms> rows;
    RatVector rhs;
    slack_info.clear();
    for (std::size_t i = 0; i < ineq.size(); ++i) {
        if (row_absorbed[i]) continue;
        rows.push_back(red_ineq[i]);
        rhs.push_back(red_rhs[i]);
        slack_info.push_back({static_cast<int>(i), rat(1)});
    }
    for (const auto& p : pivots) {
        if (bound_row_of_var[p.var] < 0) continue;
        rows.push_back(p.expr);
        rhs.push_back(p.rhs);
        slack_info.push_back({bound_row_of_var[p.var], -bound_coeff[p.var].inverse()});
    }

    phase_one(rows, rhs);
}

void LpSolver::Impl::eliminate_equations() {
    pivot_of_var.assign(nvars, -1);
    const int ne = static_cast<int>(eq.size());
    std::vector<Terms> w = eq;
    RatVector wr = eq_rhs;
    std::vector<Terms> combo(ne);
    for (int k = 0; k < ne; ++k) combo[k] = {{k, rat(1)}};
    std::vector<char> done(ne, 0);
    std::vector<int> pivot_col(ne, -1);

    red_ineq = ineq;
    red_rhs = ineq_rhs;

    // occurrence counts over pending equations and inequality rows, used to
    // limit fill-in when choosing pivot columns
    std::vector<long> cnt(nvars, 0);
    for (const auto& r : w)
        for (const auto& t : r) ++cnt[t.first];
    for (const auto& r : red_ineq)
        for (const auto& t : r) ++cnt[t.first];
    auto replace = [&](Terms& row, Terms nrow) {
        for (const auto& t : row) --cnt[t.first];
        row = std::move(nrow);
        for (const auto& t : row) ++cnt[t.first];
    };

    for (;;) {
        int kr = -1;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (int k = 0; k < ne; ++k) {
            if (done[k]) continue;
            if (w[k].empty()) {
                if (!wr[k].is_zero()) { eq_infeasible = true; return; }
                done[k] = 1;
                continue;
            }
            if (w[k].size() < best) { best = w[k].size(); kr = k; }
        }
        if (kr < 0) break;

        int pc = -1;
        bool pc_free = false;
        long pc_cnt = 0;
        for (const auto& t : w[kr]) {
            bool f = bound_row_of_var[t.first] < 0;
            long c = cnt[t.first];
            if (pc < 0 || (f && !pc_free) || (f == pc_free && c < pc_cnt)) {
                pc = t.first;
                pc_free = f;
                pc_cnt = c;
            }
        }

        Rational inv = find_term(w[kr], pc)->inverse();
        replace(w[kr], axpy({}, inv, w[kr]));
        wr[kr] = wr[kr] * inv;
        combo[kr] = axpy({}, inv, combo[kr]);
        done[kr] = 1;
        pivot_col[kr] = pc;

        for (int k = 0; k < ne; ++k) {
            if (k == kr) continue;
            const Rational* c = find_term(w[k], pc);
            if (!c) continue;
            Rational f = -*c;
            replace(w[k], axpy(w[k], f, w[kr]));
            wr[k] = wr[k] + f * wr[kr];
            combo[k] = axpy(combo[k], f, combo[kr]);
        }
        for (std::size_t i = 0; i < red_ineq.size(); ++i) {
            const Rational* c = find_term(red_ineq[i], pc);
            if (!c) continue;
            Rational f = -*c;
            replace(red_ineq[i], axpy(red_ineq[i], f, w[kr]));
            red_rhs[i] = red_rhs[i] + f * wr[kr];
        }
    }

    // snapshot pivots from the fully reduced rows (Jordan form: each kept
    // row has unit coefficient on its pivot column and none on the others)
    for (int k = 0; k < ne; ++k) {
        if (pivot_col[k] < 0) continue;
        EqPivot p;
        p.var = pivot_col[k];
        p.rhs = wr[k];
        p.combo = std::move(combo[k]);
        for (const auto& t : w[k])
            if (t.first != p.var) p.expr.push_back(t);
        pivot_of_var[p.var] = static_cast<int>(pivots.size());
        pivots.push_back(std::move(p));
    }
}

void LpSolver::Impl::phase_one(const std::vector<Terms>& rows, const RatVector& rhs) {
    id_var.clear();
    id_kind.clear();
    std::vector<int> col_id(nvars, -1);
    for (int v = 0; v < nvars; ++v) {
        if (pivot_of_var[v] >= 0) continue;
        col_id[v] = static_cast<int>(id_var.size());
        id_var.push_back(v);
        id_kind.push_back(bound_row_of_var[v] >= 0 ? 0 : +1);
        if (bound_row_of_var[v] < 0) {
            id_var.push_back(v);
            id_kind.push_back(-1);
        }
    }
    nstruct = static_cast<int>(id_var.size());
    const int mrows = static_cast<int>(rows.size());
    pseudo_id = nstruct + mrows;

    Dict d;
    d.m = mrows;
    d.n = nstruct;
    d.cols.resize(nstruct);
    for (int j = 0; j < nstruct; ++j) d.cols[j] = j;
    d.basic.resize(mrows);
    d.T.assign(mrows + 1, std::vector<Int>(nstruct + 1, Int(0)));

    bool need_phase1 = false;
    for (int i = 0; i < mrows; ++i) {
        d.basic[i] = nstruct + i;
        Int s(1);  // scale the row by the lcm of its denominators
        for (const auto& t : rows[i]) mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), t.second.den().get_mpz_t());
        mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), rhs[i].den().get_mpz_t());
        const Rational sr(s, Int(1));
        slack_info[i].factor = slack_info[i].factor * sr;
        for (const auto& t : rows[i]) {
            Rational v = t.second * sr;
            int j = col_id[t.first];
            d.T[i][j] = v.num();
            if (id_kind[j] != 0) d.T[i][j + 1] = -v.num();
        }
        Rational b = rhs[i] * sr;
        d.T[i][nstruct] = b.num();
        if (b.sign() < 0) need_phase1 = true;
    }

    if (need_phase1) {
        for (int i = 0; i <= mrows; ++i) d.T[i].insert(d.T[i].end() - 1, Int(0));
        for (int i = 0; i < mrows; ++i) d.T[i][nstruct] = -1;
        d.cols.push_back(pseudo_id);
        d.n = nstruct + 1;
        // phase-one objective: maximize -pseudo
        for (int j = 0; j <= d.n; ++j) d.T[mrows][j] = 0;
        d.T[mrows][nstruct] = 1;

        int r = 0;
        for (int i = 1; i < mrows; ++i) {
            int c = mpz_cmp(d.T[i][d.n].get_mpz_t(), d.T[r][d.n].get_mpz_t());
            if (c < 0 || (c == 0 && d.basic[i] < d.basic[r])) r = i;
        }
        d.pivot(r, nstruct);
        d.run();
        if (mpz_sgn(d.T[d.m][d.n].get_mpz_t()) != 0) {
            feas = false;
            phase1_pivots = d.pivots;
            return;
        }
        for (int i = 0; i < d.m; ++i) {
            if (d.basic[i] != pseudo_id) continue;
            int s = -1, sid = std::numeric_limits<int>::max();
            for (int j = 0; j < d.n; ++j)
                if (mpz_sgn(d.T[i][j].get_mpz_t()) != 0 && d.cols[j] < sid) { sid = d.cols[j]; s = j; }
            if (s < 0)
                d.erase_row(i);
            else
                d.pivot(i, s);
            break;
        }
        for (int j = 0; j < d.n; ++j) {
            if (d.cols[j] == pseudo_id) {
                d.erase_col(j);
                break;
            }
        }
    }

    feas = true;
    phase1_pivots = d.pivots;
    for (int j = 0; j <= d.n; ++j) d.T[d.m][j] = 0;
    base = std::move(d);
}

LpResult LpSolver::Impl::maximize(const RatVector& objective) const {
    if (static_cast<int>(objective.size()) != nvars)
        throw DimensionError("objective length does not match variable count");
    LpResult res;
    if (eq_infeasible || !feas) {
        res.status = LpStatus::Infeasible;
        res.pivots = phase1_pivots;
        return res;
    }

    // objective reduced over free columns plus a constant
    RatVector cred(nvars);
    for (int v = 0; v < nvars; ++v)
        if (pivot_of_var[v] < 0) cred[v] = objective[v];
    Rational c0;
    for (const auto& p : pivots) {
        const Rational& cv = objective[p.var];
        if (cv.is_zero()) continue;
        c0 += cv * p.rhs;
        for (const auto& t : p.expr) cred[t.first] -= cv * t.second;
    }
    Int lam(1);
    for (int v = 0; v < nvars; ++v)
        if (!cred[v].is_zero()) mpz_lcm(lam.get_mpz_t(), lam.get_mpz_t(), cred[v].den().get_mpz_t());
    const Rational lam_r(lam, Int(1));

    work = base;
    Dict& d = work;
    std::vector<Int> cost(nstruct, Int(0));
    for (int id = 0; id < nstruct; ++id) {
        Rational cv = cred[id_var[id]] * lam_r;
        cost[id] = id_kind[id] >= 0 ? cv.num() : Int(-cv.num());
    }
    // objective row with basic columns substituted:
    // T[m][j] = sum_i cost(B_i) T[i][j] - delta * cost(N_j)
    static thread_local Int acc;
    for (int j = 0; j <= d.n; ++j) d.T[d.m][j] = 0;
    for (int i = 0; i < d.m; ++i) {
        int id = d.basic[i];
        if (id >= nstruct || mpz_sgn(cost[id].get_mpz_t()) == 0) continue;
        for (int j = 0; j <= d.n; ++j) {
            mpz_mul(acc.get_mpz_t(), cost[id].get_mpz_t(), d.T[i][j].get_mpz_t());
            mpz_add(d.T[d.m][j].get_mpz_t(), d.T[d.m][j].get_mpz_t(), acc.get_mpz_t());
        }
    }
    for (int j = 0; j < d.n; ++j) {
        int id = d.cols[j];
        if (id >= nstruct || mpz_sgn(cost[id].get_mpz_t()) == 0) continue;
        mpz_mul(acc.get_mpz_t(), cost[id].get_mpz_t(), d.delta.get_mpz_t());
        mpz_sub(d.T[d.m][j].get_mpz_t(), d.T[d.m][j].get_mpz_t(), acc.get_mpz_t());
    }

    if (!d.run()) {
        res.status = LpStatus::Unbounded;
        res.pivots = phase1_pivots + d.pivots;
        return res;
    }

    res.status = LpStatus::Optimal;
    res.pivots = phase1_pivots + d.pivots;
    const Rational delta_r(d.delta, Int(1));
    res.value = Rational(d.T[d.m][d.n], Int(1)) / delta_r / lam_r + c0;

    // primal point: structural basic values, then eliminated substitutions
    RatVector val(nvars);
    for (int i = 0; i < d.m; ++i) {
        int id = d.basic[i];
        if (id >= nstruct) continue;
        Rational v = Rational(d.T[i][d.n], Int(1)) / delta_r;
        val[id_var[id]] += id_kind[id] >= 0 ? v : -v;
    }
    res.point = std::move(val);
    for (const auto& p : pivots) {
        Rational v = p.rhs;
        for (const auto& t : p.expr) v -= t.second * res.point[t.first];
        res.point[p.var] = v;
    }

    // duals of dictionary rows -> kept rows and eliminated bounds
    res.dual_ineq.assign(ineq.size(), Rational());
    for (int j = 0; j < d.n; ++j) {
        int id = d.cols[j];
        if (id < nstruct) continue;
        const RowInfo& ri = slack_info[id - nstruct];
        Rational y = Rational(d.T[d.m][j], Int(1)) / delta_r / lam_r * ri.factor;
        res.dual_ineq[ri.orig_row] += y;
    }
    // residual at eliminated columns -> equation duals via row combos
    RatVector resid = objective;
    for (std::size_t i = 0; i < ineq.size(); ++i) {
        const Rational& y = res.dual_ineq[i];
        if (y.is_zero()) continue;
        for (const auto& t : ineq[i]) resid[t.first] -= y * t.second;
    }
    res.dual_eq.assign(eq.size(), Rational());
    for (const auto& p : pivots) {
        const Rational& nu = resid[p.var];
        if (nu.is_zero()) continue;
        for (const auto& t : p.combo) res.dual_eq[t.first] += nu * t.second;
    }
    // absorbed sign rows of surviving columns close the remaining gap
    RatVector ceq(nvars);
    for (std::size_t k = 0; k < eq.size(); ++k) {
        const Rational& mu = res.dual_eq[k];
        if (mu.is_zero()) continue;
        for (const auto& t : eq[k]) ceq[t.first] += mu * t.second;
    }
    for (int v = 0; v < nvars; ++v) {
        int i = bound_row_of_var[v];
        if (i < 0 || pivot_of_var[v] >= 0) continue;
        Rational y = (resid[v] - ceq[v]) / bound_coeff[v];
        if (!y.is_zero()) res.dual_ineq[i] += y;
    }

    audit(objective, res);
    return res;
}

void LpSolver::Impl::audit(const RatVector& objective, const LpResult& res) const {
    Rational cv;
    for (int v = 0; v < nvars; ++v) cv += objective[v] * res.point[v];
    bool ok = cv == res.value;
    for (std::size_t i = 0; ok && i < ineq.size(); ++i) {
        Rational lhs;
        for (const auto& t : ineq[i]) lhs += t.second * res.point[t.first];
        if (lhs > ineq_rhs[i]) ok = false;
    }
    for (std::size_t k = 0; ok && k < eq.size(); ++k) {
        Rational lhs;
        for (const auto& t : eq[k]) lhs += t.second * res.point[t.first];
        if (lhs != eq_rhs[k]) ok = false;
    }
    RatVector at(nvars);
    Rational yb;
    for (std::size_t i = 0; ok && i < ineq.size(); ++i) {
        const Rational& y = res.dual_ineq[i];
        if (y.sign() < 0) { ok = false; break; }
        if (y.is_zero()) continue;
        for (const auto& t : ineq[i]) at[t.first] += y * t.second;
        yb += y * ineq_rhs[i];
    }
    for (std::size_t k = 0; ok && k < eq.size(); ++k) {
        const Rational& mu = res.dual_eq[k];
        if (mu.is_zero()) continue;
        for (const auto& t : eq[k]) at[t.first] += mu * t.second;
        yb += mu * eq_rhs[k];
    }
    for (int v = 0; ok && v < nvars; ++v)
        if (at[v] != objective[v]) ok = false;
    if (ok && yb != res.value) ok = false;
    if (!ok) throw std::logic_error("lp: exact optimality certificate failed to validate");
}

LpSolver::LpSolver(const LinearSystem& s) : impl_(std::make_unique<Impl>(s)) {}
LpSolver::~LpSolver() = default;
LpSolver::LpSolver(LpSolver&&) noexcept = default;
LpSolver& LpSolver::operator=(LpSolver&&) noexcept = default;

bool LpSolver::feasible() const { return !impl_->eq_infeasible && impl_->feas; }

LpResult LpSolver::maximize(const RatVector& objective) const { return impl_->maximize(objective); }

LpResult solve_max(const LinearSystem& s, const RatVector& objective) {
    return LpSolver(s).maximize(objective);
}

bool is_feasible(const LinearSystem& s) { return LpSolver(s).feasible(); }

LpResult solve_max_projected(const ExtendedFormulation& e, const RatVector& proj_objective) {
    if (proj_objective.size() != e.projection.size())
        throw DimensionError("projected objective length does not match projection");
    RatVector full(e.system.var_count());
    auto idx = e.projection_indices();
    for (std::size_t j = 0; j < idx.size(); ++j) full[idx[j]] = proj_objective[j];
    return LpSolver(e.system).maximize(full);
}

}  // namespace polyef
