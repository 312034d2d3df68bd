#include "polyef/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "polyef/errors.hpp"

namespace polyef {

namespace {

using nlohmann::json;

[[noreturn]] void fail_at(const std::string& name, int line, const std::string& msg) {
    throw InputError(name + ":" + std::to_string(line) + ": " + msg);
}

// Strips '#' comments and surrounding whitespace; empty result means skip.
std::string content_of(const std::string& raw) {
    std::string line = raw.substr(0, raw.find('#'));
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = line.find_last_not_of(" \t\r\n");
    return line.substr(first, last - first + 1);
}

long parse_int(const std::string& tok, const std::string& name, int line) {
    try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) fail_at(name, line, "not an integer: '" + tok + "'");
        return v;
    } catch (const std::logic_error&) {
        fail_at(name, line, "not an integer: '" + tok + "'");
    }
}

Rational rational_of(const json& v, const std::string& where) {
    if (v.is_number_integer()) return rat(v.get<long>());
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const Error& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    throw InputError(where + ": expected a rational string or integer");
}

json row_to_json(const LinearSystem& s, const Row& row) {
    json coeffs = json::object();
    for (int j = 0; j < s.var_count(); ++j)
        if (row.coeffs[j] != rat(0)) coeffs[s.var_name(j)] = row.coeffs[j].str();
    return json{{"coeffs", std::move(coeffs)}, {"rhs", row.rhs.str()}};
}

void append_term(std::string& out, const Rational& c, const std::string& var, bool first) {
    const bool negative = c < rat(0);
    const Rational mag = negative ? -c : c;
    if (first) {
        out += negative ? "-" : "";
    } else {
        out += negative ? " - " : " + ";
    }
    if (mag != rat(1)) out += mag.str() + " ";
    out += var;
}

std::string row_to_lp(const LinearSystem& s, const Row& row, const char* rel) {
    std::string out;
    bool first = true;
    for (int j = 0; j < s.var_count(); ++j) {
        if (row.coeffs[j] == rat(0)) continue;
        append_term(out, row.coeffs[j], s.var_name(j), first);
        first = false;
    }
    if (first) out += "0";
    out += std::string(" ") + rel + " " + row.rhs.str();
    return out;
}

}  // namespace

Graph parse_graph(std::istream& in, const std::string& name) {
    std::string raw;
    int lineno = 0;
    int n = -1;
    long want = 0;
    std::vector<std::pair<int, int>> pairs;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = content_of(raw);
        if (line.empty()) continue;
        std::istringstream toks(line);
        std::string a, b, extra;
        toks >> a >> b;
        if (b.empty()) fail_at(name, lineno, "expected two integers");
        if (toks >> extra) fail_at(name, lineno, "trailing token '" + extra + "'");
        if (n < 0) {
            const long nn = parse_int(a, name, lineno);
            want = parse_int(b, name, lineno);
            if (nn < 0 || want < 0) fail_at(name, lineno, "negative count in header");
            n = static_cast<int>(nn);
            continue;
        }
        if (static_cast<long>(pairs.size()) == want)
            fail_at(name, lineno, "more than the " + std::to_string(want) +
                                      " edges announced in the header");
        const long u = parse_int(a, name, lineno);
        const long v = parse_int(b, name, lineno);
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail_at(name, lineno, "node id out of range 0.." + std::to_string(n - 1));
        if (u == v) fail_at(name, lineno, "loops are not allowed");
        pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) fail_at(name, lineno + 1, "missing 'n m' header");
    if (static_cast<long>(pairs.size()) != want)
        fail_at(name, lineno + 1,
                "expected " + std::to_string(want) + " edges, found " +
                    std::to_string(pairs.size()));
    return Graph::from_pairs(n, pairs);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file '" + path + "'");
    return parse_graph(in, path);
}

std::string system_to_json(const ExtendedFormulation& e, int indent) {
    json j;
    j["variables"] = e.system.variables();
    json ineqs = json::array();
    for (const auto& row : e.system.inequalities()) ineqs.push_back(row_to_json(e.system, row));
    j["inequalities"] = std::move(ineqs);
    json eqs = json::array();
    for (const auto& row : e.system.equations()) eqs.push_back(row_to_json(e.system, row));
    j["equations"] = std::move(eqs);
    j["projection"] = e.projection;
    return j.dump(indent) + "\n";
}

ExtendedFormulation system_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("system json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("variables") || !j.contains("inequalities") ||
        !j.contains("equations") || !j.contains("projection"))
        throw InputError(
            "system json needs variables, inequalities, equations and projection");
    LinearSystem s(j.at("variables").get<std::vector<std::string>>());
    auto ingest = [&](const json& rows, const char* what, bool equation) {
        if (!rows.is_array()) throw InputError(std::string("system json: ") + what);
        for (const auto& row : rows) {
            SparseTerms terms;
            for (const auto& [var, val] : row.at("coeffs").items())
                terms.emplace_back(var, rational_of(val, "coefficient of " + var));
            const Rational rhs = rational_of(row.at("rhs"), "rhs");
            equation ? s.add_eq(terms, rhs) : s.add_ineq(terms, rhs);
        }
    };
    try {
        ingest(j.at("inequalities"), "inequalities must be an array", false);
        ingest(j.at("equations"), "equations must be an array", true);
        ExtendedFormulation e{std::move(s), j.at("projection").get<std::vector<std::string>>()};
        e.validate();
        return e;
    } catch (const json::exception& e) {
        throw InputError(std::string("system json: ") + e.what());
    }
}

std::string system_to_lp_text(const ExtendedFormulation& e) {
    std::ostringstream out;
    out << "\\ " << e.system.var_count() << " variables, " << e.system.ineq_count()
        << " inequalities, " << e.system.eq_count() << " equations\n";
    out << "\\ projection:";
    for (const auto& v : e.projection) out << " " << v;
    out << "\nsubject to\n";
    const auto& ineqs = e.system.inequalities();
    for (std::size_t i = 0; i < ineqs.size(); ++i)
        out << " i" << i << ": " << row_to_lp(e.system, ineqs[i], "<=") << "\n";
    const auto& eqs = e.system.equations();
    for (std::size_t i = 0; i < eqs.size(); ++i)
        out << " e" << i << ": " << row_to_lp(e.system, eqs[i], "=") << "\n";
    out << "end\n";
    return out.str();
}

RatVector parse_objective(std::istream& in, const std::vector<std::string>& vars,
                          const std::string& name) {
    RatVector c(vars.size(), rat(0));
    std::vector<bool> seen(vars.size(), false);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = content_of(raw);
        if (line.empty()) continue;
        std::istringstream toks(line);
        std::string var, val, extra;
        toks >> var >> val;
        if (val.empty()) fail_at(name, lineno, "expected 'variable value'");
        if (toks >> extra) fail_at(name, lineno, "trailing token '" + extra + "'");
        const auto it = std::find(vars.begin(), vars.end(), var);
        if (it == vars.end()) fail_at(name, lineno, "unknown variable '" + var + "'");
        const auto idx = static_cast<std::size_t>(it - vars.begin());
        if (seen[idx]) fail_at(name, lineno, "variable '" + var + "' assigned twice");
        seen[idx] = true;
        try {
            c[idx] = Rational::parse(val);
        } catch (const Error& e) {
            fail_at(name, lineno, e.what());
        }
    }
    return c;
}

RatVector load_objective_file(const std::string& path, const std::vector<std::string>& vars) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open objective file '" + path + "'");
    return parse_objective(in, vars, path);
}

CountMatroidSpec matroid_spec_from_json(const std::string& text, const Graph& g) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("matroid spec json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("ell") || !j.contains("m"))
        throw InputError("matroid spec json needs fields 'ell' and 'm'");
    if (!j.at("ell").is_number_integer())
        throw InputError("matroid spec json: 'ell' must be an integer");
    const long ell = j.at("ell").get<long>();
    std::vector<long> m;
    const json& jm = j.at("m");
    if (jm.is_number_integer()) {
        m.assign(g.node_count(), jm.get<long>());
    } else if (jm.is_object()) {
        m.assign(g.node_count(), 0);
        std::vector<bool> seen(g.node_count(), false);
        for (const auto& [node, val] : jm.items()) {
            const int idx = g.node_index(node);  // InputError if unknown
            if (!val.is_number_integer())
                throw InputError("matroid spec json: m['" + node + "'] must be an integer");
            m[idx] = val.get<long>();
            seen[idx] = true;
        }
        for (int v = 0; v < g.node_count(); ++v)
            if (!seen[v])
                throw InputError("matroid spec json: missing node '" + g.node_label(v) + "'");
    } else {
        throw InputError("matroid spec json: 'm' must be an integer or a node map");
    }
    return make_count_matroid(g, m, ell);
}

CountMatroidSpec load_matroid_spec_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open matroid spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return matroid_spec_from_json(buf.str(), g);
}

std::string report_to_json(const VerificationReport& r, int indent) {
    json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["summary"] = {{"passed", r.passed_count()}, {"failed", r.failed_count()}};
    json checks = json::array();
    for (const auto& c : r.checks) {
        json jc = {{"description", c.description}, {"status", c.passed ? "pass" : "fail"}};
        if (!c.witness.empty()) jc["witness"] = c.witness;
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    return j.dump(indent) + "\n";
}

std::string report_to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "suite " << r.suite << " (seed " << r.seed << "): " << r.passed_count()
        << " passed, " << r.failed_count() << " failed\n";
    for (const auto& c : r.checks) {
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.description << "\n";
        if (!c.witness.empty()) out << "       witness: " << c.witness << "\n";
    }
    return out.str();
}

}  // namespace polyef
