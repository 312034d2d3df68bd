#include "polyef/rational.hpp"

#include <cctype>
#include <ostream>

namespace polyef {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw InputError("bad rational literal: '" + text + "'");
    }
    // mpz rejects an explicit leading '+'
    auto strip_plus = [](std::string part) {
        if (part.size() > 1 && part[0] == '+') part.erase(0, 1);
        return part;
    };
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(strip_plus(text)), Int(1));
        Int p(strip_plus(text.substr(0, slash)));
        Int q(strip_plus(text.substr(slash + 1)));
        if (q == 0) throw ConstructionError("rational with zero denominator: '" + text + "'");
        return Rational(p, q);
    } catch (const std::invalid_argument&) {
        throw InputError("bad rational literal: '" + text + "'");
    }
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

Rational dot(const RatVector& u, const RatVector& v) {
    if (u.size() != v.size())
        throw DimensionError("dot of vectors with lengths " + std::to_string(u.size()) +
                             " and " + std::to_string(v.size()));
    Rational acc;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero() || v[i].is_zero()) continue;
        acc += u[i] * v[i];
    }
    return acc;
}

}  // namespace polyef
