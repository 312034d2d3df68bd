#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "polyef/errors.hpp"

namespace polyef {

using Int = mpz_class;

// Exact rational scalar. Invariant: denominator > 0, gcd(|num|, den) = 1,
// zero is 0/1. The only scalar used in geometry and LP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Int& n) : v_(n) {}

    Rational(const Int& p, const Int& q) {
        if (q == 0) throw ConstructionError("rational with zero denominator");
        v_ = mpq_class(p, q);
        v_.canonicalize();
    }
    Rational(long p, long q) : Rational(Int(p), Int(q)) {}

    // Parses "p" or "p/q" with optional sign; canonicalizes.
    static Rational parse(const std::string& text);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // "p/q", just "p" when q = 1. Bit-exact round trip with parse().
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational inverse() const { return Rational(den(), num()); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ConstructionError("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

// Spec-style constructor: rat(p, q) in canonical reduced form.
inline Rational rat(long p, long q = 1) { return Rational(p, q); }
inline Rational rat(const Int& p, const Int& q) { return Rational(p, q); }

using RatVector = std::vector<Rational>;

// Exact inner product; throws DimensionError on length mismatch.
Rational dot(const RatVector& u, const RatVector& v);

}  // namespace polyef
