#pragma once

#include <map>
#include <string>

#include "ssmthom/rational.hpp"

namespace ssmthom {

// Polynomial in named formal parameters with rational coefficients. Used for
// identities that hold symbolically, e.g. in a map degree "d". A ParamPoly
// with no parameters behaves like a plain scalar.
class ParamPoly {
public:
    // parameter monomial: name -> positive exponent
    using Monomial = std::map<std::string, int>;

    ParamPoly() = default;
    ParamPoly(const Rational& c);  // NOLINT: implicit scalar promotion intended
    ParamPoly(long c) : ParamPoly(Rational(c)) {}
    static ParamPoly variable(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (zero if absent); the full value when is_constant().
    Rational constant_value() const;

    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator-() const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
    ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }

    ParamPoly pow(int e) const;

    // Substitutes a value for one parameter; other parameters stay formal.
    ParamPoly evaluate(const std::string& name, const Rational& value) const;

    int degree() const;  // total degree, 0 for the zero polynomial

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    // Canonical text: descending total degree, lexicographic names within a
    // degree; "*" between factors, e.g. "21*d^2 - 42*d + 21".
    std::string str() const;

private:
    std::map<Monomial, Rational> terms_;  // no zero coefficients stored
    void add_term(const Monomial& m, const Rational& c);
};

}  // namespace ssmthom
