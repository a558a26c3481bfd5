#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ssmthom {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator), so equality and ordering are structural.
using Rational = mpq_class;

inline Rational rat(long n) { return Rational(n); }

inline Rational rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "-3", "7/2", "007/21". Throws on malformed input.
Rational rat_from_string(const std::string& s);

// Canonical rendering: "3", "-1/2".
std::string rat_to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational rat_pow(const Rational& base, unsigned long exp);

// Exact binomial coefficient; zero for k < 0 or k > n.
Rational binomial(long n, long k);

}  // namespace ssmthom
