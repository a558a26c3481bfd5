#include "ssmthom/rational.hpp"

namespace ssmthom {

Rational rat_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rational& q) { return q.get_str(); }

Rational rat_pow(const Rational& base, unsigned long exp) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    return out;
}

Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    Rational out;
    mpz_bin_uiui(out.get_num_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

}  // namespace ssmthom
