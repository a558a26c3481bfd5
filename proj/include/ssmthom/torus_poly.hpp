#pragma once

#include <string>
#include <vector>

#include "ssmthom/rational.hpp"

namespace ssmthom {

// Character-lattice element of a rank-r torus: integer weight w acting as the
// linear form w[0]*a_1 + ... + w[r-1]*a_r.
using WeightVector = std::vector<int>;

bool is_zero_weight(const WeightVector& w);

// Exponent vectors of fixed degree in r variables, lexicographically
// descending (a^k first). Cached; do not mutate the returned list.
const std::vector<std::vector<int>>& torus_monomials(int rank, int degree);

// Position of an exponent vector in torus_monomials(rank, sum).
int torus_monomial_index(const std::vector<int>& expvec);

// Graded truncated polynomial in torus variables a_1..a_r, deg(a_j) = 1,
// exact rational coefficients, dense per degree. Rank 0 models plain scalars
// concentrated in degree 0.
class TorusPolynomial {
public:
    TorusPolynomial(int rank, int trunc);

    static TorusPolynomial constant(int rank, int trunc, const Rational& c);
    static TorusPolynomial one(int rank, int trunc) { return constant(rank, trunc, 1); }
    // The linear form of a weight vector.
    static TorusPolynomial linear(const WeightVector& w, int trunc);

    int rank() const { return rank_; }
    int trunc() const { return trunc_; }

    Rational coeff(const std::vector<int>& expvec) const;
    void set_coeff(const std::vector<int>& expvec, const Rational& c);
    // Dense coefficients of the degree-k slice, in torus_monomials order.
    const std::vector<Rational>& slice(int k) const { return deg_[k]; }

    bool is_zero() const;
    int lowest_degree() const;  // -1 when zero

    TorusPolynomial operator+(const TorusPolynomial& o) const;
    TorusPolynomial operator-(const TorusPolynomial& o) const;
    TorusPolynomial operator-() const;
    // Product truncated at min(trunc, o.trunc).
    TorusPolynomial operator*(const TorusPolynomial& o) const;
    TorusPolynomial& operator+=(const TorusPolynomial& o) { return *this = *this + o; }
    TorusPolynomial& operator*=(const TorusPolynomial& o) { return *this = *this * o; }
    TorusPolynomial scaled(const Rational& c) const;
    bool operator==(const TorusPolynomial& o) const;

    TorusPolynomial homogeneous_part(int k) const;
    TorusPolynomial truncated(int d) const;
    // Same values with truncation degree exactly d (zero-pads upward).
    TorusPolynomial with_trunc(int d) const;

    // Multiplicative inverse up to the truncation degree. Requires unit
    // constant term; throws "not invertible" otherwise.
    TorusPolynomial inverse() const;

    // "2a^2 - 6a^3" with variables a, b, c, ... (a1, a2, ... above rank 26).
    std::string str() const;

private:
    int rank_;
    int trunc_;
    std::vector<std::vector<Rational>> deg_;  // deg_[k]: dense slice of degree k
    void check_compatible(const TorusPolynomial& o) const;
};

// Product of (1 + <w,a>) over the weights, truncated at degree d.
TorusPolynomial total_chern(const std::vector<WeightVector>& weights, int rank, int d);

// Product of the linear forms <w,a>; homogeneous of degree = #weights.
// Throws "zero Euler class" when any weight vector is zero.
TorusPolynomial euler_class(const std::vector<WeightVector>& weights, int rank);

// Images of c_1..c_d under 1 + c_1 + ... -> c(target)/c(source); entry k-1 is
// homogeneous of degree k.
std::vector<TorusPolynomial> chern_images(const std::vector<WeightVector>& source,
                                          const std::vector<WeightVector>& target,
                                          int rank, int d);

}  // namespace ssmthom
