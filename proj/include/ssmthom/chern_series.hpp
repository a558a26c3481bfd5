#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssmthom/partition.hpp"
#include "ssmthom/rational.hpp"
#include "ssmthom/torus_poly.hpp"

namespace ssmthom {

// Truncated graded series in Chern variables c_1, c_2, ... with deg(c_i) = i,
// exact rational coefficients. Monomials are indexed by partitions
// (c_{l1} c_{l2} ...); nothing of weight above the truncation is stored.
class ChernSeries {
public:
    explicit ChernSeries(int trunc);

    static ChernSeries zero(int trunc) { return ChernSeries(trunc); }
    static ChernSeries one(int trunc);
    static ChernSeries variable(int k, int trunc);  // c_k
    static ChernSeries monomial(const Partition& p, const Rational& c, int trunc);

    int trunc() const { return trunc_; }
    Rational coeff(const Partition& p) const;  // zero for absent monomials
    void set_coeff(const Partition& p, const Rational& c);
    const std::map<Partition, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int lowest_degree() const;  // -1 when zero
    bool operator==(const ChernSeries& o) const;

    ChernSeries operator+(const ChernSeries& o) const;
    ChernSeries operator-(const ChernSeries& o) const;
    ChernSeries operator-() const;
    // Product truncated at min(trunc, o.trunc).
    ChernSeries operator*(const ChernSeries& o) const;
    ChernSeries& operator+=(const ChernSeries& o) { return *this = *this + o; }
    ChernSeries& operator-=(const ChernSeries& o) { return *this = *this - o; }
    ChernSeries& operator*=(const ChernSeries& o) { return *this = *this * o; }
    ChernSeries scaled(const Rational& c) const;

    ChernSeries homogeneous_part(int k) const;
    ChernSeries truncated(int d) const;

    // Multiplicative inverse up to degree d; requires constant term 1.
    ChernSeries inverse(int d) const;

private:
    int trunc_;
    std::map<Partition, Rational> terms_;  // nonzero coefficients only
};

inline ChernSeries series_mul(const ChernSeries& a, const ChernSeries& b, int d) {
    return (a * b).truncated(d);
}

inline ChernSeries series_invert(const ChernSeries& a, int d) { return a.inverse(d); }

inline ChernSeries homogeneous_part(const ChernSeries& a, int k) {
    return a.homogeneous_part(k);
}

// Ring homomorphism evaluation: c_k -> images[k-1]. The target ring must
// provide +, *, and scaling by Rational; `unit` seeds products and carries the
// target's truncation. Throws when a needed image is missing.
template <class Ring>
Ring substitute_series(const ChernSeries& s, const std::vector<Ring>& images,
                       const Ring& unit) {
    std::map<Partition, Ring> products;
    products.emplace(Partition{}, unit);
    Ring acc = unit.scaled(Rational(0));
    for (const auto& [p, c] : s.terms()) {
        // build prefix products bottom-up; map order guarantees drop_last is done
        std::vector<Partition> chain;
        Partition q = p;
        while (products.find(q) == products.end()) {
            chain.push_back(q);
            q = q.drop_last();
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            int k = it->parts().back();
            if (k > static_cast<int>(images.size()))
                throw std::invalid_argument("missing image for c_" + std::to_string(k));
            products.emplace(*it, products.at(it->drop_last()) * images[k - 1]);
        }
        acc += products.at(p).scaled(c);
    }
    return acc;
}

// Substitution c -> prod_j (1+b_j) / prod_i (1+a_i) with m a-roots and m+l
// b-roots, truncated at degree d. The result lives in a rank-(2m+l) torus
// polynomial whose first m variables are the a-roots.
TorusPolynomial split_to_roots(const ChernSeries& s, int m, int ell, int d);

}  // namespace ssmthom
