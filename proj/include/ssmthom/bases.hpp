#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ssmthom/chern_series.hpp"
#include "ssmthom/partition.hpp"

namespace ssmthom {

enum class Basis { chern, schur, schur_tilde };

// Coefficients of a series in a chosen basis, indexed by partition.
struct BasisExpansion {
    Basis basis = Basis::chern;
    int trunc = 0;
    std::map<Partition, Rational> coeffs;

    Rational coeff(const Partition& p) const {
        auto it = coeffs.find(p);
        return it == coeffs.end() ? Rational(0) : it->second;
    }
    bool operator==(const BasisExpansion& o) const = default;
};

// Straightens an integer vector for the determinant det(c_{mu_i + j - i}):
// returns nullopt when the determinant vanishes (repeated rows or a negative
// row), otherwise the sign and the sorted partition.
std::optional<std::pair<int, Partition>> straighten_jt(const std::vector<int>& mu);

// Chern-monomial expansion of the Schur polynomial s_lambda (memoized).
const std::map<Partition, Rational>& schur_in_chern(const Partition& lambda);

// det(c_{mu_i + j - i}) for an arbitrary integer vector, truncated at d.
// Convention: c_0 = 1 and c_k = 0 for k < 0.
ChernSeries jacobi_trudi(const std::vector<int>& mu, int d);

// Exact change of basis into Schur coordinates, degree by degree.
BasisExpansion to_schur(const ChernSeries& a);

// Inverse of to_schur: sum of coeff * s_lambda as a ChernSeries.
ChernSeries from_schur(const BasisExpansion& e);

// Schur coordinates of the tilde function s~_lambda up to degree d, computed
// with `vars` expansion variables.
std::map<Partition, Rational> schur_tilde_coeffs(const Partition& lambda, int d, int vars);

// s~_lambda as a ChernSeries up to degree d. Uses max(d, len(lambda))
// expansion variables and verifies the result is stable under one more
// variable; throws on stabilization failure.
ChernSeries schur_tilde(const Partition& lambda, int d);

// Greedy triangular peeling into the tilde basis.
BasisExpansion to_schur_tilde(const ChernSeries& a, int d);

// Reconstruction sum coeff * s~_lambda as a ChernSeries.
ChernSeries from_schur_tilde(const BasisExpansion& e, int d);

// True when every Schur coefficient of the (typically homogeneous) input is
// nonnegative and at least one is positive.
bool is_schur_positive(const ChernSeries& a);

}  // namespace ssmthom
