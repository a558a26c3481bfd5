#pragma once

#include <string>
#include <vector>

#include "ssmthom/bases.hpp"
#include "ssmthom/param_poly.hpp"
#include "ssmthom/solver.hpp"

namespace ssmthom {

// Truncated class in H*(P^m): coefficients of h^0..h^m, arithmetic modulo
// h^(m+1). Coefficients may involve formal parameters (symbolic map degree).
class ProjectiveClass {
public:
    explicit ProjectiveClass(int m);
    static ProjectiveClass one(int m);

    int dim() const { return m_; }
    const ParamPoly& coeff(int k) const { return coef_[k]; }
    void set_coeff(int k, const ParamPoly& c) { coef_[k] = c; }

    bool is_zero() const;
    int lowest_degree() const;  // -1 when zero

    ProjectiveClass operator+(const ProjectiveClass& o) const;
    ProjectiveClass operator-(const ProjectiveClass& o) const;
    ProjectiveClass operator*(const ProjectiveClass& o) const;
    ProjectiveClass& operator+=(const ProjectiveClass& o) { return *this = *this + o; }
    ProjectiveClass scaled(const Rational& c) const;
    ProjectiveClass scaled(const ParamPoly& c) const;
    bool operator==(const ProjectiveClass& o) const = default;

    // Inverse for unit constant term, modulo h^(m+1).
    ProjectiveClass inverse() const;

    std::string str() const;  // "(7*d - 6)h + 21*d^2...h^2"

private:
    int m_;
    std::vector<ParamPoly> coef_;
};

// c_1(F)..c_m(F) for a degree-`deg` map P^m -> P^n, from the expansion of
// (1 + deg*h)^(n+1) / (1+h)^(m+1).
std::vector<ProjectiveClass> chern_of_map(int m, int n, const ParamPoly& deg);

// Evaluation T(c(F)) in H*(P^m); requires T truncated to degree >= m.
ProjectiveClass ssm_of_locus(const SsmPolynomial& T, const std::vector<ProjectiveClass>& chern,
                             int m);

// Multiplication by c(TP^m) = (1+h)^(m+1).
ProjectiveClass csm_from_ssm(const ProjectiveClass& s);

// (t p(-t-1) + p(0)) / (t+1); exact division, an involution.
// Polynomials in t are coefficient vectors, index = power of t.
std::vector<ParamPoly> aluffi_involution(const std::vector<ParamPoly>& p);

struct EulerProfile {
    std::vector<ParamPoly> chi;  // chi(t), index = power of t
    ParamPoly degree;            // fundamental-class coefficient
    int ambient = 0;

    ParamPoly euler_characteristic() const {  // chi(0)
        return chi.empty() ? ParamPoly(0) : chi[0];
    }
};

// gamma(t) = sum a_i t^(N-i) from the CSM class, pushed through the
// involution; reports the locus degree and chi.
EulerProfile euler_profile(const ProjectiveClass& csm);

enum class HierarchyVerdict { below, not_below, inconclusive };

struct HierarchyResult {
    HierarchyVerdict verdict = HierarchyVerdict::inconclusive;
    TorusPolynomial witness{0, 0};  // psi_lower(Tp(upper))
    std::string detail;
};

// Whether `lower` lies in the closure of `upper`: nonzero restriction of the
// Thom polynomial proves adjacency; a zero restriction refutes it under the
// positivity condition on lower's source weights.
HierarchyResult hierarchy_test(const std::string& lower, const std::string& upper, int ell,
                               int d, const Catalog& cat);

// Exact feasibility of a linear functional that is strictly positive on all
// the given weights (Fourier-Motzkin elimination).
bool strictly_positive_functional_exists(const std::vector<WeightVector>& weights);

struct SumCheckReport {
    bool chern_ok = false;
    bool tilde_checked = false;
    bool tilde_ok = false;
    int entries = 0;
    std::string detail;
    bool ok() const { return chern_ok && (!tilde_checked || tilde_ok); }
};

// Additivity check: the SSM-Thom polynomials of all entries of codimension
// <= d sum to the constant series 1; in the tilde basis every coefficient of
// the sum equals 1.
SumCheckReport sum_check(const Catalog& cat, int d, bool include_tilde = true);

}  // namespace ssmthom
