#include "ssmthom/apps.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssmthom {

ProjectiveClass::ProjectiveClass(int m) : m_(m), coef_(m + 1) {
    if (m < 0) throw std::invalid_argument("negative ambient dimension");
}

ProjectiveClass ProjectiveClass::one(int m) {
    ProjectiveClass p(m);
    p.coef_[0] = ParamPoly(1);
    return p;
}

bool ProjectiveClass::is_zero() const { return lowest_degree() == -1; }

int ProjectiveClass::lowest_degree() const {
    for (int k = 0; k <= m_; ++k)
        if (!coef_[k].is_zero()) return k;
    return -1;
}

ProjectiveClass ProjectiveClass::operator+(const ProjectiveClass& o) const {
    if (m_ != o.m_) throw std::invalid_argument("ambient dimension mismatch");
    ProjectiveClass out(m_);
    for (int k = 0; k <= m_; ++k) out.coef_[k] = coef_[k] + o.coef_[k];
    return out;
}

ProjectiveClass ProjectiveClass::operator-(const ProjectiveClass& o) const {
    if (m_ != o.m_) throw std::invalid_argument("ambient dimension mismatch");
    ProjectiveClass out(m_);
    for (int k = 0; k <= m_; ++k) out.coef_[k] = coef_[k] - o.coef_[k];
    return out;
}

ProjectiveClass ProjectiveClass::operator*(const ProjectiveClass& o) const {
    if (m_ != o.m_) throw std::invalid_argument("ambient dimension mismatch");
    ProjectiveClass out(m_);
    for (int i = 0; i <= m_; ++i) {
        if (coef_[i].is_zero()) continue;
        for (int j = 0; i + j <= m_; ++j) {
            if (o.coef_[j].is_zero()) continue;
            out.coef_[i + j] += coef_[i] * o.coef_[j];
        }
    }
    return out;
}

ProjectiveClass ProjectiveClass::scaled(const Rational& c) const {
    return scaled(ParamPoly(c));
}

ProjectiveClass ProjectiveClass::scaled(const ParamPoly& c) const {
    ProjectiveClass out(m_);
    for (int k = 0; k <= m_; ++k) out.coef_[k] = coef_[k] * c;
    return out;
}

ProjectiveClass ProjectiveClass::inverse() const {
    if (!(coef_[0].is_constant() && coef_[0].constant_value() == 1))
        throw std::domain_error("not invertible");
    ProjectiveClass inv(m_);
    inv.coef_[0] = ParamPoly(1);
    for (int k = 1; k <= m_; ++k) {
        ParamPoly acc;
        for (int j = 1; j <= k; ++j) acc += coef_[j] * inv.coef_[k - j];
        inv.coef_[k] = -acc;
    }
    return inv;
}

std::string ProjectiveClass::str() const {
    std::string out;
    for (int k = 0; k <= m_; ++k) {
        if (coef_[k].is_zero()) continue;
        std::string body = "(" + coef_[k].str() + ")";
        if (k > 0) body += "h" + (k > 1 ? "^" + std::to_string(k) : "");
        out += (out.empty() ? "" : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

std::vector<ProjectiveClass> chern_of_map(int m, int n, const ParamPoly& deg) {
    if (m < 1 || n < m) throw std::invalid_argument("need n >= m >= 1");
    ProjectiveClass num = ProjectiveClass::one(m);
    ProjectiveClass lin(m);
    lin.set_coeff(0, ParamPoly(1));
    lin.set_coeff(1, deg);
    for (int i = 0; i < n + 1; ++i) num = num * lin;
    ProjectiveClass hyper(m);
    hyper.set_coeff(0, ParamPoly(1));
    hyper.set_coeff(1, ParamPoly(1));
    ProjectiveClass den = ProjectiveClass::one(m);
    for (int i = 0; i < m + 1; ++i) den = den * hyper;
    ProjectiveClass cF = num * den.inverse();
    std::vector<ProjectiveClass> out;
    for (int k = 1; k <= m; ++k) {
        ProjectiveClass ck(m);
        ck.set_coeff(k, cF.coeff(k));
        out.push_back(std::move(ck));
    }
    return out;
}

ProjectiveClass ssm_of_locus(const SsmPolynomial& T, const std::vector<ProjectiveClass>& chern,
                             int m) {
    if (T.degree < m)
        throw std::invalid_argument("SSM-Thom polynomial truncated below the ambient dimension");
    // c_k(F) vanishes in H*(P^m) for k > m
    std::vector<ProjectiveClass> images = chern;
    while (static_cast<int>(images.size()) < T.degree) images.emplace_back(m);
    return substitute_series(T.series, images, ProjectiveClass::one(m));
}

ProjectiveClass csm_from_ssm(const ProjectiveClass& s) {
    int m = s.dim();
    ProjectiveClass hyper(m);
    hyper.set_coeff(0, ParamPoly(1));
    hyper.set_coeff(1, ParamPoly(1));
    ProjectiveClass out = s;
    for (int i = 0; i < m + 1; ++i) out = out * hyper;
    return out;
}

std::vector<ParamPoly> aluffi_involution(const std::vector<ParamPoly>& p) {
    // q(t) = t*p(-t-1) + p(0), then exact division by (t+1)
    int n = static_cast<int>(p.size());
    std::vector<ParamPoly> q(n + 1);
    // p(-t-1) = sum p_i (-t-1)^i; (-t-1)^i expanded by binomials
    for (int i = 0; i < n; ++i) {
        if (p[i].is_zero()) continue;
        for (int j = 0; j <= i; ++j) {
            // coefficient of t^j in (-t-1)^i is (-1)^i * C(i, j)
            Rational b = binomial(i, j);
            if (i % 2 == 1) b = -b;
            q[j + 1] += p[i] * ParamPoly(b);  // shifted by the leading t factor
        }
    }
    if (n > 0) q[0] += p[0];
    // synthetic division by (t + 1): b_{k-1} = q_k - b_k
    std::vector<ParamPoly> quot(std::max(n, 1));
    ParamPoly carry;
    for (int k = n; k >= 1; --k) {
        quot[k - 1] = q[k] - carry;
        carry = quot[k - 1];
    }
    if (!(q[0] - carry).is_zero())
        throw std::logic_error("Aluffi involution division is not exact");
    while (quot.size() > 1 && quot.back().is_zero()) quot.pop_back();
    return quot;
}

EulerProfile euler_profile(const ProjectiveClass& csm) {
    int N = csm.dim();
    // gamma(t) = sum a_i t^(N-i)
    std::vector<ParamPoly> gamma(N + 1);
    for (int i = 0; i <= N; ++i) gamma[N - i] = csm.coeff(i);
    while (gamma.size() > 1 && gamma.back().is_zero()) gamma.pop_back();
    EulerProfile out;
    out.ambient = N;
    out.chi = aluffi_involution(gamma);
    int low = csm.lowest_degree();
    out.degree = low < 0 ? ParamPoly(0) : csm.coeff(low);
    return out;
}

bool strictly_positive_functional_exists(const std::vector<WeightVector>& weights) {
    if (weights.empty()) return true;
    size_t r = weights[0].size();
    // strict homogeneous system <w, y> > 0; eliminate coordinates right to left
    std::vector<std::vector<Rational>> rows;
    for (const auto& w : weights) {
        std::vector<Rational> row(r);
        for (size_t j = 0; j < r; ++j) row[j] = Rational(w[j]);
        rows.push_back(std::move(row));
    }
    for (size_t v = r; v-- > 1;) {
        std::vector<std::vector<Rational>> pos, neg, rest;
        for (auto& row : rows) {
            if (row[v] > 0)
                pos.push_back(row);
            else if (row[v] < 0)
                neg.push_back(row);
            else
                rest.push_back(row);
        }
        // combine: a_p r_n - a_n r_p > 0 for each (p, n)
        for (const auto& p : pos) {
            for (const auto& nrow : neg) {
                std::vector<Rational> comb(v);
                bool nonzero = false;
                for (size_t j = 0; j < v; ++j) {
                    comb[j] = p[v] * nrow[j] - nrow[v] * p[j];
                    if (comb[j] != 0) nonzero = true;
                }
                if (!nonzero) return false;  // forced 0 > 0
                rest.push_back(std::move(comb));
            }
        }
        for (auto& row : rest) row.resize(v);
        rows = std::move(rest);
        if (rows.empty()) return true;  // remaining coordinates unconstrained
    }
    // one coordinate left: need a common sign
    bool has_pos = false, has_neg = false;
    for (const auto& row : rows) {
        if (row[0] > 0) has_pos = true;
        else if (row[0] < 0) has_neg = true;
        else return false;  // 0 > 0
    }
    return !(has_pos && has_neg);
}

HierarchyResult hierarchy_test(const std::string& lower, const std::string& upper, int ell,
                               int d, const Catalog& cat) {
    if (cat.ell != ell) throw std::invalid_argument("catalog has a different ell");
    const SingularityEntry& lo = cat.at(lower);
    const SingularityEntry& up = cat.at(upper);
    if (d < up.codim)
        throw std::invalid_argument("degree bound below the codimension of '" + up.name + "'");
    ChernSeries tp = thom_polynomial(up.name, ell, cat);
    auto images = chern_images(lo.source_weights, lo.target_weights, lo.torus_rank, up.codim);
    HierarchyResult out;
    out.witness =
        substitute_series(tp, images, TorusPolynomial::one(lo.torus_rank, up.codim));
    if (!out.witness.is_zero()) {
        out.verdict = HierarchyVerdict::below;
        out.detail = "nonzero restriction " + out.witness.str();
    } else if (strictly_positive_functional_exists(lo.source_weights)) {
        out.verdict = HierarchyVerdict::not_below;
        out.detail = "zero restriction and positive source weights";
    } else {
        out.verdict = HierarchyVerdict::inconclusive;
        out.detail = "zero restriction but the positivity condition fails";
    }
    return out;
}

SumCheckReport sum_check(const Catalog& cat, int d, bool include_tilde) {
    SumCheckReport rep;
    InterpolationEngine engine(cat, d);
    ChernSeries sum(d);
    for (const SingularityEntry* e : engine.active_entries()) {
        sum += engine.ssm_thom(e->name).series;
        ++rep.entries;
    }
    rep.chern_ok = (sum == ChernSeries::one(d));
    if (!rep.chern_ok) {
        rep.detail = "sum of SSM-Thom polynomials differs from 1";
        return rep;
    }
    if (include_tilde) {
        rep.tilde_checked = true;
        BasisExpansion tilde = to_schur_tilde(sum, d);
        rep.tilde_ok = true;
        for (const Partition& lam : enumerate_partitions(d)) {
            if (tilde.coeff(lam) != 1) {
                rep.tilde_ok = false;
                rep.detail = "tilde coefficient of " + lam.str() + " differs from 1";
                break;
            }
        }
    }
    return rep;
}

}  // namespace ssmthom
