#include "ssmthom/chern_series.hpp"

#include <algorithm>

namespace ssmthom {

ChernSeries::ChernSeries(int trunc) : trunc_(trunc) {
    if (trunc < 0) throw std::invalid_argument("negative truncation degree");
}

ChernSeries ChernSeries::one(int trunc) {
    ChernSeries s(trunc);
    s.terms_[Partition{}] = Rational(1);
    return s;
}

ChernSeries ChernSeries::variable(int k, int trunc) {
    if (k < 1) throw std::invalid_argument("chern variable index must be positive");
    ChernSeries s(trunc);
    if (k <= trunc) s.terms_[Partition{k}] = Rational(1);
    return s;
}

ChernSeries ChernSeries::monomial(const Partition& p, const Rational& c, int trunc) {
    ChernSeries s(trunc);
    if (p.weight() <= trunc && c != 0) s.terms_[p] = c;
    return s;
}

Rational ChernSeries::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

void ChernSeries::set_coeff(const Partition& p, const Rational& c) {
    if (p.weight() > trunc_) throw std::invalid_argument("monomial beyond truncation");
    if (c == 0)
        terms_.erase(p);
    else
        terms_[p] = c;
}

int ChernSeries::lowest_degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.weight();  // map order is weight-major
}

bool ChernSeries::operator==(const ChernSeries& o) const {
    return trunc_ == o.trunc_ && terms_ == o.terms_;
}

ChernSeries ChernSeries::operator+(const ChernSeries& o) const {
    ChernSeries out(std::min(trunc_, o.trunc_));
    for (const auto& [p, c] : terms_)
        if (p.weight() <= out.trunc_) out.terms_[p] = c;
    for (const auto& [p, c] : o.terms_) {
        if (p.weight() > out.trunc_) continue;
        auto [it, fresh] = out.terms_.emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

ChernSeries ChernSeries::operator-(const ChernSeries& o) const { return *this + (-o); }

ChernSeries ChernSeries::operator-() const {
    ChernSeries out(trunc_);
    for (const auto& [p, c] : terms_) out.terms_[p] = -c;
    return out;
}

ChernSeries ChernSeries::operator*(const ChernSeries& o) const {
    ChernSeries out(std::min(trunc_, o.trunc_));
    for (const auto& [pa, ca] : terms_) {
        if (pa.weight() > out.trunc_) continue;
        for (const auto& [pb, cb] : o.terms_) {
            if (pa.weight() + pb.weight() > out.trunc_) continue;
            std::vector<int> parts = pa.parts();
            parts.insert(parts.end(), pb.parts().begin(), pb.parts().end());
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            Partition p(std::move(parts));
            auto [it, fresh] = out.terms_.emplace(p, ca * cb);
            if (!fresh) {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

ChernSeries ChernSeries::scaled(const Rational& c) const {
    ChernSeries out(trunc_);
    if (c == 0) return out;
    for (const auto& [p, v] : terms_) out.terms_[p] = v * c;
    return out;
}

ChernSeries ChernSeries::homogeneous_part(int k) const {
    ChernSeries out(trunc_);
    for (const auto& [p, c] : terms_)
        if (p.weight() == k) out.terms_[p] = c;
    return out;
}

ChernSeries ChernSeries::truncated(int d) const {
    ChernSeries out(std::min(d, trunc_));
    for (const auto& [p, c] : terms_)
        if (p.weight() <= out.trunc_) out.terms_[p] = c;
    return out;
}

ChernSeries ChernSeries::inverse(int d) const {
    if (coeff(Partition{}) != 1) throw std::domain_error("not invertible");
    // b_0 = 1, b_k = -sum_{j=1..k} a_j b_{k-j}
    ChernSeries inv = ChernSeries::one(d);
    for (int k = 1; k <= d; ++k) {
        ChernSeries acc(d);
        for (int j = 1; j <= k; ++j)
            acc += homogeneous_part(j) * inv.homogeneous_part(k - j);
        for (const auto& [p, c] : acc.terms())
            if (p.weight() == k) inv.set_coeff(p, -c);
    }
    return inv;
}

TorusPolynomial split_to_roots(const ChernSeries& s, int m, int ell, int d) {
    if (m < 1 || ell < 0) throw std::invalid_argument("need m >= 1 and ell >= 0");
    int rank = 2 * m + ell;
    TorusPolynomial num = TorusPolynomial::one(rank, d);
    TorusPolynomial den = TorusPolynomial::one(rank, d);
    for (int j = 0; j < m + ell; ++j) {
        WeightVector w(rank, 0);
        w[m + j] = 1;
        num *= TorusPolynomial::one(rank, d) + TorusPolynomial::linear(w, d);
    }
    for (int i = 0; i < m; ++i) {
        WeightVector w(rank, 0);
        w[i] = 1;
        den *= TorusPolynomial::one(rank, d) + TorusPolynomial::linear(w, d);
    }
    TorusPolynomial q = num * den.inverse();
    std::vector<TorusPolynomial> images;
    int dmax = std::min(d, s.trunc());
    for (int k = 1; k <= dmax; ++k) images.push_back(q.homogeneous_part(k));
    return substitute_series(s.truncated(dmax), images, TorusPolynomial::one(rank, d));
}

}  // namespace ssmthom
