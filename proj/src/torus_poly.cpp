#include "ssmthom/torus_poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ssmthom {

bool is_zero_weight(const WeightVector& w) {
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

namespace {

bool desc_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](int x, int y) { return x > y; });
}

void gen_expvecs(int rank, int degree, int pos, std::vector<int>& acc,
                 std::vector<std::vector<int>>& out) {
    if (pos == rank - 1) {
        acc[pos] = degree;
        out.push_back(acc);
        return;
    }
    for (int e = degree; e >= 0; --e) {
        acc[pos] = e;
        gen_expvecs(rank, degree - e, pos + 1, acc, out);
    }
}

// Binary search in a fixed table; callers hoist the table out of hot loops.
int index_in(const std::vector<std::vector<int>>& table, const std::vector<int>& expvec) {
    auto it = std::lower_bound(table.begin(), table.end(), expvec, desc_lex_less);
    if (it == table.end() || *it != expvec)
        throw std::logic_error("exponent vector not found");
    return static_cast<int>(it - table.begin());
}

}  // namespace

const std::vector<std::vector<int>>& torus_monomials(int rank, int degree) {
    static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(rank, degree);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<int>> out;
    if (rank == 0) {
        if (degree == 0) out.push_back({});
    } else {
        std::vector<int> acc(rank, 0);
        gen_expvecs(rank, degree, 0, acc, out);
    }
    return cache.emplace(key, std::move(out)).first->second;
}

int torus_monomial_index(const std::vector<int>& expvec) {
    int rank = static_cast<int>(expvec.size());
    int degree = 0;
    for (int e : expvec) degree += e;
    return index_in(torus_monomials(rank, degree), expvec);
}

TorusPolynomial::TorusPolynomial(int rank, int trunc) : rank_(rank), trunc_(trunc) {
    if (rank < 0 || trunc < 0) throw std::invalid_argument("bad rank or truncation");
    deg_.resize(trunc + 1);
    for (int k = 0; k <= trunc; ++k)
        deg_[k].assign(torus_monomials(rank, k).size(), Rational(0));
}

TorusPolynomial TorusPolynomial::constant(int rank, int trunc, const Rational& c) {
    TorusPolynomial p(rank, trunc);
    p.deg_[0][0] = c;
    return p;
}

TorusPolynomial TorusPolynomial::linear(const WeightVector& w, int trunc) {
    int rank = static_cast<int>(w.size());
    TorusPolynomial p(rank, trunc);
    if (trunc < 1) return p;
    for (int j = 0; j < rank; ++j) {
        if (w[j] == 0) continue;
        std::vector<int> e(rank, 0);
        e[j] = 1;
        p.deg_[1][torus_monomial_index(e)] = Rational(w[j]);
    }
    return p;
}

Rational TorusPolynomial::coeff(const std::vector<int>& expvec) const {
    int degree = 0;
    for (int e : expvec) degree += e;
    if (degree > trunc_) return Rational(0);
    return deg_[degree][torus_monomial_index(expvec)];
}

void TorusPolynomial::set_coeff(const std::vector<int>& expvec, const Rational& c) {
    int degree = 0;
    for (int e : expvec) degree += e;
    if (degree > trunc_) throw std::invalid_argument("monomial beyond truncation");
    deg_[degree][torus_monomial_index(expvec)] = c;
}

bool TorusPolynomial::is_zero() const { return lowest_degree() == -1; }

int TorusPolynomial::lowest_degree() const {
    for (int k = 0; k <= trunc_; ++k)
        for (const auto& c : deg_[k])
            if (c != 0) return k;
    return -1;
}

void TorusPolynomial::check_compatible(const TorusPolynomial& o) const {
    if (rank_ != o.rank_) throw std::invalid_argument("torus rank mismatch");
}

TorusPolynomial TorusPolynomial::operator+(const TorusPolynomial& o) const {
    check_compatible(o);
    TorusPolynomial out(rank_, std::min(trunc_, o.trunc_));
    for (int k = 0; k <= out.trunc_; ++k)
        for (size_t i = 0; i < out.deg_[k].size(); ++i)
            out.deg_[k][i] = deg_[k][i] + o.deg_[k][i];
    return out;
}

TorusPolynomial TorusPolynomial::operator-(const TorusPolynomial& o) const {
    check_compatible(o);
    TorusPolynomial out(rank_, std::min(trunc_, o.trunc_));
    for (int k = 0; k <= out.trunc_; ++k)
        for (size_t i = 0; i < out.deg_[k].size(); ++i)
            out.deg_[k][i] = deg_[k][i] - o.deg_[k][i];
    return out;
}

TorusPolynomial TorusPolynomial::operator-() const {
    TorusPolynomial out(rank_, trunc_);
    for (int k = 0; k <= trunc_; ++k)
        for (size_t i = 0; i < deg_[k].size(); ++i) out.deg_[k][i] = -deg_[k][i];
    return out;
}

TorusPolynomial TorusPolynomial::operator*(const TorusPolynomial& o) const {
    check_compatible(o);
    TorusPolynomial out(rank_, std::min(trunc_, o.trunc_));
    std::vector<int> e(rank_);
    for (int ka = 0; ka <= std::min(trunc_, out.trunc_); ++ka) {
        const auto& mon_a = torus_monomials(rank_, ka);
        for (int kb = 0; kb + ka <= out.trunc_ && kb <= o.trunc_; ++kb) {
            const auto& mon_b = torus_monomials(rank_, kb);
            const auto& mon_t = torus_monomials(rank_, ka + kb);
            auto& target = out.deg_[ka + kb];
            for (size_t ia = 0; ia < deg_[ka].size(); ++ia) {
                const Rational& ca = deg_[ka][ia];
                if (ca == 0) continue;
                for (size_t ib = 0; ib < o.deg_[kb].size(); ++ib) {
                    const Rational& cb = o.deg_[kb][ib];
                    if (cb == 0) continue;
                    for (int j = 0; j < rank_; ++j) e[j] = mon_a[ia][j] + mon_b[ib][j];
                    target[index_in(mon_t, e)] += ca * cb;
                }
            }
        }
    }
    return out;
}

TorusPolynomial TorusPolynomial::scaled(const Rational& c) const {
    TorusPolynomial out(rank_, trunc_);
    if (c == 0) return out;
    for (int k = 0; k <= trunc_; ++k)
        for (size_t i = 0; i < deg_[k].size(); ++i) out.deg_[k][i] = deg_[k][i] * c;
    return out;
}

bool TorusPolynomial::operator==(const TorusPolynomial& o) const {
    if (rank_ != o.rank_ || trunc_ != o.trunc_) return false;
    return deg_ == o.deg_;
}

TorusPolynomial TorusPolynomial::homogeneous_part(int k) const {
    TorusPolynomial out(rank_, trunc_);
    if (k >= 0 && k <= trunc_) out.deg_[k] = deg_[k];
    return out;
}

TorusPolynomial TorusPolynomial::truncated(int d) const {
    TorusPolynomial out(rank_, std::min(d, trunc_));
    for (int k = 0; k <= out.trunc_; ++k) out.deg_[k] = deg_[k];
    return out;
}

TorusPolynomial TorusPolynomial::with_trunc(int d) const {
    TorusPolynomial out(rank_, d);
    for (int k = 0; k <= std::min(d, trunc_); ++k) out.deg_[k] = deg_[k];
    return out;
}

TorusPolynomial TorusPolynomial::inverse() const {
    if (deg_[0][0] != 1) throw std::domain_error("not invertible");
    // b_0 = 1, b_k = -sum_{j=1..k} a_j b_{k-j}, one degree slice at a time
    TorusPolynomial inv(rank_, trunc_);
    inv.deg_[0][0] = 1;
    std::vector<int> e(rank_);
    for (int k = 1; k <= trunc_; ++k) {
        const auto& mon_k = torus_monomials(rank_, k);
        std::vector<Rational> slice(mon_k.size(), Rational(0));
        for (int j = 1; j <= k; ++j) {
            const auto& mon_j = torus_monomials(rank_, j);
            const auto& mon_r = torus_monomials(rank_, k - j);
            for (size_t ij = 0; ij < deg_[j].size(); ++ij) {
                if (deg_[j][ij] == 0) continue;
                for (size_t ir = 0; ir < inv.deg_[k - j].size(); ++ir) {
                    if (inv.deg_[k - j][ir] == 0) continue;
                    for (int t = 0; t < rank_; ++t) e[t] = mon_j[ij][t] + mon_r[ir][t];
                    slice[index_in(mon_k, e)] -= deg_[j][ij] * inv.deg_[k - j][ir];
                }
            }
        }
        inv.deg_[k] = std::move(slice);
    }
    return inv;
}

std::string TorusPolynomial::str() const {
    auto var_name = [&](int j) -> std::string {
        if (rank_ <= 26) return std::string(1, static_cast<char>('a' + j));
        return "a" + std::to_string(j + 1);
    };
    std::string out;
    for (int k = 0; k <= trunc_; ++k) {
        const auto& mons = torus_monomials(rank_, k);
        for (size_t i = 0; i < deg_[k].size(); ++i) {
            const Rational& c = deg_[k][i];
            if (c == 0) continue;
            Rational a = abs(c);
            std::string body;
            for (int j = 0; j < rank_; ++j) {
                int e = mons[i][j];
                if (e == 0) continue;
                body += var_name(j);
                if (e > 1) body += "^" + std::to_string(e);
            }
            if (body.empty() || a != 1) {
                std::string num = rat_to_string(a);
                body = body.empty() ? num : num + body;
            }
            if (out.empty())
                out = (c < 0 ? "-" : "") + body;
            else
                out += (c < 0 ? " - " : " + ") + body;
        }
    }
    return out.empty() ? "0" : out;
}

TorusPolynomial total_chern(const std::vector<WeightVector>& weights, int rank, int d) {
    TorusPolynomial out = TorusPolynomial::one(rank, d);
    for (const auto& w : weights) {
        if (static_cast<int>(w.size()) != rank)
            throw std::invalid_argument("weight length differs from rank");
        out *= TorusPolynomial::one(rank, d) + TorusPolynomial::linear(w, d);
    }
    return out;
}

TorusPolynomial euler_class(const std::vector<WeightVector>& weights, int rank) {
    int n = static_cast<int>(weights.size());
    TorusPolynomial out = TorusPolynomial::one(rank, n);
    for (const auto& w : weights) {
        if (static_cast<int>(w.size()) != rank)
            throw std::invalid_argument("weight length differs from rank");
        if (is_zero_weight(w)) throw std::domain_error("zero Euler class");
        out *= TorusPolynomial::linear(w, n);
    }
    return out;
}

std::vector<TorusPolynomial> chern_images(const std::vector<WeightVector>& source,
                                          const std::vector<WeightVector>& target,
                                          int rank, int d) {
    TorusPolynomial q = total_chern(target, rank, d) * total_chern(source, rank, d).inverse();
    std::vector<TorusPolynomial> images;
    images.reserve(d);
    for (int k = 1; k <= d; ++k) images.push_back(q.homogeneous_part(k));
    return images;
}

}  // namespace ssmthom
