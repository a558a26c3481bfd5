#include "ssmthom/bases.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace ssmthom {

std::optional<std::pair<int, Partition>> straighten_jt(const std::vector<int>& mu) {
    int n = static_cast<int>(mu.size());
    std::vector<std::pair<int, int>> alpha(n);  // (mu_i - i, original row)
    for (int i = 0; i < n; ++i) alpha[i] = {mu[i] - (i + 1), i};
    // insertion sort descending, counting swaps for the sign
    int swaps = 0;
    for (int i = 1; i < n; ++i) {
        auto key = alpha[i];
        int j = i - 1;
        while (j >= 0 && alpha[j].first < key.first) {
            alpha[j + 1] = alpha[j];
            --j;
            ++swaps;
        }
        alpha[j + 1] = key;
    }
    std::vector<int> lam;
    for (int i = 0; i < n; ++i) {
        if (i + 1 < n && alpha[i].first == alpha[i + 1].first) return std::nullopt;
        int part = alpha[i].first + (i + 1);
        if (part < 0) return std::nullopt;  // a row of the matrix is identically zero
        lam.push_back(part);
    }
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    return std::make_pair(swaps % 2 == 0 ? 1 : -1, Partition(std::move(lam)));
}

namespace {

// Permutation expansion of det(c_{lam_i + j - i}) with zero-entry pruning.
void schur_dfs(const std::vector<int>& lam, int row, unsigned used, int sign,
               std::vector<int>& factors, std::map<Partition, Rational>& out) {
    int n = static_cast<int>(lam.size());
    if (row == n) {
        std::vector<int> sorted = factors;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        Partition p(std::move(sorted));
        auto [it, fresh] = out.emplace(p, Rational(sign));
        if (!fresh) {
            it->second += sign;
            if (it->second == 0) out.erase(it);
        }
        return;
    }
    for (int col = 0; col < n; ++col) {
        if (used & (1u << col)) continue;
        int t = lam[row] + col - row;
        if (t < 0) continue;
        // parity: inversions added by assigning this column
        int inv = __builtin_popcount(used >> (col + 1));
        int s = (inv % 2 == 0) ? sign : -sign;
        if (t == 0) {
            schur_dfs(lam, row + 1, used | (1u << col), s, factors, out);
        } else {
            factors.push_back(t);
            schur_dfs(lam, row + 1, used | (1u << col), s, factors, out);
            factors.pop_back();
        }
    }
}

}  // namespace

const std::map<Partition, Rational>& schur_in_chern(const Partition& lambda) {
    static std::map<Partition, std::map<Partition, Rational>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
    std::map<Partition, Rational> out;
    if (lambda.empty()) {
        out[Partition{}] = 1;
    } else {
        std::vector<int> factors;
        schur_dfs(lambda.parts(), 0, 0, 1, factors, out);
    }
    return cache.emplace(lambda, std::move(out)).first->second;
}

ChernSeries jacobi_trudi(const std::vector<int>& mu, int d) {
    ChernSeries out(d);
    auto st = straighten_jt(mu);
    if (!st) return out;
    auto& [sign, lam] = *st;
    if (lam.weight() > d) return out;
    for (const auto& [p, c] : schur_in_chern(lam)) out.set_coeff(p, c * sign);
    return out;
}

namespace {

// Inverse of the matrix (coeff of c_mu in s_lam) for fixed weight, memoized.
// Row/column order is partitions_of_weight(w).
const std::vector<std::vector<Rational>>& schur_inverse_matrix(int w) {
    static std::map<int, std::vector<std::vector<Rational>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;

    auto lams = partitions_of_weight(w);
    int n = static_cast<int>(lams.size());
    std::map<Partition, int> row_of;
    for (int i = 0; i < n; ++i) row_of[lams[i]] = i;

    // augmented [S | I], Gauss-Jordan
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
    for (int col = 0; col < n; ++col)
        for (const auto& [mu, c] : schur_in_chern(lams[col])) m[row_of.at(mu)][col] = c;
    for (int i = 0; i < n; ++i) m[i][n + i] = 1;

    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::logic_error("schur transition matrix is singular");
        std::swap(m[col], m[pivot]);
        Rational inv = 1 / m[col][col];
        for (int j = col; j < 2 * n; ++j) m[col][j] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int j = col; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return cache.emplace(w, std::move(inv)).first->second;
}

}  // namespace

BasisExpansion to_schur(const ChernSeries& a) {
    BasisExpansion out{Basis::schur, a.trunc(), {}};
    for (int w = 0; w <= a.trunc(); ++w) {
        auto lams = partitions_of_weight(w);
        int n = static_cast<int>(lams.size());
        std::vector<Rational> rhs(n, Rational(0));
        bool any = false;
        for (int i = 0; i < n; ++i) {
            rhs[i] = a.coeff(lams[i]);
            if (rhs[i] != 0) any = true;
        }
        if (!any) continue;
        const auto& inv = schur_inverse_matrix(w);
        for (int i = 0; i < n; ++i) {
            Rational x(0);
            for (int j = 0; j < n; ++j)
                if (rhs[j] != 0) x += inv[i][j] * rhs[j];
            if (x != 0) out.coeffs[lams[i]] = x;
        }
    }
    return out;
}

ChernSeries from_schur(const BasisExpansion& e) {
    ChernSeries out(e.trunc);
    for (const auto& [lam, c] : e.coeffs) {
        if (lam.weight() > e.trunc) continue;
        for (const auto& [mu, v] : schur_in_chern(lam))
            out.set_coeff(mu, out.coeff(mu) + c * v);
    }
    return out;
}

namespace {

// (1 + z_i)^(-n) in variable i, truncated at total degree d.
TorusPolynomial inv_one_plus_z_pow(int vars, int i, int n, int d) {
    TorusPolynomial out(vars, d);
    for (int t = 0; t <= d; ++t) {
        std::vector<int> e(vars, 0);
        e[i] = t;
        Rational c = binomial(n + t - 1, t);
        if (t % 2 == 1) c = -c;
        out.set_coeff(e, c);
    }
    return out;
}

// The lambda-independent double product over `vars` variables, memoized.
const TorusPolynomial& tilde_double_product(int vars, int d) {
    static std::map<std::pair<int, int>, TorusPolynomial> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(vars, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    TorusPolynomial acc = TorusPolynomial::one(vars, d);
    for (int j = 0; j < vars; ++j) {
        for (int i = 0; i < j; ++i) {
            // 1 + z_i - z_j
            TorusPolynomial f = TorusPolynomial::one(vars, d);
            WeightVector w(vars, 0);
            w[i] = 1;
            w[j] = -1;
            f += TorusPolynomial::linear(w, d);
            acc *= f;
        }
        // the i = j numerator is 1; denominators contribute (1+z_i)^-1 for i <= j
        for (int i = 0; i <= j; ++i) acc *= inv_one_plus_z_pow(vars, i, 1, d);
    }
    return cache.emplace(key, std::move(acc)).first->second;
}

}  // namespace

std::map<Partition, Rational> schur_tilde_coeffs(const Partition& lambda, int d, int vars) {
    if (lambda.size() > vars)
        throw std::invalid_argument("fewer expansion variables than partition parts");
    TorusPolynomial f = tilde_double_product(vars, d);
    // multiply by prod z_i^{lambda_i} (1+z_i)^{-lambda_i}
    for (int i = 0; i < lambda.size(); ++i) {
        int li = lambda.parts()[i];
        TorusPolynomial shift(vars, d);
        std::vector<int> e(vars, 0);
        e[i] = li;
        if (li <= d) shift.set_coeff(e, Rational(1));
        f = f * shift * inv_one_plus_z_pow(vars, i, li, d);
    }
    // the S operation: z^mu -> det(c_{mu_i + j - i}), collected in Schur form
    std::map<Partition, Rational> out;
    for (int k = 0; k <= d; ++k) {
        const auto& mons = torus_monomials(vars, k);
        const auto& slice = f.slice(k);
        for (size_t i = 0; i < slice.size(); ++i) {
            if (slice[i] == 0) continue;
            auto st = straighten_jt(mons[i]);
            if (!st) continue;
            auto& [sign, lam] = *st;
            auto [it, fresh] = out.emplace(lam, slice[i] * sign);
            if (!fresh) {
                it->second += slice[i] * sign;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

namespace {

// Stabilization-verified Schur coordinates of s~_lambda, memoized on (lambda, d).
const std::map<Partition, Rational>& schur_tilde_checked(const Partition& lambda, int d) {
    static std::map<std::pair<Partition, int>, std::map<Partition, Rational>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(lambda, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    int vars = std::max(d, lambda.size());
    auto coeffs = schur_tilde_coeffs(lambda, d, vars);
    auto check = schur_tilde_coeffs(lambda, d, vars + 1);
    if (coeffs != check)
        throw std::runtime_error("schur_tilde failed to stabilize for s~_" + lambda.str());
    return cache.emplace(key, std::move(coeffs)).first->second;
}

}  // namespace

ChernSeries schur_tilde(const Partition& lambda, int d) {
    return from_schur({Basis::schur, d, schur_tilde_checked(lambda, d)});
}

BasisExpansion to_schur_tilde(const ChernSeries& a, int d) {
    BasisExpansion residual = to_schur(a.truncated(d));
    BasisExpansion out{Basis::schur_tilde, d, {}};
    for (int k = 0; k <= d; ++k) {
        // coefficients at degree k are final; subtract their tilde tails
        std::vector<std::pair<Partition, Rational>> level;
        for (const auto& [lam, c] : residual.coeffs)
            if (lam.weight() == k && c != 0) level.emplace_back(lam, c);
        for (const auto& [lam, c] : level) {
            out.coeffs[lam] = c;
            for (const auto& [nu, t] : schur_tilde_checked(lam, d)) {
                auto [it, fresh] = residual.coeffs.emplace(nu, -c * t);
                if (!fresh) {
                    it->second -= c * t;
                    if (it->second == 0) residual.coeffs.erase(it);
                }
            }
        }
    }
    if (!residual.coeffs.empty())
        throw std::logic_error("tilde peeling left a nonzero residual");
    return out;
}

ChernSeries from_schur_tilde(const BasisExpansion& e, int d) {
    ChernSeries out(d);
    for (const auto& [lam, c] : e.coeffs) out += schur_tilde(lam, d).scaled(c);
    return out;
}

bool is_schur_positive(const ChernSeries& a) {
    if (a.is_zero()) return false;
    for (const auto& [lam, c] : to_schur(a).coeffs)
        if (c < 0) return false;
    return true;
}

}  // namespace ssmthom
