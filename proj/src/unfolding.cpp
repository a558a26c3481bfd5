#include "ssmthom/unfolding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ssmthom {

int MonomialVector::degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

std::string MonomialVector::str(const GenotypeSpec& g) const {
    std::string mono;
    for (size_t v = 0; v < exponents.size(); ++v) {
        if (exponents[v] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += g.variables[v].name;
        if (exponents[v] > 1) mono += "^" + std::to_string(exponents[v]);
    }
    if (mono.empty()) mono = "1";
    return mono + " . e" + std::to_string(component + 1);
}

namespace {

// Monomials in `nvars` variables of degree 1..bound, ordered by degree then
// word order (lexicographically descending exponent tuples).
std::vector<std::vector<int>> monomials_upto(int nvars, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc(nvars, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars) {
            out.push_back(acc);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            acc[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        acc[pos] = 0;
    };
    std::vector<std::vector<int>> result;
    for (int d = 1; d <= bound; ++d) {
        out.clear();
        if (nvars == 0) break;
        rec(rec, 0, d);
        for (auto& m : out)
            if (std::accumulate(m.begin(), m.end(), 0) == d) result.push_back(m);
    }
    return result;
}

WeightVector monomial_weight(const GenotypeSpec& g, const std::vector<int>& exps) {
    int r = g.rank();
    WeightVector w(r, 0);
    for (int v = 0; v < g.var_count(); ++v)
        for (int j = 0; j < r; ++j) w[j] += exps[v] * g.variables[v].weight[j];
    return w;
}

// Ambient jet coordinates: (monomial, component) with 1 <= degree <= bound.
struct JetCoordinates {
    std::vector<std::pair<std::vector<int>, int>> elems;  // sorted canonical order
    std::map<std::pair<std::vector<int>, int>, int> index;

    JetCoordinates(const GenotypeSpec& g, int bound) {
        auto monos = monomials_upto(g.var_count(), bound);
        // order: degree, then component, then word order (already in monos)
        for (int d = 1; d <= bound; ++d)
            for (int k = 0; k < g.component_count(); ++k)
                for (const auto& m : monos)
                    if (std::accumulate(m.begin(), m.end(), 0) == d)
                        elems.emplace_back(m, k);
        for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    }
};

// Sparse vector over jet coordinates within one weight bucket.
using SparseVec = std::map<int, Rational>;

void bucket_add(std::map<WeightVector, std::vector<SparseVec>>& buckets,
                const WeightVector& wt, SparseVec v) {
    if (v.empty()) return;
    buckets[wt].push_back(std::move(v));
}

// Weight grading of a jet coordinate: monomial weight minus component weight.
WeightVector coordinate_weight(const GenotypeSpec& g, const std::vector<int>& exps,
                               int component) {
    WeightVector w = monomial_weight(g, exps);
    WeightVector cw = g.component_weight(component);
    for (size_t j = 0; j < w.size(); ++j) w[j] -= cw[j];
    return w;
}

// Echelon basis with span-membership test; reduce() returns true when the
// vector lies in the current span, otherwise inserts its reduction.
struct Echelon {
    std::map<int, SparseVec> pivots;  // leading index -> row (leading coeff 1)

    bool reduce_insert(SparseVec v) {
        while (!v.empty()) {
            int lead = v.begin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                Rational inv = 1 / v.begin()->second;
                for (auto& [i, c] : v) c *= inv;
                pivots.emplace(lead, std::move(v));
                return false;
            }
            Rational f = v.begin()->second;
            for (const auto& [i, c] : it->second) {
                auto [vi, fresh] = v.emplace(i, -f * c);
                if (!fresh) {
                    vi->second -= f * c;
                    if (vi->second == 0) v.erase(vi);
                }
            }
        }
        return true;
    }
};

std::vector<MonomialVector> basis_unchecked(const GenotypeSpec& g, int bound) {
    g.check();
    if (bound < 1) throw std::invalid_argument("jet bound must be at least 1");
    int a = g.var_count();
    int b = g.relation_count();
    int comps = g.component_count();
    JetCoordinates jet(g, bound);

    std::map<WeightVector, std::vector<SparseVec>> tangent;
    auto monos = monomials_upto(a, bound);
    std::vector<std::vector<int>> hs = {std::vector<int>(a, 0)};  // h = 1 first
    hs.insert(hs.end(), monos.begin(), monos.end());

    // (i) h * (dr_1/dx_v, ..., dr_b/dx_v, 0, ..., 0)
    for (int v = 0; v < a; ++v) {
        std::vector<VarPoly> partials;
        for (int j = 0; j < b; ++j) partials.push_back(g.relations[j].poly.derivative(v));
        WeightVector neg_var = g.variables[v].weight;
        for (auto& x : neg_var) x = -x;
        for (const auto& h : hs) {
            int hd = std::accumulate(h.begin(), h.end(), 0);
            if (hd + 1 > bound) continue;
            SparseVec vec;
            for (int j = 0; j < b; ++j) {
                for (const auto& [e, c] : partials[j].terms()) {
                    std::vector<int> m(a);
                    for (int t = 0; t < a; ++t) m[t] = h[t] + e[t];
                    int md = std::accumulate(m.begin(), m.end(), 0);
                    if (md < 1 || md > bound) continue;  // jet projection
                    auto idx = jet.index.find({m, j});
                    auto [it, fresh] = vec.emplace(idx->second, c);
                    if (!fresh) {
                        it->second += c;
                        if (it->second == 0) vec.erase(it);
                    }
                }
            }
            WeightVector wt = monomial_weight(g, h);
            for (size_t t = 0; t < wt.size(); ++t) wt[t] += neg_var[t];
            bucket_add(tangent, wt, std::move(vec));
        }
    }
    // (ii) h * r_j * e_k
    for (int j = 0; j < b; ++j) {
        for (int k = 0; k < comps; ++k) {
            for (const auto& h : hs) {
                int hd = std::accumulate(h.begin(), h.end(), 0);
                if (hd + g.relations[j].poly.min_degree() > bound) continue;
                SparseVec vec;
                for (const auto& [e, c] : g.relations[j].poly.terms()) {
                    std::vector<int> m(a);
                    for (int t = 0; t < a; ++t) m[t] = h[t] + e[t];
                    int md = std::accumulate(m.begin(), m.end(), 0);
                    if (md > bound) continue;
                    auto [it, fresh] = vec.emplace(jet.index.at({m, k}), c);
                    if (!fresh) {
                        it->second += c;
                        if (it->second == 0) vec.erase(it);
                    }
                }
                WeightVector wt = monomial_weight(g, h);
                const WeightVector& rw = g.relations[j].weight;
                WeightVector cw = g.component_weight(k);
                for (size_t t = 0; t < wt.size(); ++t) wt[t] += rw[t] - cw[t];
                bucket_add(tangent, wt, std::move(vec));
            }
        }
    }

    // group ambient coordinates by weight, in canonical order
    std::map<WeightVector, std::vector<int>> ambient;
    for (size_t i = 0; i < jet.elems.size(); ++i)
        ambient[coordinate_weight(g, jet.elems[i].first, jet.elems[i].second)].push_back(
            static_cast<int>(i));

    std::vector<MonomialVector> basis;
    for (const auto& [wt, coords] : ambient) {
        Echelon ech;
        auto it = tangent.find(wt);
        if (it != tangent.end())
            for (const auto& gen : it->second) ech.reduce_insert(gen);
        for (int ci : coords) {
            SparseVec unit{{ci, Rational(1)}};
            if (!ech.reduce_insert(std::move(unit))) {
                MonomialVector mv;
                mv.exponents = jet.elems[ci].first;
                mv.component = jet.elems[ci].second;
                WeightVector w = g.component_weight(mv.component);
                WeightVector mw = monomial_weight(g, mv.exponents);
                for (size_t t = 0; t < w.size(); ++t) w[t] -= mw[t];
                mv.weight = std::move(w);
                basis.push_back(std::move(mv));
            }
        }
    }
    // presentation order: component, then degree, then word order
    std::sort(basis.begin(), basis.end(), [](const MonomialVector& x, const MonomialVector& y) {
        if (x.component != y.component) return x.component < y.component;
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        return std::lexicographical_compare(x.exponents.begin(), x.exponents.end(),
                                            y.exponents.begin(), y.exponents.end(),
                                            [](int p, int q) { return p > q; });
    });
    return basis;
}

}  // namespace

std::vector<MonomialVector> normal_basis(const GenotypeSpec& g, int jet_bound) {
    auto basis = basis_unchecked(g, jet_bound);
    if (g.var_count() > 0)
        for (const auto& mv : basis)
            if (mv.degree() >= jet_bound - 1)
                throw std::runtime_error("jet bound too small");
    return basis;
}

bool check_stabilization(const GenotypeSpec& g, int jet_bound) {
    return basis_unchecked(g, jet_bound) == basis_unchecked(g, jet_bound + 1);
}

SingularityEntry derive_entry(const GenotypeSpec& g, int ell, int jet_bound,
                              const std::string& name, const std::string& presentation,
                              const std::string& provenance) {
    g.check();
    if (g.ell() != ell)
        throw std::invalid_argument("padding inconsistent with relative dimension");
    std::vector<MonomialVector> basis;
    if (jet_bound > 0) {
        basis = normal_basis(g, jet_bound);
        if (!check_stabilization(g, jet_bound))
            throw std::runtime_error("jet bound too small");
    } else {
        int max_rel = 2;
        for (const auto& r : g.relations)
            for (const auto& [e, c] : r.poly.terms())
                max_rel = std::max(max_rel, std::accumulate(e.begin(), e.end(), 0));
        const int cap = 2 * (max_rel + 2) + 8;
        bool done = false;
        for (int n = max_rel + 2; n <= cap && !done; ++n) {
            if (check_stabilization(g, n)) {
                basis = normal_basis(g, n);
                done = true;
            }
        }
        if (!done) throw std::runtime_error("jet bound too small");
    }

    SingularityEntry e;
    e.name = name;
    e.presentation = presentation;
    e.ell = ell;
    e.torus_rank = g.rank();
    e.genotype = g;
    e.provenance = provenance;
    for (const auto& v : g.variables) e.source_weights.push_back(v.weight);
    for (const auto& mv : basis) e.source_weights.push_back(mv.weight);
    for (const auto& r : g.relations) e.target_weights.push_back(r.weight);
    for (int p = 0; p < g.padded; ++p)
        e.target_weights.push_back(g.component_weight(g.relation_count() + p));
    for (const auto& mv : basis) e.target_weights.push_back(mv.weight);
    e.codim = static_cast<int>(e.source_weights.size());
    for (const auto& w : e.source_weights)
        if (is_zero_weight(w))
            throw std::runtime_error("non-quasi-homogeneous weight assignment");
    e.check();
    return e;
}

}  // namespace ssmthom
