#include "ssmthom/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssmthom {

std::string ConstraintRow::provenance() const {
    std::string mon = "1";
    bool any = false;
    std::string body;
    for (size_t j = 0; j < monomial.size(); ++j) {
        if (monomial[j] == 0) continue;
        if (any) body += "*";
        body += std::string(1, static_cast<char>('a' + (j % 26)));
        if (monomial[j] > 1) body += "^" + std::to_string(monomial[j]);
        any = true;
    }
    if (any) mon = body;
    return "axiom (" + std::string(axiom1 ? "1" : "2") + ") for " + entry + " at degree " +
           std::to_string(degree) + ", monomial " + mon;
}

TorusPolynomial axiom_rhs(const SingularityEntry& entry, int d) {
    TorusPolynomial e = euler_class(entry.source_weights, entry.torus_rank).with_trunc(d);
    TorusPolynomial c = total_chern(entry.source_weights, entry.torus_rank, d);
    return e * c.inverse();
}

// ---------------------------------------------------------------------------
// Engine

struct InterpolationEngine::EntryData {
    const SingularityEntry* entry = nullptr;
    TorusPolynomial c_source{0, 0};
    std::vector<TorusPolynomial> images;  // psi(c_1..c_d)
    // psi(c_lam) * c(rho_source) per unknown index; the axiom (2) integrand
    std::vector<TorusPolynomial> psi_c;
    std::vector<ConstraintRow> axiom2_rows;  // degrees codim..d, rhs 0
};

InterpolationEngine::InterpolationEngine(Catalog cat, int d) : cat_(std::move(cat)), d_(d) {
    if (d < 0) throw std::invalid_argument("negative degree bound");
    if (d > mather_bound(cat_.ell))
        throw std::invalid_argument("degree exceeds the Mather bound for ell = " +
                                    std::to_string(cat_.ell));
    ValidationReport rep = validate_catalog(cat_.restricted(d), d);
    if (!rep.ok()) throw CatalogError("catalog fails validation: " + rep.summary());
    unknowns_ = enumerate_partitions(d);
    offset_.assign(d + 2, 0);
    for (size_t i = 0; i < unknowns_.size(); ++i) {
        int w = unknowns_[i].weight();
        if (offset_[w + 1] < static_cast<int>(i) + 1) offset_[w + 1] = static_cast<int>(i) + 1;
    }
    for (int w = 1; w <= d + 1; ++w) offset_[w] = std::max(offset_[w], offset_[w - 1]);
}

InterpolationEngine::~InterpolationEngine() = default;

std::vector<const SingularityEntry*> InterpolationEngine::active_entries() const {
    std::vector<const SingularityEntry*> out;
    for (const auto& e : cat_.entries)
        if (e.codim <= d_) out.push_back(&e);
    return out;
}

InterpolationEngine::EntryData& InterpolationEngine::entry_data(const SingularityEntry& e) {
    auto it = data_.find(e.name);
    if (it != data_.end()) return *it->second;

    auto ed = std::make_unique<EntryData>();
    ed->entry = &e;
    ed->c_source = total_chern(e.source_weights, e.torus_rank, d_);
    ed->images = chern_images(e.source_weights, e.target_weights, e.torus_rank, d_);

    // psi(c_lam)*c(rho) by removing the smallest part: one product per unknown
    ed->psi_c.reserve(unknowns_.size());
    std::map<Partition, int> index_of;
    for (size_t i = 0; i < unknowns_.size(); ++i) index_of[unknowns_[i]] = static_cast<int>(i);
    for (size_t i = 0; i < unknowns_.size(); ++i) {
        const Partition& lam = unknowns_[i];
        if (lam.empty()) {
            ed->psi_c.push_back(ed->c_source);
        } else {
            const TorusPolynomial& parent = ed->psi_c[index_of.at(lam.drop_last())];
            ed->psi_c.push_back(parent * ed->images[lam.parts().back() - 1]);
        }
    }

    // rows for degrees codim..d: one per torus monomial, rhs 0
    for (int k = e.codim; k <= d_; ++k) {
        const auto& mons = torus_monomials(e.torus_rank, k);
        int ncols = offset_[k + 1];
        for (size_t m = 0; m < mons.size(); ++m) {
            ConstraintRow row;
            row.degree = k;
            row.entry = e.name;
            row.monomial = mons[m];
            row.axiom1 = false;
            row.rhs = 0;
            row.coeffs.resize(ncols);
            for (int j = 0; j < ncols; ++j) row.coeffs[j] = ed->psi_c[j].slice(k)[m];
            ed->axiom2_rows.push_back(std::move(row));
        }
    }
    ed->psi_c.clear();
    ed->psi_c.shrink_to_fit();
    return *data_.emplace(e.name, std::move(ed)).first->second;
}

ConstraintSystem InterpolationEngine::build_system(const std::string& target) {
    const SingularityEntry& t = cat_.at(target);
    if (t.codim > d_)
        throw std::invalid_argument("target codimension " + std::to_string(t.codim) +
                                    " exceeds the degree bound " + std::to_string(d_));
    ConstraintSystem sys;
    sys.ell = cat_.ell;
    sys.degree = d_;
    sys.target = t.name;
    sys.unknowns = unknowns_;
    sys.offset = offset_;

    for (const SingularityEntry* e : active_entries()) {
        if (e->name == t.name) {
            // axiom (1): psi(T) agrees with e/c in every degree 0..d
            EntryData& ed = entry_data(*e);
            TorusPolynomial rhs = axiom_rhs(*e, d_);
            std::vector<TorusPolynomial> psi_plain;
            psi_plain.reserve(unknowns_.size());
            std::map<Partition, int> index_of;
            for (size_t i = 0; i < unknowns_.size(); ++i)
                index_of[unknowns_[i]] = static_cast<int>(i);
            for (size_t i = 0; i < unknowns_.size(); ++i) {
                const Partition& lam = unknowns_[i];
                if (lam.empty())
                    psi_plain.push_back(TorusPolynomial::one(e->torus_rank, d_));
                else
                    psi_plain.push_back(psi_plain[index_of.at(lam.drop_last())] *
                                        ed.images[lam.parts().back() - 1]);
            }
            for (int k = 0; k <= d_; ++k) {
                const auto& mons = torus_monomials(e->torus_rank, k);
                int ncols = offset_[k + 1];
                for (size_t m = 0; m < mons.size(); ++m) {
                    ConstraintRow row;
                    row.degree = k;
                    row.entry = e->name;
                    row.monomial = mons[m];
                    row.axiom1 = true;
                    row.rhs = rhs.slice(k)[m];
                    row.coeffs.resize(ncols);
                    for (int j = 0; j < ncols; ++j) row.coeffs[j] = psi_plain[j].slice(k)[m];
                    sys.rows.push_back(std::move(row));
                }
            }
        } else {
            EntryData& ed = entry_data(*e);
            sys.rows.insert(sys.rows.end(), ed.axiom2_rows.begin(), ed.axiom2_rows.end());
        }
    }
    return sys;
}

SsmPolynomial InterpolationEngine::ssm_thom(const std::string& target) {
    ConstraintSystem sys = build_system(target);
    std::vector<Rational> x = solve_exact(sys);
    const SingularityEntry& t = cat_.at(target);
    SsmPolynomial out{ChernSeries(d_), t.name, cat_.ell, d_, t.codim};
    for (size_t i = 0; i < sys.unknowns.size(); ++i)
        if (x[i] != 0) out.series.set_coeff(sys.unknowns[i], x[i]);
    if (out.series.lowest_degree() != t.codim)
        throw std::logic_error("lowest degree of T(" + t.name + ") differs from codimension " +
                               std::to_string(t.codim));
    return out;
}

// ---------------------------------------------------------------------------
// Elimination

std::vector<Rational> solve_exact(const ConstraintSystem& sys) {
    int n = static_cast<int>(sys.unknowns.size());
    std::vector<Rational> x(n, Rational(0));

    for (int w = 0; w <= sys.degree; ++w) {
        int lo = sys.block_begin(w), hi = sys.block_end(w);
        int cols = hi - lo;
        if (cols == 0) continue;
        // reduce this degree's rows modulo the already-solved prefix
        std::vector<std::vector<Rational>> mat;  // cols + 1 (rhs)
        for (const auto& row : sys.rows) {
            if (row.degree != w) continue;
            std::vector<Rational> r(cols + 1, Rational(0));
            for (int j = 0; j < cols; ++j) r[j] = row.coeffs[lo + j];
            Rational rhs = row.rhs;
            for (int j = 0; j < lo; ++j)
                if (row.coeffs[j] != 0 && x[j] != 0) rhs -= row.coeffs[j] * x[j];
            r[cols] = rhs;
            mat.push_back(std::move(r));
        }
        // echelon with first-nonzero pivoting in row-major order
        std::vector<int> pivot_of_col(cols, -1);
        std::vector<std::vector<Rational>> pivots;
        for (auto& r : mat) {
            int lead = -1;
            for (int j = 0; j < cols; ++j) {
                if (r[j] == 0) continue;
                if (pivot_of_col[j] >= 0) {
                    const auto& p = pivots[pivot_of_col[j]];
                    Rational f = r[j];
                    for (int t = j; t <= cols; ++t)
                        if (p[t] != 0) r[t] -= f * p[t];
                } else {
                    lead = j;
                    break;
                }
            }
            if (lead < 0) continue;  // fully reduced; consistency checked below
            Rational inv = 1 / r[lead];
            for (int t = lead; t <= cols; ++t)
                if (r[t] != 0) r[t] *= inv;
            pivot_of_col[lead] = static_cast<int>(pivots.size());
            pivots.push_back(std::move(r));
        }
        std::vector<Partition> free;
        for (int j = 0; j < cols; ++j)
            if (pivot_of_col[j] < 0) free.push_back(sys.unknowns[lo + j]);
        if (!free.empty()) {
            std::string names;
            for (const auto& p : free) names += (names.empty() ? "" : ", ") + p.str();
            throw SolveError(SolveError::Kind::underdetermined,
                             "underdetermined at degree " + std::to_string(w) +
                                 "; free unknowns: " + names,
                             std::move(free));
        }
        // back substitution within the block (pivot columns descending)
        for (int j = cols - 1; j >= 0; --j) {
            const auto& p = pivots[pivot_of_col[j]];
            Rational v = p[cols];
            for (int t = j + 1; t < cols; ++t)
                if (p[t] != 0) v -= p[t] * x[lo + t];
            x[lo + j] = v;
        }
    }

    // every row re-verified against the assembled solution
    for (const auto& row : sys.rows) {
        Rational acc = 0;
        for (size_t j = 0; j < row.coeffs.size(); ++j)
            if (row.coeffs[j] != 0 && x[j] != 0) acc += row.coeffs[j] * x[j];
        if (acc != row.rhs)
            throw SolveError(SolveError::Kind::inconsistent,
                             "inconsistent: " + row.provenance());
    }
    return x;
}

// ---------------------------------------------------------------------------
// Free-function surface

ConstraintSystem build_system(const std::string& target, const Catalog& cat, int d) {
    InterpolationEngine engine(cat, d);
    return engine.build_system(target);
}

SsmPolynomial ssm_thom(const std::string& target, int ell, int d, const Catalog& cat) {
    if (cat.ell != ell) throw std::invalid_argument("catalog has a different ell");
    InterpolationEngine engine(cat, d);
    return engine.ssm_thom(target);
}

ChernSeries thom_polynomial(const std::string& target, int ell, const Catalog& cat) {
    const SingularityEntry& t = cat.at(target);
    SsmPolynomial T = ssm_thom(target, ell, t.codim, cat);
    return T.series.homogeneous_part(t.codim);
}

// ---------------------------------------------------------------------------
// Axiom verification (independent route through substitute_series)

bool AxiomReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const Item& i) { return i.pass; });
}

std::string AxiomReport::summary() const {
    std::string out;
    for (const auto& i : items) {
        out += (i.pass ? "pass" : "FAIL");
        out += " axiom (" + std::string(i.is_target ? "1" : "2") + ") " + i.entry;
        if (!i.detail.empty()) out += ": " + i.detail;
        out += "\n";
    }
    return out;
}

AxiomReport verify_axioms(const SsmPolynomial& T, const Catalog& cat) {
    AxiomReport rep;
    int d = T.degree;
    for (const auto& e : cat.entries) {
        if (e.codim > d) continue;
        AxiomReport::Item item;
        item.entry = e.name;
        item.is_target = (e.name == T.entry);
        auto images = chern_images(e.source_weights, e.target_weights, e.torus_rank, d);
        TorusPolynomial psi_T =
            substitute_series(T.series, images, TorusPolynomial::one(e.torus_rank, d));
        if (item.is_target) {
            TorusPolynomial expected = axiom_rhs(e, d);
            item.pass = (psi_T == expected);
            if (!item.pass) item.detail = "restriction differs from e/c";
        } else {
            TorusPolynomial prod = psi_T * total_chern(e.source_weights, e.torus_rank, d);
            item.pass = true;
            for (int k = e.codim; k <= d && item.pass; ++k)
                if (!prod.homogeneous_part(k).is_zero()) {
                    item.pass = false;
                    item.detail = "nonzero component at degree " + std::to_string(k);
                }
        }
        rep.items.push_back(std::move(item));
    }
    return rep;
}

}  // namespace ssmthom
