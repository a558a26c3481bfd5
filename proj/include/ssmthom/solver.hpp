#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ssmthom/catalog.hpp"
#include "ssmthom/chern_series.hpp"
#include "ssmthom/partition.hpp"

namespace ssmthom {

// Solver failure with a precise diagnosis. kind "underdetermined" carries the
// free unknowns, "inconsistent" the provenance of the violated row.
struct SolveError : std::runtime_error {
    enum class Kind { underdetermined, inconsistent };
    Kind kind;
    std::vector<Partition> free_unknowns;  // for underdetermined
    SolveError(Kind k, const std::string& msg, std::vector<Partition> free = {})
        : std::runtime_error(msg), kind(k), free_unknowns(std::move(free)) {}
};

struct ConstraintRow {
    // Dense over the unknowns of weight <= degree (a prefix of the unknown
    // list, which is ordered by weight).
    std::vector<Rational> coeffs;
    Rational rhs;
    int degree = 0;
    std::string entry;          // provenance: catalog entry that produced the row
    std::vector<int> monomial;  // torus monomial exponents
    bool axiom1 = false;

    std::string provenance() const;
};

struct ConstraintSystem {
    int ell = 0;
    int degree = 0;
    std::string target;
    std::vector<Partition> unknowns;  // enumerate_partitions(degree)
    std::vector<int> offset;          // offset[w] = first unknown index of weight w
    std::vector<ConstraintRow> rows;

    int block_begin(int w) const { return offset[w]; }
    int block_end(int w) const {
        return w + 1 < static_cast<int>(offset.size()) ? offset[w + 1]
                                                       : static_cast<int>(unknowns.size());
    }
};

// Degree-bounded SSM-Thom polynomial with its provenance.
struct SsmPolynomial {
    ChernSeries series;
    std::string entry;
    int ell = 0;
    int degree = 0;
    int codim = 0;
};

// e(rho_source) / c(rho_source) truncated at d.
TorusPolynomial axiom_rhs(const SingularityEntry& entry, int d);

// Builds the interpolation rows and caches per-entry restriction data so that
// repeated solves over one catalog share the expensive products.
class InterpolationEngine {
public:
    // Keeps its own copy of the catalog; validates it at degree d and throws
    // CatalogError when validation fails.
    InterpolationEngine(Catalog cat, int d);
    ~InterpolationEngine();

    const Catalog& catalog() const { return cat_; }
    int degree() const { return d_; }
    // Entries of codimension <= d, in catalog order.
    std::vector<const SingularityEntry*> active_entries() const;

    ConstraintSystem build_system(const std::string& target);
    SsmPolynomial ssm_thom(const std::string& target);

private:
    struct EntryData;
    Catalog cat_;
    int d_;
    std::vector<Partition> unknowns_;
    std::vector<int> offset_;
    std::map<std::string, std::unique_ptr<EntryData>> data_;

    EntryData& entry_data(const SingularityEntry& e);
};

ConstraintSystem build_system(const std::string& target, const Catalog& cat, int d);

// Exact blocked elimination with deterministic pivoting. Asserts consistency
// and full column rank; every input row is re-verified against the solution.
std::vector<Rational> solve_exact(const ConstraintSystem& sys);

SsmPolynomial ssm_thom(const std::string& target, int ell, int d, const Catalog& cat);

// Lowest (homogeneous, degree = codim) part.
ChernSeries thom_polynomial(const std::string& target, int ell, const Catalog& cat);

struct AxiomReport {
    struct Item {
        std::string entry;
        bool is_target = false;
        bool pass = false;
        std::string detail;
    };
    std::vector<Item> items;
    bool all_pass() const;
    std::string summary() const;
};

// Independent re-check of both axioms via the generic substitution
// homomorphism (not the solver's cached row data).
AxiomReport verify_axioms(const SsmPolynomial& T, const Catalog& cat);

}  // namespace ssmthom
