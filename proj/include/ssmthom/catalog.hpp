#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssmthom/rational.hpp"
#include "ssmthom/torus_poly.hpp"

namespace ssmthom {

// Raised on catalog parse failures and type-invariant violations.
struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Codimension ceiling below which the classification of contact orbits is
// finite and explicit: 6l+8 for l <= 3, 6l+7 for l >= 4.
int mather_bound(int ell);

// Polynomial in the genotype variables, keyed by exponent vector.
class VarPoly {
public:
    explicit VarPoly(int nvars) : nvars_(nvars) {}

    // Integer coefficients, "^" for powers, "*" optional, e.g. "x^2+y^3",
    // "z^2-x*y", "xy". Variables are matched by name, longest first.
    static VarPoly parse(const std::string& text, const std::vector<std::string>& names);

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    void add_term(const std::vector<int>& exps, const Rational& c);
    bool is_zero() const { return terms_.empty(); }
    int min_degree() const;  // -1 when zero
    VarPoly derivative(int var) const;
    bool operator==(const VarPoly& o) const = default;

    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_;
    std::map<std::vector<int>, Rational> terms_;
};

struct GenotypeVariable {
    std::string name;
    WeightVector weight;
};

struct GenotypeRelation {
    std::string text;  // source form, kept for round-tripping
    VarPoly poly{0};
    WeightVector weight;
};

// Minimal presentation (x_1..x_a) -> (r_1..r_b, 0..0) together with the
// torus weight data. The last `padded` lattice coordinates are reserved for
// the padded zero components, one fresh parameter each.
struct GenotypeSpec {
    std::vector<GenotypeVariable> variables;
    std::vector<GenotypeRelation> relations;
    int padded = 0;

    int var_count() const { return static_cast<int>(variables.size()); }
    int relation_count() const { return static_cast<int>(relations.size()); }
    int component_count() const { return relation_count() + padded; }
    int rank() const;  // weight-vector length, checked uniform
    int ell() const { return component_count() - var_count(); }
    // Weight of target component k (0-based): relation weight or pad unit.
    WeightVector component_weight(int k) const;

    // Throws std::invalid_argument naming the failed invariant: relations
    // must be weighted-homogeneous of the declared weight and lie in the
    // square of the maximal ideal.
    void check() const;
};

struct SingularityEntry {
    std::string name;
    std::string presentation;
    int ell = 0;
    int codim = 0;
    int torus_rank = 0;
    GenotypeSpec genotype;
    std::vector<WeightVector> source_weights;
    std::vector<WeightVector> target_weights;
    std::string provenance;

    // Structural invariants; throws std::invalid_argument with entry name.
    void check() const;
};

struct Catalog {
    int ell = 0;
    int max_codim = 0;
    std::vector<SingularityEntry> entries;

    const SingularityEntry* find(const std::string& name) const;
    const SingularityEntry& at(const std::string& name) const;
    // Entries of codimension <= c; max_codim lowered accordingly.
    Catalog restricted(int c) const;
    Catalog restricted_to(const std::vector<std::string>& names) const;
};

// Canonical form of paper-style aliases: strips "_", maps the b/b' series to
// III/I names ("b24" -> "III24", "b'24" -> "I24").
std::string normalize_entry_name(const std::string& name);

// JSON (de)serialization. Loading checks all type invariants and reports the
// offending entry and invariant.
Catalog parse_catalog(const std::string& json_text);
Catalog load_catalog(const std::string& path);
std::string catalog_to_json(const Catalog& cat);
std::string entry_to_json(const SingularityEntry& e);
GenotypeSpec parse_genotype(const std::string& json_text);

// Bundled classification data for l = 0, 1, 2.
const Catalog& builtin_catalog(int ell);

struct ValidationIssue {
    std::string entry;  // empty for catalog-level checks
    std::string check;
    std::string message;
};

struct ValidationReport {
    int entries_checked = 0;
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string summary() const;
};

// Per-entry checks (nonzero source weights, weight counts, unfolding-weight
// cancellation) plus coverage of every codimension <= d present in the
// classification and a duplicate scan.
ValidationReport validate_catalog(const Catalog& cat, int d);

// Pairs of distinct entries whose restriction data coincide after canonical
// normalization of torus coordinates; such pairs denote isomorphic algebras
// and must not both be present.
std::vector<std::pair<std::string, std::string>> duplicate_scan(const Catalog& cat);

}  // namespace ssmthom
