#pragma once

#include <string>
#include <vector>

#include "ssmthom/catalog.hpp"

namespace ssmthom {

// One miniversal-unfolding monomial: a monomial in the genotype variables
// placed in one target component. Its unfolding parameter carries the weight
// (component weight) - (monomial weight).
struct MonomialVector {
    std::vector<int> exponents;  // over the genotype variables
    int component = 0;           // 0-based target component
    WeightVector weight;         // unfolding-parameter weight

    int degree() const;
    bool operator==(const MonomialVector& o) const {
        return exponents == o.exponents && component == o.component;
    }
    std::string str(const GenotypeSpec& g) const;  // e.g. "x*y . e2"
};

// Deterministic basis of the normal space to the contact-orbit tangent space
// in the jet space truncated at jet_bound. Throws "jet bound too small" when
// the quotient meets the top two degree buckets (truncation artefacts are
// confined there).
std::vector<MonomialVector> normal_basis(const GenotypeSpec& g, int jet_bound);

// True iff the normal basis is identical at jet_bound and jet_bound + 1.
bool check_stabilization(const GenotypeSpec& g, int jet_bound);

// Builds the prototype weight data for the singularity entry. jet_bound = 0
// selects automatic stabilization (increase until stable, with a hard cap).
// Throws on zero derived source weights ("non-quasi-homogeneous weight
// assignment") and on stabilization failure.
SingularityEntry derive_entry(const GenotypeSpec& g, int ell, int jet_bound = 0,
                              const std::string& name = "derived",
                              const std::string& presentation = "",
                              const std::string& provenance = "unfolding-derived");

}  // namespace ssmthom
