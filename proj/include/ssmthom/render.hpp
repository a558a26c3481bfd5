#pragma once

#include <string>

#include "ssmthom/apps.hpp"
#include "ssmthom/bases.hpp"
#include "ssmthom/chern_series.hpp"
#include "ssmthom/solver.hpp"

namespace ssmthom {

enum class Format { text, json, latex };

Format parse_format(const std::string& s);
Basis parse_basis(const std::string& s);

// Chern-monomial rendering: parenthesized degree blocks joined by " + ",
// ascending-lex partitions within a degree, e.g.
// "(c1^2+c2) + (-3c1^3-6c1c2-3c3)".
std::string render_chern_text(const ChernSeries& s);
std::string render_chern_latex(const ChernSeries& s);

// Schur / tilde rendering: flat term list, degree-major, descending-lex
// within a degree (the reading order of the expansion tables), e.g.
// "s1 - 3s2 - 2s11" or "s~0 + s~1 + s~11".
std::string render_expansion_text(const BasisExpansion& e);
std::string render_expansion_latex(const BasisExpansion& e);

// { "entry", "ell", "degree", "basis", "terms": [{"partition", "coefficient"}] }
std::string compute_document_json(const std::string& entry, int ell, int degree,
                                  const std::string& basis, const ChernSeries& chern,
                                  const BasisExpansion* expansion);

std::string render_projective_latex(const ProjectiveClass& c);

}  // namespace ssmthom
