#include "ssmthom/render.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace ssmthom {

using nlohmann::ordered_json;

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "latex") return Format::latex;
    throw std::invalid_argument("unknown format '" + s + "'");
}

Basis parse_basis(const std::string& s) {
    if (s == "chern") return Basis::chern;
    if (s == "schur") return Basis::schur;
    if (s == "tilde" || s == "schur_tilde") return Basis::schur_tilde;
    throw std::invalid_argument("unknown basis '" + s + "'");
}

namespace {

std::string chern_monomial(const Partition& p, bool latex) {
    if (p.empty()) return "";
    std::string out;
    // ascending parts grouped into powers: c1^2c2
    const auto& parts = p.parts();
    for (int i = static_cast<int>(parts.size()) - 1; i >= 0;) {
        int part = parts[i];
        int count = 0;
        while (i >= 0 && parts[i] == part) {
            ++count;
            --i;
        }
        out += latex ? "c_{" + std::to_string(part) + "}" : "c" + std::to_string(part);
        if (count > 1) out += latex ? "^{" + std::to_string(count) + "}" : "^" + std::to_string(count);
    }
    return out;
}

std::string coeff_prefix(const Rational& c, bool leading, bool latex, bool bare, bool compact) {
    // sign and absolute value; omits "1" before a symbol unless bare
    Rational a = abs(c);
    std::string s;
    if (leading)
        s = c < 0 ? "-" : "";
    else if (compact)
        s = c < 0 ? "-" : "+";
    else
        s = c < 0 ? " - " : " + ";
    if (a != 1 || bare) {
        s += rat_to_string(a);
        if (!bare && latex) s += "\\,";
    }
    return s;
}

std::string render_chern(const ChernSeries& s, bool latex) {
    if (s.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= s.trunc(); ++k) {
        // collect degree-k terms in ascending-lex order (reverse of map order)
        std::vector<std::pair<Partition, Rational>> terms;
        for (const auto& [p, c] : s.terms())
            if (p.weight() == k) terms.emplace_back(p, c);
        if (terms.empty()) continue;
        std::reverse(terms.begin(), terms.end());
        std::string block;
        bool leading = true;
        for (const auto& [p, c] : terms) {
            block += coeff_prefix(c, leading, latex, p.empty(), true);
            block += chern_monomial(p, latex);
            leading = false;
        }
        if (!out.empty()) out += " + ";
        out += "(" + block + ")";
    }
    return out;
}

std::string expansion_symbol(Basis b, const Partition& p, bool latex) {
    std::string sub = p.str();
    if (latex) {
        std::string head = b == Basis::schur_tilde ? "\\tilde{s}" : "s";
        return head + "_{" + (p.empty() ? "0" : sub) + "}";
    }
    std::string head = b == Basis::schur_tilde ? "s~" : "s";
    return head + (p.empty() ? "0" : sub);
}

std::string render_expansion(const BasisExpansion& e, bool latex) {
    if (e.basis == Basis::chern)
        throw std::invalid_argument("chern expansions render through render_chern_*");
    if (e.coeffs.empty()) return "0";
    std::string out;
    bool leading = true;
    for (const auto& [p, c] : e.coeffs) {  // map order: weight-major, desc-lex
        if (c == 0) continue;
        out += coeff_prefix(c, leading, latex, false, false);
        out += expansion_symbol(e.basis, p, latex);
        leading = false;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string render_chern_text(const ChernSeries& s) { return render_chern(s, false); }
std::string render_chern_latex(const ChernSeries& s) { return render_chern(s, true); }

std::string render_expansion_text(const BasisExpansion& e) { return render_expansion(e, false); }
std::string render_expansion_latex(const BasisExpansion& e) { return render_expansion(e, true); }

std::string compute_document_json(const std::string& entry, int ell, int degree,
                                  const std::string& basis, const ChernSeries& chern,
                                  const BasisExpansion* expansion) {
    ordered_json doc;
    doc["entry"] = entry;
    doc["ell"] = ell;
    doc["degree"] = degree;
    doc["basis"] = basis;
    doc["terms"] = ordered_json::array();
    auto push_term = [&](const Partition& p, const Rational& c) {
        ordered_json t;
        t["partition"] = ordered_json::array();
        for (int x : p.parts()) t["partition"].push_back(x);
        t["coefficient"] = rat_to_string(c);
        doc["terms"].push_back(std::move(t));
    };
    if (expansion) {
        for (const auto& [p, c] : expansion->coeffs)
            if (c != 0) push_term(p, c);
    } else {
        for (int k = 0; k <= chern.trunc(); ++k) {
            std::vector<std::pair<Partition, Rational>> terms;
            for (const auto& [p, c] : chern.terms())
                if (p.weight() == k) terms.emplace_back(p, c);
            std::reverse(terms.begin(), terms.end());
            for (const auto& [p, c] : terms) push_term(p, c);
        }
    }
    return doc.dump(2) + "\n";
}

std::string render_projective_latex(const ProjectiveClass& c) {
    std::string out;
    for (int k = 0; k <= c.dim(); ++k) {
        if (c.coeff(k).is_zero()) continue;
        std::string body = "\\left(" + c.coeff(k).str() + "\\right)";
        if (k == 1) body += "h";
        if (k > 1) body += "h^{" + std::to_string(k) + "}";
        out += (out.empty() ? "" : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

}  // namespace ssmthom
