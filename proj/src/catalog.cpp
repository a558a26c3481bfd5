#include "ssmthom/catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ssmthom {

using nlohmann::ordered_json;

int mather_bound(int ell) {
    if (ell < 0) throw std::invalid_argument("negative relative dimension");
    return ell <= 3 ? 6 * ell + 8 : 6 * ell + 7;
}

// ---------------------------------------------------------------------------
// VarPoly

void VarPoly::add_term(const std::vector<int>& exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::invalid_argument("exponent vector length mismatch");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(exps, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

int VarPoly::min_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

VarPoly VarPoly::derivative(int var) const {
    VarPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        std::vector<int> d = e;
        d[var] -= 1;
        out.add_term(d, c * e[var]);
    }
    return out;
}

namespace {

struct PolyParser {
    const std::string& text;
    const std::vector<std::string>& names;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    int match_var() {  // longest name match, -1 if none
        int best = -1;
        size_t best_len = 0;
        for (size_t v = 0; v < names.size(); ++v) {
            const auto& n = names[v];
            if (n.size() > best_len && text.compare(pos, n.size(), n) == 0) {
                best = static_cast<int>(v);
                best_len = n.size();
            }
        }
        if (best >= 0) pos += best_len;
        return best;
    }

    long parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected integer in '" + text + "'");
        return std::stol(text.substr(start, pos - start));
    }

    // factor := INT | VAR ['^' INT]
    bool parse_factor(Rational& coeff, std::vector<int>& exps) {
        skip_ws();
        if (pos >= text.size()) return false;
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff *= Rational(parse_int());
            return true;
        }
        int v = match_var();
        if (v < 0) return false;
        int e = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            e = static_cast<int>(parse_int());
            if (e < 0) throw std::invalid_argument("negative exponent in '" + text + "'");
        }
        exps[v] += e;
        return true;
    }

    VarPoly parse() {
        VarPoly out(static_cast<int>(names.size()));
        skip_ws();
        bool first = true;
        while (pos < text.size()) {
            int sign = 1;
            skip_ws();
            if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
                sign = text[pos] == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                throw std::invalid_argument("expected '+' or '-' in '" + text + "'");
            }
            first = false;
            Rational coeff(sign);
            std::vector<int> exps(names.size(), 0);
            bool any = false;
            for (;;) {
                skip_ws();
                if (pos < text.size() && text[pos] == '*') {
                    ++pos;
                    if (!parse_factor(coeff, exps))
                        throw std::invalid_argument("dangling '*' in '" + text + "'");
                    any = true;
                    continue;
                }
                if (!parse_factor(coeff, exps)) break;
                any = true;
            }
            if (!any) throw std::invalid_argument("empty term in '" + text + "'");
            out.add_term(exps, coeff);
        }
        if (first) throw std::invalid_argument("empty polynomial");
        return out;
    }
};

}  // namespace

VarPoly VarPoly::parse(const std::string& text, const std::vector<std::string>& names) {
    PolyParser p{text, names};
    return p.parse();
}

std::string VarPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        Rational a = abs(c);
        std::string body;
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!body.empty()) body += "*";
            body += names[v];
            if (e[v] > 1) body += "^" + std::to_string(e[v]);
        }
        if (body.empty() || a != 1) {
            std::string num = rat_to_string(a);
            body = body.empty() ? num : num + "*" + body;
        }
        if (out.empty())
            out = (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? "-" : "+") + body;
    }
    return out;
}

// ---------------------------------------------------------------------------
// GenotypeSpec / SingularityEntry

int GenotypeSpec::rank() const {
    int r = -1;
    for (const auto& v : variables) {
        if (r < 0) r = static_cast<int>(v.weight.size());
        if (static_cast<int>(v.weight.size()) != r)
            throw std::invalid_argument("inconsistent weight lengths");
    }
    for (const auto& rel : relations) {
        if (r < 0) r = static_cast<int>(rel.weight.size());
        if (static_cast<int>(rel.weight.size()) != r)
            throw std::invalid_argument("inconsistent weight lengths");
    }
    if (r < 0) r = padded;  // genotype with no variables or relations
    return r;
}

WeightVector GenotypeSpec::component_weight(int k) const {
    int b = relation_count();
    if (k < b) return relations[k].weight;
    int r = rank();
    WeightVector w(r, 0);
    int pad_index = k - b;
    if (pad_index >= padded) throw std::out_of_range("component index");
    w[r - padded + pad_index] = 1;
    return w;
}

void GenotypeSpec::check() const {
    int r = rank();
    if (padded < 0) throw std::invalid_argument("negative padding");
    if (padded > r) throw std::invalid_argument("more padded components than torus rank");
    std::set<std::string> names;
    for (const auto& v : variables) {
        if (v.name.empty()) throw std::invalid_argument("empty variable name");
        if (!names.insert(v.name).second)
            throw std::invalid_argument("duplicate variable name '" + v.name + "'");
        for (int j = r - padded; j < r; ++j)
            if (v.weight[j] != 0)
                throw std::invalid_argument("variable weight uses a padded torus coordinate");
    }
    for (const auto& rel : relations) {
        if (rel.poly.nvars() != var_count())
            throw std::invalid_argument("relation variable count mismatch");
        if (rel.poly.is_zero()) throw std::invalid_argument("zero relation");
        if (rel.poly.min_degree() < 2)
            throw std::invalid_argument(
                "relation not in the square of the maximal ideal: " + rel.text);
        for (int j = r - padded; j < r; ++j)
            if (rel.weight[j] != 0)
                throw std::invalid_argument("relation weight uses a padded torus coordinate");
        for (const auto& [e, c] : rel.poly.terms()) {
            WeightVector w(r, 0);
            for (int v = 0; v < var_count(); ++v)
                for (int j = 0; j < r; ++j) w[j] += e[v] * variables[v].weight[j];
            if (w != rel.weight)
                throw std::invalid_argument("relation not weighted-homogeneous: " + rel.text);
        }
    }
}

namespace {

// Exact cross-multiplied form of the cancellation identity:
// c(target) * c(variables) == c(relations + pads) * c(source).
bool unfolding_cancels(const SingularityEntry& e) {
    int r = e.torus_rank;
    std::vector<WeightVector> vars, comps;
    for (const auto& v : e.genotype.variables) vars.push_back(v.weight);
    for (int k = 0; k < e.genotype.component_count(); ++k)
        comps.push_back(e.genotype.component_weight(k));
    int degree = static_cast<int>(e.target_weights.size() + vars.size());
    TorusPolynomial lhs = total_chern(e.target_weights, r, degree) * total_chern(vars, r, degree);
    TorusPolynomial rhs = total_chern(comps, r, degree) * total_chern(e.source_weights, r, degree);
    return lhs == rhs;
}

}  // namespace

void SingularityEntry::check() const {
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("entry '" + name + "': " + what);
    };
    if (name.empty()) throw std::invalid_argument("entry with empty name");
    try {
        genotype.check();
    } catch (const std::invalid_argument& ex) {
        fail(ex.what());
    }
    if (genotype.ell() != ell) fail("padding inconsistent with relative dimension");
    if (codim != static_cast<int>(source_weights.size()))
        fail("codim differs from source weight count");
    if (static_cast<int>(target_weights.size()) != codim + ell)
        fail("target weight count differs from codim + ell");
    if (torus_rank != genotype.rank()) fail("torus rank differs from genotype weights");
    for (const auto& w : source_weights)
        if (static_cast<int>(w.size()) != torus_rank) fail("source weight length mismatch");
    for (const auto& w : target_weights)
        if (static_cast<int>(w.size()) != torus_rank) fail("target weight length mismatch");
    for (const auto& w : source_weights)
        if (is_zero_weight(w)) fail("zero source weight");
    if (!unfolding_cancels(*this)) fail("unfolding-weight cancellation fails");
}

// ---------------------------------------------------------------------------
// Catalog

std::string normalize_entry_name(const std::string& name) {
    std::string s;
    for (char c : name)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '_') s += c;
    if (s.rfind("b'", 0) == 0)
        s = "I" + s.substr(2);
    else if (s.size() > 1 && s[0] == 'b' &&
             std::all_of(s.begin() + 1, s.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        s = "III" + s.substr(1);
    std::string out;
    for (char c : s)
        if (c != '(' && c != ')' && c != '^' && c != '*' && c != ',' && c != '+') out += c;
    return out;
}

const SingularityEntry* Catalog::find(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    std::string n = normalize_entry_name(name);
    for (const auto& e : entries)
        if (normalize_entry_name(e.name) == n) return &e;
    return nullptr;
}

const SingularityEntry& Catalog::at(const std::string& name) const {
    const SingularityEntry* e = find(name);
    if (!e) throw std::invalid_argument("unknown entry '" + name + "'");
    return *e;
}

Catalog Catalog::restricted(int c) const {
    Catalog out;
    out.ell = ell;
    out.max_codim = std::min(c, max_codim);
    for (const auto& e : entries)
        if (e.codim <= c) out.entries.push_back(e);
    return out;
}

Catalog Catalog::restricted_to(const std::vector<std::string>& names) const {
    Catalog out;
    out.ell = ell;
    out.max_codim = 0;
    for (const auto& e : entries) {
        bool keep = std::any_of(names.begin(), names.end(), [&](const std::string& n) {
            return e.name == n || normalize_entry_name(e.name) == normalize_entry_name(n);
        });
        if (keep) {
            out.entries.push_back(e);
            out.max_codim = std::max(out.max_codim, e.codim);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

WeightVector weight_from_json(const ordered_json& j) {
    WeightVector w;
    for (const auto& x : j) w.push_back(x.get<int>());
    return w;
}

ordered_json weight_to_json(const WeightVector& w) {
    ordered_json j = ordered_json::array();
    for (int x : w) j.push_back(x);
    return j;
}

GenotypeSpec genotype_from_json(const ordered_json& j) {
    GenotypeSpec g;
    std::vector<std::string> names;
    for (const auto& v : j.at("variables")) {
        GenotypeVariable gv;
        gv.name = v.at("name").get<std::string>();
        gv.weight = weight_from_json(v.at("weight"));
        names.push_back(gv.name);
        g.variables.push_back(std::move(gv));
    }
    for (const auto& rel : j.at("relations")) {
        GenotypeRelation gr;
        gr.text = rel.at("poly").get<std::string>();
        gr.poly = VarPoly::parse(gr.text, names);
        gr.weight = weight_from_json(rel.at("weight"));
        g.relations.push_back(std::move(gr));
    }
    g.padded = j.at("padded").get<int>();
    return g;
}

ordered_json genotype_to_json(const GenotypeSpec& g) {
    ordered_json j;
    j["variables"] = ordered_json::array();
    for (const auto& v : g.variables)
        j["variables"].push_back({{"name", v.name}, {"weight", weight_to_json(v.weight)}});
    j["relations"] = ordered_json::array();
    for (const auto& r : g.relations)
        j["relations"].push_back({{"poly", r.text}, {"weight", weight_to_json(r.weight)}});
    j["padded"] = g.padded;
    return j;
}

SingularityEntry entry_from_json(const ordered_json& j) {
    SingularityEntry e;
    e.name = j.at("name").get<std::string>();
    e.presentation = j.value("presentation", std::string());
    e.codim = j.at("codim").get<int>();
    e.torus_rank = j.at("torus_rank").get<int>();
    e.genotype = genotype_from_json(j.at("genotype"));
    for (const auto& w : j.at("source_weights")) e.source_weights.push_back(weight_from_json(w));
    for (const auto& w : j.at("target_weights")) e.target_weights.push_back(weight_from_json(w));
    e.provenance = j.value("provenance", std::string());
    return e;
}

ordered_json entry_to_json_obj(const SingularityEntry& e) {
    ordered_json j;
    j["name"] = e.name;
    j["presentation"] = e.presentation;
    j["codim"] = e.codim;
    j["torus_rank"] = e.torus_rank;
    j["genotype"] = genotype_to_json(e.genotype);
    j["source_weights"] = ordered_json::array();
    for (const auto& w : e.source_weights) j["source_weights"].push_back(weight_to_json(w));
    j["target_weights"] = ordered_json::array();
    for (const auto& w : e.target_weights) j["target_weights"].push_back(weight_to_json(w));
    j["provenance"] = e.provenance;
    return j;
}

}  // namespace

Catalog parse_catalog(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& ex) {
        throw CatalogError(std::string("catalog parse error: ") + ex.what());
    }
    Catalog cat;
    try {
        cat.ell = j.at("ell").get<int>();
        cat.max_codim = j.at("max_codim").get<int>();
        for (const auto& je : j.at("entries")) {
            SingularityEntry e = entry_from_json(je);
            e.ell = cat.ell;
            cat.entries.push_back(std::move(e));
        }
    } catch (const CatalogError&) {
        throw;
    } catch (const std::exception& ex) {
        throw CatalogError(std::string("catalog parse error: ") + ex.what());
    }
    std::set<std::string> seen;
    int codim0 = 0;
    for (const auto& e : cat.entries) {
        try {
            e.check();
        } catch (const std::invalid_argument& ex) {
            throw CatalogError(ex.what());
        }
        if (!seen.insert(e.name).second)
            throw CatalogError("entry '" + e.name + "': duplicate name");
        if (e.codim == 0) ++codim0;
    }
    if (codim0 != 1)
        throw CatalogError("catalog must contain exactly one codimension-0 entry");
    return cat;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open catalog file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str());
}

std::string catalog_to_json(const Catalog& cat) {
    ordered_json j;
    j["ell"] = cat.ell;
    j["max_codim"] = cat.max_codim;
    j["entries"] = ordered_json::array();
    for (const auto& e : cat.entries) j["entries"].push_back(entry_to_json_obj(e));
    return j.dump(2) + "\n";
}

std::string entry_to_json(const SingularityEntry& e) {
    return entry_to_json_obj(e).dump(2) + "\n";
}

GenotypeSpec parse_genotype(const std::string& json_text) {
    try {
        ordered_json j = ordered_json::parse(json_text);
        if (j.contains("genotype")) j = j.at("genotype");
        return genotype_from_json(j);
    } catch (const std::exception& ex) {
        throw CatalogError(std::string("genotype parse error: ") + ex.what());
    }
}

// ---------------------------------------------------------------------------
// Validation

namespace {

// Orbit counts per codimension from the bundled classifications.
const std::map<int, int>* classification_census(int ell) {
    static const std::map<int, int> l0{{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 2},
                                       {5, 2}, {6, 3}, {7, 4}, {8, 5}};
    static const std::map<int, int> l1{{0, 1},  {2, 1},  {4, 1},  {6, 2},
                                       {7, 1},  {8, 2},  {9, 1},  {10, 3},
                                       {11, 3}, {12, 5}, {13, 4}, {14, 8}};
    static const std::map<int, int> l2{{0, 1},  {3, 1},  {6, 1},  {8, 1},
                                       {9, 1},  {10, 1}, {11, 1}, {12, 1},
                                       {13, 1}, {14, 2}, {15, 3}};
    switch (ell) {
        case 0: return &l0;
        case 1: return &l1;
        case 2: return &l2;
        default: return nullptr;
    }
}

int census_max_codim(int ell) { return ell == 0 ? 8 : (ell == 1 ? 14 : 15); }

}  // namespace

ValidationReport validate_catalog(const Catalog& cat, int d) {
    if (d > mather_bound(cat.ell))
        throw std::invalid_argument("degree exceeds the Mather bound");
    ValidationReport rep;
    rep.entries_checked = static_cast<int>(cat.entries.size());
    for (const auto& e : cat.entries) {
        try {
            e.genotype.check();
            if (e.genotype.ell() != cat.ell)
                rep.issues.push_back({e.name, "structure", "padding inconsistent with ell"});
        } catch (const std::invalid_argument& ex) {
            rep.issues.push_back({e.name, "structure", ex.what()});
            continue;
        }
        if (e.codim != static_cast<int>(e.source_weights.size()) ||
            static_cast<int>(e.target_weights.size()) != e.codim + cat.ell)
            rep.issues.push_back({e.name, "weight-count",
                                  "codim / source / target counts are inconsistent"});
        bool zero = false;
        for (const auto& w : e.source_weights)
            if (is_zero_weight(w)) zero = true;
        if (zero)
            rep.issues.push_back({e.name, "euler", "zero source weight: Euler class vanishes"});
        else if (!unfolding_cancels(e))
            rep.issues.push_back({e.name, "cancellation",
                                  "unfolding-weight cancellation identity fails"});
    }
    // coverage of codimensions 0..d
    if (d > cat.max_codim) {
        rep.issues.push_back({"", "coverage",
                              "catalog data capped at codimension " +
                                  std::to_string(cat.max_codim) + ", requested " +
                                  std::to_string(d)});
    } else if (const auto* census = classification_census(cat.ell)) {
        std::map<int, int> have;
        for (const auto& e : cat.entries)
            if (e.codim <= d) ++have[e.codim];
        for (int c = 0; c <= std::min(d, census_max_codim(cat.ell)); ++c) {
            auto it = census->find(c);
            int expected = it == census->end() ? 0 : it->second;
            int got = have.count(c) ? have.at(c) : 0;
            if (got != expected)
                rep.issues.push_back({"", "coverage",
                                      "codimension " + std::to_string(c) + ": expected " +
                                          std::to_string(expected) + " entries, found " +
                                          std::to_string(got)});
        }
    } else {
        int codim0 = 0;
        for (const auto& e : cat.entries)
            if (e.codim == 0) ++codim0;
        if (codim0 != 1)
            rep.issues.push_back({"", "coverage", "need exactly one codimension-0 entry"});
    }
    for (const auto& [a, b] : duplicate_scan(cat))
        rep.issues.push_back({a, "duplicate", "restriction data coincides with '" + b + "'"});
    return rep;
}

std::string ValidationReport::summary() const {
    std::string out = std::to_string(entries_checked) + " entries, ";
    if (ok()) return out + "all checks pass";
    out += std::to_string(issues.size()) + " issue(s):";
    for (const auto& i : issues) {
        out += "\n  [" + i.check + "]";
        if (!i.entry.empty()) out += " " + i.entry + ":";
        out += " " + i.message;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Duplicate scan

namespace {

using WeightMultiset = std::vector<WeightVector>;  // kept sorted

WeightMultiset sorted_ws(std::vector<WeightVector> w) {
    std::sort(w.begin(), w.end());
    return w;
}

// Cancels common weights between target and source.
std::pair<WeightMultiset, WeightMultiset> reduced_quotient(const SingularityEntry& e) {
    WeightMultiset num = sorted_ws(e.target_weights);
    WeightMultiset den = sorted_ws(e.source_weights);
    WeightMultiset num2, den2;
    size_t i = 0, j = 0;
    while (i < num.size() && j < den.size()) {
        if (num[i] == den[j]) {
            ++i;
            ++j;
        } else if (num[i] < den[j]) {
            num2.push_back(num[i++]);
        } else {
            den2.push_back(den[j++]);
        }
    }
    num2.insert(num2.end(), num.begin() + i, num.end());
    den2.insert(den2.end(), den.begin() + j, den.end());
    return {num2, den2};
}

struct RestrictionData {
    WeightMultiset source;
    WeightMultiset quot_num, quot_den;
};

RestrictionData restriction_data(const SingularityEntry& e) {
    auto [num, den] = reduced_quotient(e);
    return {sorted_ws(e.source_weights), num, den};
}

WeightMultiset transformed(const WeightMultiset& ws, const std::vector<int>& perm,
                           const std::vector<int>& signs) {
    WeightMultiset out;
    out.reserve(ws.size());
    for (const auto& w : ws) {
        WeightVector t(w.size());
        for (size_t j = 0; j < w.size(); ++j) t[j] = signs[j] * w[perm[j]];
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// gcd scale normalization for rank 1 (torus reparametrization)
void normalize_rank1(RestrictionData& r) {
    long g = 0;
    auto absorb = [&](const WeightMultiset& ws) {
        for (const auto& w : ws) g = std::gcd(g, static_cast<long>(std::abs(w[0])));
    };
    absorb(r.source);
    absorb(r.quot_num);
    absorb(r.quot_den);
    if (g > 1) {
        auto scale = [&](WeightMultiset& ws) {
            for (auto& w : ws) w[0] = static_cast<int>(w[0] / g);
        };
        scale(r.source);
        scale(r.quot_num);
        scale(r.quot_den);
    }
    long sum = 0;
    for (const auto& w : r.source) sum += w[0];
    if (sum < 0) {
        auto flip = [](WeightMultiset& ws) {
            for (auto& w : ws) w[0] = -w[0];
            std::sort(ws.begin(), ws.end());
        };
        flip(r.source);
        flip(r.quot_num);
        flip(r.quot_den);
    }
}

bool same_restriction(const SingularityEntry& a, const SingularityEntry& b) {
    if (a.torus_rank != b.torus_rank || a.codim != b.codim) return false;
    int r = a.torus_rank;
    RestrictionData ra = restriction_data(a);
    RestrictionData rb = restriction_data(b);
    if (r == 0) return true;  // both trivial
    if (r == 1) {
        normalize_rank1(ra);
        normalize_rank1(rb);
        return ra.source == rb.source && ra.quot_num == rb.quot_num &&
               ra.quot_den == rb.quot_den;
    }
    // coordinate permutations and sign flips of b's lattice
    std::vector<int> perm(r);
    for (int i = 0; i < r; ++i) perm[i] = i;
    do {
        for (int mask = 0; mask < (1 << r); ++mask) {
            std::vector<int> signs(r);
            for (int j = 0; j < r; ++j) signs[j] = (mask >> j) & 1 ? -1 : 1;
            if (transformed(rb.source, perm, signs) == ra.source &&
                transformed(rb.quot_num, perm, signs) == ra.quot_num &&
                transformed(rb.quot_den, perm, signs) == ra.quot_den)
                return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> duplicate_scan(const Catalog& cat) {
    std::vector<std::pair<std::string, std::string>> out;
    for (size_t i = 0; i < cat.entries.size(); ++i)
        for (size_t j = i + 1; j < cat.entries.size(); ++j)
            if (same_restriction(cat.entries[i], cat.entries[j]))
                out.emplace_back(cat.entries[i].name, cat.entries[j].name);
    return out;
}

// ---------------------------------------------------------------------------
// Bundled data (generated at configure time from data/*.json)

namespace detail {
extern const char* embedded_catalog_l0;
extern const char* embedded_catalog_l1;
extern const char* embedded_catalog_l2;
}  // namespace detail

const Catalog& builtin_catalog(int ell) {
    static std::map<int, Catalog> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(ell);
    if (it != cache.end()) return it->second;
    const char* text = nullptr;
    switch (ell) {
        case 0: text = detail::embedded_catalog_l0; break;
        case 1: text = detail::embedded_catalog_l1; break;
        case 2: text = detail::embedded_catalog_l2; break;
        default:
            throw std::invalid_argument("no bundled catalog for ell = " + std::to_string(ell));
    }
    return cache.emplace(ell, parse_catalog(text)).first->second;
}

}  // namespace ssmthom
