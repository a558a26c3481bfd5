// Command-line front end: compute / derive / apply / hierarchy / sumcheck /
// catalog validate / catalog list, with text, JSON and LaTeX output.
// Exit codes: 0 success, 1 usage, 2 mathematical failure, 3 invalid catalog.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ssmthom/apps.hpp"
#include "ssmthom/render.hpp"
#include "ssmthom/unfolding.hpp"

using namespace ssmthom;
using nlohmann::ordered_json;

namespace {

Catalog get_catalog(int ell, const std::string& path) {
    if (path.empty()) return builtin_catalog(ell);
    Catalog cat = load_catalog(path);
    if (cat.ell != ell)
        throw std::invalid_argument("catalog file is for ell = " + std::to_string(cat.ell));
    return cat;
}

int run_compute(const std::string& entry, int ell, int degree, const std::string& basis,
                const std::string& format, const std::string& catalog_path) {
    Catalog cat = get_catalog(ell, catalog_path);
    SsmPolynomial T = ssm_thom(entry, ell, degree, cat);
    Basis b = parse_basis(basis);
    Format f = parse_format(format);
    BasisExpansion expansion;
    if (b == Basis::schur) expansion = to_schur(T.series);
    if (b == Basis::schur_tilde) expansion = to_schur_tilde(T.series, degree);
    switch (f) {
        case Format::text:
            std::cout << (b == Basis::chern ? render_chern_text(T.series)
                                            : render_expansion_text(expansion))
                      << "\n";
            break;
        case Format::latex:
            std::cout << (b == Basis::chern ? render_chern_latex(T.series)
                                            : render_expansion_latex(expansion))
                      << "\n";
            break;
        case Format::json:
            std::cout << compute_document_json(T.entry, ell, degree, basis, T.series,
                                               b == Basis::chern ? nullptr : &expansion);
            break;
    }
    return 0;
}

int run_derive(const std::string& genotype_path, int ell, int jet_bound,
               const std::string& name, const std::string& presentation) {
    std::ifstream in(genotype_path);
    if (!in) throw std::invalid_argument("cannot open genotype file '" + genotype_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    GenotypeSpec g = parse_genotype(ss.str());
    SingularityEntry e = derive_entry(g, ell, jet_bound, name, presentation);
    std::cout << entry_to_json(e);
    return 0;
}

int run_apply(const std::string& entry, int ell, int m, int n, long map_degree,
              const std::string& symbolic, const std::string& format,
              const std::string& catalog_path) {
    if (n - m != ell)
        throw std::invalid_argument("target-dim - source-dim must equal ell");
    Catalog cat = get_catalog(ell, catalog_path);
    const SingularityEntry& e = cat.at(entry);
    int d = std::max(m, e.codim);
    SsmPolynomial T = ssm_thom(e.name, ell, d, cat);
    ParamPoly deg = symbolic.empty() ? ParamPoly(Rational(map_degree))
                                     : ParamPoly::variable(symbolic);
    auto chern = chern_of_map(m, n, deg);
    ProjectiveClass ssm = ssm_of_locus(T, chern, m);
    ProjectiveClass csm = csm_from_ssm(ssm);
    EulerProfile profile = euler_profile(csm);

    auto poly_in_t = [](const std::vector<ParamPoly>& p) {
        std::string out;
        for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
            if (p[k].is_zero()) continue;
            std::string body = "(" + p[k].str() + ")";
            if (k == 1) body += "*t";
            if (k > 1) body += "*t^" + std::to_string(k);
            out += (out.empty() ? "" : " + ") + body;
        }
        return out.empty() ? "0" : out;
    };

    Format f = parse_format(format);
    if (f == Format::json) {
        ordered_json doc;
        doc["entry"] = e.name;
        doc["ell"] = ell;
        doc["source_dim"] = m;
        doc["target_dim"] = n;
        doc["map_degree"] = symbolic.empty() ? std::to_string(map_degree) : symbolic;
        doc["chern"] = ordered_json::array();
        for (int k = 1; k <= m; ++k) doc["chern"].push_back(chern[k - 1].coeff(k).str());
        doc["ssm"] = ssm.str();
        doc["csm"] = csm.str();
        doc["degree"] = profile.degree.str();
        doc["chi"] = poly_in_t(profile.chi);
        doc["euler_characteristic"] = profile.euler_characteristic().str();
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    if (f == Format::latex) {
        std::cout << "c(F) = " << render_projective_latex(ProjectiveClass::one(m)) << " + ";
        ProjectiveClass total = ProjectiveClass::one(m);
        for (int k = 1; k <= m; ++k) total += chern[k - 1];
        std::cout << render_projective_latex(total) << "\n";
        std::cout << "s^{sm} = " << render_projective_latex(ssm) << "\n";
        std::cout << "c^{sm} = " << render_projective_latex(csm) << "\n";
        std::cout << "\\deg = " << profile.degree.str() << "\n";
        std::cout << "\\chi(t) = " << poly_in_t(profile.chi) << "\n";
        return 0;
    }
    for (int k = 1; k <= m; ++k)
        std::cout << "c" << k << "(F) = (" << chern[k - 1].coeff(k).str() << ")h^" << k << "\n";
    std::cout << "s^sm = " << ssm.str() << "\n";
    std::cout << "c^sm = " << csm.str() << "\n";
    std::cout << "degree = " << profile.degree.str() << "\n";
    std::cout << "chi(t) = " << poly_in_t(profile.chi) << "\n";
    std::cout << "chi = " << profile.euler_characteristic().str() << "\n";
    return 0;
}

int run_hierarchy(const std::string& lower, const std::string& upper, int ell, int degree,
                  const std::string& catalog_path) {
    Catalog cat = get_catalog(ell, catalog_path);
    HierarchyResult res = hierarchy_test(lower, upper, ell, degree, cat);
    switch (res.verdict) {
        case HierarchyVerdict::below:
            std::cout << "below (witness " << res.witness.str() << ")\n";
            break;
        case HierarchyVerdict::not_below:
            std::cout << "not-below (" << res.detail << ")\n";
            break;
        case HierarchyVerdict::inconclusive:
            std::cout << "inconclusive (" << res.detail << ")\n";
            break;
    }
    return 0;
}

int run_sumcheck(int ell, int degree, bool skip_tilde, const std::string& catalog_path) {
    Catalog cat = get_catalog(ell, catalog_path);
    SumCheckReport rep = sum_check(cat, degree, !skip_tilde);
    if (rep.ok()) {
        std::cout << "PASS (" << rep.entries << " entries, degree " << degree
                  << (rep.tilde_checked ? ", tilde coefficients all 1" : "") << ")\n";
        return 0;
    }
    std::cout << "FAIL: " << rep.detail << "\n";
    return 2;
}

int run_validate(int ell, int degree, const std::string& catalog_path) {
    Catalog cat = get_catalog(ell, catalog_path);
    if (degree < 0) degree = std::min(cat.max_codim, mather_bound(ell));
    ValidationReport rep = validate_catalog(cat, degree);
    std::cout << rep.summary() << "\n";
    return rep.ok() ? 0 : 3;
}

int run_list(int ell, const std::string& catalog_path) {
    Catalog cat = get_catalog(ell, catalog_path);
    for (const auto& e : cat.entries)
        std::cout << e.name << "  codim " << e.codim << "  rank " << e.torus_rank << "  "
                  << e.presentation << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SSM-Thom polynomials of contact singularities by torus interpolation"};
    app.require_subcommand(1);

    std::string entry, basis = "chern", format = "text", catalog_path, genotype_path;
    std::string lower, upper, name = "derived", presentation, symbolic;
    int ell = 0, degree = -1, jet_bound = 0, source_dim = 0, target_dim = 0;
    long map_degree = 0;
    bool skip_tilde = false;

    auto* compute = app.add_subcommand("compute", "SSM-Thom polynomial of one singularity");
    compute->add_option("--entry", entry)->required();
    compute->add_option("--ell", ell)->required();
    compute->add_option("--degree", degree)->required();
    compute->add_option("--basis", basis)->check(CLI::IsMember({"chern", "schur", "tilde"}));
    compute->add_option("--format", format)->check(CLI::IsMember({"text", "json", "latex"}));
    compute->add_option("--catalog", catalog_path);

    auto* derive = app.add_subcommand("derive", "prototype weight data from a genotype");
    derive->add_option("--genotype", genotype_path)->required();
    derive->add_option("--ell", ell)->required();
    derive->add_option("--jet-bound", jet_bound);
    derive->add_option("--name", name);
    derive->add_option("--presentation", presentation);

    auto* apply = app.add_subcommand("apply", "characteristic classes of a singularity locus");
    apply->add_option("--entry", entry)->required();
    apply->add_option("--ell", ell)->required();
    apply->add_option("--source-dim", source_dim)->required();
    apply->add_option("--target-dim", target_dim)->required();
    auto* mdeg = apply->add_option("--map-degree", map_degree);
    auto* sym = apply->add_option("--symbolic", symbolic);
    mdeg->excludes(sym);
    apply->add_option("--format", format)->check(CLI::IsMember({"text", "json", "latex"}));
    apply->add_option("--catalog", catalog_path);

    auto* hierarchy = app.add_subcommand("hierarchy", "adjacency test via Thom polynomials");
    hierarchy->add_option("--lower", lower)->required();
    hierarchy->add_option("--upper", upper)->required();
    hierarchy->add_option("--ell", ell)->required();
    hierarchy->add_option("--degree", degree)->required();
    hierarchy->add_option("--catalog", catalog_path);

    auto* sumcheck = app.add_subcommand("sumcheck", "additivity of SSM-Thom polynomials");
    sumcheck->add_option("--ell", ell)->required();
    sumcheck->add_option("--degree", degree)->required();
    sumcheck->add_flag("--skip-tilde", skip_tilde);
    sumcheck->add_option("--catalog", catalog_path);

    auto* catalog = app.add_subcommand("catalog", "catalog inspection");
    catalog->require_subcommand(1);
    auto* validate = catalog->add_subcommand("validate", "run all catalog checks");
    validate->add_option("--ell", ell)->required();
    validate->add_option("--degree", degree);
    validate->add_option("--catalog", catalog_path);
    auto* list = catalog->add_subcommand("list", "list catalog entries");
    list->add_option("--ell", ell)->required();
    list->add_option("--catalog", catalog_path);

    try {
        app.parse(argc, argv);
        if (compute->parsed())
            return run_compute(entry, ell, degree, basis, format, catalog_path);
        if (derive->parsed())
            return run_derive(genotype_path, ell, jet_bound, name, presentation);
        if (apply->parsed()) {
            if (!mdeg->count() && !sym->count())
                throw std::invalid_argument("need --map-degree or --symbolic");
            return run_apply(entry, ell, source_dim, target_dim, map_degree, symbolic, format,
                             catalog_path);
        }
        if (hierarchy->parsed())
            return run_hierarchy(lower, upper, ell, degree, catalog_path);
        if (sumcheck->parsed()) return run_sumcheck(ell, degree, skip_tilde, catalog_path);
        if (validate->parsed()) return run_validate(ell, degree, catalog_path);
        if (list->parsed()) return run_list(ell, catalog_path);
        return 1;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const CatalogError& e) {
        std::cerr << "catalog error: " << e.what() << "\n";
        return 3;
    } catch (const SolveError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
