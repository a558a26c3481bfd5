// Regenerates a bundled catalog from its seed: runs the miniversal-unfolding
// deriver on every genotype and checks the resulting codimension against the
// classification value recorded in the seed.
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ssmthom/catalog.hpp"
#include "ssmthom/unfolding.hpp"

using nlohmann::ordered_json;

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: make_catalog SEED.json OUT.json\n";
        return 1;
    }
    std::ifstream in(argv[1]);
    if (!in) {
        std::cerr << "cannot open " << argv[1] << "\n";
        return 1;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    ordered_json seed = ordered_json::parse(ss.str());

    ssmthom::Catalog cat;
    cat.ell = seed.at("ell").get<int>();
    cat.max_codim = seed.at("max_codim").get<int>();
    for (const auto& je : seed.at("entries")) {
        ssmthom::GenotypeSpec g =
            ssmthom::parse_genotype(je.at("genotype").dump());
        std::string name = je.at("name").get<std::string>();
        std::string presentation = je.value("presentation", std::string());
        ssmthom::SingularityEntry e;
        try {
            e = ssmthom::derive_entry(g, cat.ell, 0, name, presentation,
                                      "derived by miniversal unfolding");
        } catch (const std::exception& ex) {
            std::cerr << "derivation failed for " << name << ": " << ex.what() << "\n";
            return 1;
        }
        int expected = je.at("codim").get<int>();
        if (e.codim != expected) {
            std::cerr << "codimension mismatch for " << name << ": derived " << e.codim
                      << ", classification says " << expected << "\n";
            return 1;
        }
        cat.entries.push_back(std::move(e));
    }

    ssmthom::ValidationReport rep =
        ssmthom::validate_catalog(cat, std::min(cat.max_codim, ssmthom::mather_bound(cat.ell)));
    if (!rep.ok()) {
        std::cerr << "validation failed:\n" << rep.summary() << "\n";
        return 1;
    }

    std::ofstream out(argv[2]);
    out << ssmthom::catalog_to_json(cat);
    std::cout << argv[2] << ": " << cat.entries.size() << " entries, validation clean\n";
    return 0;
}
