#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "ssmthom/catalog.hpp"
#include "ssmthom/unfolding.hpp"

using namespace ssmthom;

TEST_CASE("mather bound") {
    CHECK(mather_bound(0) == 8);
    CHECK(mather_bound(1) == 14);
    CHECK(mather_bound(2) == 20);
    CHECK(mather_bound(3) == 26);
    CHECK(mather_bound(4) == 31);
    CHECK_THROWS(mather_bound(-1));
}

TEST_CASE("bundled catalogs load and validate") {
    CHECK(builtin_catalog(0).entries.size() == 20);
    CHECK(builtin_catalog(1).entries.size() == 32);
    CHECK(builtin_catalog(2).entries.size() == 14);
    CHECK(validate_catalog(builtin_catalog(0), 8).ok());
    CHECK(validate_catalog(builtin_catalog(1), 14).ok());
    CHECK(validate_catalog(builtin_catalog(2), 15).ok());
    CHECK_THROWS(builtin_catalog(3));

    // the l=0 membership list: A_0..A_8, I_ab for 2<=a<=b, a+b<=8, and the
    // two exceptional algebras
    const Catalog& l0 = builtin_catalog(0);
    for (int i = 0; i <= 8; ++i) CHECK(l0.find("A" + std::to_string(i)) != nullptr);
    for (const char* name : {"I22", "I23", "I24", "I33", "I25", "I34", "I26", "I35", "I44",
                             "x2y3", "x2y3xy2"})
        CHECK(l0.find(name) != nullptr);
}

TEST_CASE("figure codimensions") {
    const Catalog& l0 = builtin_catalog(0);
    CHECK(l0.at("A5").codim == 5);
    CHECK(l0.at("I24").codim == 6);
    CHECK(l0.at("x2y3").codim == 7);
    CHECK(l0.at("x2y3xy2").codim == 8);
    const Catalog& l1 = builtin_catalog(1);
    CHECK(l1.at("A3").codim == 6);
    CHECK(l1.at("III22").codim == 6);
    CHECK(l1.at("I22").codim == 7);
    CHECK(l1.at("I24").codim == 11);
    CHECK(l1.at("d1").codim == 12);
    CHECK(l1.at("d4").codim == 14);
    const Catalog& l2 = builtin_catalog(2);
    CHECK(l2.at("A1").codim == 3);
    CHECK(l2.at("III22").codim == 8);
    CHECK(l2.at("D").codim == 15);
}

TEST_CASE("alias normalization") {
    CHECK(normalize_entry_name("b'24") == "I24");
    CHECK(normalize_entry_name("b24") == "III24");
    CHECK(normalize_entry_name("b_22") == "III22");
    CHECK(normalize_entry_name("III_24") == "III24");
    CHECK(normalize_entry_name("A_2") == "A2");
    CHECK(normalize_entry_name("(x^2,y^3)") == "x2y3");
    const Catalog& l1 = builtin_catalog(1);
    CHECK(l1.at("b'24").name == "I24");
    CHECK(l1.at("b24").name == "III24");
    CHECK(l1.at("I24").name == "I24");
    CHECK_THROWS(l1.at("nonsense"));
}

TEST_CASE("catalog json round trip") {
    const Catalog& l0 = builtin_catalog(0);
    Catalog again = parse_catalog(catalog_to_json(l0));
    CHECK(again.entries.size() == l0.entries.size());
    for (size_t i = 0; i < again.entries.size(); ++i) {
        CHECK(again.entries[i].name == l0.entries[i].name);
        CHECK(again.entries[i].source_weights == l0.entries[i].source_weights);
        CHECK(again.entries[i].target_weights == l0.entries[i].target_weights);
    }
}

TEST_CASE("load errors carry the entry and invariant") {
    CHECK_THROWS_AS(parse_catalog("{ not json"), CatalogError);
    // an entry whose codim differs from its weight count
    Catalog cat = builtin_catalog(0);
    cat.entries[1].codim = 5;
    CHECK_THROWS_AS(parse_catalog(catalog_to_json(cat)), CatalogError);
    try {
        parse_catalog(catalog_to_json(cat));
    } catch (const CatalogError& e) {
        std::string msg = e.what();
        CHECK(msg.find("A1") != std::string::npos);
        CHECK(msg.find("codim") != std::string::npos);
    }
}

TEST_CASE("duplicate names are rejected at load") {
    Catalog cat = builtin_catalog(0).restricted(2);
    cat.entries.push_back(cat.entries[1]);
    CHECK_THROWS_AS(parse_catalog(catalog_to_json(cat)), CatalogError);
}

TEST_CASE("validation reports zero source weights") {
    Catalog cat = builtin_catalog(0).restricted(3);
    cat.entries[1].source_weights[0] = {0};
    ValidationReport rep = validate_catalog(cat, 3);
    CHECK_FALSE(rep.ok());
    bool found = false;
    for (const auto& i : rep.issues)
        if (i.check == "euler" && i.entry == "A1") found = true;
    CHECK(found);
}

TEST_CASE("validation coverage") {
    // data capped below the requested degree
    ValidationReport rep = validate_catalog(builtin_catalog(2), 16);
    CHECK_FALSE(rep.ok());
    bool capped = false;
    for (const auto& i : rep.issues)
        if (i.check == "coverage") capped = true;
    CHECK(capped);
    // restricted catalogs cover their own range
    CHECK(validate_catalog(builtin_catalog(0).restricted(3), 3).ok());
    CHECK(validate_catalog(builtin_catalog(0).restricted_to({"A0", "A1", "A2", "A3"}), 3).ok());
    // a missing codimension is caught
    Catalog missing = builtin_catalog(0).restricted_to(
        {"A0", "A1", "A2", "A4", "I22"});
    missing.max_codim = 4;
    CHECK_FALSE(validate_catalog(missing, 4).ok());
    CHECK_THROWS(validate_catalog(builtin_catalog(0), 9));  // beyond the Mather bound
}

TEST_CASE("duplicate scan") {
    CHECK(duplicate_scan(builtin_catalog(0)).empty());
    CHECK(duplicate_scan(builtin_catalog(1)).empty());
    CHECK(duplicate_scan(builtin_catalog(2)).empty());

    // the same algebra listed twice is flagged
    Catalog cat = builtin_catalog(0).restricted(2);
    SingularityEntry copy = cat.entries[1];
    copy.name = "A1bis";
    cat.entries.push_back(copy);
    auto dup = duplicate_scan(cat);
    REQUIRE(dup.size() == 1);
    CHECK(dup[0].first == "A1");
    CHECK(dup[0].second == "A1bis");

    // two presentations of one algebra share their restriction data
    GenotypeSpec q2;
    q2.variables = {{"x", {1}}, {"y", {1}}, {"z", {1}}};
    std::vector<std::string> names = {"x", "y", "z"};
    auto rel = [&](const std::string& p) {
        return GenotypeRelation{p, VarPoly::parse(p, names), {2}};
    };
    q2.relations = {rel("x^2"), rel("y^2"), rel("z^2-x*y"), rel("x*z+y*z")};
    q2.padded = 0;
    SingularityEntry other = derive_entry(q2, 1, 0, "d1bis", "(x^2,y^2,z^2-x*y,x*z+y*z)");
    Catalog with_both = builtin_catalog(1).restricted_to({"d1"});
    with_both.entries.push_back(other);
    auto pairs = duplicate_scan(with_both);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].first == "d1");
    CHECK(pairs[0].second == "d1bis");
}

TEST_CASE("polynomial parser") {
    std::vector<std::string> names = {"x", "y"};
    VarPoly p = VarPoly::parse("x^2+y^3", names);
    CHECK(p.terms().size() == 2);
    CHECK(p.terms().at({2, 0}) == 1);
    CHECK(p.terms().at({0, 3}) == 1);
    CHECK(VarPoly::parse("xy", names) == VarPoly::parse("x*y", names));
    CHECK(VarPoly::parse("2x y", names) == VarPoly::parse("2*x*y", names));
    VarPoly q = VarPoly::parse("z^2-x*y", {"x", "y", "z"});
    CHECK(q.terms().at({0, 0, 2}) == 1);
    CHECK(q.terms().at({1, 1, 0}) == -1);
    CHECK(q.min_degree() == 2);
    VarPoly dq = q.derivative(2);
    CHECK(dq.terms().at({0, 0, 1}) == 2);
    CHECK_THROWS(VarPoly::parse("x+", names));
    CHECK_THROWS(VarPoly::parse("w", names));
    CHECK_THROWS(VarPoly::parse("", names));
    CHECK(VarPoly::parse("x^2-2x+x", names).str(names) == "-x+x^2");
}

TEST_CASE("genotype invariants") {
    GenotypeSpec g;
    g.variables = {{"x", {1}}};
    g.relations = {{"x", VarPoly::parse("x", {"x"}), {1}}};
    g.padded = 0;
    CHECK_THROWS(g.check());  // relation not in the square of the maximal ideal

    GenotypeSpec h;
    h.variables = {{"x", {1}}, {"y", {1}}};
    h.relations = {{"x^2+y^3", VarPoly::parse("x^2+y^3", {"x", "y"}), {2}}};
    h.padded = 0;
    CHECK_THROWS(h.check());  // not weighted-homogeneous
}

TEST_CASE("catalog files load from disk") {
    std::string path = "test_catalog_tmp.json";
    {
        std::ofstream out(path);
        out << catalog_to_json(builtin_catalog(1));
    }
    Catalog loaded = load_catalog(path);
    CHECK(loaded.entries.size() == 32);
    CHECK(loaded.at("d1").source_weights == builtin_catalog(1).at("d1").source_weights);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_catalog("no_such_file.json"), CatalogError);
}
