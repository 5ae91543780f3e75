#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "sesforge/error.hpp"
#include "sesforge/io/rdfxml.hpp"
#include "sesforge/io/turtle.hpp"
#include "sesforge/model/frameworks.hpp"
#include "sesforge/store/query.hpp"
#include "sesforge/store/registry.hpp"
#include "support.hpp"

using namespace sesforge;
using namespace sesforge::store;
using rdf::Term;
using sesforge::testing::as_rows;
using sesforge::testing::case_term;
using sesforge::testing::fixture;
using sesforge::testing::fw_term;
using sesforge::testing::global;
using sesforge::testing::GraphGen;
using sesforge::testing::iri;
using sesforge::testing::ses;
namespace vocab = sesforge::rdf::vocab;
namespace fs = std::filesystem;

namespace {

rdf::Graph read_owl(const Registry& reg, const std::string& name, const std::string& case_id) {
    io::OwlReadOptions opts;
    opts.base = reg.namespaces().case_ns(case_id);
    return io::parse_coe_owl(fixture(name), opts);
}

Registry seeded(std::initializer_list<const char*> ids) {
    Registry reg;
    for (const char* id : ids) reg.seed_framework(model::builtin_framework(id));
    return reg;
}

std::set<Term> column(const BindingSet& b, const std::string& var) {
    std::set<Term> out;
    for (const auto& r : b.rows) out.insert(r.at(var));
    return out;
}

}  // namespace

TEST(Registry, FreshHasTBoxOnly) {
    Registry reg;
    EXPECT_FALSE(reg.tbox().empty());
    EXPECT_TRUE(reg.globals().empty());
    EXPECT_EQ(reg.union_graph(), reg.tbox());
    EXPECT_TRUE(is_valid_case_id("cox2014"));
    EXPECT_TRUE(is_valid_case_id("a-b_c1"));
    EXPECT_FALSE(is_valid_case_id("a.b"));
    EXPECT_FALSE(is_valid_case_id(""));
    EXPECT_FALSE(is_valid_case_id("a/b"));
    EXPECT_FALSE(is_valid_case_id(".."));
}

TEST(Registry, SeedIsIdempotentPerFramework) {
    auto reg = seeded({"Ostrom2009"});
    const Registry before = reg;
    reg.seed_framework(model::builtin_framework("Ostrom2009"));
    EXPECT_EQ(reg, before);
    auto altered = model::builtin_framework("Ostrom2009");
    altered.tiers.pop_back();
    EXPECT_THROW(reg.seed_framework(altered), RegistryError);
    EXPECT_EQ(reg, before);
}

TEST(Registry, IngestDuplicateAndDangling) {
    auto reg = seeded({"McGinnisOstrom2014"});
    auto res = reg.ingest_case("cox2014", read_owl(reg, "cox2014.owl", "cox2014"));
    EXPECT_EQ(res.report.minted_globals.size(), 4u);
    EXPECT_TRUE(reg.has_case("cox2014"));
    EXPECT_EQ(reg.cases().at("cox2014"), res.graph);
    EXPECT_TRUE(reg.globals().contains(global("Water"), vocab::rdf_type(), reg.vocabulary().global_concept()));

    const Registry snapshot = reg;
    EXPECT_THROW(reg.ingest_case("cox2014", read_owl(reg, "cox2014.owl", "cox2014")), RegistryError);
    EXPECT_THROW(reg.add_case("bad/id", rdf::Graph{}), RegistryError);
    EXPECT_EQ(reg, snapshot);

    // An already-normalized case whose local points at a global nobody declared.
    const auto& v = reg.vocabulary();
    rdf::Graph dangling;
    const auto st = case_term("d", "S"), cg = case_term("d", "G"), c = case_term("d", "C");
    dangling.insert(st, vocab::rdf_type(), v.study());
    dangling.insert(st, v.described_by(), cg);
    dangling.insert(cg, vocab::rdf_type(), v.concept_graph());
    dangling.insert(cg, vocab::skos_member(), c);
    dangling.insert(c, vocab::rdf_type(), v.local_concept());
    dangling.insert(c, v.refers_to(), global("Missing"));
    try {
        reg.add_case("d", dangling);
        FAIL() << "expected rejection";
    } catch (const RegistryError& e) {
        EXPECT_GE(e.findings().count(model::Rule::V2), 1u);
    }
    EXPECT_EQ(reg, snapshot);

    dangling.insert(global("Missing"), vocab::rdf_type(), v.global_concept());
    EXPECT_NO_THROW(reg.add_case("d", dangling));
}

TEST(Registry, NoTemplateRejectedUnchanged) {
    Registry reg;
    const Registry before = reg;
    EXPECT_THROW(reg.ingest_case("nt", read_owl(reg, "no_template.owl", "nt")), NormalizeError);
    EXPECT_EQ(reg, before);
}

TEST(Registry, CrossCaseLinkThroughSharedGlobal) {
    Registry reg;
    const auto& v = reg.vocabulary();
    auto make = [&](const std::string& id, const std::string& local) {
        rdf::Graph g;
        const auto st = case_term(id, "Study_" + id), cg = case_term(id, "ConceptGraph_" + id);
        g.insert(st, v.described_by(), cg);
        g.insert(cg, vocab::skos_member(), case_term(id, local));
        return g;
    };
    reg.ingest_case("alpha", make("alpha", "Water_Smith2012"));
    auto second = reg.ingest_case("beta", make("beta", "Water_Lee1999"));
    EXPECT_TRUE(second.report.minted_globals.empty());
    auto b = bgp_query(reg, parse_query("?a refers_to ?g . ?b refers_to ?g", reg.prefixes()));
    std::set<std::pair<Term, Term>> pairs;
    for (const auto& r : b.rows) pairs.emplace(r.at("a"), r.at("b"));
    EXPECT_TRUE(pairs.count({case_term("alpha", "Water_Smith2012"), case_term("beta", "Water_Lee1999")}));
}

// --- query -----------------------------------------------------------------------

TEST(Query, Parsing) {
    auto pm = rdf::PrefixMap::with_builtins();
    auto q = parse_query("?x refers_to ?g  # comment\n?g a sescore:GlobalConcept . ?x rdfs:label \"A \\\"b\\\"\"@en", pm);
    ASSERT_EQ(q.patterns.size(), 3u);
    EXPECT_EQ(q.patterns[0].predicate, ses("refers_to"));
    EXPECT_EQ(q.patterns[1].predicate, vocab::rdf_type());
    EXPECT_EQ(q.patterns[2].object, Term::lang_literal("A \"b\"", "en"));
    EXPECT_EQ(q.variables(), (std::vector<std::string>{"g", "x"}));
    auto q2 = parse_query("<http://x.org/s> ?p \"1\"^^xsd:integer", pm);
    EXPECT_EQ(q2.patterns[0].object, Term::typed_literal("1", std::string(vocab::kXsd) + "integer"));

    EXPECT_THROW(parse_query("", pm), ParseError);
    EXPECT_THROW(parse_query("?x ?y", pm), ParseError);
    EXPECT_THROW(parse_query("\"lit\" ?p ?o", pm), ParseError);
    EXPECT_THROW(parse_query("?s ?p \"unterminated", pm), ParseError);
    try {
        parse_query("?s zz:p ?o", pm);
        FAIL() << "expected error";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("unknown prefix 'zz'"), std::string::npos);
    }
}

TEST(Query, SeededFrameworkExamples) {
    auto reg = seeded({"Ostrom2009", "McGinnisOstrom2014"});
    auto pm = reg.prefixes();
    auto all = bgp_query(reg, parse_query("?x refers_to ?g", pm));
    EXPECT_EQ(all.rows.size(), 36u + 32u);

    auto rs = bgp_query(reg, parse_query("?x refers_to global:ResourceSystems", pm));
    EXPECT_EQ(column(rs, "x"), (std::set<Term>{fw_term("Ostrom2009", "ResourceSystems_Ostrom2009"),
                                               fw_term("McGinnisOstrom2014", "ResourceSystems_McGinnisOstrom2014")}));

    auto none = bgp_query(reg, parse_query("?x refers_to global:NoSuchThing", pm));
    EXPECT_TRUE(none.rows.empty());
    EXPECT_EQ(none.to_tsv(pm), "?x\n");

    auto tsv = rs.to_tsv(pm);
    EXPECT_TRUE(tsv.starts_with("?x\n"));
    EXPECT_NE(tsv.find("Ostrom2009:ResourceSystems_Ostrom2009"), std::string::npos);
}

// Oracle equivalence against a nested-loop join that never uses the indexes.
TEST(Query, MatchesNestedLoopOracle) {
    GraphGen gen(31337);
    for (int round = 0; round < 5; ++round) {
        rdf::Graph g;
        while (g.size() < 400) g.insert(gen.subject(), gen.predicate(), gen.object());
        for (int i = 0; i < 40; ++i) {
            auto q = sesforge::testing::random_pattern(gen, g, 3);
            auto got = bgp_query(g, q);
            auto expected = sesforge::testing::nested_loop_join(g, q);
            EXPECT_EQ(as_rows(got), expected);
            EXPECT_EQ(got.rows.size(), expected.size());  // no duplicate rows
            EXPECT_TRUE(std::is_sorted(got.variables.begin(), got.variables.end()));
        }
    }
}

TEST(Query, EmptyPatternAndGroundPattern) {
    rdf::Graph g;
    const auto a = iri("http://x.org/a"), p = iri("http://x.org/p");
    g.insert(a, p, a);
    QueryPattern ground{{{a, p, a}}};
    EXPECT_EQ(bgp_query(g, ground).rows.size(), 1u);
    QueryPattern miss{{{a, p, p}}};
    EXPECT_TRUE(bgp_query(g, miss).rows.empty());
    QueryPattern self{{{Term::variable("x"), p, Term::variable("x")}}};
    EXPECT_EQ(bgp_query(g, self).rows.size(), 1u);
}

// --- search ------------------------------------------------------------------------

TEST(Search, Tokenize) {
    EXPECT_EQ(tokenize("ResourceSystems_McGinnisOstrom2014"),
              (std::vector<std::string>{"resource", "systems", "mc", "ginnis", "ostrom2014"}));
    EXPECT_EQ(tokenize("RS9 Location"), (std::vector<std::string>{"rs9", "location"}));
    EXPECT_EQ(tokenize("HTTPServer"), (std::vector<std::string>{"http", "server"}));
    EXPECT_TRUE(tokenize("  --  ").empty());
}

TEST(Search, RankedAndMatchesOracle) {
    auto reg = seeded({"Ostrom2009", "McGinnisOstrom2014"});
    reg.ingest_case("cox2014", read_owl(reg, "cox2014.owl", "cox2014"));
    auto hits = keyword_search(reg, "irrigation");
    ASSERT_FALSE(hits.empty());
    EXPECT_EQ(hits.front().iri, case_term("cox2014", "IrrigationSystem_Cox2014"));

    for (std::string q : {"resource system", "location", "water", "rules", "gov sys", "zzz", "Ostrom2009 sector"}) {
        auto got = keyword_search(reg, q);
        auto expected = sesforge::testing::keyword_oracle(reg.union_graph(), q);
        std::map<std::string, std::size_t> got_map;
        for (const auto& h : got) got_map[h.iri.value()] = h.score;
        EXPECT_EQ(got_map, expected) << q;
        for (std::size_t i = 1; i < got.size(); ++i) {
            EXPECT_TRUE(got[i - 1].score > got[i].score ||
                        (got[i - 1].score == got[i].score && got[i - 1].iri.value() < got[i].iri.value()));
        }
    }
    EXPECT_TRUE(keyword_search(reg, "").empty());
}

// --- hierarchy ---------------------------------------------------------------------

TEST(Hierarchy, SeededExamples) {
    auto reg = seeded({"Ostrom2009"});
    auto kids = hierarchy(reg, fw_term("Ostrom2009", "ResourceSystems_Ostrom2009"), Direction::Narrower);
    EXPECT_EQ(kids.size(), 9u);
    auto leaf = hierarchy(reg, fw_term("Ostrom2009", "RS9_Location_Ostrom2009"), Direction::Narrower);
    EXPECT_TRUE(leaf.empty());
    auto up = hierarchy(reg, fw_term("Ostrom2009", "RS9_Location_Ostrom2009"), Direction::Broader);
    EXPECT_EQ(up, (std::vector<Term>{fw_term("Ostrom2009", "ResourceSystems_Ostrom2009")}));
    EXPECT_THROW(hierarchy(reg, iri("http://x.org/unknown"), Direction::Narrower), RegistryError);
}

TEST(Hierarchy, TransitiveAndCyclic) {
    rdf::Graph g;
    const auto a = iri("http://x.org/a"), b = iri("http://x.org/b"), c = iri("http://x.org/c");
    g.insert(a, vocab::skos_narrower(), b);
    g.insert(b, vocab::skos_narrower(), c);
    g.insert(c, vocab::skos_narrower(), a);
    auto down = hierarchy(g, a, Direction::Narrower);
    EXPECT_EQ(std::set<Term>(down.begin(), down.end()), (std::set<Term>{b, c}));
    EXPECT_EQ(hierarchy(g, a, Direction::Broader).size(), 0u);
}

// --- persistence -------------------------------------------------------------------

TEST(Persist, RoundTripWithCases) {
    auto reg = seeded({"Ostrom2009", "McGinnisOstrom2014"});
    reg.ingest_case("cox2014", read_owl(reg, "cox2014.owl", "cox2014"));
    reg.ingest_case("ostrom2007", read_owl(reg, "ostrom2007.owl", "ostrom2007"));
    const auto dir = sesforge::testing::scratch_dir("persist-rt");
    save(reg, dir);
    auto back = load(dir);
    EXPECT_EQ(back, reg);
    EXPECT_EQ(manifest(back), manifest(reg));
    EXPECT_TRUE(fs::exists(dir / "manifest.txt"));
    EXPECT_TRUE(fs::exists(dir / "cases" / "cox2014.ttl"));
    EXPECT_TRUE(fs::exists(dir / "frameworks" / "Ostrom2009.ttl"));

    // Saving twice is stable.
    const auto m1 = sesforge::testing::read_file(dir / "manifest.txt");
    save(back, dir);
    EXPECT_EQ(sesforge::testing::read_file(dir / "manifest.txt"), m1);
}

TEST(Persist, RandomRegistriesRoundTrip) {
    GraphGen gen(4242);
    for (int i = 0; i < 20; ++i) {
        Registry reg;
        std::map<std::string, rdf::Graph> fws, cases;
        for (std::size_t k = gen.pick(3); k > 0; --k) fws["F" + std::to_string(gen.pick(50)) + "x2000"] = gen.graph(60);
        for (std::size_t k = gen.pick(4); k > 0; --k) cases["c" + std::to_string(gen.pick(50))] = gen.graph(60);
        reg.assign(reg.tbox(), gen.graph(40), fws, cases);
        const auto dir = sesforge::testing::scratch_dir("persist-rand");
        save(reg, dir);
        EXPECT_EQ(load(dir), reg) << i;
    }
}

TEST(Persist, MissingAndEmptyDirectories) {
    const auto dir = sesforge::testing::scratch_dir("persist-empty");
    EXPECT_EQ(load(dir), Registry{});
    EXPECT_EQ(load(dir / "not-there"), Registry{});
    std::ofstream(dir / "stray.txt") << "x";
    EXPECT_THROW(load(dir), RegistryError);
}

TEST(Persist, CorruptionIsReported) {
    auto reg = seeded({"Ostrom2007"});
    const auto dir = sesforge::testing::scratch_dir("persist-corrupt");
    save(reg, dir);

    const auto file = dir / "frameworks" / "Ostrom2007.ttl";
    const auto original = sesforge::testing::read_file(file);
    std::ofstream(file, std::ios::trunc) << original << "this is not turtle\n";
    try {
        load(dir);
        FAIL() << "expected error";
    } catch (const RegistryError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("Ostrom2007.ttl:"), std::string::npos) << msg;
    }

    // Syntactically valid but different content: hash mismatch.
    std::ofstream(file, std::ios::trunc) << original << "# trailing comment\n";
    EXPECT_THROW(load(dir), RegistryError);

    std::ofstream(file, std::ios::trunc) << original;
    EXPECT_EQ(load(dir), reg);
    fs::remove(file);
    EXPECT_THROW(load(dir), RegistryError);
}

TEST(Persist, Sha256KnownVector) {
    EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
