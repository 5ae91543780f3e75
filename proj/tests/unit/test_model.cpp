#include <gtest/gtest.h>

#include "sesforge/error.hpp"
#include "sesforge/io/rdfxml.hpp"
#include "sesforge/io/turtle.hpp"
#include "sesforge/model/frameworks.hpp"
#include "sesforge/model/validate.hpp"
#include "sesforge/model/vocabulary.hpp"
#include "sesforge/rdf/vocab.hpp"
#include "support.hpp"

using namespace sesforge;
using namespace sesforge::model;
using rdf::Term;
using sesforge::testing::default_vocab;
using sesforge::testing::fixture;
using sesforge::testing::fw_term;
using sesforge::testing::global;
using sesforge::testing::iri;
using sesforge::testing::ses;
namespace vocab = sesforge::rdf::vocab;

namespace {

std::size_t count_typed(const rdf::Graph& g, const Term& cls) {
    return g.subjects(vocab::rdf_type(), cls).size();
}

// Children per first-tier code, recounted straight from the table.
std::map<std::string, std::size_t> tier_counts(const FrameworkSeed& seed) {
    std::map<std::string, std::size_t> out;
    for (const auto& e : seed.tiers) out[e.parent_code.value_or("")]++;
    return out;
}

}  // namespace

TEST(TBox, EightClassesThreeProperties) {
    const auto& v = default_vocab();
    auto tbox = seed_tbox(v);
    EXPECT_EQ(count_typed(tbox, vocab::owl_class()), 8u);
    EXPECT_EQ(count_typed(tbox, vocab::owl_object_property()), 3u);
    EXPECT_TRUE(tbox.contains(v.global_concept(), vocab::rdfs_subclass_of(), v.concept_class()));
    EXPECT_TRUE(tbox.contains(v.local_concept(), vocab::rdfs_subclass_of(), v.concept_class()));
    for (const auto& c : v.classes()) EXPECT_EQ(tbox.objects(c, vocab::rdfs_label()).size(), 1u) << c.value();
    for (const auto& p : v.properties()) EXPECT_EQ(tbox.objects(p, vocab::rdfs_label()).size(), 1u) << p.value();
    EXPECT_TRUE(validate(tbox, v).empty());
    EXPECT_EQ(v.refers_to(), ses("refers_to"));
    EXPECT_EQ(v.local_concept(), ses("LocalConcept"));
}

TEST(TBox, ConfigurableBase) {
    SesVocabulary v(rdf::Namespaces::for_base("http://other.org/core#"));
    EXPECT_EQ(v.study().value(), "http://other.org/core#Study");
    EXPECT_TRUE(v.in_sescore(v.described_by()));
    EXPECT_FALSE(v.in_sescore(ses("Study")));
}

TEST(Globals, MintFindAndDedup) {
    const auto& v = default_vocab();
    rdf::Graph reg;
    bool minted = false;
    auto g1 = ensure_global(reg, v, "RS9_Location", &minted);
    EXPECT_TRUE(minted);
    EXPECT_EQ(g1, global("RS9_Location"));
    EXPECT_TRUE(reg.contains(g1, vocab::rdfs_label(), Term::literal("RS9 Location")));
    auto g2 = ensure_global(reg, v, "RS9_Location", &minted);
    EXPECT_FALSE(minted);
    EXPECT_EQ(g1, g2);
    EXPECT_EQ(reg.size(), 2u);
    EXPECT_FALSE(find_global(reg, v, "Nope").has_value());

    rdf::Graph clash;
    clash.insert(global("Water"), vocab::rdf_type(), v.local_concept());
    EXPECT_THROW(ensure_global(clash, v, "Water"), NormalizeError);
}

TEST(Frameworks, DerivedTierCounts) {
    auto o9 = tier_counts(builtin_framework("Ostrom2009"));
    EXPECT_EQ(o9[""], 4u);
    EXPECT_EQ(o9["RS"], 9u);
    EXPECT_EQ(o9["RU"], 7u);
    EXPECT_EQ(o9["GS"], 8u);
    EXPECT_EQ(o9["U"], 8u);

    auto m14 = tier_counts(builtin_framework("McGinnisOstrom2014"));
    EXPECT_EQ(m14[""], 4u);
    EXPECT_EQ(m14["S"], 7u);
    EXPECT_EQ(m14["RS"], 9u);
    EXPECT_EQ(m14["GS"], 8u);
    EXPECT_EQ(m14["RU"], 4u);

    auto o7 = tier_counts(builtin_framework("Ostrom2007"));
    EXPECT_EQ(o7[""], 3u);
    EXPECT_EQ(o7["RS"], 2u);
    EXPECT_THROW(builtin_framework("Nobody1999"), Error);
}

TEST(Frameworks, SeedCountsMatchTables) {
    const auto& v = default_vocab();
    for (const auto& id : builtin_framework_ids()) {
        const auto& seed = builtin_framework(id);
        rdf::Graph reg = seed_tbox(v);
        auto g = seed_framework(seed, reg, v);
        EXPECT_EQ(count_typed(g, v.local_concept()), seed.tiers.size()) << id;
        EXPECT_EQ(count_typed(g, v.framework()), 1u);
        EXPECT_EQ(count_typed(g, v.study()), 1u);
        EXPECT_EQ(count_typed(g, v.concept_graph()), 1u);
        const auto cg = g.subjects(vocab::rdf_type(), v.concept_graph()).front();
        EXPECT_EQ(g.objects(cg, vocab::skos_member()).size(), seed.first_tier().size()) << id;
        EXPECT_EQ(g.match(std::nullopt, v.refers_to(), std::nullopt).size(), seed.tiers.size());
        // Inverse closure.
        for (const auto& t : g.match(std::nullopt, vocab::skos_narrower(), std::nullopt)) {
            EXPECT_TRUE(g.contains(t.object(), vocab::skos_broader(), t.subject()));
        }
        for (const auto& t : g.match(std::nullopt, vocab::skos_broader(), std::nullopt)) {
            EXPECT_TRUE(g.contains(t.object(), vocab::skos_narrower(), t.subject()));
        }
        auto all = reg + g;
        EXPECT_EQ(validate(all, v).error_count(), 0u) << id << "\n" << validate(all, v).to_text(rdf::PrefixMap::with_builtins());
    }
}

TEST(Frameworks, NamingConvention) {
    const auto& v = default_vocab();
    rdf::Graph reg;
    auto g = seed_framework("Ostrom2009", reg, v);
    const auto rs = fw_term("Ostrom2009", "ResourceSystems_Ostrom2009");
    const auto rs9 = fw_term("Ostrom2009", "RS9_Location_Ostrom2009");
    const auto rs1 = fw_term("Ostrom2009", "RS1_Sector_Ostrom2009");
    EXPECT_TRUE(g.contains(rs, vocab::rdf_type(), v.local_concept()));
    EXPECT_TRUE(g.contains(rs, v.refers_to(), global("ResourceSystems")));
    EXPECT_TRUE(g.contains(rs, vocab::skos_narrower(), rs9));
    EXPECT_TRUE(g.contains(rs1, vocab::rdfs_label(), Term::literal("Sector (e.g., water, forests, pasture, fish)")));
    EXPECT_TRUE(g.contains(fw_term("Ostrom2009", "Ostrom2009_SESFramework"), v.described_by(),
                           fw_term("Ostrom2009", "ConceptGraph_Ostrom2009")));
    // '*' markers are not part of names or labels.
    const auto rs3 = fw_term("Ostrom2009", "RS3_SizeOfResourceSystem_Ostrom2009");
    EXPECT_TRUE(g.contains(rs3, vocab::rdfs_label(), Term::literal("Size of resource system")));

    EXPECT_EQ(camel_slug("Resource systems"), "ResourceSystems");
    EXPECT_EQ(camel_slug("Sector (e.g., water, forests, pasture, fish)"), "Sector");
    EXPECT_EQ(camel_slug("Leadership/entrepreneurship*"), "LeadershipEntrepreneurship");
    EXPECT_EQ(camel_slug("Property-rights systems"), "PropertyRightsSystems");
}

// Versioned-concept identity: the same tier in two frameworks gives two locals that
// share one global; seeding again changes nothing.
TEST(Frameworks, SharedGlobalsAndIdempotentReseed) {
    const auto& v = default_vocab();
    rdf::Graph reg = seed_tbox(v);
    auto a = seed_framework("Ostrom2009", reg, v);
    auto b = seed_framework("McGinnisOstrom2014", reg, v);
    const auto l9 = fw_term("Ostrom2009", "RS9_Location_Ostrom2009");
    const auto l14 = fw_term("McGinnisOstrom2014", "RS9_Location_McGinnisOstrom2014");
    EXPECT_NE(l9, l14);
    EXPECT_EQ(a.objects(l9, v.refers_to()), b.objects(l14, v.refers_to()));

    const std::size_t globals_before = count_typed(reg, v.global_concept());
    const rdf::Graph before = reg;
    auto a2 = seed_framework("Ostrom2009", reg, v);
    EXPECT_EQ(a2, a);
    EXPECT_EQ(reg, before);
    EXPECT_EQ(count_typed(reg, v.global_concept()), globals_before);

    std::map<std::string, int> bases;
    for (const auto& gl : reg.subjects(vocab::rdf_type(), v.global_concept())) bases[std::string(rdf::local_name(gl.value()))]++;
    for (const auto& [base, n] : bases) EXPECT_EQ(n, 1) << base;
}

TEST(Frameworks, DataFilesMatchBuiltins) {
    for (const auto& id : builtin_framework_ids()) {
        const auto text = sesforge::testing::read_file(sesforge::testing::data_path("frameworks/" + id + ".txt"));
        EXPECT_EQ(parse_framework_table(id, text), builtin_framework(id)) << id;
        EXPECT_EQ(format_framework_table(builtin_framework(id)), text) << id;
    }
}

TEST(Frameworks, TableParseErrors) {
    EXPECT_THROW(parse_framework_table("X", "A | a |\nA | b |\n"), ParseError);
    EXPECT_THROW(parse_framework_table("X", "A | a | B\n"), ParseError);
    EXPECT_THROW(parse_framework_table("X", "just text\n"), ParseError);
    auto s = parse_framework_table("X", "# c\nA | Alpha |\nA1 | One | A\n");
    ASSERT_EQ(s.tiers.size(), 2u);
    EXPECT_EQ(tier_local_name(s, s.tiers[1]), "A1_One_X");
    EXPECT_EQ(tier_global_base(s.tiers[0]), "Alpha");
}

// --- validation -------------------------------------------------------------------

namespace {

ValidationReport validate_fixture(const std::string& name) {
    const auto& v = default_vocab();
    auto g = io::parse_turtle(fixture("validation/" + name + ".ttl"), rdf::PrefixMap());
    return validate(seed_tbox(v) + g, v);
}

}  // namespace

TEST(Validate, CleanFixture) { EXPECT_TRUE(validate_fixture("clean").empty()); }

// Each rule's constructed violation triggers exactly that one finding.
TEST(Validate, EachRuleHasAnIsolatedTrigger) {
    const std::vector<Rule> rules = {Rule::V1, Rule::V2, Rule::V3, Rule::V4, Rule::V5, Rule::V6, Rule::V7};
    for (Rule r : rules) {
        std::string name(rule_code(r));
        for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        auto report = validate_fixture(name);
        ASSERT_EQ(report.findings.size(), 1u) << name << "\n" << report.to_text(rdf::PrefixMap::with_builtins());
        EXPECT_EQ(report.findings[0].rule, r);
        EXPECT_EQ(report.findings[0].severity, FindingSeverity::Error);
    }
}

TEST(Validate, MultipleRefersToIsWarning) {
    const auto& v = default_vocab();
    auto g = io::parse_turtle(fixture("validation/clean.ttl"), rdf::PrefixMap());
    const auto child = sesforge::testing::case_term("vfix", "Child");
    g.insert(child, v.refers_to(), global("Parent"));
    auto report = validate(seed_tbox(v) + g, v);
    ASSERT_EQ(report.findings.size(), 1u);
    EXPECT_EQ(report.findings[0].rule, Rule::V1);
    EXPECT_EQ(report.findings[0].severity, FindingSeverity::Warning);
    EXPECT_EQ(report.error_count(), 0u);
}

TEST(Validate, RawNaiveOwlHasClassFindings) {
    io::OwlReadOptions opts;
    opts.base = rdf::Namespaces{}.case_ns("ostrom2007");
    auto raw = io::parse_coe_owl(fixture("ostrom2007.owl"), opts);
    auto report = validate(raw, default_vocab());
    EXPECT_GE(report.count(Rule::V6), 1u);
}

TEST(Validate, ReportText) {
    auto report = validate_fixture("v4");
    const auto text = report.to_text(rdf::PrefixMap::with_builtins());
    EXPECT_NE(text.find("V4\terror\t"), std::string::npos);
    EXPECT_TRUE(text.ends_with("1 finding\n"));
    EXPECT_EQ(validate_fixture("clean").to_text(rdf::PrefixMap()), "0 findings\n");
}
