#include <doctest.h>

#include <algorithm>
#include <set>

#include "partnorm/fixtures.hpp"
#include "partnorm/partition.hpp"
#include "test_support.hpp"

using namespace partnorm;
using test_support::throws_code;

TEST_CASE("cell keys canonicalize order and duplicates") {
    auto key = CellKey::of({"S_2", "S_1", "S_2"});
    CHECK(key.categories == std::vector<SubjectCategoryId>{"S_1", "S_2"});
    CHECK(key.str() == "S_1+S_2");
    CHECK(key.contains("S_1"));
    CHECK(!key.contains("S_3"));
    CHECK(key == CellKey::of({"S_1", "S_2"}));
    CHECK(throws_code(ErrorCode::empty_category_set, [] { CellKey::of({}); }));
}

TEST_CASE("partition groups journals by exact category combination") {
    auto u = Universe::validate({{"a", "", {"X"}},
                                 {"b", "", {"X", "Y"}},
                                 {"c", "", {"Y"}},
                                 {"d", "", {"X", "Y"}}},
                                {});
    auto p = Partition::build(u);
    REQUIRE(p.cells().size() == 3);
    CHECK(p.cells().at(CellKey::of({"X"})) == std::vector<JournalId>{"a"});
    CHECK(p.cells().at(CellKey::of({"Y"})) == std::vector<JournalId>{"c"});
    CHECK(p.cells().at(CellKey::of({"X", "Y"})) == std::vector<JournalId>{"b", "d"});
}

TEST_CASE("partition of a two-category study universe") {
    // 92 journals only in the first category, 63 only in the second, 3 in
    // both: three cells of exactly those sizes.
    std::vector<JournalClassification> journals;
    for (int i = 0; i < 92; ++i) journals.push_back({"first_" + std::to_string(i), "", {"S_1"}});
    for (int i = 0; i < 63; ++i) journals.push_back({"second_" + std::to_string(i), "", {"S_2"}});
    for (int i = 0; i < 3; ++i)
        journals.push_back({"both_" + std::to_string(i), "", {"S_1", "S_2"}});
    auto p = Partition::build(Universe::validate(std::move(journals), {}));
    REQUIRE(p.cells().size() == 3);
    CHECK(p.cells().at(CellKey::of({"S_1"})).size() == 92);
    CHECK(p.cells().at(CellKey::of({"S_2"})).size() == 63);
    CHECK(p.cells().at(CellKey::of({"S_1", "S_2"})).size() == 3);
}

TEST_CASE("partition cells are disjoint and cover the universe") {
    auto u = fixtures::demo_universe();
    auto p = Partition::build(u);
    CHECK(p.cells().size() == 9);
    std::set<JournalId> seen;
    std::size_t total = 0;
    for (const auto& [key, members] : p.cells()) {
        CHECK(!members.empty());
        total += members.size();
        seen.insert(members.begin(), members.end());
        for (const auto& id : members) CHECK(p.cell_of(id) == key);
    }
    CHECK(total == u.journal_count());  // disjoint: no journal counted twice
    CHECK(seen.size() == u.journal_count());
}

TEST_CASE("cell_of returns the exact category set") {
    auto u = fixtures::demo_universe();
    auto p = Partition::build(u);
    CHECK(p.cell_of("J_1") == CellKey::of({"S_1", "S_2", "S_3", "S_4"}));
    CHECK(p.cell_of("J_2") == CellKey::of({"S_5"}));
    CHECK(throws_code(ErrorCode::unknown_journal, [&] { p.cell_of("nope"); }));
}

TEST_CASE("build is order-independent") {
    auto u = fixtures::demo_universe();
    auto journals = u.journals();
    std::reverse(journals.begin(), journals.end());
    auto shuffled = Universe::validate(journals, u.stats_rows());
    CHECK(Partition::build(shuffled) == Partition::build(u));
}

TEST_CASE("single-journal reference domain expands to its cell and category") {
    auto u = fixtures::demo_universe();
    auto p = Partition::build(u);
    PublicationRecord record{"r", {{"J_2", 2004, 10}, {"J_2", 2005, 3}}};

    auto dj = reference_domain(record, p, u, DomainKind::journal);
    CHECK(dj.journals() == std::vector<JournalId>{"J_2"});

    // S_5 is a single-category cell exhausting its category, so the partition
    // and field domains coincide as journal sets with unit weights.
    std::vector<JournalId> s5 = {"J_2", "J_4", "J_8", "J_9", "REST_S_5"};
    auto dp = reference_domain(record, p, u, DomainKind::partition);
    CHECK(dp.journals() == s5);
    auto df = reference_domain(record, p, u, DomainKind::field);
    CHECK(df.journals() == s5);
    for (const auto& [id, w] : df.weights) CHECK(w == 1.0);
}

TEST_CASE("partition domain excludes unrelated cells") {
    auto u = fixtures::demo_universe();
    auto p = Partition::build(u);
    PublicationRecord record{"r", {{"J_3", 2004, 1}}};
    auto dp = reference_domain(record, p, u, DomainKind::partition);
    CHECK(dp.journals() == std::vector<JournalId>{"J_3", "REST_S_6"});
}

TEST_CASE("field domain includes cells the partition domain leaves out") {
    // Four categories chained by overlaps: a record touching cells {A},
    // {A+B}, {B}, {B+C} pulls C into its field domain, so the untouched
    // cells {C} and {C+D} enter D_f (the latter at half weight) while {D}
    // stays outside both domains.
    auto u = Universe::validate({{"jA", "", {"A"}},
                                 {"jAB", "", {"A", "B"}},
                                 {"jB", "", {"B"}},
                                 {"jBC", "", {"B", "C"}},
                                 {"jC", "", {"C"}},
                                 {"jCD", "", {"C", "D"}},
                                 {"jD", "", {"D"}}},
                                {});
    auto p = Partition::build(u);
    PublicationRecord record{
        "r", {{"jA", 2004, 1}, {"jAB", 2004, 1}, {"jB", 2004, 1}, {"jBC", 2004, 1}}};

    auto dp = reference_domain(record, p, u, DomainKind::partition);
    CHECK(dp.journals() == std::vector<JournalId>{"jA", "jAB", "jB", "jBC"});

    auto df = reference_domain(record, p, u, DomainKind::field);
    CHECK(df.journals() == std::vector<JournalId>{"jA", "jAB", "jB", "jBC", "jC", "jCD"});
    CHECK(!df.contains("jD"));
    CHECK(df.weights.at("jCD") == 0.5);  // one of its two categories touched
    CHECK(df.weights.at("jAB") == 1.0);  // both touched
}

TEST_CASE("reference domains are nested for every demonstration record") {
    auto u = fixtures::demo_universe();
    auto p = Partition::build(u);
    for (const auto& record : fixtures::demo_records()) {
        auto dj = reference_domain(record, p, u, DomainKind::journal);
        auto dp = reference_domain(record, p, u, DomainKind::partition);
        auto df = reference_domain(record, p, u, DomainKind::field);
        for (const auto& [id, w] : dj.weights) CHECK(dp.contains(id));
        for (const auto& [id, w] : dp.weights) CHECK(df.contains(id));
        for (const auto& [id, w] : df.weights) {
            CHECK(w > 0.0);
            CHECK(w <= 1.0);
        }
    }
}

TEST_CASE("reference domain rejects records outside the universe") {
    auto u = fixtures::demo_universe();
    auto p = Partition::build(u);
    PublicationRecord record{"r", {{"nope", 2004, 1}}};
    CHECK(throws_code(ErrorCode::unknown_journal,
                      [&] { reference_domain(record, p, u, DomainKind::journal); }));
}
