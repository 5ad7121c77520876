#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "teamrec/corpus.hpp"
#include "teamrec/errors.hpp"

using namespace teamrec;

namespace {

const char* kFixturePath = TEAMREC_TEST_DATA_DIR "/fixture_corpus.txt";

ParseResult parse_fixture() {
    std::ifstream in(kFixturePath);
    REQUIRE(in.good());
    return parse_corpus(in);
}

ParseResult parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse_corpus(in);
}

} // namespace

TEST_CASE("golden fixture parses to the hand-counted bundle") {
    ParseResult result = parse_fixture();
    const CorpusBundle& bundle = result.bundle;

    CHECK(bundle.papers.size() == 5);
    CHECK(bundle.authors.size() == 7);
    CHECK(result.report.records_parsed == 5);
    CHECK(result.report.records_skipped == 0);
    CHECK(result.report.warnings.empty());

    // Hand count of the fixture's reference lines, frozen before the parser
    // was written: 1 is cited by 2,3,5; 2 by 3; 3 by 4,5.
    std::map<std::string, int64_t> expected{{"1", 3}, {"2", 1}, {"3", 2}, {"4", 0}, {"5", 0}};
    for (const auto& [id, count] : expected) {
        CHECK(bundle.papers.at(id).in_citations == count);
    }

    const PaperRecord& p3 = bundle.papers.at("3");
    CHECK(p3.title == "Scalable co-authorship graph construction");
    CHECK(p3.authors == std::vector<std::string>{"Alice Chen", "Carol Diaz", "David Novak"});
    CHECK(p3.year == 2017);
    CHECK(p3.venue == "WWW");
    CHECK(p3.references == std::vector<std::string>{"1", "2"});

    // Record 4 uses the #year/#conf tag variants and has no abstract.
    const PaperRecord& p4 = bundle.papers.at("4");
    CHECK(p4.year == 2018);
    CHECK(p4.venue == "CCS");
    CHECK(!p4.abstract.has_value());
    CHECK(p4.document_text() == "Network security monitoring at scale");

    const AuthorRecord& alice = bundle.authors.at("Alice Chen");
    CHECK(alice.papers == std::vector<std::string>{"1", "3", "5"});
    CHECK(alice.paper_count == 3);
    CHECK(alice.total_citations == 5);
    const AuthorRecord& bob = bundle.authors.at("Bob Kumar");
    CHECK(bob.paper_count == 2);
    CHECK(bob.total_citations == 4);
    CHECK(bundle.authors.at("Grace Liu").total_citations == 0);
}

TEST_CASE("citation counts match a line-grep of the fixture's #% lines") {
    ParseResult result = parse_fixture();

    std::map<std::string, int64_t> grep_counts;
    for (const auto& [id, paper] : result.bundle.papers) grep_counts[id] = 0;
    std::ifstream in(kFixturePath);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("#%", 0) != 0) continue;
        std::string ref = trim(line.substr(2));
        auto it = grep_counts.find(ref);
        if (it != grep_counts.end()) it->second += 1;
    }

    int64_t total = 0;
    for (const auto& [id, paper] : result.bundle.papers) {
        CHECK(paper.in_citations == grep_counts.at(id));
        total += paper.in_citations;
    }
    CHECK(total == 6);  // resolvable reference lines in the fixture
}

TEST_CASE("compute_citation_counts direct cases") {
    std::map<std::string, PaperRecord> papers;
    papers["a"] = PaperRecord{"a", "t", {"x"}, {}, {}, {"b"}, {}, 0};
    papers["b"] = PaperRecord{"b", "t", {"y"}, {}, {}, {}, {}, 0};

    SUBCASE("single reference") {
        auto counts = compute_citation_counts(papers);
        CHECK(counts.at("b") == 1);
        CHECK(counts.at("a") == 0);
    }
    SUBCASE("no references anywhere") {
        papers["a"].references.clear();
        auto counts = compute_citation_counts(papers);
        CHECK(counts.at("a") == 0);
        CHECK(counts.at("b") == 0);
    }
    SUBCASE("dangling references are ignored") {
        papers["a"].references = {"ghost", "b"};
        auto counts = compute_citation_counts(papers);
        CHECK(counts.at("b") == 1);
        CHECK(counts.size() == 2);
    }
}

TEST_CASE("empty stream yields an empty bundle") {
    ParseResult result = parse_string("");
    CHECK(result.bundle.papers.empty());
    CHECK(result.bundle.authors.empty());
    CHECK(result.report.records_parsed == 0);
    CHECK(result.report.records_skipped == 0);
}

TEST_CASE("records missing title or authors are skipped and counted") {
    ParseResult result = parse_string(
        "#*No authors here\n#index10\n\n"
        "#@Lonely Author\n#index11\n\n"
        "#*Kept\n#@Someone\n#index12\n");
    CHECK(result.bundle.papers.size() == 1);
    CHECK(result.bundle.papers.count("12") == 1);
    CHECK(result.report.records_parsed == 1);
    CHECK(result.report.records_skipped == 2);
}

TEST_CASE("unknown tag produces a recoverable warning with its line number") {
    ParseResult result = parse_string("#*T\n#@A\n#zzz mystery\n#index1\n");
    CHECK(result.bundle.papers.size() == 1);
    REQUIRE(result.report.warnings.size() == 1);
    CHECK(result.report.warnings[0].line == 3);
}

TEST_CASE("duplicate record id keeps the last record and warns") {
    ParseResult result = parse_string(
        "#*First version\n#@A\n#index7\n\n"
        "#*Second version\n#@B\n#index7\n");
    CHECK(result.bundle.papers.size() == 1);
    CHECK(result.bundle.papers.at("7").title == "Second version");
    CHECK(result.bundle.papers.at("7").authors == std::vector<std::string>{"B"});
    REQUIRE(result.report.warnings.size() == 1);
    CHECK(result.report.warnings[0].message.find("duplicate") != std::string::npos);
    // The superseded record's author leaves no trace.
    CHECK(result.bundle.authors.count("A") == 0);
}

TEST_CASE("self-references are dropped at parse time") {
    ParseResult result = parse_string("#*T\n#@A\n#index1\n#%1\n#%2\n");
    CHECK(result.bundle.papers.at("1").references == std::vector<std::string>{"2"});
    CHECK(result.bundle.papers.at("1").in_citations == 0);
}

TEST_CASE("duplicate reference lines collapse to one in-link") {
    ParseResult result = parse_string(
        "#*T\n#@A\n#index1\n#%2\n#%2\n\n"
        "#*U\n#@B\n#index2\n");
    CHECK(result.bundle.papers.at("1").references == std::vector<std::string>{"2"});
    CHECK(result.bundle.papers.at("2").in_citations == 1);
}

TEST_CASE("author lists split on semicolons and commas, trimmed, deduped") {
    ParseResult result = parse_string("#*T\n#@ Ada Lovelace ;Bob;  ; Ada Lovelace , Carol\n#index1\n");
    CHECK(result.bundle.papers.at("1").authors ==
          std::vector<std::string>{"Ada Lovelace", "Bob", "Carol"});
}

TEST_CASE("parsing is deterministic") {
    std::ifstream a(kFixturePath);
    std::ifstream b(kFixturePath);
    CHECK(parse_corpus(a).bundle == parse_corpus(b).bundle);
}

TEST_CASE("author and paper lists are mutually consistent") {
    ParseResult result = parse_fixture();
    const CorpusBundle& bundle = result.bundle;
    for (const auto& [name, author] : bundle.authors) {
        CHECK(author.paper_count == static_cast<int64_t>(author.papers.size()));
        CHECK(author.total_citations >= 0);
        int64_t expected_citations = 0;
        for (const std::string& id : author.papers) {
            REQUIRE(bundle.papers.count(id) == 1);
            const PaperRecord& paper = bundle.papers.at(id);
            CHECK(std::find(paper.authors.begin(), paper.authors.end(), name) != paper.authors.end());
            expected_citations += paper.in_citations;
        }
        CHECK(author.total_citations == expected_citations);
    }
    for (const auto& [id, paper] : bundle.papers) {
        for (const std::string& name : paper.authors) {
            REQUIRE(bundle.authors.count(name) == 1);
            const auto& papers = bundle.authors.at(name).papers;
            CHECK(std::find(papers.begin(), papers.end(), id) != papers.end());
        }
    }
}

TEST_CASE("resolve_author trims and errors on unknown names") {
    ParseResult result = parse_fixture();
    const AuthorRecord& direct = resolve_author(result.bundle, "Alice Chen");
    const AuthorRecord& padded = resolve_author(result.bundle, "  Alice Chen ");
    CHECK(&direct == &padded);
    CHECK_THROWS_AS(resolve_author(result.bundle, "Nonexistent Person"), AuthorNotFound);
    try {
        resolve_author(result.bundle, "Nonexistent Person");
    } catch (const AuthorNotFound& e) {
        CHECK(e.name() == "Nonexistent Person");
    }
}

TEST_CASE("year tag variants and malformed years") {
    ParseResult result = parse_string("#*T\n#@A\n#tnineteen\n#index1\n");
    CHECK(!result.bundle.papers.at("1").year.has_value());
    CHECK(result.report.warnings.size() == 1);

    ParseResult ok = parse_string("#*T\n#@A\n#year2001\n#index1\n");
    CHECK(ok.bundle.papers.at("1").year == 2001);
}

TEST_CASE("windows line endings are tolerated") {
    ParseResult result = parse_string("#*T\r\n#@A; B\r\n#index1\r\n\r\n#*U\r\n#@C\r\n#index2\r\n#%1\r\n");
    CHECK(result.bundle.papers.size() == 2);
    CHECK(result.bundle.papers.at("1").in_citations == 1);
    CHECK(result.bundle.papers.at("1").authors == std::vector<std::string>{"A", "B"});
}
