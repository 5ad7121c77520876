#include "teamrec/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <set>
#include <unordered_set>

#include "teamrec/errors.hpp"

namespace teamrec {

namespace {

bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

/// Split an author payload on ';' and ',', trim tokens, drop empties and
/// duplicates while keeping first-occurrence order.
std::vector<std::string> split_authors(const std::string& payload) {
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    std::string current;
    auto flush = [&] {
        std::string name = trim(current);
        current.clear();
        if (name.empty() || !seen.insert(name).second) return;
        out.push_back(std::move(name));
    };
    for (char c : payload) {
        if (c == ';' || c == ',') {
            flush();
        } else {
            current.push_back(c);
        }
    }
    flush();
    return out;
}

/// Record under construction while scanning one blank-line-delimited block.
struct PendingRecord {
    std::string id;
    std::string title;
    std::vector<std::string> authors;
    std::optional<int> year;
    std::optional<std::string> venue;
    std::vector<std::string> references;
    std::optional<std::string> abstract;
    bool saw_any_tag = false;
};

} // namespace

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && is_space(s[begin])) ++begin;
    while (end > begin && is_space(s[end - 1])) --end;
    return s.substr(begin, end - begin);
}

std::string PaperRecord::document_text() const {
    if (!abstract) return title;
    return title + " " + *abstract;
}

ParseResult parse_corpus(std::istream& input) {
    ParseResult result;
    CorpusBundle& bundle = result.bundle;
    ParseReport& report = result.report;

    PendingRecord pending;
    std::size_t line_no = 0;

    auto warn = [&](std::size_t line, std::string message) {
        report.warnings.push_back({line, std::move(message)});
    };

    auto flush_record = [&] {
        PendingRecord rec = std::exchange(pending, PendingRecord{});
        if (!rec.saw_any_tag) return;
        if (rec.title.empty() || rec.authors.empty() || rec.id.empty()) {
            ++report.records_skipped;
            return;
        }
        // Self-references are dropped; duplicate reference lines collapse so
        // that one citing record contributes at most one in-link per target.
        std::vector<std::string> refs;
        std::unordered_set<std::string> seen;
        for (const std::string& ref : rec.references) {
            if (ref == rec.id || !seen.insert(ref).second) continue;
            refs.push_back(ref);
        }
        PaperRecord paper{rec.id, rec.title, std::move(rec.authors), rec.year,
                          rec.venue, std::move(refs), rec.abstract, 0};
        auto [it, inserted] = bundle.papers.insert_or_assign(rec.id, std::move(paper));
        if (!inserted) {
            warn(line_no, "duplicate record id \"" + rec.id + "\": last record wins");
        }
        ++report.records_parsed;
    };

    std::string line;
    while (std::getline(input, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) {
            flush_record();
            continue;
        }
        if (line[0] != '#') {
            warn(line_no, "line does not start with a '#' tag");
            continue;
        }
        pending.saw_any_tag = true;
        // Longest tags first: #index before #%/#i, #year before #t, #conf before #c.
        if (line.rfind("#index", 0) == 0) {
            pending.id = trim(line.substr(6));
        } else if (line.rfind("#year", 0) == 0 || line.rfind("#t", 0) == 0) {
            std::string payload = trim(line.substr(line[1] == 'y' ? 5 : 2));
            int year = 0;
            auto [ptr, ec] = std::from_chars(payload.data(), payload.data() + payload.size(), year);
            if (ec == std::errc() && ptr == payload.data() + payload.size() && !payload.empty()) {
                pending.year = year;
            } else if (!payload.empty()) {
                warn(line_no, "unparseable year \"" + payload + "\"");
            }
        } else if (line.rfind("#conf", 0) == 0 || line.rfind("#c", 0) == 0) {
            std::string payload = trim(line.substr(line.rfind("#conf", 0) == 0 ? 5 : 2));
            if (!payload.empty()) pending.venue = payload;
        } else if (line.rfind("#*", 0) == 0) {
            pending.title = trim(line.substr(2));
        } else if (line.rfind("#@", 0) == 0) {
            pending.authors = split_authors(line.substr(2));
        } else if (line.rfind("#%", 0) == 0) {
            std::string ref = trim(line.substr(2));
            if (!ref.empty()) pending.references.push_back(ref);
        } else if (line.rfind("#!", 0) == 0) {
            std::string payload = trim(line.substr(2));
            if (!payload.empty()) pending.abstract = payload;
        } else {
            warn(line_no, "unknown tag in line \"" + line.substr(0, std::min<std::size_t>(line.size(), 32)) + "\"");
        }
    }
    flush_record();

    auto counts = compute_citation_counts(bundle.papers);
    for (auto& [id, paper] : bundle.papers) {
        paper.in_citations = counts.at(id);
    }

    // Author registry, derived from papers in sorted-id order.
    for (const auto& [id, paper] : bundle.papers) {
        for (const std::string& name : paper.authors) {
            AuthorRecord& author = bundle.authors.try_emplace(name, AuthorRecord{name, {}, 0, 0}).first->second;
            author.papers.push_back(id);
            author.paper_count += 1;
            author.total_citations += paper.in_citations;
        }
    }
    return result;
}

std::map<std::string, int64_t>
compute_citation_counts(const std::map<std::string, PaperRecord>& papers) {
    std::map<std::string, int64_t> counts;
    for (const auto& [id, paper] : papers) counts[id] = 0;
    for (const auto& [id, paper] : papers) {
        for (const std::string& ref : paper.references) {
            auto it = counts.find(ref);
            if (it != counts.end()) it->second += 1;   // dangling refs tolerated
        }
    }
    return counts;
}

const AuthorRecord& resolve_author(const CorpusBundle& bundle, const std::string& name) {
    auto it = bundle.authors.find(trim(name));
    if (it == bundle.authors.end()) throw AuthorNotFound(trim(name));
    return it->second;
}

} // namespace teamrec
