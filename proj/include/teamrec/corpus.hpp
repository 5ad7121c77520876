#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace teamrec {

/// One bibliographic record from an Arnetminer/DBLP-style dump.
struct PaperRecord {
    std::string id;
    std::string title;
    std::vector<std::string> authors;      // file order, duplicates dropped
    std::optional<int> year;
    std::optional<std::string> venue;
    std::vector<std::string> references;   // outgoing citations; self-refs dropped
    std::optional<std::string> abstract;
    int64_t in_citations = 0;              // derived: records citing this one

    /// Text used for relevance scoring: title, plus abstract when present.
    std::string document_text() const;

    bool operator==(const PaperRecord&) const = default;
};

struct AuthorRecord {
    std::string name;                      // identity key, whitespace-trimmed
    std::vector<std::string> papers;       // paper ids, sorted
    int64_t paper_count = 0;               // == papers.size()
    int64_t total_citations = 0;           // sum of in_citations over papers

    bool operator==(const AuthorRecord&) const = default;
};

struct CorpusBundle {
    std::map<std::string, PaperRecord> papers;
    std::map<std::string, AuthorRecord> authors;

    bool operator==(const CorpusBundle&) const = default;
};

struct ParseWarning {
    std::size_t line = 0;
    std::string message;
};

struct ParseReport {
    std::size_t records_parsed = 0;
    std::size_t records_skipped = 0;       // missing title, authors, or id
    std::vector<ParseWarning> warnings;
};

struct ParseResult {
    CorpusBundle bundle;
    ParseReport report;
};

/// Parse a line-oriented citation-record stream.
///
/// Grammar (UTF-8, one record per block, blank line separates records):
///   #*<title>  #@<authors>  #t<year> | #year<year>  #c<venue> | #conf<venue>
///   #index<id>  #%<referenced id> (repeatable)  #!<abstract>
///
/// Authors split on ';' and ',', trimmed, empties and duplicates dropped.
/// Unknown '#' tags produce a warning with the line number and are skipped.
/// A duplicate record id keeps the last record seen and emits a warning.
/// in_citations is populated from in-links before returning.
ParseResult parse_corpus(std::istream& input);

/// Number of records listing each id in their references.
/// References to ids absent from the map are ignored.
std::map<std::string, int64_t>
compute_citation_counts(const std::map<std::string, PaperRecord>& papers);

/// Exact-match lookup after whitespace trimming. Throws AuthorNotFound.
const AuthorRecord& resolve_author(const CorpusBundle& bundle, const std::string& name);

/// Strip leading/trailing ASCII whitespace.
std::string trim(const std::string& s);

} // namespace teamrec
