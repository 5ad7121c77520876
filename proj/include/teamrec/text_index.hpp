#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "teamrec/corpus.hpp"

namespace teamrec {

/// Term frequencies of one document (title + abstract of a paper).
struct DocumentTerms {
    std::string paper_id;
    std::map<std::string, int64_t> term_freq;  // all counts >= 1
    int64_t length = 0;                        // token count

    bool operator==(const DocumentTerms&) const = default;
};

struct CorpusStats {
    int64_t doc_count = 0;
    double avg_len = 0.0;
    std::map<std::string, int64_t> doc_freq;   // df(w) <= doc_count

    bool operator==(const CorpusStats&) const = default;
};

struct Bm25Params {
    double k1 = 1.5;
    double b = 0.75;
};

/// Query text run through the same tokenizer as documents.
struct QueryTerms {
    std::string raw;
    std::map<std::string, int64_t> term_freq;
};

struct TextIndex {
    std::map<std::string, DocumentTerms> docs;  // keyed by paper id
    CorpusStats stats;

    bool operator==(const TextIndex&) const = default;
};

enum class Scorer { Bm25, Tfidf };

/// Lowercase, split on every non-alphanumeric byte, drop empties.
/// No stemming. Tokens found in `stopwords` are dropped when provided.
std::vector<std::string> tokenize(std::string_view text,
                                  const std::set<std::string>* stopwords = nullptr);

QueryTerms make_query(const std::string& text,
                      const std::set<std::string>* stopwords = nullptr);

/// Index every paper's document text. Throws IndexEmpty when no document
/// yields a single token (avg_len would be zero).
TextIndex build_index(const CorpusBundle& bundle,
                      const std::set<std::string>* stopwords = nullptr);

/// Okapi-style score: sum over query terms of
///   c(w,q) * c'(w,d) * ln((|D|+1) / df(w)),
///   c'(w,d) = (k1+1)c(w,d) / (c(w,d) + k1(1 - b + b|d|/avg)).
/// Terms absent from the document contribute 0; empty query scores 0.
double bm25_score(const QueryTerms& query, const DocumentTerms& doc,
                  const CorpusStats& stats, const Bm25Params& params = {});

/// Same IDF with raw term frequency in place of the saturated c'(w,d).
double tfidf_score(const QueryTerms& query, const DocumentTerms& doc,
                   const CorpusStats& stats);

double score_document(const QueryTerms& query, const DocumentTerms& doc,
                      const CorpusStats& stats, Scorer scorer,
                      const Bm25Params& params = {});

/// Element-wise application of the selected scorer. Ids missing from the
/// index are skipped; a note is appended to `warnings` when given.
std::map<std::string, double>
score_documents(const TextIndex& index, const QueryTerms& query,
                const std::vector<std::string>& ids, Scorer scorer,
                const Bm25Params& params = {},
                std::vector<std::string>* warnings = nullptr);

const char* scorer_name(Scorer scorer);

} // namespace teamrec
