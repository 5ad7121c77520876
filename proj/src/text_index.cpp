#include "teamrec/text_index.hpp"

#include <cctype>
#include <cmath>

#include "teamrec/errors.hpp"

namespace teamrec {

std::vector<std::string> tokenize(std::string_view text,
                                  const std::set<std::string>* stopwords) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (current.empty()) return;
        if (!stopwords || !stopwords->count(current)) tokens.push_back(current);
        current.clear();
    };
    for (char c : text) {
        auto uc = static_cast<unsigned char>(c);
        if (std::isalnum(uc)) {
            current.push_back(static_cast<char>(std::tolower(uc)));
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

QueryTerms make_query(const std::string& text, const std::set<std::string>* stopwords) {
    QueryTerms query{text, {}};
    for (const std::string& token : tokenize(text, stopwords)) {
        query.term_freq[token] += 1;
    }
    return query;
}

TextIndex build_index(const CorpusBundle& bundle, const std::set<std::string>* stopwords) {
    TextIndex index;
    int64_t total_tokens = 0;
    for (const auto& [id, paper] : bundle.papers) {
        DocumentTerms doc{id, {}, 0};
        for (const std::string& token : tokenize(paper.document_text(), stopwords)) {
            doc.term_freq[token] += 1;
            doc.length += 1;
        }
        total_tokens += doc.length;
        for (const auto& [term, count] : doc.term_freq) {
            index.stats.doc_freq[term] += 1;
        }
        index.docs.emplace(id, std::move(doc));
    }
    if (total_tokens == 0) throw IndexEmpty();
    index.stats.doc_count = static_cast<int64_t>(index.docs.size());
    index.stats.avg_len = static_cast<double>(total_tokens) / static_cast<double>(index.stats.doc_count);
    return index;
}

double bm25_score(const QueryTerms& query, const DocumentTerms& doc,
                  const CorpusStats& stats, const Bm25Params& params) {
    double score = 0.0;
    for (const auto& [term, query_freq] : query.term_freq) {
        auto it = doc.term_freq.find(term);
        if (it == doc.term_freq.end()) continue;
        auto doc_freq_it = stats.doc_freq.find(term);
        if (doc_freq_it == stats.doc_freq.end()) continue;
        double tf = static_cast<double>(it->second);
        double saturated = (params.k1 + 1.0) * tf /
            (tf + params.k1 * (1.0 - params.b + params.b * static_cast<double>(doc.length) / stats.avg_len));
        double idf = std::log((static_cast<double>(stats.doc_count) + 1.0) /
                              static_cast<double>(doc_freq_it->second));
        score += static_cast<double>(query_freq) * saturated * idf;
    }
    return score;
}

double tfidf_score(const QueryTerms& query, const DocumentTerms& doc,
                   const CorpusStats& stats) {
    double score = 0.0;
    for (const auto& [term, query_freq] : query.term_freq) {
        auto it = doc.term_freq.find(term);
        if (it == doc.term_freq.end()) continue;
        auto doc_freq_it = stats.doc_freq.find(term);
        if (doc_freq_it == stats.doc_freq.end()) continue;
        double idf = std::log((static_cast<double>(stats.doc_count) + 1.0) /
                              static_cast<double>(doc_freq_it->second));
        score += static_cast<double>(query_freq) * static_cast<double>(it->second) * idf;
    }
    return score;
}

double score_document(const QueryTerms& query, const DocumentTerms& doc,
                      const CorpusStats& stats, Scorer scorer, const Bm25Params& params) {
    return scorer == Scorer::Bm25 ? bm25_score(query, doc, stats, params)
                                  : tfidf_score(query, doc, stats);
}

std::map<std::string, double>
score_documents(const TextIndex& index, const QueryTerms& query,
                const std::vector<std::string>& ids, Scorer scorer,
                const Bm25Params& params, std::vector<std::string>* warnings) {
    std::map<std::string, double> scores;
    for (const std::string& id : ids) {
        auto it = index.docs.find(id);
        if (it == index.docs.end()) {
            if (warnings) warnings->push_back("unknown document id \"" + id + "\" skipped");
            continue;
        }
        scores[id] = score_document(query, it->second, index.stats, scorer, params);
    }
    return scores;
}

const char* scorer_name(Scorer scorer) {
    return scorer == Scorer::Bm25 ? "bm25" : "tfidf";
}

} // namespace teamrec
