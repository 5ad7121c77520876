#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "teamrec/errors.hpp"
#include "teamrec/output.hpp"
#include "teamrec/ranker.hpp"
#include "teamrec/snapshot.hpp"

namespace py = pybind11;
using namespace teamrec;

namespace {

/// Convenience wrapper bundling the query-independent pipeline state.
struct Engine {
    CorpusBundle bundle;
    CollabIndex collab;
    TextIndex index;
    WeightedAuthorGraph citation;
    ParseReport report;

    static Engine from_parse(ParseResult parsed) {
        Engine engine;
        engine.bundle = std::move(parsed.bundle);
        engine.report = std::move(parsed.report);
        engine.finish();
        return engine;
    }

    static Engine from_corpus_file(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open corpus file \"" + path + "\"");
        return from_parse(parse_corpus(in));
    }

    static Engine from_corpus_text(const std::string& text) {
        std::istringstream in(text);
        return from_parse(parse_corpus(in));
    }

    static Engine from_snapshot(const std::string& path) {
        Snapshot snapshot = load_snapshot_file(path);
        Engine engine;
        engine.bundle = std::move(snapshot.bundle);
        engine.index = std::move(snapshot.index);
        engine.citation = std::move(snapshot.citation);
        engine.collab = build_collab_index(engine.bundle);
        return engine;
    }

    void finish() {
        collab = build_collab_index(bundle);
        try {
            index = build_index(bundle);
        } catch (const IndexEmpty&) {
            // Empty corpora keep an empty index; scoring then yields no weight.
        }
        citation = build_citation_graph(bundle, collab);
    }

    void save(const std::string& path) const {
        save_snapshot_file(path, Snapshot{bundle, index, citation});
    }

    Role classify_author(const std::string& name, const RoleCriterion& criterion) const {
        return classify(resolve_author(bundle, name), citation, criterion);
    }

    WeightedAuthorGraph blended_for(const std::string& query_text, Scorer scorer,
                                    const Bm25Params& params) const {
        QueryTerms query = make_query(query_text);
        return blend(citation, build_query_graph(bundle, collab, index, query, scorer, params));
    }

    TeamRecommendation recommend(const RecommendRequest& request) const {
        return recommend_team(bundle, collab, index, citation, request);
    }
};

} // namespace

PYBIND11_MODULE(_teamrec, m) {
    m.doc() = "Academic team recommendation over citation-query blended co-authorship graphs";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<AuthorNotFound>(m, "AuthorNotFoundError", error);
    py::register_exception<IndexEmpty>(m, "IndexEmptyError", error);
    py::register_exception<EmptyEdgeSet>(m, "EmptyEdgeSetError", error);
    py::register_exception<GraphShapeMismatch>(m, "GraphShapeMismatchError", error);
    py::register_exception<SameNode>(m, "SameNodeError", error);
    py::register_exception<InvalidRequest>(m, "InvalidRequestError", error);
    py::register_exception<SnapshotError>(m, "SnapshotError", error);

    py::enum_<Role>(m, "Role")
        .value("STUDENT", Role::Student)
        .value("ASSISTANT_PROFESSOR", Role::AssistantProfessor)
        .value("PRIME_PROFESSOR", Role::PrimeProfessor);
    py::enum_<CriterionKind>(m, "CriterionKind")
        .value("PAPER", CriterionKind::Paper)
        .value("CITATION", CriterionKind::Citation)
        .value("NEIGHBOR", CriterionKind::Neighbor);
    py::enum_<Scorer>(m, "Scorer")
        .value("BM25", Scorer::Bm25)
        .value("TFIDF", Scorer::Tfidf);
    py::enum_<PairingMode>(m, "PairingMode")
        .value("ALIGNED", PairingMode::Aligned)
        .value("PRODUCT", PairingMode::Product);

    py::class_<PaperRecord>(m, "PaperRecord")
        .def(py::init<>())
        .def_readwrite("id", &PaperRecord::id)
        .def_readwrite("title", &PaperRecord::title)
        .def_readwrite("authors", &PaperRecord::authors)
        .def_readwrite("year", &PaperRecord::year)
        .def_readwrite("venue", &PaperRecord::venue)
        .def_readwrite("references", &PaperRecord::references)
        .def_readwrite("abstract", &PaperRecord::abstract)
        .def_readwrite("in_citations", &PaperRecord::in_citations)
        .def("document_text", &PaperRecord::document_text)
        .def("__repr__", [](const PaperRecord& p) {
            return "PaperRecord(id='" + p.id + "', title='" + p.title + "')";
        });

    py::class_<AuthorRecord>(m, "AuthorRecord")
        .def(py::init<>())
        .def_readwrite("name", &AuthorRecord::name)
        .def_readwrite("papers", &AuthorRecord::papers)
        .def_readwrite("paper_count", &AuthorRecord::paper_count)
        .def_readwrite("total_citations", &AuthorRecord::total_citations)
        .def("__repr__", [](const AuthorRecord& a) {
            return "AuthorRecord(name='" + a.name + "', papers=" + std::to_string(a.paper_count) + ")";
        });

    py::class_<CorpusBundle>(m, "CorpusBundle")
        .def(py::init<>())
        .def_readwrite("papers", &CorpusBundle::papers)
        .def_readwrite("authors", &CorpusBundle::authors);

    py::class_<ParseWarning>(m, "ParseWarning")
        .def_readonly("line", &ParseWarning::line)
        .def_readonly("message", &ParseWarning::message);

    py::class_<ParseReport>(m, "ParseReport")
        .def_readonly("records_parsed", &ParseReport::records_parsed)
        .def_readonly("records_skipped", &ParseReport::records_skipped)
        .def_readonly("warnings", &ParseReport::warnings);

    py::class_<DocumentTerms>(m, "DocumentTerms")
        .def_readonly("paper_id", &DocumentTerms::paper_id)
        .def_readonly("term_freq", &DocumentTerms::term_freq)
        .def_readonly("length", &DocumentTerms::length);

    py::class_<CorpusStats>(m, "CorpusStats")
        .def_readonly("doc_count", &CorpusStats::doc_count)
        .def_readonly("avg_len", &CorpusStats::avg_len)
        .def_readonly("doc_freq", &CorpusStats::doc_freq);

    py::class_<Bm25Params>(m, "Bm25Params")
        .def(py::init<>())
        .def(py::init<double, double>(), py::arg("k1"), py::arg("b"))
        .def_readwrite("k1", &Bm25Params::k1)
        .def_readwrite("b", &Bm25Params::b);

    py::class_<QueryTerms>(m, "QueryTerms")
        .def_readonly("raw", &QueryTerms::raw)
        .def_readonly("term_freq", &QueryTerms::term_freq);

    py::class_<TextIndex>(m, "TextIndex")
        .def_readonly("docs", &TextIndex::docs)
        .def_readonly("stats", &TextIndex::stats);

    py::class_<AuthorPair>(m, "AuthorPair")
        .def(py::init<std::string, std::string>())
        .def_readonly("a", &AuthorPair::a)
        .def_readonly("b", &AuthorPair::b)
        .def("__eq__", [](const AuthorPair& lhs, const AuthorPair& rhs) { return lhs == rhs; })
        .def("__lt__", [](const AuthorPair& lhs, const AuthorPair& rhs) { return lhs < rhs; })
        .def("__hash__", [](const AuthorPair& pair) {
            return py::hash(py::make_tuple(pair.a, pair.b));
        })
        .def("__repr__", [](const AuthorPair& pair) {
            return "AuthorPair('" + pair.a + "', '" + pair.b + "')";
        });

    py::class_<WeightedAuthorGraph>(m, "WeightedAuthorGraph")
        .def_readonly("nodes", &WeightedAuthorGraph::nodes)
        .def_readonly("weights", &WeightedAuthorGraph::weights)
        .def_readonly("adjacency", &WeightedAuthorGraph::adjacency);

    py::class_<RoleCriterion>(m, "RoleCriterion")
        .def(py::init<>())
        .def(py::init<CriterionKind, int64_t, int64_t>(),
             py::arg("kind"), py::arg("t1"), py::arg("t2"))
        .def_readwrite("kind", &RoleCriterion::kind)
        .def_readwrite("t1", &RoleCriterion::t1)
        .def_readwrite("t2", &RoleCriterion::t2);

    py::class_<CandidateScore>(m, "CandidateScore")
        .def_readonly("author", &CandidateScore::author)
        .def_readonly("role", &CandidateScore::role)
        .def_readonly("i1", &CandidateScore::i1)
        .def_readonly("i2", &CandidateScore::i2)
        .def_readonly("f", &CandidateScore::f)
        .def("__repr__", [](const CandidateScore& score) {
            return "CandidateScore(author='" + score.author + "', f=" + std::to_string(score.f) + ")";
        });

    py::class_<RecommendRequest>(m, "RecommendRequest")
        .def(py::init<>())
        .def_readwrite("seed_name", &RecommendRequest::seed_name)
        .def_readwrite("seed_role", &RecommendRequest::seed_role)
        .def_readwrite("query", &RecommendRequest::query)
        .def_readwrite("interest", &RecommendRequest::interest)
        .def_readwrite("top_k", &RecommendRequest::top_k)
        .def_readwrite("scorer", &RecommendRequest::scorer)
        .def_readwrite("criterion", &RecommendRequest::criterion)
        .def_readwrite("pairing", &RecommendRequest::pairing)
        .def_readwrite("interest_in_query", &RecommendRequest::interest_in_query)
        .def_readwrite("bm25", &RecommendRequest::bm25);

    py::class_<TeamPair>(m, "TeamPair")
        .def_readonly("rank", &TeamPair::rank)
        .def_readonly("members", &TeamPair::members);

    py::class_<TeamRecommendation>(m, "TeamRecommendation")
        .def_readonly("seed_name", &TeamRecommendation::seed_name)
        .def_readonly("seed_role", &TeamRecommendation::seed_role)
        .def_readonly("query", &TeamRecommendation::query)
        .def_readonly("interest", &TeamRecommendation::interest)
        .def_readonly("top_k", &TeamRecommendation::top_k)
        .def_readonly("fallback_used", &TeamRecommendation::fallback_used)
        .def_readonly("pairs", &TeamRecommendation::pairs);

    // Tokenization and scoring.
    m.def("tokenize",
          [](const std::string& text, const std::optional<std::set<std::string>>& stopwords) {
              return tokenize(text, stopwords ? &*stopwords : nullptr);
          },
          py::arg("text"), py::arg("stopwords") = py::none());
    m.def("make_query",
          [](const std::string& text, const std::optional<std::set<std::string>>& stopwords) {
              return make_query(text, stopwords ? &*stopwords : nullptr);
          },
          py::arg("text"), py::arg("stopwords") = py::none());
    m.def("build_index", [](const CorpusBundle& bundle) { return build_index(bundle); },
          py::arg("bundle"));
    m.def("bm25_score", &bm25_score, py::arg("query"), py::arg("doc"), py::arg("stats"),
          py::arg("params") = Bm25Params{});
    m.def("tfidf_score", &tfidf_score, py::arg("query"), py::arg("doc"), py::arg("stats"));
    m.def("score_documents",
          [](const TextIndex& index, const QueryTerms& query, const std::vector<std::string>& ids,
             Scorer scorer, const Bm25Params& params) {
              return score_documents(index, query, ids, scorer, params);
          },
          py::arg("index"), py::arg("query"), py::arg("ids"), py::arg("scorer") = Scorer::Bm25,
          py::arg("params") = Bm25Params{});

    // Corpus operations.
    m.def("parse_corpus_text", [](const std::string& text) {
        std::istringstream in(text);
        ParseResult result = parse_corpus(in);
        return py::make_tuple(std::move(result.bundle), std::move(result.report));
    });
    m.def("parse_corpus_file", [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open corpus file \"" + path + "\"");
        ParseResult result = parse_corpus(in);
        return py::make_tuple(std::move(result.bundle), std::move(result.report));
    });
    m.def("compute_citation_counts", &compute_citation_counts, py::arg("papers"));
    m.def("resolve_author",
          [](const CorpusBundle& bundle, const std::string& name) {
              return resolve_author(bundle, name);
          },
          py::arg("bundle"), py::arg("name"));

    // Graph operations.
    m.def("build_collab_index", &build_collab_index, py::arg("bundle"));
    m.def("build_citation_graph", &build_citation_graph, py::arg("bundle"), py::arg("collab"));
    m.def("build_query_graph", &build_query_graph, py::arg("bundle"), py::arg("collab"),
          py::arg("index"), py::arg("query"), py::arg("scorer") = Scorer::Bm25,
          py::arg("params") = Bm25Params{});
    m.def("minmax_normalize", &minmax_normalize, py::arg("weights"));
    m.def("blend", &blend, py::arg("citation"), py::arg("query"));
    m.def("degree", &degree, py::arg("graph"), py::arg("author"));
    m.def("hop_distance", &hop_distance, py::arg("graph"), py::arg("src"), py::arg("dst"));
    m.def("make_graph", &make_graph, py::arg("nodes"), py::arg("weights"));

    // Roles and ranking.
    m.def("classify", &classify, py::arg("author"), py::arg("graph"), py::arg("criterion"));
    m.def("partition", &partition, py::arg("bundle"), py::arg("graph"), py::arg("criterion"));
    m.def("avg_incident_weight", &avg_incident_weight, py::arg("blended"), py::arg("author"));
    m.def("proximity", &proximity, py::arg("blended"), py::arg("seed"), py::arg("candidate"));
    m.def("f_score", &f_score, py::arg("blended"), py::arg("seed"), py::arg("candidate"));
    m.def("rank_role",
          [](const WeightedAuthorGraph& blended, const std::string& seed,
             const std::set<std::string>& candidates, int64_t k, Role role) {
              RankedRole ranked = rank_role(blended, seed, candidates, k, role);
              return py::make_tuple(std::move(ranked.ranked), ranked.fallback_used);
          },
          py::arg("blended"), py::arg("seed"), py::arg("candidates"), py::arg("k"), py::arg("role"));
    m.def("recommend_team", &recommend_team, py::arg("bundle"), py::arg("collab"),
          py::arg("index"), py::arg("citation"), py::arg("request"));
    m.def("render_json", &render_json, py::arg("recommendation"));
    m.def("render_table", &render_table, py::arg("recommendation"));
    m.def("role_name", &role_name);
    m.def("criterion_name", &criterion_name);

    py::class_<Engine>(m, "Engine")
        .def_static("from_corpus_file", &Engine::from_corpus_file, py::arg("path"))
        .def_static("from_corpus_text", &Engine::from_corpus_text, py::arg("text"))
        .def_static("from_snapshot", &Engine::from_snapshot, py::arg("path"))
        .def("save_snapshot", &Engine::save, py::arg("path"))
        .def_readonly("bundle", &Engine::bundle)
        .def_readonly("collab", &Engine::collab)
        .def_readonly("index", &Engine::index)
        .def_readonly("citation", &Engine::citation)
        .def_readonly("report", &Engine::report)
        .def("classify", &Engine::classify_author, py::arg("name"),
             py::arg("criterion") = RoleCriterion{})
        .def("blended_graph", &Engine::blended_for, py::arg("query"),
             py::arg("scorer") = Scorer::Bm25, py::arg("params") = Bm25Params{})
        .def("recommend", &Engine::recommend, py::arg("request"))
        .def("paper_count", [](const Engine& e) { return e.bundle.papers.size(); })
        .def("author_count", [](const Engine& e) { return e.bundle.authors.size(); })
        .def("edge_count", [](const Engine& e) { return e.citation.weights.size(); });
}
