#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "teamrec/errors.hpp"
#include "teamrec/output.hpp"
#include "teamrec/ranker.hpp"
#include "teamrec/snapshot.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitNotFound = 2;
constexpr int kExitUsage = 64;

struct CriterionFlags {
    std::string kind = "paper";
    int64_t t1 = 20;
    int64_t t2 = 40;

    void attach(CLI::App* cmd) {
        cmd->add_option("--criterion", kind, "Role criterion: paper|citation|neighbor")
            ->check(CLI::IsMember({"paper", "citation", "neighbor"}));
        cmd->add_option("--t1", t1, "Lower role threshold (role is student when metric <= t1)");
        cmd->add_option("--t2", t2, "Upper role threshold (role is prime when metric > t2)");
    }

    teamrec::RoleCriterion resolve() const {
        if (t1 >= t2) throw CLI::ValidationError("--t1/--t2", "t1 must be < t2");
        return {*teamrec::criterion_from_name(kind), t1, t2};
    }
};

int run_build(const std::string& input_path, const std::string& snapshot_path) {
    std::ifstream input(input_path, std::ios::binary);
    if (!input) {
        std::cerr << "error: cannot open input file \"" << input_path << "\"\n";
        return kExitFailure;
    }
    teamrec::ParseResult parsed = teamrec::parse_corpus(input);

    if (!parsed.report.warnings.empty()) {
        std::cerr << parsed.report.warnings.size() << " parse warning(s)\n";
        std::size_t shown = 0;
        for (const auto& warning : parsed.report.warnings) {
            if (++shown > 10) {
                std::cerr << "  ... " << (parsed.report.warnings.size() - 10) << " more\n";
                break;
            }
            std::cerr << "  line " << warning.line << ": " << warning.message << "\n";
        }
    }

    teamrec::Snapshot snapshot;
    snapshot.bundle = std::move(parsed.bundle);
    try {
        snapshot.index = teamrec::build_index(snapshot.bundle);
    } catch (const teamrec::IndexEmpty&) {
        // An empty corpus still snapshots: all sections empty, counts zero.
    }
    teamrec::CollabIndex collab = teamrec::build_collab_index(snapshot.bundle);
    snapshot.citation = teamrec::build_citation_graph(snapshot.bundle, collab);
    teamrec::save_snapshot_file(snapshot_path, snapshot);

    std::cout << "papers: " << snapshot.bundle.papers.size() << "\n"
              << "authors: " << snapshot.bundle.authors.size() << "\n"
              << "edges: " << snapshot.citation.weights.size() << "\n"
              << "skipped records: " << parsed.report.records_skipped << "\n";
    return kExitOk;
}

int run_recommend(const std::string& snapshot_path, teamrec::RecommendRequest request,
                  const std::string& format) {
    teamrec::Snapshot snapshot = teamrec::load_snapshot_file(snapshot_path);
    teamrec::CollabIndex collab = teamrec::build_collab_index(snapshot.bundle);
    teamrec::TeamRecommendation rec = teamrec::recommend_team(
        snapshot.bundle, collab, snapshot.index, snapshot.citation, request);
    std::cout << (format == "table" ? teamrec::render_table(rec) : teamrec::render_json(rec));
    return kExitOk;
}

int run_classify(const std::string& snapshot_path, const std::string& name,
                 const teamrec::RoleCriterion& criterion) {
    teamrec::Snapshot snapshot = teamrec::load_snapshot_file(snapshot_path);
    const teamrec::AuthorRecord& author = teamrec::resolve_author(snapshot.bundle, name);
    teamrec::Role role = teamrec::classify(author, snapshot.citation, criterion);
    int64_t metric = teamrec::criterion_metric(author, snapshot.citation, criterion.kind);
    std::cout << author.name << ": role=" << teamrec::role_name(role)
              << " criterion=" << teamrec::criterion_name(criterion.kind)
              << " metric=" << metric << " (t1=" << criterion.t1
              << ", t2=" << criterion.t2 << ")\n";
    return kExitOk;
}

int run_stats(const std::string& snapshot_path, const teamrec::RoleCriterion& criterion) {
    teamrec::Snapshot snapshot = teamrec::load_snapshot_file(snapshot_path);
    auto groups = teamrec::partition(snapshot.bundle, snapshot.citation, criterion);
    std::cout << "papers: " << snapshot.bundle.papers.size() << "\n"
              << "authors: " << snapshot.bundle.authors.size() << "\n"
              << "edges: " << snapshot.citation.weights.size() << "\n"
              << "roles (criterion=" << teamrec::criterion_name(criterion.kind)
              << ", t1=" << criterion.t1 << ", t2=" << criterion.t2 << "):\n"
              << "  prime: " << groups[teamrec::Role::PrimeProfessor].size() << "\n"
              << "  assistant: " << groups[teamrec::Role::AssistantProfessor].size() << "\n"
              << "  student: " << groups[teamrec::Role::Student].size() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Academic team recommendation over citation-query blended co-authorship graphs"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "Parse a corpus and write a snapshot");
    std::string build_input;
    std::string build_snapshot;
    build->add_option("--input", build_input, "Corpus dump file")->required();
    build->add_option("--snapshot", build_snapshot, "Snapshot output path")->required();

    auto* recommend = app.add_subcommand("recommend", "Recommend top-k role-complete team pairs");
    std::string rec_snapshot;
    std::string rec_name;
    std::string rec_role;
    std::string rec_query;
    std::string rec_interest;
    std::string rec_scorer = "bm25";
    std::string rec_pairing = "aligned";
    std::string rec_format = "json";
    int64_t rec_k = 10;
    bool rec_no_interest_in_query = false;
    CriterionFlags rec_criterion;
    recommend->add_option("--snapshot", rec_snapshot, "Snapshot path")->required();
    recommend->add_option("--name", rec_name, "Seed researcher name")->required();
    recommend->add_option("--role", rec_role, "Seed role override: prime|assistant|student")
        ->check(CLI::IsMember({"prime", "assistant", "student"}));
    recommend->add_option("--query", rec_query, "Task query text")->required();
    recommend->add_option("--interest", rec_interest, "Research interest text");
    recommend->add_option("-k,--top-k", rec_k, "Number of team pairs")->check(CLI::PositiveNumber);
    recommend->add_option("--scorer", rec_scorer, "Relevance scorer: bm25|tfidf")
        ->check(CLI::IsMember({"bm25", "tfidf"}));
    rec_criterion.attach(recommend);
    recommend->add_option("--pairing", rec_pairing, "Pair assembly: aligned|product")
        ->check(CLI::IsMember({"aligned", "product"}));
    recommend->add_flag("--no-interest-in-query", rec_no_interest_in_query,
                        "Do not append interest tokens to the query");
    recommend->add_option("--format", rec_format, "Output format: json|table")
        ->check(CLI::IsMember({"json", "table"}));

    auto* classify = app.add_subcommand("classify", "Print an author's role under a criterion");
    std::string cls_snapshot;
    std::string cls_name;
    CriterionFlags cls_criterion;
    classify->add_option("--snapshot", cls_snapshot, "Snapshot path")->required();
    classify->add_option("--name", cls_name, "Author name")->required();
    cls_criterion.attach(classify);

    auto* stats = app.add_subcommand("stats", "Print corpus and graph statistics");
    std::string stats_snapshot;
    CriterionFlags stats_criterion;
    stats->add_option("--snapshot", stats_snapshot, "Snapshot path")->required();
    stats_criterion.attach(stats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (build->parsed()) {
            return run_build(build_input, build_snapshot);
        }
        if (recommend->parsed()) {
            teamrec::RecommendRequest request;
            request.seed_name = rec_name;
            if (!rec_role.empty()) request.seed_role = teamrec::role_from_name(rec_role);
            request.query = rec_query;
            if (recommend->count("--interest") > 0) request.interest = rec_interest;
            request.top_k = rec_k;
            request.scorer = rec_scorer == "tfidf" ? teamrec::Scorer::Tfidf : teamrec::Scorer::Bm25;
            request.criterion = rec_criterion.resolve();
            request.pairing = rec_pairing == "product" ? teamrec::PairingMode::Product
                                                       : teamrec::PairingMode::Aligned;
            request.interest_in_query = !rec_no_interest_in_query;
            return run_recommend(rec_snapshot, std::move(request), rec_format);
        }
        if (classify->parsed()) {
            return run_classify(cls_snapshot, cls_name, cls_criterion.resolve());
        }
        if (stats->parsed()) {
            return run_stats(stats_snapshot, stats_criterion.resolve());
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const teamrec::AuthorNotFound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotFound;
    } catch (const teamrec::InvalidRequest& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
