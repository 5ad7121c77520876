#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "teamrec/graph.hpp"
#include "teamrec/roles.hpp"
#include "teamrec/text_index.hpp"

namespace teamrec {

struct CandidateScore {
    std::string author;
    Role role = Role::Student;
    double i1 = 0.0;                 // mean blended weight of incident edges
    std::optional<double> i2;        // 1/hops; absent when unreachable
    double f = 0.0;                  // i1 * i2, or 0 when i2 absent
};

enum class PairingMode { Aligned, Product };

struct RecommendRequest {
    std::string seed_name;
    std::optional<Role> seed_role;   // classified via criterion when absent
    std::string query;
    std::optional<std::string> interest;
    int64_t top_k = 10;
    Scorer scorer = Scorer::Bm25;
    RoleCriterion criterion;
    PairingMode pairing = PairingMode::Aligned;
    bool interest_in_query = true;   // append interest tokens to the query
    Bm25Params bm25;
};

struct TeamPair {
    int64_t rank = 0;                           // 1-based
    std::vector<CandidateScore> members;        // one per missing role, senior first
};

struct TeamRecommendation {
    std::string seed_name;
    Role seed_role = Role::Student;
    std::string query;
    std::optional<std::string> interest;
    int64_t top_k = 0;
    bool fallback_used = false;      // some emitted member has f == 0
    std::vector<TeamPair> pairs;
};

/// Mean blended weight over edges incident to the author; 0 when isolated.
/// Throws AuthorNotFound.
double avg_incident_weight(const WeightedAuthorGraph& blended, const std::string& author);

/// 1 / hop_distance; nullopt when disconnected. Throws SameNode, AuthorNotFound.
std::optional<double> proximity(const WeightedAuthorGraph& blended,
                                const std::string& seed, const std::string& candidate);

CandidateScore f_score(const WeightedAuthorGraph& blended, const std::string& seed,
                       const std::string& candidate);

struct RankedRole {
    std::vector<CandidateScore> ranked;
    bool fallback_used = false;
};

/// Candidates with f > 0 sorted by f descending then name ascending,
/// truncated to k. When fewer than k score positive, f == 0 candidates
/// fill the shortfall ordered by i1 descending then name ascending.
RankedRole rank_role(const WeightedAuthorGraph& blended, const std::string& seed,
                     const std::set<std::string>& candidates, int64_t k, Role role);

/// Full pipeline for one request: build the query graph over the shared
/// collaboration edge set, blend with the citation graph, resolve the seed
/// role, rank the two missing roles, and pair the rankings.
TeamRecommendation recommend_team(const CorpusBundle& bundle, const CollabIndex& collab,
                                  const TextIndex& index,
                                  const WeightedAuthorGraph& citation,
                                  const RecommendRequest& request);

} // namespace teamrec
