#include "teamrec/ranker.hpp"

#include <algorithm>

#include "teamrec/errors.hpp"

namespace teamrec {

namespace {

/// f descending, then name ascending (UTF-8 byte order).
bool by_f_then_name(const CandidateScore& lhs, const CandidateScore& rhs) {
    if (lhs.f != rhs.f) return lhs.f > rhs.f;
    return lhs.author < rhs.author;
}

bool by_i1_then_name(const CandidateScore& lhs, const CandidateScore& rhs) {
    if (lhs.i1 != rhs.i1) return lhs.i1 > rhs.i1;
    return lhs.author < rhs.author;
}

/// The two roles the seed does not hold, senior first.
std::vector<Role> missing_roles(Role seed_role) {
    std::vector<Role> roles;
    for (Role role : {Role::PrimeProfessor, Role::AssistantProfessor, Role::Student}) {
        if (role != seed_role) roles.push_back(role);
    }
    return roles;
}

} // namespace

double avg_incident_weight(const WeightedAuthorGraph& blended, const std::string& author) {
    if (!blended.nodes.count(author)) throw AuthorNotFound(author);
    auto it = blended.adjacency.find(author);
    if (it == blended.adjacency.end() || it->second.empty()) return 0.0;
    double total = 0.0;
    for (const std::string& neighbor : it->second) {
        total += blended.weights.at(AuthorPair(author, neighbor));
    }
    return total / static_cast<double>(it->second.size());
}

std::optional<double> proximity(const WeightedAuthorGraph& blended,
                                const std::string& seed, const std::string& candidate) {
    auto hops = hop_distance(blended, seed, candidate);
    if (!hops) return std::nullopt;
    return 1.0 / static_cast<double>(*hops);
}

CandidateScore f_score(const WeightedAuthorGraph& blended, const std::string& seed,
                       const std::string& candidate) {
    CandidateScore score;
    score.author = candidate;
    score.i1 = avg_incident_weight(blended, candidate);
    score.i2 = proximity(blended, seed, candidate);
    score.f = score.i2 ? score.i1 * *score.i2 : 0.0;
    return score;
}

RankedRole rank_role(const WeightedAuthorGraph& blended, const std::string& seed,
                     const std::set<std::string>& candidates, int64_t k, Role role) {
    std::vector<CandidateScore> positive;
    std::vector<CandidateScore> zero;
    for (const std::string& candidate : candidates) {
        CandidateScore score = f_score(blended, seed, candidate);
        score.role = role;
        (score.f > 0.0 ? positive : zero).push_back(std::move(score));
    }
    std::sort(positive.begin(), positive.end(), by_f_then_name);

    RankedRole result;
    for (auto& score : positive) {
        if (static_cast<int64_t>(result.ranked.size()) >= k) break;
        result.ranked.push_back(std::move(score));
    }
    if (static_cast<int64_t>(result.ranked.size()) < k && !zero.empty()) {
        // Fill the shortfall with unreachable/zero-weight candidates.
        std::sort(zero.begin(), zero.end(), by_i1_then_name);
        for (auto& score : zero) {
            if (static_cast<int64_t>(result.ranked.size()) >= k) break;
            result.ranked.push_back(std::move(score));
            result.fallback_used = true;
        }
    }
    return result;
}

TeamRecommendation recommend_team(const CorpusBundle& bundle, const CollabIndex& collab,
                                  const TextIndex& index,
                                  const WeightedAuthorGraph& citation,
                                  const RecommendRequest& request) {
    if (request.top_k < 1) throw InvalidRequest("top_k must be >= 1");
    const AuthorRecord& seed = resolve_author(bundle, request.seed_name);

    std::string query_text = request.query;
    if (request.interest && request.interest_in_query) {
        query_text += " " + *request.interest;
    }
    QueryTerms query = make_query(query_text);

    WeightedAuthorGraph query_graph =
        build_query_graph(bundle, collab, index, query, request.scorer, request.bm25);
    WeightedAuthorGraph blended = blend(citation, query_graph);

    Role seed_role = request.seed_role ? *request.seed_role
                                       : classify(seed, blended, request.criterion);

    auto groups = partition(bundle, blended, request.criterion);

    TeamRecommendation rec;
    rec.seed_name = seed.name;
    rec.seed_role = seed_role;
    rec.query = request.query;
    rec.interest = request.interest;
    rec.top_k = request.top_k;

    std::vector<RankedRole> rankings;
    for (Role role : missing_roles(seed_role)) {
        std::set<std::string> candidates = groups[role];
        candidates.erase(seed.name);
        rankings.push_back(rank_role(blended, seed.name, candidates, request.top_k, role));
    }

    if (request.pairing == PairingMode::Aligned) {
        // The m-th pair combines the m-th candidate of each missing role.
        std::size_t count = std::min(rankings[0].ranked.size(), rankings[1].ranked.size());
        for (std::size_t m = 0; m < count; ++m) {
            rec.pairs.push_back({static_cast<int64_t>(m + 1),
                                 {rankings[0].ranked[m], rankings[1].ranked[m]}});
        }
    } else {
        // Cartesian product of the two top-k lists ranked by F sum.
        std::vector<TeamPair> product;
        for (const CandidateScore& first : rankings[0].ranked) {
            for (const CandidateScore& second : rankings[1].ranked) {
                product.push_back({0, {first, second}});
            }
        }
        std::sort(product.begin(), product.end(), [](const TeamPair& lhs, const TeamPair& rhs) {
            double lf = lhs.members[0].f + lhs.members[1].f;
            double rf = rhs.members[0].f + rhs.members[1].f;
            if (lf != rf) return lf > rf;
            if (lhs.members[0].author != rhs.members[0].author) {
                return lhs.members[0].author < rhs.members[0].author;
            }
            return lhs.members[1].author < rhs.members[1].author;
        });
        if (static_cast<int64_t>(product.size()) > request.top_k) {
            product.resize(static_cast<std::size_t>(request.top_k));
        }
        for (std::size_t m = 0; m < product.size(); ++m) {
            product[m].rank = static_cast<int64_t>(m + 1);
        }
        rec.pairs = std::move(product);
    }

    for (const TeamPair& pair : rec.pairs) {
        for (const CandidateScore& member : pair.members) {
            if (member.f == 0.0) rec.fallback_used = true;
        }
    }
    return rec;
}

} // namespace teamrec
