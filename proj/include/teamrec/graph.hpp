#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "teamrec/corpus.hpp"
#include "teamrec/text_index.hpp"

namespace teamrec {

/// Unordered author pair: (a,b) and (b,a) are the same key, a != b.
struct AuthorPair {
    std::string a;  // canonical: a < b
    std::string b;

    AuthorPair(std::string x, std::string y);

    auto operator<=>(const AuthorPair&) const = default;
};

using EdgeWeights = std::map<AuthorPair, double>;

/// Undirected weighted graph over author names. Instantiated as the
/// citation graph, the per-query graph, and their blend; all three share
/// one edge-key set (the co-authorship relation).
struct WeightedAuthorGraph {
    std::set<std::string> nodes;
    EdgeWeights weights;
    std::map<std::string, std::vector<std::string>> adjacency;  // sorted neighbors

    bool operator==(const WeightedAuthorGraph&) const = default;
};

WeightedAuthorGraph make_graph(std::set<std::string> nodes, EdgeWeights weights);

/// pair -> ids of papers the two authors wrote together, sorted.
using CollabIndex = std::map<AuthorPair, std::vector<std::string>>;

/// A paper with m authors contributes to m(m-1)/2 pairs.
CollabIndex build_collab_index(const CorpusBundle& bundle);

/// Edge weight = sum of in_citations over the pair's joint papers.
/// Zero-weight collaborations are kept as edges: the edge set is the
/// co-authorship relation, weights carry strength.
WeightedAuthorGraph build_citation_graph(const CorpusBundle& bundle,
                                         const CollabIndex& collab);

/// Same edge set, weighted by the summed relevance of joint papers to the
/// query under the selected scorer.
WeightedAuthorGraph build_query_graph(const CorpusBundle& bundle,
                                      const CollabIndex& collab,
                                      const TextIndex& index,
                                      const QueryTerms& query, Scorer scorer,
                                      const Bm25Params& params = {});

/// (e - min) / (max - min) per edge. When max == min every output is 1:
/// a constant-weight component still represents real collaboration, and
/// mapping it to 0 would erase that signal from the blend.
/// Throws EmptyEdgeSet on an empty map.
EdgeWeights minmax_normalize(const EdgeWeights& weights);

/// Per-edge sum of the two min-max-normalized graphs; outputs lie in [0,2].
/// Requires identical node and edge-key sets (GraphShapeMismatch otherwise).
/// Graphs with no edges blend to a graph with no edges.
WeightedAuthorGraph blend(const WeightedAuthorGraph& citation,
                          const WeightedAuthorGraph& query);

/// Number of distinct collaborators. Throws AuthorNotFound.
int64_t degree(const WeightedAuthorGraph& graph, const std::string& author);

/// Minimum edge count of any path, ignoring weights; nullopt when
/// disconnected. Throws SameNode when src == dst, AuthorNotFound when
/// either endpoint is not a node.
std::optional<int64_t> hop_distance(const WeightedAuthorGraph& graph,
                                    const std::string& src,
                                    const std::string& dst);

} // namespace teamrec
