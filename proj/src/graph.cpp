#include "teamrec/graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <utility>

#include "teamrec/errors.hpp"

namespace teamrec {

AuthorPair::AuthorPair(std::string x, std::string y) {
    if (x == y) throw InvalidRequest("author pair requires two distinct names, got \"" + x + "\" twice");
    if (y < x) std::swap(x, y);
    a = std::move(x);
    b = std::move(y);
}

WeightedAuthorGraph make_graph(std::set<std::string> nodes, EdgeWeights weights) {
    WeightedAuthorGraph graph;
    graph.nodes = std::move(nodes);
    graph.weights = std::move(weights);
    for (const auto& [pair, weight] : graph.weights) {
        graph.adjacency[pair.a].push_back(pair.b);
        graph.adjacency[pair.b].push_back(pair.a);
    }
    // Edge keys iterate in sorted order, so each neighbor list is already
    // sorted and duplicate-free; keep the sort as a guard for hand-built maps.
    for (auto& [node, neighbors] : graph.adjacency) {
        std::sort(neighbors.begin(), neighbors.end());
    }
    return graph;
}

CollabIndex build_collab_index(const CorpusBundle& bundle) {
    CollabIndex collab;
    for (const auto& [id, paper] : bundle.papers) {
        for (std::size_t i = 0; i < paper.authors.size(); ++i) {
            for (std::size_t j = i + 1; j < paper.authors.size(); ++j) {
                collab[AuthorPair(paper.authors[i], paper.authors[j])].push_back(id);
            }
        }
    }
    return collab;
}

WeightedAuthorGraph build_citation_graph(const CorpusBundle& bundle, const CollabIndex& collab) {
    std::set<std::string> nodes;
    for (const auto& [name, author] : bundle.authors) nodes.insert(name);
    EdgeWeights weights;
    for (const auto& [pair, paper_ids] : collab) {
        int64_t total = 0;
        for (const std::string& id : paper_ids) {
            total += bundle.papers.at(id).in_citations;
        }
        weights[pair] = static_cast<double>(total);
    }
    return make_graph(std::move(nodes), std::move(weights));
}

WeightedAuthorGraph build_query_graph(const CorpusBundle& bundle, const CollabIndex& collab,
                                      const TextIndex& index, const QueryTerms& query,
                                      Scorer scorer, const Bm25Params& params) {
    std::set<std::string> nodes;
    for (const auto& [name, author] : bundle.authors) nodes.insert(name);
    EdgeWeights weights;
    for (const auto& [pair, paper_ids] : collab) {
        double total = 0.0;
        for (const std::string& id : paper_ids) {
            auto it = index.docs.find(id);
            if (it == index.docs.end()) continue;
            total += score_document(query, it->second, index.stats, scorer, params);
        }
        weights[pair] = total;
    }
    return make_graph(std::move(nodes), std::move(weights));
}

EdgeWeights minmax_normalize(const EdgeWeights& weights) {
    if (weights.empty()) throw EmptyEdgeSet();
    double lo = weights.begin()->second;
    double hi = lo;
    for (const auto& [pair, weight] : weights) {
        lo = std::min(lo, weight);
        hi = std::max(hi, weight);
    }
    EdgeWeights normalized;
    for (const auto& [pair, weight] : weights) {
        normalized[pair] = (hi == lo) ? 1.0 : (weight - lo) / (hi - lo);
    }
    return normalized;
}

WeightedAuthorGraph blend(const WeightedAuthorGraph& citation, const WeightedAuthorGraph& query) {
    if (citation.nodes != query.nodes) {
        throw GraphShapeMismatch("node sets differ");
    }
    if (citation.weights.size() != query.weights.size() ||
        !std::equal(citation.weights.begin(), citation.weights.end(), query.weights.begin(),
                    [](const auto& lhs, const auto& rhs) { return lhs.first == rhs.first; })) {
        throw GraphShapeMismatch("edge key sets differ");
    }
    if (citation.weights.empty()) {
        return make_graph(citation.nodes, {});
    }
    EdgeWeights citation_norm = minmax_normalize(citation.weights);
    EdgeWeights query_norm = minmax_normalize(query.weights);
    EdgeWeights blended;
    for (const auto& [pair, weight] : citation_norm) {
        blended[pair] = weight + query_norm.at(pair);
    }
    return make_graph(citation.nodes, std::move(blended));
}

int64_t degree(const WeightedAuthorGraph& graph, const std::string& author) {
    if (!graph.nodes.count(author)) throw AuthorNotFound(author);
    auto it = graph.adjacency.find(author);
    return it == graph.adjacency.end() ? 0 : static_cast<int64_t>(it->second.size());
}

std::optional<int64_t> hop_distance(const WeightedAuthorGraph& graph,
                                    const std::string& src, const std::string& dst) {
    if (src == dst) throw SameNode(src);
    if (!graph.nodes.count(src)) throw AuthorNotFound(src);
    if (!graph.nodes.count(dst)) throw AuthorNotFound(dst);

    std::unordered_map<std::string, int64_t> dist;
    dist.emplace(src, 0);
    std::deque<const std::string*> queue{&src};
    while (!queue.empty()) {
        const std::string& node = *queue.front();
        queue.pop_front();
        int64_t next = dist.at(node) + 1;
        auto adj = graph.adjacency.find(node);
        if (adj == graph.adjacency.end()) continue;
        for (const std::string& neighbor : adj->second) {
            if (!dist.emplace(neighbor, next).second) continue;
            if (neighbor == dst) return next;
            queue.push_back(&neighbor);
        }
    }
    return std::nullopt;
}

} // namespace teamrec
