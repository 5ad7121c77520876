#include "teamrec/roles.hpp"

#include "teamrec/errors.hpp"

namespace teamrec {

const char* role_name(Role role) {
    switch (role) {
        case Role::PrimeProfessor: return "prime";
        case Role::AssistantProfessor: return "assistant";
        case Role::Student: return "student";
    }
    return "student";
}

std::optional<Role> role_from_name(const std::string& name) {
    if (name == "prime") return Role::PrimeProfessor;
    if (name == "assistant") return Role::AssistantProfessor;
    if (name == "student") return Role::Student;
    return std::nullopt;
}

const char* criterion_name(CriterionKind kind) {
    switch (kind) {
        case CriterionKind::Paper: return "paper";
        case CriterionKind::Citation: return "citation";
        case CriterionKind::Neighbor: return "neighbor";
    }
    return "paper";
}

std::optional<CriterionKind> criterion_from_name(const std::string& name) {
    if (name == "paper") return CriterionKind::Paper;
    if (name == "citation") return CriterionKind::Citation;
    if (name == "neighbor") return CriterionKind::Neighbor;
    return std::nullopt;
}

int64_t criterion_metric(const AuthorRecord& author, const WeightedAuthorGraph& graph,
                         CriterionKind kind) {
    switch (kind) {
        case CriterionKind::Paper: return author.paper_count;
        case CriterionKind::Citation: return author.total_citations;
        case CriterionKind::Neighbor: return degree(graph, author.name);
    }
    return author.paper_count;
}

Role classify(const AuthorRecord& author, const WeightedAuthorGraph& graph,
              const RoleCriterion& criterion) {
    if (criterion.t1 >= criterion.t2) {
        throw InvalidRequest("role thresholds require t1 < t2");
    }
    int64_t metric = criterion_metric(author, graph, criterion.kind);
    if (metric > criterion.t2) return Role::PrimeProfessor;
    if (metric > criterion.t1) return Role::AssistantProfessor;
    return Role::Student;
}

std::map<Role, std::set<std::string>> partition(const CorpusBundle& bundle,
                                                const WeightedAuthorGraph& graph,
                                                const RoleCriterion& criterion) {
    std::map<Role, std::set<std::string>> groups{
        {Role::Student, {}}, {Role::AssistantProfessor, {}}, {Role::PrimeProfessor, {}}};
    for (const auto& [name, author] : bundle.authors) {
        groups[classify(author, graph, criterion)].insert(name);
    }
    return groups;
}

} // namespace teamrec
