#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "teamrec/corpus.hpp"
#include "teamrec/graph.hpp"

namespace teamrec {

/// Total order: PrimeProfessor > AssistantProfessor > Student.
enum class Role { Student = 0, AssistantProfessor = 1, PrimeProfessor = 2 };

const char* role_name(Role role);                 // "student" | "assistant" | "prime"
std::optional<Role> role_from_name(const std::string& name);

enum class CriterionKind { Paper, Citation, Neighbor };

const char* criterion_name(CriterionKind kind);
std::optional<CriterionKind> criterion_from_name(const std::string& name);

struct RoleCriterion {
    CriterionKind kind = CriterionKind::Paper;
    int64_t t1 = 20;
    int64_t t2 = 40;   // t1 < t2
};

/// Metric backing the criterion: paper count, total citations, or degree.
int64_t criterion_metric(const AuthorRecord& author, const WeightedAuthorGraph& graph,
                         CriterionKind kind);

/// PrimeProfessor when metric > t2, AssistantProfessor when t1 < metric <= t2,
/// Student when metric <= t1. Throws InvalidRequest unless t1 < t2;
/// AuthorNotFound for the Neighbor criterion on an unknown node.
Role classify(const AuthorRecord& author, const WeightedAuthorGraph& graph,
              const RoleCriterion& criterion);

/// Classify every author; the three sets are disjoint and cover all authors.
std::map<Role, std::set<std::string>> partition(const CorpusBundle& bundle,
                                                const WeightedAuthorGraph& graph,
                                                const RoleCriterion& criterion);

} // namespace teamrec
