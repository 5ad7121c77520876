#include "teamrec/output.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace teamrec {

namespace {

nlohmann::ordered_json member_json(const CandidateScore& member) {
    nlohmann::ordered_json m;
    m["name"] = member.author;
    m["role"] = role_name(member.role);
    m["i1"] = member.i1;
    if (member.i2) {
        m["i2"] = *member.i2;
    } else {
        m["i2"] = nullptr;
    }
    m["f"] = member.f;
    return m;
}

} // namespace

std::string render_json(const TeamRecommendation& rec) {
    nlohmann::ordered_json root;
    root["seed"] = {{"name", rec.seed_name}, {"role", role_name(rec.seed_role)}};
    root["query"] = rec.query;
    if (rec.interest) {
        root["interest"] = *rec.interest;
    } else {
        root["interest"] = nullptr;
    }
    root["k"] = rec.top_k;
    root["fallback_used"] = rec.fallback_used;
    root["pairs"] = nlohmann::ordered_json::array();
    for (const TeamPair& pair : rec.pairs) {
        nlohmann::ordered_json p;
        p["rank"] = pair.rank;
        p["members"] = nlohmann::ordered_json::array();
        for (const CandidateScore& member : pair.members) {
            p["members"].push_back(member_json(member));
        }
        root["pairs"].push_back(std::move(p));
    }
    return root.dump() + "\n";
}

std::string render_table(const TeamRecommendation& rec) {
    std::ostringstream out;
    out << "seed: " << rec.seed_name << " (" << role_name(rec.seed_role) << ")\n";
    out << "query: " << rec.query << "\n";
    if (rec.interest) out << "interest: " << *rec.interest << "\n";
    if (rec.fallback_used) out << "note: ranking fell back to zero-score candidates\n";

    std::size_t name_width = 4;
    for (const TeamPair& pair : rec.pairs) {
        for (const CandidateScore& member : pair.members) {
            name_width = std::max(name_width, member.author.size());
        }
    }
    out << std::left << std::setw(6) << "rank" << std::setw(11) << "role"
        << std::setw(static_cast<int>(name_width + 2)) << "name"
        << std::right << std::setw(12) << "i1" << std::setw(12) << "i2"
        << std::setw(12) << "f" << "\n";
    out << std::fixed << std::setprecision(6);
    for (const TeamPair& pair : rec.pairs) {
        for (const CandidateScore& member : pair.members) {
            out << std::left << std::setw(6) << pair.rank << std::setw(11)
                << role_name(member.role)
                << std::setw(static_cast<int>(name_width + 2)) << member.author
                << std::right << std::setw(12) << member.i1;
            if (member.i2) {
                out << std::setw(12) << *member.i2;
            } else {
                out << std::setw(12) << "-";
            }
            out << std::setw(12) << member.f << "\n";
        }
    }
    if (rec.pairs.empty()) out << "(no pairs)\n";
    return out.str();
}

} // namespace teamrec
