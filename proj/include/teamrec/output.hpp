#pragma once

#include <string>

#include "teamrec/ranker.hpp"

namespace teamrec {

/// Stable JSON rendering of a recommendation, newline-terminated:
/// {"seed":{"name","role"},"query","interest","k","fallback_used",
///  "pairs":[{"rank","members":[{"name","role","i1","i2","f"}]}]}
/// Key order is fixed; identical inputs render byte-identically.
std::string render_json(const TeamRecommendation& rec);

/// Human-readable aligned table of the same content.
std::string render_table(const TeamRecommendation& rec);

} // namespace teamrec
