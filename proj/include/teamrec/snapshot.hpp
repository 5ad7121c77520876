#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "teamrec/corpus.hpp"
#include "teamrec/graph.hpp"
#include "teamrec/text_index.hpp"

namespace teamrec {

inline constexpr uint32_t kSnapshotVersion = 1;

/// Query-independent state persisted between runs: the parsed corpus, the
/// text index, and the citation graph. Query graphs are never stored; the
/// collaboration index is rebuilt from the corpus on load.
struct Snapshot {
    CorpusBundle bundle;
    TextIndex index;
    WeightedAuthorGraph citation;

    bool operator==(const Snapshot&) const = default;
};

/// Binary little-endian container, format documented in
/// docs/snapshot_format.md. save/load round-trip is identity.
void save_snapshot(std::ostream& out, const Snapshot& snapshot);
Snapshot load_snapshot(std::istream& in);   // throws SnapshotError

void save_snapshot_file(const std::string& path, const Snapshot& snapshot);
Snapshot load_snapshot_file(const std::string& path);

} // namespace teamrec
