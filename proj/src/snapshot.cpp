#include "teamrec/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

#include "teamrec/errors.hpp"

// Format v1, little-endian throughout; see docs/snapshot_format.md.
// Sections: header, papers, authors, index, citation graph. All maps are
// written in sorted key order so identical state serializes identically.

namespace teamrec {

namespace {

constexpr char kMagic[8] = {'T', 'E', 'A', 'M', 'S', 'N', 'A', 'P'};

static_assert(std::endian::native == std::endian::little,
              "snapshot I/O assumes a little-endian host");
static_assert(sizeof(double) == 8 && std::numeric_limits<double>::is_iec559);

template <typename T>
void write_raw(std::ostream& out, T value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T read_raw(std::istream& in) {
    T value{};
    in.read(reinterpret_cast<char*>(&value), sizeof(T));
    if (!in) throw SnapshotError("unexpected end of stream");
    return value;
}

void write_u32(std::ostream& out, uint32_t v) { write_raw(out, v); }
void write_u64(std::ostream& out, uint64_t v) { write_raw(out, v); }
void write_i64(std::ostream& out, int64_t v) { write_raw(out, v); }
void write_f64(std::ostream& out, double v) { write_raw(out, v); }

uint32_t read_u32(std::istream& in) { return read_raw<uint32_t>(in); }
uint64_t read_u64(std::istream& in) { return read_raw<uint64_t>(in); }
int64_t read_i64(std::istream& in) { return read_raw<int64_t>(in); }
double read_f64(std::istream& in) { return read_raw<double>(in); }

void write_string(std::ostream& out, const std::string& s) {
    write_u32(out, static_cast<uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string read_string(std::istream& in) {
    uint32_t size = read_u32(in);
    std::string s(size, '\0');
    in.read(s.data(), static_cast<std::streamsize>(size));
    if (!in) throw SnapshotError("unexpected end of stream in string");
    return s;
}

void write_optional_string(std::ostream& out, const std::optional<std::string>& v) {
    write_raw<uint8_t>(out, v ? 1 : 0);
    if (v) write_string(out, *v);
}

std::optional<std::string> read_optional_string(std::istream& in) {
    if (read_raw<uint8_t>(in) == 0) return std::nullopt;
    return read_string(in);
}

void write_string_list(std::ostream& out, const std::vector<std::string>& items) {
    write_u32(out, static_cast<uint32_t>(items.size()));
    for (const std::string& item : items) write_string(out, item);
}

std::vector<std::string> read_string_list(std::istream& in) {
    uint32_t count = read_u32(in);
    std::vector<std::string> items;
    items.reserve(count);
    for (uint32_t i = 0; i < count; ++i) items.push_back(read_string(in));
    return items;
}

void write_term_counts(std::ostream& out, const std::map<std::string, int64_t>& counts) {
    write_u64(out, counts.size());
    for (const auto& [term, count] : counts) {
        write_string(out, term);
        write_i64(out, count);
    }
}

std::map<std::string, int64_t> read_term_counts(std::istream& in) {
    uint64_t count = read_u64(in);
    std::map<std::string, int64_t> counts;
    for (uint64_t i = 0; i < count; ++i) {
        std::string term = read_string(in);
        counts[std::move(term)] = read_i64(in);
    }
    return counts;
}

} // namespace

void save_snapshot(std::ostream& out, const Snapshot& snapshot) {
    out.write(kMagic, sizeof(kMagic));
    write_u32(out, kSnapshotVersion);

    write_u64(out, snapshot.bundle.papers.size());
    for (const auto& [id, paper] : snapshot.bundle.papers) {
        write_string(out, paper.id);
        write_string(out, paper.title);
        write_string_list(out, paper.authors);
        write_raw<uint8_t>(out, paper.year ? 1 : 0);
        if (paper.year) write_raw<int32_t>(out, *paper.year);
        write_optional_string(out, paper.venue);
        write_string_list(out, paper.references);
        write_optional_string(out, paper.abstract);
        write_i64(out, paper.in_citations);
    }

    write_u64(out, snapshot.bundle.authors.size());
    for (const auto& [name, author] : snapshot.bundle.authors) {
        write_string(out, author.name);
        write_string_list(out, author.papers);
        write_i64(out, author.total_citations);
    }

    write_u64(out, snapshot.index.docs.size());
    for (const auto& [id, doc] : snapshot.index.docs) {
        write_string(out, doc.paper_id);
        write_i64(out, doc.length);
        write_term_counts(out, doc.term_freq);
    }
    write_i64(out, snapshot.index.stats.doc_count);
    write_f64(out, snapshot.index.stats.avg_len);
    write_term_counts(out, snapshot.index.stats.doc_freq);

    write_u64(out, snapshot.citation.nodes.size());
    for (const std::string& node : snapshot.citation.nodes) write_string(out, node);
    write_u64(out, snapshot.citation.weights.size());
    for (const auto& [pair, weight] : snapshot.citation.weights) {
        write_string(out, pair.a);
        write_string(out, pair.b);
        write_f64(out, weight);
    }

    if (!out) throw SnapshotError("write failure");
}

Snapshot load_snapshot(std::istream& in) {
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw SnapshotError("bad magic: not a snapshot file");
    }
    uint32_t version = read_u32(in);
    if (version != kSnapshotVersion) {
        throw SnapshotError("unsupported version " + std::to_string(version) +
                            " (expected " + std::to_string(kSnapshotVersion) + ")");
    }

    Snapshot snapshot;
    uint64_t paper_count = read_u64(in);
    for (uint64_t i = 0; i < paper_count; ++i) {
        PaperRecord paper;
        paper.id = read_string(in);
        paper.title = read_string(in);
        paper.authors = read_string_list(in);
        if (read_raw<uint8_t>(in) != 0) paper.year = read_raw<int32_t>(in);
        paper.venue = read_optional_string(in);
        paper.references = read_string_list(in);
        paper.abstract = read_optional_string(in);
        paper.in_citations = read_i64(in);
        std::string key = paper.id;
        snapshot.bundle.papers.emplace(std::move(key), std::move(paper));
    }

    uint64_t author_count = read_u64(in);
    for (uint64_t i = 0; i < author_count; ++i) {
        AuthorRecord author;
        author.name = read_string(in);
        author.papers = read_string_list(in);
        author.paper_count = static_cast<int64_t>(author.papers.size());
        author.total_citations = read_i64(in);
        std::string key = author.name;
        snapshot.bundle.authors.emplace(std::move(key), std::move(author));
    }

    uint64_t doc_count = read_u64(in);
    for (uint64_t i = 0; i < doc_count; ++i) {
        DocumentTerms doc;
        doc.paper_id = read_string(in);
        doc.length = read_i64(in);
        doc.term_freq = read_term_counts(in);
        std::string key = doc.paper_id;
        snapshot.index.docs.emplace(std::move(key), std::move(doc));
    }
    snapshot.index.stats.doc_count = read_i64(in);
    snapshot.index.stats.avg_len = read_f64(in);
    snapshot.index.stats.doc_freq = read_term_counts(in);

    std::set<std::string> nodes;
    uint64_t node_count = read_u64(in);
    for (uint64_t i = 0; i < node_count; ++i) nodes.insert(read_string(in));
    EdgeWeights weights;
    uint64_t edge_count = read_u64(in);
    for (uint64_t i = 0; i < edge_count; ++i) {
        std::string a = read_string(in);
        std::string b = read_string(in);
        double weight = read_f64(in);
        weights.emplace(AuthorPair(std::move(a), std::move(b)), weight);
    }
    snapshot.citation = make_graph(std::move(nodes), std::move(weights));
    return snapshot;
}

void save_snapshot_file(const std::string& path, const Snapshot& snapshot) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SnapshotError("cannot open \"" + path + "\" for writing");
    save_snapshot(out, snapshot);
    out.flush();
    if (!out) throw SnapshotError("write failure on \"" + path + "\"");
}

Snapshot load_snapshot_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SnapshotError("cannot open \"" + path + "\" for reading");
    return load_snapshot(in);
}

} // namespace teamrec
