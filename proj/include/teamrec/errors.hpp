#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace teamrec {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lookup of an author name that is not in the corpus or graph.
class AuthorNotFound : public Error {
public:
    explicit AuthorNotFound(std::string name)
        : Error("author not found: \"" + name + "\""), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class IndexEmpty : public Error {
public:
    IndexEmpty() : Error("text index has no usable documents") {}
};

class EmptyEdgeSet : public Error {
public:
    EmptyEdgeSet() : Error("cannot normalize an empty edge-weight map") {}
};

class GraphShapeMismatch : public Error {
public:
    explicit GraphShapeMismatch(const std::string& detail)
        : Error("graph shape mismatch: " + detail) {}
};

class SameNode : public Error {
public:
    explicit SameNode(const std::string& name)
        : Error("source and destination are the same node: \"" + name + "\"") {}
};

class InvalidRequest : public Error {
public:
    explicit InvalidRequest(const std::string& detail)
        : Error("invalid request: " + detail) {}
};

/// Snapshot I/O failure: bad magic, unsupported version, or truncated data.
class SnapshotError : public Error {
public:
    explicit SnapshotError(const std::string& detail)
        : Error("snapshot error: " + detail) {}
};

} // namespace teamrec
