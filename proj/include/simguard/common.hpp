#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace simguard {

using NodeId = int;
using IdSet = std::vector<NodeId>;  // kept sorted and deduplicated

/// Bad user-supplied argument or configuration value.
struct ArgumentError : std::runtime_error {
    explicit ArgumentError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file content (carries line context where known).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Structurally invalid data (dangling edge endpoints, shape mismatches, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Optimization produced a non-finite loss.
struct TrainingError : std::runtime_error {
    explicit TrainingError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem failure.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// sorted-vector set helpers
void sort_unique(IdSet& ids);
bool contains(const IdSet& ids, NodeId id);
IdSet set_union(const IdSet& a, const IdSet& b);
IdSet set_difference(const IdSet& a, const IdSet& b);
IdSet set_intersection(const IdSet& a, const IdSet& b);

}  // namespace simguard
