#pragma once

#include <string>

#include "simguard/graph.hpp"

namespace simguard {

/// On-disk formats:
///   features: CSV (one node per row, d float columns) or binary
///             ("SGFX", u32 N, u32 d, N*d little-endian f32 row-major);
///             the binary form is detected by its magic bytes.
///   edges:    text, one "u v" pair per line, 0-based.
///   labels:   CSV "node_id,label"; ids absent from the file are unlabeled.
AttributedGraph ingest(const std::string& features_path, const std::string& edges_path,
                       const std::string& labels_path);

enum class FeatureFormat { Binary, Csv };

void export_graph(const AttributedGraph& g, const std::string& features_path,
                  const std::string& edges_path, const std::string& labels_path,
                  FeatureFormat format);

void save_split(const SplitSpec& split, const std::string& path);
SplitSpec load_split(const std::string& path);

}  // namespace simguard
