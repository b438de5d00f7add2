#include "simguard/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace simguard {

namespace {

void put_u32_le(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16),
                          static_cast<unsigned char>(v >> 24)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32_le(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (!is) throw ParseError("features: truncated binary header");
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

bool is_binary_features(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open features file: " + path);
    char magic[4] = {};
    f.read(magic, 4);
    return f.gcount() == 4 && std::memcmp(magic, "SGFX", 4) == 0;
}

Matrix read_features_binary(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open features file: " + path);
    char magic[4];
    f.read(magic, 4);
    std::uint32_t n = get_u32_le(f);
    std::uint32_t d = get_u32_le(f);
    Matrix m(n, d);
    std::vector<float> row(d);
    for (std::uint32_t i = 0; i < n; ++i) {
        f.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(d) * 4);
        if (!f) throw ParseError("features: truncated binary payload at row " + std::to_string(i));
        for (std::uint32_t j = 0; j < d; ++j) m(i, j) = static_cast<double>(row[j]);
    }
    return m;
}

Matrix read_features_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open features file: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    std::size_t d = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<double> vals;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t used = 0;
                double v = std::stod(cell, &used);
                while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used])))
                    ++used;
                if (used != cell.size()) throw std::invalid_argument(cell);
                vals.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("features line " + std::to_string(lineno) +
                                 ": bad float value '" + cell + "'");
            }
        }
        if (vals.empty())
            throw ParseError("features line " + std::to_string(lineno) + ": empty row");
        if (d == 0) d = vals.size();
        if (vals.size() != d)
            throw ParseError("features line " + std::to_string(lineno) +
                             ": expected " + std::to_string(d) + " columns, got " +
                             std::to_string(vals.size()));
        rows.push_back(std::move(vals));
    }
    Matrix m(rows.size(), d);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = rows[i][j];
    return m;
}

std::vector<std::pair<NodeId, NodeId>> read_edges(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open edges file: " + path);
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        std::stringstream ss(line);
        long long u, v;
        if (!(ss >> u)) {
            bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
            if (blank) continue;
            throw ParseError("edges line " + std::to_string(lineno) + ": expected 'u v'");
        }
        if (!(ss >> v))
            throw ParseError("edges line " + std::to_string(lineno) + ": missing second endpoint");
        std::string rest;
        if (ss >> rest)
            throw ParseError("edges line " + std::to_string(lineno) + ": trailing content");
        if (u == v)
            throw ParseError("edges line " + std::to_string(lineno) + ": self-loop on node " +
                             std::to_string(u));
        edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
    return edges;
}

std::vector<int> read_labels(const std::string& path, NodeId n_nodes) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open labels file: " + path);
    std::vector<int> labels(static_cast<std::size_t>(n_nodes), kUnlabeled);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::stringstream ss(line);
        std::string id_s, label_s;
        if (!std::getline(ss, id_s, ',') || !std::getline(ss, label_s))
            throw ParseError("labels line " + std::to_string(lineno) +
                             ": expected 'node_id,label'");
        long long id, label;
        try {
            id = std::stoll(id_s);
            label = std::stoll(label_s);
        } catch (const std::exception&) {
            throw ParseError("labels line " + std::to_string(lineno) + ": bad integer");
        }
        if (id < 0 || id >= n_nodes)
            throw ValidationError("labels line " + std::to_string(lineno) + ": node id " +
                                  std::to_string(id) + " out of range");
        if (label < 0)
            throw ValidationError("labels line " + std::to_string(lineno) + ": negative label");
        labels[static_cast<std::size_t>(id)] = static_cast<int>(label);
    }
    return labels;
}

}  // namespace

AttributedGraph ingest(const std::string& features_path, const std::string& edges_path,
                       const std::string& labels_path) {
    Matrix feats = is_binary_features(features_path) ? read_features_binary(features_path)
                                                     : read_features_csv(features_path);
    NodeId n = static_cast<NodeId>(feats.rows());
    auto edges = read_edges(edges_path);
    for (const auto& [u, v] : edges)
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ValidationError("edges: endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    auto labels = read_labels(labels_path, n);
    return AttributedGraph(std::move(feats), std::move(edges), std::move(labels));
}

void export_graph(const AttributedGraph& g, const std::string& features_path,
                  const std::string& edges_path, const std::string& labels_path,
                  FeatureFormat format) {
    const Matrix& x = g.features();
    if (format == FeatureFormat::Binary) {
        std::ofstream f(features_path, std::ios::binary);
        if (!f) throw IoError("cannot write features file: " + features_path);
        f.write("SGFX", 4);
        put_u32_le(f, static_cast<std::uint32_t>(x.rows()));
        put_u32_le(f, static_cast<std::uint32_t>(x.cols()));
        std::vector<float> row(x.cols());
        for (std::size_t i = 0; i < x.rows(); ++i) {
            for (std::size_t j = 0; j < x.cols(); ++j) row[j] = static_cast<float>(x(i, j));
            f.write(reinterpret_cast<const char*>(row.data()),
                    static_cast<std::streamsize>(x.cols()) * 4);
        }
    } else {
        std::ofstream f(features_path);
        if (!f) throw IoError("cannot write features file: " + features_path);
        char buf[64];
        for (std::size_t i = 0; i < x.rows(); ++i) {
            for (std::size_t j = 0; j < x.cols(); ++j) {
                int len = std::snprintf(buf, sizeof(buf), "%.17g", x(i, j));
                if (j) f.put(',');
                f.write(buf, len);
            }
            f.put('\n');
        }
    }

    std::ofstream fe(edges_path);
    if (!fe) throw IoError("cannot write edges file: " + edges_path);
    for (const auto& [u, v] : g.edges()) fe << u << ' ' << v << '\n';

    std::ofstream fl(labels_path);
    if (!fl) throw IoError("cannot write labels file: " + labels_path);
    for (NodeId v = 0; v < g.n_nodes(); ++v)
        if (g.is_labeled(v)) fl << v << ',' << g.label(v) << '\n';
}

void save_split(const SplitSpec& split, const std::string& path) {
    nlohmann::ordered_json j;
    j["seed"] = split.seed;
    j["train"] = split.train_nodes;
    j["unseen"] = split.unseen_nodes;
    std::ofstream f(path);
    if (!f) throw IoError("cannot write split file: " + path);
    f << j.dump(2) << '\n';
}

SplitSpec load_split(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open split file: " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("split file: ") + e.what());
    }
    SplitSpec s;
    s.seed = j.at("seed").get<std::uint64_t>();
    s.train_nodes = j.at("train").get<IdSet>();
    s.unseen_nodes = j.at("unseen").get<IdSet>();
    sort_unique(s.train_nodes);
    sort_unique(s.unseen_nodes);
    return s;
}

}  // namespace simguard
