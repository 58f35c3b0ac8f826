#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace pivotgraph {

enum class Color { none, cyan, pink };

const char* color_name(Color c);

// Finite simple undirected graph with optional cyan/pink vertex colors.
// Vertices are identified by nonempty string ids; internally they are the
// dense indices 0..n-1 in lexicographic id order, which is also the order
// serializers emit. If any vertex is colored, every edge must join a cyan
// vertex to a pink one.
class ColoredGraph {
public:
    ColoredGraph() = default;

    static ColoredGraph make(std::vector<std::pair<std::string, Color>> vertices,
                             const std::vector<std::pair<std::string, std::string>>& edges);

    int size() const { return static_cast<int>(ids_.size()); }
    int edge_count() const { return edge_count_; }
    const std::string& id(int i) const { return ids_[i]; }
    const std::vector<std::string>& ids() const { return ids_; }
    Color color(int i) const { return colors_[i]; }
    const std::vector<int>& neighbors(int i) const { return adj_[i]; }
    bool adjacent(int i, int j) const;
    bool has_colors() const;

    // Dense index of an id; throws InputError for unknown ids.
    int index_of(const std::string& vid) const;
    // Like index_of but returns -1 instead of throwing.
    int find(const std::string& vid) const;

    // Edges as index pairs (i < j), lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    int degree(int v) const;
    int degree(const std::string& vid) const;

    // Empty graph is not connected; a single vertex is.
    bool is_connected() const;

    // |E| - |V| + 1; requires a connected graph.
    std::int64_t betti() const;

    // Shortest-path length; requires a connected graph containing both ids.
    int distance(int a, int b) const;
    int distance(const std::string& a, const std::string& b) const;

    // Full subgraph on the vertices of degree != 1, applied once.
    ColoredGraph prune_leaves() const;

    // New graph with a fresh uncolored vertex joined to exactly `targets`;
    // returns the fresh vertex id. Fails on colored graphs (the apex edge
    // would not be cyan-pink).
    std::pair<ColoredGraph, std::string> add_apex(const std::vector<std::string>& targets) const;

    nlohmann::ordered_json to_json() const;
    static ColoredGraph from_json(const nlohmann::json& j);

    bool operator==(const ColoredGraph&) const = default;

private:
    std::vector<std::string> ids_;        // sorted
    std::vector<Color> colors_;
    std::vector<std::vector<int>> adj_;   // sorted neighbor lists
    int edge_count_ = 0;
};

}  // namespace pivotgraph
