#include "pivotgraph/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include <nlohmann/json.hpp>

#include "pivotgraph/errors.hpp"

namespace pivotgraph {

using nlohmann::json;
using nlohmann::ordered_json;

const char* color_name(Color c) {
    switch (c) {
        case Color::cyan: return "cyan";
        case Color::pink: return "pink";
        default: return "none";
    }
}

ColoredGraph ColoredGraph::make(std::vector<std::pair<std::string, Color>> vertices,
                                const std::vector<std::pair<std::string, std::string>>& edges) {
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i].first.empty()) throw InputError("vertex id must be nonempty");
        if (i > 0 && vertices[i].first == vertices[i - 1].first)
            throw InputError("duplicate vertex id '" + vertices[i].first + "'");
    }

    ColoredGraph g;
    g.ids_.reserve(vertices.size());
    g.colors_.reserve(vertices.size());
    for (auto& [vid, col] : vertices) {
        g.ids_.push_back(std::move(vid));
        g.colors_.push_back(col);
    }
    g.adj_.assign(g.ids_.size(), {});

    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : edges) {
        int i = g.find(a);
        int j = g.find(b);
        if (i < 0) throw InputError("edge endpoint '" + a + "' is not a declared vertex");
        if (j < 0) throw InputError("edge endpoint '" + b + "' is not a declared vertex");
        if (i == j) throw InputError("loop edge at '" + a + "'");
        if (i > j) std::swap(i, j);
        if (!seen.insert({i, j}).second)
            throw InputError("duplicate edge {" + g.ids_[i] + "," + g.ids_[j] + "}");
    }
    for (auto [i, j] : seen) {
        g.adj_[i].push_back(j);
        g.adj_[j].push_back(i);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.edge_count_ = static_cast<int>(seen.size());

    bool colored = g.has_colors();
    if (colored) {
        for (auto [i, j] : seen) {
            Color ci = g.colors_[i], cj = g.colors_[j];
            bool ok = (ci == Color::cyan && cj == Color::pink) ||
                      (ci == Color::pink && cj == Color::cyan);
            if (!ok)
                throw InputError("colored graph must be bipartite cyan-pink; edge {" +
                                 g.ids_[i] + "," + g.ids_[j] + "} is not");
        }
    }
    return g;
}

bool ColoredGraph::adjacent(int i, int j) const {
    const auto& nb = adj_[i];
    return std::binary_search(nb.begin(), nb.end(), j);
}

bool ColoredGraph::has_colors() const {
    return std::any_of(colors_.begin(), colors_.end(),
                       [](Color c) { return c != Color::none; });
}

int ColoredGraph::find(const std::string& vid) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), vid);
    if (it == ids_.end() || *it != vid) return -1;
    return static_cast<int>(it - ids_.begin());
}

int ColoredGraph::index_of(const std::string& vid) const {
    int i = find(vid);
    if (i < 0) throw InputError("unknown vertex '" + vid + "'");
    return i;
}

std::vector<std::pair<int, int>> ColoredGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int i = 0; i < size(); ++i)
        for (int j : adj_[i])
            if (i < j) out.emplace_back(i, j);
    return out;
}

int ColoredGraph::degree(int v) const { return static_cast<int>(adj_[v].size()); }

int ColoredGraph::degree(const std::string& vid) const { return degree(index_of(vid)); }

bool ColoredGraph::is_connected() const {
    if (size() == 0) return false;
    std::vector<char> vis(size(), 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj_[v])
            if (!vis[w]) {
                vis[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == size();
}

std::int64_t ColoredGraph::betti() const {
    if (!is_connected()) throw InputError("betti requires a connected graph");
    return static_cast<std::int64_t>(edge_count_) - size() + 1;
}

int ColoredGraph::distance(int a, int b) const {
    if (a == b) return 0;
    std::vector<int> dist(size(), -1);
    std::queue<int> q;
    q.push(a);
    dist[a] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj_[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                if (w == b) return dist[w];
                q.push(w);
            }
    }
    throw InputError("distance: vertices lie in different components");
}

int ColoredGraph::distance(const std::string& a, const std::string& b) const {
    return distance(index_of(a), index_of(b));
}

ColoredGraph ColoredGraph::prune_leaves() const {
    std::vector<std::pair<std::string, Color>> keep;
    std::vector<char> kept(size(), 0);
    for (int i = 0; i < size(); ++i)
        if (degree(i) != 1) {
            keep.emplace_back(ids_[i], colors_[i]);
            kept[i] = 1;
        }
    std::vector<std::pair<std::string, std::string>> es;
    for (auto [i, j] : edges())
        if (kept[i] && kept[j]) es.emplace_back(ids_[i], ids_[j]);
    return make(std::move(keep), es);
}

std::pair<ColoredGraph, std::string> ColoredGraph::add_apex(
    const std::vector<std::string>& targets) const {
    if (targets.empty()) throw InputError("add_apex: empty target set");
    std::set<std::string> tset;
    for (const auto& t : targets) {
        index_of(t);  // validate
        tset.insert(t);
    }
    std::string apex = "apex";
    for (int k = 1; find(apex) >= 0; ++k) apex = "apex_" + std::to_string(k);

    std::vector<std::pair<std::string, Color>> vs;
    for (int i = 0; i < size(); ++i) vs.emplace_back(ids_[i], colors_[i]);
    vs.emplace_back(apex, Color::none);
    std::vector<std::pair<std::string, std::string>> es;
    for (auto [i, j] : edges()) es.emplace_back(ids_[i], ids_[j]);
    for (const auto& t : tset) es.emplace_back(apex, t);
    return {make(std::move(vs), es), apex};
}

ordered_json ColoredGraph::to_json() const {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (int i = 0; i < size(); ++i) {
        ordered_json v;
        v["id"] = ids_[i];
        if (colors_[i] != Color::none) v["color"] = color_name(colors_[i]);
        j["vertices"].push_back(std::move(v));
    }
    std::vector<std::pair<std::string, std::string>> es;
    for (auto [i, jx] : edges()) es.emplace_back(ids_[i], ids_[jx]);
    std::sort(es.begin(), es.end());
    j["edges"] = ordered_json::array();
    for (auto& [a, b] : es) j["edges"].push_back(ordered_json::array({a, b}));
    return j;
}

ColoredGraph ColoredGraph::from_json(const json& j) {
    if (!j.is_object()) throw InputError("graph JSON must be an object");
    for (auto& [key, _] : j.items())
        if (key != "vertices" && key != "edges")
            throw InputError("graph JSON: unknown field '" + key + "'");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw InputError("graph JSON: missing 'vertices' array");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw InputError("graph JSON: missing 'edges' array");

    std::vector<std::pair<std::string, Color>> vs;
    for (const auto& v : j["vertices"]) {
        if (!v.is_object() || !v.contains("id") || !v["id"].is_string())
            throw InputError("graph JSON: each vertex needs a string 'id'");
        Color c = Color::none;
        for (auto& [key, val] : v.items()) {
            if (key == "id") continue;
            if (key == "color") {
                if (!val.is_string()) throw InputError("graph JSON: 'color' must be a string");
                std::string s = val.get<std::string>();
                if (s == "cyan") c = Color::cyan;
                else if (s == "pink") c = Color::pink;
                else throw InputError("graph JSON: unknown color '" + s + "'");
            } else {
                throw InputError("graph JSON: unknown vertex field '" + key + "'");
            }
        }
        vs.emplace_back(v["id"].get<std::string>(), c);
    }
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw InputError("graph JSON: each edge must be a pair of vertex ids");
        es.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return make(std::move(vs), es);
}

}  // namespace pivotgraph
