#include "pivotgraph/group.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "pivotgraph/errors.hpp"

namespace pivotgraph {

using nlohmann::json;
using nlohmann::ordered_json;

Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = static_cast<std::uint16_t>(i);
    return p;
}

bool is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

Perm inverse_perm(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint16_t>(i);
    return r;
}

Perm conjugate_perm(const Perm& p, const Perm& g) {
    // x -> g(p(g^-1(x)))
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[g[i]] = g[p[i]];
    return r;
}

std::size_t PermHash::operator()(const Perm& p) const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (std::uint16_t v : p) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

std::vector<Perm> close_perms(const std::vector<Perm>& gens, int n, std::int64_t cap) {
    std::unordered_set<Perm, PermHash> seen;
    std::vector<Perm> queue;
    queue.push_back(identity_perm(n));
    seen.insert(queue[0]);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Perm cur = queue[head];  // copy: queue may reallocate
        for (const Perm& g : gens) {
            Perm next = compose(cur, g);
            if (seen.insert(next).second) {
                if (static_cast<std::int64_t>(seen.size()) > cap)
                    throw CapacityError("group closure exceeds cap of " + std::to_string(cap));
                queue.push_back(std::move(next));
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

std::vector<Perm> reduce_generators(const std::vector<Perm>& elements, int n) {
    std::vector<Perm> gens;
    std::unordered_set<Perm, PermHash> closed;
    closed.insert(identity_perm(n));
    for (const Perm& e : elements) {
        if (closed.count(e)) continue;
        gens.push_back(e);
        auto cl = close_perms(gens, n, static_cast<std::int64_t>(elements.size()));
        closed = std::unordered_set<Perm, PermHash>(cl.begin(), cl.end());
        if (closed.size() == elements.size()) break;
    }
    return gens;
}

PermGroup PermGroup::trivial(DomainPtr domain) {
    PermGroup g;
    g.domain_ = std::move(domain);
    g.elements_ = {identity_perm(static_cast<int>(g.domain_->size()))};
    return g;
}

PermGroup PermGroup::close(DomainPtr domain, std::vector<Perm> gens, std::int64_t cap) {
    int n = static_cast<int>(domain->size());
    for (const Perm& g : gens)
        if (static_cast<int>(g.size()) != n)
            throw InputError("generator does not act on the declared domain");
    if (cap < 1) throw InputError("group cap must be positive");
    PermGroup out;
    out.domain_ = std::move(domain);
    out.elements_ = close_perms(gens, n, cap);
    gens.erase(std::remove_if(gens.begin(), gens.end(), is_identity), gens.end());
    out.gens_ = std::move(gens);
    return out;
}

PermGroup PermGroup::from_elements(DomainPtr domain, std::vector<Perm> elements) {
    int n = static_cast<int>(domain->size());
    PermGroup out;
    out.domain_ = std::move(domain);
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty()) elements.push_back(identity_perm(n));
    out.gens_ = reduce_generators(elements, n);
    out.elements_ = std::move(elements);
    return out;
}

bool PermGroup::contains(const Perm& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
    if (!same_domain(other)) return false;
    return std::all_of(elements_.begin(), elements_.end(),
                       [&](const Perm& p) { return other.contains(p); });
}

bool PermGroup::same_domain(const PermGroup& other) const {
    return domain_ == other.domain_ || *domain_ == *other.domain_;
}

bool PermGroup::operator==(const PermGroup& other) const {
    return same_domain(other) && elements_ == other.elements_;
}

int PermGroup::index_in_domain(const std::string& vid) const {
    auto it = std::lower_bound(domain_->begin(), domain_->end(), vid);
    if (it == domain_->end() || *it != vid)
        throw InputError("'" + vid + "' is outside the group domain");
    return static_cast<int>(it - domain_->begin());
}

std::vector<int> PermGroup::orbit(int x) const {
    if (x < 0 || x >= degree()) throw InputError("orbit: vertex outside domain");
    std::vector<char> in(degree(), 0);
    std::vector<int> out{x};
    in[x] = 1;
    for (std::size_t head = 0; head < out.size(); ++head)
        for (const Perm& g : gens_) {
            int y = g[out[head]];
            if (!in[y]) {
                in[y] = 1;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<std::string> PermGroup::orbit_ids(const std::string& x) const {
    std::set<std::string> out;
    for (int i : orbit(index_in_domain(x))) out.insert((*domain_)[i]);
    return out;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<std::vector<int>> out;
    std::vector<char> done(degree(), 0);
    for (int v = 0; v < degree(); ++v) {
        if (done[v]) continue;
        auto orb = orbit(v);
        for (int x : orb) done[x] = 1;
        out.push_back(std::move(orb));
    }
    return out;
}

PermGroup PermGroup::stabilizer(int v) const {
    if (v < 0 || v >= degree()) throw InputError("stabilizer: vertex outside domain");
    std::vector<Perm> fix;
    for (const Perm& p : elements_)
        if (p[v] == v) fix.push_back(p);
    return from_elements(domain_, std::move(fix));
}

PermGroup PermGroup::stabilizer_id(const std::string& v) const {
    return stabilizer(index_in_domain(v));
}

ordered_json PermGroup::generators_json() const {
    ordered_json out;
    out["generators"] = ordered_json::array();
    for (const Perm& g : gens_) {
        std::map<std::string, std::string> moved;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] != i) moved[(*domain_)[i]] = (*domain_)[g[i]];
        ordered_json m = ordered_json::object();
        for (auto& [k, v] : moved) m[k] = v;
        out["generators"].push_back(std::move(m));
    }
    return out;
}

DomainPtr domain_of(const ColoredGraph& g) {
    return std::make_shared<const std::vector<std::string>>(g.ids());
}

bool is_action_on(const PermGroup& G, const ColoredGraph& g) {
    if (G.domain() != g.ids()) throw InputError("group domain does not match the vertex set");
    auto es = g.edges();
    for (const Perm& p : G.generators()) {
        for (int i = 0; i < g.size(); ++i)
            if (g.color(p[i]) != g.color(i)) return false;
        for (auto [a, b] : es)
            if (!g.adjacent(p[a], p[b])) return false;
    }
    return true;
}

Perm perm_from_json(const json& mapping, const std::vector<std::string>& domain) {
    if (!mapping.is_object()) throw InputError("generator must be a JSON object mapping ids to ids");
    int n = static_cast<int>(domain.size());
    auto idx = [&](const std::string& vid) {
        auto it = std::lower_bound(domain.begin(), domain.end(), vid);
        if (it == domain.end() || *it != vid)
            throw InputError("generator mentions unknown id '" + vid + "'");
        return static_cast<int>(it - domain.begin());
    };
    Perm p = identity_perm(n);
    std::vector<char> hit(n, 0);
    for (auto& [k, v] : mapping.items()) {
        if (!v.is_string()) throw InputError("generator images must be strings");
        p[idx(k)] = static_cast<std::uint16_t>(idx(v.get<std::string>()));
    }
    for (int i = 0; i < n; ++i) {
        if (hit[p[i]]) throw InputError("generator is not injective");
        hit[p[i]] = 1;
    }
    return p;
}

PermGroup group_from_json(const json& j, DomainPtr domain, std::int64_t cap) {
    if (!j.is_object()) throw InputError("group JSON must be an object");
    for (auto& [key, _] : j.items())
        if (key != "generators") throw InputError("group JSON: unknown field '" + key + "'");
    if (!j.contains("generators") || !j["generators"].is_array())
        throw InputError("group JSON: missing 'generators' array");
    std::vector<Perm> gens;
    for (const auto& m : j["generators"]) gens.push_back(perm_from_json(m, *domain));
    return PermGroup::close(std::move(domain), std::move(gens), cap);
}

}  // namespace pivotgraph
