#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pivotgraph/graph.hpp"

namespace pivotgraph {

// A permutation of a domain of n ids, stored as images by dense index.
using Perm = std::vector<std::uint16_t>;
using DomainPtr = std::shared_ptr<const std::vector<std::string>>;

Perm identity_perm(int n);
bool is_identity(const Perm& p);
Perm compose(const Perm& a, const Perm& b);  // x -> b[a[x]], "a then b"
Perm inverse_perm(const Perm& p);
Perm conjugate_perm(const Perm& p, const Perm& g);  // g^-1 then p then g

struct PermHash {
    std::size_t operator()(const Perm& p) const;
};

// Breadth-first closure of a generating set under composition; throws
// CapacityError past `cap`. Returns the sorted element list.
std::vector<Perm> close_perms(const std::vector<Perm>& gens, int n, std::int64_t cap);

// Greedy reduction of a full element list to a small generating set.
std::vector<Perm> reduce_generators(const std::vector<Perm>& elements, int n);

inline constexpr std::int64_t kDefaultGroupCap = 1000000;

// Exact finite permutation group, fully materialized. Immutable once built.
class PermGroup {
public:
    PermGroup() = default;

    static PermGroup trivial(DomainPtr domain);
    static PermGroup close(DomainPtr domain, std::vector<Perm> gens, std::int64_t cap);
    // Trusted constructor for an already-closed element set.
    static PermGroup from_elements(DomainPtr domain, std::vector<Perm> elements);

    const std::vector<std::string>& domain() const { return *domain_; }
    DomainPtr domain_ptr() const { return domain_; }
    int degree() const { return static_cast<int>(domain_->size()); }
    std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return gens_; }

    bool contains(const Perm& p) const;
    bool is_subgroup_of(const PermGroup& other) const;
    bool same_domain(const PermGroup& other) const;
    // Element-set equality over equal domains.
    bool operator==(const PermGroup& other) const;

    int index_in_domain(const std::string& vid) const;  // throws InputError

    std::vector<int> orbit(int x) const;                // sorted, contains x
    std::set<std::string> orbit_ids(const std::string& x) const;
    std::vector<std::vector<int>> orbits() const;       // partition of the domain
    PermGroup stabilizer(int v) const;
    PermGroup stabilizer_id(const std::string& v) const;

    nlohmann::ordered_json generators_json() const;

private:
    DomainPtr domain_;
    std::vector<Perm> gens_;
    std::vector<Perm> elements_;  // sorted
};

// True iff every generator maps edges to edges and preserves colors.
// The group's domain must equal the graph's vertex ids.
bool is_action_on(const PermGroup& G, const ColoredGraph& g);

DomainPtr domain_of(const ColoredGraph& g);

// {"generators":[{"a":"b","b":"a"}, ...]}; omitted ids are fixed points.
PermGroup group_from_json(const nlohmann::json& j, DomainPtr domain, std::int64_t cap);
Perm perm_from_json(const nlohmann::json& mapping, const std::vector<std::string>& domain);

}  // namespace pivotgraph
