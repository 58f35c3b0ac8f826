#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pivotgraph/graph.hpp"
#include "pivotgraph/group.hpp"

namespace pivotgraph {

// Relabeling-invariant certificate of a colored graph: two graphs have equal
// bytes iff they are isomorphic by a color-preserving isomorphism.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;
    std::vector<int> ordering;  // canonical position -> vertex index

    std::string hex() const;
    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.bytes == b.bytes;
    }
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        return a.bytes < b.bytes;
    }
};

CanonicalForm canonical_form(const ColoredGraph& g);

// Full group of color-preserving automorphisms.
PermGroup automorphism_group(const ColoredGraph& g, std::int64_t cap = kDefaultGroupCap);

// One search for both (the leaves of the canonical search are the
// automorphism coset of the canonical labeling).
std::pair<CanonicalForm, PermGroup> canonical_and_automorphisms(
    const ColoredGraph& g, std::int64_t cap = kDefaultGroupCap);

enum class SubgroupPolicy { cyclic, pairs, all };

const char* policy_name(SubgroupPolicy p);
std::optional<SubgroupPolicy> policy_from_name(const std::string& s);

// Deduplicated subgroup list per policy; always includes the trivial group
// and G itself. cyclic: every <a>. pairs: every <a,b>. all: every subgroup
// (cap also bounds the number of subgroups produced).
std::vector<PermGroup> subgroup_actions(const PermGroup& G, SubgroupPolicy policy,
                                        std::int64_t cap);

}  // namespace pivotgraph
