#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bisetkit/perm_group.hpp"

namespace bisetkit {

/// Element-index map realizing an isomorphism between two enumerated groups.
using ElementMap = std::vector<int>;

std::optional<ElementMap> iso_test(const PermGroup& a, const PermGroup& b);
std::vector<ElementMap> all_isomorphisms(const PermGroup& a, const PermGroup& b, std::size_t limit = 500000);
std::vector<ElementMap> all_automorphisms(const PermGroup& g, std::size_t limit = 500000);

ElementMap compose_maps(const ElementMap& f, const ElementMap& g);  // (f∘g)(x) = f(g(x))
ElementMap invert_map(const ElementMap& f);

/// Canonical multiplication-table key; definitive iso invariant for order <= 24.
std::string canonical_table_key(const PermGroup& g);

/// Out(H) = Aut(H)/Inn(H) with explicit coset representatives and table.
struct OutGroup {
    GroupPtr base;
    std::size_t aut_order = 0;
    std::size_t inn_order = 0;
    std::vector<ElementMap> out_elements;       // sorted coset representatives; index 0 = identity
    std::vector<std::vector<int>> table;        // table[i][j] = class of out_i ∘ out_j
    std::vector<int> inverse;
    std::size_t order() const { return out_elements.size(); }
    /// Out class of an arbitrary automorphism of base.
    int class_of(const ElementMap& aut) const;
};

OutGroup out_group(const GroupPtr& h, std::size_t aut_limit = 500000);

/// Center of the group, as element indices.
std::vector<int> center(const PermGroup& g);

}  // namespace bisetkit
