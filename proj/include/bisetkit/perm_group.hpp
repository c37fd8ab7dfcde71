#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bisetkit/perm.hpp"

namespace bisetkit {

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

/// A fully enumerated finite permutation group. Elements are sorted by image
/// sequence, so element index 0 is always the identity and indices are a
/// canonical labelling of the elements.
class PermGroup {
public:
    /// Enumerates the closure of `generators`; throws BoundExceeded if the
    /// order would pass `bound`.
    static std::shared_ptr<const PermGroup> closure(std::vector<Perm> generators, std::size_t bound,
                                                    std::size_t degree_hint = 0);

    std::size_t degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<int>& generators() const { return gen_indices_; }

    const Perm& perm(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    int index_of(const Perm& p) const;  // -1 if absent

    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order() + static_cast<std::size_t>(b)]; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    int conj(int x, int g) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
    int element_order(int a) const { return orders_[static_cast<std::size_t>(a)]; }
    int identity() const { return 0; }

    /// Multiset of element orders, sorted; an isomorphism invariant.
    const std::vector<int>& order_multiset() const { return order_multiset_; }

    /// Stable digest of the exact realization (degree + element images).
    std::string realization_digest() const;

private:
    friend GroupPtr group_from_elements(std::vector<Perm> elements);
    PermGroup() = default;
    void build_tables();

    std::size_t degree_ = 1;
    std::vector<Perm> elements_;
    std::vector<int> gen_indices_;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<int> orders_;
    std::vector<int> order_multiset_;
};

/// Group made of the given closed element set (already a subgroup of some
/// symmetric group); used to realize subgroups and quotients as groups.
GroupPtr group_from_elements(std::vector<Perm> elements);

GroupPtr trivial_group();
GroupPtr cyclic_group(int n);
GroupPtr symmetric_group(int n, std::size_t bound = 1u << 20);
GroupPtr alternating_group(int n, std::size_t bound = 1u << 20);
GroupPtr dihedral_group(int order2n);  // dihedral group of order 2n (argument = order)
GroupPtr klein_four_group();
GroupPtr quaternion_group();
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, std::size_t bound);

}  // namespace bisetkit
