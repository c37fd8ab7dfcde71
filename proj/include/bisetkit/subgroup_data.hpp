#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bisetkit/perm_group.hpp"

namespace bisetkit {

/// A subgroup of a fixed parent group, as a sorted list of element indices.
struct Subgroup {
    GroupPtr parent;
    std::vector<int> elems;
};

/// A section (P, K) of the parent group with K normal in P, together with the
/// quotient realized as a permutation group.
struct SectionInfo {
    int p_class = -1;             // conjugacy class of P
    std::vector<int> P;           // class representative (element indices)
    std::vector<int> K;           // canonical normal subgroup rep within the N_G(P)-orbit
    GroupPtr quotient;            // faithful realization of P/K
    std::vector<int> pi;          // parent element index -> quotient element index (-1 outside P)
    std::vector<int> coset_rep;   // quotient element index -> one parent preimage
    std::vector<std::vector<int>> induced_autos;  // automorphisms of the quotient induced by N_G(P,K)
};

std::vector<int> conj_subgroup(const PermGroup& g, const std::vector<int>& elems, int c);
std::vector<int> closure_indices(const PermGroup& g, const std::vector<int>& gens);

/// Full subgroup lattice, conjugacy classes and section classes of one group.
class SubgroupData {
public:
    explicit SubgroupData(GroupPtr g, std::size_t subgroup_limit = 200000);

    const PermGroup& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }

    std::size_t subgroup_count() const { return subgroups_.size(); }
    const std::vector<std::vector<int>>& subgroups() const { return subgroups_; }
    int subgroup_index(const std::vector<int>& elems) const;

    std::size_t class_count() const { return class_reps_.size(); }
    const std::vector<int>& class_rep(int c) const { return subgroups_[static_cast<std::size_t>(class_reps_[static_cast<std::size_t>(c)])]; }
    const std::vector<std::vector<int>>& class_members() const { return class_members_; }
    int class_of(int subgroup_idx) const { return class_of_[static_cast<std::size_t>(subgroup_idx)]; }
    /// Element t with conj(S, t) == class representative of S's class.
    int conjugator_to_rep(int subgroup_idx) const { return to_rep_[static_cast<std::size_t>(subgroup_idx)]; }

    const std::vector<int>& normalizer_of_rep(int c) const { return normalizers_[static_cast<std::size_t>(c)]; }

    const std::vector<SectionInfo>& sections() const { return sections_; }
    /// Locate the section class of an arbitrary pair (P, K) with K normal in P.
    /// Returns (section index, t) with conj(P,t) == section.P and conj(K,t) == section.K.
    std::pair<int, int> locate_section(const std::vector<int>& P, const std::vector<int>& K) const;

private:
    void enumerate_subgroups(std::size_t limit);
    void build_classes();
    void build_sections();

    GroupPtr group_;
    std::vector<std::vector<int>> subgroups_;  // sorted by (size, elements)
    std::unordered_map<std::uint64_t, std::vector<int>> index_buckets_;
    std::vector<int> class_of_;
    std::vector<int> to_rep_;
    std::vector<int> class_reps_;              // subgroup index of each class rep
    std::vector<std::vector<int>> class_members_;
    std::vector<std::vector<int>> normalizers_;

    std::vector<SectionInfo> sections_;
    // per (class, normal subgroup index): section idx and transporter within N_G(P)
    std::vector<std::unordered_map<int, std::pair<int, int>>> section_lookup_;
};

std::uint64_t hash_int_vector(const std::vector<int>& v);

}  // namespace bisetkit
