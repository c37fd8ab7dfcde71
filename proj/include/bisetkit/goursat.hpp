#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "bisetkit/subgroup_data.hpp"

namespace bisetkit {

/// Pairs (g, h) of element indices packed as g * |H| + j; sets kept sorted.
using PairSet = std::vector<std::uint32_t>;

inline std::uint32_t pack_pair(int i, int j, std::size_t h_order) {
    return static_cast<std::uint32_t>(i) * static_cast<std::uint32_t>(h_order) + static_cast<std::uint32_t>(j);
}

/// Goursat quintuple describing a subgroup of G x H.
struct GoursatDatum {
    std::vector<int> P1, K1;  // in G
    std::vector<int> P2, K2;  // in H
    // graph of the section isomorphism on representatives: for each p in P1 one
    // h in P2 with (p, h) in L
    std::vector<std::pair<int, int>> eta_graph;
};

struct GoursatLabel {
    int sec_g = -1;
    int sec_h = -1;
    int eta_index = -1;
    std::vector<int> eta;  // canonical graph, quotient-of-G element -> quotient-of-H element
    long long size = 0;    // |L|
    std::string key;
};

/// The canonical basis of B(G, H): conjugacy classes of subgroups of G x H,
/// enumerated via the Goursat correspondence without materializing G x H.
class PairBasis {
public:
    PairBasis(const SubgroupData& g_data, const SubgroupData& h_data);

    const SubgroupData& g_data() const { return g_; }
    const SubgroupData& h_data() const { return h_; }

    std::size_t size() const { return labels_.size(); }
    const std::vector<GoursatLabel>& labels() const { return labels_; }
    const PairSet& subgroup_of(int label) const { return subgroups_[static_cast<std::size_t>(label)]; }

    /// Label of an arbitrary subgroup of G x H given as a packed pair set.
    int classify(const PairSet& l) const;

    /// Identity label (diagonal), only defined when G == H (same realization).
    int identity_label() const;

private:
    std::vector<int> minimize_eta(int sec_g, int sec_h, const std::vector<int>& eta) const;

    const SubgroupData& g_;
    const SubgroupData& h_;
    std::vector<GoursatLabel> labels_;
    std::vector<PairSet> subgroups_;
    // (sec_g, sec_h) -> sorted canonical graphs; lookup into labels
    std::unordered_map<std::uint64_t, int> lookup_;
    mutable int identity_label_ = -2;
};

PairSet subgroup_from_datum(const SubgroupData& g_data, const SubgroupData& h_data, const GoursatDatum& d);
GoursatDatum datum_from_subgroup(const SubgroupData& g_data, const SubgroupData& h_data, const PairSet& l);

/// Orbit search over componentwise conjugation; the independent conjugacy oracle.
bool are_conjugate(const PermGroup& g, const PermGroup& h, const PairSet& a, const PairSet& b);

PairSet conj_pair_set(const PermGroup& g, const PermGroup& h, const PairSet& l, int cg, int ch);

}  // namespace bisetkit
