#include "bisetkit/goursat.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "bisetkit/errors.hpp"
#include "bisetkit/iso.hpp"

namespace bisetkit {

namespace {

std::uint64_t eta_lookup_key(int sec_g, int sec_h, const std::vector<int>& eta) {
    std::uint64_t h = hash_int_vector(eta);
    h ^= (static_cast<std::uint64_t>(sec_g) << 32) ^ static_cast<std::uint64_t>(sec_h) * 0x9e3779b97f4a7c15ull;
    return h;
}

}  // namespace

std::vector<int> PairBasis::minimize_eta(int sec_g, int sec_h, const std::vector<int>& eta) const {
    const SectionInfo& s1 = g_.sections()[static_cast<std::size_t>(sec_g)];
    const SectionInfo& s2 = h_.sections()[static_cast<std::size_t>(sec_h)];
    std::vector<int> best = eta;
    for (const auto& alpha : s1.induced_autos) {
        std::vector<int> alpha_inv = invert_map(alpha);
        // candidate[x] = beta[eta[alpha_inv[x]]]
        std::vector<int> mid(eta.size());
        for (std::size_t x = 0; x < eta.size(); ++x)
            mid[x] = eta[static_cast<std::size_t>(alpha_inv[x])];
        for (const auto& beta : s2.induced_autos) {
            std::vector<int> cand(eta.size());
            for (std::size_t x = 0; x < eta.size(); ++x)
                cand[x] = beta[static_cast<std::size_t>(mid[x])];
            if (cand < best)
                best = std::move(cand);
        }
    }
    return best;
}

PairBasis::PairBasis(const SubgroupData& g_data, const SubgroupData& h_data) : g_(g_data), h_(h_data) {
    struct Raw {
        GoursatLabel label;
        PairSet subgroup;
    };
    std::vector<Raw> raws;
    for (std::size_t i = 0; i < g_.sections().size(); ++i) {
        const SectionInfo& s1 = g_.sections()[i];
        for (std::size_t j = 0; j < h_.sections().size(); ++j) {
            const SectionInfo& s2 = h_.sections()[j];
            if (s1.quotient->order() != s2.quotient->order())
                continue;
            std::vector<ElementMap> isos = all_isomorphisms(*s1.quotient, *s2.quotient);
            if (isos.empty())
                continue;
            std::set<std::vector<int>> canon;
            for (const auto& eta : isos)
                canon.insert(minimize_eta(static_cast<int>(i), static_cast<int>(j), eta));
            int eta_index = 0;
            for (const auto& eta : canon) {
                GoursatLabel lab;
                lab.sec_g = static_cast<int>(i);
                lab.sec_h = static_cast<int>(j);
                lab.eta_index = eta_index++;
                lab.eta = eta;
                lab.size = static_cast<long long>(s1.P.size()) * static_cast<long long>(s2.K.size());
                std::ostringstream key;
                key << "L" << lab.size << ":" << lab.sec_g << ":" << lab.sec_h << ":" << lab.eta_index;
                lab.key = key.str();
                GoursatDatum d;
                d.P1 = s1.P;
                d.K1 = s1.K;
                d.P2 = s2.P;
                d.K2 = s2.K;
                for (std::size_t q = 0; q < eta.size(); ++q)
                    d.eta_graph.emplace_back(s1.coset_rep[q], s2.coset_rep[static_cast<std::size_t>(eta[q])]);
                Raw raw;
                raw.label = std::move(lab);
                raw.subgroup = subgroup_from_datum(g_, h_, d);
                raws.push_back(std::move(raw));
            }
        }
    }
    std::sort(raws.begin(), raws.end(), [](const Raw& a, const Raw& b) {
        if (a.label.size != b.label.size)
            return a.label.size > b.label.size;
        if (a.label.sec_g != b.label.sec_g)
            return a.label.sec_g < b.label.sec_g;
        if (a.label.sec_h != b.label.sec_h)
            return a.label.sec_h < b.label.sec_h;
        return a.label.eta_index < b.label.eta_index;
    });
    for (auto& raw : raws) {
        lookup_[eta_lookup_key(raw.label.sec_g, raw.label.sec_h, raw.label.eta)] = static_cast<int>(labels_.size());
        labels_.push_back(std::move(raw.label));
        subgroups_.push_back(std::move(raw.subgroup));
    }
}

int PairBasis::classify(const PairSet& l) const {
    const PermGroup& g = g_.group();
    const PermGroup& h = h_.group();
    std::size_t hn = h.order();
    std::vector<int> p1, k1, p2, k2;
    {
        std::set<int> p1s, p2s;
        for (std::uint32_t code : l) {
            p1s.insert(static_cast<int>(code / hn));
            p2s.insert(static_cast<int>(code % hn));
        }
        p1.assign(p1s.begin(), p1s.end());
        p2.assign(p2s.begin(), p2s.end());
        for (int i : p1)
            if (std::binary_search(l.begin(), l.end(), pack_pair(i, 0, hn)))
                k1.push_back(i);
        for (int j : p2)
            if (std::binary_search(l.begin(), l.end(), pack_pair(0, j, hn)))
                k2.push_back(j);
    }
    auto [sec1, t1] = g_.locate_section(p1, k1);
    auto [sec2, t2] = h_.locate_section(p2, k2);
    PairSet lc = conj_pair_set(g, h, l, t1, t2);
    const SectionInfo& s1 = g_.sections()[static_cast<std::size_t>(sec1)];
    const SectionInfo& s2 = h_.sections()[static_cast<std::size_t>(sec2)];
    // read the section isomorphism off the conjugated subgroup
    std::vector<int> eta(s1.quotient->order(), -1);
    for (std::uint32_t code : lc) {
        int i = static_cast<int>(code / hn);
        int j = static_cast<int>(code % hn);
        int q1 = s1.pi[static_cast<std::size_t>(i)];
        if (q1 >= 0 && eta[static_cast<std::size_t>(q1)] < 0)
            eta[static_cast<std::size_t>(q1)] = s2.pi[static_cast<std::size_t>(j)];
    }
    for (int v : eta)
        if (v < 0)
            throw AssertionFailure("classify: incomplete section isomorphism");
    std::vector<int> canon = minimize_eta(sec1, sec2, eta);
    auto it = lookup_.find(eta_lookup_key(sec1, sec2, canon));
    if (it == lookup_.end())
        throw AssertionFailure("classify: subgroup does not match any basis label");
    const GoursatLabel& lab = labels_[static_cast<std::size_t>(it->second)];
    if (lab.sec_g != sec1 || lab.sec_h != sec2 || lab.eta != canon)
        throw AssertionFailure("classify: lookup hash collision");
    return it->second;
}

int PairBasis::identity_label() const {
    if (identity_label_ != -2)
        return identity_label_;
    if (&g_ != &h_ && g_.group_ptr().get() != h_.group_ptr().get())
        throw SourceTargetMismatch("identity label requires both sides to be the same group");
    const PermGroup& g = g_.group();
    PairSet diag;
    for (std::size_t x = 0; x < g.order(); ++x)
        diag.push_back(pack_pair(static_cast<int>(x), static_cast<int>(x), g.order()));
    std::sort(diag.begin(), diag.end());
    identity_label_ = classify(diag);
    return identity_label_;
}

PairSet subgroup_from_datum(const SubgroupData& g_data, const SubgroupData& h_data, const GoursatDatum& d) {
    const PermGroup& h = h_data.group();
    std::size_t hn = h.order();
    PairSet out;
    out.reserve(d.P1.size() * d.K2.size());
    // map each p in P1 to its representative h, then sweep the K2-coset
    std::map<int, int> rep_of;
    for (const auto& [p, hr] : d.eta_graph)
        rep_of[p] = hr;
    for (int p : d.P1) {
        auto it = rep_of.find(p);
        int hr;
        if (it != rep_of.end()) {
            hr = it->second;
        } else {
            // derive from K1-coset representative: p = rep * k1 for some listed rep
            hr = -1;
            for (const auto& [q, hq] : rep_of) {
                // p in q K1  <=>  q^-1 p in K1
                int diff = g_data.group().mul(g_data.group().inv(q), p);
                if (std::binary_search(d.K1.begin(), d.K1.end(), diff)) {
                    hr = hq;
                    break;
                }
            }
            if (hr < 0)
                throw InvalidData("goursat datum graph does not cover P1/K1");
        }
        for (int k : d.K2)
            out.push_back(pack_pair(p, h.mul(hr, k), hn));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.size() != d.P1.size() * d.K2.size())
        throw InvalidData("goursat datum does not define a subgroup of the expected size");
    return out;
}

GoursatDatum datum_from_subgroup(const SubgroupData& g_data, const SubgroupData& h_data, const PairSet& l) {
    const PermGroup& g = g_data.group();
    const PermGroup& h = h_data.group();
    std::size_t hn = h.order();
    // verify subgroup
    if (l.empty() || l[0] != 0)
        throw NotASubgroup("pair set does not contain the identity");
    for (std::uint32_t a : l)
        for (std::uint32_t b : l) {
            int gi = g.mul(static_cast<int>(a / hn), static_cast<int>(b / hn));
            int hj = h.mul(static_cast<int>(a % hn), static_cast<int>(b % hn));
            if (!std::binary_search(l.begin(), l.end(), pack_pair(gi, hj, hn)))
                throw NotASubgroup("pair set is not closed under multiplication");
        }
    GoursatDatum d;
    std::set<int> p1, p2;
    for (std::uint32_t code : l) {
        p1.insert(static_cast<int>(code / hn));
        p2.insert(static_cast<int>(code % hn));
    }
    d.P1.assign(p1.begin(), p1.end());
    d.P2.assign(p2.begin(), p2.end());
    for (int i : d.P1)
        if (std::binary_search(l.begin(), l.end(), pack_pair(i, 0, hn)))
            d.K1.push_back(i);
    for (int j : d.P2)
        if (std::binary_search(l.begin(), l.end(), pack_pair(0, j, hn)))
            d.K2.push_back(j);
    std::set<int> covered;
    for (std::uint32_t code : l) {
        int i = static_cast<int>(code / hn);
        int j = static_cast<int>(code % hn);
        // one representative per K1-coset of P1
        bool seen = false;
        for (const auto& [q, hq] : d.eta_graph) {
            (void)hq;
            int diff = g.mul(g.inv(q), i);
            if (std::binary_search(d.K1.begin(), d.K1.end(), diff)) {
                seen = true;
                break;
            }
        }
        if (!seen)
            d.eta_graph.emplace_back(i, j);
    }
    return d;
}

PairSet conj_pair_set(const PermGroup& g, const PermGroup& h, const PairSet& l, int cg, int ch) {
    PairSet out;
    out.reserve(l.size());
    std::size_t hn = h.order();
    for (std::uint32_t code : l)
        out.push_back(pack_pair(g.conj(static_cast<int>(code / hn), cg), h.conj(static_cast<int>(code % hn), ch), hn));
    std::sort(out.begin(), out.end());
    return out;
}

bool are_conjugate(const PermGroup& g, const PermGroup& h, const PairSet& a, const PairSet& b) {
    if (a.size() != b.size())
        return false;
    if (a == b)
        return true;
    std::set<PairSet> seen{a};
    std::deque<PairSet> queue{a};
    std::vector<std::pair<int, int>> moves;
    for (int gi : g.generators())
        moves.emplace_back(gi, 0);
    for (int hi : h.generators())
        moves.emplace_back(0, hi);
    while (!queue.empty()) {
        PairSet cur = queue.front();
        queue.pop_front();
        for (auto [cg, ch] : moves) {
            PairSet nxt = conj_pair_set(g, h, cur, cg, ch);
            if (nxt == b)
                return true;
            if (seen.insert(nxt).second)
                queue.push_back(std::move(nxt));
        }
    }
    return false;
}

}  // namespace bisetkit
