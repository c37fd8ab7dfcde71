#include "bisetkit/subgroup_data.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "bisetkit/errors.hpp"

namespace bisetkit {

std::uint64_t hash_int_vector(const std::vector<int>& v) {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : v) {
        h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<int> conj_subgroup(const PermGroup& g, const std::vector<int>& elems, int c) {
    std::vector<int> out;
    out.reserve(elems.size());
    for (int x : elems)
        out.push_back(g.conj(x, c));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> closure_indices(const PermGroup& g, const std::vector<int>& gens) {
    std::vector<char> seen(g.order(), 0);
    seen[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int gen : gens) {
            int y = g.mul(gen, x);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                queue.push_back(y);
            }
        }
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < g.order(); ++i)
        if (seen[i])
            out.push_back(static_cast<int>(i));
    return out;
}

SubgroupData::SubgroupData(GroupPtr g, std::size_t subgroup_limit) : group_(std::move(g)) {
    enumerate_subgroups(subgroup_limit);
    build_classes();
    build_sections();
}

int SubgroupData::subgroup_index(const std::vector<int>& elems) const {
    auto it = index_buckets_.find(hash_int_vector(elems));
    if (it == index_buckets_.end())
        return -1;
    for (int idx : it->second)
        if (subgroups_[static_cast<std::size_t>(idx)] == elems)
            return idx;
    return -1;
}

void SubgroupData::enumerate_subgroups(std::size_t limit) {
    const PermGroup& g = *group_;
    struct Work {
        std::vector<int> elems;
        std::vector<int> gens;
    };
    std::vector<Work> found;
    std::unordered_map<std::uint64_t, std::vector<int>> seen;
    auto try_insert = [&](std::vector<int> elems, std::vector<int> gens) -> bool {
        std::uint64_t h = hash_int_vector(elems);
        auto& bucket = seen[h];
        for (int idx : bucket)
            if (found[static_cast<std::size_t>(idx)].elems == elems)
                return false;
        bucket.push_back(static_cast<int>(found.size()));
        found.push_back({std::move(elems), std::move(gens)});
        return true;
    };
    try_insert({0}, {});
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (found.size() > limit)
            throw BoundExceeded("subgroup enumeration exceeds limit (" + std::to_string(limit) + ")");
        // copy: found may reallocate
        const std::vector<int> elems = found[i].elems;
        const std::vector<int> gens = found[i].gens;
        std::vector<char> inside(g.order(), 0);
        for (int x : elems)
            inside[static_cast<std::size_t>(x)] = 1;
        for (std::size_t x = 1; x < g.order(); ++x) {
            if (inside[x])
                continue;
            std::vector<int> new_gens = gens;
            new_gens.push_back(static_cast<int>(x));
            std::vector<int> closed = closure_indices(g, new_gens);
            try_insert(std::move(closed), std::move(new_gens));
        }
    }

    subgroups_.reserve(found.size());
    for (auto& w : found)
        subgroups_.push_back(std::move(w.elems));
    std::sort(subgroups_.begin(), subgroups_.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    for (std::size_t i = 0; i < subgroups_.size(); ++i)
        index_buckets_[hash_int_vector(subgroups_[i])].push_back(static_cast<int>(i));
}

void SubgroupData::build_classes() {
    const PermGroup& g = *group_;
    std::size_t n = subgroups_.size();
    class_of_.assign(n, -1);
    to_rep_.assign(n, -1);
    std::vector<int> gens;
    for (int gi : g.generators())
        if (gi != 0)
            gens.push_back(gi);
    for (std::size_t s = 0; s < n; ++s) {
        if (class_of_[s] >= 0)
            continue;
        // Orbit under conjugation; s is the minimal (canonical) member because
        // subgroups_ is sorted and smaller members would have been visited first.
        int cls = static_cast<int>(class_reps_.size());
        class_reps_.push_back(static_cast<int>(s));
        class_members_.push_back({});
        std::deque<std::pair<int, int>> queue;  // (subgroup idx, conjugator from rep)
        class_of_[s] = cls;
        to_rep_[s] = 0;  // identity
        queue.emplace_back(static_cast<int>(s), 0);
        class_members_[static_cast<std::size_t>(cls)].push_back(static_cast<int>(s));
        while (!queue.empty()) {
            auto [idx, from_rep] = queue.front();
            queue.pop_front();
            for (int c : gens) {
                std::vector<int> conj = conj_subgroup(g, subgroups_[static_cast<std::size_t>(idx)], c);
                int cidx = subgroup_index(conj);
                if (cidx < 0)
                    throw AssertionFailure("conjugate subgroup missing from enumeration");
                if (class_of_[static_cast<std::size_t>(cidx)] >= 0)
                    continue;
                class_of_[static_cast<std::size_t>(cidx)] = cls;
                int g_from_rep = g.mul(c, from_rep);  // conj(rep, c*from_rep) = conj(conj(rep,from_rep), c)
                to_rep_[static_cast<std::size_t>(cidx)] = g.inv(g_from_rep);
                class_members_[static_cast<std::size_t>(cls)].push_back(cidx);
                queue.emplace_back(cidx, g_from_rep);
            }
        }
        std::sort(class_members_[static_cast<std::size_t>(cls)].begin(),
                  class_members_[static_cast<std::size_t>(cls)].end());
    }

    normalizers_.resize(class_reps_.size());
    for (std::size_t c = 0; c < class_reps_.size(); ++c) {
        const auto& rep = subgroups_[static_cast<std::size_t>(class_reps_[c])];
        for (std::size_t x = 0; x < g.order(); ++x)
            if (conj_subgroup(g, rep, static_cast<int>(x)) == rep)
                normalizers_[c].push_back(static_cast<int>(x));
    }
}

void SubgroupData::build_sections() {
    const PermGroup& g = *group_;
    section_lookup_.resize(class_reps_.size());
    for (std::size_t c = 0; c < class_reps_.size(); ++c) {
        const std::vector<int>& P = subgroups_[static_cast<std::size_t>(class_reps_[c])];
        std::vector<char> inP(g.order(), 0);
        for (int x : P)
            inP[static_cast<std::size_t>(x)] = 1;
        // normal subgroups of P among the enumerated subgroups
        std::vector<int> normals;
        for (std::size_t s = 0; s < subgroups_.size(); ++s) {
            const auto& K = subgroups_[s];
            if (K.size() > P.size() || P.size() % K.size() != 0)
                continue;
            bool sub = std::all_of(K.begin(), K.end(), [&](int x) { return inP[static_cast<std::size_t>(x)]; });
            if (!sub)
                continue;
            bool normal = true;
            for (int p : P) {
                if (conj_subgroup(g, K, p) != K) {
                    normal = false;
                    break;
                }
            }
            if (normal)
                normals.push_back(static_cast<int>(s));
        }
        // orbits of N_G(P) on the normal subgroups, with transporters
        const std::vector<int>& ngp = normalizers_[c];
        std::unordered_map<int, std::pair<int, int>> orbit_info;  // K idx -> (orbit rep K idx, t: conj(K,t)=rep)
        for (int k0 : normals) {
            if (orbit_info.count(k0))
                continue;
            // BFS orbit from k0
            std::map<int, int> transporter;  // member -> t with conj(k0, t) = member
            transporter[k0] = 0;
            std::deque<int> queue{k0};
            while (!queue.empty()) {
                int k = queue.front();
                queue.pop_front();
                for (int t : ngp) {
                    std::vector<int> img = conj_subgroup(g, subgroups_[static_cast<std::size_t>(k)], t);
                    int ki = subgroup_index(img);
                    if (ki < 0)
                        throw AssertionFailure("normal subgroup conjugate missing");
                    if (!transporter.count(ki)) {
                        transporter[ki] = g.mul(t, transporter[k]);
                        queue.push_back(ki);
                    }
                }
            }
            int rep = transporter.begin()->first;  // minimal subgroup index = canonical
            for (auto [member, t_from_k0] : transporter) {
                // conj(member, u) = rep with u = t_rep * t_member^-1
                int u = g.mul(transporter[rep], g.inv(t_from_k0));
                orbit_info[member] = {rep, u};
            }
        }
        // sections in canonical order: orbit reps sorted by subgroup index
        std::vector<int> reps;
        for (auto& [k, info] : orbit_info)
            if (info.first == k)
                reps.push_back(k);
        std::sort(reps.begin(), reps.end());
        for (int krep : reps) {
            SectionInfo sec;
            sec.p_class = static_cast<int>(c);
            sec.P = P;
            sec.K = subgroups_[static_cast<std::size_t>(krep)];
            // quotient realization
            if (sec.K.size() == 1) {
                if (P.size() == g.order()) {
                    sec.quotient = group_;
                } else {
                    std::vector<Perm> perms;
                    perms.reserve(P.size());
                    for (int x : P)
                        perms.push_back(g.perm(x));
                    sec.quotient = group_from_elements(std::move(perms));
                }
                sec.pi.assign(g.order(), -1);
                for (int x : P)
                    sec.pi[static_cast<std::size_t>(x)] = sec.quotient->index_of(g.perm(x));
            } else {
                // left cosets pK, labelled by their minimal element, sorted
                std::vector<int> coset_min(g.order(), -1);
                std::vector<int> labels;
                for (int p : P) {
                    if (coset_min[static_cast<std::size_t>(p)] >= 0)
                        continue;
                    int mn = g.order() ? static_cast<int>(g.order()) : 0;
                    std::vector<int> members;
                    for (int k : sec.K)
                        members.push_back(g.mul(p, k));
                    mn = *std::min_element(members.begin(), members.end());
                    for (int m : members)
                        coset_min[static_cast<std::size_t>(m)] = mn;
                    labels.push_back(mn);
                }
                std::sort(labels.begin(), labels.end());
                auto coset_pos = [&](int x) {
                    int mn = coset_min[static_cast<std::size_t>(x)];
                    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), mn) - labels.begin());
                };
                std::vector<Perm> perms;
                std::vector<int> owner;  // perm position -> representative p (first found)
                std::map<Perm, int> seen;
                std::vector<int> pi_of_p(g.order(), -1);
                for (int p : P) {
                    std::vector<int> im(labels.size());
                    for (std::size_t j = 0; j < labels.size(); ++j)
                        im[j] = coset_pos(g.mul(p, labels[j]));
                    Perm sigma(std::move(im));
                    auto it = seen.find(sigma);
                    if (it == seen.end()) {
                        seen.emplace(sigma, static_cast<int>(perms.size()));
                        perms.push_back(sigma);
                    }
                }
                sec.quotient = group_from_elements(perms);
                sec.pi.assign(g.order(), -1);
                for (int p : P) {
                    std::vector<int> im(labels.size());
                    for (std::size_t j = 0; j < labels.size(); ++j)
                        im[j] = coset_pos(g.mul(p, labels[j]));
                    sec.pi[static_cast<std::size_t>(p)] = sec.quotient->index_of(Perm(std::move(im)));
                }
            }
            sec.coset_rep.assign(sec.quotient->order(), -1);
            for (int p : P)
                if (sec.coset_rep[static_cast<std::size_t>(sec.pi[static_cast<std::size_t>(p)])] < 0)
                    sec.coset_rep[static_cast<std::size_t>(sec.pi[static_cast<std::size_t>(p)])] = p;
            // induced automorphisms from N_G(P, K)
            std::vector<std::vector<int>> autos;
            std::map<std::vector<int>, int> auto_seen;
            for (int t : ngp) {
                if (conj_subgroup(g, sec.K, t) != sec.K)
                    continue;
                std::vector<int> m(sec.quotient->order());
                for (std::size_t q = 0; q < sec.quotient->order(); ++q)
                    m[q] = sec.pi[static_cast<std::size_t>(g.conj(sec.coset_rep[q], t))];
                if (auto_seen.emplace(m, 1).second)
                    autos.push_back(std::move(m));
            }
            std::sort(autos.begin(), autos.end());
            sec.induced_autos = std::move(autos);

            int sec_idx = static_cast<int>(sections_.size());
            sections_.push_back(std::move(sec));
            for (auto& [member, info] : orbit_info)
                if (info.first == krep)
                    section_lookup_[c][member] = {sec_idx, info.second};
        }
    }
}

std::pair<int, int> SubgroupData::locate_section(const std::vector<int>& P, const std::vector<int>& K) const {
    const PermGroup& g = *group_;
    int pidx = subgroup_index(P);
    if (pidx < 0)
        throw NotASubgroup("locate_section: P is not a known subgroup");
    int c = class_of_[static_cast<std::size_t>(pidx)];
    int g1 = to_rep_[static_cast<std::size_t>(pidx)];
    std::vector<int> k1 = conj_subgroup(g, K, g1);
    int kidx = subgroup_index(k1);
    if (kidx < 0)
        throw NotASubgroup("locate_section: K is not a known subgroup");
    auto it = section_lookup_[static_cast<std::size_t>(c)].find(kidx);
    if (it == section_lookup_[static_cast<std::size_t>(c)].end())
        throw NotASubgroup("locate_section: K is not normal in P");
    auto [sec_idx, n] = it->second;
    return {sec_idx, g.mul(n, g1)};
}

}  // namespace bisetkit
