#include "bisetkit/perm_group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "bisetkit/errors.hpp"

namespace bisetkit {

namespace {

std::vector<Perm> pad_to_common_degree(std::vector<Perm> gens, std::size_t degree_hint) {
    std::size_t deg = std::max<std::size_t>(degree_hint, 1);
    for (const auto& g : gens)
        deg = std::max(deg, g.degree());
    for (auto& g : gens) {
        if (g.degree() == deg)
            continue;
        std::vector<int> im(deg);
        for (std::size_t i = 0; i < deg; ++i)
            im[i] = i < g.degree() ? g[i] : static_cast<int>(i);
        g = Perm(std::move(im));
    }
    return gens;
}

}  // namespace

std::shared_ptr<const PermGroup> PermGroup::closure(std::vector<Perm> generators, std::size_t bound,
                                                    std::size_t degree_hint) {
    generators = pad_to_common_degree(std::move(generators), degree_hint);
    std::size_t deg = generators.empty() ? std::max<std::size_t>(degree_hint, 1) : generators[0].degree();

    std::set<Perm> elems;
    elems.insert(Perm(deg));
    std::vector<Perm> frontier(elems.begin(), elems.end());
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& x : frontier)
            for (const auto& g : generators) {
                Perm y = g * x;
                if (elems.insert(y).second) {
                    if (elems.size() > bound)
                        throw BoundExceeded("group closure exceeds bound " + std::to_string(bound));
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }

    auto grp = std::shared_ptr<PermGroup>(new PermGroup());
    grp->degree_ = deg;
    grp->elements_.assign(elems.begin(), elems.end());  // std::set iterates sorted
    grp->build_tables();
    for (const auto& g : generators)
        grp->gen_indices_.push_back(grp->index_of(g));
    return grp;
}

GroupPtr group_from_elements(std::vector<Perm> elements) {
    if (elements.empty())
        throw InvalidData("group_from_elements: empty element set");
    std::sort(elements.begin(), elements.end());
    auto grp = std::shared_ptr<PermGroup>(new PermGroup());
    grp->degree_ = elements[0].degree();
    grp->elements_ = std::move(elements);
    grp->build_tables();
    // the whole element list generates; keep a smaller generating set greedily
    std::set<Perm> span;
    std::vector<Perm> gens;
    span.insert(Perm(grp->degree_));
    for (const auto& e : grp->elements_) {
        if (span.count(e))
            continue;
        gens.push_back(e);
        // re-close
        std::vector<Perm> frontier(span.begin(), span.end());
        while (!frontier.empty()) {
            std::vector<Perm> next;
            for (const auto& x : frontier)
                for (const auto& g : gens) {
                    Perm y = g * x;
                    if (span.insert(y).second)
                        next.push_back(std::move(y));
                }
            frontier = std::move(next);
        }
        if (span.size() == grp->elements_.size())
            break;
    }
    for (const auto& g : gens)
        grp->gen_indices_.push_back(grp->index_of(g));
    return grp;
}

void PermGroup::build_tables() {
    std::size_t n = elements_.size();
    mul_.assign(n * n, -1);
    inv_.assign(n, -1);
    orders_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Perm p = elements_[a] * elements_[b];
            int idx = index_of(p);
            if (idx < 0)
                throw InvalidData("element set is not closed under multiplication");
            mul_[a * n + b] = idx;
        }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (mul_[a * n + b] == 0) {
                inv_[a] = static_cast<int>(b);
                break;
            }
        if (inv_[a] < 0)
            throw InvalidData("element set is missing inverses");
    }
    for (std::size_t a = 0; a < n; ++a) {
        int x = static_cast<int>(a), k = 1;
        while (x != 0) {
            x = mul(static_cast<int>(a), x);
            ++k;
        }
        orders_[a] = k;
    }
    order_multiset_ = orders_;
    std::sort(order_multiset_.begin(), order_multiset_.end());
}

int PermGroup::index_of(const Perm& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || !(*it == p))
        return -1;
    return static_cast<int>(it - elements_.begin());
}

std::string PermGroup::realization_digest() const {
    // FNV-1a over degree and all image sequences.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(degree_);
    mix(order());
    for (const auto& e : elements_)
        for (int x : e.images())
            mix(static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull);
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

GroupPtr trivial_group() {
    return PermGroup::closure({}, 1, 1);
}

GroupPtr cyclic_group(int n) {
    if (n < 1)
        throw UsageError("cyclic group order must be positive");
    if (n == 1)
        return trivial_group();
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        im[static_cast<std::size_t>(i)] = (i + 1) % n;
    return PermGroup::closure({Perm(std::move(im))}, static_cast<std::size_t>(n));
}

GroupPtr symmetric_group(int n, std::size_t bound) {
    if (n < 1)
        throw UsageError("symmetric group degree must be positive");
    if (n == 1)
        return trivial_group();
    std::vector<Perm> gens;
    {
        std::vector<int> im(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            im[static_cast<std::size_t>(i)] = (i + 1) % n;
        gens.emplace_back(std::move(im));
    }
    {
        std::vector<int> im(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            im[static_cast<std::size_t>(i)] = i;
        std::swap(im[0], im[1]);
        gens.emplace_back(std::move(im));
    }
    return PermGroup::closure(std::move(gens), bound);
}

GroupPtr alternating_group(int n, std::size_t bound) {
    if (n < 3)
        return trivial_group();
    std::vector<Perm> gens;
    gens.push_back(Perm::from_cycles("(1 2 3)", n));
    if (n > 3) {
        if (n % 2 == 1) {
            std::ostringstream cyc;
            cyc << '(';
            for (int i = 1; i <= n; ++i)
                cyc << i << (i == n ? ')' : ' ');
            gens.push_back(Perm::from_cycles(cyc.str(), n));
        } else {
            std::ostringstream cyc;
            cyc << '(';
            for (int i = 2; i <= n; ++i)
                cyc << i << (i == n ? ')' : ' ');
            gens.push_back(Perm::from_cycles(cyc.str(), n));
        }
    }
    return PermGroup::closure(std::move(gens), bound);
}

GroupPtr dihedral_group(int order2n) {
    if (order2n < 2 || order2n % 2 != 0)
        throw UsageError("dihedral group order must be even and >= 2");
    int n = order2n / 2;
    if (n == 1)
        return cyclic_group(2);
    std::vector<int> rot(static_cast<std::size_t>(n)), ref(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rot[static_cast<std::size_t>(i)] = (i + 1) % n;
        ref[static_cast<std::size_t>(i)] = (n - i) % n;
    }
    return PermGroup::closure({Perm(std::move(rot)), Perm(std::move(ref))}, static_cast<std::size_t>(order2n));
}

GroupPtr klein_four_group() {
    return PermGroup::closure({Perm::from_cycles("(1 2)(3 4)"), Perm::from_cycles("(1 3)(2 4)")}, 4);
}

GroupPtr quaternion_group() {
    // Left-regular realization on {1,i,j,-1,-j,k,-i,-k} numbered 1..8.
    return PermGroup::closure({Perm::from_cycles("(1 2 4 7)(3 6 5 8)"), Perm::from_cycles("(1 3 4 5)(2 8 7 6)")}, 8);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, std::size_t bound) {
    std::size_t da = a->degree(), db = b->degree();
    if (a->order() * b->order() > bound)
        throw BoundExceeded("direct product order " + std::to_string(a->order() * b->order()) +
                            " exceeds bound " + std::to_string(bound));
    std::vector<Perm> gens;
    for (int gi : a->generators()) {
        std::vector<int> im(da + db);
        const Perm& g = a->perm(gi);
        for (std::size_t i = 0; i < da; ++i)
            im[i] = g[i];
        for (std::size_t i = 0; i < db; ++i)
            im[da + i] = static_cast<int>(da + i);
        gens.emplace_back(std::move(im));
    }
    for (int gi : b->generators()) {
        std::vector<int> im(da + db);
        const Perm& g = b->perm(gi);
        for (std::size_t i = 0; i < da; ++i)
            im[i] = static_cast<int>(i);
        for (std::size_t i = 0; i < db; ++i)
            im[da + i] = static_cast<int>(da) + g[i];
        gens.emplace_back(std::move(im));
    }
    return PermGroup::closure(std::move(gens), bound, da + db);
}

}  // namespace bisetkit
