#include "bisetkit/iso.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "bisetkit/errors.hpp"
#include "bisetkit/subgroup_data.hpp"

namespace bisetkit {

namespace {

std::vector<int> greedy_generating_sequence(const PermGroup& g) {
    std::vector<int> gens;
    std::vector<int> span{0};
    for (std::size_t x = 1; x < g.order() && span.size() < g.order(); ++x) {
        if (std::binary_search(span.begin(), span.end(), static_cast<int>(x)))
            continue;
        gens.push_back(static_cast<int>(x));
        span = closure_indices(g, gens);
    }
    return gens;
}

struct IsoSearch {
    const PermGroup& a;
    const PermGroup& b;
    std::vector<int> gens;                  // generating sequence of a
    std::vector<std::size_t> span_sizes;    // |<g_1..g_i>|
    std::vector<std::pair<int, int>> exprs; // exprs[x] = (parent, gen position), x = parent * gens[pos]
    std::vector<int> expr_order;            // BFS discovery order of a's elements
    std::vector<ElementMap> results;
    std::size_t limit;
    bool stop_at_first;

    void prepare() {
        gens = greedy_generating_sequence(a);
        span_sizes.clear();
        std::vector<int> prefix;
        for (int g : gens) {
            prefix.push_back(g);
            span_sizes.push_back(closure_indices(a, prefix).size());
        }
        exprs.assign(a.order(), {-1, -1});
        expr_order.clear();
        std::deque<int> queue{0};
        std::vector<char> seen(a.order(), 0);
        seen[0] = 1;
        expr_order.push_back(0);
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (std::size_t j = 0; j < gens.size(); ++j) {
                int y = a.mul(x, gens[j]);
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    exprs[static_cast<std::size_t>(y)] = {x, static_cast<int>(j)};
                    expr_order.push_back(y);
                    queue.push_back(y);
                }
            }
        }
    }

    bool try_images(const std::vector<int>& images) {
        ElementMap phi(a.order(), -1);
        phi[0] = 0;
        for (int x : expr_order) {
            if (x == 0)
                continue;
            auto [parent, j] = exprs[static_cast<std::size_t>(x)];
            phi[static_cast<std::size_t>(x)] = b.mul(phi[static_cast<std::size_t>(parent)], images[static_cast<std::size_t>(j)]);
        }
        std::vector<char> hit(b.order(), 0);
        for (int v : phi) {
            if (hit[static_cast<std::size_t>(v)])
                return false;
            hit[static_cast<std::size_t>(v)] = 1;
        }
        for (std::size_t x = 0; x < a.order(); ++x)
            for (std::size_t y = 0; y < a.order(); ++y)
                if (phi[static_cast<std::size_t>(a.mul(static_cast<int>(x), static_cast<int>(y)))] !=
                    b.mul(phi[x], phi[y]))
                    return false;
        results.push_back(std::move(phi));
        return true;
    }

    bool dfs(std::size_t pos, std::vector<int>& images) {
        if (pos == gens.size()) {
            try_images(images);
            if (results.size() > limit)
                throw BoundExceeded("isomorphism enumeration exceeds limit");
            return stop_at_first && !results.empty();
        }
        int want_order = a.element_order(gens[pos]);
        for (std::size_t y = 0; y < b.order(); ++y) {
            if (b.element_order(static_cast<int>(y)) != want_order)
                continue;
            images.push_back(static_cast<int>(y));
            if (closure_indices(b, images).size() == span_sizes[pos]) {
                if (dfs(pos + 1, images))
                    return true;
            }
            images.pop_back();
        }
        return false;
    }

    void run() {
        if (a.order() != b.order() || a.order_multiset() != b.order_multiset())
            return;
        prepare();
        std::vector<int> images;
        dfs(0, images);
    }
};

}  // namespace

std::optional<ElementMap> iso_test(const PermGroup& a, const PermGroup& b) {
    IsoSearch s{a, b, {}, {}, {}, {}, {}, 1u << 24, true};
    s.run();
    if (s.results.empty())
        return std::nullopt;
    return s.results.front();
}

std::vector<ElementMap> all_isomorphisms(const PermGroup& a, const PermGroup& b, std::size_t limit) {
    IsoSearch s{a, b, {}, {}, {}, {}, {}, limit, false};
    s.run();
    std::sort(s.results.begin(), s.results.end());
    return s.results;
}

std::vector<ElementMap> all_automorphisms(const PermGroup& g, std::size_t limit) {
    return all_isomorphisms(g, g, limit);
}

ElementMap compose_maps(const ElementMap& f, const ElementMap& g) {
    ElementMap r(g.size());
    for (std::size_t x = 0; x < g.size(); ++x)
        r[x] = f[static_cast<std::size_t>(g[x])];
    return r;
}

ElementMap invert_map(const ElementMap& f) {
    ElementMap r(f.size());
    for (std::size_t x = 0; x < f.size(); ++x)
        r[static_cast<std::size_t>(f[x])] = static_cast<int>(x);
    return r;
}

std::string canonical_table_key(const PermGroup& g) {
    std::size_t n = g.order();
    if (n > 24)
        throw BoundExceeded("canonical_table_key only computed for order <= 24");
    std::string best;
    std::vector<int> seq;

    auto evaluate = [&]() {
        // BFS word order under the chosen generating sequence
        std::vector<int> disc;
        std::vector<int> pos(n, -1);
        disc.push_back(0);
        pos[0] = 0;
        for (std::size_t i = 0; i < disc.size(); ++i)
            for (int s : seq) {
                int y = g.mul(disc[i], s);
                if (pos[static_cast<std::size_t>(y)] < 0) {
                    pos[static_cast<std::size_t>(y)] = static_cast<int>(disc.size());
                    disc.push_back(y);
                }
            }
        std::string table(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                table[i * n + j] = static_cast<char>('a' + pos[static_cast<std::size_t>(g.mul(disc[i], disc[j]))]);
        if (best.empty() || table < best)
            best = std::move(table);
    };

    std::vector<char> in_span(n, 0);
    auto dfs = [&](auto&& self, const std::vector<int>& span) -> void {
        if (span.size() == n) {
            evaluate();
            return;
        }
        for (std::size_t x = 1; x < n; ++x) {
            if (std::binary_search(span.begin(), span.end(), static_cast<int>(x)))
                continue;
            seq.push_back(static_cast<int>(x));
            self(self, closure_indices(g, seq));
            seq.pop_back();
        }
    };
    if (n == 1)
        evaluate();
    else
        dfs(dfs, std::vector<int>{0});
    return std::to_string(n) + ":" + best;
}

std::vector<int> center(const PermGroup& g) {
    std::vector<int> z;
    for (std::size_t x = 0; x < g.order(); ++x) {
        bool central = true;
        for (std::size_t y = 0; y < g.order(); ++y)
            if (g.mul(static_cast<int>(x), static_cast<int>(y)) != g.mul(static_cast<int>(y), static_cast<int>(x))) {
                central = false;
                break;
            }
        if (central)
            z.push_back(static_cast<int>(x));
    }
    return z;
}

int OutGroup::class_of(const ElementMap& aut) const {
    const PermGroup& h = *base;
    // aut ∘ inn_c for some c equals a stored representative
    for (std::size_t i = 0; i < out_elements.size(); ++i) {
        // check out_elements[i]^-1 ∘ aut is inner
        ElementMap diff = compose_maps(invert_map(out_elements[i]), aut);
        for (std::size_t c = 0; c < h.order(); ++c) {
            bool match = true;
            for (std::size_t x = 0; x < h.order() && match; ++x)
                if (diff[x] != h.conj(static_cast<int>(x), static_cast<int>(c)))
                    match = false;
            if (match)
                return static_cast<int>(i);
        }
    }
    throw AssertionFailure("automorphism not in any Out class");
}

OutGroup out_group(const GroupPtr& h, std::size_t aut_limit) {
    OutGroup out;
    out.base = h;
    std::vector<ElementMap> auts = all_automorphisms(*h, aut_limit);
    out.aut_order = auts.size();
    // inner automorphisms
    std::set<ElementMap> inner;
    for (std::size_t c = 0; c < h->order(); ++c) {
        ElementMap m(h->order());
        for (std::size_t x = 0; x < h->order(); ++x)
            m[x] = h->conj(static_cast<int>(x), static_cast<int>(c));
        inner.insert(std::move(m));
    }
    out.inn_order = inner.size();
    // coset representatives: sweep sorted automorphisms, skip those in marked cosets
    std::set<ElementMap> marked;
    for (const auto& phi : auts) {
        if (marked.count(phi))
            continue;
        out.out_elements.push_back(phi);
        for (const auto& inn : inner)
            marked.insert(compose_maps(inn, phi));
    }
    std::size_t m = out.out_elements.size();
    out.table.assign(m, std::vector<int>(m, -1));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            ElementMap prod = compose_maps(out.out_elements[i], out.out_elements[j]);
            // find coset of prod among reps: prod ∈ Inn ∘ rep
            int found = -1;
            for (std::size_t k = 0; k < m && found < 0; ++k) {
                ElementMap diff = compose_maps(prod, invert_map(out.out_elements[k]));
                if (inner.count(diff))
                    found = static_cast<int>(k);
            }
            if (found < 0)
                throw AssertionFailure("Out multiplication fell outside coset reps");
            out.table[i][j] = found;
        }
    out.inverse.assign(m, -1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (out.table[i][j] == 0) {
                out.inverse[i] = static_cast<int>(j);
                break;
            }
    return out;
}

}  // namespace bisetkit
