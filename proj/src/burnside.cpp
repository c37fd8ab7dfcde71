#include "bisetkit/burnside.hpp"

#include <algorithm>
#include <set>

#include "bisetkit/context.hpp"
#include "bisetkit/errors.hpp"
#include "bisetkit/parallel.hpp"

namespace bisetkit {

void BisetElement::add(int label, const Rat& c) {
    if (c.is_zero())
        return;
    Rat& slot = coeffs[label];
    slot += c;
    if (slot.is_zero())
        coeffs.erase(label);
}

QVec BisetElement::dense(std::size_t dim) const {
    QVec v(dim);
    for (const auto& [i, c] : coeffs)
        v[static_cast<std::size_t>(i)] = c;
    return v;
}

QVec AlgebraTable::mul(const QVec& a, const QVec& b) const {
    std::size_t d = dim();
    QVec out(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j].is_zero())
                continue;
            Rat c = a[i] * b[j];
            for (const auto& [k, s] : product(i, j))
                out[static_cast<std::size_t>(k)] += c * s;
        }
    }
    return out;
}

QMatrix AlgebraTable::left_mult_matrix(const QVec& a) const {
    std::size_t d = dim();
    QMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, s] : product(i, j))
                m.at(static_cast<std::size_t>(k), j) += a[i] * s;
    }
    return m;
}

QMatrix AlgebraTable::right_mult_matrix(const QVec& a) const {
    std::size_t d = dim();
    QMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        if (a[j].is_zero())
            continue;
        for (std::size_t i = 0; i < d; ++i)
            for (const auto& [k, s] : product(i, j))
                m.at(static_cast<std::size_t>(k), i) += a[j] * s;
    }
    return m;
}

namespace {

std::map<int, Rat> compose_transitive_raw(Context& ctx, const GroupPtr& gp, const GroupPtr& hp, const GroupPtr& kp,
                                          int label_gh, int label_hk) {
    const PairBasis& bgh = ctx.pair_basis(gp, hp);
    const PairBasis& bhk = ctx.pair_basis(hp, kp);
    const PairBasis& bgk = ctx.pair_basis(gp, kp);
    const PermGroup& h = *hp;
    const PermGroup& k = *kp;
    const PairSet& l = bgh.subgroup_of(label_gh);
    const PairSet& m = bhk.subgroup_of(label_hk);
    std::size_t hn = h.order(), kn = k.order();

    std::vector<int> p2l, p1m;
    {
        std::set<int> s2, s1;
        for (std::uint32_t code : l)
            s2.insert(static_cast<int>(code % hn));
        for (std::uint32_t code : m)
            s1.insert(static_cast<int>(code / kn));
        p2l.assign(s2.begin(), s2.end());
        p1m.assign(s1.begin(), s1.end());
    }

    std::map<int, Rat> result;
    std::vector<char> marked(hn, 0);
    for (std::size_t t = 0; t < hn; ++t) {
        if (marked[t])
            continue;
        for (int a : p2l)
            for (int b : p1m)
                marked[static_cast<std::size_t>(h.mul(h.mul(a, static_cast<int>(t)), b))] = 1;
        // star product L * (t,1)M(t,1)^-1
        std::vector<std::vector<int>> mid_to_k(hn);
        for (std::uint32_t code : m) {
            int mid = h.conj(static_cast<int>(code / kn), static_cast<int>(t));
            mid_to_k[static_cast<std::size_t>(mid)].push_back(static_cast<int>(code % kn));
        }
        PairSet prod;
        for (std::uint32_t code : l) {
            int gi = static_cast<int>(code / hn);
            int mid = static_cast<int>(code % hn);
            for (int kk : mid_to_k[static_cast<std::size_t>(mid)])
                prod.push_back(pack_pair(gi, kk, kn));
        }
        std::sort(prod.begin(), prod.end());
        prod.erase(std::unique(prod.begin(), prod.end()), prod.end());
        int label = bgk.classify(prod);
        result[label] += Rat(1);
    }
    return result;
}

}  // namespace

std::map<int, Rat> compose_transitive(Context& ctx, const GroupPtr& g, const GroupPtr& h, const GroupPtr& k,
                                      int label_gh, int label_hk) {
    // consult the cached algebra table when composing inside kB(G,G)
    if (g.get() == h.get() && h.get() == k.get()) {
        auto table = ctx.algebra_table(g);
        return table->product(static_cast<std::size_t>(label_gh), static_cast<std::size_t>(label_hk));
    }
    const PairBasis& bgh = ctx.pair_basis(g, h);
    const PairBasis& bhk = ctx.pair_basis(h, k);
    if (auto* hit = ctx.find_product(&bgh, &bhk, label_gh, label_hk))
        return *hit;
    auto value = compose_transitive_raw(ctx, g, h, k, label_gh, label_hk);
    ctx.store_product(&bgh, &bhk, label_gh, label_hk, value);
    return value;
}

BisetElement compose(Context& ctx, const BisetElement& a, const BisetElement& b) {
    if (a.source.get() != b.target.get())
        throw SourceTargetMismatch("compose: a.source must equal b.target");
    BisetElement out;
    out.target = a.target;
    out.source = b.source;
    for (const auto& [i, ca] : a.coeffs)
        for (const auto& [j, cb] : b.coeffs) {
            auto prod = compose_transitive(ctx, a.target, a.source, b.source, i, j);
            Rat c = ca * cb;
            for (const auto& [k, s] : prod)
                out.add(k, c * s);
        }
    return out;
}

BisetElement opposite(Context& ctx, const BisetElement& a) {
    const PairBasis& fwd = ctx.pair_basis(a.target, a.source);
    const PairBasis& bwd = ctx.pair_basis(a.source, a.target);
    std::size_t hn = a.source->order();
    std::size_t gn = a.target->order();
    BisetElement out;
    out.target = a.source;
    out.source = a.target;
    for (const auto& [i, c] : a.coeffs) {
        const PairSet& l = fwd.subgroup_of(i);
        PairSet sw;
        sw.reserve(l.size());
        for (std::uint32_t code : l)
            sw.push_back(pack_pair(static_cast<int>(code % hn), static_cast<int>(code / hn), gn));
        std::sort(sw.begin(), sw.end());
        out.add(bwd.classify(sw), c);
    }
    return out;
}

BisetElement identity_biset(Context& ctx, const GroupPtr& g) {
    const PairBasis& b = ctx.pair_basis(g, g);
    BisetElement e;
    e.target = g;
    e.source = g;
    e.add(b.identity_label(), Rat(1));
    return e;
}

BisetElement ind_biset(Context& ctx, const GroupPtr& g, const std::vector<int>& u_elems) {
    const SubgroupData& data = ctx.subgroups(g);
    std::vector<int> trivial{0};
    auto [sec_idx, t] = data.locate_section(u_elems, trivial);
    const SectionInfo& sec = data.sections()[static_cast<std::size_t>(sec_idx)];
    GroupPtr src = sec.quotient;
    const PairBasis& basis = ctx.pair_basis(g, src);
    std::size_t sn = src->order();
    int tinv = g->inv(t);
    PairSet l;
    for (std::size_t q = 0; q < sn; ++q) {
        int in_g = g->conj(sec.coset_rep[q], tinv);  // conj(rep subgroup, t^-1) = U
        l.push_back(pack_pair(in_g, static_cast<int>(q), sn));
    }
    std::sort(l.begin(), l.end());
    BisetElement e;
    e.target = g;
    e.source = src;
    e.add(basis.classify(l), Rat(1));
    return e;
}

BisetElement res_biset(Context& ctx, const GroupPtr& g, const std::vector<int>& u_elems) {
    return opposite(ctx, ind_biset(ctx, g, u_elems));
}

BisetElement inf_biset(Context& ctx, const GroupPtr& g, const std::vector<int>& n_elems) {
    const SubgroupData& data = ctx.subgroups(g);
    std::vector<int> whole(g->order());
    for (std::size_t i = 0; i < g->order(); ++i)
        whole[i] = static_cast<int>(i);
    auto [sec_idx, t] = data.locate_section(whole, n_elems);
    if (t != 0)
        throw AssertionFailure("inf: whole-group section should need no conjugation");
    const SectionInfo& sec = data.sections()[static_cast<std::size_t>(sec_idx)];
    GroupPtr q = sec.quotient;
    const PairBasis& basis = ctx.pair_basis(g, q);
    std::size_t qn = q->order();
    PairSet l;
    for (std::size_t x = 0; x < g->order(); ++x)
        l.push_back(pack_pair(static_cast<int>(x), sec.pi[x], qn));
    std::sort(l.begin(), l.end());
    BisetElement e;
    e.target = g;
    e.source = q;
    e.add(basis.classify(l), Rat(1));
    return e;
}

BisetElement def_biset(Context& ctx, const GroupPtr& g, const std::vector<int>& n_elems) {
    return opposite(ctx, inf_biset(ctx, g, n_elems));
}

BisetElement iso_biset(Context& ctx, const GroupPtr& to, const GroupPtr& from, const ElementMap& phi) {
    if (phi.size() != from->order())
        throw InvalidData("iso_biset: map size does not match the source order");
    const PairBasis& basis = ctx.pair_basis(to, from);
    std::size_t fn = from->order();
    PairSet l;
    for (std::size_t x = 0; x < fn; ++x)
        l.push_back(pack_pair(phi[x], static_cast<int>(x), fn));
    std::sort(l.begin(), l.end());
    BisetElement e;
    e.target = to;
    e.source = from;
    e.add(basis.classify(l), Rat(1));
    return e;
}

AlgebraTable build_algebra_table(Context& ctx, const GroupPtr& g) {
    const PairBasis& basis = ctx.pair_basis(g, g);
    std::size_t d = basis.size();
    AlgebraTable t;
    t.group = g;
    for (const auto& lab : basis.labels())
        t.basis_keys.push_back(lab.key);
    t.identity = basis.identity_label();
    t.products.assign(d * d, {});
    std::vector<std::map<int, Rat>> slots(d * d);
    parallel_for(d * d, ctx.jobs(), [&](std::size_t idx) {
        int i = static_cast<int>(idx / d);
        int j = static_cast<int>(idx % d);
        slots[idx] = compose_transitive_raw(ctx, g, g, g, i, j);
    });
    t.products = std::move(slots);
    return t;
}

std::map<int, Rat> compose_orbit_oracle(Context& ctx, const GroupPtr& gp, const GroupPtr& hp, const GroupPtr& kp,
                                        int label_gh, int label_hk) {
    const PairBasis& bgh = ctx.pair_basis(gp, hp);
    const PairBasis& bhk = ctx.pair_basis(hp, kp);
    const PairBasis& bgk = ctx.pair_basis(gp, kp);
    const PermGroup& g = *gp;
    const PermGroup& h = *hp;
    const PermGroup& k = *kp;
    const PairSet& l = bgh.subgroup_of(label_gh);
    const PairSet& m = bhk.subgroup_of(label_hk);
    std::size_t gn = g.order(), hn = h.order(), kn = k.order();

    // X = (G x H)/L as explicit cosets; points are coset ids (minimal member code)
    auto coset_id_map = [](const PermGroup& a, const PermGroup& b, const PairSet& sub) {
        std::size_t bn = b.order();
        std::vector<std::uint32_t> id(a.order() * bn, 0);
        std::vector<char> seen(a.order() * bn, 0);
        for (std::size_t ga = 0; ga < a.order(); ++ga)
            for (std::size_t gb = 0; gb < bn; ++gb) {
                std::size_t code = ga * bn + gb;
                if (seen[code])
                    continue;
                std::uint32_t mn = static_cast<std::uint32_t>(a.order() * bn);
                std::vector<std::uint32_t> members;
                for (std::uint32_t s : sub) {
                    int si = static_cast<int>(s / bn), sj = static_cast<int>(s % bn);
                    std::uint32_t member = static_cast<std::uint32_t>(a.mul(static_cast<int>(ga), si)) *
                                               static_cast<std::uint32_t>(bn) +
                                           static_cast<std::uint32_t>(b.mul(static_cast<int>(gb), sj));
                    members.push_back(member);
                    mn = std::min(mn, member);
                }
                for (std::uint32_t mem : members) {
                    id[mem] = mn;
                    seen[mem] = 1;
                }
            }
        return id;
    };
    std::vector<std::uint32_t> xid = coset_id_map(g, h, l);
    std::vector<std::uint32_t> yid = coset_id_map(h, k, m);

    // actions: left G and right H on X points; X point = coset id (g0,h0)L
    // g . (g0,h0)L . h = (g g0, h^-1 h0) L
    auto x_left = [&](std::uint32_t x, int gg) {
        int g0 = static_cast<int>(x / hn), h0 = static_cast<int>(x % hn);
        return xid[static_cast<std::size_t>(g.mul(gg, g0)) * hn + static_cast<std::size_t>(h0)];
    };
    auto x_right = [&](std::uint32_t x, int hh) {
        int g0 = static_cast<int>(x / hn), h0 = static_cast<int>(x % hn);
        return xid[static_cast<std::size_t>(g0) * hn + static_cast<std::size_t>(h.mul(h.inv(hh), h0))];
    };
    auto y_left = [&](std::uint32_t y, int hh) {
        int h0 = static_cast<int>(y / kn), k0 = static_cast<int>(y % kn);
        return yid[static_cast<std::size_t>(h.mul(hh, h0)) * kn + static_cast<std::size_t>(k0)];
    };
    auto y_right = [&](std::uint32_t y, int kk) {
        int h0 = static_cast<int>(y / kn), k0 = static_cast<int>(y % kn);
        return yid[static_cast<std::size_t>(h0) * kn + static_cast<std::size_t>(k.mul(k.inv(kk), k0))];
    };

    // tensor points: canonical form of (x, y) = min over hh of (x . hh, hh^-1 . y)
    auto tensor_canon = [&](std::uint32_t x, std::uint32_t y) {
        std::uint64_t best = ~0ull;
        for (std::size_t hh = 0; hh < hn; ++hh) {
            std::uint32_t xx = x_right(x, static_cast<int>(hh));
            std::uint32_t yy = y_left(y, h.inv(static_cast<int>(hh)));
            std::uint64_t v = (static_cast<std::uint64_t>(xx) << 32) | yy;
            best = std::min(best, v);
        }
        return best;
    };

    std::set<std::uint64_t> points;
    for (std::size_t gx = 0; gx < gn; ++gx)
        for (std::size_t hx = 0; hx < hn; ++hx) {
            std::uint32_t x = xid[gx * hn + hx];
            if (x != gx * hn + hx)
                continue;  // visit each X point once
            for (std::size_t hy = 0; hy < hn; ++hy)
                for (std::size_t ky = 0; ky < kn; ++ky) {
                    std::uint32_t y = yid[hy * kn + ky];
                    if (y != hy * kn + ky)
                        continue;
                    points.insert(tensor_canon(x, y));
                }
        }

    std::map<int, Rat> result;
    std::set<std::uint64_t> assigned;
    for (std::uint64_t p : points) {
        if (assigned.count(p))
            continue;
        // orbit of p under G x K
        std::set<std::uint64_t> orbit;
        std::vector<std::uint64_t> queue{p};
        orbit.insert(p);
        while (!queue.empty()) {
            std::uint64_t cur = queue.back();
            queue.pop_back();
            std::uint32_t x = static_cast<std::uint32_t>(cur >> 32);
            std::uint32_t y = static_cast<std::uint32_t>(cur & 0xffffffffu);
            for (int gg : g.generators()) {
                std::uint64_t nxt = tensor_canon(x_left(x, gg), y);
                if (orbit.insert(nxt).second)
                    queue.push_back(nxt);
            }
            for (int kk : k.generators()) {
                std::uint64_t nxt = tensor_canon(x, y_right(y, kk));
                if (orbit.insert(nxt).second)
                    queue.push_back(nxt);
            }
        }
        for (std::uint64_t q : orbit)
            assigned.insert(q);
        // stabilizer of p: {(gg, kk) : gg . p . kk^{-1}... with right action as written}
        std::uint32_t px = static_cast<std::uint32_t>(p >> 32);
        std::uint32_t py = static_cast<std::uint32_t>(p & 0xffffffffu);
        PairSet stab;
        for (std::size_t gg = 0; gg < gn; ++gg)
            for (std::size_t kk = 0; kk < kn; ++kk)
                if (tensor_canon(x_left(px, static_cast<int>(gg)), y_right(py, k.inv(static_cast<int>(kk)))) == p)
                    stab.push_back(pack_pair(static_cast<int>(gg), static_cast<int>(kk), kn));
        std::sort(stab.begin(), stab.end());
        result[bgk.classify(stab)] += Rat(1);
    }
    return result;
}

}  // namespace bisetkit
