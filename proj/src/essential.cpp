#include "bisetkit/essential.hpp"

#include "bisetkit/context.hpp"
#include "bisetkit/errors.hpp"

namespace bisetkit {

QVec HomBar::project(const QVec& v) const {
    QVec reduced = ideal.reduce(v);
    QVec out(dim);
    for (std::size_t t = 0; t < dim; ++t)
        out[t] = reduced[rep_labels[t]];
    return out;
}

QVec HomBar::lift(const QVec& q, std::size_t ambient) const {
    QVec out(ambient);
    for (std::size_t t = 0; t < dim; ++t)
        out[rep_labels[t]] = q[t];
    return out;
}

Subspace ideal_subspace(Context& ctx, const GroupPtr& h, const GroupPtr& k) {
    const PairBasis& ambient = ctx.pair_basis(k, h);
    Subspace span(ambient.size());
    const auto& entries = ctx.sigma(h);
    int self = ctx.sigma_index_of_group(h);
    for (std::size_t xi = 0; xi < entries.size(); ++xi) {
        if (static_cast<int>(xi) == self)
            continue;
        const GroupPtr& x = entries[xi].rep;
        const PairBasis& bkx = ctx.pair_basis(k, x);
        const PairBasis& bxh = ctx.pair_basis(x, h);
        for (std::size_t f = 0; f < bkx.size(); ++f)
            for (std::size_t g = 0; g < bxh.size(); ++g) {
                auto prod = compose_transitive(ctx, k, x, h, static_cast<int>(f), static_cast<int>(g));
                QVec v(ambient.size());
                for (const auto& [label, c] : prod)
                    v[static_cast<std::size_t>(label)] = c;
                span.absorb(v);
            }
    }
    return span;
}

HomBar build_hombar(Context& ctx, const GroupPtr& h, const GroupPtr& k) {
    HomBar hb;
    hb.source_h = h;
    hb.target_k = k;
    hb.ideal = ideal_subspace(ctx, h, k);
    const PairBasis& ambient = ctx.pair_basis(k, h);
    std::vector<char> pivot(ambient.size(), 0);
    for (auto p : hb.ideal.pivots())
        pivot[p] = 1;
    for (std::size_t i = 0; i < ambient.size(); ++i)
        if (!pivot[i])
            hb.rep_labels.push_back(i);
    hb.dim = hb.rep_labels.size();
    return hb;
}

QMatrix right_iso_action(Context& ctx, const GroupPtr& h, const GroupPtr& k, const ElementMap& phi) {
    const HomBar& hb = ctx.hombar(h, k);
    const PairBasis& ambient = ctx.pair_basis(k, h);
    BisetElement iso = iso_biset(ctx, h, h, phi);
    QMatrix m(hb.dim, hb.dim);
    for (std::size_t t = 0; t < hb.dim; ++t) {
        BisetElement x;
        x.target = k;
        x.source = h;
        x.add(static_cast<int>(hb.rep_labels[t]), Rat(1));
        BisetElement y = compose(ctx, x, iso);
        QVec proj = hb.project(y.dense(ambient.size()));
        for (std::size_t i = 0; i < hb.dim; ++i)
            m.at(i, t) = proj[i];
    }
    return m;
}

QMatrix out_action_matrix(Context& ctx, const GroupPtr& h, const GroupPtr& k, int out_index) {
    const OutGroup& og = ctx.out(h);
    int inv = og.inverse[static_cast<std::size_t>(out_index)];
    return right_iso_action(ctx, h, k, og.out_elements[static_cast<std::size_t>(inv)]);
}

OutAlgebraIso out_algebra_iso(Context& ctx, const GroupPtr& h) {
    const HomBar& hb = ctx.hombar(h, h);
    const OutGroup& og = ctx.out(h);
    const PairBasis& ambient = ctx.pair_basis(h, h);
    if (hb.dim != og.order())
        throw AssertionFailure("dim hombar(H,H) = " + std::to_string(hb.dim) + " but |Out(H)| = " +
                               std::to_string(og.order()));
    OutAlgebraIso iso;
    iso.classes = QMatrix(hb.dim, og.order());
    for (std::size_t t = 0; t < og.order(); ++t) {
        BisetElement e = iso_biset(ctx, h, h, og.out_elements[t]);
        QVec proj = hb.project(e.dense(ambient.size()));
        for (std::size_t i = 0; i < hb.dim; ++i)
            iso.classes.at(i, t) = proj[i];
    }
    auto inv = iso.classes.inverse();
    if (!inv)
        throw AssertionFailure("[Iso(phi)] classes do not form a basis of hombar(H,H)");
    iso.to_kout = *inv;
    return iso;
}

}  // namespace bisetkit
