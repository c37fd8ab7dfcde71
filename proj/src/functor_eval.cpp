#include "bisetkit/functor_eval.hpp"

#include <algorithm>

#include "bisetkit/context.hpp"
#include "bisetkit/errors.hpp"

namespace bisetkit {

namespace {

std::size_t flat_index(std::size_t a, std::size_t j, std::size_t v_dim) {
    return a * v_dim + j;
}

}  // namespace

std::vector<SimpleLabel> all_labels(Context& ctx, const GroupPtr& g) {
    const auto& entries = ctx.sigma(g);
    std::vector<SimpleLabel> labels;
    for (std::size_t s = 0; s < entries.size(); ++s) {
        const auto& simples = ctx.out_simples(entries[s].rep);
        for (std::size_t v = 0; v < simples.size(); ++v) {
            SimpleLabel l;
            l.sigma = static_cast<int>(s);
            l.v = static_cast<int>(v);
            l.h_name = entries[s].name;
            l.v_name = simples[v].name;
            labels.push_back(std::move(l));
        }
    }
    std::stable_sort(labels.begin(), labels.end(), [&](const SimpleLabel& a, const SimpleLabel& b) {
        std::size_t oa = entries[static_cast<std::size_t>(a.sigma)].rep->order();
        std::size_t ob = entries[static_cast<std::size_t>(b.sigma)].rep->order();
        if (oa != ob)
            return oa > ob;
        if (a.sigma != b.sigma)
            return a.sigma < b.sigma;
        return a.v < b.v;
    });
    return labels;
}

DeltaEval build_delta_eval(Context& ctx, const GroupPtr& g, int sigma_idx, int v_idx) {
    const auto& entries = ctx.sigma(g);
    const GroupPtr& h = entries[static_cast<std::size_t>(sigma_idx)].rep;
    const OutGroup& og = ctx.out(h);
    const OutSimple& v = ctx.out_simples(h)[static_cast<std::size_t>(v_idx)];
    const HomBar& hb = ctx.hombar(h, g);
    const PairBasis& bgh = ctx.pair_basis(g, h);
    auto table = ctx.algebra_table(g);

    DeltaEval d;
    d.label.sigma = sigma_idx;
    d.label.v = v_idx;
    d.label.h_name = entries[static_cast<std::size_t>(sigma_idx)].name;
    d.label.v_name = v.name;
    d.ambient = g;
    d.hombar_dim = hb.dim;
    d.v_dim = v.dim;

    std::size_t flat = hb.dim * v.dim;
    d.relations = Subspace(flat);
    // relations (x . phi) (x) w  -  x (x) (phi . w) over all out elements
    for (std::size_t t = 0; t < og.order(); ++t) {
        QMatrix rt = right_iso_action(ctx, h, g, og.out_elements[t]);
        const QMatrix& rho = v.action[t];
        for (std::size_t a = 0; a < hb.dim; ++a)
            for (std::size_t j = 0; j < v.dim; ++j) {
                QVec rel(flat);
                for (std::size_t b = 0; b < hb.dim; ++b)
                    if (!rt.at(b, a).is_zero())
                        rel[flat_index(b, j, v.dim)] += rt.at(b, a);
                for (std::size_t i = 0; i < v.dim; ++i)
                    if (!rho.at(i, j).is_zero())
                        rel[flat_index(a, i, v.dim)] -= rho.at(i, j);
                d.relations.absorb(rel);
            }
    }
    {
        std::vector<char> pivot(flat, 0);
        for (auto p : d.relations.pivots())
            pivot[p] = 1;
        for (std::size_t i = 0; i < flat; ++i)
            if (!pivot[i])
                d.rep_coords.push_back(i);
    }
    std::size_t dim = d.rep_coords.size();

    // generator images: class of each a (x) v_j in quotient coordinates
    for (std::size_t a = 0; a < hb.dim; ++a)
        for (std::size_t j = 0; j < v.dim; ++j) {
            QVec unit(flat);
            unit[flat_index(a, j, v.dim)] = Rat(1);
            QVec red = d.relations.reduce(unit);
            QVec img(dim);
            for (std::size_t c = 0; c < dim; ++c)
                img[c] = red[d.rep_coords[c]];
            d.generator_images.push_back(std::move(img));
        }

    // action of every basis element of kB(G,G)
    std::size_t algebra_dim = table->dim();
    // projected composition b ∘ e_{rep_label[a]} for each (b, a)
    d.module.algebra = table;
    d.module.dim = dim;
    d.module.action.reserve(algebra_dim);
    std::size_t ambient_dim = bgh.size();
    for (std::size_t b = 0; b < algebra_dim; ++b) {
        QMatrix act(dim, dim);
        std::vector<QVec> proj_of_a(hb.dim);
        for (std::size_t a = 0; a < hb.dim; ++a) {
            auto prod = compose_transitive(ctx, g, g, h, static_cast<int>(b), static_cast<int>(hb.rep_labels[a]));
            QVec dense(ambient_dim);
            for (const auto& [label, c] : prod)
                dense[static_cast<std::size_t>(label)] = c;
            proj_of_a[a] = hb.project(dense);
        }
        for (std::size_t c = 0; c < dim; ++c) {
            std::size_t fa = d.rep_coords[c] / v.dim;
            std::size_t fj = d.rep_coords[c] % v.dim;
            // b . (a (x) v_j) = sum_w proj[w] (e_w (x) v_j)
            QVec img(flat);
            for (std::size_t w = 0; w < hb.dim; ++w)
                if (!proj_of_a[fa][w].is_zero())
                    img[flat_index(w, fj, v.dim)] = proj_of_a[fa][w];
            QVec red = d.relations.reduce(img);
            for (std::size_t r = 0; r < dim; ++r)
                act.at(r, c) = red[d.rep_coords[r]];
        }
        d.module.action.push_back(std::move(act));
    }
    return d;
}

SimpleEval build_simple_eval(Context& ctx, const GroupPtr& g, int sigma_idx, int v_idx) {
    const DeltaEval& delta = ctx.delta(g, sigma_idx, v_idx);
    const auto& entries = ctx.sigma(g);
    const GroupPtr& h = entries[static_cast<std::size_t>(sigma_idx)].rep;
    const OutGroup& og = ctx.out(h);
    const OutSimple& v = ctx.out_simples(h)[static_cast<std::size_t>(v_idx)];
    const HomBar& hb = ctx.hombar(h, g);
    const HomBar& hbhh = ctx.hombar(h, h);
    const OutAlgebraIso& omega = ctx.hombar_out_iso(h);
    const PairBasis& bhg = ctx.pair_basis(h, g);
    const PairBasis& bhh = ctx.pair_basis(h, h);

    SimpleEval s;
    s.label = delta.label;
    s.ambient = g;
    std::size_t dim = delta.module.dim;
    s.kernel = Subspace(dim);

    if (dim > 0) {
        // pairing rows: for each b in basis B(H,G) and V-coordinate, a functional on Delta
        std::vector<QVec> rows;
        // value of the pairing on the coordinate unit (a, j): omega(b ∘ a) acting on v_j
        for (std::size_t b = 0; b < bhg.size(); ++b) {
            // per hombar generator a: kOut coefficients of proj(b ∘ lift(a))
            std::vector<QVec> kout_of_a(hb.dim);
            for (std::size_t a = 0; a < hb.dim; ++a) {
                auto prod = compose_transitive(ctx, h, g, h, static_cast<int>(b), static_cast<int>(hb.rep_labels[a]));
                QVec dense(bhh.size());
                for (const auto& [label, c] : prod)
                    dense[static_cast<std::size_t>(label)] = c;
                kout_of_a[a] = omega.to_kout.apply(hbhh.project(dense));
            }
            for (std::size_t out_row = 0; out_row < v.dim; ++out_row) {
                QVec row(dim);
                for (std::size_t c = 0; c < dim; ++c) {
                    std::size_t fa = delta.rep_coords[c] / v.dim;
                    std::size_t fj = delta.rep_coords[c] % v.dim;
                    Rat val;
                    for (std::size_t t = 0; t < og.order(); ++t)
                        if (!kout_of_a[fa][t].is_zero())
                            val += kout_of_a[fa][t] * v.action[t].at(out_row, fj);
                    row[c] = val;
                }
                rows.push_back(std::move(row));
            }
        }
        QMatrix pairing = QMatrix::from_rows(rows, dim);
        for (const auto& k : kernel(pairing))
            s.kernel.absorb(k);
    }
    s.module = quotient_rep(delta.module, s.kernel);
    if (s.module.dim > 0) {
        const AlgebraGenerators& ag = ctx.generators_of(g);
        std::vector<std::size_t> gen_pos;
        for (int gi : ag.gens)
            gen_pos.push_back(static_cast<std::size_t>(gi));
        s.end_dim = intertwiners(s.module.action, s.module.action, gen_pos).size();
    }
    return s;
}

std::vector<VanishingRow> vanishing_table(Context& ctx, const GroupPtr& g) {
    std::vector<VanishingRow> rows;
    for (const auto& label : all_labels(ctx, g)) {
        VanishingRow r;
        r.label = label;
        r.dim_delta = ctx.delta(g, label.sigma, label.v).module.dim;
        r.dim_simple = ctx.simple(g, label.sigma, label.v).module.dim;
        rows.push_back(std::move(r));
    }
    return rows;
}

bool nv_check(Context& ctx, const GroupPtr& g, std::vector<SimpleLabel>* offenders) {
    bool ok = true;
    for (const auto& row : vanishing_table(ctx, g))
        if (row.dim_simple == 0) {
            ok = false;
            if (offenders)
                offenders->push_back(row.label);
        }
    return ok;
}

SubqRel subquotient_order(Context& ctx, const GroupPtr& h, const GroupPtr& k) {
    if (h->order() == k->order())
        return iso_test(*h, *k) ? SubqRel::Equal : SubqRel::Other;
    if (h->order() > k->order() || k->order() % h->order() != 0)
        return SubqRel::Other;
    for (const auto& entry : ctx.sigma(k)) {
        if (entry.rep->order() != h->order())
            continue;
        if (entry.rep->order_multiset() == h->order_multiset() && iso_test(*entry.rep, *h))
            return SubqRel::ProperSubquotient;
    }
    return SubqRel::Other;
}

LambdaOrder lambda_order(Context& ctx, const GroupPtr& g, const SimpleLabel& a, const SimpleLabel& b) {
    if (a.sigma == b.sigma)
        return a.v == b.v ? LambdaOrder::Equal : LambdaOrder::Incomparable;
    const auto& entries = ctx.sigma(g);
    const GroupPtr& ha = entries[static_cast<std::size_t>(a.sigma)].rep;
    const GroupPtr& hb = entries[static_cast<std::size_t>(b.sigma)].rep;
    // (H,V) < (K,W) iff K is a strict subquotient of H
    if (subquotient_order(ctx, hb, ha) == SubqRel::ProperSubquotient)
        return LambdaOrder::Less;
    return LambdaOrder::Incomparable;
}

RadicalCompare radical_compare(Context& ctx, const GroupPtr& g, int sigma_idx, int v_idx) {
    const DeltaEval& delta = ctx.delta(g, sigma_idx, v_idx);
    const SimpleEval& simple = ctx.simple(g, sigma_idx, v_idx);
    const Subspace& rad = ctx.radical(g);

    RadicalCompare rc;
    rc.label = delta.label;
    rc.dim_delta = delta.module.dim;
    Subspace whole(delta.module.dim);
    for (std::size_t i = 0; i < delta.module.dim; ++i) {
        QVec unit(delta.module.dim);
        unit[i] = Rat(1);
        whole.absorb(unit);
    }
    Subspace rad_image(delta.module.dim);
    for (const auto& r : rad.basis()) {
        QMatrix act = delta.module.act(r);
        for (std::size_t i = 0; i < delta.module.dim; ++i) {
            QVec unit(delta.module.dim);
            unit[i] = Rat(1);
            rad_image.absorb(act.apply(unit));
        }
    }
    rc.dim_rad_of_eval = rad_image.dim();
    rc.dim_eval_of_rad = simple.kernel.dim();
    rc.inclusion = simple.kernel.contains(rad_image);
    rc.equal = rc.inclusion && rad_image.dim() == simple.kernel.dim();
    return rc;
}

bool is_indecomposable(Context& ctx, const GroupPtr& g, const ModuleRep& m) {
    if (m.dim == 0)
        return false;
    const Subspace& rad = ctx.radical(g);
    Subspace rad_image(m.dim);
    for (const auto& r : rad.basis()) {
        QMatrix act = m.act(r);
        for (std::size_t i = 0; i < m.dim; ++i) {
            QVec unit(m.dim);
            unit[i] = Rat(1);
            rad_image.absorb(act.apply(unit));
        }
    }
    ModuleRep top = quotient_rep(m, rad_image);
    if (top.dim > 0) {
        const SimpleCatalog& cat = ctx.catalog(g);
        auto mults = character_multiplicities(trace_character(top), cat.characters);
        long long total = 0;
        for (long long x : mults)
            total += x;
        if (total == 1)
            return true;
    }
    const AlgebraGenerators& ag = ctx.generators_of(g);
    std::vector<std::size_t> gen_pos;
    for (int gi : ag.gens)
        gen_pos.push_back(static_cast<std::size_t>(gi));
    auto ends = intertwiners(m.action, m.action, gen_pos);
    if (ends.size() == 1)
        return true;
    // local-ring test via the trace form of the endomorphism algebra
    std::size_t r = ends.size();
    QMatrix gram(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            gram.at(i, j) = (ends[i] * ends[j]).trace();
    std::size_t semisimple_dim = r - kernel(gram).size();
    if (semisimple_dim == 1)
        return true;
    throw AssertionFailure("indecomposability undecided for a module with end dim " + std::to_string(r));
}

}  // namespace bisetkit
