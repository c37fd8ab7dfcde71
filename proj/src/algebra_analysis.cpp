#include "bisetkit/algebra_analysis.hpp"

#include <algorithm>

#include "bisetkit/context.hpp"
#include "bisetkit/errors.hpp"

namespace bisetkit {

Int determinant(const QMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("determinant of a non-square matrix");
    QMatrix a = m;
    std::size_t n = a.rows();
    Rat det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = n;
        for (std::size_t r = c; r < n; ++r)
            if (!a.at(r, c).is_zero()) {
                sel = r;
                break;
            }
        if (sel == n)
            return 0;
        if (sel != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a.at(sel, j), a.at(c, j));
            det = -det;
        }
        det *= a.at(c, c);
        Rat inv = Rat(1) / a.at(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            Rat f = a.at(r, c) * inv;
            if (f.is_zero())
                continue;
            for (std::size_t j = c; j < n; ++j)
                a.at(r, j) -= f * a.at(c, j);
        }
    }
    if (!det.is_integer()) {
        // determinant of an integer matrix is an integer; rational input is allowed though
        return Int(det.num() / det.den());
    }
    return det.num();
}

SimpleCatalog build_simple_catalog(Context& ctx, const GroupPtr& g) {
    SimpleCatalog cat;
    cat.labels = all_labels(ctx, g);
    for (const auto& label : cat.labels) {
        const DeltaEval& d = ctx.delta(g, label.sigma, label.v);
        const SimpleEval& s = ctx.simple(g, label.sigma, label.v);
        cat.delta_dims.push_back(d.module.dim);
        if (s.module.dim > 0) {
            cat.catalog_index.push_back(static_cast<int>(cat.simples.size()));
            cat.catalog_labels.push_back(static_cast<int>(&label - cat.labels.data()));
            cat.simples.push_back(s.module);
            cat.characters.push_back(trace_character(s.module));
            cat.end_dims.push_back(s.end_dim);
        } else {
            cat.catalog_index.push_back(-1);
        }
    }
    // completeness: sum dim^2 / end == dim A - dim rad
    auto table = ctx.algebra_table(g);
    const Subspace& rad = ctx.radical(g);
    std::size_t expected = table->dim() - rad.dim();
    std::size_t total = 0;
    for (std::size_t i = 0; i < cat.simples.size(); ++i) {
        std::size_t d2 = cat.simples[i].dim * cat.simples[i].dim;
        if (cat.end_dims[i] == 0 || d2 % cat.end_dims[i] != 0)
            throw CatalogIncomplete("end dim does not divide dim^2 for " +
                                    cat.labels[static_cast<std::size_t>(cat.catalog_labels[i])].str());
        total += d2 / cat.end_dims[i];
    }
    if (total != expected)
        throw CatalogIncomplete("simple catalog bookkeeping: sum dim^2/end = " + std::to_string(total) +
                                ", dim A - dim rad = " + std::to_string(expected));
    // characters of pairwise distinct simples must be independent
    {
        QMatrix m(table->dim(), cat.characters.size());
        for (std::size_t j = 0; j < cat.characters.size(); ++j)
            for (std::size_t i = 0; i < table->dim(); ++i)
                m.at(i, j) = cat.characters[j][i];
        if (rank(m) != cat.characters.size())
            throw CatalogIncomplete("simple trace characters are dependent");
    }
    return cat;
}

namespace {

QVec unit_vec(std::size_t n, std::size_t i) {
    QVec v(n);
    v[i] = Rat(1);
    return v;
}

std::vector<std::size_t> complement_coords(const Subspace& s) {
    std::vector<char> pivot(s.ambient(), 0);
    for (auto p : s.pivots())
        pivot[p] = 1;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < s.ambient(); ++i)
        if (!pivot[i])
            out.push_back(i);
    return out;
}

}  // namespace

PIM build_pim(Context& ctx, const GroupPtr& g, int catalog_index) {
    auto table = ctx.algebra_table(g);
    const SimpleCatalog& cat = ctx.catalog(g);
    const Subspace& rad = ctx.radical(g);
    const AlgebraGenerators& ag = ctx.generators_of(g);
    std::vector<std::size_t> gen_pos;
    for (int gi : ag.gens)
        gen_pos.push_back(static_cast<std::size_t>(gi));

    std::size_t d = table->dim();
    std::vector<std::size_t> abar = complement_coords(rad);  // coordinates of A/Rad
    std::size_t dbar = abar.size();

    const ModuleRep& s = cat.simples[static_cast<std::size_t>(catalog_index)];
    std::size_t ds = s.dim;

    // D-rank-one idempotent pi inside End(S)
    QMatrix pi(ds, ds);
    {
        auto dbasis = intertwiners(s.action, s.action, gen_pos);
        std::size_t e = dbasis.size();
        if (e != cat.end_dims[static_cast<std::size_t>(catalog_index)])
            throw CatalogIncomplete("end dim mismatch during PIM construction");
        // D-basis of S: greedily add D*v for vectors outside the span
        QMatrix b(ds, ds);
        Subspace seen(ds);
        std::size_t col = 0;
        for (std::size_t w = 0; w < ds && col < ds; ++w) {
            QVec v = unit_vec(ds, w);
            if (seen.contains(v))
                continue;
            for (std::size_t t = 0; t < e; ++t) {
                QVec fv = dbasis[t].apply(v);
                if (!seen.absorb(fv))
                    throw AssertionFailure("D-orbit vectors unexpectedly dependent");
                for (std::size_t i = 0; i < ds; ++i)
                    b.at(i, col) = fv[i];
                ++col;
            }
        }
        if (col != ds)
            throw AssertionFailure("D-basis construction did not fill the module");
        auto binv = b.inverse();
        if (!binv)
            throw AssertionFailure("D-basis matrix not invertible");
        QMatrix diag(ds, ds);
        for (std::size_t t = 0; t < e; ++t)
            diag.at(t, t) = Rat(1);
        pi = b * diag * (*binv);
    }

    // solve for ebar in A/Rad with rho_j(ebar) = delta_{j,label} * pi
    QVec ebar;
    {
        std::size_t rows = 0;
        for (const auto& sm : cat.simples)
            rows += sm.dim * sm.dim;
        QMatrix sys(rows, dbar);
        QVec rhs(rows);
        std::size_t r0 = 0;
        for (std::size_t j = 0; j < cat.simples.size(); ++j) {
            const ModuleRep& sj = cat.simples[j];
            for (std::size_t c = 0; c < dbar; ++c) {
                const QMatrix& m = sj.action[abar[c]];
                for (std::size_t a = 0; a < sj.dim; ++a)
                    for (std::size_t bb = 0; bb < sj.dim; ++bb)
                        sys.at(r0 + a * sj.dim + bb, c) = m.at(a, bb);
            }
            if (j == static_cast<std::size_t>(catalog_index))
                for (std::size_t a = 0; a < sj.dim; ++a)
                    for (std::size_t bb = 0; bb < sj.dim; ++bb)
                        rhs[r0 + a * sj.dim + bb] = pi.at(a, bb);
            r0 += sj.dim * sj.dim;
        }
        auto sol = solve(sys, rhs);
        if (!sol)
            throw CatalogIncomplete("block idempotent system unsolvable (catalog incomplete?)");
        ebar = *sol;
    }

    // lift along the radical: e <- 3e^2 - 2e^3 until idempotent
    QVec e(d);
    for (std::size_t c = 0; c < dbar; ++c)
        e[abar[c]] = ebar[c];
    for (int iter = 0; iter < 64; ++iter) {
        QVec e2 = table->mul(e, e);
        if (e2 == e)
            break;
        QVec e3 = table->mul(e2, e);
        QVec next(d);
        for (std::size_t i = 0; i < d; ++i)
            next[i] = Rat(3) * e2[i] - Rat(2) * e3[i];
        e = std::move(next);
        if (iter == 63)
            throw AssertionFailure("idempotent lifting did not converge");
    }
    if (!(table->mul(e, e) == e))
        throw AssertionFailure("lifted element is not idempotent");

    PIM p;
    p.label = cat.labels[static_cast<std::size_t>(cat.catalog_labels[static_cast<std::size_t>(catalog_index)])];
    p.idempotent = e;

    // P = A * e
    Subspace pspan(d);
    for (std::size_t i = 0; i < d; ++i)
        pspan.absorb(table->mul(unit_vec(d, i), e));
    // module structure on P
    p.module.algebra = table;
    p.module.dim = pspan.dim();
    for (std::size_t b = 0; b < d; ++b) {
        QMatrix act(pspan.dim(), pspan.dim());
        for (std::size_t c = 0; c < pspan.dim(); ++c) {
            QVec img = table->mul(unit_vec(d, b), pspan.basis()[c]);
            auto coords = pspan.coordinates(img);
            if (!coords)
                throw AssertionFailure("A*e is not invariant under left multiplication");
            for (std::size_t r = 0; r < pspan.dim(); ++r)
                act.at(r, c) = (*coords)[r];
        }
        p.module.action.push_back(std::move(act));
    }

    // Loewy layers: Rad^i(A) * e
    std::vector<Subspace> layers{pspan};
    while (layers.back().dim() > 0) {
        const Subspace& prev = layers.back();
        Subspace next(d);
        for (const auto& r : rad.basis())
            for (const auto& v : prev.basis())
                next.absorb(table->mul(r, v));
        layers.push_back(std::move(next));
        if (layers.size() > d + 2)
            throw AssertionFailure("radical filtration does not terminate");
    }
    // layer characters via restricted traces
    auto layer_character = [&](const Subspace& sp) {
        TraceCharacter chi(d);
        for (std::size_t b = 0; b < d; ++b) {
            Rat tr;
            for (std::size_t c = 0; c < sp.dim(); ++c) {
                QVec img = table->mul(unit_vec(d, b), sp.basis()[c]);
                auto coords = sp.coordinates(img);
                if (!coords)
                    throw AssertionFailure("layer is not invariant");
                tr += (*coords)[c];
            }
            chi[b] = tr;
        }
        return chi;
    };
    for (std::size_t l = 0; l + 1 < layers.size(); ++l) {
        std::size_t dim_layer = layers[l].dim() - layers[l + 1].dim();
        if (dim_layer == 0 && layers[l].dim() == 0)
            break;
        p.loewy_dims.push_back(dim_layer);
        TraceCharacter hi = layer_character(layers[l]);
        TraceCharacter lo = layer_character(layers[l + 1]);
        TraceCharacter diff(d);
        for (std::size_t i = 0; i < d; ++i)
            diff[i] = hi[i] - lo[i];
        p.loewy_factors.push_back(character_multiplicities(diff, cat.characters));
    }
    // top must be the requested simple
    if (!p.loewy_factors.empty()) {
        for (std::size_t j = 0; j < cat.simples.size(); ++j) {
            long long expect = j == static_cast<std::size_t>(catalog_index) ? 1 : 0;
            if (p.loewy_factors[0][j] != expect)
                throw AssertionFailure("PIM top is not the requested simple");
        }
    }
    return p;
}

DecompositionMatrix decomposition_matrix(Context& ctx, const GroupPtr& g) {
    const SimpleCatalog& cat = ctx.catalog(g);
    DecompositionMatrix dm;
    dm.rows = cat.labels;
    for (int cl : cat.catalog_labels)
        dm.cols.push_back(cat.labels[static_cast<std::size_t>(cl)]);
    for (const auto& label : cat.labels) {
        const DeltaEval& d = ctx.delta(g, label.sigma, label.v);
        if (d.module.dim == 0) {
            dm.entries.emplace_back(cat.simples.size(), 0);
            continue;
        }
        dm.entries.push_back(character_multiplicities(trace_character(d.module), cat.characters));
    }
    return dm;
}

std::vector<std::vector<long long>> cartan_matrix(Context& ctx, const GroupPtr& g) {
    const SimpleCatalog& cat = ctx.catalog(g);
    std::vector<std::vector<long long>> c;
    for (std::size_t i = 0; i < cat.simples.size(); ++i) {
        const PIM& p = ctx.pim(g, static_cast<int>(i));
        c.push_back(character_multiplicities(trace_character(p.module), cat.characters));
    }
    return c;
}

namespace {

// operators on flattened dt x ds matrices, flat index i*ds + j
QMatrix left_op(const QMatrix& a, std::size_t ds) {
    std::size_t dt = a.rows();
    QMatrix m(dt * ds, dt * ds);
    for (std::size_t i = 0; i < dt; ++i)
        for (std::size_t j = 0; j < ds; ++j)
            for (std::size_t k = 0; k < dt; ++k)
                if (!a.at(i, k).is_zero())
                    m.at(i * ds + j, k * ds + j) = a.at(i, k);
    return m;
}

QMatrix right_op(const QMatrix& b, std::size_t dt) {
    std::size_t ds = b.rows();
    QMatrix m(dt * ds, dt * ds);
    for (std::size_t i = 0; i < dt; ++i)
        for (std::size_t j = 0; j < ds; ++j)
            for (std::size_t k = 0; k < ds; ++k)
                if (!b.at(k, j).is_zero())
                    m.at(i * ds + j, i * ds + k) = b.at(k, j);
    return m;
}

}  // namespace

long long ext1(Context& ctx, const GroupPtr& g, int cat_s, int cat_t) {
    auto table = ctx.algebra_table(g);
    const SimpleCatalog& cat = ctx.catalog(g);
    const AlgebraGenerators& ag = ctx.generators_of(g);
    const ModuleRep& s = cat.simples[static_cast<std::size_t>(cat_s)];
    const ModuleRep& t = cat.simples[static_cast<std::size_t>(cat_t)];
    std::size_t ds = s.dim, dt = t.dim;
    std::size_t q = ds * dt;
    std::size_t r = ag.gens.size();
    std::size_t unknowns = r * q;
    std::size_t d = table->dim();

    // c(word) as a q x unknowns operator on the generator values
    std::vector<QMatrix> word_ops;
    word_ops.emplace_back(q, unknowns);  // c(1) = 0
    for (std::size_t w = 1; w < ag.words.size(); ++w) {
        auto [parent, gp] = ag.words[w];
        const QVec& pvec = ag.word_vectors[static_cast<std::size_t>(parent)];
        std::size_t gen_basis = static_cast<std::size_t>(ag.gens[static_cast<std::size_t>(gp)]);
        // c(w) = rhoT(parent) c(g) + c(parent) rhoS(g)
        QMatrix op = right_op(s.action[gen_basis], dt) * word_ops[static_cast<std::size_t>(parent)];
        QMatrix lhs = left_op(t.act(pvec), ds);
        for (std::size_t row = 0; row < q; ++row)
            for (std::size_t col = 0; col < q; ++col)
                if (!lhs.at(row, col).is_zero())
                    op.at(row, static_cast<std::size_t>(gp) * q + col) += lhs.at(row, col);
        word_ops.push_back(std::move(op));
    }
    // c(e_m) via the change of basis
    std::vector<QMatrix> basis_ops;
    for (std::size_t m = 0; m < d; ++m) {
        QMatrix op(q, unknowns);
        for (std::size_t w = 0; w < d; ++w) {
            const Rat& coef = ag.word_matrix_inverse.at(w, m);
            if (coef.is_zero())
                continue;
            op = op + word_ops[w].scaled(coef);
        }
        basis_ops.push_back(std::move(op));
    }
    // equations: c(e_m * g) = rhoT(e_m) c(g) + c(e_m) rhoS(g)
    Subspace rows(unknowns);
    for (std::size_t m = 0; m < d; ++m) {
        for (std::size_t gp = 0; gp < r; ++gp) {
            std::size_t gen_basis = static_cast<std::size_t>(ag.gens[gp]);
            QMatrix lhs(q, unknowns);
            for (const auto& [k, coef] : table->product(m, gen_basis))
                lhs = lhs + basis_ops[static_cast<std::size_t>(k)].scaled(coef);
            QMatrix rhs = right_op(s.action[gen_basis], dt) * basis_ops[m];
            {
                QMatrix lt = left_op(t.action[m], ds);
                for (std::size_t row = 0; row < q; ++row)
                    for (std::size_t col = 0; col < q; ++col)
                        if (!lt.at(row, col).is_zero())
                            rhs.at(row, gp * q + col) += lt.at(row, col);
            }
            QMatrix diff = lhs - rhs;
            for (std::size_t row = 0; row < q; ++row)
                rows.absorb(diff.row(row));
        }
    }
    std::size_t cocycles = unknowns - rows.dim();
    // coboundaries: f -> (rhoT(g) f - f rhoS(g))_g
    Subspace cob(unknowns);
    for (std::size_t i = 0; i < dt; ++i)
        for (std::size_t j = 0; j < ds; ++j) {
            QMatrix f(dt, ds);
            f.at(i, j) = Rat(1);
            QVec v(unknowns);
            for (std::size_t gp = 0; gp < r; ++gp) {
                std::size_t gen_basis = static_cast<std::size_t>(ag.gens[gp]);
                QMatrix cbm = t.action[gen_basis] * f - f * s.action[gen_basis];
                for (std::size_t a = 0; a < dt; ++a)
                    for (std::size_t b = 0; b < ds; ++b)
                        v[gp * q + a * ds + b] = cbm.at(a, b);
            }
            cob.absorb(v);
        }
    long long ext = static_cast<long long>(cocycles) - static_cast<long long>(cob.dim());
    if (ext < 0)
        throw AssertionFailure("ext1: negative dimension (coboundary not a cocycle)");
    return ext;
}

QHCertificate qh_certificate(Context& ctx, const GroupPtr& g) {
    QHCertificate cert;
    const SimpleCatalog& cat = ctx.catalog(g);
    const auto& entries = ctx.sigma(g);

    // (a) NV
    {
        QHCheck c;
        c.name = "nv";
        std::vector<SimpleLabel> offenders;
        c.pass = nv_check(ctx, g, &offenders);
        for (const auto& o : offenders)
            c.witness += (c.witness.empty() ? "vanishing: " : ", ") + o.str();
        cert.checks.push_back(std::move(c));
    }
    DecompositionMatrix dm = decomposition_matrix(ctx, g);
    // (b) unitriangular w.r.t. the lambda order
    {
        QHCheck c;
        c.name = "unitriangular";
        c.pass = true;
        for (std::size_t i = 0; i < dm.rows.size(); ++i)
            for (std::size_t j = 0; j < dm.cols.size(); ++j) {
                bool diagonal = dm.rows[i] == dm.cols[j];
                long long v = dm.entries[i][j];
                if (diagonal && v != 1) {
                    c.pass = false;
                    c.witness = "[Delta " + dm.rows[i].str() + " : S " + dm.cols[j].str() + "] = " + std::to_string(v);
                } else if (!diagonal && v != 0) {
                    const GroupPtr& h = entries[static_cast<std::size_t>(dm.rows[i].sigma)].rep;
                    const GroupPtr& k = entries[static_cast<std::size_t>(dm.cols[j].sigma)].rep;
                    if (subquotient_order(ctx, h, k) != SubqRel::ProperSubquotient) {
                        c.pass = false;
                        c.witness = "off-order entry [Delta " + dm.rows[i].str() + " : S " + dm.cols[j].str() + "]";
                    }
                }
            }
        cert.checks.push_back(std::move(c));
    }
    // (c) BGG dimension identity
    {
        QHCheck c;
        c.name = "bgg";
        c.pass = true;
        for (std::size_t j = 0; j < dm.cols.size(); ++j) {
            const PIM& p = ctx.pim(g, static_cast<int>(j));
            long long expect = 0;
            for (std::size_t i = 0; i < dm.rows.size(); ++i)
                expect += dm.entries[i][j] *
                          static_cast<long long>(ctx.delta(g, dm.rows[i].sigma, dm.rows[i].v).module.dim);
            if (expect != static_cast<long long>(p.module.dim)) {
                c.pass = false;
                c.witness = "dim P" + dm.cols[j].str() + " = " + std::to_string(p.module.dim) +
                            " but BGG predicts " + std::to_string(expect);
            }
        }
        cert.checks.push_back(std::move(c));
    }
    // (d) Cartan determinant
    {
        QHCheck c;
        c.name = "cartan_det";
        auto cm = cartan_matrix(ctx, g);
        QMatrix m(cm.size(), cm.size());
        for (std::size_t i = 0; i < cm.size(); ++i)
            for (std::size_t j = 0; j < cm.size(); ++j)
                m.at(i, j) = Rat(cm[i][j]);
        Int det = determinant(m);
        c.pass = det == 1;
        c.witness = "det = " + det.str();
        cert.checks.push_back(std::move(c));
    }
    // (e) no simple self-extensions
    {
        QHCheck c;
        c.name = "no_self_ext";
        c.pass = true;
        for (std::size_t i = 0; i < cat.simples.size(); ++i) {
            long long e = ext1(ctx, g, static_cast<int>(i), static_cast<int>(i));
            if (e != 0) {
                c.pass = false;
                c.witness = "ext1(S,S) = " + std::to_string(e) + " for S = " +
                            cat.labels[static_cast<std::size_t>(cat.catalog_labels[i])].str();
                break;
            }
        }
        cert.checks.push_back(std::move(c));
    }
    cert.verdict = true;
    for (const auto& c : cert.checks)
        cert.verdict = cert.verdict && c.pass;
    return cert;
}

}  // namespace bisetkit
