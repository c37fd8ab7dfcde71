#include "bisetkit/report.hpp"

#include <json.hpp>

#include "bisetkit/context.hpp"
#include "bisetkit/errors.hpp"
#include "bisetkit/parallel.hpp"

namespace bisetkit {

using nlohmann::json;

namespace {

int find_label(const std::vector<SimpleLabel>& labels, const std::string& h, const std::string& v) {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i].h_name == h && labels[i].v_name == v)
            return static_cast<int>(i);
    return -1;
}

void add_fact(A5Report& r, const std::string& name, bool pass, const std::string& detail) {
    r.facts.push_back({name, pass, detail});
}

std::string factor_list(Context& ctx, const GroupPtr& g, const ModuleRep& m) {
    const SimpleCatalog& cat = ctx.catalog(g);
    if (m.dim == 0)
        return "0";
    auto mults = character_multiplicities(trace_character(m), cat.characters);
    std::string out;
    for (std::size_t j = 0; j < mults.size(); ++j)
        for (long long c = 0; c < mults[j]; ++c)
            out += (out.empty() ? "" : " + ") +
                   cat.labels[static_cast<std::size_t>(cat.catalog_labels[j])].str();
    return out.empty() ? "0" : out;
}

}  // namespace

A5Report a5_report(Context& ctx) {
    A5Report r;
    GroupPtr a4 = ctx.parse_group("A4");
    GroupPtr a5 = ctx.parse_group("A5");

    // ---- standard-module facts evaluated at A4 ----
    {
        int s_c2 = ctx.sigma_index_by_name(a4, "C2");
        const auto& d = ctx.delta(a4, s_c2, 0);
        const auto& s = ctx.simple(a4, s_c2, 0);
        bool pass = d.module.dim == 2 && s.module.dim == d.module.dim;
        add_fact(r, "delta_C2_triv_at_A4_is_simple", pass,
                 "dim Delta = " + std::to_string(d.module.dim) + ", dim S = " + std::to_string(s.module.dim));
    }
    {
        // V4 labels: triv and sgn give 1-dimensional simples; the 2-dim gives 0.
        int s_v4 = ctx.sigma_index_by_name(a4, "V4");
        const auto& simples = ctx.out_simples(ctx.sigma(a4)[static_cast<std::size_t>(s_v4)].rep);
        for (std::size_t v = 0; v < simples.size(); ++v) {
            const auto& d = ctx.delta(a4, s_v4, static_cast<int>(v));
            if (simples[v].dim == 2) {
                add_fact(r, "delta_V4_2dim_at_A4_vanishes", d.module.dim == 0,
                         "dim Delta = " + std::to_string(d.module.dim));
            } else {
                std::string reading = factor_list(ctx, a4, d.module);
                bool pass = d.module.dim == 1;
                add_fact(r, "delta_V4_" + simples[v].name + "_at_A4_one_factor", pass,
                         "dim Delta = " + std::to_string(d.module.dim) + "; computed factor: " + reading +
                             "; the classical identification is sometimes printed with an A4 label -- "
                             "both readings are reported, only the computed one is asserted");
            }
        }
    }
    {
        int s_c3 = ctx.sigma_index_by_name(a4, "C3");
        const auto& simples = ctx.out_simples(ctx.sigma(a4)[static_cast<std::size_t>(s_c3)].rep);
        const SimpleCatalog& cat = ctx.catalog(a4);
        for (std::size_t v = 0; v < simples.size(); ++v) {
            const auto& d = ctx.delta(a4, s_c3, static_cast<int>(v));
            bool dims = d.module.dim == 2;
            auto mults = character_multiplicities(trace_character(d.module), cat.characters);
            int i_a4 = find_label(cat.labels, "A4", simples[v].name);
            int i_c3 = find_label(cat.labels, "C3", simples[v].name);
            bool factors = true;
            long long total = 0;
            for (std::size_t j = 0; j < mults.size(); ++j) {
                total += mults[j];
                int lab = cat.catalog_labels[j];
                long long expect = (lab == i_a4 || lab == i_c3) ? 1 : 0;
                if (mults[j] != expect)
                    factors = false;
            }
            factors = factors && total == 2;
            bool indec = is_indecomposable(ctx, a4, d.module);
            add_fact(r, "delta_C3_" + simples[v].name + "_at_A4_nonsplit_extension", dims && factors && indec,
                     "dim = " + std::to_string(d.module.dim) + ", factors = " + factor_list(ctx, a4, d.module) +
                         ", indecomposable = " + (indec ? "yes" : "no"));
        }
    }

    // ---- filtration multiplicities of P_{A4,sgn} via BGG numerics at A5 ----
    {
        DecompositionMatrix dm = decomposition_matrix(ctx, a5);
        int col = -1;
        for (std::size_t j = 0; j < dm.cols.size(); ++j)
            if (dm.cols[j].h_name == "A4" && dm.cols[j].v_name == "sgn")
                col = static_cast<int>(j);
        bool pass = col >= 0;
        std::string detail;
        if (pass)
            for (std::size_t i = 0; i < dm.rows.size(); ++i) {
                long long v = dm.entries[i][static_cast<std::size_t>(col)];
                bool is_a4 = dm.rows[i].h_name == "A4" && dm.rows[i].v_name == "sgn";
                bool is_c3 = dm.rows[i].h_name == "C3" && dm.rows[i].v_name == "sgn";
                long long expect = (is_a4 || is_c3) ? 1 : 0;
                if (v != expect) {
                    pass = false;
                    detail = "[P_(A4,sgn) : Delta " + dm.rows[i].str() + "] = " + std::to_string(v);
                }
                if (v != 0)
                    detail += (detail.empty() ? "" : "; ") + std::string("[P : Delta ") + dm.rows[i].str() +
                              "] = " + std::to_string(v);
            }
        add_fact(r, "P_A4_sgn_filtration_multiplicities", pass, detail);
    }

    // ---- one-dimensional standards at A5 and the vanishing simple ----
    {
        int s_a4 = ctx.sigma_index_by_name(a5, "A4");
        int s_c3 = ctx.sigma_index_by_name(a5, "C3");
        int v_sgn_a4 = -1, v_sgn_c3 = -1;
        {
            const auto& sa = ctx.out_simples(ctx.sigma(a5)[static_cast<std::size_t>(s_a4)].rep);
            for (std::size_t v = 0; v < sa.size(); ++v)
                if (sa[v].name == "sgn")
                    v_sgn_a4 = static_cast<int>(v);
            const auto& sc = ctx.out_simples(ctx.sigma(a5)[static_cast<std::size_t>(s_c3)].rep);
            for (std::size_t v = 0; v < sc.size(); ++v)
                if (sc[v].name == "sgn")
                    v_sgn_c3 = static_cast<int>(v);
        }
        const auto& d_a4 = ctx.delta(a5, s_a4, v_sgn_a4);
        const auto& d_c3 = ctx.delta(a5, s_c3, v_sgn_c3);
        const auto& s_a4m = ctx.simple(a5, s_a4, v_sgn_a4);
        const auto& s_c3m = ctx.simple(a5, s_c3, v_sgn_c3);
        add_fact(r, "dim_delta_A4_sgn_at_A5", d_a4.module.dim == 1, "dim = " + std::to_string(d_a4.module.dim));
        add_fact(r, "dim_delta_C3_sgn_at_A5", d_c3.module.dim == 1, "dim = " + std::to_string(d_c3.module.dim));
        add_fact(r, "S_C3_sgn_vanishes_at_A5", s_c3m.module.dim == 0, "dim = " + std::to_string(s_c3m.module.dim));
        bool same = d_a4.module.dim == 1 && s_a4m.module.dim == 1 &&
                    trace_character(d_a4.module) == trace_character(d_c3.module);
        add_fact(r, "delta_C3_sgn_iso_S_A4_sgn_at_A5", same,
                 "characters of Delta_(C3,sgn)(A5) and Delta_(A4,sgn)(A5) = S_(A4,sgn)(A5) agree: " +
                     std::string(same ? "yes" : "no"));
        // Ind Res acts as 1 on Delta_(A4,sgn)(A5)
        {
            const SubgroupData& data = ctx.subgroups(a5);
            std::vector<int> a4_sub;
            for (std::size_t c = 0; c < data.class_count(); ++c)
                if (data.class_rep(static_cast<int>(c)).size() == 12)
                    a4_sub = data.class_rep(static_cast<int>(c));
            BisetElement ind = ind_biset(ctx, a5, a4_sub);
            BisetElement res = res_biset(ctx, a5, a4_sub);
            BisetElement indres = compose(ctx, ind, res);
            QMatrix act = d_a4.module.act(indres.dense(ctx.pair_basis(a5, a5).size()));
            bool is_one = act == QMatrix::identity(d_a4.module.dim);
            add_fact(r, "IndRes_acts_as_1_on_delta_A4_sgn_at_A5", is_one, "matrix = [" + act.at(0, 0).str() + "]");
        }
    }

    // ---- the infinite-global-dimension witness ----
    {
        const SimpleCatalog& cat = ctx.catalog(a5);
        int lab = find_label(cat.labels, "A4", "sgn");
        int ci = lab >= 0 ? cat.catalog_index[static_cast<std::size_t>(lab)] : -1;
        bool pim_ok = false;
        std::string detail = "label not found";
        if (ci >= 0) {
            const PIM& p = ctx.pim(a5, ci);
            pim_ok = p.module.dim == 2 && p.loewy_dims.size() == 2 && p.loewy_dims[0] == 1 && p.loewy_dims[1] == 1;
            for (std::size_t layer = 0; layer < p.loewy_factors.size() && pim_ok; ++layer)
                for (std::size_t j = 0; j < p.loewy_factors[layer].size(); ++j)
                    if (p.loewy_factors[layer][j] != (static_cast<int>(j) == ci ? 1 : 0))
                        pim_ok = false;
            detail = "dim P = " + std::to_string(p.module.dim) + ", loewy = [";
            for (std::size_t l = 0; l < p.loewy_dims.size(); ++l)
                detail += (l ? "," : "") + std::to_string(p.loewy_dims[l]);
            detail += "]";
        }
        add_fact(r, "PIM_A4_sgn_at_A5_uniserial_dim2", pim_ok, detail);
        long long e = ci >= 0 ? ext1(ctx, a5, ci, ci) : -1;
        add_fact(r, "ext1_self_extension_A4_sgn_at_A5", e == 1, "ext1 = " + std::to_string(e));
        QHCertificate cert = qh_certificate(ctx, a5);
        std::string wit;
        for (const auto& c : cert.checks)
            if (!c.pass)
                wit += (wit.empty() ? "" : "; ") + c.name + (c.witness.empty() ? "" : ": " + c.witness);
        add_fact(r, "qh_certificate_A5_fails", !cert.verdict,
                 cert.verdict ? "certificate unexpectedly passed" : "not quasi-hereditary, self-extension found; " + wit);
    }

    r.ok = true;
    for (const auto& f : r.facts)
        r.ok = r.ok && f.pass;
    return r;
}

std::string a5_report_json(const A5Report& r) {
    json doc;
    doc["ok"] = r.ok;
    json facts = json::array();
    for (const auto& f : r.facts)
        facts.push_back({{"name", f.name}, {"pass", f.pass}, {"detail", f.detail}});
    doc["facts"] = std::move(facts);
    return doc.dump(2);
}

std::string full_report_json(Context& ctx, const GroupPtr& g) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["group"] = ctx.sigma(g)[static_cast<std::size_t>(ctx.sigma_index_of_group(g))].name;
    {
        json rows = json::array();
        for (const auto& row : vanishing_table(ctx, g))
            rows.push_back({{"H", row.label.h_name},
                            {"V", row.label.v_name},
                            {"dim_delta", row.dim_delta},
                            {"dim_simple", row.dim_simple}});
        doc["vanishing_table"] = std::move(rows);
    }
    DecompositionMatrix dm = decomposition_matrix(ctx, g);
    {
        json m;
        json rows = json::array(), cols = json::array(), entries = json::array();
        for (const auto& l : dm.rows)
            rows.push_back({{"H", l.h_name}, {"V", l.v_name}});
        for (const auto& l : dm.cols)
            cols.push_back({{"H", l.h_name}, {"V", l.v_name}});
        for (const auto& e : dm.entries)
            entries.push_back(e);
        m["rows"] = std::move(rows);
        m["cols"] = std::move(cols);
        m["entries"] = std::move(entries);
        doc["decomposition_matrix"] = std::move(m);
    }
    {
        auto cm = cartan_matrix(ctx, g);
        doc["cartan_matrix"] = cm;
    }
    {
        const SimpleCatalog& cat = ctx.catalog(g);
        std::size_t n = cat.simples.size();
        std::vector<std::vector<long long>> em(n, std::vector<long long>(n, 0));
        ctx.generators_of(g);  // warm the shared caches; the pair loop below only reads
        if (n > 0)
            em[0][0] = ext1(ctx, g, 0, 0);
        parallel_for(n * n, ctx.jobs(), [&](std::size_t idx) {
            if (idx == 0)
                return;
            em[idx / n][idx % n] = ext1(ctx, g, static_cast<int>(idx / n), static_cast<int>(idx % n));
        });
        doc["ext1_matrix"] = em;
    }
    {
        QHCertificate cert = qh_certificate(ctx, g);
        json checks = json::array();
        json witnesses = json::array();
        for (const auto& c : cert.checks) {
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
            if (!c.pass && !c.witness.empty())
                witnesses.push_back(c.name + ": " + c.witness);
        }
        doc["qh"] = {{"verdict", cert.verdict ? "pass" : "fail"}, {"checks", checks}};
        doc["witnesses"] = std::move(witnesses);
    }
    return doc.dump(2);
}

}  // namespace bisetkit
