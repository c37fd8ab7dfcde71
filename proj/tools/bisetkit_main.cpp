#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bisetkit/acceptance.hpp"
#include "bisetkit/context.hpp"
#include "bisetkit/errors.hpp"
#include "bisetkit/json_out.hpp"
#include "bisetkit/names.hpp"
#include "bisetkit/report.hpp"

using namespace bisetkit;
using nlohmann::json;

namespace {

const char* kUsage = R"(bisetkit — exact computations in double Burnside algebras

usage: bisetkit <command> [args] [flags]

commands:
  subgroups G             conjugacy classes of subgroups
  sections G              section classes (P, K) up to conjugacy
  basis G H               canonical basis labels of B(G, H)
  compose G H K i j       product of basis element i of B(G,H) with j of B(H,K)
  table G                 full structure constants of kB(G, G)
  hombar H K              essential quotient Hom-bar(H, K)
  delta G H V             evaluation of the standard functor at G
  simple G H V            evaluation of the simple functor at G
  vanishing G             (dim Delta, dim S) for every label over Sigma(G)
  nv G                    do all simple functors survive at G?
  decomp G                decomposition matrix [Delta : S]
  cartan G                Cartan matrix [P : S]
  pim G H V               projective indecomposable with Loewy layers
  ext1 G H1 V1 H2 V2      dim Ext^1 between two simple modules
  qh G                    quasi-heredity certificate and full report
  a5-report               the alternating-group-of-degree-5 analysis
  selftest                run the acceptance suite

groups: 1, C<n>, S<n>, A<n>, D<n> (order n), V4, Q8, products with x
        (for example C2xC2), or gens:(1 2)(3 4);(1 2 3)

flags: --json  --jobs N  --cache-dir PATH  --no-cache  --bound N (default 400)
)";

struct Cli {
    std::string command;
    std::vector<std::string> args;
    bool json_out = false;
    Options opts;
};

Cli parse_cli(int argc, char** argv) {
    Cli cli;
    std::vector<std::string> raw(argv + 1, argv + argc);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const std::string& a = raw[i];
        auto next = [&](const char* flag) -> std::string {
            if (i + 1 >= raw.size())
                throw UsageError(std::string(flag) + " needs a value");
            return raw[++i];
        };
        if (a == "--json")
            cli.json_out = true;
        else if (a == "--jobs")
            cli.opts.jobs = std::stoi(next("--jobs"));
        else if (a == "--cache-dir")
            cli.opts.cache_dir = next("--cache-dir");
        else if (a == "--no-cache")
            cli.opts.use_cache = false;
        else if (a == "--bound")
            cli.opts.bound = static_cast<std::size_t>(std::stoul(next("--bound")));
        else if (a == "--help" || a == "-h")
            cli.command = "help";
        else if (!a.empty() && a[0] == '-')
            throw UsageError("unknown flag " + a);
        else if (cli.command.empty())
            cli.command = a;
        else
            cli.args.push_back(a);
    }
    if (cli.command.empty())
        cli.command = "help";
    return cli;
}

void need_args(const Cli& cli, std::size_t n) {
    if (cli.args.size() != n)
        throw UsageError(cli.command + " expects " + std::to_string(n) + " arguments");
}

int find_v_index(Context& ctx, const GroupPtr& g, int sigma, const std::string& vname) {
    const auto& simples = ctx.out_simples(ctx.sigma(g)[static_cast<std::size_t>(sigma)].rep);
    for (std::size_t v = 0; v < simples.size(); ++v)
        if (simples[v].name == vname)
            return static_cast<int>(v);
    std::string known;
    for (const auto& s : simples)
        known += (known.empty() ? "" : ", ") + s.name;
    throw UsageError("Out-simple '" + vname + "' not found; choices: " + known);
}

json rat_json(const Rat& r) {
    return json{{"num", r.num().str()}, {"den", r.den().str()}};
}

int run_command(Cli& cli) {
    Context ctx(cli.opts);
    const std::string& cmd = cli.command;

    if (cmd == "help") {
        std::fputs(kUsage, stdout);
        return 0;
    }
    if (cmd == "subgroups") {
        need_args(cli, 1);
        GroupPtr g = ctx.parse_group(cli.args[0]);
        const SubgroupData& data = ctx.subgroups(g);
        if (cli.json_out) {
            json doc;
            doc["group"] = group_name(*g);
            doc["order"] = g->order();
            doc["subgroup_count"] = data.subgroup_count();
            json classes = json::array();
            for (std::size_t c = 0; c < data.class_count(); ++c) {
                GroupPtr rep_grp;
                std::vector<Perm> perms;
                for (int x : data.class_rep(static_cast<int>(c)))
                    perms.push_back(g->perm(x));
                rep_grp = group_from_elements(std::move(perms));
                classes.push_back({{"order", data.class_rep(static_cast<int>(c)).size()},
                                   {"name", group_name(*rep_grp)},
                                   {"class_size", data.class_members()[c].size()}});
            }
            doc["classes"] = std::move(classes);
            std::cout << doc.dump(2) << "\n";
        } else {
            std::printf("group %s of order %zu: %zu subgroups in %zu classes\n", group_name(*g).c_str(), g->order(),
                        data.subgroup_count(), data.class_count());
            for (std::size_t c = 0; c < data.class_count(); ++c) {
                std::vector<Perm> perms;
                for (int x : data.class_rep(static_cast<int>(c)))
                    perms.push_back(g->perm(x));
                std::printf("  class %zu: order %zu, %zu conjugates, type %s\n", c,
                            data.class_rep(static_cast<int>(c)).size(), data.class_members()[c].size(),
                            group_name(*group_from_elements(std::move(perms))).c_str());
            }
        }
        return 0;
    }
    if (cmd == "sections") {
        need_args(cli, 1);
        GroupPtr g = ctx.parse_group(cli.args[0]);
        const SubgroupData& data = ctx.subgroups(g);
        if (cli.json_out) {
            json doc;
            doc["group"] = group_name(*g);
            json secs = json::array();
            for (const auto& s : data.sections())
                secs.push_back({{"P_order", s.P.size()},
                                {"K_order", s.K.size()},
                                {"quotient", group_name(*s.quotient)},
                                {"quotient_order", s.quotient->order()}});
            doc["sections"] = std::move(secs);
            std::cout << doc.dump(2) << "\n";
        } else {
            std::printf("%zu section classes of %s\n", data.sections().size(), group_name(*g).c_str());
            for (std::size_t i = 0; i < data.sections().size(); ++i) {
                const auto& s = data.sections()[i];
                std::printf("  s%zu: |P| = %zu, |K| = %zu, P/K = %s\n", i, s.P.size(), s.K.size(),
                            group_name(*s.quotient).c_str());
            }
        }
        return 0;
    }
    if (cmd == "basis") {
        need_args(cli, 2);
        GroupPtr g = ctx.parse_group(cli.args[0]);
        GroupPtr h = ctx.parse_group(cli.args[1]);
        const PairBasis& basis = ctx.pair_basis(g, h);
        if (cli.json_out) {
            json doc;
            doc["G"] = group_name(*g);
            doc["H"] = group_name(*h);
            doc["dim"] = basis.size();
            json labels = json::array();
            for (const auto& lab : basis.labels())
                labels.push_back(lab.key);
            doc["labels"] = std::move(labels);
            std::cout << doc.dump(2) << "\n";
        } else {
            std::printf("dim B(%s, %s) = %zu\n", group_name(*g).c_str(), group_name(*h).c_str(), basis.size());
            const SubgroupData& gd = ctx.subgroups(g);
            const SubgroupData& hd = ctx.subgroups(h);
            for (const auto& lab : basis.labels()) {
                const SectionInfo& s1 = gd.sections()[static_cast<std::size_t>(lab.sec_g)];
                const SectionInfo& s2 = hd.sections()[static_cast<std::size_t>(lab.sec_h)];
                std::printf("  %-14s |L| = %-5lld sections |%zu/%zu| ~ |%zu/%zu| via %s\n", lab.key.c_str(),
                            lab.size, s1.P.size(), s1.K.size(), s2.P.size(), s2.K.size(),
                            group_name(*s1.quotient).c_str());
            }
        }
        return 0;
    }
    if (cmd == "compose") {
        need_args(cli, 5);
        GroupPtr g = ctx.parse_group(cli.args[0]);
        GroupPtr h = ctx.parse_group(cli.args[1]);
        GroupPtr k = ctx.parse_group(cli.args[2]);
        int i = std::stoi(cli.args[3]);
        int j = std::stoi(cli.args[4]);
        const PairBasis& bgh = ctx.pair_basis(g, h);
        const PairBasis& bhk = ctx.pair_basis(h, k);
        if (i < 0 || static_cast<std::size_t>(i) >= bgh.size() || j < 0 || static_cast<std::size_t>(j) >= bhk.size())
            throw UsageError("basis index out of range");
        auto prod = compose_transitive(ctx, g, h, k, i, j);
        const PairBasis& bgk = ctx.pair_basis(g, k);
        if (cli.json_out) {
            json terms = json::array();
            for (const auto& [lab, c] : prod)
                terms.push_back({{"label", bgk.labels()[static_cast<std::size_t>(lab)].key},
                                 {"coeff", rat_json(c)}});
            std::cout << json{{"terms", terms}}.dump(2) << "\n";
        } else {
            for (const auto& [lab, c] : prod)
                std::printf("  %s * %s\n", c.str().c_str(), bgk.labels()[static_cast<std::size_t>(lab)].key.c_str());
        }
        return 0;
    }
    if (cmd == "table") {
        need_args(cli, 1);
        GroupPtr g = ctx.parse_group(cli.args[0]);
        auto table = ctx.algebra_table(g);
        if (cli.json_out) {
            std::cout << algebra_table_json(*table) << "\n";
        } else {
            std::printf("kB(%s, %s): dimension %zu, identity label %s\n", group_name(*g).c_str(),
                        group_name(*g).c_str(), table->dim(), table->basis_keys[static_cast<std::size_t>(table->identity)].c_str());
            std::size_t nonzero = 0;
            for (const auto& p : table->products)
                nonzero += p.size();
            std::printf("  %zu structure constants over %zu products\n", nonzero, table->products.size());
        }
        return 0;
    }
    if (cmd == "hombar") {
        need_args(cli, 2);
        GroupPtr h = ctx.parse_group(cli.args[0]);
        GroupPtr k = ctx.parse_group(cli.args[1]);
        const HomBar& hb = ctx.hombar(h, k);
        const PairBasis& ambient = ctx.pair_basis(k, h);
        if (cli.json_out) {
            json doc;
            doc["H"] = group_name(*h);
            doc["K"] = group_name(*k);
            doc["dim_hom"] = ambient.size();
            doc["dim_ideal"] = hb.ideal.dim();
            doc["dim_hombar"] = hb.dim;
            json reps = json::array();
            for (auto rl : hb.rep_labels)
                reps.push_back(ambient.labels()[rl].key);
            doc["representatives"] = std::move(reps);
            std::cout << doc.dump(2) << "\n";
        } else {
            std::printf("Hom(%s, %s): dim %zu, ideal %zu, hombar %zu\n", group_name(*h).c_str(),
                        group_name(*k).c_str(), ambient.size(), hb.ideal.dim(), hb.dim);
        }
        return 0;
    }
    if (cmd == "delta" || cmd == "simple") {
        need_args(cli, 3);
        GroupPtr g = ctx.parse_group(cli.args[0]);
        int sigma = ctx.sigma_index_by_name(g, cli.args[1]);
        int v = find_v_index(ctx, g, sigma, cli.args[2]);
        if (cmd == "delta") {
            const DeltaEval& d = ctx.delta(g, sigma, v);
            if (cli.json_out) {
                std::cout << json{{"G", group_name(*g)},
                                  {"H", d.label.h_name},
                                  {"V", d.label.v_name},
                                  {"dim", d.module.dim},
                                  {"hombar_dim", d.hombar_dim},
                                  {"v_dim", d.v_dim}}
                                 .dump(2)
                          << "\n";
            } else {
                std::printf("dim Delta_(%s,%s)(%s) = %zu\n", d.label.h_name.c_str(), d.label.v_name.c_str(),
                            group_name(*g).c_str(), d.module.dim);
            }
        } else {
            const SimpleEval& s = ctx.simple(g, sigma, v);
            if (cli.json_out) {
                std::cout << json{{"G", group_name(*g)},
                                  {"H", s.label.h_name},
                                  {"V", s.label.v_name},
                                  {"dim", s.module.dim},
                                  {"end_dim", s.end_dim}}
                                 .dump(2)
                          << "\n";
            } else {
                std::printf("dim S_(%s,%s)(%s) = %zu\n", s.label.h_name.c_str(), s.label.v_name.c_str(),
                            group_name(*g).c_str(), s.module.dim);
            }
        }
        return 0;
    }
    if (cmd == "vanishing") {
        need_args(cli, 1);
        GroupPtr g = ctx.parse_group(cli.args[0]);
        auto rows = vanishing_table(ctx, g);
        if (cli.json_out) {
            json arr = json::array();
            for (const auto& r : rows)
                arr.push_back({{"H", r.label.h_name},
                               {"V", r.label.v_name},
                               {"dim_delta", r.dim_delta},
                               {"dim_simple", r.dim_simple}});
            std::cout << json{{"group", group_name(*g)}, {"rows", arr}}.dump(2) << "\n";
        } else {
            std::printf("%-18s %-10s %s\n", "label", "dim Delta", "dim S");
            for (const auto& r : rows)
                std::printf("%-18s %-10zu %zu\n", r.label.str().c_str(), r.dim_delta, r.dim_simple);
        }
        return 0;
    }
    if (cmd == "nv") {
        need_args(cli, 1);
        GroupPtr g = ctx.parse_group(cli.args[0]);
        std::vector<SimpleLabel> offenders;
        bool nv = nv_check(ctx, g, &offenders);
        // split: a vanishing is trivial when the standard module is already zero
        std::vector<SimpleLabel> nontrivial, trivial;
        for (const auto& o : offenders) {
            if (ctx.delta(g, o.sigma, o.v).module.dim > 0)
                nontrivial.push_back(o);
            else
                trivial.push_back(o);
        }
        if (cli.json_out) {
            json offs = json::array(), trivs = json::array();
            for (const auto& o : nontrivial)
                offs.push_back({{"H", o.h_name}, {"V", o.v_name}});
            for (const auto& o : trivial)
                trivs.push_back({{"H", o.h_name}, {"V", o.v_name}});
            std::cout << json{{"group", group_name(*g)},
                              {"nv", nv},
                              {"offenders", offs},
                              {"trivial_offenders", trivs}}
                             .dump(2)
                      << "\n";
        } else {
            if (nv) {
                std::printf("true\n");
            } else {
                std::string list;
                for (const auto& o : nontrivial)
                    list += (list.empty() ? "" : ", ") + o.str();
                std::printf("false; offenders: %s", list.c_str());
                if (!trivial.empty()) {
                    std::string tl;
                    for (const auto& o : trivial)
                        tl += (tl.empty() ? "" : ", ") + o.str();
                    std::printf("; trivially vanishing (dim Delta = 0): %s", tl.c_str());
                }
                std::printf("\n");
            }
        }
        return 0;
    }
    if (cmd == "decomp") {
        need_args(cli, 1);
        GroupPtr g = ctx.parse_group(cli.args[0]);
        DecompositionMatrix dm = decomposition_matrix(ctx, g);
        if (cli.json_out) {
            json rows = json::array(), cols = json::array();
            for (const auto& l : dm.rows)
                rows.push_back({{"H", l.h_name}, {"V", l.v_name}});
            for (const auto& l : dm.cols)
                cols.push_back({{"H", l.h_name}, {"V", l.v_name}});
            std::cout << json{{"group", group_name(*g)}, {"rows", rows}, {"cols", cols}, {"entries", dm.entries}}
                             .dump(2)
                      << "\n";
        } else {
            std::printf("%-16s", "");
            for (const auto& l : dm.cols)
                std::printf(" %-14s", l.str().c_str());
            std::printf("\n");
            for (std::size_t i = 0; i < dm.rows.size(); ++i) {
                std::printf("%-16s", dm.rows[i].str().c_str());
                for (auto v : dm.entries[i])
                    std::printf(" %-14lld", v);
                std::printf("\n");
            }
        }
        return 0;
    }
    if (cmd == "cartan") {
        need_args(cli, 1);
        GroupPtr g = ctx.parse_group(cli.args[0]);
        auto cm = cartan_matrix(ctx, g);
        const SimpleCatalog& cat = ctx.catalog(g);
        if (cli.json_out) {
            json cols = json::array();
            for (int cl : cat.catalog_labels)
                cols.push_back({{"H", cat.labels[static_cast<std::size_t>(cl)].h_name},
                                {"V", cat.labels[static_cast<std::size_t>(cl)].v_name}});
            std::cout << json{{"group", group_name(*g)}, {"labels", cols}, {"entries", cm}}.dump(2) << "\n";
        } else {
            for (std::size_t i = 0; i < cm.size(); ++i) {
                std::printf("%-16s", cat.labels[static_cast<std::size_t>(cat.catalog_labels[i])].str().c_str());
                for (auto v : cm[i])
                    std::printf(" %3lld", v);
                std::printf("\n");
            }
        }
        return 0;
    }
    if (cmd == "pim") {
        need_args(cli, 3);
        GroupPtr g = ctx.parse_group(cli.args[0]);
        int sigma = ctx.sigma_index_by_name(g, cli.args[1]);
        int v = find_v_index(ctx, g, sigma, cli.args[2]);
        const SimpleCatalog& cat = ctx.catalog(g);
        int label_idx = -1;
        for (std::size_t i = 0; i < cat.labels.size(); ++i)
            if (cat.labels[i].sigma == sigma && cat.labels[i].v == v)
                label_idx = static_cast<int>(i);
        if (label_idx < 0 || cat.catalog_index[static_cast<std::size_t>(label_idx)] < 0)
            throw UsageError("the simple vanishes at this group; no projective cover exists for it");
        const PIM& p = ctx.pim(g, cat.catalog_index[static_cast<std::size_t>(label_idx)]);
        if (cli.json_out) {
            json layers = json::array();
            for (std::size_t l = 0; l < p.loewy_dims.size(); ++l) {
                json factors = json::array();
                for (std::size_t j = 0; j < p.loewy_factors[l].size(); ++j)
                    if (p.loewy_factors[l][j] != 0)
                        factors.push_back(
                            {{"H", cat.labels[static_cast<std::size_t>(cat.catalog_labels[j])].h_name},
                             {"V", cat.labels[static_cast<std::size_t>(cat.catalog_labels[j])].v_name},
                             {"mult", p.loewy_factors[l][j]}});
                layers.push_back({{"dim", p.loewy_dims[l]}, {"factors", factors}});
            }
            std::cout << json{{"group", group_name(*g)},
                              {"H", p.label.h_name},
                              {"V", p.label.v_name},
                              {"dim", p.module.dim},
                              {"loewy", layers}}
                             .dump(2)
                      << "\n";
        } else {
            std::printf("P_(%s,%s) over kB(%s,%s): dim %zu, loewy layers", p.label.h_name.c_str(),
                        p.label.v_name.c_str(), group_name(*g).c_str(), group_name(*g).c_str(), p.module.dim);
            for (auto d : p.loewy_dims)
                std::printf(" %zu", d);
            std::printf("\n");
        }
        return 0;
    }
    if (cmd == "ext1") {
        need_args(cli, 5);
        GroupPtr g = ctx.parse_group(cli.args[0]);
        const SimpleCatalog& cat = ctx.catalog(g);
        auto locate = [&](const std::string& h, const std::string& v) {
            for (std::size_t i = 0; i < cat.labels.size(); ++i)
                if (cat.labels[i].h_name == h && cat.labels[i].v_name == v) {
                    int ci = cat.catalog_index[i];
                    if (ci < 0)
                        throw UsageError("simple (" + h + ", " + v + ") vanishes at this group");
                    return ci;
                }
            throw UsageError("label (" + h + ", " + v + ") not found");
        };
        int s = locate(cli.args[1], cli.args[2]);
        int t = locate(cli.args[3], cli.args[4]);
        long long e = ext1(ctx, g, s, t);
        if (cli.json_out)
            std::cout << json{{"group", group_name(*g)}, {"ext1", e}}.dump(2) << "\n";
        else
            std::printf("%lld\n", e);
        return 0;
    }
    if (cmd == "qh") {
        need_args(cli, 1);
        GroupPtr g = ctx.parse_group(cli.args[0]);
        if (cli.json_out) {
            std::cout << full_report_json(ctx, g) << "\n";
        } else {
            QHCertificate cert = qh_certificate(ctx, g);
            std::printf("qh(%s): %s\n", group_name(*g).c_str(), cert.verdict ? "pass" : "fail");
            for (const auto& c : cert.checks)
                std::printf("  %-14s %s%s%s\n", c.name.c_str(), c.pass ? "pass" : "FAIL",
                            c.witness.empty() ? "" : "  ", c.witness.c_str());
        }
        return 0;
    }
    if (cmd == "a5-report") {
        need_args(cli, 0);
        A5Report r = a5_report(ctx);
        if (cli.json_out) {
            std::cout << a5_report_json(r) << "\n";
        } else {
            for (const auto& f : r.facts)
                std::printf("  [%s] %s\n      %s\n", f.pass ? "ok" : "FAIL", f.name.c_str(), f.detail.c_str());
            std::printf(r.ok ? "conclusion: not quasi-hereditary, self-extension found\n"
                             : "conclusion: MISMATCH against the expected analysis\n");
        }
        return r.ok ? 0 : 1;
    }
    if (cmd == "selftest") {
        need_args(cli, 0);
        auto results = run_acceptance(ctx);
        bool ok = true;
        for (const auto& r : results) {
            std::printf("criterion %2d [%s] %s (%.1fs)%s%s\n", r.number, r.pass ? "pass" : "FAIL", r.name.c_str(),
                        r.seconds, r.detail.empty() ? "" : " — ", r.detail.c_str());
            ok = ok && r.pass;
        }
        return ok ? 0 : 1;
    }
    throw UsageError("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        Cli cli = parse_cli(argc, argv);
        return run_command(cli);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n\n%s", e.what(), kUsage);
        return 2;
    } catch (const BoundExceeded& e) {
        std::fprintf(stderr, "bound exceeded: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
