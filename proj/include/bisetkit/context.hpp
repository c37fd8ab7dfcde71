#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bisetkit/algebra_analysis.hpp"
#include "bisetkit/burnside.hpp"
#include "bisetkit/cache.hpp"
#include "bisetkit/essential.hpp"
#include "bisetkit/functor_eval.hpp"
#include "bisetkit/goursat.hpp"
#include "bisetkit/iso.hpp"
#include "bisetkit/out_simples.hpp"
#include "bisetkit/subgroup_data.hpp"

namespace bisetkit {

struct Options {
    std::size_t bound = 400;   // group enumeration bound
    int jobs = 0;              // 0 = hardware concurrency
    std::string cache_dir;     // empty = BISETKIT_CACHE or the default root
    bool use_cache = true;
};

/// One subquotient isomorphism class of G.
struct SigmaEntry {
    GroupPtr rep;                       // canonical standalone realization
    std::string name;
    std::vector<int> member_sections;   // sections of G in this class
};

/// Session-wide registry: memoizes groups, lattices, bases, tables and
/// evaluations. Not thread-safe for mutation; the parallel regions inside the
/// builders only read already-built data.
class Context {
public:
    explicit Context(Options opts = {});

    const Options& options() const { return opts_; }
    const DiskCache& cache() const { return cache_; }
    int jobs() const;

    /// Group grammar: 1, C<n>, S<n>, A<n>, D<n>, V4, Q8, products with x,
    /// or gens:(1 2)(3 4);(1 2 3).
    GroupPtr parse_group(const std::string& spec);

    const SubgroupData& subgroups(const GroupPtr& g);
    const PairBasis& pair_basis(const GroupPtr& g, const GroupPtr& h);
    /// Isomorphism-class key: canonical multiplication table for order <= 24;
    /// (order, element-order multiset, subgroup-count vector) beyond, with an
    /// explicit iso_test on collisions (see sigma()).
    const std::string& iso_key(const GroupPtr& g);
    const OutGroup& out(const GroupPtr& h);
    const std::vector<OutSimple>& out_simples(const GroupPtr& h);
    const std::vector<SigmaEntry>& sigma(const GroupPtr& g);
    int sigma_index_of_group(const GroupPtr& g);  // index of G's own class in sigma(G)
    int sigma_index_by_name(const GroupPtr& g, const std::string& name);

    std::shared_ptr<const AlgebraTable> algebra_table(const GroupPtr& g);
    const HomBar& hombar(const GroupPtr& h, const GroupPtr& k);
    const OutAlgebraIso& hombar_out_iso(const GroupPtr& h);

    const DeltaEval& delta(const GroupPtr& g, int sigma, int v);
    const SimpleEval& simple(const GroupPtr& g, int sigma, int v);
    const SimpleCatalog& catalog(const GroupPtr& g);
    const PIM& pim(const GroupPtr& g, int catalog_index);
    const AlgebraGenerators& generators_of(const GroupPtr& g);
    const Subspace& radical(const GroupPtr& g);

    /// memo for transitive compositions outside (G,G,G) tables
    std::map<int, Rat>* find_product(const void* key_a, const void* key_b, int i, int j);
    void store_product(const void* key_a, const void* key_b, int i, int j, std::map<int, Rat> value);

private:
    Options opts_;
    DiskCache cache_;

    std::map<std::string, GroupPtr> parsed_groups_;
    std::map<const PermGroup*, std::string> iso_keys_;
    std::map<const PermGroup*, std::unique_ptr<SubgroupData>> subgroup_data_;
    std::map<std::pair<const PermGroup*, const PermGroup*>, std::unique_ptr<PairBasis>> pair_bases_;
    std::map<const PermGroup*, std::unique_ptr<OutGroup>> outs_;
    std::map<const PermGroup*, std::vector<OutSimple>> out_simples_;
    std::map<const PermGroup*, std::vector<SigmaEntry>> sigmas_;
    std::map<const PermGroup*, std::shared_ptr<const AlgebraTable>> tables_;
    std::map<std::pair<const PermGroup*, const PermGroup*>, std::unique_ptr<HomBar>> hombars_;
    std::map<const PermGroup*, std::unique_ptr<OutAlgebraIso>> out_isos_;
    std::map<std::tuple<const PermGroup*, int, int>, std::unique_ptr<DeltaEval>> deltas_;
    std::map<std::tuple<const PermGroup*, int, int>, std::unique_ptr<SimpleEval>> simples_;
    std::map<const PermGroup*, std::unique_ptr<SimpleCatalog>> catalogs_;
    std::map<std::pair<const PermGroup*, int>, std::unique_ptr<PIM>> pims_;
    std::map<const PermGroup*, std::unique_ptr<AlgebraGenerators>> generators_;
    std::map<const PermGroup*, std::unique_ptr<Subspace>> radicals_;
    std::map<std::tuple<const void*, const void*, int, int>, std::map<int, Rat>> product_memo_;
};

}  // namespace bisetkit
