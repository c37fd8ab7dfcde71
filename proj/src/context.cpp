#include "bisetkit/context.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "bisetkit/errors.hpp"
#include "bisetkit/json_out.hpp"
#include "bisetkit/names.hpp"
#include "bisetkit/parallel.hpp"

namespace bisetkit {

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    if (n == 0)
        return;
    std::size_t workers = jobs > 0 ? static_cast<std::size_t>(jobs) : std::thread::hardware_concurrency();
    if (workers <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    workers = std::min(workers, n);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex err_mutex;
    for (std::size_t w = 0; w < workers; ++w)
        threads.emplace_back([&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= n || failed.load())
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error)
                        first_error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    for (auto& t : threads)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

Context::Context(Options opts) : opts_(opts), cache_(opts.cache_dir, opts.use_cache) {}

int Context::jobs() const {
    return opts_.jobs;
}

namespace {

GroupPtr parse_atom(const std::string& tok, std::size_t bound) {
    auto want = [&](std::size_t order, const std::string& name) {
        if (order > bound)
            throw BoundExceeded("group " + name + " of order " + std::to_string(order) + " exceeds bound " +
                                std::to_string(bound));
    };
    if (tok == "1")
        return trivial_group();
    if (tok == "V4")
        return klein_four_group();
    if (tok == "Q8")
        return quaternion_group();
    if (tok.size() >= 2 && (tok[0] == 'C' || tok[0] == 'S' || tok[0] == 'A' || tok[0] == 'D')) {
        int n = 0;
        for (std::size_t i = 1; i < tok.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(tok[i])))
                throw UsageError("bad group token: " + tok);
            n = n * 10 + (tok[i] - '0');
        }
        if (n <= 0)
            throw UsageError("bad group token: " + tok);
        switch (tok[0]) {
            case 'C':
                want(static_cast<std::size_t>(n), tok);
                return cyclic_group(n);
            case 'S': {
                std::size_t order = 1;
                for (int i = 2; i <= n; ++i)
                    order *= static_cast<std::size_t>(i);
                want(order, tok);
                return symmetric_group(n, bound);
            }
            case 'A': {
                std::size_t order = 1;
                for (int i = 2; i <= n; ++i)
                    order *= static_cast<std::size_t>(i);
                order = n >= 2 ? order / 2 : 1;
                want(order, tok);
                return alternating_group(n, bound);
            }
            case 'D':
                want(static_cast<std::size_t>(n), tok);
                return dihedral_group(n);
        }
    }
    throw UsageError("bad group token: " + tok + " (grammar: 1, C<n>, S<n>, A<n>, D<n>, V4, Q8, products with x, "
                     "or gens:(1 2)(3 4);(1 2 3))");
}

}  // namespace

GroupPtr Context::parse_group(const std::string& spec) {
    auto it = parsed_groups_.find(spec);
    if (it != parsed_groups_.end())
        return it->second;
    GroupPtr result;
    if (spec.rfind("gens:", 0) == 0) {
        std::string rest = spec.substr(5);
        std::vector<Perm> gens;
        std::size_t start = 0;
        while (start <= rest.size()) {
            std::size_t semi = rest.find(';', start);
            std::string part = rest.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
            if (!part.empty())
                gens.push_back(Perm::from_cycles(part));
            if (semi == std::string::npos)
                break;
            start = semi + 1;
        }
        std::size_t deg = 1;
        for (auto& g : gens)
            deg = std::max(deg, g.degree());
        result = PermGroup::closure(std::move(gens), opts_.bound, deg);
    } else {
        std::vector<std::string> tokens;
        std::size_t start = 0;
        while (start <= spec.size()) {
            std::size_t x = spec.find('x', start);
            tokens.push_back(spec.substr(start, x == std::string::npos ? std::string::npos : x - start));
            if (x == std::string::npos)
                break;
            start = x + 1;
        }
        if (tokens.empty())
            throw UsageError("empty group spec");
        result = parse_atom(tokens[0], opts_.bound);
        for (std::size_t i = 1; i < tokens.size(); ++i)
            result = direct_product(result, parse_atom(tokens[i], opts_.bound), opts_.bound);
    }
    parsed_groups_[spec] = result;
    return result;
}

const SubgroupData& Context::subgroups(const GroupPtr& g) {
    auto it = subgroup_data_.find(g.get());
    if (it == subgroup_data_.end())
        it = subgroup_data_.emplace(g.get(), std::make_unique<SubgroupData>(g)).first;
    return *it->second;
}

const PairBasis& Context::pair_basis(const GroupPtr& g, const GroupPtr& h) {
    auto key = std::make_pair(g.get(), h.get());
    auto it = pair_bases_.find(key);
    if (it == pair_bases_.end()) {
        const SubgroupData& gd = subgroups(g);
        const SubgroupData& hd = subgroups(h);
        it = pair_bases_.emplace(key, std::make_unique<PairBasis>(gd, hd)).first;
        if (g.get() == h.get())
            it->second->identity_label();  // warm lazily-computed state before any parallel use
    }
    return *it->second;
}

const std::string& Context::iso_key(const GroupPtr& g) {
    auto it = iso_keys_.find(g.get());
    if (it != iso_keys_.end())
        return it->second;
    std::string key;
    if (g->order() <= 24) {
        key = canonical_table_key(*g);
    } else {
        // order, element-order multiset, subgroup counts per order
        const SubgroupData& data = subgroups(g);
        std::map<std::size_t, std::size_t> counts;
        for (const auto& s : data.subgroups())
            ++counts[s.size()];
        std::ostringstream out;
        out << "o" << g->order() << ":eo" << std::hex << hash_int_vector(g->order_multiset()) << ":sc";
        for (const auto& [sz, n] : counts)
            out << sz << "." << n << ";";
        key = out.str();
    }
    return iso_keys_.emplace(g.get(), std::move(key)).first->second;
}

const OutGroup& Context::out(const GroupPtr& h) {
    auto it = outs_.find(h.get());
    if (it == outs_.end())
        it = outs_.emplace(h.get(), std::make_unique<OutGroup>(out_group(h))).first;
    return *it->second;
}

const std::vector<OutSimple>& Context::out_simples(const GroupPtr& h) {
    auto it = out_simples_.find(h.get());
    if (it == out_simples_.end())
        it = out_simples_.emplace(h.get(), qout_simples(out(h))).first;
    return it->second;
}

const std::vector<SigmaEntry>& Context::sigma(const GroupPtr& g) {
    auto it = sigmas_.find(g.get());
    if (it != sigmas_.end())
        return it->second;
    const SubgroupData& data = subgroups(g);
    std::vector<SigmaEntry> entries;
    std::vector<std::string> keys;
    for (std::size_t s = 0; s < data.sections().size(); ++s) {
        const SectionInfo& sec = data.sections()[s];
        const GroupPtr& q = sec.quotient;
        const std::string& key = iso_key(q);
        bool definitive = q->order() <= 24;  // the canonical table key decides isomorphism outright
        int found = -1;
        for (std::size_t e = 0; e < entries.size() && found < 0; ++e) {
            if (keys[e] != key)
                continue;
            if (definitive || iso_test(*entries[e].rep, *q))
                found = static_cast<int>(e);
        }
        if (found < 0) {
            SigmaEntry entry;
            entry.rep = q;
            entry.name = group_name(*q);
            entry.member_sections.push_back(static_cast<int>(s));
            entries.push_back(std::move(entry));
            keys.push_back(key);
        } else {
            entries[static_cast<std::size_t>(found)].member_sections.push_back(static_cast<int>(s));
        }
    }
    // disambiguate duplicate display names (possible for unnamed classes)
    std::map<std::string, int> counts;
    for (auto& e : entries)
        if (++counts[e.name] > 1)
            e.name += "#" + std::to_string(counts[e.name]);
    return sigmas_.emplace(g.get(), std::move(entries)).first->second;
}

int Context::sigma_index_of_group(const GroupPtr& g) {
    const auto& entries = sigma(g);
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].rep.get() == g.get())
            return static_cast<int>(i);
    throw AssertionFailure("ambient group missing from its own sigma list");
}

int Context::sigma_index_by_name(const GroupPtr& g, const std::string& name) {
    const auto& entries = sigma(g);
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].name == name)
            return static_cast<int>(i);
    std::string known;
    for (const auto& e : entries)
        known += (known.empty() ? "" : ", ") + e.name;
    throw UsageError("subquotient '" + name + "' not found; known subquotients: " + known);
}

std::shared_ptr<const AlgebraTable> Context::algebra_table(const GroupPtr& g) {
    auto it = tables_.find(g.get());
    if (it != tables_.end())
        return it->second;
    std::string key = "table:v" + std::to_string(kSchemaVersion) + ":" + g->realization_digest();
    if (auto cached = cache_.get(key)) {
        auto parsed = parse_algebra_table_json(*cached, g);
        if (parsed) {
            auto ptr = std::make_shared<const AlgebraTable>(std::move(*parsed));
            // validate against the live basis
            const PairBasis& basis = pair_basis(g, g);
            bool ok = ptr->dim() == basis.size();
            for (std::size_t i = 0; ok && i < basis.size(); ++i)
                ok = basis.labels()[i].key == ptr->basis_keys[i];
            if (ok) {
                tables_.emplace(g.get(), ptr);
                return ptr;
            }
            std::fprintf(stderr, "bisetkit: cached table does not match the live basis; recomputing\n");
        } else {
            std::fprintf(stderr, "bisetkit: corrupted cache entry for %s; recomputing\n", key.c_str());
        }
    }
    auto ptr = std::make_shared<const AlgebraTable>(build_algebra_table(*this, g));
    tables_.emplace(g.get(), ptr);
    cache_.put(key, algebra_table_json(*ptr));
    return ptr;
}

const HomBar& Context::hombar(const GroupPtr& h, const GroupPtr& k) {
    auto key = std::make_pair(h.get(), k.get());
    auto it = hombars_.find(key);
    if (it == hombars_.end())
        it = hombars_.emplace(key, std::make_unique<HomBar>(build_hombar(*this, h, k))).first;
    return *it->second;
}

const OutAlgebraIso& Context::hombar_out_iso(const GroupPtr& h) {
    auto it = out_isos_.find(h.get());
    if (it == out_isos_.end())
        it = out_isos_.emplace(h.get(), std::make_unique<OutAlgebraIso>(out_algebra_iso(*this, h))).first;
    return *it->second;
}

const DeltaEval& Context::delta(const GroupPtr& g, int sigma_idx, int v_idx) {
    auto key = std::make_tuple(g.get(), sigma_idx, v_idx);
    auto it = deltas_.find(key);
    if (it == deltas_.end())
        it = deltas_.emplace(key, std::make_unique<DeltaEval>(build_delta_eval(*this, g, sigma_idx, v_idx))).first;
    return *it->second;
}

const SimpleEval& Context::simple(const GroupPtr& g, int sigma_idx, int v_idx) {
    auto key = std::make_tuple(g.get(), sigma_idx, v_idx);
    auto it = simples_.find(key);
    if (it == simples_.end())
        it = simples_.emplace(key, std::make_unique<SimpleEval>(build_simple_eval(*this, g, sigma_idx, v_idx))).first;
    return *it->second;
}

const SimpleCatalog& Context::catalog(const GroupPtr& g) {
    auto it = catalogs_.find(g.get());
    if (it != catalogs_.end())
        return *it->second;
    return *catalogs_.emplace(g.get(), std::make_unique<SimpleCatalog>(build_simple_catalog(*this, g))).first->second;
}

const PIM& Context::pim(const GroupPtr& g, int catalog_index) {
    auto key = std::make_pair(g.get(), catalog_index);
    auto it = pims_.find(key);
    if (it == pims_.end())
        it = pims_.emplace(key, std::make_unique<PIM>(build_pim(*this, g, catalog_index))).first;
    return *it->second;
}

const AlgebraGenerators& Context::generators_of(const GroupPtr& g) {
    auto it = generators_.find(g.get());
    if (it == generators_.end())
        it = generators_.emplace(g.get(), std::make_unique<AlgebraGenerators>(algebra_generators(*algebra_table(g)))).first;
    return *it->second;
}

const Subspace& Context::radical(const GroupPtr& g) {
    auto it = radicals_.find(g.get());
    if (it == radicals_.end())
        it = radicals_.emplace(g.get(), std::make_unique<Subspace>(radical_of_algebra(*algebra_table(g)))).first;
    return *it->second;
}

std::map<int, Rat>* Context::find_product(const void* key_a, const void* key_b, int i, int j) {
    auto it = product_memo_.find(std::make_tuple(key_a, key_b, i, j));
    return it == product_memo_.end() ? nullptr : &it->second;
}

void Context::store_product(const void* key_a, const void* key_b, int i, int j, std::map<int, Rat> value) {
    product_memo_.emplace(std::make_tuple(key_a, key_b, i, j), std::move(value));
}

}  // namespace bisetkit
