#include "bisetkit/json_out.hpp"

#include <json.hpp>

#include "bisetkit/cache.hpp"
#include "bisetkit/names.hpp"

namespace bisetkit {

using nlohmann::json;

std::string algebra_table_json(const AlgebraTable& t) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["group"] = group_name(*t.group);
    doc["group_digest"] = t.group->realization_digest();
    doc["identity"] = t.identity;
    doc["basis"] = t.basis_keys;
    json products = json::array();
    std::size_t d = t.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const auto& prod = t.product(i, j);
            if (prod.empty())
                continue;
            json terms = json::array();
            for (const auto& [k, c] : prod)
                terms.push_back({k, c.num().str(), c.den().str()});
            products.push_back({i, j, terms});
        }
    doc["products"] = std::move(products);
    return doc.dump();
}

std::optional<AlgebraTable> parse_algebra_table_json(const std::string& text, const GroupPtr& g) {
    try {
        json doc = json::parse(text);
        if (doc.at("schema_version").get<int>() != kSchemaVersion)
            return std::nullopt;
        if (doc.at("group_digest").get<std::string>() != g->realization_digest())
            return std::nullopt;
        AlgebraTable t;
        t.group = g;
        t.identity = doc.at("identity").get<int>();
        t.basis_keys = doc.at("basis").get<std::vector<std::string>>();
        std::size_t d = t.basis_keys.size();
        t.products.assign(d * d, {});
        for (const auto& entry : doc.at("products")) {
            std::size_t i = entry.at(0).get<std::size_t>();
            std::size_t j = entry.at(1).get<std::size_t>();
            if (i >= d || j >= d)
                return std::nullopt;
            std::map<int, Rat> prod;
            for (const auto& term : entry.at(2)) {
                int k = term.at(0).get<int>();
                Int num(term.at(1).get<std::string>());
                Int den(term.at(2).get<std::string>());
                prod[k] = Rat(num, den);
            }
            t.products[i * d + j] = std::move(prod);
        }
        return t;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace bisetkit
