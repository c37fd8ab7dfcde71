#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "bisetkit/context.hpp"
#include "bisetkit/errors.hpp"
#include "bisetkit/json_out.hpp"

using namespace bisetkit;

TEST_CASE("disk cache round trip is atomic and schema-checked") {
    namespace fs = std::filesystem;
    fs::path root = fs::temp_directory_path() / "bisetkit_test_cache";
    fs::remove_all(root);
    DiskCache cache(root.string(), true);
    CHECK(!cache.get("key").has_value());
    cache.put("key", "{\"x\": 1}");
    auto hit = cache.get("key");
    REQUIRE(hit.has_value());
    CHECK(*hit == "{\"x\": 1}");
    fs::remove_all(root);
}

TEST_CASE("table caching: reproducible payload, corrupted entries recomputed") {
    namespace fs = std::filesystem;
    fs::path root = fs::temp_directory_path() / "bisetkit_test_cache2";
    fs::remove_all(root);
    std::string first, second;
    {
        Options o;
        o.cache_dir = root.string();
        Context ctx(o);
        first = algebra_table_json(*ctx.algebra_table(ctx.parse_group("S3")));
    }
    {
        Options o;
        o.cache_dir = root.string();
        Context ctx(o);
        second = algebra_table_json(*ctx.algebra_table(ctx.parse_group("S3")));
    }
    CHECK(first == second);  // byte-identical across runs, through the cache
    // corrupt every cache file; the table must be recomputed and identical
    for (const auto& entry : fs::directory_iterator(root)) {
        std::ofstream out(entry.path(), std::ios::trunc);
        out << "{ not json";
    }
    {
        Options o;
        o.cache_dir = root.string();
        Context ctx(o);
        CHECK(algebra_table_json(*ctx.algebra_table(ctx.parse_group("S3"))) == first);
    }
    // --no-cache bypasses reads and writes
    fs::remove_all(root);
    {
        Options o;
        o.cache_dir = root.string();
        o.use_cache = false;
        Context ctx(o);
        CHECK(algebra_table_json(*ctx.algebra_table(ctx.parse_group("S3"))) == first);
        CHECK(!fs::exists(root));
    }
}

TEST_CASE("table json parses back to the same products") {
    Options o;
    o.use_cache = false;
    Context ctx(o);
    auto g = ctx.parse_group("V4");
    auto table = ctx.algebra_table(g);
    auto parsed = parse_algebra_table_json(algebra_table_json(*table), g);
    REQUIRE(parsed.has_value());
    CHECK(parsed->dim() == table->dim());
    CHECK(parsed->identity == table->identity);
    CHECK(parsed->products == table->products);
    CHECK(!parse_algebra_table_json("{ bad", g).has_value());
}

TEST_CASE("table payload is byte-identical across jobs settings") {
    std::string payloads[2];
    int jobs[2] = {1, 3};
    for (int t = 0; t < 2; ++t) {
        Options o;
        o.use_cache = false;
        o.jobs = jobs[t];
        Context ctx(o);
        payloads[t] = algebra_table_json(*ctx.algebra_table(ctx.parse_group("A4")));
    }
    CHECK(payloads[0] == payloads[1]);
}

TEST_CASE("group grammar: products, gens, and usage errors") {
    Options o;
    o.use_cache = false;
    Context ctx(o);
    CHECK(ctx.parse_group("C2xC2")->order() == 4);
    CHECK(ctx.parse_group("C2xC2xC3")->order() == 12);
    CHECK(ctx.parse_group("gens:(1 2)(3 4);(1 2 3)")->order() == 12);
    CHECK(ctx.parse_group("D8")->order() == 8);
    CHECK_THROWS_AS(ctx.parse_group("Z5"), UsageError);
    CHECK_THROWS_AS(ctx.parse_group("C0"), UsageError);
    Options tight;
    tight.bound = 10;
    Context small(tight);
    CHECK_THROWS_AS(small.parse_group("A5"), BoundExceeded);
}
