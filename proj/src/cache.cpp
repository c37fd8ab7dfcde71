#include "bisetkit/cache.hpp"

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bisetkit {

namespace fs = std::filesystem;

DiskCache::DiskCache(std::string root, bool enabled) : root_(std::move(root)), enabled_(enabled) {
    if (enabled_ && root_.empty())
        root_ = default_root();
}

std::string DiskCache::default_root() {
    if (const char* env = std::getenv("BISETKIT_CACHE"))
        return env;
    if (const char* home = std::getenv("HOME"))
        return std::string(home) + "/.cache/bisetkit";
    return ".bisetkit-cache";
}

std::string DiskCache::path_for(const std::string& key) const {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream name;
    name << std::hex << h;
    return root_ + "/" + name.str() + ".json";
}

std::optional<std::string> DiskCache::get(const std::string& key) const {
    if (!enabled_)
        return std::nullopt;
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        nlohmann::json entry = nlohmann::json::parse(buf.str());
        if (entry.at("schema_version").get<int>() != kSchemaVersion)
            return std::nullopt;  // stale entries are ignored
        if (entry.at("key").get<std::string>() != key)
            return std::nullopt;  // digest collision
        return entry.at("payload").get<std::string>();
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void DiskCache::put(const std::string& key, const std::string& payload) const {
    if (!enabled_)
        return;
    std::error_code ec;
    fs::create_directories(root_, ec);
    std::string path = path_for(key);
    std::string tmp = path + ".tmp" + std::to_string(::getpid());
    nlohmann::json entry;
    entry["schema_version"] = kSchemaVersion;
    entry["key"] = key;
    entry["created_at"] = static_cast<long long>(
        std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch())
            .count());
    entry["payload"] = payload;
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            std::fprintf(stderr, "bisetkit: cannot write cache file %s\n", tmp.c_str());
            return;
        }
        out << entry.dump();
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        std::fprintf(stderr, "bisetkit: cache rename failed for %s: %s\n", path.c_str(), ec.message().c_str());
        fs::remove(tmp, ec);
    }
}

}  // namespace bisetkit
