#pragma once

#include <optional>
#include <string>

namespace bisetkit {

inline constexpr int kSchemaVersion = 1;

/// One file per entry under the cache root; writes are atomic (temp + rename).
class DiskCache {
public:
    DiskCache(std::string root, bool enabled);

    bool enabled() const { return enabled_; }
    const std::string& root() const { return root_; }

    /// key is hashed into the file name; payload is the JSON document text.
    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& payload) const;

    static std::string default_root();

private:
    std::string path_for(const std::string& key) const;

    std::string root_;
    bool enabled_;
};

}  // namespace bisetkit
