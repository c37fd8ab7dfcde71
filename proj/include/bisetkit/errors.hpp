#pragma once

#include <stdexcept>
#include <string>

namespace bisetkit {

struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NotASubgroup : std::runtime_error {
    explicit NotASubgroup(const std::string& what) : std::runtime_error(what) {}
};

struct SourceTargetMismatch : std::runtime_error {
    explicit SourceTargetMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidData : std::runtime_error {
    explicit InvalidData(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct SplitFailure : std::runtime_error {
    explicit SplitFailure(const std::string& what) : std::runtime_error(what) {}
};

struct InconsistentSystem : std::runtime_error {
    explicit InconsistentSystem(const std::string& what) : std::runtime_error(what) {}
};

struct CatalogIncomplete : std::runtime_error {
    explicit CatalogIncomplete(const std::string& what) : std::runtime_error(what) {}
};

struct AssertionFailure : std::runtime_error {
    explicit AssertionFailure(const std::string& what) : std::runtime_error(what) {}
};

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bisetkit
