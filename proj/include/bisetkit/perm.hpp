#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bisetkit {

/// A permutation of {0, ..., n-1}, stored as the sequence of point images.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::size_t degree);                 // identity
    explicit Perm(std::vector<int> images);            // validated bijection

    static Perm from_cycles(const std::string& cycles, int degree_hint = 0);

    std::size_t degree() const { return images_.size(); }
    int operator[](std::size_t i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    Perm operator*(const Perm& o) const;  // (p*q)(x) = p(q(x))
    Perm inverse() const;
    bool is_identity() const;
    int order() const;

    bool operator==(const Perm& o) const { return images_ == o.images_; }
    bool operator!=(const Perm& o) const { return images_ != o.images_; }
    bool operator<(const Perm& o) const { return images_ < o.images_; }

    std::string cycle_string() const;

private:
    std::vector<int> images_;
};

}  // namespace bisetkit
