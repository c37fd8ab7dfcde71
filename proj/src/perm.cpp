#include "bisetkit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bisetkit/errors.hpp"

namespace bisetkit {

Perm::Perm(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
        if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)])
            throw InvalidData("permutation images are not a bijection");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Perm Perm::from_cycles(const std::string& cycles, int degree_hint) {
    // Parse "(1 2)(3 4)" with 1-based points, either space or comma separated.
    std::vector<std::vector<int>> parsed;
    std::size_t i = 0;
    int max_point = degree_hint;
    while (i < cycles.size()) {
        if (std::isspace(static_cast<unsigned char>(cycles[i]))) {
            ++i;
            continue;
        }
        if (cycles[i] != '(')
            throw UsageError("bad cycle notation: expected '(' in \"" + cycles + "\"");
        ++i;
        std::vector<int> cyc;
        std::string tok;
        for (; i < cycles.size() && cycles[i] != ')'; ++i) {
            char c = cycles[i];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                tok += c;
            } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
                if (!tok.empty()) {
                    cyc.push_back(std::stoi(tok));
                    tok.clear();
                }
            } else {
                throw UsageError("bad character in cycle notation: " + std::string(1, c));
            }
        }
        if (i == cycles.size())
            throw UsageError("unterminated cycle in \"" + cycles + "\"");
        ++i;  // skip ')'
        if (!tok.empty())
            cyc.push_back(std::stoi(tok));
        for (int p : cyc) {
            if (p < 1)
                throw UsageError("cycle points are 1-based");
            max_point = std::max(max_point, p);
        }
        if (!cyc.empty())
            parsed.push_back(std::move(cyc));
    }
    std::vector<int> images(static_cast<std::size_t>(std::max(max_point, 1)));
    std::iota(images.begin(), images.end(), 0);
    for (const auto& cyc : parsed)
        for (std::size_t k = 0; k < cyc.size(); ++k)
            images[static_cast<std::size_t>(cyc[k] - 1)] = cyc[(k + 1) % cyc.size()] - 1;
    return Perm(std::move(images));
}

Perm Perm::operator*(const Perm& o) const {
    if (degree() != o.degree())
        throw DimensionMismatch("permutation degree mismatch");
    std::vector<int> r(images_.size());
    for (std::size_t x = 0; x < r.size(); ++x)
        r[x] = images_[static_cast<std::size_t>(o.images_[x])];
    Perm p;
    p.images_ = std::move(r);
    return p;
}

Perm Perm::inverse() const {
    std::vector<int> r(images_.size());
    for (std::size_t x = 0; x < r.size(); ++x)
        r[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
    Perm p;
    p.images_ = std::move(r);
    return p;
}

bool Perm::is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != static_cast<int>(x))
            return false;
    return true;
}

int Perm::order() const {
    int n = 1;
    Perm p = *this;
    while (!p.is_identity()) {
        p = *this * p;
        ++n;
    }
    return n;
}

std::string Perm::cycle_string() const {
    std::vector<bool> seen(images_.size(), false);
    std::ostringstream out;
    bool any = false;
    for (std::size_t s = 0; s < images_.size(); ++s) {
        if (seen[s] || images_[s] == static_cast<int>(s))
            continue;
        out << '(';
        std::size_t x = s;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first)
                out << ' ';
            out << (x + 1);
            first = false;
            x = static_cast<std::size_t>(images_[x]);
        }
        out << ')';
        any = true;
    }
    return any ? out.str() : "()";
}

}  // namespace bisetkit
