#pragma once

#include <string>
#include <vector>

#include "bisetkit/iso.hpp"
#include "bisetkit/qmatrix.hpp"

namespace bisetkit {

/// An irreducible rational representation of Out(H).
struct OutSimple {
    std::string name;                // triv, sgn, 2dim, ... (canonical, unique per Out)
    std::size_t dim = 0;
    std::size_t end_dim = 0;         // dim of the endomorphism division algebra
    std::vector<QMatrix> action;     // one matrix per out element, aligned with OutGroup::out_elements
    std::vector<Rat> character;      // traces, same alignment
};

/// Complete list of rational irreducibles of Out(H), found by splitting the
/// regular representation. Deterministic order and names.
std::vector<OutSimple> qout_simples(const OutGroup& out);

/// Out(H) realized as a permutation group via its regular action.
GroupPtr out_as_perm_group(const OutGroup& out);

}  // namespace bisetkit
