#pragma once

#include <map>
#include <string>
#include <vector>

#include "bisetkit/goursat.hpp"
#include "bisetkit/iso.hpp"
#include "bisetkit/qmatrix.hpp"
#include "bisetkit/rational.hpp"

namespace bisetkit {

class Context;

/// A rational linear combination of basis labels of B(target, source);
/// B(G, H) plays Hom(H, G).
struct BisetElement {
    GroupPtr target;
    GroupPtr source;
    std::map<int, Rat> coeffs;  // label index in PairBasis(target, source) -> coefficient

    bool is_zero() const { return coeffs.empty(); }
    void add(int label, const Rat& c);
    QVec dense(std::size_t dim) const;
};

/// Complete multiplication table of kB(G, G).
struct AlgebraTable {
    GroupPtr group;
    std::vector<std::string> basis_keys;
    std::vector<std::map<int, Rat>> products;  // flattened [i * dim + j]
    int identity = -1;

    std::size_t dim() const { return basis_keys.size(); }
    const std::map<int, Rat>& product(std::size_t i, std::size_t j) const { return products[i * dim() + j]; }
    QVec mul(const QVec& a, const QVec& b) const;
    QMatrix left_mult_matrix(const QVec& a) const;
    QMatrix right_mult_matrix(const QVec& a) const;
};

BisetElement compose(Context& ctx, const BisetElement& a, const BisetElement& b);
BisetElement opposite(Context& ctx, const BisetElement& a);

BisetElement identity_biset(Context& ctx, const GroupPtr& g);
/// Ind_U^G in B(G, S) where S is the canonical standalone realization of U's
/// conjugacy class; U is given by its element indices in G.
BisetElement ind_biset(Context& ctx, const GroupPtr& g, const std::vector<int>& u_elems);
BisetElement res_biset(Context& ctx, const GroupPtr& g, const std::vector<int>& u_elems);
/// Inf_{G/N}^G in B(G, Q) for N normal in G.
BisetElement inf_biset(Context& ctx, const GroupPtr& g, const std::vector<int>& n_elems);
BisetElement def_biset(Context& ctx, const GroupPtr& g, const std::vector<int>& n_elems);
/// Iso(phi) in B(to, from) for an isomorphism phi: from -> to (element map).
BisetElement iso_biset(Context& ctx, const GroupPtr& to, const GroupPtr& from, const ElementMap& phi);

/// Product of two transitive bisets via the double-coset formula.
std::map<int, Rat> compose_transitive(Context& ctx, const GroupPtr& g, const GroupPtr& h, const GroupPtr& k,
                                      int label_gh, int label_hk);

/// Full structure-constant table (parallel, disk-cached by the context).
AlgebraTable build_algebra_table(Context& ctx, const GroupPtr& g);

/// Test oracle: composition by decomposing the actual finite biset X x_H Y
/// into G x K orbits. Lives here so acceptance checks can call it, but it is
/// never used by compose().
std::map<int, Rat> compose_orbit_oracle(Context& ctx, const GroupPtr& g, const GroupPtr& h, const GroupPtr& k,
                                        int label_gh, int label_hk);

}  // namespace bisetkit
