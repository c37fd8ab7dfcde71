#pragma once

#include <vector>

#include "bisetkit/burnside.hpp"
#include "bisetkit/qmatrix.hpp"

namespace bisetkit {

class Context;

/// essential quotient Hom-bar(H, K) = Hom(H, K) / I(H, K), where Hom(H, K) is
/// realized as B(K, H) and I(H, K) is the span of morphisms factoring through
/// proper subquotients of H.
struct HomBar {
    GroupPtr source_h;
    GroupPtr target_k;
    Subspace ideal{0};                     // I(H, K) in the basis coordinates of B(K, H)
    std::vector<std::size_t> rep_labels;   // non-pivot coordinates; coset representatives
    std::size_t dim = 0;

    QVec project(const QVec& v) const;     // quotient coordinates
    QVec lift(const QVec& q, std::size_t ambient) const;
};

/// The ideal as a subspace of B(K, H): span of compose(f, g) over all basis
/// f in B(K, X), g in B(X, H), X a proper subquotient of H.
Subspace ideal_subspace(Context& ctx, const GroupPtr& h, const GroupPtr& k);

HomBar build_hombar(Context& ctx, const GroupPtr& h, const GroupPtr& k);

/// Matrix of the right composition x -> proj(compose(lift(x), Iso(phi))) on
/// hombar(H, K) quotient coordinates; phi is an automorphism of H.
QMatrix right_iso_action(Context& ctx, const GroupPtr& h, const GroupPtr& k, const ElementMap& phi);

/// out_action per the module contract: the matrix of phi acting via Iso(phi^{-1}),
/// so that the matrices form a representation of Out(H).
QMatrix out_action_matrix(Context& ctx, const GroupPtr& h, const GroupPtr& k, int out_index);

/// Coordinates of hombar(H,H) elements over the basis [Iso(phi_t)], one class
/// per Out(H) element; the algebra identification hombar(H,H) = kOut(H).
struct OutAlgebraIso {
    QMatrix classes;   // column t = quotient coordinates of [Iso(phi_t)]
    QMatrix to_kout;   // inverse: quotient coordinates -> kOut coefficients
};

OutAlgebraIso out_algebra_iso(Context& ctx, const GroupPtr& h);

}  // namespace bisetkit
