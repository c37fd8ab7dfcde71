#pragma once

#include <string>
#include <vector>

#include "bisetkit/functor_eval.hpp"

namespace bisetkit {

class Context;

/// Projective indecomposable module A*e with its radical filtration.
struct PIM {
    SimpleLabel label;
    QVec idempotent;                     // exact rationals, e^2 = e
    ModuleRep module;                    // left action on A*e
    std::vector<std::size_t> loewy_dims; // dims of Rad^i P / Rad^{i+1} P
    std::vector<std::vector<long long>> loewy_factors;  // per layer: multiplicity of each catalog simple
};

/// The catalog of nonzero simple kB(G,G)-modules with bookkeeping data.
struct SimpleCatalog {
    std::vector<SimpleLabel> labels;        // all labels over Sigma(G)
    std::vector<std::size_t> delta_dims;    // per label
    std::vector<int> catalog_index;         // label -> index among nonzero simples (-1 if vanishing)
    std::vector<int> catalog_labels;        // nonzero-simple index -> label index
    std::vector<ModuleRep> simples;         // nonzero simple modules
    std::vector<TraceCharacter> characters;
    std::vector<std::size_t> end_dims;
};

SimpleCatalog build_simple_catalog(Context& ctx, const GroupPtr& g);

PIM build_pim(Context& ctx, const GroupPtr& g, int catalog_index);

struct DecompositionMatrix {
    std::vector<SimpleLabel> rows;          // all labels (Delta index)
    std::vector<SimpleLabel> cols;          // catalog labels (nonzero simples)
    std::vector<std::vector<long long>> entries;  // [Delta : S]
};

DecompositionMatrix decomposition_matrix(Context& ctx, const GroupPtr& g);
/// Cartan matrix over the catalog: C[i][j] = [P_i : S_j].
std::vector<std::vector<long long>> cartan_matrix(Context& ctx, const GroupPtr& g);

/// dim Ext^1(S, T) via the cocycle/coboundary computation.
long long ext1(Context& ctx, const GroupPtr& g, int cat_s, int cat_t);

struct QHCheck {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct QHCertificate {
    bool verdict = false;
    std::vector<QHCheck> checks;
};

QHCertificate qh_certificate(Context& ctx, const GroupPtr& g);

Int determinant(const QMatrix& m);

}  // namespace bisetkit
