#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bisetkit/module_rep.hpp"
#include "bisetkit/qmatrix.hpp"

namespace bisetkit {

class Context;

/// (H, V): a subquotient class of G and a rational Out(H)-irreducible.
struct SimpleLabel {
    int sigma = -1;  // index into the ambient group's sigma list
    int v = -1;      // index into qout_simples(Out(H))
    std::string h_name;
    std::string v_name;

    bool operator==(const SimpleLabel& o) const { return sigma == o.sigma && v == o.v; }
    std::string str() const { return "(" + h_name + ", " + v_name + ")"; }
};

/// Evaluation of the standard functor at G, as a kB(G,G)-module.
struct DeltaEval {
    SimpleLabel label;
    GroupPtr ambient;
    ModuleRep module;
    std::size_t hombar_dim = 0;
    std::size_t v_dim = 0;
    Subspace relations{0};                 // inside Q^(hombar_dim * v_dim)
    std::vector<std::size_t> rep_coords;   // coordinates of the quotient
    std::vector<QVec> generator_images;    // image of each a (x) v in Delta coordinates
};

/// Evaluation of the simple functor at G (possibly zero).
struct SimpleEval {
    SimpleLabel label;
    GroupPtr ambient;
    ModuleRep module;
    Subspace kernel{0};       // R inside Delta coordinates
    std::size_t end_dim = 0;  // dim End over Q (0 when the module is zero)
};

DeltaEval build_delta_eval(Context& ctx, const GroupPtr& g, int sigma, int v);
SimpleEval build_simple_eval(Context& ctx, const GroupPtr& g, int sigma, int v);

struct VanishingRow {
    SimpleLabel label;
    std::size_t dim_delta = 0;
    std::size_t dim_simple = 0;
};

std::vector<VanishingRow> vanishing_table(Context& ctx, const GroupPtr& g);
/// true iff no simple vanishes; offenders collects the vanishing labels.
bool nv_check(Context& ctx, const GroupPtr& g, std::vector<SimpleLabel>* offenders = nullptr);

enum class LambdaOrder { Less, Equal, Incomparable };
/// (H,V) < (K,W) iff K is a strict subquotient of H.
LambdaOrder lambda_order(Context& ctx, const GroupPtr& g, const SimpleLabel& a, const SimpleLabel& b);

enum class SubqRel { ProperSubquotient, Equal, Other };
SubqRel subquotient_order(Context& ctx, const GroupPtr& h, const GroupPtr& k);

struct RadicalCompare {
    SimpleLabel label;
    std::size_t dim_delta = 0;
    std::size_t dim_rad_of_eval = 0;  // Rad(Delta(G))
    std::size_t dim_eval_of_rad = 0;  // R = [Rad Delta](G)
    bool inclusion = false;           // Rad(Delta(G)) <= R (always expected)
    bool equal = false;
};

RadicalCompare radical_compare(Context& ctx, const GroupPtr& g, int sigma, int v);

/// Certified indecomposability: simple top, or a local endomorphism ring.
bool is_indecomposable(Context& ctx, const GroupPtr& g, const ModuleRep& m);

/// All labels over Sigma(G) in canonical (lambda-order compatible) order.
std::vector<SimpleLabel> all_labels(Context& ctx, const GroupPtr& g);

}  // namespace bisetkit
