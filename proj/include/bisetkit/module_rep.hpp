#pragma once

#include <memory>
#include <vector>

#include "bisetkit/burnside.hpp"
#include "bisetkit/qmatrix.hpp"

namespace bisetkit {

/// A finite-dimensional kB(G,G)-module: one action matrix per basis element.
struct ModuleRep {
    std::shared_ptr<const AlgebraTable> algebra;
    std::size_t dim = 0;
    std::vector<QMatrix> action;

    QMatrix act(const QVec& algebra_element) const;  // action of a general element
};

using TraceCharacter = std::vector<Rat>;

TraceCharacter trace_character(const ModuleRep& m);

/// Solve chi = sum m_i * chi_i exactly. Throws InconsistentSystem if the
/// catalog cannot express chi; asserts the characters are independent.
std::vector<long long> character_multiplicities(const TraceCharacter& chi,
                                                const std::vector<TraceCharacter>& simple_chis);

/// Radical of the algebra: radical of the trace form of the regular
/// representation (characteristic zero).
Subspace radical_of_algebra(const AlgebraTable& t);

ModuleRep regular_module(std::shared_ptr<const AlgebraTable> t);

/// Action induced on an invariant subspace / on the quotient by one.
ModuleRep submodule_rep(const ModuleRep& m, const Subspace& sub);
ModuleRep quotient_rep(const ModuleRep& m, const Subspace& sub);

/// Basis of {E : E a_i = b_i E for all i in gen_positions}; module maps A -> B.
std::vector<QMatrix> intertwiners(const std::vector<QMatrix>& act_a, const std::vector<QMatrix>& act_b,
                                  const std::vector<std::size_t>& gen_positions);

/// Small unital generating set of the algebra plus a spanning word tree,
/// shared by ext1 and by endomorphism computations.
struct AlgebraGenerators {
    std::vector<int> gens;                      // basis indices
    std::vector<std::pair<int, int>> words;     // words[m] = (parent word, position in gens); word 0 = identity
    std::vector<QVec> word_vectors;             // coordinates of each word
    QMatrix word_matrix_inverse;                // column m = coordinates of basis element m over the words
};

AlgebraGenerators algebra_generators(const AlgebraTable& t);

}  // namespace bisetkit
