#include "bisetkit/module_rep.hpp"

#include <algorithm>

#include "bisetkit/errors.hpp"

namespace bisetkit {

QMatrix ModuleRep::act(const QVec& algebra_element) const {
    QMatrix m(dim, dim);
    for (std::size_t i = 0; i < algebra_element.size(); ++i)
        if (!algebra_element[i].is_zero())
            m = m + action[i].scaled(algebra_element[i]);
    return m;
}

TraceCharacter trace_character(const ModuleRep& m) {
    TraceCharacter chi;
    chi.reserve(m.action.size());
    for (const auto& a : m.action)
        chi.push_back(a.trace());
    return chi;
}

std::vector<long long> character_multiplicities(const TraceCharacter& chi,
                                                const std::vector<TraceCharacter>& simple_chis) {
    std::size_t rows = chi.size();
    std::size_t cols = simple_chis.size();
    QMatrix m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        if (simple_chis[j].size() != rows)
            throw DimensionMismatch("character length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            m.at(i, j) = simple_chis[j][i];
    }
    if (rank(m) != cols)
        throw InconsistentSystem("simple characters are linearly dependent");
    auto sol = solve(m, chi);
    if (!sol)
        throw InconsistentSystem("character does not decompose over the catalog (missing simple?)");
    std::vector<long long> out;
    for (const auto& c : *sol) {
        if (!c.is_integer() || c.sign() < 0)
            throw InconsistentSystem("non-integral or negative multiplicity " + c.str());
        out.push_back(c.num().convert_to<long long>());
    }
    return out;
}

Subspace radical_of_algebra(const AlgebraTable& t) {
    std::size_t d = t.dim();
    // gram(i, j) = trace(L_{e_i e_j}) = sum_k c_{ij}^k trace(L_{e_k})
    QVec basis_traces(d);
    for (std::size_t k = 0; k < d; ++k) {
        // trace of left multiplication by e_k: sum_j coefficient of e_j in e_k e_j
        Rat tr;
        for (std::size_t j = 0; j < d; ++j) {
            const auto& prod = t.product(k, j);
            auto it = prod.find(static_cast<int>(j));
            if (it != prod.end())
                tr += it->second;
        }
        basis_traces[k] = tr;
    }
    QMatrix gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rat v;
            for (const auto& [k, c] : t.product(i, j))
                v += c * basis_traces[static_cast<std::size_t>(k)];
            gram.at(i, j) = v;
        }
    Subspace rad(d);
    for (const auto& v : kernel(gram))
        rad.absorb(v);
    return rad;
}

ModuleRep regular_module(std::shared_ptr<const AlgebraTable> t) {
    ModuleRep m;
    m.dim = t->dim();
    for (std::size_t i = 0; i < t->dim(); ++i) {
        QVec unit(t->dim());
        unit[i] = Rat(1);
        m.action.push_back(t->left_mult_matrix(unit));
    }
    m.algebra = std::move(t);
    return m;
}

namespace {

QMatrix basis_matrix_of(const Subspace& s) {
    QMatrix b(s.ambient(), s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j)
        for (std::size_t i = 0; i < s.ambient(); ++i)
            b.at(i, j) = s.basis()[j][i];
    return b;
}

}  // namespace

ModuleRep submodule_rep(const ModuleRep& m, const Subspace& sub) {
    ModuleRep out;
    out.algebra = m.algebra;
    out.dim = sub.dim();
    QMatrix b = basis_matrix_of(sub);
    for (const auto& a : m.action) {
        QMatrix img = a * b;  // columns are images of basis vectors
        QMatrix res(sub.dim(), sub.dim());
        for (std::size_t j = 0; j < sub.dim(); ++j) {
            QVec col(m.dim);
            for (std::size_t i = 0; i < m.dim; ++i)
                col[i] = img.at(i, j);
            auto coords = sub.coordinates(col);
            if (!coords)
                throw DimensionMismatch("submodule_rep: subspace is not invariant");
            for (std::size_t i = 0; i < sub.dim(); ++i)
                res.at(i, j) = (*coords)[i];
        }
        out.action.push_back(std::move(res));
    }
    return out;
}

ModuleRep quotient_rep(const ModuleRep& m, const Subspace& sub) {
    // quotient coordinates = non-pivot positions of the rref basis
    std::vector<std::size_t> rep_coords;
    {
        std::vector<char> is_pivot(m.dim, 0);
        for (auto p : sub.pivots())
            is_pivot[p] = 1;
        for (std::size_t i = 0; i < m.dim; ++i)
            if (!is_pivot[i])
                rep_coords.push_back(i);
    }
    ModuleRep out;
    out.algebra = m.algebra;
    out.dim = rep_coords.size();
    for (const auto& a : m.action) {
        QMatrix res(out.dim, out.dim);
        for (std::size_t j = 0; j < out.dim; ++j) {
            QVec unit(m.dim);
            unit[rep_coords[j]] = Rat(1);
            QVec img = sub.reduce(a.apply(unit));
            for (std::size_t i = 0; i < out.dim; ++i)
                res.at(i, j) = img[rep_coords[i]];
        }
        out.action.push_back(std::move(res));
    }
    return out;
}

std::vector<QMatrix> intertwiners(const std::vector<QMatrix>& act_a, const std::vector<QMatrix>& act_b,
                                  const std::vector<std::size_t>& gen_positions) {
    std::size_t da = act_a.empty() ? 0 : act_a[0].cols();
    std::size_t db = act_b.empty() ? 0 : act_b[0].rows();
    if (da == 0 || db == 0)
        return {};
    // unknowns E (db x da), equations E A_g = B_g E
    std::size_t unknowns = da * db;
    std::vector<QVec> rows;
    for (std::size_t g : gen_positions) {
        const QMatrix& a = act_a[g];
        const QMatrix& b = act_b[g];
        for (std::size_t i = 0; i < db; ++i)
            for (std::size_t j = 0; j < da; ++j) {
                QVec row(unknowns);
                // (E A)_{ij} = sum_k E_{ik} A_{kj} ; (B E)_{ij} = sum_k B_{ik} E_{kj}
                for (std::size_t k = 0; k < da; ++k)
                    row[i * da + k] += a.at(k, j);
                for (std::size_t k = 0; k < db; ++k)
                    row[k * da + j] -= b.at(i, k);
                rows.push_back(std::move(row));
            }
    }
    QMatrix sys = QMatrix::from_rows(rows, unknowns);
    std::vector<QMatrix> out;
    for (const auto& v : kernel(sys)) {
        QMatrix e(db, da);
        for (std::size_t i = 0; i < db; ++i)
            for (std::size_t j = 0; j < da; ++j)
                e.at(i, j) = v[i * da + j];
        out.push_back(std::move(e));
    }
    return out;
}

AlgebraGenerators algebra_generators(const AlgebraTable& t) {
    std::size_t d = t.dim();
    AlgebraGenerators out;
    Subspace span(d);
    QVec id(d);
    id[static_cast<std::size_t>(t.identity)] = Rat(1);
    span.absorb(id);
    out.words.emplace_back(-1, -1);
    out.word_vectors.push_back(id);

    auto close = [&]() {
        for (std::size_t w = 0; w < out.word_vectors.size(); ++w)
            for (std::size_t gp = 0; gp < out.gens.size(); ++gp) {
                QVec gv(d);
                gv[static_cast<std::size_t>(out.gens[gp])] = Rat(1);
                QVec prod = t.mul(out.word_vectors[w], gv);
                if (span.absorb(prod)) {
                    out.words.emplace_back(static_cast<int>(w), static_cast<int>(gp));
                    out.word_vectors.push_back(std::move(prod));
                }
            }
    };
    // greedy by closure growth: fewer generators shrink every downstream
    // cocycle and intertwiner system
    while (span.dim() < d) {
        int best = -1;
        std::size_t best_gain = 0;
        for (std::size_t i = 0; i < d; ++i) {
            QVec unit(d);
            unit[i] = Rat(1);
            if (span.contains(unit))
                continue;
            // closure of span + candidate under right multiplication by gens + candidate
            Subspace trial = span;
            std::vector<QVec> words{unit};
            trial.absorb(unit);
            std::vector<QVec> frontier = {unit};
            for (const auto& w : out.word_vectors)
                frontier.push_back(w);
            std::size_t head = 0;
            std::vector<QVec> queue = frontier;
            while (head < queue.size()) {
                QVec cur = queue[head++];
                for (std::size_t gp = 0; gp <= out.gens.size(); ++gp) {
                    QVec gv(d);
                    gv[gp == out.gens.size() ? i : static_cast<std::size_t>(out.gens[gp])] = Rat(1);
                    QVec prod = t.mul(cur, gv);
                    if (trial.absorb(prod))
                        queue.push_back(std::move(prod));
                }
            }
            std::size_t gain = trial.dim() - span.dim();
            if (gain > best_gain) {
                best_gain = gain;
                best = static_cast<int>(i);
            }
            if (trial.dim() == d)
                break;  // cannot do better than everything
        }
        if (best < 0)
            throw AssertionFailure("algebra_generators: span incomplete but no unit missing");
        out.gens.push_back(best);
        close();
    }
    QMatrix word_mat(d, d);
    for (std::size_t j = 0; j < out.word_vectors.size(); ++j)
        for (std::size_t i = 0; i < d; ++i)
            word_mat.at(i, j) = out.word_vectors[j][i];
    auto inv = word_mat.inverse();
    if (!inv)
        throw AssertionFailure("algebra_generators: words do not span");
    out.word_matrix_inverse = *inv;
    return out;
}

}  // namespace bisetkit
