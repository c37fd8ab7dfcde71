#include "bisetkit/out_simples.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bisetkit/errors.hpp"
#include "bisetkit/subgroup_data.hpp"

namespace bisetkit {

namespace {

// monic minimal polynomial of F, low-degree coefficients first
QVec minimal_polynomial(const QMatrix& f) {
    std::size_t n = f.rows();
    Subspace span(n * n);
    std::vector<QVec> powers;
    QMatrix p = QMatrix::identity(n);
    while (true) {
        QVec flat(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                flat[i * n + j] = p.at(i, j);
        if (!span.absorb(flat)) {
            // dependency: express flat over previous powers
            QMatrix m(n * n, powers.size());
            for (std::size_t c = 0; c < powers.size(); ++c)
                for (std::size_t r = 0; r < n * n; ++r)
                    m.at(r, c) = powers[c][r];
            auto sol = solve(m, flat);
            if (!sol)
                throw AssertionFailure("minimal polynomial: dependency has no solution");
            QVec poly(powers.size() + 1);
            for (std::size_t i = 0; i < powers.size(); ++i)
                poly[i] = -(*sol)[i];
            poly[powers.size()] = Rat(1);
            return poly;
        }
        powers.push_back(QVec());
        {
            QVec flat2(n * n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    flat2[i * n + j] = p.at(i, j);
            powers.back() = std::move(flat2);
        }
        p = p * f;
    }
}

std::vector<Rat> rational_roots(const QVec& poly) {
    // clear denominators to a primitive integer polynomial
    Int lcm = 1;
    for (const auto& c : poly)
        lcm = boost::multiprecision::lcm(lcm, c.den());
    std::vector<Int> ip;
    for (const auto& c : poly)
        ip.push_back(c.num() * (lcm / c.den()));
    while (!ip.empty() && ip.back() == 0)
        ip.pop_back();
    if (ip.size() < 2)
        return {};
    // strip powers of x
    std::size_t shift = 0;
    while (shift < ip.size() && ip[shift] == 0)
        ++shift;
    std::vector<Rat> roots;
    if (shift > 0)
        roots.push_back(Rat(0));
    Int a0 = ip[shift] < 0 ? Int(-ip[shift]) : ip[shift];
    Int an = ip.back() < 0 ? Int(-ip.back()) : ip.back();
    if (a0 == 0 || a0 > 1000000 || an > 1000000)
        return roots;
    auto divisors = [](long long v) {
        std::vector<long long> out;
        for (long long d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                out.push_back(d);
                if (d != v / d)
                    out.push_back(v / d);
            }
        return out;
    };
    long long a0v = a0.convert_to<long long>();
    long long anv = an.convert_to<long long>();
    auto eval = [&](const Rat& x) {
        Rat acc;
        for (std::size_t i = ip.size(); i-- > 0;)
            acc = acc * x + Rat(ip[i]);
        return acc;
    };
    for (long long p : divisors(a0v))
        for (long long q : divisors(anv))
            for (int s : {1, -1}) {
                Rat cand(Int(s * p), Int(q));
                if (eval(cand).is_zero() && std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    return roots;
}

struct Piece {
    std::vector<QVec> basis;  // ambient (regular-module) vectors
    QMatrix projection;       // module projection of the regular module onto this piece
};

struct Splitter {
    const OutGroup& out;
    std::size_t n;
    std::vector<QMatrix> left;   // left regular action per out element
    std::vector<QMatrix> right;  // right multiplication per out element

    QMatrix coord_extractor(const std::vector<QVec>& basis) const {
        // C = (B^T B)^{-1} B^T satisfies C * B = I for independent columns.
        QMatrix b = basis_matrix(basis);
        QMatrix bt = b.transposed();
        auto inv = (bt * b).inverse();
        if (!inv)
            throw AssertionFailure("coord_extractor: dependent basis");
        return (*inv) * bt;
    }

    QMatrix basis_matrix(const std::vector<QVec>& basis) const {
        QMatrix b(n, basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t i = 0; i < n; ++i)
                b.at(i, j) = basis[j][i];
        return b;
    }

    // module projection onto the span of `sub` (ambient vectors)
    QMatrix maschke_projection(const std::vector<QVec>& sub) const {
        QMatrix b = basis_matrix(sub);
        QMatrix c = coord_extractor(sub);
        QMatrix pi0 = b * c;
        QMatrix acc(n, n);
        for (std::size_t t = 0; t < out.order(); ++t) {
            QMatrix lt = left[t];
            QMatrix ltinv = left[static_cast<std::size_t>(out.inverse[t])];
            acc = acc + lt * pi0 * ltinv;
        }
        return acc.scaled(Rat(1, static_cast<long long>(out.order())));
    }
};

}  // namespace

GroupPtr out_as_perm_group(const OutGroup& out) {
    std::size_t m = out.order();
    if (m == 1)
        return trivial_group();
    std::vector<Perm> elems;
    for (std::size_t t = 0; t < m; ++t) {
        std::vector<int> im(m);
        for (std::size_t s = 0; s < m; ++s)
            im[s] = out.table[t][s];
        elems.emplace_back(std::move(im));
    }
    return group_from_elements(std::move(elems));
}

std::vector<OutSimple> qout_simples(const OutGroup& out) {
    std::size_t n = out.order();
    if (n > 24)
        throw BoundExceeded("Out group of order " + std::to_string(n) +
                            " exceeds the supported bound of 24 for splitting the regular representation");
    Splitter sp{out, n, {}, {}};
    for (std::size_t t = 0; t < n; ++t) {
        QMatrix lt(n, n), rt(n, n);
        for (std::size_t s = 0; s < n; ++s) {
            lt.at(static_cast<std::size_t>(out.table[t][s]), s) = Rat(1);
            rt.at(static_cast<std::size_t>(out.table[s][t]), s) = Rat(1);
        }
        sp.left.push_back(std::move(lt));
        sp.right.push_back(std::move(rt));
    }

    std::vector<Piece> finished;
    std::vector<std::pair<Piece, int>> pending;  // piece + tentative end dim (-1 unknown)
    {
        Piece whole;
        for (std::size_t i = 0; i < n; ++i) {
            QVec v(n);
            v[i] = Rat(1);
            whole.basis.push_back(std::move(v));
        }
        whole.projection = QMatrix::identity(n);
        pending.emplace_back(std::move(whole), -1);
    }

    std::vector<std::pair<Piece, std::size_t>> irreducibles;  // piece + end_dim
    while (!pending.empty()) {
        Piece w = std::move(pending.back().first);
        pending.pop_back();
        std::size_t d = w.basis.size();
        if (d == 1) {
            irreducibles.emplace_back(std::move(w), 1);
            continue;
        }
        QMatrix b = sp.basis_matrix(w.basis);
        QMatrix c = sp.coord_extractor(w.basis);
        // endomorphisms: restrictions of projection * right multiplications
        std::vector<QMatrix> endos;
        Subspace endo_span(d * d);
        for (std::size_t t = 0; t < n; ++t) {
            QMatrix e = c * (w.projection * (sp.right[t] * b));
            QVec flat(d * d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    flat[i * d + j] = e.at(i, j);
            if (endo_span.absorb(flat))
                endos.push_back(e);
        }
        // close under products (End is the span of right mults on a regular
        // piece, but keep the closure for safety)
        for (std::size_t a = 0; a < endos.size(); ++a)
            for (std::size_t bb = 0; bb < endos.size(); ++bb) {
                QMatrix e = endos[a] * endos[bb];
                QVec flat(d * d);
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        flat[i * d + j] = e.at(i, j);
                if (endo_span.absorb(flat))
                    endos.push_back(e);
            }
        if (endo_span.dim() == 1) {
            irreducibles.emplace_back(std::move(w), 1);
            continue;
        }
        // hunt for a singular nonzero endomorphism
        auto try_split = [&](const QMatrix& f) -> bool {
            if (f.is_zero())
                return false;
            QMatrix fm(d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    fm.at(i, j) = f.at(i, j);
            auto ker_vs = kernel(fm);
            if (ker_vs.empty() || ker_vs.size() == d)
                return false;
            // submodule U = ker f, ambient vectors
            std::vector<QVec> u_amb;
            for (const auto& kv : ker_vs) {
                QVec amb(n);
                for (std::size_t j = 0; j < d; ++j)
                    if (!kv[j].is_zero())
                        for (std::size_t i = 0; i < n; ++i)
                            amb[i] += kv[j] * w.basis[j][i];
                u_amb.push_back(std::move(amb));
            }
            QMatrix pi_u = sp.maschke_projection(u_amb);
            // complement inside w: kernel of pi_u restricted to w
            QMatrix pu_on_w(d, d);
            {
                QMatrix tmp = c * (pi_u * b);
                pu_on_w = tmp;
            }
            auto comp = kernel(pu_on_w);
            std::vector<QVec> comp_amb;
            for (const auto& kv : comp) {
                QVec amb(n);
                for (std::size_t j = 0; j < d; ++j)
                    if (!kv[j].is_zero())
                        for (std::size_t i = 0; i < n; ++i)
                            amb[i] += kv[j] * w.basis[j][i];
                comp_amb.push_back(std::move(amb));
            }
            if (comp_amb.size() + u_amb.size() != d)
                throw SplitFailure("maschke complement has wrong dimension");
            Piece pu{u_amb, pi_u};
            Piece pc{comp_amb, w.projection - pi_u * w.projection};
            pending.emplace_back(std::move(pu), -1);
            pending.emplace_back(std::move(pc), -1);
            return true;
        };
        bool split = false;
        std::vector<QMatrix> candidates;
        for (const auto& e : endos)
            candidates.push_back(e);
        for (std::size_t a = 0; a < endos.size() && candidates.size() < 512; ++a)
            for (std::size_t bb = a + 1; bb < endos.size() && candidates.size() < 512; ++bb) {
                candidates.push_back(endos[a] + endos[bb]);
                candidates.push_back(endos[a] - endos[bb]);
            }
        for (const auto& f : candidates) {
            if (try_split(f)) {
                split = true;
                break;
            }
            // eigenvalue-shifted attempts
            for (const auto& lambda : rational_roots(minimal_polynomial(f))) {
                QMatrix shifted = f - QMatrix::identity(d).scaled(lambda);
                if (try_split(shifted)) {
                    split = true;
                    break;
                }
            }
            if (split)
                break;
        }
        if (!split)
            irreducibles.emplace_back(std::move(w), endo_span.dim());
    }

    // deduplicate isomorphism classes by character
    struct Entry {
        std::size_t dim;
        std::size_t end_dim;
        std::vector<Rat> character;
        std::vector<QMatrix> action;
    };
    std::vector<Entry> entries;
    for (auto& [piece, end_dim] : irreducibles) {
        std::size_t d = piece.basis.size();
        QMatrix b = sp.basis_matrix(piece.basis);
        QMatrix c = sp.coord_extractor(piece.basis);
        Entry e;
        e.dim = d;
        e.end_dim = end_dim;
        for (std::size_t t = 0; t < n; ++t) {
            QMatrix act = c * (sp.left[t] * b);
            e.character.push_back(act.trace());
            e.action.push_back(std::move(act));
        }
        bool dup = false;
        for (const auto& prev : entries)
            if (prev.character == e.character) {
                dup = true;
                break;
            }
        if (!dup)
            entries.push_back(std::move(e));
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.dim != b.dim)
            return a.dim < b.dim;
        // descending character order puts the trivial module first
        for (std::size_t i = 0; i < a.character.size(); ++i) {
            if (a.character[i] == b.character[i])
                continue;
            return b.character[i] < a.character[i];
        }
        return false;
    });

    // certificates: regular-module bookkeeping and cyclic-subgroup count
    {
        std::size_t total = 0;
        for (const auto& e : entries) {
            if (e.dim * e.dim % e.end_dim != 0)
                throw SplitFailure("end dim does not divide dim^2");
            total += e.dim * e.dim / e.end_dim;
        }
        if (total != n)
            throw SplitFailure("regular module bookkeeping failed: sum dim^2/end = " + std::to_string(total) +
                               " expected " + std::to_string(n));
        GroupPtr as_perm = out_as_perm_group(out);
        SubgroupData data(as_perm);
        std::size_t cyclic_classes = 0;
        for (std::size_t cc = 0; cc < data.class_count(); ++cc) {
            const auto& rep = data.class_rep(static_cast<int>(cc));
            bool cyclic = false;
            for (int x : rep)
                if (closure_indices(*as_perm, {x}) == rep) {
                    cyclic = true;
                    break;
                }
            if (cyclic)
                ++cyclic_classes;
        }
        if (entries.size() != cyclic_classes)
            throw SplitFailure("irreducible count " + std::to_string(entries.size()) +
                               " does not match cyclic subgroup classes " + std::to_string(cyclic_classes));
    }

    // canonical names
    std::vector<OutSimple> out_list;
    std::map<std::string, int> name_counts;
    for (const auto& e : entries) {
        OutSimple s;
        s.dim = e.dim;
        s.end_dim = e.end_dim;
        s.action = e.action;
        s.character = e.character;
        std::string base;
        bool trivial = true;
        for (const auto& m : e.action)
            if (!(m == QMatrix::identity(e.dim)))
                trivial = false;
        if (trivial && e.dim == 1)
            base = "triv";
        else if (e.dim == 1)
            base = "sgn";
        else
            base = std::to_string(e.dim) + "dim";
        int cnt = ++name_counts[base];
        s.name = cnt == 1 ? base : base + std::to_string(cnt);
        out_list.push_back(std::move(s));
    }
    return out_list;
}

}  // namespace bisetkit
