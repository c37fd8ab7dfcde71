#include <doctest.h>

#include "bisetkit/context.hpp"
#include "bisetkit/essential.hpp"

using namespace bisetkit;

namespace {

Context& shared_ctx() {
    static Context ctx([] {
        Options o;
        o.use_cache = false;
        return o;
    }());
    return ctx;
}

}  // namespace

TEST_CASE("ideal of the trivial source is zero") {
    auto& ctx = shared_ctx();
    auto one = ctx.parse_group("1");
    for (const auto& ks : {"C2", "S3", "A4"}) {
        auto k = ctx.parse_group(ks);
        const HomBar& hb = ctx.hombar(one, k);
        CHECK(hb.ideal.dim() == 0);
        CHECK(hb.dim == ctx.pair_basis(k, one).size());
    }
}

TEST_CASE("dim hombar(H,H) equals |Out(H)|") {
    auto& ctx = shared_ctx();
    for (const auto& hs : {"1", "C2", "C3", "V4", "C5", "S3", "A4"}) {
        auto h = ctx.parse_group(hs);
        CHECK_MESSAGE(ctx.hombar(h, h).dim == ctx.out(h).order(), hs);
    }
}

TEST_CASE("the ideal is spanned by the proper-section transitive labels") {
    auto& ctx = shared_ctx();
    for (const auto& hs : {"C3", "V4", "S3"}) {
        auto h = ctx.parse_group(hs);
        const HomBar& hb = ctx.hombar(h, h);
        const PairBasis& basis = ctx.pair_basis(h, h);
        const SubgroupData& data = ctx.subgroups(h);
        // structural cross-check: count labels whose section type is the full group
        std::size_t full = 0;
        for (const auto& lab : basis.labels()) {
            const SectionInfo& s1 = data.sections()[static_cast<std::size_t>(lab.sec_g)];
            if (s1.P.size() == h->order() && s1.K.size() == 1)
                ++full;
        }
        CHECK(hb.dim == full);
        // and the ideal contains every proper-section transitive basis vector
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const SectionInfo& s1 = data.sections()[static_cast<std::size_t>(basis.labels()[i].sec_g)];
            bool proper = !(s1.P.size() == h->order() && s1.K.size() == 1);
            QVec unit(basis.size());
            unit[i] = Rat(1);
            CHECK(hb.ideal.contains(unit) == proper);
        }
    }
}

TEST_CASE("hombar(A4, A5): two full-section classes, free of rank one over kOut(A4)") {
    auto& ctx = shared_ctx();
    auto a4 = ctx.parse_group("A4");
    auto a5 = ctx.parse_group("A5");
    const HomBar& hb = ctx.hombar(a4, a5);
    CHECK(hb.dim == 2);  // |Out(A4)| = 2: the classes of Ind and of Ind twisted by the outer map
    // the right Out(A4)-action permutes the two classes simply transitively
    const OutGroup& og = ctx.out(a4);
    QMatrix act = right_iso_action(ctx, a4, a5, og.out_elements[1]);
    CHECK(act.at(0, 1) == Rat(1));
    CHECK(act.at(1, 0) == Rat(1));
    CHECK(act.at(0, 0) == Rat(0));
}

TEST_CASE("out_action matrices form a representation of Out(H)") {
    auto& ctx = shared_ctx();
    auto v4 = ctx.parse_group("V4");
    auto a4 = ctx.parse_group("A4");
    const OutGroup& og = ctx.out(v4);
    std::vector<QMatrix> ms;
    for (std::size_t t = 0; t < og.order(); ++t)
        ms.push_back(out_action_matrix(ctx, v4, a4, static_cast<int>(t)));
    CHECK(ms[0] == QMatrix::identity(ctx.hombar(v4, a4).dim));
    for (std::size_t i = 0; i < og.order(); ++i)
        for (std::size_t j = 0; j < og.order(); ++j)
            CHECK(ms[i] * ms[j] == ms[static_cast<std::size_t>(og.table[i][j])]);
}

TEST_CASE("hombar(H,H) multiplication equals the kOut group algebra") {
    auto& ctx = shared_ctx();
    for (const auto& hs : {"C3", "V4", "C5", "A4"}) {
        auto h = ctx.parse_group(hs);
        const OutAlgebraIso& iso = ctx.hombar_out_iso(h);
        const OutGroup& og = ctx.out(h);
        const HomBar& hb = ctx.hombar(h, h);
        const PairBasis& basis = ctx.pair_basis(h, h);
        for (std::size_t i = 0; i < og.order(); ++i)
            for (std::size_t j = 0; j < og.order(); ++j) {
                BisetElement a = iso_biset(ctx, h, h, og.out_elements[i]);
                BisetElement b = iso_biset(ctx, h, h, og.out_elements[j]);
                QVec prod = iso.to_kout.apply(hb.project(compose(ctx, a, b).dense(basis.size())));
                for (std::size_t t = 0; t < og.order(); ++t)
                    CHECK(prod[t] == (t == static_cast<std::size_t>(og.table[i][j]) ? Rat(1) : Rat(0)));
            }
    }
}

TEST_CASE("the ideal is a two-sided submodule under composition") {
    auto& ctx = shared_ctx();
    auto h = ctx.parse_group("C3");
    const HomBar& hb = ctx.hombar(h, h);
    const PairBasis& basis = ctx.pair_basis(h, h);
    for (const auto& v : hb.ideal.basis()) {
        BisetElement x;
        x.target = h;
        x.source = h;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!v[i].is_zero())
                x.add(static_cast<int>(i), v[i]);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            BisetElement gen;
            gen.target = h;
            gen.source = h;
            gen.add(static_cast<int>(b), Rat(1));
            CHECK(hb.ideal.contains(compose(ctx, gen, x).dense(basis.size())));
            CHECK(hb.ideal.contains(compose(ctx, x, gen).dense(basis.size())));
        }
    }
}
