#include <doctest.h>

#include <algorithm>

#include "bisetkit/errors.hpp"
#include "bisetkit/iso.hpp"
#include "bisetkit/out_simples.hpp"
#include "bisetkit/perm_group.hpp"

using namespace bisetkit;

namespace {

std::vector<std::size_t> dims_of(const std::vector<OutSimple>& simples) {
    std::vector<std::size_t> dims;
    for (const auto& s : simples)
        dims.push_back(s.dim);
    std::sort(dims.begin(), dims.end());
    return dims;
}

void check_representation(const OutGroup& out, const OutSimple& s) {
    for (std::size_t i = 0; i < out.order(); ++i)
        for (std::size_t j = 0; j < out.order(); ++j)
            CHECK(s.action[i] * s.action[j] == s.action[static_cast<std::size_t>(out.table[i][j])]);
}

void check_irreducible(const OutSimple& s) {
    // spin from every basis vector returns everything
    for (std::size_t i = 0; i < s.dim; ++i) {
        QVec v(s.dim);
        v[i] = Rat(1);
        CHECK(spin({v}, s.action, s.dim).dim() == s.dim);
    }
}

}  // namespace

TEST_CASE("rational irreducibles of S3 (as Out(V4))") {
    OutGroup out = out_group(klein_four_group());
    auto simples = qout_simples(out);
    REQUIRE(simples.size() == 3);
    CHECK(dims_of(simples) == std::vector<std::size_t>{1, 1, 2});
    for (const auto& s : simples) {
        CHECK(s.end_dim == 1);
        check_representation(out, s);
        check_irreducible(s);
    }
    // names: triv, sgn, 2dim
    CHECK(simples[0].name == "triv");
    CHECK(simples[1].name == "sgn");
    CHECK(simples[2].name == "2dim");
}

TEST_CASE("rational irreducibles of C2 (as Out(C3) and Out(A4))") {
    for (const auto& g : {cyclic_group(3), alternating_group(4)}) {
        OutGroup out = out_group(g);
        auto simples = qout_simples(out);
        REQUIRE(simples.size() == 2);
        CHECK(simples[0].name == "triv");
        CHECK(simples[1].name == "sgn");
        CHECK(simples[0].dim == 1);
        CHECK(simples[1].dim == 1);
        CHECK(simples[1].action[1].at(0, 0) == Rat(-1));
        for (const auto& s : simples)
            check_representation(out, s);
    }
}

TEST_CASE("rational irreducibles of C4 (as Out(C5)): the faithful one has end dim 2") {
    OutGroup out = out_group(cyclic_group(5));
    REQUIRE(out.order() == 4);
    auto simples = qout_simples(out);
    REQUIRE(simples.size() == 3);
    CHECK(dims_of(simples) == std::vector<std::size_t>{1, 1, 2});
    for (const auto& s : simples) {
        check_representation(out, s);
        check_irreducible(s);
        if (s.dim == 2)
            CHECK(s.end_dim == 2);
        else
            CHECK(s.end_dim == 1);
    }
}

TEST_CASE("trivial out group") {
    OutGroup out = out_group(cyclic_group(2));
    auto simples = qout_simples(out);
    REQUIRE(simples.size() == 1);
    CHECK(simples[0].name == "triv");
    CHECK(simples[0].dim == 1);
}

TEST_CASE("C6-style out groups split into four rational classes") {
    // Out(C7) = C6 has irreducibles of dims 1, 1, 2, 2
    OutGroup out = out_group(cyclic_group(7));
    REQUIRE(out.order() == 6);
    auto simples = qout_simples(out);
    REQUIRE(simples.size() == 4);
    CHECK(dims_of(simples) == std::vector<std::size_t>{1, 1, 2, 2});
    // duplicate dims get distinct canonical names
    CHECK(simples[2].name != simples[3].name);
    for (const auto& s : simples)
        check_representation(out, s);
}

TEST_CASE("oversized out groups are rejected up front") {
    // Out(C2 x C2 x C2) = GL(3, 2) has order 168
    auto e8 = PermGroup::closure(
        {Perm::from_cycles("(1 2)"), Perm::from_cycles("(3 4)"), Perm::from_cycles("(5 6)")}, 8);
    OutGroup out = out_group(e8);
    CHECK(out.order() == 168);
    CHECK_THROWS_AS(qout_simples(out), BoundExceeded);
}

TEST_CASE("characters are self-dual: chi(g) = chi(g^{-1})") {
    for (const auto& g : {klein_four_group(), cyclic_group(5), cyclic_group(7), alternating_group(4)}) {
        OutGroup out = out_group(g);
        for (const auto& s : qout_simples(out))
            for (std::size_t t = 0; t < out.order(); ++t)
                CHECK(s.character[t] == s.character[static_cast<std::size_t>(out.inverse[t])]);
    }
}
