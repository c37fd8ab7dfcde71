#include <doctest.h>

#include "bisetkit/qmatrix.hpp"
#include "bisetkit/rational.hpp"

using namespace bisetkit;

namespace {

// deterministic small rationals for property checks
struct Lcg {
    std::uint64_t state = 0x9d2c5680u;
    int next(int lo, int hi) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<int>((state >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
    Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK((a - b).str() == "1/6");
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(0, 5).is_zero());
    Rat big = Rat(1);
    for (int i = 1; i <= 25; ++i)
        big *= Rat(i);
    for (int i = 1; i <= 25; ++i)
        big /= Rat(i);
    CHECK(big.is_one());
}

TEST_CASE("rank of identity") {
    CHECK(rank(QMatrix::identity(2)) == 2);
}

TEST_CASE("rank-nullity on pseudo-random rational matrices") {
    Lcg rng;
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t r = static_cast<std::size_t>(rng.next(1, 6));
        std::size_t c = static_cast<std::size_t>(rng.next(1, 6));
        QMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m.at(i, j) = Rat(rng.next(-4, 4), rng.next(1, 3));
        CHECK(rank(m) + kernel(m).size() == c);
        for (const auto& k : kernel(m))
            CHECK(is_zero(m.apply(k)));
    }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
    QMatrix m(2, 2);
    m.at(0, 0) = Rat(2);
    m.at(0, 1) = Rat(1);
    m.at(1, 0) = Rat(1);
    m.at(1, 1) = Rat(1);
    auto x = solve(m, {Rat(3), Rat(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(1));
    CHECK((*x)[1] == Rat(1));

    QMatrix bad(2, 1);
    bad.at(0, 0) = Rat(1);
    bad.at(1, 0) = Rat(1);
    CHECK(!solve(bad, {Rat(0), Rat(1)}).has_value());
}

TEST_CASE("subspace sum, intersection and containment") {
    Subspace a(3), b(3);
    a.absorb({Rat(1), Rat(0), Rat(0)});
    a.absorb({Rat(0), Rat(1), Rat(0)});
    b.absorb({Rat(0), Rat(1), Rat(1)});
    auto s = subspace_sum(a, b);
    CHECK(s.dim() == 3);
    auto i = subspace_intersection(a, b);
    CHECK(i.dim() == 0);
    b.absorb({Rat(0), Rat(1), Rat(0)});
    auto i2 = subspace_intersection(a, b);
    CHECK(i2.dim() == 1);
    CHECK(a.contains(i2));
}

TEST_CASE("spin returns the invariant closure") {
    // shift action on Q^3: e1 -> e2 -> e3 -> e1
    QMatrix shift(3, 3);
    shift.at(1, 0) = Rat(1);
    shift.at(2, 1) = Rat(1);
    shift.at(0, 2) = Rat(1);
    auto s = spin({{Rat(1), Rat(0), Rat(0)}}, {shift}, 3);
    CHECK(s.dim() == 3);
    auto fixed = spin({{Rat(1), Rat(1), Rat(1)}}, {shift}, 3);
    CHECK(fixed.dim() == 1);
}

TEST_CASE("inverse round trip") {
    QMatrix m(2, 2);
    m.at(0, 0) = Rat(1);
    m.at(0, 1) = Rat(2);
    m.at(1, 0) = Rat(3);
    m.at(1, 1) = Rat(4);
    auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK((*inv) * m == QMatrix::identity(2));
}
