#include <doctest.h>

#include <set>

#include "bisetkit/errors.hpp"
#include "bisetkit/iso.hpp"
#include "bisetkit/names.hpp"
#include "bisetkit/out_simples.hpp"
#include "bisetkit/perm_group.hpp"
#include "bisetkit/subgroup_data.hpp"

using namespace bisetkit;

TEST_CASE("perm parsing, products, orders") {
    Perm p = Perm::from_cycles("(1 2)(3 4)");
    CHECK(p.order() == 2);
    Perm q = Perm::from_cycles("(1 2 3)", 4);
    CHECK(q.order() == 3);
    CHECK((p * q).degree() == 4);
    CHECK(p * p == Perm(4));
    CHECK(q.inverse() * q == Perm(4));
    CHECK(Perm::from_cycles("(1 2 3)").cycle_string() == "(1 2 3)");
}

TEST_CASE("closure: A4, trivial, A5") {
    auto a4 = PermGroup::closure({Perm::from_cycles("(1 2)(3 4)"), Perm::from_cycles("(1 2 3)")}, 100000);
    CHECK(a4->order() == 12);
    auto trivial = PermGroup::closure({}, 100000);
    CHECK(trivial->order() == 1);
    auto a5 = PermGroup::closure({Perm::from_cycles("(1 2 3 4 5)"), Perm::from_cycles("(1 2 3)")}, 100000);
    CHECK(a5->order() == 60);
    // identity is element 0 and the table closes
    CHECK(a5->perm(0).is_identity());
    CHECK(a5->mul(3, a5->inv(3)) == 0);
    CHECK_THROWS_AS(PermGroup::closure({Perm::from_cycles("(1 2 3 4 5)"), Perm::from_cycles("(1 2 3)")}, 59),
                    BoundExceeded);
}

TEST_CASE("standard groups and names") {
    CHECK(group_name(*trivial_group()) == "1");
    CHECK(group_name(*cyclic_group(6)) == "C6");
    CHECK(group_name(*klein_four_group()) == "V4");
    CHECK(group_name(*symmetric_group(3)) == "S3");
    CHECK(group_name(*alternating_group(4)) == "A4");
    CHECK(group_name(*alternating_group(5)) == "A5");
    CHECK(group_name(*dihedral_group(8)) == "D8");
    CHECK(group_name(*quaternion_group()) == "Q8");
    CHECK(group_name(*direct_product(cyclic_group(2), cyclic_group(4), 100)) == "C2xC4");
    CHECK(group_name(*direct_product(cyclic_group(2), cyclic_group(6), 100)) == "C2xC6");
    CHECK(quaternion_group()->order_multiset() == std::vector<int>{1, 2, 4, 4, 4, 4, 4, 4});
}

TEST_CASE("subgroup enumeration against exhaustive subset oracle") {
    // every closed subset is found, checked by brute force over all subsets
    for (const auto& g : {klein_four_group(), cyclic_group(8), dihedral_group(8), quaternion_group(),
                          PermGroup::closure({Perm::from_cycles("(1 2)"), Perm::from_cycles("(3 4)"),
                                              Perm::from_cycles("(5 6)")}, 8)}) {
        SubgroupData data(g);
        std::size_t n = g->order();
        std::size_t count = 0;
        for (std::size_t mask = 1; mask < (1u << n); ++mask) {
            if (!(mask & 1))
                continue;  // must contain identity
            std::vector<int> elems;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i))
                    elems.push_back(static_cast<int>(i));
            bool closed = true;
            for (int a : elems)
                for (int b : elems)
                    if (!std::binary_search(elems.begin(), elems.end(), g->mul(a, b))) {
                        closed = false;
                        break;
                    }
            if (closed)
                ++count;
        }
        CHECK(count == data.subgroup_count());
        // class sizes sum to the total count
        std::size_t via_classes = 0;
        for (const auto& members : data.class_members())
            via_classes += members.size();
        CHECK(via_classes == data.subgroup_count());
    }
}

TEST_CASE("subgroup classes: V4, A5, trivial, A4") {
    SubgroupData v4(klein_four_group());
    CHECK(v4.class_count() == 5);
    SubgroupData a5(alternating_group(5));
    CHECK(a5.class_count() == 9);
    CHECK(a5.subgroup_count() == 59);
    SubgroupData one(trivial_group());
    CHECK(one.class_count() == 1);
    SubgroupData a4(alternating_group(4));
    CHECK(a4.class_count() == 5);
    CHECK(a4.subgroup_count() == 10);
}

TEST_CASE("sections: orders multiply and quotients act faithfully") {
    SubgroupData a4(alternating_group(4));
    for (const auto& sec : a4.sections()) {
        CHECK(sec.quotient->order() * sec.K.size() == sec.P.size());
        // kernel of pi is exactly K
        std::size_t kernel = 0;
        for (int p : sec.P)
            if (sec.pi[static_cast<std::size_t>(p)] == 0)
                ++kernel;
        CHECK(kernel == sec.K.size());
    }
}

TEST_CASE("subquotient iso classes of A4 and A5") {
    auto collect = [](const GroupPtr& g) {
        SubgroupData data(g);
        std::set<std::string> names;
        for (const auto& sec : data.sections())
            names.insert(group_name(*sec.quotient));
        return names;
    };
    CHECK(collect(alternating_group(4)) == std::set<std::string>{"1", "C2", "C3", "V4", "A4"});
    CHECK(collect(alternating_group(5)) ==
          std::set<std::string>{"1", "C2", "C3", "V4", "C5", "S3", "D10", "A4", "A5"});
}

TEST_CASE("locate_section transports to the canonical representative") {
    auto a5 = alternating_group(5);
    SubgroupData data(a5);
    // pick any subgroup of order 12 and its V4 normal subgroup
    for (std::size_t s = 0; s < data.subgroup_count(); ++s) {
        const auto& p = data.subgroups()[s];
        if (p.size() != 12)
            continue;
        for (std::size_t k = 0; k < data.subgroup_count(); ++k) {
            const auto& kk = data.subgroups()[k];
            if (kk.size() != 4)
                continue;
            if (!std::includes(p.begin(), p.end(), kk.begin(), kk.end()))
                continue;
            auto [sec_idx, t] = data.locate_section(p, kk);
            const auto& sec = data.sections()[static_cast<std::size_t>(sec_idx)];
            CHECK(conj_subgroup(*a5, p, t) == sec.P);
            CHECK(conj_subgroup(*a5, kk, t) == sec.K);
            CHECK(sec.quotient->order() == 3);
        }
    }
}

TEST_CASE("iso_test is an equivalence on small groups") {
    std::vector<GroupPtr> groups{trivial_group(),      cyclic_group(4),  klein_four_group(), cyclic_group(6),
                                 symmetric_group(3),   dihedral_group(8), quaternion_group(), cyclic_group(8),
                                 alternating_group(4), cyclic_group(12)};
    for (const auto& g : groups)
        CHECK(iso_test(*g, *g).has_value());
    for (std::size_t i = 0; i < groups.size(); ++i)
        for (std::size_t j = 0; j < groups.size(); ++j) {
            bool ij = iso_test(*groups[i], *groups[j]).has_value();
            bool ji = iso_test(*groups[j], *groups[i]).has_value();
            CHECK(ij == ji);
            if (i != j && groups[i]->order() == groups[j]->order())
                CHECK_FALSE(ij);  // corpus has pairwise non-isomorphic same-order entries
        }
    // an isomorphism is a homomorphism on the nose
    auto c6a = cyclic_group(6);
    auto c6b = direct_product(cyclic_group(2), cyclic_group(3), 10);
    auto phi = iso_test(*c6a, *c6b);
    REQUIRE(phi.has_value());
    for (std::size_t x = 0; x < 6; ++x)
        for (std::size_t y = 0; y < 6; ++y)
            CHECK((*phi)[static_cast<std::size_t>(c6a->mul(static_cast<int>(x), static_cast<int>(y)))] ==
                  c6b->mul((*phi)[x], (*phi)[y]));
}

TEST_CASE("canonical table keys agree exactly with isomorphism") {
    std::vector<GroupPtr> order8{cyclic_group(8), direct_product(cyclic_group(2), cyclic_group(4), 10),
                                 direct_product(direct_product(cyclic_group(2), cyclic_group(2), 10),
                                                cyclic_group(2), 10),
                                 dihedral_group(8), quaternion_group()};
    for (std::size_t i = 0; i < order8.size(); ++i)
        for (std::size_t j = 0; j < order8.size(); ++j)
            CHECK((canonical_table_key(*order8[i]) == canonical_table_key(*order8[j])) == (i == j));
    // invariance under a different realization
    auto d8_again = PermGroup::closure({Perm::from_cycles("(1 2 3 4)(5 6)"), Perm::from_cycles("(1 3)")}, 16);
    CHECK(d8_again->order() == 8);
    CHECK(canonical_table_key(*d8_again) == canonical_table_key(*dihedral_group(8)));
}

TEST_CASE("automorphism and out groups of the paper's small groups") {
    auto check = [](const GroupPtr& g, std::size_t aut, std::size_t out) {
        OutGroup og = out_group(g);
        CHECK(og.aut_order == aut);
        CHECK(og.order() == out);
        // |Out| * |Inn| = |Aut| and Inn = H / Z(H)
        CHECK(og.order() * og.inn_order == og.aut_order);
        CHECK(og.inn_order == g->order() / center(*g).size());
        // the table is a group table with identity 0
        for (std::size_t i = 0; i < og.order(); ++i) {
            CHECK(og.table[0][i] == static_cast<int>(i));
            CHECK(og.table[i][0] == static_cast<int>(i));
            CHECK(og.table[static_cast<std::size_t>(og.inverse[i])][i] == 0);
        }
        return og;
    };
    check(cyclic_group(2), 1, 1);
    check(cyclic_group(3), 2, 2);
    OutGroup v4 = check(klein_four_group(), 6, 6);
    CHECK(group_name(*out_as_perm_group(v4)) == "S3");
    // class_of sends representatives to themselves and inner maps to 0
    for (std::size_t t = 0; t < v4.order(); ++t)
        CHECK(v4.class_of(v4.out_elements[t]) == static_cast<int>(t));
    CHECK(v4.class_of(ElementMap{0, 1, 2, 3}) == 0);
    check(alternating_group(4), 24, 2);
    check(cyclic_group(5), 4, 4);
    check(symmetric_group(3), 6, 1);
    check(dihedral_group(10), 20, 2);
    check(alternating_group(5), 120, 2);
}
