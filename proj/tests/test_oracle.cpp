#include <doctest.h>

#include <algorithm>
#include <set>

#include "centralaut/builtins.hpp"
#include "centralaut/endomat.hpp"
#include "centralaut/error.hpp"
#include "centralaut/oracle.hpp"

using namespace centralaut;

namespace {

GroupMap compose_maps(const GroupMap& f, const GroupMap& g) {
    GroupMap out;
    out.image.resize(f.image.size());
    for (std::size_t i = 0; i < f.image.size(); ++i) out.image[i] = f.image[g.image[i]];
    return out;
}

GroupMap invert_map(const GroupMap& f) {
    GroupMap out;
    out.image.resize(f.image.size());
    for (std::size_t i = 0; i < f.image.size(); ++i) out.image[f.image[i]] = static_cast<std::uint32_t>(i);
    return out;
}

} // namespace

TEST_CASE("table validation") {
    // a latin square that is not associative must be rejected
    std::vector<std::uint32_t> rps = {0, 1, 2, 1, 2, 0, 2, 0, 1};
    CHECK_NOTHROW(TableGroup(rps, 3));  // this one is Z/3, fine
    std::vector<std::uint32_t> broken = {0, 1, 2, 1, 0, 2, 2, 0, 1};
    CHECK_THROWS_AS(TableGroup(broken, 3), Error);

    TableGroup q8 = quaternion8_table();
    CHECK(q8.order() == 8);
    CHECK(q8.element_order(1) == 2);  // -1
    CHECK(q8.element_order(2) == 4);  // i

    TableGroup d8 = dihedral_table(4);
    CHECK(d8.order() == 8);
    TableGroup m27 = modular_table(3);
    CHECK(m27.order() == 27);
    CHECK(m27.element_order(3) == 9);  // a
}

TEST_CASE("brute-force automorphism counts") {
    {
        TableGroup t = table_from_abelian(AbelianPGroup(3, {2}));
        auto autos = brute_aut(t);
        CHECK(autos.size() == 6);
        CHECK(Int(autos.size()) == aut_order(AbelianPGroup(3, {2})));
    }
    {
        TableGroup t = table_from_abelian(AbelianPGroup(3, {1, 1}));
        CHECK(brute_aut_count(t) == Int(48));
    }
    {
        auto autos = brute_aut(quaternion8_table());
        CHECK(autos.size() == 24);
        // every listed map really is an automorphism
        TableGroup t = quaternion8_table();
        for (const auto& f : autos)
            for (std::uint32_t a = 0; a < t.order(); ++a)
                for (std::uint32_t b = 0; b < t.order(); ++b)
                    REQUIRE(f.image[t.mul(a, b)] == t.mul(f.image[a], f.image[b]));
    }
}

TEST_CASE("formula agreement on assorted abelian tables") {
    for (auto [p, exps] : std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>>{
             {2, {1, 2}}, {2, {2, 2}}, {5, {1, 1}}, {3, {1, 2}}, {2, {1, 1, 2}}}) {
        AbelianPGroup g(p, exps);
        TableGroup t = table_from_abelian(g);
        CHECK(brute_aut_count(t) == aut_order(g));
    }
}

TEST_CASE("parallel search agrees with the sequential one") {
    TableGroup t = table_from_abelian(AbelianPGroup(3, {1, 1}));
    auto seq = brute_aut(t, {750, 1});
    auto par = brute_aut(t, {750, 2});
    std::sort(seq.begin(), seq.end());
    std::sort(par.begin(), par.end());
    CHECK(seq == par);
    CHECK(brute_aut_count(quaternion8_table(), {750, 2}) == Int(24));
}

TEST_CASE("center and inner automorphisms") {
    {
        TableGroup t = table_from_abelian(AbelianPGroup(2, {1, 2}));
        CenterInner ci = center_and_inner(t);
        CHECK(ci.center.size() == 8);
        CHECK(ci.inner.size() == 1);
    }
    {
        CenterInner ci = center_and_inner(quaternion8_table());
        CHECK(ci.center.size() == 2);
        CHECK(ci.inner.size() == 4);
    }
    {
        CentralExtensionGroup g = make_builtin_extension("extA");
        ExtensionTable et = table_from_extension(g);
        CenterInner ci = center_and_inner(et.table);
        CHECK(ci.center.size() == 27);
        CHECK(ci.inner.size() == 9);
    }
}

TEST_CASE("inner maps form a normal subgroup of the automorphism list") {
    for (const char* name : {"q8", "heisenberg27"}) {
        TableGroup t = make_builtin_table(name);
        CenterInner ci = center_and_inner(t);
        std::set<GroupMap> inner(ci.inner.begin(), ci.inner.end());
        auto autos = brute_aut(t);
        for (const auto& a : autos) {
            GroupMap ainv = invert_map(a);
            for (const auto& i : ci.inner)
                CHECK(inner.count(compose_maps(a, compose_maps(i, ainv))) == 1);
        }
    }
}

TEST_CASE("p-part of the outer automorphism group") {
    CHECK(out_p_part(table_from_abelian(AbelianPGroup(3, {2})), 3) == Int(3));
    CHECK(out_p_part(quaternion8_table(), 2) == Int(2));  // |Out| = 24/4 = 6
    CHECK(out_p_part(table_from_abelian(AbelianPGroup(3, {1, 1})), 3) == Int(3));  // 48
}

TEST_CASE("divisibility verdicts") {
    {
        ConjectureVerdict v = conjecture_verdict(make_builtin_table("cyclic27"), 3);
        CHECK_FALSE(v.applicable);
        CHECK(v.cyclic);
    }
    {
        ConjectureVerdict v = conjecture_verdict(make_builtin_table("heisenberg27"), 3);
        CHECK(v.applicable);
        CHECK(v.holds);
    }
    {
        ConjectureVerdict v = conjecture_verdict(make_builtin_table("modular27"), 3);
        CHECK(v.applicable);
        CHECK(v.holds);
    }
    {
        ConjectureVerdict v = conjecture_verdict(make_builtin_table("q8"), 2);
        CHECK(v.applicable);
        CHECK(v.holds);
        CHECK(v.aut_order == Int(24));
    }
    CHECK_THROWS_AS(conjecture_verdict(table_from_abelian(AbelianPGroup(3, {1, 1})), 2), Error);
}

TEST_CASE("lifts with nonzero chi land in the brute-forced automorphism list") {
    CentralExtensionGroup g = make_builtin_extension("extB");
    REQUIRE(is_p_central(g));
    REQUIRE(is_p2_abelian(g));
    auto family = lift_family(g);
    REQUIRE(family.size() == 3);
    bool some_nonzero_chi = false;
    for (const auto& gamma : family)
        for (const auto& v : gamma.chi)
            if (v != g.z().zero()) some_nonzero_chi = true;
    CHECK(some_nonzero_chi);

    ExtensionTable et = table_from_extension(g);
    auto autos = brute_aut(et.table);
    std::set<GroupMap> aut_set(autos.begin(), autos.end());
    for (const auto& gamma : family) CHECK(aut_set.count(map_from_lift(g, gamma)) == 1);
}

TEST_CASE("lifted automorphisms of an abelian group appear in the brute list") {
    AbelianPGroup z(3, {2, 3});
    TableGroup t = table_from_abelian(z);
    auto autos = brute_aut(t);
    std::set<GroupMap> aut_set(autos.begin(), autos.end());
    std::uint64_t members = 0;
    enumerate_liftable(z, [&](const EndoMatrix& m) {
        ++members;
        CHECK(aut_set.count(map_from_endo(z, m)) == 1);
    });
    CHECK(Int(members) == liftable_count(z));
}

TEST_CASE("twisting by a coboundary does not change the automorphism count") {
    // extA and extB present the same group with different cocycles
    Int a = brute_aut_count(make_builtin_table("extA"));
    Int b = brute_aut_count(make_builtin_table("extB"));
    CHECK(a == b);
    CHECK(a % Int(243) == 0);  // |G| divides |Aut(G)| here
}

TEST_CASE("bound checks") {
    CHECK_THROWS_AS(table_from_abelian(AbelianPGroup(2, {10})), Error);
    TableGroup q8 = quaternion8_table();
    CHECK_THROWS_AS(brute_aut(q8, {4, 1}), Error);
}

TEST_CASE("conjecture corpus is the non-cyclic p^3..p^5 slice of the registry") {
    auto names = conjecture_corpus();
    CHECK(std::find(names.begin(), names.end(), "q8") != names.end());
    CHECK(std::find(names.begin(), names.end(), "dihedral8") != names.end());
    CHECK(std::find(names.begin(), names.end(), "heisenberg27") != names.end());
    CHECK(std::find(names.begin(), names.end(), "modular27") != names.end());
    CHECK(std::find(names.begin(), names.end(), "extA") != names.end());
    CHECK(std::find(names.begin(), names.end(), "cyclic27") == names.end());
    for (const auto& n : names) {
        TableGroup t = make_builtin_table(n);
        CHECK(t.order() >= 8);
        CHECK(t.order() <= 729);
    }
}
