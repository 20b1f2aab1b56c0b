#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "centralaut/endomat.hpp"
#include "centralaut/error.hpp"

using namespace centralaut;

namespace {

// Set-map of a matrix, computed by plain modular arithmetic (kept independent
// of apply()).
std::vector<std::uint64_t> map_table_direct(const AbelianPGroup& g,
                                            const std::vector<Int>& entries) {
    const std::size_t n = g.rank();
    std::vector<std::uint64_t> table(g.order_u64());
    for (std::uint64_t idx = 0; idx < g.order_u64(); ++idx) {
        Coords a = g.element_at(idx);
        Coords out(n);
        for (std::size_t i = 0; i < n; ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += entries[i * n + j] * a[j];
            out[i] = mod_floor(acc, g.modulus(i));
        }
        table[idx] = g.index_of(out);
    }
    return table;
}

// Additive extension of generator images to a full map table.
std::vector<std::uint64_t> map_table_from_images(const AbelianPGroup& g,
                                                 const std::vector<Coords>& images) {
    std::vector<std::uint64_t> table(g.order_u64());
    for (std::uint64_t idx = 0; idx < g.order_u64(); ++idx) {
        Coords a = g.element_at(idx);
        Coords acc = g.zero();
        for (std::size_t j = 0; j < g.rank(); ++j) acc = g.add(acc, g.scale(a[j], images[j]));
        table[idx] = g.index_of(acc);
    }
    return table;
}

bool is_permutation(const std::vector<std::uint64_t>& table) {
    std::vector<bool> seen(table.size(), false);
    for (auto v : table) {
        if (v >= table.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

} // namespace

TEST_CASE("membership divisibility pattern") {
    AbelianPGroup g(3, {1, 2});
    CHECK(represents_endomorphism(g, {Int(1), Int(0), Int(0), Int(1)}));
    CHECK_FALSE(represents_endomorphism(g, {Int(1), Int(0), Int(1), Int(1)}));
    CHECK(represents_endomorphism(g, {Int(1), Int(0), Int(3), Int(1)}));
}

TEST_CASE("canonical residues") {
    {
        AbelianPGroup g(3, {2});
        CHECK(canonicalize(g, {Int(10)}).entries == std::vector<Int>{Int(1)});
    }
    {
        AbelianPGroup g(3, {1, 2});
        EndoMatrix m = canonicalize(g, {Int(1), Int(0), Int(9), Int(1)});
        CHECK(m.at(1, 0) == 0);
        CHECK_THROWS_AS(canonicalize(g, {Int(1), Int(0), Int(1), Int(1)}), Error);
    }
    {
        AbelianPGroup g(3, {1, 1});
        EndoMatrix m = canonicalize(g, {Int(4), Int(3), Int(3), Int(4)});
        CHECK(m.entries == std::vector<Int>{Int(1), Int(0), Int(0), Int(1)});
    }
}

TEST_CASE("two raws give the same class iff they differ by row moduli") {
    AbelianPGroup g(3, {1, 2});
    std::vector<Int> raw = {Int(2), Int(1), Int(3), Int(7)};
    // shifting entry (i, j) by p^{e_i} never changes the class
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            std::vector<Int> shifted = raw;
            shifted[i * 2 + j] += g.modulus(i);
            CHECK(canonicalize(g, shifted) == canonicalize(g, raw));
        }
    // any smaller shift that keeps the divisibility pattern does change it
    std::vector<Int> bumped = raw;
    bumped[3] += 3;
    CHECK_FALSE(canonicalize(g, bumped) == canonicalize(g, raw));
    // and equal classes induce equal maps while distinct classes do not
    CHECK(map_table_direct(g, raw) == map_table_direct(g, {Int(2), Int(1), Int(12), Int(16)}));
    CHECK_FALSE(map_table_direct(g, raw) == map_table_direct(g, bumped));
}

TEST_CASE("matrix action on elements") {
    {
        AbelianPGroup g(3, {1, 2});
        EndoMatrix m = canonicalize(g, {Int(1), Int(0), Int(3), Int(1)});
        CHECK(m.apply({Int(1), Int(0)}) == Coords{Int(1), Int(3)});
        EndoMatrix id = identity_endo(g);
        for (std::uint64_t i = 0; i < g.order_u64(); ++i)
            CHECK(id.apply(g.element_at(i)) == g.element_at(i));
    }
    {
        // scalar 10 on Z/9 acts as z -> z^10, i.e. ten-fold addition
        AbelianPGroup g(3, {2});
        EndoMatrix m = canonicalize(g, {Int(10)});
        Coords a{Int(4)};
        CHECK(m.apply(a) == Coords{Int(4)});
        Coords acc = g.zero();
        for (int k = 0; k < 10; ++k) acc = g.add(acc, a);
        CHECK(m.apply(a) == acc);
    }
}

TEST_CASE("composition") {
    AbelianPGroup g(3, {1, 1});
    EndoMatrix swap = canonicalize(g, {Int(0), Int(1), Int(1), Int(0)});
    CHECK(compose(swap, swap) == identity_endo(g));
    EndoMatrix m = canonicalize(g, {Int(1), Int(2), Int(0), Int(1)});
    CHECK(compose(m, identity_endo(g)) == m);

    // composition agrees with applying the maps in sequence
    AbelianPGroup h(2, {1, 2});
    std::vector<EndoMatrix> all;
    enumerate_endos(h, [&](const EndoMatrix& e) { all.push_back(e); });
    for (const auto& m1 : all)
        for (const auto& m2 : all) {
            EndoMatrix c = compose(m1, m2);
            for (std::uint64_t i = 0; i < h.order_u64(); ++i) {
                Coords a = h.element_at(i);
                CHECK(c.apply(a) == m1.apply(m2.apply(a)));
            }
        }
}

TEST_CASE("automorphism criterion equals bijectivity") {
    {
        AbelianPGroup g(3, {1, 1});
        CHECK(is_automorphism(identity_endo(g)));
        CHECK_FALSE(is_automorphism(canonicalize(g, {Int(1), Int(1), Int(1), Int(1)})));
    }
    {
        AbelianPGroup g(2, {1, 2});
        EndoMatrix m = canonicalize(g, {Int(1), Int(1), Int(0), Int(1)});
        CHECK(is_automorphism(m));
        CHECK(is_permutation(map_table_direct(g, m.entries)));
        // criterion matches bijectivity across every endomorphism class
        enumerate_endos(g, [&](const EndoMatrix& e) {
            CHECK(is_automorphism(e) == is_permutation(map_table_direct(g, e.entries)));
        });
    }
}

TEST_CASE("automorphism count formula against independent oracles") {
    {
        // units of Z/25
        std::uint64_t units = 0;
        for (std::uint64_t k = 1; k < 25; ++k)
            if (k % 5 != 0) ++units;
        CHECK(units == 20);
        CHECK(aut_order(AbelianPGroup(5, {2})) == Int(20));
    }
    {
        // invertible 2x2 matrices over F_3 by brute force
        std::uint64_t invertible = 0;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c)
                    for (int d = 0; d < 3; ++d)
                        if ((a * d - b * c) % 3 != 0) ++invertible;
        CHECK(invertible == 48);
        CHECK(aut_order(AbelianPGroup(3, {1, 1})) == Int(48));
    }
    {
        // bijective residue matrices on Z/2 x Z/4
        AbelianPGroup g(2, {1, 2});
        std::uint64_t bijective = 0;
        enumerate_endos(g, [&](const EndoMatrix& m) {
            if (is_permutation(map_table_direct(g, m.entries))) ++bijective;
        });
        CHECK(bijective == 8);
        CHECK(aut_order(g) == Int(8));
    }
    CHECK(aut_order(AbelianPGroup(3, {1, 2})) == Int(108));
}

TEST_CASE("enumeration yields each class once and counts match") {
    {
        AbelianPGroup g(3, {1});
        std::uint64_t endos = 0, autos = 0;
        enumerate_endos(g, [&](const EndoMatrix&) { ++endos; });
        enumerate_autos(g, [&](const EndoMatrix&) { ++autos; });
        CHECK(endos == 3);
        CHECK(autos == 2);
    }
    {
        AbelianPGroup g(2, {1, 1});
        std::uint64_t endos = 0, autos = 0;
        std::set<std::vector<Int>> distinct;
        enumerate_endos(g, [&](const EndoMatrix& m) {
            ++endos;
            distinct.insert(m.entries);
        });
        enumerate_autos(g, [&](const EndoMatrix&) { ++autos; });
        CHECK(endos == 16);
        CHECK(distinct.size() == 16);
        CHECK(autos == 6);
    }
    {
        AbelianPGroup g(3, {1, 2});
        std::uint64_t autos = 0;
        enumerate_autos(g, [&](const EndoMatrix&) { ++autos; });
        CHECK(Int(autos) == aut_order(g));
        CHECK(autos == 108);
    }
    CHECK_THROWS_AS(enumerate_endos(AbelianPGroup(2, {6, 6, 6}), [](const EndoMatrix&) {}),
                    Error);
}

TEST_CASE("matrix model is a bijection onto the set-map endomorphisms") {
    // brute force over generator images: every additive map arises from
    // exactly one canonical matrix
    for (auto [p, exps] : std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>>{
             {2, {1, 2}}, {3, {1, 1}}, {2, {1, 1, 1}}, {2, {3}}}) {
        AbelianPGroup g(p, exps);
        std::set<std::vector<std::uint64_t>> from_matrices;
        enumerate_endos(g, [&](const EndoMatrix& m) {
            from_matrices.insert(map_table_direct(g, m.entries));
        });

        // enumerate valid generator images: image of z_j must be killed by p^{e_j}
        std::vector<std::vector<Coords>> choices(g.rank());
        for (std::size_t j = 0; j < g.rank(); ++j)
            for (std::uint64_t idx = 0; idx < g.order_u64(); ++idx) {
                Coords cand = g.element_at(idx);
                if (g.scale(g.modulus(j), cand) == g.zero()) choices[j].push_back(cand);
            }
        std::set<std::vector<std::uint64_t>> from_images;
        std::vector<std::size_t> pick(g.rank(), 0);
        for (;;) {
            std::vector<Coords> images;
            for (std::size_t j = 0; j < g.rank(); ++j) images.push_back(choices[j][pick[j]]);
            from_images.insert(map_table_from_images(g, images));
            std::size_t j = 0;
            while (j < g.rank() && ++pick[j] == choices[j].size()) pick[j++] = 0;
            if (j == g.rank()) break;
        }
        CHECK(from_matrices == from_images);
        CHECK(Int(from_matrices.size()) == endo_class_count(g));
    }
}

TEST_CASE("lifting congruences") {
    {
        AbelianPGroup g(3, {3});
        CHECK(is_liftable(identity_endo(g)));
        CHECK(is_liftable(canonicalize(g, {Int(10)})));  // 1 + p^2
        CHECK_FALSE(is_liftable(canonicalize(g, {Int(4)})));
    }
    {
        AbelianPGroup g(3, {2, 2});
        EndoMatrix m = canonicalize(g, {Int(1), Int(3), Int(0), Int(1)});
        CHECK_FALSE(is_liftable(m));
    }
}

TEST_CASE("liftable count formula vs enumeration") {
    {
        AbelianPGroup g(3, {2, 2});
        CHECK(liftable_count(g) == Int(1));
        std::uint64_t found = 0;
        enumerate_endos(g, [&](const EndoMatrix& m) {
            if (is_liftable(m)) ++found;
        });
        CHECK(found == 1);
    }
    {
        AbelianPGroup g(3, {3});
        CHECK(liftable_count(g) == Int(3));
        std::vector<Int> values;
        enumerate_endos(g, [&](const EndoMatrix& m) {
            if (is_liftable(m)) values.push_back(m.at(0, 0));
        });
        CHECK(values == std::vector<Int>{Int(1), Int(10), Int(19)});
    }
    {
        AbelianPGroup g(3, {3, 3, 3});
        CHECK(liftable_count(g) == Int(19683));
        std::uint64_t direct = 0;
        enumerate_liftable(g, [&](const EndoMatrix& m) {
            CHECK(is_liftable(m));
            ++direct;
        });
        CHECK(direct == 19683);
    }
    CHECK_THROWS_AS(liftable_count(AbelianPGroup(3, {1, 1})), Error);
}

TEST_CASE("lower bound for the liftable count") {
    CHECK(liftable_count_lower_bound(AbelianPGroup(3, {3, 3, 3})) == Int(19683));
    CHECK(liftable_count_lower_bound(AbelianPGroup(3, {3, 3, 3, 3})) ==
          pow_int(Int(3), 16));
    CHECK_THROWS_AS(liftable_count_lower_bound(AbelianPGroup(3, {2, 2, 2})), Error);
    try {
        liftable_count_lower_bound(AbelianPGroup(3, {2, 2}));
    } catch (const Error& e) {
        CHECK(e.code() == errc::hypothesis_violation);
        CHECK(std::string(e.what()).find("n >= 3") != std::string::npos);
        CHECK(std::string(e.what()).find("e_1 >= 3") != std::string::npos);
    }

    // monotone: bound never exceeds the exact count (sampled grid)
    for (std::uint64_t p : {3ull, 5ull})
        for (std::uint32_t n = 3; n <= 5; ++n)
            for (std::uint32_t e1 = 3; e1 <= 4; ++e1) {
                std::vector<std::uint32_t> exps(n, e1);
                exps.back() = e1 + 1;
                AbelianPGroup g(p, exps);
                CHECK(liftable_count(g) >= liftable_count_lower_bound(g));
            }
}

TEST_CASE("diagonal unit decomposition") {
    {
        AbelianPGroup g(3, {3});
        DiagonalDecomposition d = diagonal_unit_decomposition(canonicalize(g, {Int(10)}));
        CHECK(d.s == std::vector<Int>{Int(1)});
        CHECK(d.r == std::vector<std::uint32_t>{2});
    }
    {
        AbelianPGroup g(3, {3});
        DiagonalDecomposition d = diagonal_unit_decomposition(identity_endo(g));
        CHECK(d.s == std::vector<Int>{Int(0)});
        CHECK(d.r == std::vector<std::uint32_t>{3});
    }
    {
        AbelianPGroup g(3, {4});
        DiagonalDecomposition d = diagonal_unit_decomposition(canonicalize(g, {Int(28)}));
        CHECK(d.s == std::vector<Int>{Int(1)});
        CHECK(d.r == std::vector<std::uint32_t>{3});
    }
    AbelianPGroup g(3, {3});
    CHECK_THROWS_AS(diagonal_unit_decomposition(canonicalize(g, {Int(4)})), Error);

    // reconstruction across an enumerated family
    AbelianPGroup h(3, {2, 3});
    enumerate_liftable(h, [&](const EndoMatrix& m) {
        DiagonalDecomposition d = diagonal_unit_decomposition(m);
        for (std::size_t i = 0; i < h.rank(); ++i) {
            CHECK(d.r[i] >= 2);
            Int rebuilt = mod_floor(Int(1) + d.s[i] * pow_int(h.p(), d.r[i]), h.modulus(i));
            CHECK(rebuilt == m.at(i, i));
        }
    });
}

TEST_CASE("closure of the liftable set under composition") {
    {
        AbelianPGroup g(3, {2, 3});
        std::vector<EndoMatrix> all;
        enumerate_liftable(g, [&](const EndoMatrix& m) { all.push_back(m); });
        CHECK(Int(all.size()) == liftable_count(g));
        bool has_identity = false;
        for (const auto& m : all) has_identity = has_identity || m == identity_endo(g);
        CHECK(has_identity);
        for (const auto& m1 : all)
            for (const auto& m2 : all) CHECK(is_liftable(compose(m1, m2)));

        // every member has p-power order under composition
        for (const auto& m : all) {
            EndoMatrix acc = m;
            int steps = 1;
            while (!(acc == identity_endo(g))) {
                acc = compose(acc, m);
                ++steps;
                REQUIRE(steps <= 27);
            }
            CHECK(27 % steps == 0);
        }
    }
    {
        // randomized closure trials on larger parameters
        std::mt19937_64 rng(42);
        for (auto [p, exps] : std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>>{
                 {3, {3, 3, 3}}, {5, {3, 4}}}) {
            AbelianPGroup g(p, exps);
            for (int trial = 0; trial < 1000; ++trial) {
                EndoMatrix a = random_liftable(g, rng);
                EndoMatrix b = random_liftable(g, rng);
                REQUIRE(is_liftable(a));
                REQUIRE(is_liftable(b));
                CHECK(is_liftable(compose(a, b)));
            }
        }
    }
}

TEST_CASE("composition is associative and acts on elements") {
    AbelianPGroup g(3, {1, 2});
    std::vector<EndoMatrix> some;
    enumerate_autos(g, [&](const EndoMatrix& m) {
        if (some.size() < 12) some.push_back(m);
    });
    for (const auto& a : some)
        for (const auto& b : some)
            for (const auto& c : some)
                CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
}
