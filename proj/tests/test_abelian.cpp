#include <doctest.h>

#include "centralaut/abelian.hpp"
#include "centralaut/error.hpp"

using namespace centralaut;

TEST_CASE("construction validates and canonicalizes") {
    AbelianPGroup g(3, {3, 3, 3});
    CHECK(g.order() == Int(19683));

    CHECK_THROWS_AS(AbelianPGroup(4, {1}), Error);
    try {
        AbelianPGroup(4, {1});
    } catch (const Error& e) {
        CHECK(e.code() == errc::non_prime);
    }

    AbelianPGroup sorted(3, {2, 1});
    CHECK(sorted.exponents() == std::vector<std::uint32_t>{1, 2});
    CHECK(sorted.order() == Int(27));

    CHECK_THROWS_AS(AbelianPGroup(3, {}), Error);
    CHECK_THROWS_AS(AbelianPGroup(3, {0}), Error);
}

TEST_CASE("element arithmetic") {
    AbelianPGroup g(3, {2});
    CHECK(g.add({Int(5)}, {Int(6)}) == Coords{Int(2)});  // 11 mod 9

    AbelianPGroup g2(3, {1, 2});
    Coords a{Int(2), Int(8)};
    Coords b{Int(1), Int(1)};
    CHECK(g2.add(a, b) == g2.zero());
    CHECK(g2.add(a, g2.zero()) == a);
    CHECK_THROWS_AS(g2.add(a, {Int(1)}), Error);

    CHECK(g2.element_order(g2.basis(1)) == Int(9));
    CHECK(g2.element_order(g2.zero()) == Int(1));
    CHECK(g.scale(Int(9), {Int(1)}) == Coords{Int(0)});
    CHECK(g2.neg({Int(1), Int(4)}) == Coords{Int(2), Int(5)});
}

TEST_CASE("index profile matches the defining formulas") {
    {
        IndexProfile pr = index_profile(AbelianPGroup(3, {1, 1, 2}));
        CHECK(pr.d == std::vector<std::uint32_t>{2, 2, 3});
        CHECK(pr.c == std::vector<std::uint32_t>{1, 1, 3});
        CHECK(pr.e_prime == std::vector<std::uint32_t>{1, 2});
        CHECK(pr.C == std::vector<std::uint32_t>{1, 3, 4});
        CHECK(pr.D == std::vector<std::uint32_t>{2, 3});
        CHECK(pr.l == 2);
    }
    {
        IndexProfile pr = index_profile(AbelianPGroup(5, {2}));
        CHECK(pr.d == std::vector<std::uint32_t>{1});
        CHECK(pr.c == std::vector<std::uint32_t>{1});
        CHECK(pr.e_prime == std::vector<std::uint32_t>{2});
        CHECK(pr.C == std::vector<std::uint32_t>{1, 2});
        CHECK(pr.D == std::vector<std::uint32_t>{1});
        CHECK(pr.l == 1);
    }
    {
        IndexProfile pr = index_profile(AbelianPGroup(3, {3, 3, 3}));
        CHECK(pr.d == std::vector<std::uint32_t>{3, 3, 3});
        CHECK(pr.c == std::vector<std::uint32_t>{1, 1, 1});
        CHECK(pr.e_prime == std::vector<std::uint32_t>{3});
        CHECK(pr.C == std::vector<std::uint32_t>{1, 4});
        CHECK(pr.D == std::vector<std::uint32_t>{3});
        CHECK(pr.l == 1);
    }
}

TEST_CASE("profile invariants over assorted groups") {
    const std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>> cases = {
        {2, {1}},       {2, {1, 1, 2}},    {2, {2, 2, 3, 5}}, {3, {1, 2, 2, 4, 4, 4}},
        {5, {1, 1, 1}}, {7, {2, 3, 3, 3}}, {3, {1, 1, 1, 1}}, {2, {4}},
    };
    for (const auto& [p, exps] : cases) {
        AbelianPGroup g(p, exps);
        IndexProfile pr = index_profile(g);
        const std::uint32_t n = static_cast<std::uint32_t>(g.rank());

        // c_{C_i} = C_i and d_{C_i} = D_i at every block start
        for (std::uint32_t i = 0; i < pr.l; ++i) {
            CHECK(pr.c[pr.C[i] - 1] == pr.C[i]);
            CHECK(pr.d[pr.C[i] - 1] == pr.D[i]);
        }
        // blocks partition the index set
        std::uint32_t covered = 0;
        for (std::uint32_t i = 0; i < pr.l; ++i) covered += pr.C[i + 1] - pr.C[i];
        CHECK(covered == n);
        CHECK(pr.C[pr.l] == n + 1);

        // the chain: within a block all c equal, and strictly larger at the
        // next block start
        std::uint32_t k = 1;
        while (k <= n) {
            std::uint32_t block_end = pr.d[k - 1];
            for (std::uint32_t m = k; m <= block_end; ++m) CHECK(pr.c[m - 1] == pr.c[k - 1]);
            if (block_end < n) CHECK(pr.c[block_end] > pr.c[k - 1]);
            k = block_end + 1;
        }
        for (std::uint32_t m = 0; m < n; ++m) {
            CHECK(pr.d[m] >= m + 1);
            CHECK(pr.c[m] <= m + 1);
        }
    }
}

TEST_CASE("additive group laws, exhaustively on small groups") {
    AbelianPGroup g(3, {1, 2});  // order 27
    const std::uint64_t m = g.order_u64();
    for (std::uint64_t i = 0; i < m; ++i)
        for (std::uint64_t j = 0; j < m; ++j) {
            Coords a = g.element_at(i), b = g.element_at(j);
            CHECK(g.add(a, b) == g.add(b, a));
            for (std::uint64_t k = 0; k < m; ++k) {
                Coords c = g.element_at(k);
                CHECK(g.add(g.add(a, b), c) == g.add(a, g.add(b, c)));
            }
        }
    for (std::uint64_t i = 0; i < m; ++i) {
        Int ord = g.element_order(g.element_at(i));
        CHECK(pow_int(Int(3), 2) % ord == 0);  // divides p^{e_n}
        CHECK(g.scale(ord, g.element_at(i)) == g.zero());
        if (ord > 1) CHECK(g.scale(ord / 3, g.element_at(i)) != g.zero());
    }
}

TEST_CASE("index codec round-trips") {
    AbelianPGroup g(2, {1, 2, 3});  // order 64
    for (std::uint64_t i = 0; i < g.order_u64(); ++i)
        CHECK(g.index_of(g.element_at(i)) == i);
}
