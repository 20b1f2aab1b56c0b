#include "centralaut/builtins.hpp"

#include <map>

#include "centralaut/error.hpp"

namespace centralaut {

namespace {

TableGroup abelian_table(std::uint64_t p, std::vector<std::uint32_t> exps) {
    return table_from_abelian(AbelianPGroup(p, std::move(exps)));
}

CocycleTable zero_cocycle(const QGroup& q, const AbelianPGroup& z) {
    CocycleTable mu;
    mu.values.assign(static_cast<std::size_t>(q.order()) * q.order(), z.zero());
    return mu;
}

// Order-243 extension: Q = (Z/3)^2, Z = Z/27, mu(x, y) = 9 x_2 y_1.
CentralExtensionGroup ext_a() {
    QGroup q = QGroup::elementary(3, 2);
    AbelianPGroup z(3, {3});
    CocycleTable mu = bilinear_cocycle(q, z, 2, 9, {0, 0, 1, 0});
    return CentralExtensionGroup(std::move(q), std::move(z), std::move(mu));
}

// Same group up to relabeling, but with a coboundary twist so that the
// transversal cubes t(x)^3 are nontrivial and some cocycle values are prime
// to p (the twist table must not be affine in the digits for that).
CentralExtensionGroup ext_b() {
    QGroup q = QGroup::elementary(3, 2);
    AbelianPGroup z(3, {3});
    CocycleTable mu = bilinear_cocycle(q, z, 2, 9, {0, 0, 1, 0});
    static const int twist[9] = {0, 1, 5, 2, 7, 3, 8, 4, 6};
    std::vector<Coords> f;
    for (std::uint32_t x = 0; x < q.order(); ++x) f.push_back(Coords{Int(twist[x])});
    CocycleTable twisted = add_coboundary(q, z, mu, f);
    return CentralExtensionGroup(std::move(q), std::move(z), std::move(twisted));
}

// Rank-2 center Z/9 x Z/27 with a twist in both coordinates; order 3^7.
CentralExtensionGroup ext_c() {
    QGroup q = QGroup::elementary(3, 2);
    AbelianPGroup z(3, {2, 3});
    CocycleTable mu = bilinear_cocycle(q, z, 2, 9, {0, 0, 1, 0}, 1);
    static const int g_part[9] = {0, 1, 3, 8, 2, 7, 5, 6, 4};
    static const int h_part[9] = {0, 5, 11, 4, 22, 9, 17, 2, 13};
    std::vector<Coords> f;
    for (std::uint32_t x = 0; x < q.order(); ++x) f.push_back(Coords{Int(g_part[x]), Int(h_part[x])});
    CocycleTable twisted = add_coboundary(q, z, mu, f);
    return CentralExtensionGroup(std::move(q), std::move(z), std::move(twisted));
}

} // namespace

CentralExtensionGroup heisenberg_extension(std::uint32_t p) {
    QGroup q = QGroup::elementary(p, 2);
    AbelianPGroup z(p, {1});
    CocycleTable mu = bilinear_cocycle(q, z, 2, 1, {0, 0, 1, 0});
    return CentralExtensionGroup(std::move(q), std::move(z), std::move(mu));
}

TableGroup modular_table(std::uint32_t p) {
    const std::uint32_t p2 = p * p;
    const std::uint32_t m = p2 * p;
    // index of a^i b^j is i*p + j
    std::vector<std::uint32_t> conj(p);  // (1+p)^j mod p^2
    conj[0] = 1;
    for (std::uint32_t j = 1; j < p; ++j) conj[j] = conj[j - 1] * (1 + p) % p2;
    std::vector<std::uint32_t> t(static_cast<std::size_t>(m) * m);
    std::vector<std::string> labels(m);
    for (std::uint32_t i = 0; i < p2; ++i)
        for (std::uint32_t j = 0; j < p; ++j) {
            labels[i * p + j] = "a^" + std::to_string(i) + " b^" + std::to_string(j);
            for (std::uint32_t k = 0; k < p2; ++k)
                for (std::uint32_t l = 0; l < p; ++l) {
                    std::uint32_t ii = (i + k * conj[j]) % p2;
                    std::uint32_t jj = (j + l) % p;
                    t[static_cast<std::size_t>(i * p + j) * m + (k * p + l)] = ii * p + jj;
                }
        }
    return TableGroup(std::move(t), m, std::move(labels));
}

TableGroup dihedral_table(std::uint32_t m) {
    const std::uint32_t n = 2 * m;
    // index of r^a s^b is a*2 + b
    std::vector<std::uint32_t> t(static_cast<std::size_t>(n) * n);
    for (std::uint32_t a = 0; a < m; ++a)
        for (std::uint32_t b = 0; b < 2; ++b)
            for (std::uint32_t c = 0; c < m; ++c)
                for (std::uint32_t d = 0; d < 2; ++d) {
                    std::uint32_t aa = b == 0 ? (a + c) % m : (a + m - c) % m;
                    std::uint32_t bb = b ^ d;
                    t[static_cast<std::size_t>(a * 2 + b) * n + (c * 2 + d)] = aa * 2 + bb;
                }
    return TableGroup(std::move(t), n);
}

TableGroup quaternion8_table() {
    // elements u*2 + (negative?), units 0:1, 1:i, 2:j, 3:k
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    // sign table: i*i = -1, i*j = k, i*k = -j, j*i = -k, j*j = -1, j*k = i,
    // k*i = j, k*j = -i, k*k = -1
    std::vector<std::uint32_t> t(64);
    std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    for (std::uint32_t a = 0; a < 8; ++a)
        for (std::uint32_t b = 0; b < 8; ++b) {
            std::uint32_t ua = a / 2, ub = b / 2;
            int s = sign[ua][ub] * (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1);
            t[a * 8 + b] = unit[ua][ub] * 2 + (s < 0 ? 1 : 0);
        }
    return TableGroup(std::move(t), 8, std::move(labels));
}

const std::vector<BuiltinInfo>& builtin_table_list() {
    static const std::vector<BuiltinInfo> list = {
        {"cyclic8", "Z/8"},
        {"cyclic16", "Z/16"},
        {"cyclic27", "Z/27"},
        {"cyclic81", "Z/81"},
        {"cyclic125", "Z/125"},
        {"elemab8", "(Z/2)^3"},
        {"elemab16", "(Z/2)^4"},
        {"elemab27", "(Z/3)^3"},
        {"elemab125", "(Z/5)^3"},
        {"z2xz4", "Z/2 x Z/4"},
        {"z4xz4", "Z/4 x Z/4"},
        {"z2xz8", "Z/2 x Z/8"},
        {"z2xz2xz4", "Z/2 x Z/2 x Z/4"},
        {"z2xz16", "Z/2 x Z/16"},
        {"z4xz8", "Z/4 x Z/8"},
        {"z2xz4xz4", "Z/2 x Z/4 x Z/4"},
        {"z3xz9", "Z/3 x Z/9"},
        {"z3xz27", "Z/3 x Z/27"},
        {"z9xz9", "Z/9 x Z/9"},
        {"z3xz3xz9", "Z/3 x Z/3 x Z/9"},
        {"z5xz25", "Z/5 x Z/25"},
        {"heisenberg27", "extraspecial 3^3 of exponent 3"},
        {"heisenberg125", "extraspecial 5^3 of exponent 5"},
        {"modular27", "modular group of order 27"},
        {"modular125", "modular group of order 125"},
        {"q8", "quaternion group of order 8"},
        {"dihedral8", "dihedral group of order 8"},
        {"dihedral16", "dihedral group of order 16"},
        {"extA", "order-243 extension of (Z/3)^2 by Z/27, bilinear cocycle"},
        {"extB", "extA with a coboundary twist (nontrivial transversal cubes)"},
    };
    return list;
}

TableGroup make_builtin_table(const std::string& name) {
    if (name == "cyclic8") return abelian_table(2, {3});
    if (name == "cyclic16") return abelian_table(2, {4});
    if (name == "cyclic27") return abelian_table(3, {3});
    if (name == "cyclic81") return abelian_table(3, {4});
    if (name == "cyclic125") return abelian_table(5, {3});
    if (name == "elemab8") return abelian_table(2, {1, 1, 1});
    if (name == "elemab16") return abelian_table(2, {1, 1, 1, 1});
    if (name == "elemab27") return abelian_table(3, {1, 1, 1});
    if (name == "elemab125") return abelian_table(5, {1, 1, 1});
    if (name == "z2xz4") return abelian_table(2, {1, 2});
    if (name == "z4xz4") return abelian_table(2, {2, 2});
    if (name == "z2xz8") return abelian_table(2, {1, 3});
    if (name == "z2xz2xz4") return abelian_table(2, {1, 1, 2});
    if (name == "z2xz16") return abelian_table(2, {1, 4});
    if (name == "z4xz8") return abelian_table(2, {2, 3});
    if (name == "z2xz4xz4") return abelian_table(2, {1, 2, 2});
    if (name == "z3xz9") return abelian_table(3, {1, 2});
    if (name == "z3xz27") return abelian_table(3, {1, 3});
    if (name == "z9xz9") return abelian_table(3, {2, 2});
    if (name == "z3xz3xz9") return abelian_table(3, {1, 1, 2});
    if (name == "z5xz25") return abelian_table(5, {1, 2});
    if (name == "heisenberg27") return table_from_extension(heisenberg_extension(3)).table;
    if (name == "heisenberg125") return table_from_extension(heisenberg_extension(5)).table;
    if (name == "modular27") return modular_table(3);
    if (name == "modular125") return modular_table(5);
    if (name == "q8") return quaternion8_table();
    if (name == "dihedral8") return dihedral_table(4);
    if (name == "dihedral16") return dihedral_table(8);
    if (name == "extA") return table_from_extension(ext_a()).table;
    if (name == "extB") return table_from_extension(ext_b()).table;
    fail(errc::invalid_input, "unknown builtin table '" + name + "'");
}

const std::vector<BuiltinInfo>& builtin_extension_list() {
    static const std::vector<BuiltinInfo> list = {
        {"extA", "Q = (Z/3)^2, Z = Z/27, mu(x,y) = 9 x_2 y_1"},
        {"extB", "extA plus a coboundary twist"},
        {"extC", "Q = (Z/3)^2, Z = Z/9 x Z/27, twisted cocycle (order 3^7)"},
        {"heisenberg27ext", "heisenberg27 as an extension of (Z/3)^2 by Z/3"},
        {"modular27ext", "modular27 rebuilt over its center Z/3"},
        {"q8ext", "q8 rebuilt over its center Z/2"},
        {"dihedral8ext", "dihedral8 rebuilt over its center Z/2"},
        {"direct243", "direct product (Z/3)^2 x Z/27 (zero cocycle)"},
        {"z333", "trivial quotient, Z = (Z/27)^3"},
    };
    return list;
}

CentralExtensionGroup make_builtin_extension(const std::string& name) {
    if (name == "extA") return ext_a();
    if (name == "extB") return ext_b();
    if (name == "extC") return ext_c();
    if (name == "heisenberg27ext") return heisenberg_extension(3);
    if (name == "modular27ext") {
        TableGroup t = modular_table(3);
        // center is <a^3>, generated by index of a^3 b^0
        return extension_from_table(t, 3, {3 * 3}, {1});
    }
    if (name == "q8ext") return extension_from_table(quaternion8_table(), 2, {1}, {1});
    if (name == "dihedral8ext") {
        // center of dihedral8 is <r^2>, index r^2 s^0 = 4
        return extension_from_table(dihedral_table(4), 2, {4}, {1});
    }
    if (name == "direct243") {
        QGroup q = QGroup::elementary(3, 2);
        AbelianPGroup z(3, {3});
        CocycleTable mu = zero_cocycle(q, z);
        return CentralExtensionGroup(std::move(q), std::move(z), std::move(mu));
    }
    if (name == "z333") {
        QGroup q = QGroup::trivial();
        AbelianPGroup z(3, {3, 3, 3});
        CocycleTable mu = zero_cocycle(q, z);
        return CentralExtensionGroup(std::move(q), std::move(z), std::move(mu));
    }
    fail(errc::invalid_input, "unknown builtin extension '" + name + "'");
}

std::vector<std::string> conjecture_corpus() {
    std::vector<std::string> names;
    for (const auto& info : builtin_table_list()) {
        TableGroup t = make_builtin_table(info.name);
        std::uint32_t m = t.order();
        std::uint64_t p = 2;
        while (m % p != 0) ++p;
        std::uint32_t n = 0;
        std::uint32_t mm = m;
        while (mm % p == 0) {
            mm /= static_cast<std::uint32_t>(p);
            ++n;
        }
        if (mm != 1 || n < 3 || n > 5) continue;
        bool cyclic = false;
        for (std::uint32_t a = 0; a < t.order() && !cyclic; ++a)
            cyclic = t.element_order(a) == t.order();
        if (!cyclic) names.push_back(info.name);
    }
    return names;
}

} // namespace centralaut
