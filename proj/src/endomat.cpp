#include "centralaut/endomat.hpp"

#include <algorithm>

#include "centralaut/error.hpp"

namespace centralaut {

namespace {

void check_square(const AbelianPGroup& g, const std::vector<Int>& raw) {
    if (raw.size() != g.rank() * g.rank())
        fail(errc::dimension_mismatch, "matrix must be " + std::to_string(g.rank()) + "x" +
                                           std::to_string(g.rank()));
}

// Divisibility exponent required of entry (i, j): p^{e_i - e_j} for j <= i.
std::uint32_t required_valuation(const AbelianPGroup& g, std::size_t i, std::size_t j) {
    std::uint32_t ei = g.exponent(i), ej = g.exponent(j);
    return ei > ej ? ei - ej : 0;
}

// Congruence modulus exponent of the liftability condition for entry (i, j),
// capped at the row modulus e_i so it stays meaningful on residue classes.
std::uint32_t liftable_step_exponent(const AbelianPGroup& g, std::size_t i, std::size_t j) {
    std::uint32_t ei = g.exponent(i), ej = g.exponent(j);
    if (i == j) return std::min<std::uint32_t>(2, ei);
    if (ei >= ej) return std::min<std::uint32_t>(ei - ej + 2, ei);
    return 1;
}

struct EntryRange {
    Int step;             // admissible values are step * t (+1 on the diagonal)
    std::uint64_t count;  // number of admissible canonical residues
};

EntryRange endo_entry_range(const AbelianPGroup& g, std::size_t i, std::size_t j) {
    std::uint32_t v = required_valuation(g, i, j);
    std::uint32_t free = std::min(g.exponent(i), g.exponent(j));
    return {pow_int(g.p(), v), pow_int(g.p(), free).convert_to<std::uint64_t>()};
}

EntryRange liftable_entry_range(const AbelianPGroup& g, std::size_t i, std::size_t j) {
    std::uint32_t v = liftable_step_exponent(g, i, j);
    std::uint32_t free = g.exponent(i) - v;
    return {pow_int(g.p(), v), pow_int(g.p(), free).convert_to<std::uint64_t>()};
}

// Odometer over per-entry ranges; entry k takes values base_k + step_k * t.
void enumerate_matrices(const AbelianPGroup& g, std::uint64_t max_classes,
                        const std::vector<EntryRange>& ranges, const std::vector<Int>& base,
                        const std::function<void(const EndoMatrix&)>& visit) {
    const std::size_t n = g.rank();
    Int total = 1;
    for (const auto& r : ranges) total *= r.count;
    if (total > Int(max_classes))
        fail(errc::enumeration_too_large,
             "enumeration needs " + total.str() + " classes, bound is " + std::to_string(max_classes));

    EndoMatrix m{g, base};
    std::vector<std::uint64_t> digit(n * n, 0);
    for (;;) {
        visit(m);
        std::size_t k = 0;
        while (k < n * n) {
            if (++digit[k] < ranges[k].count) {
                m.entries[k] += ranges[k].step;
                break;
            }
            digit[k] = 0;
            m.entries[k] = base[k];
            ++k;
        }
        if (k == n * n) break;
    }
}

std::vector<EntryRange> collect_ranges(const AbelianPGroup& g,
                                       EntryRange (*range)(const AbelianPGroup&, std::size_t,
                                                           std::size_t)) {
    const std::size_t n = g.rank();
    std::vector<EntryRange> ranges;
    ranges.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ranges.push_back(range(g, i, j));
    return ranges;
}

} // namespace

bool represents_endomorphism(const AbelianPGroup& g, const std::vector<Int>& raw) {
    check_square(g, raw);
    const std::size_t n = g.rank();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            std::uint32_t v = required_valuation(g, i, j);
            if (v == 0) continue;
            if (raw[i * n + j] % pow_int(g.p(), v) != 0) return false;
        }
    return true;
}

EndoMatrix canonicalize(const AbelianPGroup& g, const std::vector<Int>& raw) {
    if (!represents_endomorphism(g, raw))
        fail(errc::not_endomorphism, "matrix violates the divisibility pattern");
    const std::size_t n = g.rank();
    EndoMatrix m{g, std::vector<Int>(n * n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.entries[i * n + j] = mod_floor(raw[i * n + j], g.modulus(i));
    return m;
}

EndoMatrix identity_endo(const AbelianPGroup& g) {
    const std::size_t n = g.rank();
    EndoMatrix m{g, std::vector<Int>(n * n, Int(0))};
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Coords EndoMatrix::apply(const Coords& a) const {
    const AbelianPGroup& g = group;
    const std::size_t n = g.rank();
    if (a.size() != n) fail(errc::dimension_mismatch, "element rank does not match matrix");
    Coords out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += entries[i * n + j] * a[j];
        out[i] = mod_floor(acc, g.modulus(i));
    }
    return out;
}

EndoMatrix compose(const EndoMatrix& m1, const EndoMatrix& m2) {
    if (!m1.group.same_group(m2.group))
        fail(errc::dimension_mismatch, "matrices belong to different groups");
    const AbelianPGroup& g = m1.group;
    const std::size_t n = g.rank();
    EndoMatrix out{g, std::vector<Int>(n * n)};
    // Fast path: with row moduli below 2^20 every dot product fits in int64.
    if (g.modulus(n - 1) <= Int(1 << 20) && n <= 1024) {
        std::vector<std::int64_t> a(n * n), b(n * n), mod(n);
        for (std::size_t k = 0; k < n * n; ++k) {
            a[k] = m1.entries[k].convert_to<std::int64_t>();
            b[k] = m2.entries[k].convert_to<std::int64_t>();
        }
        for (std::size_t i = 0; i < n; ++i) mod[i] = g.modulus(i).convert_to<std::int64_t>();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::int64_t acc = 0;
                for (std::size_t k = 0; k < n; ++k) acc += a[i * n + k] * b[k * n + j] % mod[i];
                out.entries[i * n + j] = Int(acc % mod[i]);
            }
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc += m1.entries[i * n + k] * m2.entries[k * n + j];
            out.entries[i * n + j] = mod_floor(acc, g.modulus(i));
        }
    return out;
}

bool is_automorphism(const EndoMatrix& m) {
    const AbelianPGroup& g = m.group;
    const std::size_t n = g.rank();
    const Int& p = g.p();
    // Determinant over F_p by Gaussian elimination.
    std::vector<Int> a(n * n);
    for (std::size_t k = 0; k < n * n; ++k) a[k] = mod_floor(m.entries[k], p);
    Int det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot * n + col] == 0) ++pivot;
        if (pivot == n) return false;
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a[pivot * n + j], a[col * n + j]);
            det = mod_floor(-det, p);
        }
        const Int& pv = a[col * n + col];
        det = mod_floor(det * pv, p);
        // pv^{-1} mod p via Fermat.
        Int inv = 1, base = pv, e = p - 2;
        while (e > 0) {
            if ((e & 1) != 0) inv = mod_floor(inv * base, p);
            base = mod_floor(base * base, p);
            e >>= 1;
        }
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row * n + col] == 0) continue;
            Int f = mod_floor(a[row * n + col] * inv, p);
            for (std::size_t j = col; j < n; ++j)
                a[row * n + j] = mod_floor(a[row * n + j] - f * a[col * n + j], p);
        }
    }
    return det != 0;
}

Int aut_order(const AbelianPGroup& g) {
    const IndexProfile pr = index_profile(g);
    const std::size_t n = g.rank();
    const Int& p = g.p();
    Int total = 1;
    for (std::size_t k = 0; k < n; ++k)
        total *= pow_int(p, pr.d[k]) - pow_int(p, static_cast<std::uint64_t>(k));
    for (std::size_t j = 0; j < n; ++j)
        total *= pow_int(pow_int(p, g.exponent(j)), n - pr.d[j]);
    for (std::size_t i = 0; i < n; ++i)
        total *= pow_int(pow_int(p, g.exponent(i) - 1), n - pr.c[i] + 1);
    return total;
}

Int endo_class_count(const AbelianPGroup& g) {
    const std::size_t n = g.rank();
    Int total = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            total *= pow_int(g.p(), std::min(g.exponent(i), g.exponent(j)));
    return total;
}

void enumerate_endos(const AbelianPGroup& g, const std::function<void(const EndoMatrix&)>& visit,
                     std::uint64_t max_classes) {
    enumerate_matrices(g, max_classes, collect_ranges(g, endo_entry_range),
                       std::vector<Int>(g.rank() * g.rank(), Int(0)), visit);
}

void enumerate_autos(const AbelianPGroup& g, const std::function<void(const EndoMatrix&)>& visit,
                     std::uint64_t max_classes) {
    enumerate_endos(
        g, [&](const EndoMatrix& m) { if (is_automorphism(m)) visit(m); }, max_classes);
}

bool is_liftable(const EndoMatrix& m) {
    const AbelianPGroup& g = m.group;
    const std::size_t n = g.rank();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int step = pow_int(g.p(), liftable_step_exponent(g, i, j));
            Int want = i == j ? Int(1) : Int(0);
            if (mod_floor(m.entries[i * n + j] - want, step) != 0) return false;
        }
    return true;
}

Int liftable_count(const AbelianPGroup& g) {
    if (g.exponent(0) < 2)
        fail(errc::exponent_too_small, "count requires e_1 >= 2, got e_1 = " +
                                           std::to_string(g.exponent(0)));
    const IndexProfile pr = index_profile(g);
    const std::uint32_t n = static_cast<std::uint32_t>(g.rank());
    const Int& p = g.p();
    // |H| / p^{2n} for the diagonals, then the off-diagonal block factors.
    std::uint64_t diag_exp = 0;
    for (std::uint32_t i = 0; i < n; ++i) diag_exp += g.exponent(i) - 2;
    Int total = pow_int(p, diag_exp);
    for (std::uint32_t i = 0; i < pr.l; ++i) {
        std::uint64_t width = pr.C[i + 1] - pr.C[i];
        std::uint64_t above = n + 1 - pr.C[i + 1];  // columns with strictly larger exponent
        total *= pow_int(pow_int(p, pr.e_prime[i] - 1), above * width);
        total *= pow_int(pow_int(p, pr.e_prime[i] - 2), (n - pr.C[i]) * width);
    }
    return total;
}

Int liftable_count_lower_bound(const AbelianPGroup& g) {
    const std::size_t n = g.rank();
    std::string violations;
    if (n < 3) violations += "n >= 3 violated (n = " + std::to_string(n) + ")";
    if (g.exponent(0) < 3) {
        if (!violations.empty()) violations += "; ";
        violations += "e_1 >= 3 violated (e_1 = " + std::to_string(g.exponent(0)) + ")";
    }
    if (!violations.empty()) fail(errc::hypothesis_violation, violations);
    return g.order() * pow_int(g.p(), static_cast<std::uint64_t>(n) * n - 3 * n);
}

DiagonalDecomposition diagonal_unit_decomposition(const EndoMatrix& m) {
    if (!is_liftable(m)) fail(errc::not_liftable, "matrix violates the lifting congruences");
    const AbelianPGroup& g = m.group;
    DiagonalDecomposition dd;
    dd.s.resize(g.rank());
    dd.r.resize(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) {
        Int diff = m.at(i, i) - 1;
        if (diff == 0) {
            dd.s[i] = 0;
            dd.r[i] = g.exponent(i);
            continue;
        }
        std::uint32_t v = valuation(diff, g.p());
        std::uint32_t r = std::clamp<std::uint32_t>(v, 2, g.exponent(i));
        dd.r[i] = r;
        dd.s[i] = diff / pow_int(g.p(), r);
    }
    return dd;
}

void enumerate_liftable(const AbelianPGroup& g,
                        const std::function<void(const EndoMatrix&)>& visit,
                        std::uint64_t max_classes) {
    std::vector<Int> base(g.rank() * g.rank(), Int(0));
    for (std::size_t i = 0; i < g.rank(); ++i) base[i * g.rank() + i] = 1;
    enumerate_matrices(g, max_classes, collect_ranges(g, liftable_entry_range), base, visit);
}

EndoMatrix random_liftable(const AbelianPGroup& g, std::mt19937_64& rng) {
    const std::size_t n = g.rank();
    EndoMatrix m{g, std::vector<Int>(n * n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            EntryRange r = liftable_entry_range(g, i, j);
            std::uniform_int_distribution<std::uint64_t> pick(0, r.count - 1);
            Int v = r.step * pick(rng);
            if (i == j) v += 1;
            m.entries[i * n + j] = v;
        }
    return m;
}

} // namespace centralaut
