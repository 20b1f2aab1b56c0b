#include "centralaut/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "centralaut/builtins.hpp"
#include "centralaut/error.hpp"
#include "centralaut/extension.hpp"
#include "centralaut/oracle.hpp"

namespace centralaut {

namespace {

// ----- small independent oracles -------------------------------------------

// Unit count of Z/p^e by scanning every residue.
std::uint64_t unit_count_scan(std::uint64_t p, std::uint32_t e) {
    std::uint64_t m = 1;
    for (std::uint32_t i = 0; i < e; ++i) m *= p;
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k < m; ++k)
        if (k % p != 0) ++count;
    return count;
}

// Number of n-tuples of linearly independent vectors in F_p^n, by enumerating
// all tuples and Gaussian elimination.
std::uint64_t independent_tuple_scan(std::uint32_t p, std::uint32_t n) {
    std::uint64_t pn = 1;
    for (std::uint32_t i = 0; i < n; ++i) pn *= p;
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < n; ++i) total *= pn;

    std::vector<std::uint32_t> mat(n * n);
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::uint32_t col = 0; col < n; ++col) {
            std::uint64_t v = c % pn;
            c /= pn;
            for (std::uint32_t row = 0; row < n; ++row) {
                mat[row * n + col] = v % p;
                v /= p;
            }
        }
        // rank by elimination mod p
        std::vector<std::uint32_t> a = mat;
        bool full_rank = true;
        for (std::uint32_t col = 0; col < n && full_rank; ++col) {
            std::uint32_t piv = col;
            while (piv < n && a[piv * n + col] == 0) ++piv;
            if (piv == n) {
                full_rank = false;
                break;
            }
            if (piv != col)
                for (std::uint32_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
            // normalize pivot to 1
            std::uint32_t inv = 1;
            for (std::uint32_t t = 1; t < p; ++t)
                if (t * a[col * n + col] % p == 1) {
                    inv = t;
                    break;
                }
            for (std::uint32_t j = 0; j < n; ++j) a[col * n + j] = a[col * n + j] * inv % p;
            for (std::uint32_t row = col + 1; row < n; ++row) {
                std::uint32_t f = a[row * n + col];
                if (f == 0) continue;
                for (std::uint32_t j = 0; j < n; ++j)
                    a[row * n + j] = (a[row * n + j] + (p - f) * a[col * n + j]) % p;
            }
        }
        if (full_rank) ++count;
    }
    return count;
}

// Ascending exponent tuples with sum <= max_sum (optionally min part).
void ascending_tuples(std::uint32_t max_sum, std::uint32_t min_part,
                      std::vector<std::uint32_t>& cur,
                      std::vector<std::vector<std::uint32_t>>& out) {
    std::uint32_t used = std::accumulate(cur.begin(), cur.end(), 0u);
    for (std::uint32_t next = min_part; used + next <= max_sum; ++next) {
        cur.push_back(next);
        out.push_back(cur);
        ascending_tuples(max_sum, next, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::uint32_t>> all_partitions(std::uint32_t max_sum) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur;
    ascending_tuples(max_sum, 1, cur, out);
    return out;
}

// Ascending tuples of fixed length n with lo <= e_1 <= ... <= e_n <= hi.
void fixed_length_tuples(std::uint32_t n, std::uint32_t lo, std::uint32_t hi,
                         std::vector<std::uint32_t>& cur,
                         std::vector<std::vector<std::uint32_t>>& out) {
    if (cur.size() == n) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t next = lo; next <= hi; ++next) {
        cur.push_back(next);
        fixed_length_tuples(n, next, hi, cur, out);
        cur.pop_back();
    }
}

std::string tuple_str(std::uint64_t p, const std::vector<std::uint32_t>& e) {
    std::string s = "(p=" + std::to_string(p) + ", e=[";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + "])";
}

struct Tally {
    int checked = 0;
    int skipped = 0;
    std::vector<std::string> failures;
    std::vector<std::string> skip_notes;

    void fail(const std::string& what) { failures.push_back(what); }
    void skip(const std::string& why) {
        ++skipped;
        skip_notes.push_back(why);
    }

    CriterionResult result(int number, const std::string& name) const {
        CriterionResult r;
        r.number = number;
        r.name = name;
        r.passed = failures.empty();
        std::ostringstream os;
        if (!failures.empty()) {
            os << failures.size() << " failure(s): " << failures.front();
        } else {
            os << checked << " checks";
            if (skipped > 0) {
                os << ", " << skipped << " skipped (" << skip_notes.front();
                if (skip_notes.size() > 1) os << "; +" << skip_notes.size() - 1 << " more";
                os << ")";
            }
        }
        r.detail = os.str();
        return r;
    }
};

// ----- criterion 1: closed formula vs brute-force sweep ---------------------

CriterionResult criterion_1(Scale scale, unsigned jobs) {
    Tally tally;
    const std::uint64_t order_limit = scale == Scale::full ? 729 : 81;
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        std::uint32_t max_sum = 0;
        Int pw = 1;
        while (pw * Int(p) <= Int(order_limit)) {
            pw *= Int(p);
            ++max_sum;
        }
        for (const auto& exps : all_partitions(max_sum)) {
            AbelianPGroup g(p, exps);
            Int expected = aut_order(g);
            if (expected > Int(kSweepAutBudget)) {
                tally.skip(tuple_str(p, exps) + " has " + expected.str() +
                           " automorphisms, enumeration budget is " +
                           std::to_string(kSweepAutBudget));
                continue;
            }
            TableGroup t = table_from_abelian(g);
            Int counted = brute_aut_count(t, {kDefaultBruteBound, jobs});
            ++tally.checked;
            if (counted != expected)
                tally.fail(tuple_str(p, exps) + ": formula " + expected.str() + ", bruteforce " +
                           counted.str());
        }
    }
    return tally.result(1, "automorphism order formula vs backtracking oracle");
}

// ----- criterion 2: sanity anchors ------------------------------------------

CriterionResult criterion_2(Scale scale) {
    Tally tally;
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (std::uint32_t e = 1; e <= 5; ++e) {
            Int expected = aut_order(AbelianPGroup(p, {e}));
            Int scanned(unit_count_scan(p, e));
            ++tally.checked;
            if (expected != scanned)
                tally.fail("cyclic " + tuple_str(p, {e}) + ": formula " + expected.str() +
                           ", unit scan " + scanned.str());
        }
        std::uint32_t max_rank = scale == Scale::full ? 3 : 2;
        for (std::uint32_t n = 1; n <= max_rank; ++n) {
            std::vector<std::uint32_t> ones(n, 1);
            Int expected = aut_order(AbelianPGroup(p, ones));
            Int scanned(independent_tuple_scan(static_cast<std::uint32_t>(p), n));
            ++tally.checked;
            if (expected != scanned)
                tally.fail("elementary " + tuple_str(p, ones) + ": formula " + expected.str() +
                           ", tuple scan " + scanned.str());
        }
    }
    return tally.result(2, "unit-count and linear-independence anchors");
}

// ----- criterion 3: liftable-count exactness --------------------------------

// Counts admissible residues per entry by probing single-entry modifications
// of the identity; multiplying the per-entry counts is exhaustive because the
// congruences are entrywise.
Int liftable_scan_per_entry(const AbelianPGroup& g) {
    const std::size_t n = g.rank();
    EndoMatrix probe = identity_endo(g);
    Int total = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::uint32_t vmin = i >= j ? g.exponent(i) - g.exponent(j) : 0;
            Int step = pow_int(g.p(), vmin);
            Int saved = probe.at(i, j);
            std::uint64_t admissible = 0;
            for (Int v = 0; v < g.modulus(i); v += step) {
                probe.at(i, j) = v;
                if (is_liftable(probe)) ++admissible;
            }
            probe.at(i, j) = saved;
            total *= admissible;
        }
    return total;
}

CriterionResult criterion_3(Scale scale) {
    Tally tally;
    const std::uint32_t max_sum = scale == Scale::full ? 6 : 5;
    for (const auto& exps : all_partitions(max_sum)) {
        if (exps[0] < 2) continue;
        AbelianPGroup g(3, exps);
        Int formula = liftable_count(g);
        Int scanned = liftable_scan_per_entry(g);
        ++tally.checked;
        if (formula != scanned)
            tally.fail(tuple_str(3, exps) + ": formula " + formula.str() + ", entry scan " +
                       scanned.str());
        if (endo_class_count(g) <= Int(kDefaultEnumerationBound)) {
            std::uint64_t filtered = 0;
            enumerate_endos(g, [&](const EndoMatrix& m) {
                if (is_liftable(m)) ++filtered;
            });
            ++tally.checked;
            if (formula != Int(filtered))
                tally.fail(tuple_str(3, exps) + ": formula " + formula.str() +
                           ", full enumeration " + std::to_string(filtered));
        } else {
            tally.skip(tuple_str(3, exps) + " has " + endo_class_count(g).str() +
                       " endomorphism classes; per-entry scan used instead");
        }
    }
    return tally.result(3, "liftable-matrix count vs exhaustive enumeration");
}

// ----- criterion 4: closure of the liftable set under composition -----------

CriterionResult criterion_4(Scale scale) {
    Tally tally;
    const std::uint64_t exhaustive_limit = scale == Scale::full ? 10000 : 729;
    for (std::uint64_t p : {3ull, 5ull}) {
        for (std::uint32_t n = 1; n <= 4; ++n) {
            std::vector<std::vector<std::uint32_t>> tuples;
            std::vector<std::uint32_t> cur;
            fixed_length_tuples(n, 2, 5, cur, tuples);
            for (const auto& exps : tuples) {
                AbelianPGroup g(p, exps);
                Int size = liftable_count(g);
                if (size <= Int(exhaustive_limit)) {
                    std::vector<EndoMatrix> all;
                    enumerate_liftable(g, [&](const EndoMatrix& m) { all.push_back(m); });
                    bool ok = true;
                    for (const auto& m1 : all) {
                        for (const auto& m2 : all)
                            if (!is_liftable(compose(m1, m2))) {
                                ok = false;
                                break;
                            }
                        if (!ok) break;
                    }
                    ++tally.checked;
                    if (!ok) tally.fail(tuple_str(p, exps) + ": exhaustive closure violated");
                } else {
                    std::mt19937_64 rng(0xC10u ^ (p << 8) ^ size.convert_to<std::uint64_t>());
                    bool ok = true;
                    for (int trial = 0; trial < 1000 && ok; ++trial) {
                        EndoMatrix m1 = random_liftable(g, rng);
                        EndoMatrix m2 = random_liftable(g, rng);
                        ok = is_liftable(compose(m1, m2));
                    }
                    ++tally.checked;
                    if (!ok) tally.fail(tuple_str(p, exps) + ": sampled closure violated");
                }
            }
        }
    }
    return tally.result(4, "closure of liftable matrices under composition");
}

// ----- criterion 5: lifting correctness on the order-243 extension ----------

CriterionResult criterion_5(unsigned jobs) {
    Tally tally;
    auto check = [&](bool ok, const std::string& what) {
        ++tally.checked;
        if (!ok) tally.fail(what);
    };

    CentralExtensionGroup g = make_builtin_extension("extA");
    check(is_p_central(g), "extA is p-central");
    check(is_p2_abelian(g), "extA is p2-abelian");
    CenterInfo center = center_of(g);
    check(center.elements.size() == 27, "extA center has 27 elements");
    check(center.equals_center_factor, "extA center equals the central factor");

    auto family = lift_family(g);
    check(family.size() == 3, "family has exactly 3 members");

    ExtensionTable ext_table = table_from_extension(g);
    const TableGroup& t = ext_table.table;
    CenterInner ci = center_and_inner(t);
    check(ci.inner.size() == 9, "9 inner automorphisms");

    std::vector<GroupMap> aut_list = brute_aut(t, {kDefaultBruteBound, jobs});

    const std::uint64_t m = g.order_u64();
    for (std::size_t idx = 0; idx < family.size(); ++idx) {
        const auto& gamma = family[idx];
        GroupMap map = map_from_lift(g, gamma);
        std::string tag = "family member " + std::to_string(idx);

        bool hom = true;
        for (std::uint32_t a = 0; a < m && hom; ++a)
            for (std::uint32_t b = 0; b < m; ++b)
                if (map.image[t.mul(a, b)] != t.mul(map.image[a], map.image[b])) {
                    hom = false;
                    break;
                }
        check(hom, tag + " is a homomorphism over all pairs");

        bool fixes_cosets = true;
        bool restricts_to_theta = true;
        for (std::uint64_t i = 0; i < m; ++i) {
            GElem e = g.element_at(i);
            GElem im = g.element_at(map.image[i]);
            if (im.x != e.x) fixes_cosets = false;
            if (g.is_central_factor(e) && !(im.z == gamma.theta.apply(e.z)))
                restricts_to_theta = false;
        }
        check(fixes_cosets, tag + " induces the identity on the quotient");
        check(restricts_to_theta, tag + " restricts to theta on the center");

        bool inner = std::find(ci.inner.begin(), ci.inner.end(), map) != ci.inner.end();
        if (gamma.is_identity()) {
            check(inner, tag + " (identity) is the trivial inner map");
        } else {
            check(!inner, tag + " is non-inner");
            LiftedAutomorphism cube = compose(g, gamma, compose(g, gamma, gamma));
            check(cube.is_identity() && !gamma.is_identity(), tag + " has order 3");
        }

        check(std::find(aut_list.begin(), aut_list.end(), map) != aut_list.end(),
              tag + " appears in the brute-forced automorphism list");
    }

    // family closed under composition
    for (const auto& a : family)
        for (const auto& b : family) {
            LiftedAutomorphism ab = compose(g, a, b);
            check(std::find(family.begin(), family.end(), ab) != family.end(),
                  "family is closed under composition");
        }
    return tally.result(5, "lifting pipeline on the order-243 extension");
}

// ----- criterion 6: compatibility identities on bundled extensions ----------

CriterionResult criterion_6() {
    Tally tally;
    auto check = [&](bool ok, const std::string& what) {
        ++tally.checked;
        if (!ok) tally.fail(what);
    };
    const std::vector<std::string> names = {"extA",           "extB",         "extC",
                                            "heisenberg27ext", "modular27ext", "q8ext",
                                            "dihedral8ext",    "direct243"};
    for (const auto& name : names) {
        CentralExtensionGroup g = make_builtin_extension(name);
        bool pc, pa;
        if (g.order_fits(kDefaultExhaustionBound)) {
            pc = is_p_central(g);
            pa = is_p2_abelian(g);
        } else {
            pc = p_central_structural(g);
            pa = p2_abelian_structural(g);
        }
        check(pc, name + " is p-central");
        check(pa, name + " is p2-abelian");
        if (!pc || !pa) continue;

        check(power_identity_holds(g), name + ": transversal power identity over all pairs");

        const AbelianPGroup& z = g.z();
        const Int p = z.p();
        bool star_amp_ok = true;
        for (std::uint32_t x = 0; x < g.q().order() && star_amp_ok; ++x)
            for (std::uint32_t y = 0; y < g.q().order(); ++y) {
                PairPowerDecomposition d = decompose_pair_powers(g, x, y);
                for (std::size_t i = 0; i < z.rank(); ++i) {
                    Int lhs = d.alpha[i] * p * p;
                    Int rhs = (d.beta[i] + d.gamma[i] + d.delta[i]) * p + d.k[i] * z.modulus(i);
                    if (lhs != rhs) {
                        star_amp_ok = false;
                        break;
                    }
                }
                if (!star_amp_ok) break;
            }
        check(star_amp_ok, name + ": power decomposition is an exact integer identity");

        if (z.p_small() == 2) {
            tally.skip(name + ": lifting identities need odd p");
            continue;
        }
        if (z.exponent(0) < 2) {
            tally.skip(name + ": lifting identities need e_1 >= 2");
            continue;
        }
        if (!center_equals_center_factor(g)) {
            tally.skip(name + ": center exceeds the central factor, no lift family");
            continue;
        }
        auto family = lift_family(g);
        bool star_ok = true;
        for (const auto& gamma : family)
            if (!lift_identity_holds(g, gamma.theta, gamma.chi)) {
                star_ok = false;
                break;
            }
        check(star_ok, name + ": every family member satisfies the lift identity");
    }
    return tally.result(6, "power and lift identities on bundled extensions");
}

// ----- criterion 7: counting inequality chain -------------------------------

CriterionResult criterion_7() {
    Tally tally;
    for (std::uint64_t p : {3ull, 5ull}) {
        for (std::uint32_t n = 3; n <= 6; ++n) {
            std::vector<std::vector<std::uint32_t>> tuples;
            std::vector<std::uint32_t> cur;
            fixed_length_tuples(n, 3, 6, cur, tuples);
            for (const auto& exps : tuples) {
                AbelianPGroup g(p, exps);
                Int count = liftable_count(g);
                Int bound = liftable_count_lower_bound(g);
                ++tally.checked;
                if (count < bound)
                    tally.fail(tuple_str(p, exps) + ": count " + count.str() + " < bound " +
                               bound.str());
            }
        }
    }
    AbelianPGroup eq(3, {3, 3, 3});
    Int count = liftable_count(eq);
    Int bound = liftable_count_lower_bound(eq);
    ++tally.checked;
    if (!(count == bound && count == Int(19683)))
        tally.fail("equality case (p=3, e=(3,3,3)): count " + count.str() + ", bound " +
                   bound.str());
    return tally.result(7, "liftable count dominates |Z| p^{n^2-3n}");
}

// ----- criterion 8: divisibility corpus -------------------------------------

CriterionResult criterion_8(Scale scale, unsigned jobs) {
    Tally tally;
    for (const auto& name : conjecture_corpus()) {
        TableGroup t = make_builtin_table(name);
        if (scale == Scale::small && t.order() > 81) {
            tally.skip(name + " deferred to full scale");
            continue;
        }
        std::uint64_t p = 2;
        while (t.order() % p != 0) ++p;
        ConjectureVerdict v = conjecture_verdict(t, p, kDefaultBruteBound);
        (void)jobs;
        ++tally.checked;
        if (!v.applicable)
            tally.fail(name + ": expected an applicable (non-cyclic, order >= p^3) group");
        else if (!v.holds)
            tally.fail(name + ": |G| = " + v.group_order.str() + " does not divide |Aut| = " +
                       v.aut_order.str());
    }
    ConjectureVerdict cyc = conjecture_verdict(make_builtin_table("cyclic27"), 3);
    ++tally.checked;
    if (cyc.applicable) tally.fail("cyclic27 must not be applicable");
    return tally.result(8, "divisibility verdicts over the bundled corpus");
}

// ----- criterion 9: negative controls ---------------------------------------

CriterionResult criterion_9() {
    Tally tally;
    auto check = [&](bool ok, const std::string& what) {
        ++tally.checked;
        if (!ok) tally.fail(what);
    };

    CentralExtensionGroup g = make_builtin_extension("extA");
    is_p_central(g);
    is_p2_abelian(g);

    // (a) a matrix violating the mod-p^2 diagonal congruence is rejected
    EndoMatrix bad = canonicalize(g.z(), {Int(4)});  // 1 + p
    check(!is_liftable(bad), "theta = 1+p fails the lifting congruences");
    bool rejected = false;
    try {
        extend_center_automorphism(g, bad);
    } catch (const Error& e) {
        rejected = e.code() == errc::not_liftable;
    }
    check(rejected, "lifting rejects theta = 1+p with NotLiftable");

    // (b) corrupting one interior cocycle entry breaks construction
    {
        CocycleTable mu = g.cocycle();
        Coords bumped = g.z().add(mu.at(4, 5, g.q().order()), g.z().basis(0));
        mu.values[4 * g.q().order() + 5] = bumped;
        bool caught = false;
        try {
            CentralExtensionGroup broken(g.q(), g.z(), mu);
        } catch (const Error& e) {
            caught = e.code() == errc::cocycle_identity_failed;
        }
        check(caught, "corrupted cocycle entry fails construction");
    }
    {
        CocycleTable mu = g.cocycle();
        mu.values[0 * g.q().order() + 3] = g.z().basis(0);  // breaks normalization
        bool caught = false;
        try {
            CentralExtensionGroup broken(g.q(), g.z(), mu);
        } catch (const Error& e) {
            caught = e.code() == errc::not_normalized;
        }
        check(caught, "corrupted normalization entry fails construction");
    }

    // (c) chi = 0 with a nontrivial theta fails the lift identity
    ChiTable zero_chi(g.q().order(), g.z().zero());
    EndoMatrix doubling = canonicalize(g.z(), {Int(2)});
    check(!lift_identity_holds(g, doubling, zero_chi),
          "chi = 0 with theta = 2 fails the lift identity on extA");

    CentralExtensionGroup tw = make_builtin_extension("extB");
    EndoMatrix theta10 = canonicalize(tw.z(), {Int(10)});
    check(!lift_identity_holds(tw, theta10, zero_chi),
          "chi = 0 with liftable theta = 1+p^2 fails the lift identity on extB");
    return tally.result(9, "negative controls fail loudly");
}

} // namespace

std::vector<CriterionResult> run_acceptance(Scale scale, unsigned jobs) {
    std::vector<CriterionResult> out;
    auto timed = [&](auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r = fn();
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    };
    timed([&] { return criterion_1(scale, jobs); });
    timed([&] { return criterion_2(scale); });
    timed([&] { return criterion_3(scale); });
    timed([&] { return criterion_4(scale); });
    timed([&] { return criterion_5(jobs); });
    timed([&] { return criterion_6(); });
    timed([&] { return criterion_7(); });
    timed([&] { return criterion_8(scale, jobs); });
    timed([&] { return criterion_9(); });
    return out;
}

} // namespace centralaut
