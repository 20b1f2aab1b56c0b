#include "centralaut/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "centralaut/error.hpp"

namespace centralaut {

TableGroup::TableGroup(std::vector<std::uint32_t> table, std::uint32_t order,
                       std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
    if (order_ == 0 || table_.size() != static_cast<std::size_t>(order_) * order_)
        fail(errc::invalid_input, "table must be order x order");
    for (auto v : table_)
        if (v >= order_) fail(errc::invalid_input, "table entry out of range");
    if (labels_.empty()) {
        labels_.reserve(order_);
        for (std::uint32_t i = 0; i < order_; ++i) labels_.push_back("g" + std::to_string(i));
    }
    if (labels_.size() != order_) fail(errc::invalid_input, "label count must match order");

    bool found = false;
    for (std::uint32_t e = 0; e < order_ && !found; ++e) {
        bool ok = true;
        for (std::uint32_t a = 0; a < order_ && ok; ++a)
            ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) fail(errc::invalid_input, "table has no identity element");

    inverse_.assign(order_, order_);
    for (std::uint32_t a = 0; a < order_; ++a) {
        for (std::uint32_t b = 0; b < order_; ++b) {
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                inverse_[a] = b;
                break;
            }
        }
        if (inverse_[a] == order_) fail(errc::invalid_input, "table element has no inverse");
    }

    const std::uint32_t m = order_;
    const std::uint32_t* t = table_.data();
    for (std::uint32_t a = 0; a < m; ++a) {
        const std::uint32_t* row_a = t + static_cast<std::size_t>(a) * m;
        for (std::uint32_t b = 0; b < m; ++b) {
            const std::uint32_t ab = row_a[b];
            const std::uint32_t* row_ab = t + static_cast<std::size_t>(ab) * m;
            const std::uint32_t* row_b = t + static_cast<std::size_t>(b) * m;
            for (std::uint32_t c = 0; c < m; ++c) {
                if (row_ab[c] != row_a[row_b[c]])
                    fail(errc::invalid_input, "table is not associative");
            }
        }
    }

    elt_order_.assign(order_, 0);
    for (std::uint32_t a = 0; a < order_; ++a) {
        std::uint32_t x = a, ord = 1;
        while (x != identity_) {
            x = mul(x, a);
            ++ord;
        }
        elt_order_[a] = ord;
    }
}

ExtensionTable table_from_extension(const CentralExtensionGroup& g, std::uint64_t bound) {
    if (!g.order_fits(bound))
        fail(errc::group_too_large,
             "extension order " + g.order().str() + " exceeds bound " + std::to_string(bound));
    const std::uint64_t m = g.order_u64();
    std::vector<GElem> elems;
    elems.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) elems.push_back(g.element_at(i));
    std::vector<std::uint32_t> table(m * m);
    std::vector<std::string> labels(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        std::string lab = "(" + g.q().label(elems[i].x) + ";";
        for (std::size_t c = 0; c < elems[i].z.size(); ++c) {
            if (c) lab += ",";
            lab += elems[i].z[c].str();
        }
        labels[i] = lab + ")";
        for (std::uint64_t j = 0; j < m; ++j)
            table[i * m + j] = static_cast<std::uint32_t>(g.index_of(g.mul(elems[i], elems[j])));
    }
    return {TableGroup(std::move(table), static_cast<std::uint32_t>(m), std::move(labels))};
}

TableGroup table_from_abelian(const AbelianPGroup& g, std::uint64_t bound) {
    if (!g.order_fits(bound))
        fail(errc::group_too_large,
             "group order " + g.order().str() + " exceeds bound " + std::to_string(bound));
    const std::uint64_t m = g.order_u64();
    std::vector<Coords> elems;
    elems.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) elems.push_back(g.element_at(i));
    std::vector<std::uint32_t> table(m * m);
    for (std::uint64_t i = 0; i < m; ++i)
        for (std::uint64_t j = 0; j < m; ++j)
            table[i * m + j] = static_cast<std::uint32_t>(g.index_of(g.add(elems[i], elems[j])));
    return TableGroup(std::move(table), static_cast<std::uint32_t>(m));
}

GroupMap map_from_lift(const CentralExtensionGroup& g, const LiftedAutomorphism& gamma) {
    const std::uint64_t m = g.order_u64();
    GroupMap out;
    out.image.resize(m);
    for (std::uint64_t i = 0; i < m; ++i)
        out.image[i] = static_cast<std::uint32_t>(g.index_of(gamma.apply(g, g.element_at(i))));
    return out;
}

GroupMap map_from_endo(const AbelianPGroup& g, const EndoMatrix& m) {
    const std::uint64_t n = g.order_u64();
    GroupMap out;
    out.image.resize(n);
    for (std::uint64_t i = 0; i < n; ++i)
        out.image[i] = static_cast<std::uint32_t>(g.index_of(m.apply(g.element_at(i))));
    return out;
}

namespace {

// Closure of a subset under multiplication (subgroup generated by it).
std::vector<std::uint32_t> subgroup_closure(const TableGroup& t,
                                            std::vector<std::uint32_t> seed) {
    std::vector<bool> in(t.order(), false);
    std::vector<std::uint32_t> list;
    auto push = [&](std::uint32_t x) {
        if (!in[x]) {
            in[x] = true;
            list.push_back(x);
        }
    };
    push(t.identity());
    for (auto s : seed) push(s);
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = 0; j < list.size(); ++j) {
            push(t.mul(list[i], list[j]));
            push(t.mul(list[j], list[i]));
        }
    return list;
}

std::vector<std::uint32_t> greedy_generators(const TableGroup& t) {
    std::vector<std::uint32_t> gens;
    std::vector<bool> covered(t.order(), false);
    covered[t.identity()] = true;
    std::size_t covered_count = 1;
    while (covered_count < t.order()) {
        std::uint32_t best = t.order();
        std::uint32_t best_order = 0;
        for (std::uint32_t a = 0; a < t.order(); ++a)
            if (!covered[a] && t.element_order(a) > best_order) {
                best = a;
                best_order = t.element_order(a);
            }
        gens.push_back(best);
        auto closure = subgroup_closure(t, gens);
        for (auto x : closure)
            if (!covered[x]) {
                covered[x] = true;
                ++covered_count;
            }
    }
    return gens;
}

// Backtracking over generator images with incremental closure. The partial
// map is always consistent with phi(x * g_j) = phi(x) * phi(g_j) for every
// defined x and already-assigned generator g_j; together with injectivity
// this makes every completed assignment a verified automorphism.
class AutSearch {
public:
    AutSearch(const TableGroup& t, const std::vector<std::uint32_t>& gens,
              const std::vector<std::vector<std::uint32_t>>& candidates,
              const std::function<void(const GroupMap&)>& sink)
        : t_(t), gens_(gens), candidates_(candidates), sink_(sink) {
        img_.assign(t_.order(), kUndef);
        used_.assign(t_.order(), false);
        define(t_.identity(), t_.identity());
    }

    // Explore assignments for levels [level, end), restricting the first
    // level to the candidate slice [first_lo, first_hi).
    void run(std::size_t level, std::size_t first_lo, std::size_t first_hi) {
        if (level == gens_.size()) {
            emit();
            return;
        }
        const auto& cands = candidates_[level];
        const bool top = level == 0;
        const std::size_t lo = top ? first_lo : 0;
        const std::size_t hi = top ? first_hi : cands.size();
        for (std::size_t c = lo; c < hi; ++c) {
            std::size_t trail_mark = defined_.size();
            if (extend(level, cands[c])) run(level + 1, first_lo, first_hi);
            rollback(trail_mark);
        }
    }

private:
    static constexpr std::uint32_t kUndef = UINT32_MAX;

    const TableGroup& t_;
    const std::vector<std::uint32_t>& gens_;
    const std::vector<std::vector<std::uint32_t>>& candidates_;
    const std::function<void(const GroupMap&)>& sink_;
    std::vector<std::uint32_t> img_;
    std::vector<bool> used_;
    std::vector<std::uint32_t> defined_;  // definition order, for rollback

    void define(std::uint32_t x, std::uint32_t v) {
        img_[x] = v;
        used_[v] = true;
        defined_.push_back(x);
    }

    void rollback(std::size_t mark) {
        while (defined_.size() > mark) {
            std::uint32_t x = defined_.back();
            defined_.pop_back();
            used_[img_[x]] = false;
            img_[x] = kUndef;
        }
    }

    // check phi(x * g) = phi(x) * phi(g), defining the product when new.
    bool check_or_define(std::uint32_t x, std::uint32_t gj) {
        std::uint32_t y = t_.mul(x, gj);
        std::uint32_t v = t_.mul(img_[x], img_[gj]);
        if (img_[y] == kUndef) {
            if (used_[v]) return false;
            define(y, v);
            return true;
        }
        return img_[y] == v;
    }

    bool extend(std::size_t level, std::uint32_t image) {
        std::uint32_t g = gens_[level];
        if (used_[image]) return false;
        std::size_t before = defined_.size();
        define(g, image);
        // previously defined elements against the new generator
        for (std::size_t i = 0; i < before; ++i)
            if (!check_or_define(defined_[i], g)) return false;
        // newly defined elements against every assigned generator
        for (std::size_t pos = before; pos < defined_.size(); ++pos)
            for (std::size_t j = 0; j <= level; ++j)
                if (!check_or_define(defined_[pos], gens_[j])) return false;
        return true;
    }

    void emit() {
        GroupMap m;
        m.image.assign(img_.begin(), img_.end());
        sink_(m);
    }
};

struct SearchPlan {
    std::vector<std::uint32_t> gens;
    std::vector<std::vector<std::uint32_t>> candidates;
};

SearchPlan make_plan(const TableGroup& t) {
    SearchPlan plan;
    plan.gens = greedy_generators(t);
    for (auto g : plan.gens) {
        std::vector<std::uint32_t> cands;
        for (std::uint32_t a = 0; a < t.order(); ++a)
            if (t.element_order(a) == t.element_order(g)) cands.push_back(a);
        plan.candidates.push_back(std::move(cands));
    }
    return plan;
}

} // namespace

void brute_aut_visit(const TableGroup& t, const std::function<void(const GroupMap&)>& visit,
                     const BruteOptions& opt) {
    if (t.order() > opt.bound)
        fail(errc::group_too_large, "group order " + std::to_string(t.order()) +
                                        " exceeds brute bound " + std::to_string(opt.bound));
    SearchPlan plan = make_plan(t);
    if (plan.gens.empty()) {  // trivial group
        GroupMap m;
        m.image = {t.identity()};
        visit(m);
        return;
    }
    const std::size_t width = plan.candidates[0].size();
    unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1 || width < 2) {
        AutSearch search(t, plan.gens, plan.candidates, visit);
        search.run(0, 0, width);
        return;
    }
    // Partition the first level across workers, then replay deterministically.
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(width));
    std::vector<std::vector<GroupMap>> found(jobs);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w]() {
            std::function<void(const GroupMap&)> sink = [&, w](const GroupMap& m) {
                found[w].push_back(m);
            };
            for (;;) {
                std::size_t c = next.fetch_add(1);
                if (c >= width) break;
                AutSearch search(t, plan.gens, plan.candidates, sink);
                search.run(0, c, c + 1);
            }
        });
    }
    for (auto& th : workers) th.join();
    std::vector<GroupMap> all;
    for (auto& part : found)
        for (auto& m : part) all.push_back(std::move(m));
    std::sort(all.begin(), all.end());
    for (const auto& m : all) visit(m);
}

std::vector<GroupMap> brute_aut(const TableGroup& t, const BruteOptions& opt) {
    std::vector<GroupMap> out;
    brute_aut_visit(t, [&](const GroupMap& m) { out.push_back(m); }, opt);
    return out;
}

Int brute_aut_count(const TableGroup& t, const BruteOptions& opt) {
    // Counting needs no map storage; with several jobs the per-worker sinks
    // still avoid it.
    if (t.order() > opt.bound)
        fail(errc::group_too_large, "group order " + std::to_string(t.order()) +
                                        " exceeds brute bound " + std::to_string(opt.bound));
    SearchPlan plan = make_plan(t);
    if (plan.gens.empty()) return 1;
    const std::size_t width = plan.candidates[0].size();
    unsigned jobs = std::max(1u, opt.jobs);
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(width));
    if (jobs <= 1) {
        std::uint64_t count = 0;
        std::function<void(const GroupMap&)> sink = [&](const GroupMap&) { ++count; };
        AutSearch search(t, plan.gens, plan.candidates, sink);
        search.run(0, 0, width);
        return Int(count);
    }
    std::vector<std::uint64_t> counts(jobs, 0);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w]() {
            std::function<void(const GroupMap&)> sink = [&, w](const GroupMap&) { ++counts[w]; };
            for (;;) {
                std::size_t c = next.fetch_add(1);
                if (c >= width) break;
                AutSearch search(t, plan.gens, plan.candidates, sink);
                search.run(0, c, c + 1);
            }
        });
    }
    for (auto& th : workers) th.join();
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return Int(total);
}

CenterInner center_and_inner(const TableGroup& t, std::uint64_t bound) {
    if (t.order() > bound)
        fail(errc::group_too_large, "group order exceeds bound " + std::to_string(bound));
    CenterInner out;
    for (std::uint32_t a = 0; a < t.order(); ++a) {
        bool central = true;
        for (std::uint32_t b = 0; b < t.order(); ++b)
            if (t.mul(a, b) != t.mul(b, a)) {
                central = false;
                break;
            }
        if (central) out.center.push_back(a);
    }
    std::set<GroupMap> seen;
    for (std::uint32_t a = 0; a < t.order(); ++a) {
        GroupMap conj;
        conj.image.resize(t.order());
        std::uint32_t ai = t.inverse(a);
        for (std::uint32_t x = 0; x < t.order(); ++x) conj.image[x] = t.mul(ai, t.mul(x, a));
        seen.insert(std::move(conj));
    }
    out.inner.assign(seen.begin(), seen.end());
    if (out.inner.size() * out.center.size() != t.order())
        fail(errc::homomorphism_check_failed, "inner map count disagrees with |G|/|Z|");
    return out;
}

Int out_p_part(const TableGroup& t, std::uint64_t p, std::uint64_t bound) {
    CenterInner ci = center_and_inner(t, bound);
    Int aut = brute_aut_count(t, {bound, 1});
    Int inn(t.order() / ci.center.size());
    if (aut % inn != 0) fail(errc::homomorphism_check_failed, "|Inn| does not divide |Aut|");
    Int outer = aut / inn;
    Int pp(p);
    Int part = 1;
    while (outer % pp == 0) {
        part *= pp;
        outer /= pp;
    }
    return part;
}

ConjectureVerdict conjecture_verdict(const TableGroup& t, std::uint64_t p, std::uint64_t bound) {
    ConjectureVerdict v;
    v.group_order = Int(t.order());
    std::uint64_t m = t.order();
    if (!is_prime_u64(p)) fail(errc::not_a_p_group, "p = " + std::to_string(p) + " is not prime");
    if (m % p != 0) fail(errc::not_a_p_group, "order is not a power of p");
    std::uint32_t n = 0;
    while (m % p == 0) {
        m /= p;
        ++n;
    }
    if (m != 1) fail(errc::not_a_p_group, "order is not a power of p");
    v.n = n;
    for (std::uint32_t a = 0; a < t.order(); ++a)
        if (t.element_order(a) == t.order()) {
            v.cyclic = true;
            break;
        }
    v.applicable = !v.cyclic && n >= 3;
    if (v.cyclic) v.reason = "cyclic group";
    else if (n < 3) v.reason = "order below p^3";
    v.aut_order = brute_aut_count(t, {bound, 1});
    v.holds = v.aut_order % v.group_order == 0;
    return v;
}

CentralExtensionGroup extension_from_table(const TableGroup& t, std::uint64_t p,
                                           const std::vector<std::uint32_t>& center_gens,
                                           const std::vector<std::uint32_t>& exponents) {
    if (center_gens.empty() || center_gens.size() != exponents.size())
        fail(errc::invalid_input, "need one exponent per central generator");
    // Sort generators by exponent so coordinates line up with the ascending
    // convention of AbelianPGroup.
    std::vector<std::size_t> perm(center_gens.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return exponents[a] < exponents[b]; });
    std::vector<std::uint32_t> gens_sorted, exps_sorted;
    for (auto i : perm) {
        gens_sorted.push_back(center_gens[i]);
        exps_sorted.push_back(exponents[i]);
    }
    AbelianPGroup z(p, exps_sorted);

    for (std::size_t i = 0; i < gens_sorted.size(); ++i) {
        std::uint32_t a = gens_sorted[i];
        for (std::uint32_t b = 0; b < t.order(); ++b)
            if (t.mul(a, b) != t.mul(b, a))
                fail(errc::invalid_input, "central generator does not commute with the group");
        if (Int(t.element_order(a)) != pow_int(Int(p), exps_sorted[i]))
            fail(errc::invalid_input, "central generator order does not match its exponent");
    }

    // Enumerate the central subgroup with its coordinates.
    const std::uint64_t zsize = z.order_u64();
    std::map<std::uint32_t, Coords> coords_of;
    std::vector<std::uint32_t> z_elem(zsize);
    for (std::uint64_t idx = 0; idx < zsize; ++idx) {
        Coords c = z.element_at(idx);
        std::uint32_t x = t.identity();
        for (std::size_t i = 0; i < gens_sorted.size(); ++i) {
            std::uint64_t e = c[i].convert_to<std::uint64_t>();
            for (std::uint64_t k = 0; k < e; ++k) x = t.mul(x, gens_sorted[i]);
        }
        if (coords_of.count(x)) fail(errc::invalid_input, "central generators are not independent");
        coords_of[x] = std::move(c);
        z_elem[idx] = x;
    }

    // Cosets: force the identity coset to be represented by the identity.
    std::vector<std::uint32_t> coset_of(t.order(), UINT32_MAX);
    std::vector<std::uint32_t> reps;
    auto assign_coset = [&](std::uint32_t rep) {
        std::uint32_t id = static_cast<std::uint32_t>(reps.size());
        reps.push_back(rep);
        for (std::uint64_t idx = 0; idx < zsize; ++idx) {
            std::uint32_t member = t.mul(rep, z_elem[idx]);
            if (coset_of[member] != UINT32_MAX)
                fail(errc::invalid_input, "central subgroup cosets overlap");
            coset_of[member] = id;
        }
    };
    assign_coset(t.identity());
    for (std::uint32_t a = 0; a < t.order(); ++a)
        if (coset_of[a] == UINT32_MAX) assign_coset(a);

    const std::uint32_t qorder = static_cast<std::uint32_t>(reps.size());
    std::vector<std::uint32_t> qtable(static_cast<std::size_t>(qorder) * qorder);
    CocycleTable mu;
    mu.values.resize(static_cast<std::size_t>(qorder) * qorder);
    for (std::uint32_t a = 0; a < qorder; ++a)
        for (std::uint32_t b = 0; b < qorder; ++b) {
            std::uint32_t prod = t.mul(reps[a], reps[b]);
            std::uint32_t c = coset_of[prod];
            qtable[a * qorder + b] = c;
            std::uint32_t w = t.mul(t.inverse(reps[c]), prod);
            auto it = coords_of.find(w);
            if (it == coords_of.end())
                fail(errc::invalid_input, "transversal defect leaves the central subgroup");
            mu.values[static_cast<std::size_t>(a) * qorder + b] = it->second;
        }
    return CentralExtensionGroup(QGroup(std::move(qtable), qorder), std::move(z), std::move(mu));
}

} // namespace centralaut
