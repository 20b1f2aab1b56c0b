#include "centralaut/extension.hpp"

#include <algorithm>
#include <unordered_set>

#include "centralaut/error.hpp"

namespace centralaut {

QGroup::QGroup(std::vector<std::uint32_t> table, std::uint32_t order,
               std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
    if (order_ == 0 || table_.size() != static_cast<std::size_t>(order_) * order_)
        fail(errc::invalid_input, "quotient table must be order x order");
    for (auto v : table_)
        if (v >= order_) fail(errc::invalid_input, "quotient table entry out of range");
    if (labels_.empty()) {
        labels_.reserve(order_);
        for (std::uint32_t i = 0; i < order_; ++i) labels_.push_back("q" + std::to_string(i));
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
    if (!found) fail(errc::invalid_input, "quotient table has no identity");

    inverse_.assign(order_, order_);
    for (std::uint32_t a = 0; a < order_; ++a) {
        for (std::uint32_t b = 0; b < order_; ++b) {
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                inverse_[a] = b;
                break;
            }
        }
        if (inverse_[a] == order_) fail(errc::invalid_input, "quotient table element has no inverse");
    }
    for (std::uint32_t a = 0; a < order_; ++a)
        for (std::uint32_t b = 0; b < order_; ++b)
            for (std::uint32_t c = 0; c < order_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    fail(errc::invalid_input, "quotient table is not associative");
}

std::uint32_t QGroup::power(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t r = identity_;
    while (k != 0) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

QGroup QGroup::trivial() { return QGroup({0}, 1, {"1"}); }

QGroup QGroup::cyclic(std::uint32_t m) {
    std::vector<std::uint32_t> t(static_cast<std::size_t>(m) * m);
    for (std::uint32_t a = 0; a < m; ++a)
        for (std::uint32_t b = 0; b < m; ++b) t[a * m + b] = (a + b) % m;
    return QGroup(std::move(t), m);
}

QGroup QGroup::elementary(std::uint32_t p, std::uint32_t rank) {
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < rank; ++i) q *= p;
    std::vector<std::uint32_t> t(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) {
            std::uint32_t s = 0, w = 1, aa = a, bb = b;
            for (std::uint32_t i = 0; i < rank; ++i) {
                s += ((aa + bb) % p) * w;
                aa /= p;
                bb /= p;
                w *= p;
            }
            t[a * q + b] = s;
        }
    return QGroup(std::move(t), q);
}

CocycleTable bilinear_cocycle(const QGroup& q, const AbelianPGroup& z, std::uint32_t rank,
                              const Int& scale, const std::vector<Int>& form, std::size_t coord) {
    const std::uint32_t p = static_cast<std::uint32_t>(z.p_small());
    std::uint32_t expected = 1;
    for (std::uint32_t i = 0; i < rank; ++i) expected *= p;
    if (q.order() != expected)
        fail(errc::invalid_input, "bilinear cocycle needs an elementary abelian quotient");
    if (form.size() != static_cast<std::size_t>(rank) * rank)
        fail(errc::dimension_mismatch, "form must be rank x rank");
    if (coord >= z.rank()) fail(errc::dimension_mismatch, "target coordinate out of range");
    // On coset representatives the cocycle identity picks up carry terms that
    // are multiples of p * scale, so p^{e-1} | scale is required.
    if (z.exponent(coord) >= 1 &&
        mod_floor(scale, pow_int(z.p(), z.exponent(coord) - 1)) != 0)
        fail(errc::invalid_input, "scale must be divisible by p^{e-1} for the target coordinate");

    auto digits = [&](std::uint32_t x) {
        std::vector<Int> d(rank);
        for (std::uint32_t i = 0; i < rank; ++i) {
            d[i] = x % p;
            x /= p;
        }
        return d;
    };

    CocycleTable mu;
    mu.values.assign(static_cast<std::size_t>(q.order()) * q.order(), z.zero());
    for (std::uint32_t x = 0; x < q.order(); ++x) {
        auto dx = digits(x);
        for (std::uint32_t y = 0; y < q.order(); ++y) {
            auto dy = digits(y);
            Int acc = 0;
            for (std::uint32_t i = 0; i < rank; ++i)
                for (std::uint32_t j = 0; j < rank; ++j)
                    acc += dx[i] * form[i * rank + j] * dy[j];
            Coords v = z.zero();
            v[coord] = mod_floor(scale * acc, z.modulus(coord));
            mu.values[static_cast<std::size_t>(x) * q.order() + y] = std::move(v);
        }
    }
    return mu;
}

CocycleTable add_coboundary(const QGroup& q, const AbelianPGroup& z, const CocycleTable& mu,
                            const std::vector<Coords>& f) {
    if (f.size() != q.order()) fail(errc::dimension_mismatch, "coboundary needs one value per coset");
    if (f[q.identity()] != z.zero())
        fail(errc::not_normalized, "coboundary map must vanish at the identity");
    CocycleTable out;
    out.values.resize(mu.values.size());
    for (std::uint32_t x = 0; x < q.order(); ++x)
        for (std::uint32_t y = 0; y < q.order(); ++y) {
            const Coords& base = mu.at(x, y, q.order());
            out.values[static_cast<std::size_t>(x) * q.order() + y] =
                z.sub(z.add(base, z.add(f[x], f[y])), f[q.mul(x, y)]);
        }
    return out;
}

CentralExtensionGroup::CentralExtensionGroup(QGroup q, AbelianPGroup z, CocycleTable mu)
    : q_(std::move(q)), z_(std::move(z)), mu_(std::move(mu)) {
    const std::uint32_t n = q_.order();
    if (mu_.values.size() != static_cast<std::size_t>(n) * n)
        fail(errc::dimension_mismatch, "cocycle table must be q x q");
    for (const auto& v : mu_.values)
        if (!z_.is_element(v)) fail(errc::invalid_input, "cocycle value is not an element of Z");
    for (std::uint32_t x = 0; x < n; ++x) {
        if (mu_.at(q_.identity(), x, n) != z_.zero() || mu_.at(x, q_.identity(), n) != z_.zero())
            fail(errc::not_normalized, "cocycle is not normalized at coset " + std::to_string(x));
    }
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            for (std::uint32_t w = 0; w < n; ++w) {
                Coords lhs = z_.add(mu_.at(x, y, n), mu_.at(q_.mul(x, y), w, n));
                Coords rhs = z_.add(mu_.at(y, w, n), mu_.at(x, q_.mul(y, w), n));
                if (lhs != rhs)
                    fail(errc::cocycle_identity_failed,
                         "cocycle identity fails at (" + std::to_string(x) + ", " +
                             std::to_string(y) + ", " + std::to_string(w) + ")");
            }
    order_ = Int(n) * z_.order();
}

CentralExtensionGroup::CentralExtensionGroup(const CentralExtensionGroup& o)
    : q_(o.q_), z_(o.z_), mu_(o.mu_), order_(o.order_) {
    p_central_cache_.store(o.p_central_cache_.load());
    p2_abelian_cache_.store(o.p2_abelian_cache_.load());
}

CentralExtensionGroup& CentralExtensionGroup::operator=(const CentralExtensionGroup& o) {
    if (this != &o) {
        q_ = o.q_;
        z_ = o.z_;
        mu_ = o.mu_;
        order_ = o.order_;
        p_central_cache_.store(o.p_central_cache_.load());
        p2_abelian_cache_.store(o.p2_abelian_cache_.load());
    }
    return *this;
}

std::uint64_t CentralExtensionGroup::order_u64() const {
    if (!order_fits(UINT64_MAX)) fail(errc::group_too_large, "group order exceeds 64-bit range");
    return order_.convert_to<std::uint64_t>();
}

GElem CentralExtensionGroup::mul(const GElem& a, const GElem& b) const {
    return {q_.mul(a.x, b.x), z_.add(mu(a.x, b.x), z_.add(a.z, b.z))};
}

GElem CentralExtensionGroup::inverse(const GElem& a) const {
    std::uint32_t y = q_.inverse(a.x);
    return {y, z_.neg(z_.add(mu(a.x, y), a.z))};
}

GElem CentralExtensionGroup::power(const GElem& a, const Int& k) const {
    if (k < 0) return power(inverse(a), -k);
    GElem r = identity_element();
    GElem base = a;
    Int e = k;
    while (e > 0) {
        if ((e & 1) != 0) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint64_t CentralExtensionGroup::index_of(const GElem& a) const {
    return static_cast<std::uint64_t>(a.x) * z_.order_u64() + z_.index_of(a.z);
}

GElem CentralExtensionGroup::element_at(std::uint64_t index) const {
    std::uint64_t zo = z_.order_u64();
    return {static_cast<std::uint32_t>(index / zo), z_.element_at(index % zo)};
}

Coords CentralExtensionGroup::transversal_power_vector(std::uint32_t x) const {
    GElem t = power(transversal(x), Int(z_.p_small()));
    if (t.x != q_.identity())
        fail(errc::not_p_central,
             "transversal p-th power leaves the central factor at coset " + std::to_string(x));
    return t.z;
}

HypothesisStatus CentralExtensionGroup::hypothesis_status() const {
    HypothesisStatus st;
    int pc = p_central_cache_.load();
    int pa = p2_abelian_cache_.load();
    if (pc >= 0) st.p_central = pc == 1;
    if (pa >= 0) st.p2_abelian = pa == 1;
    return st;
}

void CentralExtensionGroup::record_p_central(bool v) const { p_central_cache_.store(v ? 1 : 0); }
void CentralExtensionGroup::record_p2_abelian(bool v) const { p2_abelian_cache_.store(v ? 1 : 0); }

namespace {

void require_within(const CentralExtensionGroup& g, std::uint64_t bound, const char* what) {
    if (!g.order_fits(bound))
        fail(errc::group_too_large, std::string(what) + ": group order " + g.order().str() +
                                        " exceeds bound " + std::to_string(bound));
}

std::vector<GElem> all_elements(const CentralExtensionGroup& g) {
    std::uint64_t m = g.order_u64();
    std::vector<GElem> out;
    out.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) out.push_back(g.element_at(i));
    return out;
}

// Quotient indices x such that (x, n) is central for every n.
std::vector<bool> central_cosets(const CentralExtensionGroup& g) {
    const QGroup& q = g.q();
    std::vector<bool> central(q.order(), true);
    for (std::uint32_t x = 0; x < q.order(); ++x)
        for (std::uint32_t y = 0; y < q.order(); ++y)
            if (q.mul(x, y) != q.mul(y, x) || g.mu(x, y) != g.mu(y, x)) {
                central[x] = false;
                break;
            }
    return central;
}

} // namespace

CenterInfo center_of(const CentralExtensionGroup& g, std::uint64_t bound) {
    require_within(g, bound, "center_of");
    const auto elems = all_elements(g);
    CenterInfo info;
    for (const GElem& a : elems) {
        bool central = true;
        for (const GElem& b : elems) {
            if (!(g.mul(a, b) == g.mul(b, a))) {
                central = false;
                break;
            }
        }
        if (central) info.elements.push_back(a);
    }
    info.equals_center_factor = info.elements.size() == g.z().order_u64();
    if (info.equals_center_factor) {
        for (const GElem& a : info.elements)
            if (!g.is_central_factor(a)) {
                info.equals_center_factor = false;
                break;
            }
    }
    return info;
}

bool center_equals_center_factor(const CentralExtensionGroup& g) {
    const auto central = central_cosets(g);
    for (std::uint32_t x = 0; x < g.q().order(); ++x)
        if (central[x] && x != g.q().identity()) return false;
    return true;
}

bool is_p_central(const CentralExtensionGroup& g, std::uint64_t bound) {
    require_within(g, bound, "is_p_central");
    CenterInfo center = center_of(g, bound);
    std::unordered_set<std::uint64_t> center_idx;
    for (const GElem& a : center.elements) center_idx.insert(g.index_of(a));
    const Int p(g.z().p_small());
    bool ok = true;
    const std::vector<GElem> elems = all_elements(g);
    for (const GElem& a : elems) {
        if (center_idx.count(g.index_of(g.power(a, p))) == 0) {
            ok = false;
            break;
        }
    }
    g.record_p_central(ok);
    return ok;
}

bool is_p2_abelian(const CentralExtensionGroup& g, std::uint64_t bound) {
    require_within(g, bound, "is_p2_abelian");
    const Int p2 = Int(g.z().p_small()) * Int(g.z().p_small());
    const std::uint64_t m = g.order_u64();
    const std::vector<GElem> elems = all_elements(g);
    std::vector<GElem> pw;
    pw.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) pw.push_back(g.power(elems[i], p2));
    bool ok = true;
    for (std::uint64_t i = 0; i < m && ok; ++i) {
        for (std::uint64_t j = 0; j < m; ++j) {
            GElem ab = g.mul(elems[i], elems[j]);
            if (!(pw[g.index_of(ab)] == g.mul(pw[i], pw[j]))) {
                ok = false;
                break;
            }
        }
    }
    g.record_p2_abelian(ok);
    return ok;
}

bool p_central_structural(const CentralExtensionGroup& g) {
    // The central part of an element never affects centrality of its p-th
    // power, so it is enough to check the transversal of every coset.
    const auto central = central_cosets(g);
    const QGroup& q = g.q();
    bool ok = true;
    for (std::uint32_t x = 0; x < q.order() && ok; ++x)
        ok = central[q.power(x, g.z().p_small())];
    g.record_p_central(ok);
    return ok;
}

bool p2_abelian_structural(const CentralExtensionGroup& g) {
    // (ab)^{p^2} = a^{p^2} b^{p^2} holds for all a, b iff it holds for all
    // transversal pairs: central parts contribute p^2 * (n + m) to both sides.
    const QGroup& q = g.q();
    const Int p2 = Int(g.z().p_small()) * Int(g.z().p_small());
    std::vector<GElem> pw;
    pw.reserve(q.order());
    for (std::uint32_t x = 0; x < q.order(); ++x) pw.push_back(g.power(g.transversal(x), p2));
    bool ok = true;
    for (std::uint32_t x = 0; x < q.order() && ok; ++x)
        for (std::uint32_t y = 0; y < q.order(); ++y) {
            GElem lhs = g.power(g.mul(g.transversal(x), g.transversal(y)), p2);
            if (!(lhs == g.mul(pw[x], pw[y]))) {
                ok = false;
                break;
            }
        }
    g.record_p2_abelian(ok);
    return ok;
}

bool power_identity_holds(const CentralExtensionGroup& g) {
    HypothesisStatus st = g.hypothesis_status();
    if (!st.p_central.has_value() || !st.p2_abelian.has_value())
        fail(errc::precondition_not_checked,
             "verify the p-central and p2-abelian predicates before the power identity");
    if (!*st.p_central || !*st.p2_abelian)
        fail(errc::hypothesis_violation, "power identity requires a p-central p2-abelian group");
    const QGroup& q = g.q();
    const AbelianPGroup& z = g.z();
    const Int p(z.p_small());
    std::vector<Coords> beta;
    beta.reserve(q.order());
    for (std::uint32_t x = 0; x < q.order(); ++x) beta.push_back(g.transversal_power_vector(x));
    for (std::uint32_t x = 0; x < q.order(); ++x)
        for (std::uint32_t y = 0; y < q.order(); ++y) {
            Coords lhs = z.scale(p * p, g.mu(x, y));
            Coords sum = z.sub(z.add(beta[x], beta[y]), beta[q.mul(x, y)]);
            if (lhs != z.scale(p, sum)) return false;
        }
    return true;
}

PairPowerDecomposition decompose_pair_powers(const CentralExtensionGroup& g, std::uint32_t x,
                                             std::uint32_t y) {
    const AbelianPGroup& z = g.z();
    const Int p(z.p_small());
    PairPowerDecomposition out;
    out.alpha = g.mu(x, y);
    out.beta = g.transversal_power_vector(x);
    out.gamma = g.transversal_power_vector(y);
    GElem txy_inv_p = g.power(g.inverse(g.transversal(g.q().mul(x, y))), p);
    if (txy_inv_p.x != g.q().identity())
        fail(errc::not_p_central, "transversal power leaves the central factor");
    out.delta = txy_inv_p.z;
    out.k.resize(z.rank());
    for (std::size_t i = 0; i < z.rank(); ++i) {
        Int lhs = out.alpha[i] * p * p;
        Int rhs = (out.beta[i] + out.gamma[i] + out.delta[i]) * p;
        Int diff = lhs - rhs;
        if (diff % z.modulus(i) != 0)
            fail(errc::division_impossible,
                 "power decomposition has no integral closing term at coordinate " +
                     std::to_string(i));
        out.k[i] = diff / z.modulus(i);
    }
    return out;
}

ChiTable construct_chi(const CentralExtensionGroup& g, const EndoMatrix& theta) {
    const AbelianPGroup& z = g.z();
    if (!theta.group.same_group(z)) fail(errc::dimension_mismatch, "theta acts on a different group");
    if (!is_liftable(theta)) fail(errc::not_liftable, "theta violates the lifting congruences");
    const std::size_t n = z.rank();
    const Int p(z.p_small());
    // B = (A - I) / p entrywise; the lifting congruences make this integral.
    std::vector<Int> b(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int diff = theta.at(i, j) - (i == j ? Int(1) : Int(0));
            if (diff % p != 0)
                fail(errc::division_impossible, "matrix entry not divisible by p after shift");
            b[i * n + j] = diff / p;
        }
    ChiTable chi;
    chi.reserve(g.q().order());
    for (std::uint32_t x = 0; x < g.q().order(); ++x) {
        Coords beta = g.transversal_power_vector(x);
        Coords v(n);
        for (std::size_t i = 0; i < n; ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += b[i * n + j] * beta[j];
            v[i] = mod_floor(acc, z.modulus(i));
        }
        chi.push_back(std::move(v));
    }
    return chi;
}

bool lift_identity_holds(const CentralExtensionGroup& g, const EndoMatrix& theta,
                         const ChiTable& chi) {
    const AbelianPGroup& z = g.z();
    if (!theta.group.same_group(z)) fail(errc::dimension_mismatch, "theta acts on a different group");
    if (chi.size() != g.q().order()) fail(errc::dimension_mismatch, "chi needs one value per coset");
    if (chi[g.q().identity()] != z.zero())
        fail(errc::not_normalized, "chi must vanish at the identity coset");
    if (!is_automorphism(theta)) fail(errc::invalid_input, "theta is not an automorphism");
    const QGroup& q = g.q();
    for (std::uint32_t x = 0; x < q.order(); ++x)
        for (std::uint32_t y = 0; y < q.order(); ++y) {
            const Coords& m = g.mu(x, y);
            Coords lhs = z.sub(m, theta.apply(m));
            Coords rhs = z.sub(chi[q.mul(x, y)], z.add(chi[x], chi[y]));
            if (lhs != rhs) return false;
        }
    return true;
}

GElem LiftedAutomorphism::apply(const CentralExtensionGroup& g, const GElem& a) const {
    return {a.x, g.z().add(chi[a.x], theta.apply(a.z))};
}

bool LiftedAutomorphism::is_identity() const {
    if (!(theta == identity_endo(theta.group))) return false;
    for (const auto& v : chi)
        for (const auto& c : v)
            if (c != 0) return false;
    return true;
}

LiftedAutomorphism compose(const CentralExtensionGroup& g, const LiftedAutomorphism& g1,
                           const LiftedAutomorphism& g2) {
    LiftedAutomorphism out{compose(g1.theta, g2.theta), {}};
    out.chi.reserve(g2.chi.size());
    for (std::uint32_t x = 0; x < g2.chi.size(); ++x)
        out.chi.push_back(g.z().add(g1.chi[x], g1.theta.apply(g2.chi[x])));
    return out;
}

namespace {

void require_lift_hypotheses(const CentralExtensionGroup& g) {
    if (g.z().p_small() == 2)
        fail(errc::odd_prime_required, "lifting is only available for odd p");
    HypothesisStatus st = g.hypothesis_status();
    if (!st.p_central.has_value() || !st.p2_abelian.has_value())
        fail(errc::precondition_not_checked,
             "verify the p-central and p2-abelian predicates before lifting");
    if (!*st.p_central) fail(errc::hypothesis_violation, "group is not p-central");
    if (!*st.p2_abelian) fail(errc::hypothesis_violation, "group is not p2-abelian");
    if (!center_equals_center_factor(g))
        fail(errc::hypothesis_violation, "center of the extension exceeds the central factor");
}

} // namespace

LiftReport extend_center_automorphism(const CentralExtensionGroup& g, const EndoMatrix& theta,
                                      std::uint64_t bound, std::uint64_t sample_pairs,
                                      std::uint64_t seed) {
    require_lift_hypotheses(g);
    LiftReport report{{theta, construct_chi(g, theta)}, false, false, 0};
    if (!lift_identity_holds(g, theta, report.automorphism.chi))
        fail(errc::homomorphism_check_failed, "constructed chi fails the compatibility identity");

    const LiftedAutomorphism& gamma = report.automorphism;
    if (g.order_fits(bound)) {
        report.exhaustive = true;
        const std::uint64_t m = g.order_u64();
        std::vector<GElem> elems = all_elements(g);
        std::vector<GElem> image;
        image.reserve(m);
        std::vector<bool> seen(m, false);
        for (std::uint64_t i = 0; i < m; ++i) {
            GElem im = gamma.apply(g, elems[i]);
            std::uint64_t idx = g.index_of(im);
            if (seen[idx]) fail(errc::homomorphism_check_failed, "lift is not injective");
            seen[idx] = true;
            image.push_back(std::move(im));
        }
        for (std::uint64_t i = 0; i < m; ++i) {
            for (std::uint64_t j = 0; j < m; ++j) {
                GElem ab = g.mul(elems[i], elems[j]);
                if (!(image[g.index_of(ab)] == g.mul(image[i], image[j])))
                    fail(errc::homomorphism_check_failed, "lift fails the homomorphism law");
                ++report.pairs_checked;
            }
        }
    } else {
        report.exhaustive = false;
        std::mt19937_64 rng(seed);
        auto random_element = [&]() {
            std::uniform_int_distribution<std::uint32_t> qx(0, g.q().order() - 1);
            Coords v(g.z().rank());
            for (std::size_t i = 0; i < g.z().rank(); ++i) {
                // Uniform residue per coordinate; moduli may exceed 64 bits,
                // in which case we stitch 32-bit limbs.
                Int m = g.z().modulus(i);
                Int r = 0;
                while (m > 0) {
                    std::uint32_t limb = static_cast<std::uint32_t>(rng());
                    r = (r << 32) | limb;
                    m >>= 32;
                }
                v[i] = mod_floor(r, g.z().modulus(i));
            }
            return GElem{qx(rng), std::move(v)};
        };
        for (std::uint64_t t = 0; t < sample_pairs; ++t) {
            GElem a = random_element();
            GElem b = random_element();
            if (!(gamma.apply(g, g.mul(a, b)) == g.mul(gamma.apply(g, a), gamma.apply(g, b))))
                fail(errc::homomorphism_check_failed, "lift fails the homomorphism law (sampled)");
            ++report.pairs_checked;
        }
    }
    report.homomorphism_verified = true;
    return report;
}

std::vector<LiftedAutomorphism> lift_family(const CentralExtensionGroup& g,
                                            std::uint64_t max_classes) {
    require_lift_hypotheses(g);
    Int expected = liftable_count(g.z());
    if (expected > Int(max_classes))
        fail(errc::enumeration_too_large,
             "family has " + expected.str() + " members, bound is " + std::to_string(max_classes));
    std::vector<LiftedAutomorphism> family;
    enumerate_liftable(g.z(), [&](const EndoMatrix& theta) {
        LiftedAutomorphism gamma{theta, construct_chi(g, theta)};
        if (!lift_identity_holds(g, theta, gamma.chi))
            fail(errc::homomorphism_check_failed, "family member fails the compatibility identity");
        family.push_back(std::move(gamma));
    }, max_classes);
    if (Int(family.size()) != expected)
        fail(errc::homomorphism_check_failed, "family size disagrees with the counting formula");
    return family;
}

} // namespace centralaut
