#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "centralaut/abelian.hpp"
#include "centralaut/endomat.hpp"

namespace centralaut {

/**
 * A finite group given by its multiplication table, used as the quotient of a
 * central extension. Group axioms (identity, inverses, associativity) are
 * verified on construction.
 */
class QGroup {
public:
    QGroup(std::vector<std::uint32_t> table, std::uint32_t order,
           std::vector<std::string> labels = {});

    std::uint32_t order() const noexcept { return order_; }
    std::uint32_t identity() const noexcept { return identity_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * order_ + b]; }
    std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
    std::uint32_t power(std::uint32_t a, std::uint64_t k) const;
    const std::string& label(std::uint32_t a) const { return labels_[a]; }
    const std::vector<std::uint32_t>& raw_table() const noexcept { return table_; }

    static QGroup trivial();
    static QGroup cyclic(std::uint32_t m);
    // (Z/p)^rank with index = base-p digits, digit 0 = first coordinate.
    static QGroup elementary(std::uint32_t p, std::uint32_t rank);

private:
    std::uint32_t order_;
    std::uint32_t identity_ = 0;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inverse_;
    std::vector<std::string> labels_;
};

/**
 * Normalized 2-cocycle mu : Q x Q -> Z written additively in Z. Normalization
 * means mu(1, y) = mu(x, 1) = 0; the cocycle identity
 * mu(x,y) + mu(xy,z) = mu(y,z) + mu(x,yz) is exactly associativity of the
 * extension it defines and is verified by the extension constructor.
 */
struct CocycleTable {
    std::vector<Coords> values;  // q*q row-major: values[x*q + y] = mu(x, y)

    const Coords& at(std::uint32_t x, std::uint32_t y, std::uint32_t q) const {
        return values[x * q + y];
    }
};

// mu(x, y) = scale * <x, B y> placed into coordinate `coord` of Z; Q must be
// elementary abelian of exponent p and p^{e_coord - 1} must divide scale
// (otherwise the cocycle identity cannot hold on representatives).
CocycleTable bilinear_cocycle(const QGroup& q, const AbelianPGroup& z, std::uint32_t rank,
                              const Int& scale, const std::vector<Int>& form,
                              std::size_t coord = 0);

// Adds the coboundary of f (f : Q -> Z with f(1) = 0) to mu; the extension it
// defines is isomorphic to the original one via (x, n) -> (x, n + f(x)).
CocycleTable add_coboundary(const QGroup& q, const AbelianPGroup& z, const CocycleTable& mu,
                            const std::vector<Coords>& f);

// Element of the extension: a quotient index and a central part.
struct GElem {
    std::uint32_t x;
    Coords z;

    bool operator==(const GElem& o) const { return x == o.x && z == o.z; }
};

inline constexpr std::uint64_t kDefaultExhaustionBound = 729;  // 3^6

struct CenterInfo {
    std::vector<GElem> elements;
    bool equals_center_factor = false;
};

struct HypothesisStatus {
    std::optional<bool> p_central;
    std::optional<bool> p2_abelian;
};

/**
 * Central extension 1 -> Z -> G -> Q -> 1 with multiplication
 * (x, n)(y, m) = (xy, mu(x,y) + n + m). The chosen transversal is
 * t(x) = (x, 0), so mu is normalized and t(1) is the identity. Construction
 * verifies normalization and the full cocycle identity (q^3 triples), then the
 * object is immutable; predicate results are cached for later identity checks.
 */
class CentralExtensionGroup {
public:
    CentralExtensionGroup(QGroup q, AbelianPGroup z, CocycleTable mu);

    const QGroup& q() const noexcept { return q_; }
    const AbelianPGroup& z() const noexcept { return z_; }
    const CocycleTable& cocycle() const noexcept { return mu_; }
    const Coords& mu(std::uint32_t x, std::uint32_t y) const { return mu_.at(x, y, q_.order()); }
    const Int& order() const noexcept { return order_; }
    bool order_fits(std::uint64_t bound) const { return order_ <= Int(bound); }
    std::uint64_t order_u64() const;

    GElem identity_element() const { return {q_.identity(), z_.zero()}; }
    GElem transversal(std::uint32_t x) const { return {x, z_.zero()}; }
    GElem central(const Coords& n) const { return {q_.identity(), n}; }
    GElem mul(const GElem& a, const GElem& b) const;
    GElem inverse(const GElem& a) const;
    GElem power(const GElem& a, const Int& k) const;
    bool is_central_factor(const GElem& a) const { return a.x == q_.identity(); }

    // Index codec for desk-scale exhaustion: index = x * |Z| + index_of(z).
    std::uint64_t index_of(const GElem& a) const;
    GElem element_at(std::uint64_t index) const;

    // Exponent vector of t(x)^p (an element of the central factor; requires
    // x^p = 1 in Q, which the p-central property guarantees).
    Coords transversal_power_vector(std::uint32_t x) const;

    // Hypothesis caches filled by the predicate functions below.
    HypothesisStatus hypothesis_status() const;
    void record_p_central(bool v) const;
    void record_p2_abelian(bool v) const;

    CentralExtensionGroup(const CentralExtensionGroup& o);
    CentralExtensionGroup& operator=(const CentralExtensionGroup& o);

private:
    QGroup q_;
    AbelianPGroup z_;
    CocycleTable mu_;
    Int order_;
    mutable std::atomic<int> p_central_cache_{-1};
    mutable std::atomic<int> p2_abelian_cache_{-1};
};

// Exact center as an element list, by pairwise commutation over all of G.
// Throws GroupTooLarge beyond the bound.
CenterInfo center_of(const CentralExtensionGroup& g,
                     std::uint64_t bound = kDefaultExhaustionBound);

// Structural center test, exact for any size: (x, n) is central iff x
// commutes with every y in Q and mu(x, y) = mu(y, x) for all y, independent
// of n. The center equals the central factor iff only x = 1 qualifies.
bool center_equals_center_factor(const CentralExtensionGroup& g);

// g^p central for every g in G, decided against the computed center.
// Exhaustive within the bound, GroupTooLarge beyond it.
bool is_p_central(const CentralExtensionGroup& g, std::uint64_t bound = kDefaultExhaustionBound);

// (ab)^{p^2} = a^{p^2} b^{p^2} for all ordered pairs, exhaustive within bound.
bool is_p2_abelian(const CentralExtensionGroup& g, std::uint64_t bound = kDefaultExhaustionBound);

// Same predicates decided through the central factor: the central part of an
// element never affects either property, so both reduce to checks over Q
// (q and q^2 cases) that remain exact for arbitrarily large Z.
bool p_central_structural(const CentralExtensionGroup& g);
bool p2_abelian_structural(const CentralExtensionGroup& g);

// Power identity p^2 * mu(x,y) = p * (beta(x) + beta(y) - beta(xy)) in Z for
// all pairs, where beta(x) is the exponent vector of t(x)^p. Requires the
// p-central and p2-abelian predicates to have been verified (and to hold).
bool power_identity_holds(const CentralExtensionGroup& g);

// The per-pair integer identity alpha_i p^2 = (beta_i+gamma_i+delta_i) p + k_i p^{e_i}.
struct PairPowerDecomposition {
    Coords alpha;           // exponent vector of mu(x, y)
    Coords beta;            // t(x)^p
    Coords gamma;           // t(y)^p
    Coords delta;           // t(xy)^{-p}
    std::vector<Int> k;     // the unique integers closing the identity
};

PairPowerDecomposition decompose_pair_powers(const CentralExtensionGroup& g, std::uint32_t x,
                                             std::uint32_t y);

// chi : Q -> Z with chi(1) = 0, stored as one value per quotient element.
using ChiTable = std::vector<Coords>;

// Builds chi for a liftable theta by applying (A - I)/p to the exponent
// vector of t(x)^p. Requires theta liftable and G p-central (verified).
ChiTable construct_chi(const CentralExtensionGroup& g, const EndoMatrix& theta);

// The compatibility identity mu(x,y) - theta(mu(x,y)) = chi(xy) - chi(x) - chi(y)
// over all q^2 ordered pairs; holding is exactly what makes
// (x, n) -> (x, chi(x) + theta(n)) an automorphism.
bool lift_identity_holds(const CentralExtensionGroup& g, const EndoMatrix& theta,
                         const ChiTable& chi);

/**
 * Automorphism of the extension that fixes every coset of the central factor:
 * gamma(x, n) = (x, chi(x) + theta(n)). Restricting to the central factor
 * gives back theta.
 */
struct LiftedAutomorphism {
    EndoMatrix theta;
    ChiTable chi;

    GElem apply(const CentralExtensionGroup& g, const GElem& a) const;
    bool is_identity() const;
    bool operator==(const LiftedAutomorphism& o) const {
        return theta == o.theta && chi == o.chi;
    }
};

// Map composition: (g1 * g2)(a) = g1(g2(a)).
LiftedAutomorphism compose(const CentralExtensionGroup& g, const LiftedAutomorphism& g1,
                           const LiftedAutomorphism& g2);

struct LiftReport {
    LiftedAutomorphism automorphism;
    bool homomorphism_verified = false;
    bool exhaustive = false;     // element-level check mode
    std::uint64_t pairs_checked = 0;
};

// Lifts a liftable theta to a whole-group automorphism. Requires p odd, the
// p-central and p2-abelian predicates verified true, and center = central
// factor. The element-level homomorphism check is exhaustive when |G| is
// within the bound and sampled (sample_pairs random pairs) otherwise.
LiftReport extend_center_automorphism(const CentralExtensionGroup& g, const EndoMatrix& theta,
                                      std::uint64_t bound = kDefaultExhaustionBound,
                                      std::uint64_t sample_pairs = 10000,
                                      std::uint64_t seed = 0x5eed);

// One lifted automorphism per liftable theta; list size is liftable_count(Z).
// Members carry their verified compatibility identity; whole-group
// verification of an individual member is extend_center_automorphism's job.
std::vector<LiftedAutomorphism> lift_family(const CentralExtensionGroup& g,
                                            std::uint64_t max_classes = kDefaultEnumerationBound);

} // namespace centralaut
