#pragma once

#include <cstdint>
#include <vector>

#include "centralaut/numbers.hpp"

namespace centralaut {

// Element of a finite abelian p-group, stored as one canonical residue per
// cyclic factor: coords[i] in [0, p^{e_i}).
using Coords = std::vector<Int>;

/**
 * A finite abelian p-group  Z/p^{e_1} x ... x Z/p^{e_n}  with ascending
 * exponents e_1 <= ... <= e_n. Exponents are sorted on construction, p is
 * checked for primality, and the object is immutable afterwards: every
 * operation is a pure function, safe for concurrent use.
 */
class AbelianPGroup {
public:
    AbelianPGroup(std::uint64_t p, std::vector<std::uint32_t> exponents);

    std::uint64_t p_small() const noexcept { return p_; }
    const Int& p() const noexcept { return p_big_; }
    std::size_t rank() const noexcept { return exponents_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exponents_.at(i); }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exponents_; }
    const Int& modulus(std::size_t i) const { return moduli_.at(i); }  // p^{e_i}
    const Int& order() const noexcept { return order_; }

    bool same_group(const AbelianPGroup& other) const;

    Coords zero() const;
    Coords basis(std::size_t i) const;  // z_i: 1 in slot i, 0 elsewhere
    bool is_element(const Coords& a) const;

    Coords reduce(const Coords& raw) const;  // componentwise canonical residue
    Coords add(const Coords& a, const Coords& b) const;
    Coords sub(const Coords& a, const Coords& b) const;
    Coords neg(const Coords& a) const;
    Coords scale(const Int& k, const Coords& a) const;

    // Least m >= 1 with m*a = 0; always a power of p.
    Int element_order(const Coords& a) const;

    // Mixed-radix index codec for desk-scale enumeration (element 0 is zero).
    bool order_fits(std::uint64_t bound) const;
    std::uint64_t order_u64() const;  // requires order_fits
    std::uint64_t index_of(const Coords& a) const;
    Coords element_at(std::uint64_t index) const;

private:
    std::uint64_t p_;
    Int p_big_;
    std::vector<std::uint32_t> exponents_;
    std::vector<Int> moduli_;
    Int order_;
    // u64 mirrors for the index codec; order_u64_ is 0 when the order
    // overflows 64 bits.
    std::vector<std::uint64_t> moduli_u64_;
    std::uint64_t order_u64_ = 0;

    void check_dimension(const Coords& a) const;
};

/**
 * Index bookkeeping for the repeated exponents of the cyclic decomposition.
 * All stored values are 1-based positions, exactly as used by the counting
 * formulas: d[k-1] = max{m : e_m = e_k}, c[k-1] = min{m : e_m = e_k},
 * e_prime = distinct exponents ascending, C/D = first/last position per
 * distinct exponent, and C has an extra final entry n+1.
 */
struct IndexProfile {
    std::vector<std::uint32_t> d;
    std::vector<std::uint32_t> c;
    std::vector<std::uint32_t> e_prime;
    std::vector<std::uint32_t> C;  // size l+1, C[l] = n+1
    std::vector<std::uint32_t> D;  // size l
    std::uint32_t l = 0;
};

IndexProfile index_profile(const AbelianPGroup& g);

} // namespace centralaut
