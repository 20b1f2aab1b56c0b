#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "centralaut/abelian.hpp"

namespace centralaut {

/**
 * Endomorphism of an abelian p-group H = Z/p^{e_1} x ... x Z/p^{e_n} in the
 * matrix model: an integer matrix A acts columnwise on coordinate vectors,
 * row i reduced mod p^{e_i}. A represents an endomorphism iff
 * p^{e_i - e_j} | a_ij for j <= i (rows ordered by ascending exponent), and
 * two matrices induce the same map iff they agree entrywise mod p^{e_i}.
 * EndoMatrix always stores the canonical entry 0 <= a_ij < p^{e_i}, so map
 * equality is entrywise equality.
 */
struct EndoMatrix {
    AbelianPGroup group;
    std::vector<Int> entries;  // row-major n*n, canonical residues

    const Int& at(std::size_t i, std::size_t j) const { return entries[i * group.rank() + j]; }
    Int& at(std::size_t i, std::size_t j) { return entries[i * group.rank() + j]; }

    // The induced map on elements: row i of the product reduced mod p^{e_i}.
    Coords apply(const Coords& a) const;

    bool operator==(const EndoMatrix& o) const {
        return group.same_group(o.group) && entries == o.entries;
    }
};

// Decomposition of the diagonal of a liftable matrix: a_ii = 1 + s_i p^{r_i}
// with r_i >= 2; a_ii = 1 is stored as s_i = 0, r_i = e_i.
struct DiagonalDecomposition {
    std::vector<Int> s;
    std::vector<std::uint32_t> r;
};

// Divisibility test: does the raw integer matrix represent an endomorphism?
bool represents_endomorphism(const AbelianPGroup& g, const std::vector<Int>& raw);

// Reduce a representing matrix to canonical residues (throws if it does not represent).
EndoMatrix canonicalize(const AbelianPGroup& g, const std::vector<Int>& raw);

EndoMatrix identity_endo(const AbelianPGroup& g);

// Matrix product followed by canonical reduction; represents the composite map
// (left factor applied after the right one, like function composition).
EndoMatrix compose(const EndoMatrix& m1, const EndoMatrix& m2);

// Automorphism criterion: invertible mod p, tested via the determinant over F_p.
bool is_automorphism(const EndoMatrix& m);

// Closed-form |Aut(H)| from the index profile.
Int aut_order(const AbelianPGroup& g);

// Number of canonical matrices (= |End(H)|).
Int endo_class_count(const AbelianPGroup& g);

inline constexpr std::uint64_t kDefaultEnumerationBound = std::uint64_t(1) << 20;

// Enumerate every canonical matrix exactly once. Throws EnumerationTooLarge
// when the class count exceeds max_classes.
void enumerate_endos(const AbelianPGroup& g, const std::function<void(const EndoMatrix&)>& visit,
                     std::uint64_t max_classes = kDefaultEnumerationBound);

void enumerate_autos(const AbelianPGroup& g, const std::function<void(const EndoMatrix&)>& visit,
                     std::uint64_t max_classes = kDefaultEnumerationBound);

/**
 * Liftability congruences for automorphisms of the center of an ambient group:
 * the matrix must be = I mod p, with a_ii = 1 mod p^2 and, whenever e_i >= e_j
 * and i != j, a_ij = 0 mod p^{e_i-e_j+2} (all read as congruences of the
 * canonical residues, capped at the row modulus).
 */
bool is_liftable(const EndoMatrix& m);

// Exact count of liftable matrices; requires e_1 >= 2.
Int liftable_count(const AbelianPGroup& g);

// |H| * p^{n^2-3n}; requires n >= 3 and e_1 >= 3. Never exceeds liftable_count.
Int liftable_count_lower_bound(const AbelianPGroup& g);

DiagonalDecomposition diagonal_unit_decomposition(const EndoMatrix& m);

// Enumerate exactly the liftable matrices (their count is liftable_count(g)).
void enumerate_liftable(const AbelianPGroup& g,
                        const std::function<void(const EndoMatrix&)>& visit,
                        std::uint64_t max_classes = kDefaultEnumerationBound);

// Uniformly random liftable matrix (used by the randomized closure checks).
EndoMatrix random_liftable(const AbelianPGroup& g, std::mt19937_64& rng);

} // namespace centralaut
