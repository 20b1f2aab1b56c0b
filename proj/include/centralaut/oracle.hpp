#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "centralaut/abelian.hpp"
#include "centralaut/extension.hpp"

namespace centralaut {

inline constexpr std::uint64_t kDefaultBruteBound = 750;

/**
 * A finite group as an explicit multiplication table. Construction verifies
 * the group axioms: an identity, two-sided inverses, and associativity over
 * all m^3 triples. Everything downstream (center, inner maps, automorphism
 * search) treats the table as ground truth.
 */
class TableGroup {
public:
    TableGroup(std::vector<std::uint32_t> table, std::uint32_t order,
               std::vector<std::string> labels = {});

    std::uint32_t order() const noexcept { return order_; }
    std::uint32_t identity() const noexcept { return identity_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * order_ + b]; }
    std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
    std::uint32_t element_order(std::uint32_t a) const { return elt_order_[a]; }
    const std::string& label(std::uint32_t a) const { return labels_[a]; }
    const std::vector<std::uint32_t>& raw_table() const noexcept { return table_; }

private:
    std::uint32_t order_;
    std::uint32_t identity_ = 0;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inverse_;
    std::vector<std::uint32_t> elt_order_;
    std::vector<std::string> labels_;
};

// A map G -> G as an image vector (automorphism when flagged so by producers).
struct GroupMap {
    std::vector<std::uint32_t> image;

    bool operator==(const GroupMap& o) const { return image == o.image; }
    bool operator<(const GroupMap& o) const { return image < o.image; }
};

// Multiplication table of an extension, with the index codec retained so
// automorphisms can be transported between the two representations.
struct ExtensionTable {
    TableGroup table;
    // element i of the table is extension element element_at(i)
};

ExtensionTable table_from_extension(const CentralExtensionGroup& g,
                                    std::uint64_t bound = kDefaultBruteBound);

TableGroup table_from_abelian(const AbelianPGroup& g, std::uint64_t bound = kDefaultBruteBound);

// Transport a lifted automorphism through the extension's index codec.
GroupMap map_from_lift(const CentralExtensionGroup& g, const LiftedAutomorphism& gamma);

// Transport a matrix automorphism of an abelian group onto its table.
GroupMap map_from_endo(const AbelianPGroup& g, const EndoMatrix& m);

struct BruteOptions {
    std::uint64_t bound = kDefaultBruteBound;
    unsigned jobs = 1;
};

/**
 * Complete automorphism search by backtracking over generator images.
 * Generators are chosen greedily by descending element order; candidate
 * images are restricted to elements of equal order and partial maps are
 * closed under multiplication with conflict detection, so every leaf is a
 * verified automorphism. Search cost is proportional to the number of
 * automorphisms; callers budget accordingly.
 */
void brute_aut_visit(const TableGroup& t, const std::function<void(const GroupMap&)>& visit,
                     const BruteOptions& opt = {});

std::vector<GroupMap> brute_aut(const TableGroup& t, const BruteOptions& opt = {});

Int brute_aut_count(const TableGroup& t, const BruteOptions& opt = {});

struct CenterInner {
    std::vector<std::uint32_t> center;
    std::vector<GroupMap> inner;
};

// Exact center by commutation plus one conjugation map per coset of it.
CenterInner center_and_inner(const TableGroup& t, std::uint64_t bound = kDefaultBruteBound);

// Largest power of p dividing |Aut| / |Inn|.
Int out_p_part(const TableGroup& t, std::uint64_t p, std::uint64_t bound = kDefaultBruteBound);

struct ConjectureVerdict {
    bool applicable = false;   // non-cyclic p-group of order p^n, n >= 3
    bool holds = false;        // |G| divides |Aut(G)|
    bool cyclic = false;
    std::uint32_t n = 0;       // order = p^n
    Int group_order;
    Int aut_order;
    std::string reason;        // why not applicable, when it is not
};

// Divisibility verdict for one table; p must match the group order.
ConjectureVerdict conjecture_verdict(const TableGroup& t, std::uint64_t p,
                                     std::uint64_t bound = kDefaultBruteBound);

/**
 * Rebuilds a table group as a central extension: Z is the subgroup generated
 * by the given central elements (which must be independent generators with
 * orders p^{exponents[i]}), Q the quotient table, and the cocycle is read off
 * a transversal. The result multiplies exactly like the original table.
 */
CentralExtensionGroup extension_from_table(const TableGroup& t, std::uint64_t p,
                                           const std::vector<std::uint32_t>& center_gens,
                                           const std::vector<std::uint32_t>& exponents);

} // namespace centralaut
