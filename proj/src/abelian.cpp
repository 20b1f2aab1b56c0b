#include "centralaut/abelian.hpp"

#include <algorithm>

#include "centralaut/error.hpp"

namespace centralaut {

AbelianPGroup::AbelianPGroup(std::uint64_t p, std::vector<std::uint32_t> exponents)
    : p_(p), p_big_(p), exponents_(std::move(exponents)) {
    if (!is_prime_u64(p_)) fail(errc::non_prime, "p = " + std::to_string(p_) + " is not prime");
    if (exponents_.empty()) fail(errc::empty_exponents, "exponent list is empty");
    for (auto e : exponents_) {
        if (e == 0) fail(errc::non_positive_exponent, "exponents must be >= 1");
    }
    std::sort(exponents_.begin(), exponents_.end());
    moduli_.reserve(exponents_.size());
    order_ = 1;
    for (auto e : exponents_) {
        moduli_.push_back(pow_int(p_big_, e));
        order_ *= moduli_.back();
    }
    if (order_ <= Int(UINT64_MAX)) {
        order_u64_ = order_.convert_to<std::uint64_t>();
        for (const auto& m : moduli_) moduli_u64_.push_back(m.convert_to<std::uint64_t>());
    }
}

bool AbelianPGroup::same_group(const AbelianPGroup& other) const {
    return p_ == other.p_ && exponents_ == other.exponents_;
}

Coords AbelianPGroup::zero() const { return Coords(rank(), Int(0)); }

Coords AbelianPGroup::basis(std::size_t i) const {
    Coords z = zero();
    z.at(i) = 1;
    return z;
}

bool AbelianPGroup::is_element(const Coords& a) const {
    if (a.size() != rank()) return false;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i] < 0 || a[i] >= moduli_[i]) return false;
    }
    return true;
}

void AbelianPGroup::check_dimension(const Coords& a) const {
    if (a.size() != rank())
        fail(errc::dimension_mismatch,
             "element has " + std::to_string(a.size()) + " coordinates, group has rank " +
                 std::to_string(rank()));
}

Coords AbelianPGroup::reduce(const Coords& raw) const {
    check_dimension(raw);
    Coords out(rank());
    for (std::size_t i = 0; i < rank(); ++i) out[i] = mod_floor(raw[i], moduli_[i]);
    return out;
}

Coords AbelianPGroup::add(const Coords& a, const Coords& b) const {
    check_dimension(a);
    check_dimension(b);
    Coords out(rank());
    for (std::size_t i = 0; i < rank(); ++i) out[i] = mod_floor(a[i] + b[i], moduli_[i]);
    return out;
}

Coords AbelianPGroup::sub(const Coords& a, const Coords& b) const {
    check_dimension(a);
    check_dimension(b);
    Coords out(rank());
    for (std::size_t i = 0; i < rank(); ++i) out[i] = mod_floor(a[i] - b[i], moduli_[i]);
    return out;
}

Coords AbelianPGroup::neg(const Coords& a) const {
    check_dimension(a);
    Coords out(rank());
    for (std::size_t i = 0; i < rank(); ++i) out[i] = mod_floor(-a[i], moduli_[i]);
    return out;
}

Coords AbelianPGroup::scale(const Int& k, const Coords& a) const {
    check_dimension(a);
    Coords out(rank());
    for (std::size_t i = 0; i < rank(); ++i) out[i] = mod_floor(k * a[i], moduli_[i]);
    return out;
}

Int AbelianPGroup::element_order(const Coords& a) const {
    check_dimension(a);
    // Per slot, order of a_i in Z/p^{e_i} is p^{e_i - min(v_p(a_i), e_i)};
    // the element order is the max of the slot orders.
    std::uint32_t best = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        std::uint32_t v = valuation(a[i], p_big_);
        std::uint32_t e = exponents_[i];
        std::uint32_t k = v >= e ? 0 : e - v;
        best = std::max(best, k);
    }
    return pow_int(p_big_, best);
}

bool AbelianPGroup::order_fits(std::uint64_t bound) const {
    return order_u64_ != 0 && order_u64_ <= bound;
}

std::uint64_t AbelianPGroup::order_u64() const {
    if (order_u64_ == 0) fail(errc::group_too_large, "group order exceeds 64-bit range");
    return order_u64_;
}

std::uint64_t AbelianPGroup::index_of(const Coords& a) const {
    check_dimension(a);
    if (order_u64_ == 0) fail(errc::group_too_large, "group order exceeds 64-bit range");
    std::uint64_t idx = 0;
    std::uint64_t weight = 1;
    for (std::size_t i = 0; i < rank(); ++i) {
        idx += a[i].convert_to<std::uint64_t>() * weight;
        weight *= moduli_u64_[i];
    }
    return idx;
}

Coords AbelianPGroup::element_at(std::uint64_t index) const {
    if (order_u64_ == 0) fail(errc::group_too_large, "group order exceeds 64-bit range");
    Coords a(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        a[i] = Int(index % moduli_u64_[i]);
        index /= moduli_u64_[i];
    }
    return a;
}

IndexProfile index_profile(const AbelianPGroup& g) {
    const auto& e = g.exponents();
    const std::uint32_t n = static_cast<std::uint32_t>(e.size());
    IndexProfile pr;
    pr.d.resize(n);
    pr.c.resize(n);
    for (std::uint32_t k = 0; k < n; ++k) {
        std::uint32_t lo = k, hi = k;
        while (lo > 0 && e[lo - 1] == e[k]) --lo;
        while (hi + 1 < n && e[hi + 1] == e[k]) ++hi;
        pr.c[k] = lo + 1;
        pr.d[k] = hi + 1;
    }
    for (std::uint32_t k = 0; k < n; ++k) {
        if (k == 0 || e[k] != e[k - 1]) {
            pr.e_prime.push_back(e[k]);
            pr.C.push_back(k + 1);
            pr.D.push_back(pr.d[k]);
        }
    }
    pr.l = static_cast<std::uint32_t>(pr.e_prime.size());
    pr.C.push_back(n + 1);
    return pr;
}

} // namespace centralaut
