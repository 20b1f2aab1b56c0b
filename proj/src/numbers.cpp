#include "centralaut/numbers.hpp"

#include "centralaut/error.hpp"

namespace centralaut {

const char* errc_name(errc c) {
    switch (c) {
        case errc::non_prime: return "NonPrime";
        case errc::empty_exponents: return "EmptyExponents";
        case errc::non_positive_exponent: return "NonPositiveExponent";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::not_endomorphism: return "NotEndomorphism";
        case errc::not_canonical: return "NotCanonical";
        case errc::enumeration_too_large: return "EnumerationTooLarge";
        case errc::exponent_too_small: return "ExponentTooSmall";
        case errc::hypothesis_violation: return "HypothesisViolation";
        case errc::not_liftable: return "NotLiftable";
        case errc::division_impossible: return "DivisionImpossible";
        case errc::cocycle_identity_failed: return "CocycleIdentityFailed";
        case errc::not_normalized: return "NotNormalized";
        case errc::group_too_large: return "GroupTooLarge";
        case errc::not_p_central: return "NotPCentral";
        case errc::precondition_not_checked: return "PreconditionNotChecked";
        case errc::homomorphism_check_failed: return "HomomorphismCheckFailed";
        case errc::not_a_p_group: return "NotAPGroup";
        case errc::odd_prime_required: return "OddPrimeRequired";
        case errc::invalid_input: return "InvalidInput";
    }
    return "UnknownError";
}

Int pow_int(const Int& base, std::uint64_t exp) {
    Int result = 1;
    Int b = base;
    while (exp != 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

std::uint32_t valuation(Int x, const Int& p) {
    if (x == 0) fail(errc::invalid_input, "valuation of zero is undefined");
    if (x < 0) x = -x;
    std::uint32_t v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

Int mod_floor(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e != 0) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Sprp bases sufficient for all 64-bit integers.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::string factored_by_prime(const Int& x, const Int& p) {
    if (x == 0) return "0";
    if (x % p != 0) return x.str();
    std::uint32_t v = valuation(x, p);
    Int m = x / pow_int(p, v);
    std::string s = p.str() + "^" + std::to_string(v);
    if (m != 1) s += " * " + m.str();
    return s;
}

} // namespace centralaut
