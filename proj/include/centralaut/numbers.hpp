#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace centralaut {

// All group orders, automorphism counts and matrix entries are exact integers;
// 64-bit overflows already at modest parameters, so everything arithmetic is cpp_int.
using Int = boost::multiprecision::cpp_int;

// base^exp for non-negative exp.
Int pow_int(const Int& base, std::uint64_t exp);

// Largest v with p^v | x, for x != 0. For x == 0 callers must special-case.
std::uint32_t valuation(Int x, const Int& p);

// Canonical residue in [0, m) for m > 0, also for negative x.
Int mod_floor(const Int& x, const Int& m);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// "p^k" or "p^k * m" with m coprime to p; plain decimal if p does not divide x.
std::string factored_by_prime(const Int& x, const Int& p);

} // namespace centralaut
