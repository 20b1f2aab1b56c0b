#pragma once

#include <string>
#include <vector>

#include "centralaut/extension.hpp"
#include "centralaut/oracle.hpp"

namespace centralaut {

struct BuiltinInfo {
    std::string name;
    std::string description;
};

// Fixed corpus of multiplication-table groups for the brute-force pipelines.
const std::vector<BuiltinInfo>& builtin_table_list();
TableGroup make_builtin_table(const std::string& name);

// Fixed corpus of central extensions for the lifting pipelines.
const std::vector<BuiltinInfo>& builtin_extension_list();
CentralExtensionGroup make_builtin_extension(const std::string& name);

// Names of the bundled non-cyclic prime-power tables of order p^3..p^5,
// the default corpus for the divisibility check.
std::vector<std::string> conjecture_corpus();

// Heisenberg group of order p^3 (exponent p, odd p) as a central extension.
CentralExtensionGroup heisenberg_extension(std::uint32_t p);

// <a, b | a^{p^2} = b^p = 1, b a b^{-1} = a^{1+p}>, order p^3.
TableGroup modular_table(std::uint32_t p);

// Dihedral group of order 2m.
TableGroup dihedral_table(std::uint32_t m);

TableGroup quaternion8_table();

} // namespace centralaut
