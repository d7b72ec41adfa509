#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cihomol/module.hpp"

namespace cihomol {

/// Class of a module in the stable Grothendieck group Z/l(A)Z:
/// the length mod l(A).
struct GClass {
    std::uint64_t value;
    std::uint64_t modulus;
};

GClass gclass(const Module& m);

/// The subgroup of Z/l(A)Z generated by the lengths of a family. Subgroups
/// of a finite cyclic group form the divisor lattice, so the subgroup is
/// g Z/l(A)Z with g = gcd(l(A), lengths); its index is g.
struct SubgroupInfo {
    std::uint64_t generator;
    std::uint64_t index;
};
SubgroupInfo subgroup_of_lengths(const Ring& ring, std::span<const Module> family);

struct DivisibilityRow {
    std::string hash;
    std::size_t length;
    std::uint64_t gclass_value;
    bool pass;
};

struct DivisibilityReport {
    std::uint64_t divisor;
    std::uint64_t modulus;
    std::vector<DivisibilityRow> rows;
    bool pass;
    std::vector<std::string> failures; // hashes of failing modules
};

/// Per-module check of d | l(m), d >= 2, with aggregate verdict and the
/// witness list of failures.
DivisibilityReport divisibility_report(const Ring& ring, std::span<const Module> family,
                                       std::uint64_t d);

std::string divisibility_to_json(const DivisibilityReport& r);
std::string divisibility_to_csv(const DivisibilityReport& r);

} // namespace cihomol
