#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cihomol/homalg.hpp"
#include "cihomol/support.hpp"

namespace cihomol {

/// Family recipe for the generators and the `gen` CLI command.
struct FamilySpec {
    enum class Kind {
        HFamily,          // A/(g), A/(g^2), ..., A/(g^{r-1}) for one form g
        AxisQuotients,    // A/(x_i^j) for every variable and 1 <= j < a_i
        SyzygyClosure,    // axis quotients closed under Omega / Omega^{-1}
        ExtensionClosure, // axis quotients closed under pushout extensions
        RestrictionChain  // restrictions of scalars along a power subring
    };
    Kind kind = Kind::AxisQuotients;
    std::optional<LinearForm> g;       // HFamily
    std::size_t depth = 2;             // SyzygyClosure
    std::size_t count = 8;             // ExtensionClosure
    std::vector<unsigned> powers;      // RestrictionChain
};

/// H_i = A/(g^i) for i = 1..r-1 where r = form_order(ring, g); requires
/// r >= 2. Every member has one minimal generator and length i * l(H_1).
std::vector<Module> h_family(const Ring& ring, const LinearForm& g);

struct CertifiedModule {
    Module module;
    ComplexityVerdict certificate;
};

/// Seeded family of modules with certified complexity <= 1, built only by
/// certificate-preserving constructors (H-family members, axis quotients,
/// syzygies, cosyzygies, finite direct sums, extensions of members whose
/// supports are not known to differ). Uncertified candidates are discarded;
/// at most `budget` members are returned and identical seeds reproduce the
/// family byte for byte.
std::vector<CertifiedModule> cx1_family(const Ring& ring, const FamilySpec& spec,
                                        std::size_t budget, std::uint64_t seed,
                                        std::size_t max_deg = 8, std::size_t trials = 32,
                                        Cache* cache = nullptr);

/// Seeded family of modules certified to avoid the point alpha: each member
/// passes supports_disjoint against the periodic witness H = A/(l_alpha).
/// Throws if the witness cannot be certified periodic.
std::vector<Module> avoiding_family(const Ring& ring, const LinearForm& alpha,
                                    std::size_t budget, std::uint64_t seed,
                                    std::size_t max_deg = 8, std::size_t trials = 32,
                                    Cache* cache = nullptr);

/// Plain (uncertified) family realization for file emission.
std::vector<Module> family_from_spec(const Ring& ring, const FamilySpec& spec,
                                     std::uint64_t seed, Cache* cache = nullptr);

/// Deterministic small random module: quotient of A^rank by the submodule
/// generated by seeded random vectors. Used by property suites.
Module random_quotient_module(const Ring& ring, std::size_t rank, std::size_t relations,
                              std::uint64_t seed);

} // namespace cihomol
