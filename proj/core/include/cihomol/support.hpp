#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cihomol/homalg.hpp"

namespace cihomol {

struct DisjointVerdict {
    enum class Kind { Disjoint, NotDisjoint, Undetermined };
    Kind kind;
    std::size_t index = 0; // first nonvanishing Tor index for NotDisjoint
    std::string note;

    std::string to_string() const;
};

/// Decides V(M) cap V(N) = empty via Tor vanishing. When one argument has a
/// periodicity certificate PeriodicFrom(i0, d), checking Tor_1..Tor_{i0+d}
/// is conclusive; a free argument is conclusive outright. Without any
/// certificate the bound max_deg is scanned and an all-zero prefix is
/// reported as Undetermined rather than as a verdict.
DisjointVerdict supports_disjoint(const Module& m, const Module& n, std::size_t max_deg,
                                  std::size_t trials, std::uint64_t seed,
                                  Cache* cache = nullptr);

/// Rank-variety membership alpha in V(M), valid exactly when every exponent
/// equals p = char k (so A is the group algebra of (Z/p)^c): the form acts
/// as a p-nilpotent operator, and alpha lies in the support iff that
/// operator is not free over k[t]/(t^p), i.e. p * rank(L^{p-1}) < dim M.
bool rank_point_membership(const Module& m, const LinearForm& alpha);

struct LocateResult {
    std::optional<LinearForm> point;
    std::string diagnostics;
};

/// The unique support point of a certified-periodic module, swept over
/// enumerate_points. Uses the rank-variety test when all a_i = p; otherwise
/// (c = 2) probes each point beta with the quotients A/(l_beta^j) that
/// themselves carry a periodicity certificate — one positive against such a
/// probe pins the support of a periodic module.
LocateResult locate_periodic_support(const Module& m, std::size_t max_deg,
                                     std::size_t trials = 32, std::uint64_t seed = 0,
                                     Cache* cache = nullptr);

} // namespace cihomol
