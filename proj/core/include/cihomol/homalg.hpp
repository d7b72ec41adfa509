#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cihomol/module.hpp"

namespace cihomol {

class Cache;

/// Minimal free cover F -> M: F free of rank mu(M), kernel inside mF.
/// Generator lifts are the standard basis vectors at the non-pivot
/// coordinates of the RREF of mM, so the construction is deterministic.
struct CoverData {
    ModuleMap cover;            // F -> M, surjective
    Module kernel;              // Omega(M), with induced actions
    ModuleMap kernel_inclusion; // Omega(M) -> F
};
CoverData minimal_cover_data(const Module& m);
ModuleMap minimal_cover(const Module& m);

/// First syzygy: kernel of the minimal cover. Omega(free) = 0, and the
/// result never has a free summand.
Module syzygy(const Module& m, Cache* cache = nullptr);

/// Omega^{-1} = D Omega D over the self-injective ring A.
Module cosyzygy(const Module& m, Cache* cache = nullptr);

/// Minimal free resolution data through a fixed degree.
/// covers[i] : F_i -> syzygies[i], inclusions[i] : syzygies[i+1] -> F_i,
/// syzygies[0] = target, betti[i] = rank F_i = mu(syzygies[i]).
class Resolution {
public:
    static Resolution assemble(Module target, std::vector<ModuleMap> covers,
                               std::vector<Module> syzygies,
                               std::vector<ModuleMap> inclusions,
                               std::vector<std::size_t> betti);

    const Module& target() const { return target_; }
    std::size_t degree() const { return betti_.size() - 1; }
    const std::vector<std::size_t>& betti() const { return betti_; }
    std::vector<std::size_t> betti_prefix(std::size_t deg) const;
    const Module& syzygy_module(std::size_t i) const { return syzygies_.at(i); }
    const ModuleMap& cover(std::size_t i) const { return covers_.at(i); }
    const ModuleMap& inclusion(std::size_t i) const { return inclusions_.at(i); }
    /// The k-matrix of d_i : F_i -> F_{i-1}, i >= 1.
    Mat differential(std::size_t i) const;

private:
    Module target_;
    std::vector<ModuleMap> covers_;
    std::vector<Module> syzygies_;
    std::vector<ModuleMap> inclusions_;
    std::vector<std::size_t> betti_;
    Resolution(Module t, std::vector<ModuleMap> c, std::vector<Module> s,
               std::vector<ModuleMap> in, std::vector<std::size_t> b);
};

/// Resolve through degree max_deg. Results are independent of the cache;
/// the cache only avoids recomputation.
Resolution resolve(const Module& m, std::size_t max_deg, Cache* cache = nullptr);

/// M tensor_A N: quotient of the k-tensor square by the relations
/// (x_i m) ox n - m ox (x_i n).
Module tensor(const Module& m, const Module& n);

/// Tor_i^A(M, N) as a module, computed as homology of resolve(M) ox N.
/// Requires i <= max_deg.
Module tor(const Module& m, const Module& n, std::size_t i, std::size_t max_deg,
           Cache* cache = nullptr);

/// Pushout of Omega(M) -> F_0(M) along phi : Omega(M) -> N, realizing a
/// class of Ext^1(M, N): an exact sequence 0 -> N -> E -> M -> 0.
struct ExtensionData {
    Module module;               // E
    ModuleMap sub_inclusion;     // N -> E
    ModuleMap quotient_onto;     // E -> M
};
ExtensionData extension_data(const Module& m, const ModuleMap& phi);
Module extension(const Module& m, const ModuleMap& phi);

/// Image = kernel at every interior position of a composable chain.
/// Short exact sequences are expressed with explicit zero modules at the
/// ends, e.g. [0 -> A, A -> B, B -> C, C -> 0].
bool is_exact(const std::vector<ModuleMap>& seq);
std::vector<ModuleMap> short_exact_chain(const ModuleMap& f, const ModuleMap& g);

/// Strip free summands: Omega^{-1}(Omega(M)). Idempotent up to isomorphism;
/// fixed points (up to iso) are exactly the modules without free summands.
Module stable_reduce(const Module& m, Cache* cache = nullptr);

struct ComplexityVerdict {
    enum class Kind { Free, PeriodicFrom, UnboundedEvidence, Undetermined };
    Kind kind = Kind::Undetermined;
    std::size_t start = 0;  // PeriodicFrom(start, period)
    std::size_t period = 0; // 1 or 2
    std::vector<std::size_t> betti_prefix;

    bool certified() const {
        return kind == Kind::Free || kind == Kind::PeriodicFrom;
    }
    std::string to_string() const;
};

/// Sound certification of complexity <= 1 via eventual periodicity with
/// period <= 2: PeriodicFrom(i, d) is only reported when
/// iso_test(Omega^{i+d}, Omega^i) certified an isomorphism. The betti
/// prefix (of the stable reduction) is reported either way; a strictly
/// increasing tail is reported as UnboundedEvidence, anything else as
/// Undetermined. Requires max_deg >= 2.
ComplexityVerdict classify_complexity(const Module& m, std::size_t max_deg,
                                      std::size_t trials, std::uint64_t seed,
                                      Cache* cache = nullptr);

/// Basis of Hom_A(M, N), canonicalized as the RREF basis of the solution
/// space of the intertwining system { f act_i(M) = act_i(N) f }. Computed
/// through the minimal presentation of M, which is much cheaper than the
/// naive Kronecker system at equal output.
std::vector<ModuleMap> hom_space(const Module& m, const Module& n, Cache* cache = nullptr);

struct IsoResult {
    enum class Verdict { Iso, NotIso, Unknown };
    Verdict verdict;
    std::optional<ModuleMap> map; // present for Iso
    std::string witness;          // failed invariant for NotIso, note otherwise
};

/// Three-valued isomorphism test. NotIso is decided by invariants
/// (dimension, radical profile, Hom dimensions); Iso by exhibiting an
/// invertible element of Hom(M, N) (the identity is tried first, then
/// `trials` seeded random elements). Everything else is Unknown.
IsoResult iso_test(const Module& m, const Module& n, std::size_t trials,
                   std::uint64_t seed, Cache* cache = nullptr);

/// Some(mu(M)) iff the minimal cover has zero kernel.
std::optional<std::size_t> is_free(const Module& m);

} // namespace cihomol
