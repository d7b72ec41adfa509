#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cihomol/cache.hpp"
#include "cihomol/construct.hpp"
#include "cihomol/gk.hpp"

namespace cihomol {

struct SuiteOptions {
    std::size_t max_deg = 8;
    std::size_t trials = 32;
    std::size_t budget = 50;
    std::size_t sample = 100;
    std::uint64_t seed = 0;
    Cache* cache = nullptr;
};

/// One verified statement. The anchor is a stable formula-style identifier
/// of the identity being checked; the verdict is pass, fail or
/// undetermined. Undetermined sub-verdicts never count as pass.
struct SuiteCheck {
    std::string id;
    std::string description;
    std::string anchor;
    std::string verdict; // "pass" | "fail" | "undetermined"
    std::vector<std::pair<std::string, std::string>> witness;
};

struct SuiteReport {
    std::string suite;
    std::string ring_spec;
    std::vector<std::pair<std::string, std::string>> params; // echoed inputs
    std::vector<SuiteCheck> checks;                          // sorted by id
    bool pass = false;        // all checks "pass"
    double runtime_seconds = 0.0; // text output only; never serialized to JSON
};

/// JSON (schema cihomol-report/1; deterministic, runtime excluded) and
/// human-readable renderings.
std::string report_to_json(const SuiteReport& r);
std::string report_to_text(const SuiteReport& r);

/// H-family structure: lengths i*l(H_1), l(A) = r*l(H_1), mu = 1, no free
/// summands, Omega(H_i) ~= H_{r-i}, one common support point.
SuiteReport lemma_h_suite(const Ring& ring, const LinearForm& g, const SuiteOptions& opt);

/// The axis quotients M = A/(x), N = A/(y) of a codimension-2 ring:
/// indecomposability witnesses, periodicity, tensor length bookkeeping,
/// Tor vanishing, and the disjoint-support verdict.
SuiteReport disjoint_suite(const Ring& ring, const SuiteOptions& opt);

/// For H = A/(g) with Omega(H) ~= H (g of nilpotency order 2) and sampled X:
/// dim Tor_1(X,H) + mu(H) l(X) = 2 l(H ox X), exactly.
SuiteReport length_identity_suite(const Ring& ring, const LinearForm& g,
                                  const SuiteOptions& opt);

/// Unit Betti numbers of the H-family and exactness of the g-power
/// filtration rows 0 -> X/g^{j-1}X -> X/g^jX -> X/gX -> 0 on avoiding
/// samples X, with the length multiplicativity they imply.
SuiteReport filtration_suite(const Ring& ring, const LinearForm& g,
                             const SuiteOptions& opt);

/// p | l(E) for certified complexity <= 1 families, through the power
/// subring restriction R -> A (u_i = a_i/p on two coordinates divisible by
/// p): restriction preserves length, keeps Betti numbers bounded, and every
/// certified length is divisible by p.
SuiteReport divisibility_suite(const Ring& ring, std::uint64_t p, const SuiteOptions& opt);

/// The subgroup of Z/l(A)Z generated by lengths of a family certified to
/// avoid the support point of H = A/(g) is proper (index >= 2); reports the
/// empirical index.
SuiteReport gap_suite(const Ring& ring, const LinearForm& g, const SuiteOptions& opt);

/// Dispatch by CLI suite name: lemma-h, disjoint, length-identity,
/// filtration, divisibility, gap.
SuiteReport run_suite(const std::string& name, const Ring& ring,
                      const std::optional<LinearForm>& g, std::uint64_t p,
                      const SuiteOptions& opt);

} // namespace cihomol
