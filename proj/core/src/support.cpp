#include "cihomol/support.hpp"

#include <stdexcept>

namespace cihomol {

std::string DisjointVerdict::to_string() const {
    switch (kind) {
        case Kind::Disjoint: return "disjoint";
        case Kind::NotDisjoint: return "not-disjoint(" + std::to_string(index) + ")";
        case Kind::Undetermined: return "undetermined";
    }
    return "undetermined";
}

DisjointVerdict supports_disjoint(const Module& m, const Module& n, std::size_t max_deg,
                                  std::size_t trials, std::uint64_t seed, Cache* cache) {
    if (!(m.ring() == n.ring()))
        throw std::invalid_argument("supports_disjoint: ring mismatch");

    ComplexityVerdict cm = classify_complexity(m, max_deg, trials, seed, cache);
    if (cm.kind == ComplexityVerdict::Kind::Free)
        return {DisjointVerdict::Kind::Disjoint, 0, "first argument is free"};
    ComplexityVerdict cn = classify_complexity(n, max_deg, trials, seed + 1, cache);
    if (cn.kind == ComplexityVerdict::Kind::Free)
        return {DisjointVerdict::Kind::Disjoint, 0, "second argument is free"};

    if (cm.kind == ComplexityVerdict::Kind::PeriodicFrom) {
        std::size_t bound = cm.start + cm.period;
        for (std::size_t i = 1; i <= bound; ++i)
            if (tor(m, n, i, bound, cache).dim() != 0)
                return {DisjointVerdict::Kind::NotDisjoint, i,
                        "Tor_" + std::to_string(i) + " is nonzero"};
        return {DisjointVerdict::Kind::Disjoint, 0,
                "Tor vanishing certified by " + cm.to_string() + " on the first argument"};
    }
    if (cn.kind == ComplexityVerdict::Kind::PeriodicFrom) {
        std::size_t bound = cn.start + cn.period;
        for (std::size_t i = 1; i <= bound; ++i)
            if (tor(n, m, i, bound, cache).dim() != 0)
                return {DisjointVerdict::Kind::NotDisjoint, i,
                        "Tor_" + std::to_string(i) + " is nonzero"};
        return {DisjointVerdict::Kind::Disjoint, 0,
                "Tor vanishing certified by " + cn.to_string() + " on the second argument"};
    }

    for (std::size_t i = 1; i <= max_deg; ++i)
        if (tor(m, n, i, max_deg, cache).dim() != 0)
            return {DisjointVerdict::Kind::NotDisjoint, i,
                    "Tor_" + std::to_string(i) + " is nonzero"};
    return {DisjointVerdict::Kind::Undetermined, 0,
            "no periodicity certificate; Tor vanishes through degree " +
                std::to_string(max_deg)};
}

bool rank_point_membership(const Module& m, const LinearForm& alpha) {
    const Ring& ring = m.ring();
    const std::uint64_t p = ring.field().p();
    for (unsigned a : ring.exps())
        if (a != p)
            throw std::invalid_argument(
                "rank_point_membership: needs a_i = p = char k for every i");
    if (m.dim() == 0) return false;
    Mat l = form_action(m, alpha);
    std::size_t r = rank(l.pow(static_cast<std::size_t>(p - 1)));
    return p * r < m.dim();
}

LocateResult locate_periodic_support(const Module& m, std::size_t max_deg,
                                     std::size_t trials, std::uint64_t seed, Cache* cache) {
    const Ring& ring = m.ring();
    ComplexityVerdict cert = classify_complexity(m, max_deg, trials, seed, cache);
    if (cert.kind != ComplexityVerdict::Kind::PeriodicFrom)
        throw std::invalid_argument(
            "locate_periodic_support: module is not certified periodic (" +
            cert.to_string() + ")");

    std::vector<LinearForm> points = enumerate_points(ring);
    bool group_algebra = true;
    for (unsigned a : ring.exps())
        if (a != ring.field().p()) group_algebra = false;

    std::vector<LinearForm> positives;
    std::size_t undecided = 0;

    if (group_algebra) {
        for (const LinearForm& beta : points)
            if (rank_point_membership(m, beta)) positives.push_back(beta);
    } else if (ring.codim() == 2) {
        // Probe labels are only trustworthy at axis points: V(A/(x_i^j)) is
        // the point of x_i by the H-family structure, whereas quotients by
        // mixed forms can land in an axis support class (observed over
        // exps (2,4): Tor_1(A/(y), A/(x+y)) != 0). Mixed points stay
        // undecided; one certified positive pins the support of a periodic
        // module either way.
        std::size_t bound = cert.start + cert.period;
        for (const LinearForm& beta : points) {
            if (beta.axis() == static_cast<std::size_t>(-1)) {
                ++undecided;
                continue;
            }
            std::size_t order = form_order(ring, beta);
            bool decided = false, in = false;
            for (std::size_t j = 1; j < order && !in; ++j) {
                Module probe = quotient_by_form_power(ring, beta, static_cast<unsigned>(j));
                ComplexityVerdict pc =
                    classify_complexity(probe, max_deg, trials, seed + 17 * j, cache);
                if (pc.kind != ComplexityVerdict::Kind::PeriodicFrom) continue;
                decided = true;
                for (std::size_t i = 1; i <= bound && !in; ++i)
                    if (tor(m, probe, i, bound, cache).dim() != 0) in = true;
            }
            if (in)
                positives.push_back(beta);
            else if (!decided)
                ++undecided;
        }
    } else {
        throw std::invalid_argument(
            "locate_periodic_support: need all a_i = p or codimension 2");
    }

    if (positives.size() == 1) return {positives.front(), ""};
    if (positives.empty())
        return {std::nullopt, "no support point found among " +
                                  std::to_string(points.size()) + " points (" +
                                  std::to_string(undecided) + " undecided)"};
    std::string joined;
    for (const auto& pt : positives) joined += " (" + pt.to_string() + ")";
    return {std::nullopt, std::to_string(positives.size()) +
                              " membership positives for a periodic module:" + joined};
}

} // namespace cihomol
