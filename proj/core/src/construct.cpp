#include "cihomol/construct.hpp"

#include <stdexcept>

#include "cihomol/prng.hpp"

namespace cihomol {

std::vector<Module> h_family(const Ring& ring, const LinearForm& g) {
    std::size_t r = form_order(ring, g);
    if (r < 2)
        throw std::invalid_argument("h_family: form has nilpotency order < 2 on A");
    std::vector<Module> out;
    for (std::size_t i = 1; i < r; ++i)
        out.push_back(quotient_by_form_power(ring, g, static_cast<unsigned>(i)));
    return out;
}

namespace {

// support bookkeeping for extension pairing: -1 free/empty, -2 mixed,
// >= 0 the index of an axis point
constexpr int kSupportFree = -1;
constexpr int kSupportMixed = -2;

int combine_support(int a, int b) {
    if (a == kSupportFree) return b;
    if (b == kSupportFree) return a;
    if (a == b) return a;
    return kSupportMixed;
}

struct Tagged {
    Module m;
    ComplexityVerdict cert;
    int support;
};

struct GenOps {
    bool syz = true, cosyz = true, sum = true, ext = true;
};

std::vector<std::pair<Module, int>> axis_seeds(const Ring& ring) {
    std::vector<std::pair<Module, int>> out;
    for (std::size_t v = 0; v < ring.codim(); ++v) {
        LinearForm g = LinearForm::variable(ring, v);
        std::size_t r = form_order(ring, g);
        for (std::size_t j = 1; j < r; ++j)
            out.emplace_back(quotient_by_form_power(ring, g, static_cast<unsigned>(j)),
                             static_cast<int>(v));
    }
    return out;
}

std::vector<std::pair<Module, int>> seeds_for(const Ring& ring, const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::HFamily: {
            if (!spec.g) throw std::invalid_argument("cx1_family: HFamily needs a form");
            std::vector<std::pair<Module, int>> out;
            int tag = static_cast<int>(spec.g->axis());
            if (spec.g->axis() == static_cast<std::size_t>(-1)) tag = kSupportMixed;
            for (Module& m : h_family(ring, *spec.g)) out.emplace_back(std::move(m), tag);
            return out;
        }
        case FamilySpec::Kind::AxisQuotients:
        case FamilySpec::Kind::SyzygyClosure:
        case FamilySpec::Kind::ExtensionClosure:
            return axis_seeds(ring);
        case FamilySpec::Kind::RestrictionChain:
            throw std::invalid_argument(
                "cx1_family: RestrictionChain emits modules over the subring; use "
                "family_from_spec");
    }
    throw std::invalid_argument("cx1_family: unknown family kind");
}

GenOps ops_for(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::SyzygyClosure: return {true, true, false, false};
        case FamilySpec::Kind::ExtensionClosure: return {false, false, false, true};
        default: return {};
    }
}

} // namespace

std::vector<CertifiedModule> cx1_family(const Ring& ring, const FamilySpec& spec,
                                        std::size_t budget, std::uint64_t seed,
                                        std::size_t max_deg, std::size_t trials,
                                        Cache* cache) {
    std::vector<CertifiedModule> out;
    if (budget == 0) return out;

    GenOps ops = ops_for(spec);
    std::vector<Tagged> pool;
    Prng rng(seed);
    const std::size_t dim_cap = 6 * ring.length();

    auto admit = [&](Module m, int support) -> bool {
        if (m.dim() == 0) return false; // zero modules carry no length information
        ComplexityVerdict cert =
            classify_complexity(m, max_deg, trials, seed ^ (out.size() + 1), cache);
        if (!cert.certified()) return false;
        pool.push_back({m, cert, support});
        out.push_back({std::move(m), std::move(cert)});
        return true;
    };

    // free seed plus the requested quotient seeds
    admit(regular_module(ring), kSupportFree);
    for (auto& [m, tag] : seeds_for(ring, spec)) {
        if (out.size() >= budget) return out;
        admit(std::move(m), tag);
    }

    const std::size_t attempt_cap = 40 * budget + 40;
    std::size_t attempts = 0;
    while (out.size() < budget && attempts < attempt_cap) {
        ++attempts;
        std::size_t op = rng.below(4);
        Tagged a = pool[rng.below(pool.size())]; // handle copy; admit grows the pool
        switch (op) {
            case 0: {
                if (!ops.syz) break;
                admit(syzygy(a.m, cache), a.support);
                break;
            }
            case 1: {
                if (!ops.cosyz) break;
                admit(cosyzygy(a.m, cache), a.support);
                break;
            }
            case 2: {
                if (!ops.sum) break;
                Tagged b = pool[rng.below(pool.size())];
                if (a.m.dim() + b.m.dim() > dim_cap) break;
                admit(direct_sum(a.m, b.m), combine_support(a.support, b.support));
                break;
            }
            case 3: {
                if (!ops.ext) break;
                Tagged b = pool[rng.below(pool.size())];
                int combined = combine_support(a.support, b.support);
                if (combined == kSupportMixed) break; // supports may differ
                if (a.m.dim() + b.m.dim() > dim_cap) break;
                Module k = syzygy(a.m, cache);
                std::vector<ModuleMap> basis = hom_space(k, b.m, cache);
                Mat phi(ring.field(), b.m.dim(), k.dim());
                for (const ModuleMap& h : basis)
                    phi = phi + h.mat().scaled(rng.below(ring.field().p()));
                admit(extension(a.m, ModuleMap(k, b.m, std::move(phi))), combined);
                break;
            }
        }
    }
    return out;
}

std::vector<Module> avoiding_family(const Ring& ring, const LinearForm& alpha,
                                    std::size_t budget, std::uint64_t seed,
                                    std::size_t max_deg, std::size_t trials, Cache* cache) {
    Module witness = quotient_by_form_power(ring, alpha, 1);
    ComplexityVerdict wc = classify_complexity(witness, max_deg, trials, seed, cache);
    if (wc.kind != ComplexityVerdict::Kind::PeriodicFrom)
        throw std::invalid_argument(
            "avoiding_family: the witness A/(l_alpha) is not certified periodic; "
            "point not realizable");

    std::vector<Module> out;
    if (budget == 0) return out;
    std::vector<Module> pool;
    Prng rng(seed);
    const std::size_t dim_cap = 6 * ring.length();

    auto admit = [&](Module m) -> bool {
        if (m.dim() == 0) return false; // zero modules carry no length information
        DisjointVerdict v =
            supports_disjoint(m, witness, max_deg, trials, seed ^ (out.size() + 1), cache);
        if (v.kind != DisjointVerdict::Kind::Disjoint) return false;
        pool.push_back(m);
        out.push_back(std::move(m));
        return true;
    };

    admit(regular_module(ring));
    for (auto& [m, tag] : axis_seeds(ring)) {
        if (out.size() >= budget) return out;
        admit(std::move(m));
    }

    const std::size_t attempt_cap = 40 * budget + 40;
    std::size_t attempts = 0;
    while (out.size() < budget && attempts < attempt_cap) {
        ++attempts;
        std::size_t op = rng.below(4);
        Module a = pool[rng.below(pool.size())]; // handle copy; admit grows the pool
        switch (op) {
            case 0: admit(syzygy(a, cache)); break;
            case 1: admit(cosyzygy(a, cache)); break;
            case 2: {
                Module b = pool[rng.below(pool.size())];
                if (a.dim() + b.dim() > dim_cap) break;
                admit(direct_sum(a, b));
                break;
            }
            case 3: {
                Module b = pool[rng.below(pool.size())];
                if (a.dim() + b.dim() > dim_cap) break;
                Module k = syzygy(a, cache);
                std::vector<ModuleMap> basis = hom_space(k, b, cache);
                Mat phi(ring.field(), b.dim(), k.dim());
                for (const ModuleMap& h : basis)
                    phi = phi + h.mat().scaled(rng.below(ring.field().p()));
                admit(extension(a, ModuleMap(k, b, std::move(phi))));
                break;
            }
        }
    }
    return out;
}

std::vector<Module> family_from_spec(const Ring& ring, const FamilySpec& spec,
                                     std::uint64_t seed, Cache* cache) {
    switch (spec.kind) {
        case FamilySpec::Kind::HFamily: {
            if (!spec.g) throw std::invalid_argument("family_from_spec: HFamily needs a form");
            return h_family(ring, *spec.g);
        }
        case FamilySpec::Kind::AxisQuotients: {
            std::vector<Module> out;
            for (auto& [m, tag] : axis_seeds(ring)) out.push_back(std::move(m));
            return out;
        }
        case FamilySpec::Kind::SyzygyClosure: {
            std::vector<Module> out;
            for (auto& [m, tag] : axis_seeds(ring)) out.push_back(std::move(m));
            std::size_t layer_begin = 0, layer_end = out.size();
            for (std::size_t d = 0; d < spec.depth; ++d) {
                for (std::size_t i = layer_begin; i < layer_end; ++i)
                    out.push_back(syzygy(out[i], cache));
                layer_begin = layer_end;
                layer_end = out.size();
            }
            return out;
        }
        case FamilySpec::Kind::ExtensionClosure: {
            std::vector<Module> out;
            for (auto& [m, tag] : axis_seeds(ring)) out.push_back(std::move(m));
            Prng rng(seed);
            std::size_t base = out.size();
            for (std::size_t i = 0; i < spec.count && base > 0; ++i) {
                const Module& a = out[rng.below(base)];
                const Module& b = out[rng.below(base)];
                Module k = syzygy(a, cache);
                std::vector<ModuleMap> basis = hom_space(k, b, cache);
                Mat phi(ring.field(), b.dim(), k.dim());
                for (const ModuleMap& h : basis)
                    phi = phi + h.mat().scaled(rng.below(ring.field().p()));
                out.push_back(extension(a, ModuleMap(k, b, std::move(phi))));
            }
            return out;
        }
        case FamilySpec::Kind::RestrictionChain: {
            Embedding emb = power_subring_embedding(ring, spec.powers);
            std::vector<Module> out;
            out.push_back(restrict_scalars(regular_module(ring), emb));
            for (auto& [m, tag] : axis_seeds(ring))
                out.push_back(restrict_scalars(m, emb));
            return out;
        }
    }
    throw std::invalid_argument("family_from_spec: unknown family kind");
}

Module random_quotient_module(const Ring& ring, std::size_t rank, std::size_t relations,
                              std::uint64_t seed) {
    Module free = free_module(ring, rank);
    Prng rng(seed);
    if (relations == 0) return free;
    Mat rows(ring.field(), relations, free.dim());
    for (std::size_t r = 0; r < relations; ++r)
        for (std::size_t c = 0; c < free.dim(); ++c)
            rows.set(r, c, rng.below(ring.field().p()));
    RowSpace w = invariant_closure(free, rows);
    if (w.dim() == free.dim()) return Module::zero(ring);
    return quotient(free, w).module;
}

} // namespace cihomol
