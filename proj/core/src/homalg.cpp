#include "cihomol/homalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "cihomol/cache.hpp"
#include "cihomol/prng.hpp"

namespace cihomol {

namespace {

/// Lazily materialized monomial action matrices X^e on one module.
class MonomialTable {
public:
    explicit MonomialTable(const Module& m) : m_(m), memo_(m.ring().length()) {}

    const Mat& at(std::size_t idx) {
        if (!memo_[idx]) {
            if (idx == 0) {
                memo_[idx] = Mat::identity(m_.ring().field(), m_.dim());
            } else {
                auto [var, prev] = m_.ring().predecessor(idx);
                const Mat& p = at(prev);
                memo_[idx] = m_.action(var) * p;
            }
        }
        return *memo_[idx];
    }

    Mat element(std::span<const std::uint64_t> coeffs) {
        Mat acc(m_.ring().field(), m_.dim(), m_.dim());
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i]) acc = acc + at(i).scaled(coeffs[i]);
        return acc;
    }

private:
    const Module& m_;
    std::vector<std::optional<Mat>> memo_;
};

Module module_power(const Module& n, std::size_t k) {
    Module acc = Module::zero(n.ring());
    for (std::size_t i = 0; i < k; ++i) acc = direct_sum(acc, n);
    return acc;
}

/// Right inverse of a full-row-rank matrix: X with c X = I.
Mat right_inverse(const Mat& c) {
    const Fp f = c.field();
    Mat aug = hstack(c, Mat::identity(f, c.rows()));
    RrefResult r = rref(aug);
    if (r.rank != c.rows()) throw std::logic_error("right_inverse: matrix not surjective");
    Mat x(f, c.cols(), c.rows());
    for (std::size_t i = 0; i < r.rank; ++i) {
        if (r.pivots[i] >= c.cols()) throw std::logic_error("right_inverse: inconsistent rref");
        for (std::size_t j = 0; j < c.rows(); ++j)
            x.set(r.pivots[i], j, r.matrix(i, c.cols() + j));
    }
    return x;
}

} // namespace

CoverData minimal_cover_data(const Module& m) {
    const Ring& ring = m.ring();
    const Fp f = ring.field();
    const std::size_t la = ring.length();

    RowSpace rad = radical_subspace(m);
    std::vector<bool> piv(m.dim(), false);
    for (auto c : rad.pivots()) piv[c] = true;
    std::vector<std::size_t> gens;
    for (std::size_t j = 0; j < m.dim(); ++j)
        if (!piv[j]) gens.push_back(j);
    const std::size_t mu = gens.size();

    Module free = free_module(ring, mu);
    Mat cov(f, m.dim(), mu * la);
    std::vector<std::vector<std::uint64_t>> cols(la);
    for (std::size_t t = 0; t < mu; ++t) {
        cols[0].assign(m.dim(), 0);
        cols[0][gens[t]] = 1;
        for (std::size_t idx = 1; idx < la; ++idx) {
            auto [var, prev] = ring.predecessor(idx);
            cols[idx] = m.action(var).apply(cols[prev]);
        }
        for (std::size_t idx = 0; idx < la; ++idx)
            for (std::size_t r = 0; r < m.dim(); ++r)
                cov.set(r, t * la + idx, cols[idx][r]);
    }

    ModuleMap cover = ModuleMap(free, m, cov);
    RowSpace ker = RowSpace::from_rows(kernel_basis(cov));
    SubmoduleData sd = submodule(free, ker);
    return {std::move(cover), std::move(sd.module), std::move(sd.inclusion)};
}

ModuleMap minimal_cover(const Module& m) { return minimal_cover_data(m).cover; }

Module syzygy(const Module& m, Cache* cache) {
    if (!cache) return minimal_cover_data(m).kernel;
    return resolve(m, 0, cache).syzygy_module(1);
}

Module cosyzygy(const Module& m, Cache* cache) {
    return dual(syzygy(dual(m), cache));
}

Resolution::Resolution(Module t, std::vector<ModuleMap> c, std::vector<Module> s,
                       std::vector<ModuleMap> in, std::vector<std::size_t> b)
    : target_(std::move(t)), covers_(std::move(c)), syzygies_(std::move(s)),
      inclusions_(std::move(in)), betti_(std::move(b)) {}

Resolution Resolution::assemble(Module target, std::vector<ModuleMap> covers,
                                std::vector<Module> syzygies,
                                std::vector<ModuleMap> inclusions,
                                std::vector<std::size_t> betti) {
    if (betti.empty() || covers.size() != betti.size() ||
        inclusions.size() != betti.size() || syzygies.size() != betti.size() + 1)
        throw std::invalid_argument("Resolution: inconsistent component counts");
    return Resolution(std::move(target), std::move(covers), std::move(syzygies),
                      std::move(inclusions), std::move(betti));
}

std::vector<std::size_t> Resolution::betti_prefix(std::size_t deg) const {
    if (deg >= betti_.size()) throw std::invalid_argument("Resolution: prefix too long");
    return {betti_.begin(), betti_.begin() + deg + 1};
}

Mat Resolution::differential(std::size_t i) const {
    if (i == 0 || i > degree()) throw std::invalid_argument("Resolution: differential index");
    return inclusions_.at(i - 1).mat() * covers_.at(i).mat();
}

namespace {

Resolution fresh_resolution(const Module& m, std::size_t max_deg) {
    std::vector<ModuleMap> covers;
    std::vector<Module> syzygies{m};
    std::vector<ModuleMap> inclusions;
    std::vector<std::size_t> betti;
    const std::size_t la = m.ring().length();
    for (std::size_t i = 0; i <= max_deg; ++i) {
        CoverData cd = minimal_cover_data(syzygies.back());
        betti.push_back(cd.cover.src().dim() / la);
        covers.push_back(std::move(cd.cover));
        inclusions.push_back(std::move(cd.kernel_inclusion));
        syzygies.push_back(std::move(cd.kernel));
    }
    return Resolution::assemble(m, std::move(covers), std::move(syzygies),
                                std::move(inclusions), std::move(betti));
}

Resolution extend_resolution(const Resolution& r, std::size_t max_deg) {
    std::vector<ModuleMap> covers;
    std::vector<Module> syzygies;
    std::vector<ModuleMap> inclusions;
    std::vector<std::size_t> betti = r.betti();
    for (std::size_t i = 0; i <= r.degree(); ++i) {
        covers.push_back(r.cover(i));
        inclusions.push_back(r.inclusion(i));
        syzygies.push_back(r.syzygy_module(i));
    }
    syzygies.push_back(r.syzygy_module(r.degree() + 1));
    const std::size_t la = r.target().ring().length();
    for (std::size_t i = r.degree() + 1; i <= max_deg; ++i) {
        CoverData cd = minimal_cover_data(syzygies.back());
        betti.push_back(cd.cover.src().dim() / la);
        covers.push_back(std::move(cd.cover));
        inclusions.push_back(std::move(cd.kernel_inclusion));
        syzygies.push_back(std::move(cd.kernel));
    }
    return Resolution::assemble(r.target(), std::move(covers), std::move(syzygies),
                                std::move(inclusions), std::move(betti));
}

} // namespace

Resolution resolve(const Module& m, std::size_t max_deg, Cache* cache) {
    if (!cache) return fresh_resolution(m, max_deg);
    std::optional<Resolution> base = cache->lookup(m);
    if (!base) {
        Resolution r = fresh_resolution(m, max_deg);
        cache->store(m, r);
        return r;
    }
    if (base->degree() >= max_deg) return *base;
    Resolution r = extend_resolution(*base, max_deg);
    cache->store(m, r);
    return r;
}

Module tensor(const Module& m, const Module& n) {
    if (!(m.ring() == n.ring())) throw std::invalid_argument("tensor: ring mismatch");
    const Ring& ring = m.ring();
    const Fp f = ring.field();
    const std::size_t a = m.dim(), b = n.dim(), nm = a * b;

    // index (i, j) -> i * b + j; ambient actions act_i(M) ox I
    std::vector<Mat> actions;
    for (std::size_t v = 0; v < ring.codim(); ++v) {
        Mat t(f, nm, nm);
        const Mat& am = m.action(v);
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t i2 = 0; i2 < a; ++i2) {
                std::uint64_t c = am(i, i2);
                if (!c) continue;
                for (std::size_t j = 0; j < b; ++j) t.set(i * b + j, i2 * b + j, c);
            }
        actions.push_back(std::move(t));
    }
    Module ambient = Module::make_unchecked(ring, std::move(actions));

    // relations: rows of (act_v(M) ox I - I ox act_v(N)) for all v
    Mat rel(f, 0, nm);
    for (std::size_t v = 0; v < ring.codim(); ++v) {
        Mat d = ambient.action(v);
        const Mat& an = n.action(v);
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < b; ++j)
                for (std::size_t j2 = 0; j2 < b; ++j2) {
                    std::uint64_t c = an(j, j2);
                    if (c) d.set(i * b + j, i * b + j2, f.sub(d(i * b + j, i * b + j2), c));
                }
        rel = vstack(rel, d.transpose());
    }
    return quotient(ambient, RowSpace::from_rows(rel)).module;
}

namespace {

/// Block matrix of d_j ox N : N^{b_j} -> N^{b_{j-1}}.
Mat tor_differential(const Resolution& res, const Module& n, std::size_t j,
                     MonomialTable& tbl) {
    const Ring& ring = res.target().ring();
    const Fp f = ring.field();
    const std::size_t la = ring.length(), ln = n.dim();
    const std::size_t bj = res.betti()[j], bj1 = res.betti()[j - 1];
    Mat d = res.differential(j);
    Mat out(f, bj1 * ln, bj * ln);
    for (std::size_t t = 0; t < bj; ++t) {
        std::vector<std::uint64_t> col = d.col(t * la);
        for (std::size_t s = 0; s < bj1; ++s) {
            std::span<const std::uint64_t> q{col.data() + s * la, la};
            bool nonzero = false;
            for (auto x : q)
                if (x) { nonzero = true; break; }
            if (!nonzero) continue;
            Mat blk = tbl.element(q);
            for (std::size_t r = 0; r < ln; ++r)
                for (std::size_t c = 0; c < ln; ++c)
                    if (blk(r, c)) out.set(s * ln + r, t * ln + c, blk(r, c));
        }
    }
    return out;
}

} // namespace

Module tor(const Module& m, const Module& n, std::size_t i, std::size_t max_deg,
           Cache* cache) {
    if (!(m.ring() == n.ring())) throw std::invalid_argument("tor: ring mismatch");
    if (i > max_deg) throw std::invalid_argument("tor: homological degree exceeds max_deg");
    Resolution res = resolve(m, i + 1, cache);
    MonomialTable tbl(n);

    Module ci = module_power(n, res.betti()[i]);
    Mat ti1 = tor_differential(res, n, i + 1, tbl);
    RowSpace image = RowSpace::from_rows(ti1.transpose());
    if (i == 0) return quotient(ci, image).module;

    Mat ti = tor_differential(res, n, i, tbl);
    RowSpace ker = RowSpace::from_rows(kernel_basis(ti));
    SubmoduleData km = submodule(ci, ker);
    // rows of image expressed in kernel coordinates
    Mat w(n.ring().field(), image.dim(), ker.dim());
    for (std::size_t r = 0; r < image.dim(); ++r) {
        std::vector<std::uint64_t> c = ker.coords(image.basis().row(r));
        for (std::size_t j = 0; j < c.size(); ++j) w.set(r, j, c[j]);
    }
    return quotient(km.module, RowSpace::from_rows(w)).module;
}

ExtensionData extension_data(const Module& m, const ModuleMap& phi) {
    CoverData cd = minimal_cover_data(m);
    if (!(phi.src() == cd.kernel))
        throw std::invalid_argument("extension: map source is not the syzygy of the base module");
    const Module& n = phi.dst();
    const Fp f = m.ring().field();
    const Module& free = cd.cover.src();
    const std::size_t nn = n.dim(), nf = free.dim(), nk = cd.kernel.dim();

    Module ambient = direct_sum(n, free);
    Mat rows(f, nk, nn + nf);
    for (std::size_t j = 0; j < nk; ++j) {
        for (std::size_t r = 0; r < nn; ++r) rows.set(j, r, phi.mat()(r, j));
        for (std::size_t r = 0; r < nf; ++r)
            rows.set(j, nn + r, f.neg(cd.kernel_inclusion.mat()(r, j)));
    }
    QuotientData q = quotient(ambient, RowSpace::from_rows(rows));

    Mat injn(f, q.module.dim(), nn);
    for (std::size_t r = 0; r < q.module.dim(); ++r)
        for (std::size_t c = 0; c < nn; ++c) injn.set(r, c, q.projection.mat()(r, c));
    Mat g(f, m.dim(), nn + nf);
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < nf; ++c) g.set(r, nn + c, cd.cover.mat()(r, c));
    Mat onto = g * q.section;

    return {q.module, ModuleMap(n, q.module, std::move(injn)),
            ModuleMap(q.module, m, std::move(onto))};
}

Module extension(const Module& m, const ModuleMap& phi) {
    return extension_data(m, phi).module;
}

bool is_exact(const std::vector<ModuleMap>& seq) {
    if (seq.size() < 2) throw std::invalid_argument("is_exact: need at least two maps");
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!(seq[i].dst() == seq[i + 1].src()))
            throw std::invalid_argument("is_exact: chain is not composable at position " +
                                        std::to_string(i));
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (!(seq[i + 1].mat() * seq[i].mat()).is_zero()) return false;
        if (rank(seq[i].mat()) + rank(seq[i + 1].mat()) != seq[i].dst().dim()) return false;
    }
    return true;
}

std::vector<ModuleMap> short_exact_chain(const ModuleMap& f, const ModuleMap& g) {
    Module z = Module::zero(f.src().ring());
    return {ModuleMap::zero(z, f.src()), f, g, ModuleMap::zero(g.dst(), z)};
}

Module stable_reduce(const Module& m, Cache* cache) {
    if (m.dim() == 0) return m;
    return cosyzygy(syzygy(m, cache), cache);
}

std::string ComplexityVerdict::to_string() const {
    switch (kind) {
        case Kind::Free: return "free";
        case Kind::PeriodicFrom:
            return "periodic(start=" + std::to_string(start) +
                   ",period=" + std::to_string(period) + ")";
        case Kind::UnboundedEvidence: return "unbounded-evidence";
        case Kind::Undetermined: return "undetermined";
    }
    return "undetermined";
}

ComplexityVerdict classify_complexity(const Module& m, std::size_t max_deg,
                                      std::size_t trials, std::uint64_t seed,
                                      Cache* cache) {
    if (max_deg < 2) throw std::invalid_argument("classify_complexity: max_deg must be >= 2");
    Module core = stable_reduce(m, cache);
    if (core.dim() == 0)
        return {ComplexityVerdict::Kind::Free, 0, 0,
                std::vector<std::size_t>(max_deg + 1, 0)};

    Resolution res = resolve(core, max_deg, cache);
    ComplexityVerdict v;
    v.betti_prefix = res.betti();
    for (std::size_t i = 0; i + 2 <= max_deg; ++i) {
        for (std::size_t d = 1; d <= 2 && i + d <= max_deg; ++d) {
            IsoResult ir = iso_test(res.syzygy_module(i + d), res.syzygy_module(i), trials,
                                    seed + 7919 * i + d, cache);
            if (ir.verdict == IsoResult::Verdict::Iso) {
                v.kind = ComplexityVerdict::Kind::PeriodicFrom;
                v.start = i;
                v.period = d;
                return v;
            }
        }
    }
    bool increasing = true;
    for (std::size_t j = max_deg / 2; j + 1 <= max_deg; ++j)
        if (res.betti()[j] >= res.betti()[j + 1]) { increasing = false; break; }
    v.kind = increasing ? ComplexityVerdict::Kind::UnboundedEvidence
                        : ComplexityVerdict::Kind::Undetermined;
    return v;
}

std::vector<ModuleMap> hom_space(const Module& m, const Module& n, Cache* cache) {
    if (!(m.ring() == n.ring())) throw std::invalid_argument("hom_space: ring mismatch");
    const Ring& ring = m.ring();
    const Fp f = ring.field();
    if (m.dim() == 0 || n.dim() == 0) return {};

    Resolution res = resolve(m, 0, cache);
    const ModuleMap& cover = res.cover(0);
    const Module& kernel = res.syzygy_module(1);
    const ModuleMap& incl = res.inclusion(0);
    const std::size_t la = ring.length(), ln = n.dim(), b0 = res.betti()[0];

    // minimal generators of the kernel, as elements of the free cover
    RowSpace krad = radical_subspace(kernel);
    std::vector<bool> piv(kernel.dim(), false);
    for (auto c : krad.pivots()) piv[c] = true;
    std::vector<std::size_t> kgens;
    for (std::size_t j = 0; j < kernel.dim(); ++j)
        if (!piv[j]) kgens.push_back(j);

    // constraint matrix: sum_t rho_N(q_{s,t}) n_t = 0
    MonomialTable tbl(n);
    Mat sys(f, kgens.size() * ln, b0 * ln);
    for (std::size_t s = 0; s < kgens.size(); ++s) {
        std::vector<std::uint64_t> u = incl.mat().col(kgens[s]);
        for (std::size_t t = 0; t < b0; ++t) {
            std::span<const std::uint64_t> q{u.data() + t * la, la};
            bool nonzero = false;
            for (auto x : q)
                if (x) { nonzero = true; break; }
            if (!nonzero) continue;
            Mat blk = tbl.element(q);
            for (std::size_t r = 0; r < ln; ++r)
                for (std::size_t c = 0; c < ln; ++c)
                    if (blk(r, c)) sys.set(s * ln + r, t * ln + c, blk(r, c));
        }
    }
    Mat ker = kernel_basis(sys);

    // rebuild each solution as a matrix M -> N and canonicalize the basis
    Mat p = right_inverse(cover.mat());
    Mat vecs(f, ker.rows(), n.dim() * m.dim());
    std::vector<std::vector<std::uint64_t>> cols(la);
    for (std::size_t w = 0; w < ker.rows(); ++w) {
        Mat psi(f, ln, b0 * la);
        for (std::size_t t = 0; t < b0; ++t) {
            cols[0].assign(ln, 0);
            for (std::size_t r = 0; r < ln; ++r) cols[0][r] = ker(w, t * ln + r);
            for (std::size_t idx = 1; idx < la; ++idx) {
                auto [var, prev] = ring.predecessor(idx);
                cols[idx] = n.action(var).apply(cols[prev]);
            }
            for (std::size_t idx = 0; idx < la; ++idx)
                for (std::size_t r = 0; r < ln; ++r) psi.set(r, t * la + idx, cols[idx][r]);
        }
        Mat phi = psi * p;
        for (std::size_t r = 0; r < ln; ++r)
            for (std::size_t c = 0; c < m.dim(); ++c) vecs.set(w, r * m.dim() + c, phi(r, c));
    }
    RrefResult canon = rref(vecs);
    std::vector<ModuleMap> basis;
    for (std::size_t w = 0; w < canon.rank; ++w) {
        Mat phi(f, ln, m.dim());
        for (std::size_t r = 0; r < ln; ++r)
            for (std::size_t c = 0; c < m.dim(); ++c) phi.set(r, c, canon.matrix(w, r * m.dim() + c));
        basis.push_back(ModuleMap(m, n, std::move(phi)));
    }
    return basis;
}

IsoResult iso_test(const Module& m, const Module& n, std::size_t trials,
                   std::uint64_t seed, Cache* cache) {
    if (!(m.ring() == n.ring())) throw std::invalid_argument("iso_test: ring mismatch");
    if (m.dim() != n.dim())
        return {IsoResult::Verdict::NotIso, std::nullopt,
                "dimension mismatch: " + std::to_string(m.dim()) + " vs " +
                    std::to_string(n.dim())};
    if (m.dim() == 0)
        return {IsoResult::Verdict::Iso, ModuleMap::identity(m), "zero modules"};
    if (radical_profile(m) != radical_profile(n))
        return {IsoResult::Verdict::NotIso, std::nullopt, "radical profile mismatch"};

    std::size_t hmn = hom_space(m, n, cache).size();
    std::size_t hnm = hom_space(n, m, cache).size();
    if (hmn != hnm)
        return {IsoResult::Verdict::NotIso, std::nullopt,
                "hom dimension asymmetry: " + std::to_string(hmn) + " vs " +
                    std::to_string(hnm)};
    std::size_t em = hom_space(m, m, cache).size();
    std::size_t en = hom_space(n, n, cache).size();
    if (em != en)
        return {IsoResult::Verdict::NotIso, std::nullopt,
                "endomorphism dimension mismatch: " + std::to_string(em) + " vs " +
                    std::to_string(en)};

    if (m.actions() == n.actions())
        return {IsoResult::Verdict::Iso, ModuleMap::identity(m), "identity"};

    std::vector<ModuleMap> basis = hom_space(m, n, cache);
    const Fp f = m.ring().field();
    Prng rng(seed);
    for (std::size_t t = 0; t < trials && !basis.empty(); ++t) {
        Mat cand(f, n.dim(), m.dim());
        for (const ModuleMap& b : basis) cand = cand + b.mat().scaled(rng.below(f.p()));
        if (rank(cand) == m.dim())
            return {IsoResult::Verdict::Iso, ModuleMap(m, n, std::move(cand)),
                    "random invertible hom"};
    }
    return {IsoResult::Verdict::Unknown, std::nullopt,
            "no invertible hom found in " + std::to_string(trials) + " trials"};
}

std::optional<std::size_t> is_free(const Module& m) {
    CoverData cd = minimal_cover_data(m);
    if (cd.kernel.dim() != 0) return std::nullopt;
    return cd.cover.src().dim() / std::max<std::size_t>(m.ring().length(), 1);
}

} // namespace cihomol
