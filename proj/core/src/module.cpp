#include "cihomol/module.hpp"

#include <stdexcept>

namespace cihomol {

Module Module::make(Ring ring, std::vector<Mat> actions) {
    Module m = make_unchecked(std::move(ring), std::move(actions));
    m.validate();
    return m;
}

Module Module::make_unchecked(Ring ring, std::vector<Mat> actions) {
    if (actions.size() != ring.codim())
        throw std::invalid_argument("Module: expected " + std::to_string(ring.codim()) +
                                    " action matrices, got " + std::to_string(actions.size()));
    std::size_t dim = actions.empty() ? 0 : actions[0].rows();
    for (std::size_t i = 0; i < actions.size(); ++i)
        if (actions[i].rows() != dim || actions[i].cols() != dim ||
            !(actions[i].field() == ring.field()))
            throw std::invalid_argument("Module: action " + std::to_string(i) +
                                        " has wrong shape or field");
    auto d = std::make_shared<Data>(Data{std::move(ring), dim, std::move(actions)});
    return Module(std::move(d));
}

Module Module::zero(Ring ring) {
    std::vector<Mat> actions(ring.codim(), Mat(ring.field(), 0, 0));
    return make_unchecked(std::move(ring), std::move(actions));
}

void Module::validate() const {
    const auto& acts = actions();
    for (std::size_t i = 0; i < acts.size(); ++i)
        for (std::size_t j = i + 1; j < acts.size(); ++j)
            if (!(acts[i] * acts[j] == acts[j] * acts[i]))
                throw std::invalid_argument("actions " + std::to_string(i) + "," +
                                            std::to_string(j) + " do not commute");
    for (std::size_t i = 0; i < acts.size(); ++i)
        if (!acts[i].pow(ring().exps()[i]).is_zero())
            throw std::invalid_argument("action " + std::to_string(i) +
                                        " is not nilpotent of order <= " +
                                        std::to_string(ring().exps()[i]));
}

ModuleMap::ModuleMap(Module src, Module dst, Mat mat)
    : src_(std::move(src)), dst_(std::move(dst)), mat_(std::move(mat)) {
    if (!(src_.ring() == dst_.ring()))
        throw std::invalid_argument("ModuleMap: ring mismatch");
    if (mat_.rows() != dst_.dim() || mat_.cols() != src_.dim())
        throw std::invalid_argument("ModuleMap: matrix shape mismatch");
    validate();
}

void ModuleMap::validate() const {
    for (std::size_t i = 0; i < src_.ring().codim(); ++i)
        if (!(mat_ * src_.action(i) == dst_.action(i) * mat_))
            throw std::invalid_argument("ModuleMap: matrix does not intertwine action " +
                                        std::to_string(i));
}

ModuleMap ModuleMap::identity(const Module& m) {
    return ModuleMap(m, m, Mat::identity(m.ring().field(), m.dim()));
}

ModuleMap ModuleMap::zero(const Module& src, const Module& dst) {
    return ModuleMap(src, dst, Mat(src.ring().field(), dst.dim(), src.dim()));
}

ModuleMap ModuleMap::compose_after(const ModuleMap& inner) const {
    if (!(inner.dst() == src()))
        throw std::invalid_argument("ModuleMap: composition mismatch");
    return ModuleMap(inner.src(), dst(), mat_ * inner.mat());
}

Module regular_module(const Ring& ring) {
    const std::size_t n = ring.length();
    std::vector<Mat> actions;
    actions.reserve(ring.codim());
    for (std::size_t v = 0; v < ring.codim(); ++v) {
        Mat a(ring.field(), n, n);
        for (std::size_t idx = 0; idx < n; ++idx) {
            std::size_t to = ring.shift_index(idx, v);
            if (to != Ring::npos) a.set(to, idx, 1);
        }
        actions.push_back(std::move(a));
    }
    return Module::make_unchecked(ring, std::move(actions));
}

Module free_module(const Ring& ring, std::size_t rank) {
    const std::size_t n = ring.length();
    std::vector<Mat> actions;
    for (std::size_t v = 0; v < ring.codim(); ++v) {
        Mat a(ring.field(), n * rank, n * rank);
        for (std::size_t t = 0; t < rank; ++t)
            for (std::size_t idx = 0; idx < n; ++idx) {
                std::size_t to = ring.shift_index(idx, v);
                if (to != Ring::npos) a.set(t * n + to, t * n + idx, 1);
            }
        actions.push_back(std::move(a));
    }
    return Module::make_unchecked(ring, std::move(actions));
}

Module residue_field(const Ring& ring) {
    std::vector<Mat> actions(ring.codim(), Mat(ring.field(), 1, 1));
    return Module::make_unchecked(ring, std::move(actions));
}

Mat form_action(const Module& m, const LinearForm& g) {
    if (g.coeffs().size() != m.ring().codim())
        throw std::invalid_argument("form_action: arity mismatch");
    Mat l(m.ring().field(), m.dim(), m.dim());
    for (std::size_t i = 0; i < m.ring().codim(); ++i)
        if (g.coeffs()[i]) l = l + m.action(i).scaled(g.coeffs()[i]);
    return l;
}

std::size_t form_order(const Ring& ring, const LinearForm& g) {
    Module a = regular_module(ring);
    Mat l = form_action(a, g);
    Mat acc = l;
    std::size_t t = 1;
    while (!acc.is_zero()) {
        acc = acc * l;
        ++t;
    }
    return t;
}

Mat monomial_action(const Module& m, std::size_t index) {
    const Ring& r = m.ring();
    Mat acc = Mat::identity(r.field(), m.dim());
    std::vector<unsigned> e = r.exponent_of(index);
    for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) acc = m.action(i) * acc;
    return acc;
}

Mat element_action(const Module& m, std::span<const std::uint64_t> coeffs) {
    const Ring& r = m.ring();
    if (coeffs.size() != r.length())
        throw std::invalid_argument("element_action: coefficient vector length");
    Mat acc(r.field(), m.dim(), m.dim());
    for (std::size_t idx = 0; idx < coeffs.size(); ++idx)
        if (coeffs[idx]) acc = acc + monomial_action(m, idx).scaled(coeffs[idx]);
    return acc;
}

Module quotient_by_form_power(const Ring& ring, const LinearForm& g, unsigned j) {
    Module a = regular_module(ring);
    return form_power_quotient(a, g, j).module;
}

QuotientData form_power_quotient(const Module& m, const LinearForm& g, unsigned j) {
    Mat img = form_action(m, g).pow(j); // j = 0 gives the identity, so M/M = 0
    RowSpace w = RowSpace::from_rows(img.transpose());
    return quotient(m, w);
}

Module direct_sum(const Module& a, const Module& b) {
    if (!(a.ring() == b.ring())) throw std::invalid_argument("direct_sum: ring mismatch");
    const Fp f = a.ring().field();
    std::vector<Mat> actions;
    for (std::size_t i = 0; i < a.ring().codim(); ++i) {
        Mat blk(f, a.dim() + b.dim(), a.dim() + b.dim());
        for (std::size_t r = 0; r < a.dim(); ++r)
            for (std::size_t c = 0; c < a.dim(); ++c) blk.set(r, c, a.action(i)(r, c));
        for (std::size_t r = 0; r < b.dim(); ++r)
            for (std::size_t c = 0; c < b.dim(); ++c)
                blk.set(a.dim() + r, a.dim() + c, b.action(i)(r, c));
        actions.push_back(std::move(blk));
    }
    return Module::make_unchecked(a.ring(), std::move(actions));
}

Module dual(const Module& m) {
    std::vector<Mat> actions;
    for (const Mat& a : m.actions()) actions.push_back(a.transpose());
    return Module::make_unchecked(m.ring(), std::move(actions));
}

Module restrict_scalars(const Module& m, const Embedding& emb) {
    if (!(m.ring() == emb.parent))
        throw std::invalid_argument("restrict_scalars: module is not over the parent ring");
    std::vector<Mat> actions;
    for (std::size_t i = 0; i < emb.powers.size(); ++i)
        actions.push_back(m.action(i).pow(emb.powers[i]));
    return Module::make_unchecked(emb.sub, std::move(actions));
}

std::size_t min_generators(const Module& m) {
    return m.dim() - radical_subspace(m).dim();
}

RowSpace radical_subspace(const Module& m) {
    if (m.dim() == 0) return RowSpace::zero(m.ring().field(), 0);
    Mat stacked(m.ring().field(), 0, m.dim());
    for (const Mat& a : m.actions()) stacked = vstack(stacked, a.transpose());
    return RowSpace::from_rows(stacked);
}

std::vector<std::size_t> radical_profile(const Module& m) {
    std::vector<std::size_t> dims{m.dim()};
    // iterate v -> span{ act_i v } starting from the whole space
    RowSpace cur = RowSpace::from_rows(Mat::identity(m.ring().field(), m.dim()));
    while (cur.dim() > 0) {
        Mat next(m.ring().field(), 0, m.dim());
        for (const Mat& a : m.actions()) next = vstack(next, (a * cur.basis().transpose()).transpose());
        cur = RowSpace::from_rows(next);
        dims.push_back(cur.dim());
    }
    return dims;
}

SubmoduleData submodule(const Module& ambient, const RowSpace& w) {
    const Fp f = ambient.ring().field();
    const std::size_t q = w.dim();
    Mat incl = w.basis().transpose(); // ambient.dim x q
    std::vector<Mat> actions;
    for (const Mat& a : ambient.actions()) {
        Mat image = a * incl; // ambient.dim x q
        Mat act(f, q, q);
        for (std::size_t j = 0; j < q; ++j) {
            std::vector<std::uint64_t> v = image.col(j);
            if (!w.contains(v))
                throw std::invalid_argument("submodule: subspace is not action-invariant");
            std::vector<std::uint64_t> c = w.coords(v);
            for (std::size_t i = 0; i < q; ++i) act.set(i, j, c[i]);
        }
        actions.push_back(std::move(act));
    }
    Module sub = Module::make_unchecked(ambient.ring(), std::move(actions));
    return {sub, ModuleMap(sub, ambient, std::move(incl))};
}

QuotientData quotient(const Module& ambient, const RowSpace& w) {
    const Fp f = ambient.ring().field();
    const std::size_t n = ambient.dim();
    if (w.ambient() != n) throw std::invalid_argument("quotient: ambient mismatch");
    for (const Mat& a : ambient.actions()) {
        Mat moved = (a * w.basis().transpose()).transpose();
        for (std::size_t i = 0; i < moved.rows(); ++i)
            if (!w.contains(moved.row(i)))
                throw std::invalid_argument("quotient: subspace is not action-invariant");
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : w.pivots()) is_pivot[c] = true;
    std::vector<std::size_t> rest; // coordinates surviving into the quotient
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) rest.push_back(c);
    const std::size_t q = rest.size();

    // projection: v mod W, read off the non-pivot coordinates
    Mat proj(f, q, n);
    for (std::size_t r = 0; r < q; ++r) {
        proj.set(r, rest[r], 1);
        for (std::size_t i = 0; i < w.dim(); ++i)
            proj.set(r, w.pivots()[i], f.neg(w.basis()(i, rest[r])));
    }
    // section: quotient coordinate r -> e_{rest[r]}
    Mat sect(f, n, q);
    for (std::size_t r = 0; r < q; ++r) sect.set(rest[r], r, 1);

    std::vector<Mat> actions;
    for (const Mat& a : ambient.actions()) actions.push_back(proj * a * sect);
    Module quo = Module::make_unchecked(ambient.ring(), std::move(actions));
    return {quo, ModuleMap(ambient, quo, std::move(proj)), std::move(sect)};
}

RowSpace invariant_closure(const Module& m, const Mat& rows) {
    RowSpace cur = RowSpace::from_rows(rows);
    for (;;) {
        Mat next = cur.basis();
        for (const Mat& a : m.actions())
            next = vstack(next, (a * cur.basis().transpose()).transpose());
        RowSpace grown = RowSpace::from_rows(next);
        if (grown.dim() == cur.dim()) return grown;
        cur = grown;
    }
}

} // namespace cihomol
