// Standalone brute-force resolver used as an independent oracle for Betti
// numbers. Syzygies are kept as spanning sets inside explicit free modules;
// elimination, pivoting and generator selection are all deliberately
// different from the library's choices.

#include "test_support_oracles.hpp"

#include <stdexcept>

namespace oracle {

namespace {

using cihomol::Module;
using cihomol::Ring;

/// Incremental eliminator: insert rows, reduce vectors against the span.
struct Eliminator {
    u64 p;
    std::size_t n;
    std::vector<std::pair<std::size_t, std::vector<u64>>> rows; // (pivot, row)

    std::vector<u64> reduce(std::vector<u64> v) const {
        for (const auto& [pc, row] : rows) {
            u64 f = v[pc];
            if (!f) continue;
            for (std::size_t j = 0; j < n; ++j) v[j] = (v[j] + (p - f) * row[j]) % p;
        }
        return v;
    }

    bool insert(std::vector<u64> v) {
        v = reduce(std::move(v));
        std::size_t pc = n;
        for (std::size_t j = 0; j < n; ++j)
            if (v[j]) { pc = j; break; }
        if (pc == n) return false;
        u64 s = mini_inv(v[pc], p);
        for (std::size_t j = 0; j < n; ++j) v[j] = v[j] * s % p;
        rows.emplace_back(pc, std::move(v));
        return true;
    }

    std::size_t rank() const { return rows.size(); }
};

/// X_v applied to a vector of the free module A^b (index t * l(A) + mono).
std::vector<u64> free_var_apply(const Ring& ring, std::size_t b, const std::vector<u64>& v,
                                std::size_t var) {
    const std::size_t la = ring.length();
    std::vector<u64> out(v.size(), 0);
    for (std::size_t t = 0; t < b; ++t)
        for (std::size_t idx = 0; idx < la; ++idx) {
            u64 c = v[t * la + idx];
            if (!c) continue;
            std::size_t to = ring.shift_index(idx, var);
            if (to != Ring::npos) out[t * la + to] = (out[t * la + to] + c) % ring.field().p();
        }
    return out;
}

struct GenPick {
    std::size_t mu;
    std::vector<std::vector<u64>> gens;
};

/// Minimal generators of the span of `spanning` inside A^b: greedy scan of
/// the spanning vectors against the radical span.
GenPick pick_generators_free(const Ring& ring, std::size_t b,
                             const std::vector<std::vector<u64>>& spanning) {
    const u64 p = ring.field().p();
    const std::size_t dim = b * ring.length();
    Eliminator rad{p, dim, {}};
    for (const auto& w : spanning)
        for (std::size_t v = 0; v < ring.codim(); ++v)
            rad.insert(free_var_apply(ring, b, w, v));
    Eliminator picked = rad;
    GenPick out{0, {}};
    for (const auto& w : spanning)
        if (picked.insert(w)) {
            out.gens.push_back(w);
            ++out.mu;
        }
    return out;
}

/// Kernel of the map A^mu -> A^b sending generator t to gens[t], as a
/// spanning set of vectors in A^mu.
std::vector<std::vector<u64>> kernel_of_presentation(const Ring& ring, std::size_t b,
                                                     const std::vector<std::vector<u64>>& gens) {
    const std::size_t la = ring.length();
    const std::size_t mu = gens.size();
    const std::size_t rows = b * la, cols = mu * la;
    MiniMat m{rows, cols, std::vector<u64>(rows * cols, 0)};
    for (std::size_t t = 0; t < mu; ++t) {
        std::vector<std::vector<u64>> pow(la);
        pow[0] = gens[t];
        for (std::size_t idx = 1; idx < la; ++idx) {
            auto [var, prev] = ring.predecessor(idx);
            pow[idx] = free_var_apply(ring, b, pow[prev], var);
        }
        for (std::size_t idx = 0; idx < la; ++idx)
            for (std::size_t r = 0; r < rows; ++r)
                if (pow[idx][r]) m.put(r, t * la + idx, pow[idx][r]);
    }
    return mini_kernel(std::move(m), ring.field().p()).second;
}

} // namespace

std::vector<std::size_t> mini_betti(const Module& m, std::size_t deg) {
    const Ring& ring = m.ring();
    const u64 p = ring.field().p();
    const std::size_t la = ring.length();

    // level 0: generators of M itself, greedy against the radical
    Eliminator rad{p, m.dim(), {}};
    for (std::size_t v = 0; v < ring.codim(); ++v)
        for (std::size_t c = 0; c < m.dim(); ++c) {
            std::vector<u64> col(m.dim());
            for (std::size_t r = 0; r < m.dim(); ++r) col[r] = m.action(v)(r, c);
            rad.insert(std::move(col));
        }
    Eliminator picked = rad;
    std::vector<std::vector<u64>> gens;
    for (std::size_t c = m.dim(); c-- > 0;) { // scan from the last coordinate
        std::vector<u64> e(m.dim(), 0);
        e[c] = 1;
        if (picked.insert(e)) gens.push_back(std::move(e));
    }
    std::vector<std::size_t> betti{gens.size()};
    if (deg == 0) return betti;

    // kernel of A^{b0} -> M
    std::size_t b0 = gens.size();
    MiniMat pres{m.dim(), b0 * la, std::vector<u64>(m.dim() * b0 * la, 0)};
    for (std::size_t t = 0; t < b0; ++t) {
        std::vector<std::vector<u64>> pow(la);
        pow[0] = gens[t];
        for (std::size_t idx = 1; idx < la; ++idx) {
            auto [var, prev] = ring.predecessor(idx);
            pow[idx] = m.action(var).apply(pow[prev]);
        }
        for (std::size_t idx = 0; idx < la; ++idx)
            for (std::size_t r = 0; r < m.dim(); ++r)
                if (pow[idx][r]) pres.put(r, t * la + idx, pow[idx][r]);
    }
    std::vector<std::vector<u64>> spanning = mini_kernel(std::move(pres), p).second;
    std::size_t rank = b0;

    for (std::size_t i = 1; i <= deg; ++i) {
        GenPick pick = pick_generators_free(ring, rank, spanning);
        betti.push_back(pick.mu);
        if (i == deg) break;
        spanning = kernel_of_presentation(ring, rank, pick.gens);
        rank = pick.mu;
    }
    return betti;
}

} // namespace oracle
