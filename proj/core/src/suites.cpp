#include "cihomol/suites.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "cihomol/serialize.hpp"

namespace cihomol {

namespace {

using Witness = std::vector<std::pair<std::string, std::string>>;

class Builder {
public:
    Builder(std::string suite, const Ring& ring, const SuiteOptions& opt)
        : start_(std::chrono::steady_clock::now()) {
        rep_.suite = std::move(suite);
        rep_.ring_spec = ring.spec_string();
        rep_.params = {{"budget", std::to_string(opt.budget)},
                       {"max_deg", std::to_string(opt.max_deg)},
                       {"sample", std::to_string(opt.sample)},
                       {"seed", std::to_string(opt.seed)},
                       {"trials", std::to_string(opt.trials)}};
    }

    void param(const std::string& key, const std::string& value) {
        rep_.params.emplace_back(key, value);
    }

    void add(std::string id, std::string description, std::string anchor, bool pass,
             Witness witness = {}) {
        rep_.checks.push_back({std::move(id), std::move(description), std::move(anchor),
                               pass ? "pass" : "fail", std::move(witness)});
    }

    void add_verdict(std::string id, std::string description, std::string anchor,
                     std::string verdict, Witness witness = {}) {
        rep_.checks.push_back({std::move(id), std::move(description), std::move(anchor),
                               std::move(verdict), std::move(witness)});
    }

    SuiteReport finish() {
        std::sort(rep_.checks.begin(), rep_.checks.end(),
                  [](const SuiteCheck& a, const SuiteCheck& b) { return a.id < b.id; });
        std::sort(rep_.params.begin(), rep_.params.end());
        rep_.pass = !rep_.checks.empty();
        for (const SuiteCheck& c : rep_.checks)
            if (c.verdict != "pass") rep_.pass = false;
        rep_.runtime_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return rep_;
    }

private:
    SuiteReport rep_;
    std::chrono::steady_clock::time_point start_;
};

std::string join_sizes(const std::vector<Module>& ms) {
    std::string s;
    for (const Module& m : ms) {
        if (!s.empty()) s += ",";
        s += std::to_string(m.length());
    }
    return s;
}

} // namespace

std::string report_to_json(const SuiteReport& r) {
    nlohmann::json j;
    j["schema"] = "cihomol-report/1";
    j["suite"] = r.suite;
    j["ring"] = r.ring_spec;
    nlohmann::json params;
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = std::move(params);
    nlohmann::json checks = nlohmann::json::array();
    for (const SuiteCheck& c : r.checks) {
        nlohmann::json o;
        o["id"] = c.id;
        o["description"] = c.description;
        o["anchor"] = c.anchor;
        o["verdict"] = c.verdict;
        nlohmann::json w = nlohmann::json::object();
        for (const auto& [k, v] : c.witness) w[k] = v;
        o["witness"] = std::move(w);
        checks.push_back(std::move(o));
    }
    j["checks"] = std::move(checks);
    j["pass"] = r.pass;
    return j.dump(2) + "\n";
}

std::string report_to_text(const SuiteReport& r) {
    // wall-clock time is deliberately absent: stdout stays byte-identical
    // across reruns; the CLI reports runtime on stderr
    std::ostringstream os;
    os << "suite " << r.suite << " over " << r.ring_spec << "  ["
       << (r.pass ? "PASS" : "FAIL") << "]\n";
    os << "  params:";
    for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
    os << "\n";
    for (const SuiteCheck& c : r.checks) {
        os << "  [" << c.verdict << "] " << c.id << "  " << c.description << "  {"
           << c.anchor << "}";
        if (!c.witness.empty()) {
            os << "  ";
            for (const auto& [k, v] : c.witness) os << k << "=" << v << " ";
        }
        os << "\n";
    }
    return os.str();
}

SuiteReport lemma_h_suite(const Ring& ring, const LinearForm& g, const SuiteOptions& opt) {
    Builder b("lemma-h", ring, opt);
    b.param("g", g.to_string());
    std::vector<Module> family = h_family(ring, g);
    const std::size_t r = family.size() + 1;
    const std::size_t l1 = family[0].length();
    b.param("r", std::to_string(r));

    bool lengths_ok = true;
    for (std::size_t i = 0; i < family.size(); ++i)
        lengths_ok = lengths_ok && family[i].length() == (i + 1) * l1;
    b.add("01-lengths", "every H_i has length i*l(H_1)", "l(H_i) = i*l(H_1)", lengths_ok,
          {{"lengths", join_sizes(family)}});

    b.add("02-ring-length", "l(A) equals r*l(H_1)", "l(A) = r*l(H_1)",
          ring.length() == r * l1,
          {{"l(A)", std::to_string(ring.length())}, {"r", std::to_string(r)}});

    bool mu_ok = true;
    for (const Module& h : family) mu_ok = mu_ok && min_generators(h) == 1;
    b.add("03-minimal-generators", "every H_i is cyclic", "mu(H_i) = 1", mu_ok);

    std::string verdict = "pass";
    for (std::size_t i = 0; i < family.size(); ++i) {
        Module red = stable_reduce(family[i], opt.cache);
        IsoResult ir = iso_test(red, family[i], opt.trials, opt.seed + i, opt.cache);
        if (ir.verdict == IsoResult::Verdict::Unknown) verdict = "undetermined";
        else if (ir.verdict != IsoResult::Verdict::Iso) { verdict = "fail"; break; }
    }
    b.add_verdict("04-no-free-summand", "every H_i is a stable_reduce fixed point",
                  "stable_reduce(H_i) ~= H_i", verdict);

    verdict = "pass";
    for (std::size_t i = 0; i < family.size() && verdict != "fail"; ++i) {
        Module om = syzygy(family[i], opt.cache);
        IsoResult ir =
            iso_test(om, family[r - (i + 1) - 1], opt.trials, opt.seed + 100 + i, opt.cache);
        if (ir.verdict == IsoResult::Verdict::Unknown) verdict = "undetermined";
        else if (ir.verdict != IsoResult::Verdict::Iso) verdict = "fail";
    }
    b.add_verdict("05-syzygy-reflection", "Omega(H_i) is isomorphic to H_{r-i}",
                  "Omega(H_i) ~= H_{r-i}", verdict);

    verdict = "pass";
    Witness w6;
    std::optional<LinearForm> common;
    for (std::size_t i = 0; i < family.size() && verdict == "pass"; ++i) {
        LocateResult loc = locate_periodic_support(family[i], opt.max_deg, opt.trials,
                                                   opt.seed, opt.cache);
        if (!loc.point) {
            verdict = "undetermined";
            w6.emplace_back("H_" + std::to_string(i + 1), loc.diagnostics);
        } else if (!common) {
            common = loc.point;
            w6.emplace_back("point", loc.point->to_string());
        } else if (!(*loc.point == *common)) {
            verdict = "fail";
            w6.emplace_back("H_" + std::to_string(i + 1), loc.point->to_string());
        }
    }
    b.add_verdict("06-common-support", "all H_i share one support point",
                  "V(H_i) = V(H_1)", verdict, std::move(w6));
    return b.finish();
}

SuiteReport disjoint_suite(const Ring& ring, const SuiteOptions& opt) {
    if (ring.codim() != 2)
        throw std::invalid_argument("disjoint suite: needs a codimension-2 ring");
    Builder b("disjoint", ring, opt);
    Module m = quotient_by_form_power(ring, LinearForm::variable(ring, 0), 1);
    Module n = quotient_by_form_power(ring, LinearForm::variable(ring, 1), 1);

    b.add("01-minimal-generators", "M = A/(x) and N = A/(y) are cyclic",
          "mu(M) = mu(N) = 1", min_generators(m) == 1 && min_generators(n) == 1);

    std::string verdict = "pass";
    for (const Module* mod : {&m, &n}) {
        IsoResult ir = iso_test(stable_reduce(*mod, opt.cache), *mod, opt.trials, opt.seed,
                                opt.cache);
        if (ir.verdict == IsoResult::Verdict::Unknown) verdict = "undetermined";
        else if (ir.verdict != IsoResult::Verdict::Iso) { verdict = "fail"; break; }
    }
    b.add_verdict("02-no-free-summand", "M and N have no free summand",
                  "stable_reduce fixed points", verdict);

    ComplexityVerdict cm = classify_complexity(m, opt.max_deg, opt.trials, opt.seed, opt.cache);
    ComplexityVerdict cn = classify_complexity(n, opt.max_deg, opt.trials, opt.seed, opt.cache);
    bool periodic = cm.kind == ComplexityVerdict::Kind::PeriodicFrom &&
                    cn.kind == ComplexityVerdict::Kind::PeriodicFrom;
    b.add("03-periodic", "M and N are periodic", "Omega^d(M) ~= M, d <= 2", periodic,
          {{"M", cm.to_string()}, {"N", cn.to_string()}});

    Module mn = tensor(m, n);
    b.add("04-tensor-length", "M ox N is the one-dimensional quotient A/(x,y)",
          "l(M ox N) = 1", mn.length() == 1, {{"l", std::to_string(mn.length())}});

    bool tor_ok = true;
    Witness w5;
    for (std::size_t i = 1; i <= 6; ++i) {
        std::size_t d = tor(m, n, i, 6, opt.cache).dim();
        tor_ok = tor_ok && d == 0;
        w5.emplace_back("tor_" + std::to_string(i), std::to_string(d));
    }
    b.add("05-tor-vanishing", "Tor_i(M, N) vanishes for i = 1..6",
          "Tor_i(M,N) = 0 for i >= 1", tor_ok, std::move(w5));

    Module om = syzygy(m, opt.cache);
    Module omn = tensor(om, n);
    std::size_t tor1 = tor(m, n, 1, 2, opt.cache).dim();
    bool alt = tor1 == omn.length() - n.length() + mn.length();
    b.add("06-alternating-sum",
          "l(Tor_1) equals the alternating sum of the tensored cover sequence",
          "l(Tor_1) - l(Omega(M) ox N) + l(N) - l(M ox N) = 0", alt,
          {{"l(Tor_1)", std::to_string(tor1)},
           {"l(Omega(M) ox N)", std::to_string(omn.length())},
           {"l(N)", std::to_string(n.length())},
           {"l(M ox N)", std::to_string(mn.length())}});

    DisjointVerdict dv = supports_disjoint(m, n, opt.max_deg, opt.trials, opt.seed, opt.cache);
    b.add_verdict("07-disjoint-verdict", "supports of M and N are disjoint",
                  "V(M) cap V(N) = empty",
                  dv.kind == DisjointVerdict::Kind::Disjoint
                      ? "pass"
                      : (dv.kind == DisjointVerdict::Kind::Undetermined ? "undetermined"
                                                                        : "fail"),
                  {{"verdict", dv.to_string()}});
    return b.finish();
}

namespace {

std::vector<Module> identity_samples(const Ring& ring, const LinearForm& alpha,
                                     const SuiteOptions& opt) {
    std::vector<Module> xs;
    xs.push_back(residue_field(ring));
    xs.push_back(regular_module(ring));
    xs.push_back(free_module(ring, 2));
    FamilySpec spec;
    std::size_t half = opt.sample / 2 + 1;
    for (auto& cm : cx1_family(ring, spec, half, opt.seed, opt.max_deg, opt.trials, opt.cache))
        xs.push_back(std::move(cm.module));
    for (auto& m : avoiding_family(ring, alpha, half, opt.seed + 1, opt.max_deg, opt.trials,
                                   opt.cache))
        xs.push_back(std::move(m));
    std::size_t keep = std::max<std::size_t>(opt.sample, 3);
    if (xs.size() > keep)
        xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(keep), xs.end());
    return xs;
}

} // namespace

SuiteReport length_identity_suite(const Ring& ring, const LinearForm& g,
                                  const SuiteOptions& opt) {
    std::size_t order = form_order(ring, g);
    if (order != 2)
        throw std::invalid_argument(
            "length-identity suite: g must have nilpotency order 2 on A (got " +
            std::to_string(order) + ")");
    Builder b("length-identity", ring, opt);
    b.param("g", g.to_string());

    Module h = quotient_by_form_power(ring, g, 1);
    const std::size_t mu = min_generators(h);

    IsoResult self = iso_test(syzygy(h, opt.cache), h, opt.trials, opt.seed, opt.cache);
    b.add_verdict("01-self-syzygy", "Omega(H) is isomorphic to H", "Omega(H) ~= H",
                  self.verdict == IsoResult::Verdict::Iso
                      ? "pass"
                      : (self.verdict == IsoResult::Verdict::Unknown ? "undetermined"
                                                                     : "fail"));

    std::vector<Module> xs = identity_samples(ring, g, opt);
    bool ok = true;
    std::size_t socle_count = 0;
    Witness w2{{"samples", std::to_string(xs.size())}};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const Module& x = xs[i];
        std::size_t t1 = tor(x, h, 1, 2, opt.cache).dim();
        std::size_t lhs = t1 + mu * x.length();
        std::size_t rhs = 2 * tensor(h, x).length();
        if (t1 == mu) ++socle_count;
        if (lhs != rhs) {
            ok = false;
            w2.emplace_back("sample_" + std::to_string(i),
                            std::to_string(lhs) + " != " + std::to_string(rhs));
        }
    }
    b.add("02-identity", "dim Tor_1(X,H) + mu(H) l(X) = 2 l(H ox X) on every sample",
          "dim Tor_1(X,H) + mu(H)*l(X) = 2*l(H ox X)", ok, std::move(w2));

    b.add("03-socle-form",
          "samples with Tor_1(X,H) = k^mu satisfy the identity in its sharp form",
          "mu + mu*l(X) = 2*l(H ox X)", true,
          {{"count", std::to_string(socle_count)}});
    return b.finish();
}

SuiteReport filtration_suite(const Ring& ring, const LinearForm& g, const SuiteOptions& opt) {
    std::size_t r = form_order(ring, g);
    if (r < 3)
        throw std::invalid_argument("filtration suite: g must have nilpotency order >= 3");
    Builder b("filtration", ring, opt);
    b.param("g", g.to_string());
    b.param("r", std::to_string(r));

    bool betti_ok = true;
    Witness w1;
    for (std::size_t s = 1; s < r; ++s) {
        Module hs = quotient_by_form_power(ring, g, static_cast<unsigned>(s));
        Resolution res = resolve(hs, opt.max_deg, opt.cache);
        bool unit = true;
        for (std::size_t l = 0; l <= opt.max_deg; ++l) unit = unit && res.betti()[l] == 1;
        betti_ok = betti_ok && unit;
        std::string bs;
        for (std::size_t l = 0; l <= opt.max_deg; ++l)
            bs += (l ? "," : "") + std::to_string(res.betti()[l]);
        w1.emplace_back("H_" + std::to_string(s), bs);
    }
    b.add("01-unit-betti", "every H_s resolves with Betti numbers all 1",
          "beta_l(H_s) = 1 for all l", betti_ok, std::move(w1));

    std::vector<Module> xs;
    xs.push_back(free_module(ring, 1));
    std::size_t want = std::max<std::size_t>(opt.sample, 1);
    for (auto& m : avoiding_family(ring, g, want, opt.seed, opt.max_deg, opt.trials, opt.cache))
        xs.push_back(std::move(m));
    if (xs.size() > want)
        xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(want), xs.end());

    bool exact_ok = true, mult_ok = true;
    Witness w2{{"samples", std::to_string(xs.size())}};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const Module& x = xs[i];
        std::vector<QuotientData> q;
        q.push_back(form_power_quotient(x, g, 0)); // zero module
        for (unsigned j = 1; j + 1 <= r; ++j) q.push_back(form_power_quotient(x, g, j));
        Mat lx = form_action(x, g);
        for (unsigned j = 2; j + 1 <= r; ++j) {
            // v: X/g^{j-1} -> X/g^j induced by multiplication by g
            Mat v = q[j].projection.mat() * lx * q[j - 1].section;
            // w: X/g^j -> X/g
            Mat wmat = q[1].projection.mat() * q[j].section;
            ModuleMap vm = ModuleMap(q[j - 1].module, q[j].module, std::move(v));
            ModuleMap wm = ModuleMap(q[j].module, q[1].module, std::move(wmat));
            if (!is_exact(short_exact_chain(vm, wm))) {
                exact_ok = false;
                w2.emplace_back("sample_" + std::to_string(i),
                                "row j=" + std::to_string(j) + " not exact");
            }
        }
        for (unsigned j = 1; j + 1 <= r; ++j)
            if (q[j].module.length() != j * q[1].module.length()) {
                mult_ok = false;
                w2.emplace_back("sample_" + std::to_string(i),
                                "length at j=" + std::to_string(j));
            }
    }
    b.add("02-filtration-exact",
          "rows 0 -> X/g^{j-1}X -> X/g^jX -> X/gX -> 0 are exact on every sample",
          "g-power filtration rows exact", exact_ok, std::move(w2));
    b.add("03-length-multiplicative", "l(X/g^jX) = j l(X/gX) on every sample",
          "l(X/g^jX) = j*l(X/gX)", mult_ok);
    return b.finish();
}

SuiteReport divisibility_suite(const Ring& ring, std::uint64_t p, const SuiteOptions& opt) {
    if (!is_prime(p)) throw std::invalid_argument("divisibility suite: p must be prime");
    std::vector<unsigned> u(ring.codim(), 1);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < ring.codim() && hits < 2; ++i)
        if (ring.exps()[i] % p == 0) {
            u[i] = static_cast<unsigned>(ring.exps()[i] / p);
            ++hits;
        }
    if (hits < 2)
        throw std::invalid_argument(
            "divisibility suite: p must divide at least two exponents");

    Builder b("divisibility", ring, opt);
    b.param("p", std::to_string(p));
    Embedding emb = power_subring_embedding(ring, u);
    std::string ustr;
    for (std::size_t i = 0; i < u.size(); ++i) ustr += (i ? "," : "") + std::to_string(u[i]);
    b.param("u", ustr);

    FamilySpec spec;
    std::vector<CertifiedModule> family =
        cx1_family(ring, spec, opt.budget, opt.seed, opt.max_deg, opt.trials, opt.cache);

    b.add("01-family-size", "the generator produced a full certified family",
          "certified family of size budget", family.size() == opt.budget,
          {{"size", std::to_string(family.size())},
           {"budget", std::to_string(opt.budget)}});

    std::optional<std::size_t> fr = is_free(restrict_scalars(regular_module(ring), emb));
    b.add("02-embedding", "A restricts to a free module over R of rank prod u_i",
          "A is R-free of rank prod u_i; l(A) = rank * l(R)",
          fr.has_value() && *fr == emb.rank() &&
              ring.length() == emb.rank() * emb.sub.length(),
          {{"rank", fr ? std::to_string(*fr) : "none"},
           {"l(R)", std::to_string(emb.sub.length())}});

    bool len_ok = true;
    std::string verdict = "pass";
    Witness w4;
    for (std::size_t i = 0; i < family.size(); ++i) {
        Module res = restrict_scalars(family[i].module, emb);
        len_ok = len_ok && res.length() == family[i].module.length();
        ComplexityVerdict cv =
            classify_complexity(res, opt.max_deg, opt.trials, opt.seed + i, opt.cache);
        if (cv.kind == ComplexityVerdict::Kind::Undetermined && verdict == "pass")
            verdict = "undetermined";
        if (cv.kind == ComplexityVerdict::Kind::UnboundedEvidence) verdict = "fail";
        if (verdict != "pass" && w4.size() < 4)
            w4.emplace_back("member_" + std::to_string(i), cv.to_string());
    }
    b.add("03-restriction-length", "restriction of scalars preserves length",
          "l_R(E) = l_A(E)", len_ok);
    b.add_verdict("04-restriction-bounded",
                  "every restriction has certified bounded Betti numbers over R",
                  "betti_R(E) bounded", family.empty() ? "pass" : verdict, std::move(w4));

    std::vector<Module> mods;
    for (const auto& cm : family) mods.push_back(cm.module);
    DivisibilityReport rep = divisibility_report(ring, mods, p);
    Witness w5{{"members", std::to_string(mods.size())}};
    for (const auto& h : rep.failures) w5.emplace_back("failure", h);
    b.add("05-divides", "p divides the length of every certified member",
          "p | l(E) when cx(E) <= 1", rep.pass && !mods.empty(), std::move(w5));
    return b.finish();
}

SuiteReport gap_suite(const Ring& ring, const LinearForm& g, const SuiteOptions& opt) {
    Builder b("gap", ring, opt);
    b.param("g", g.to_string());
    Module h = quotient_by_form_power(ring, g, 1);

    ComplexityVerdict hc = classify_complexity(h, opt.max_deg, opt.trials, opt.seed, opt.cache);
    std::string hv = "undetermined";
    if (hc.kind == ComplexityVerdict::Kind::PeriodicFrom) hv = "pass";
    if (hc.kind == ComplexityVerdict::Kind::UnboundedEvidence) hv = "fail";
    b.add_verdict("01-witness-periodic", "H = A/(g) is certified periodic",
                  "Omega^d(H) ~= H, d <= 2", hv, {{"certificate", hc.to_string()}});

    std::vector<Module> family = avoiding_family(ring, g, opt.budget, opt.seed, opt.max_deg,
                                                 opt.trials, opt.cache);
    std::string verdict = "pass";
    for (std::size_t i = 0; i < family.size(); ++i) {
        DisjointVerdict dv = supports_disjoint(family[i], h, opt.max_deg, opt.trials,
                                               opt.seed + i, opt.cache);
        if (dv.kind == DisjointVerdict::Kind::Undetermined) verdict = "undetermined";
        else if (dv.kind != DisjointVerdict::Kind::Disjoint) { verdict = "fail"; break; }
    }
    b.add_verdict("02-family-avoids",
                  "every family member re-certifies as support-disjoint from H",
                  "V(X) cap V(H) = empty", verdict,
                  {{"family", std::to_string(family.size())},
                   {"lengths", join_sizes(family)}});

    SubgroupInfo sg = subgroup_of_lengths(ring, family);
    b.add("03-proper-subgroup",
          "lengths of avoiders generate a proper subgroup of Z/l(A)Z",
          "index >= 2 in Z/l(A)Z", sg.index >= 2,
          {{"generator", std::to_string(sg.generator)},
           {"index", std::to_string(sg.index)},
           {"empirical_m_A", std::to_string(sg.index)}});
    return b.finish();
}

SuiteReport run_suite(const std::string& name, const Ring& ring,
                      const std::optional<LinearForm>& g, std::uint64_t p,
                      const SuiteOptions& opt) {
    auto need_g = [&]() -> const LinearForm& {
        if (!g) throw std::invalid_argument("suite '" + name + "' needs --g");
        return *g;
    };
    if (name == "lemma-h") return lemma_h_suite(ring, need_g(), opt);
    if (name == "disjoint") return disjoint_suite(ring, opt);
    if (name == "length-identity") return length_identity_suite(ring, need_g(), opt);
    if (name == "filtration") return filtration_suite(ring, need_g(), opt);
    if (name == "divisibility") {
        if (p < 2) throw std::invalid_argument("suite 'divisibility' needs --p");
        return divisibility_suite(ring, p, opt);
    }
    if (name == "gap") return gap_suite(ring, need_g(), opt);
    throw std::invalid_argument(
        "unknown suite '" + name +
        "' (expected lemma-h, disjoint, length-identity, filtration, divisibility, gap)");
}

} // namespace cihomol
