// cihomol: exact homological computations over Artinian monomial complete
// intersections F_p[X_1..X_c]/(X_i^{a_i}).
//
// Exit codes: 0 success / suite pass; 1 negative verdict or suite failure;
// 2 usage or parse error; 3 undetermined / unknown verdict.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "cihomol/cache.hpp"
#include "cihomol/construct.hpp"
#include "cihomol/gk.hpp"
#include "cihomol/serialize.hpp"
#include "cihomol/suites.hpp"
#include "cihomol/support.hpp"

using namespace cihomol;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kNegative = 1, kUsage = 2, kUndetermined = 3;

struct Common {
    std::string ring_spec;
    std::string module_path, module2_path;
    std::string out_path;
    std::string format = "text";
    std::string cache_dir = ".cihomol-cache";
    bool no_cache = false;
    std::size_t max_deg = 8;
    std::size_t trials = 32;
    std::size_t budget = 50;
    std::size_t sample = 100;
    std::uint64_t seed = 0;
};

Cache make_cache(const Common& c) {
    if (c.no_cache) return Cache();
    return Cache(c.cache_dir);
}

void emit(const Common& c, const json& j, const std::string& text) {
    if (c.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homological computations over Artinian monomial complete "
                 "intersections F_p[X_1..X_c]/(X_i^{a_i})"};
    app.require_subcommand(1);
    Common c;
    std::function<int()> action;

    auto add_common = [&](CLI::App* sub, bool ring_required = false) {
        auto* r = sub->add_option("--ring", c.ring_spec,
                                  "ring spec: p=<prime>;exps=<a1>,<a2>,...");
        if (ring_required) r->required();
        sub->add_option("--format", c.format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--cache-dir", c.cache_dir, "resolution cache directory");
        sub->add_flag("--no-cache", c.no_cache, "disable the on-disk resolution cache");
        sub->add_option("--max-degree", c.max_deg, "homological degree bound");
        sub->add_option("--trials", c.trials, "randomized isomorphism trials");
        sub->add_option("--seed", c.seed, "deterministic seed");
    };

    // ring-info -------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("ring-info", "print ring invariants");
        add_common(sub, true);
        sub->callback([&] {
            action = [&]() {
                Ring ring = parse_ring_spec(c.ring_spec);
                json j;
                j["ring"] = ring.spec_string();
                j["p"] = ring.field().p();
                j["codim"] = ring.codim();
                j["exps"] = ring.exps();
                j["length"] = ring.length();
                j["points"] = enumerate_points(ring).size();
                std::string text = "ring " + ring.spec_string() + "\n  l(A) = " +
                                   std::to_string(ring.length()) + "\n  codim = " +
                                   std::to_string(ring.codim()) + "\n  points(P^{c-1}) = " +
                                   std::to_string(enumerate_points(ring).size()) + "\n";
                emit(c, j, text);
                return kOk;
            };
        });
    }

    // gen ---------------------------------------------------------------
    std::string family_kind = "axis", g_text, point_text, u_text;
    std::size_t depth = 2, count = 8;
    {
        auto* sub = app.add_subcommand("gen", "generate module families to files");
        add_common(sub, true);
        sub->add_option("--family", family_kind,
                        "h|axis|syzygy|extension|restriction|cx1|avoiding")
            ->check(CLI::IsMember({"h", "axis", "syzygy", "extension", "restriction",
                                   "cx1", "avoiding"}));
        sub->add_option("--g", g_text, "linear form for the h family");
        sub->add_option("--point", point_text, "point to avoid (avoiding family)");
        sub->add_option("--u", u_text, "powers for the restriction chain, e.g. 2,3");
        sub->add_option("--depth", depth, "syzygy closure depth");
        sub->add_option("--count", count, "extension closure count");
        sub->add_option("--budget", c.budget, "family budget");
        sub->add_option("--out", c.out_path, "output directory")->required();
        sub->callback([&] {
            action = [&]() {
                Ring ring = parse_ring_spec(c.ring_spec);
                Cache cache = make_cache(c);
                std::vector<Module> mods;
                if (family_kind == "cx1") {
                    for (auto& cm : cx1_family(ring, FamilySpec{}, c.budget, c.seed,
                                               c.max_deg, c.trials, &cache))
                        mods.push_back(std::move(cm.module));
                } else if (family_kind == "avoiding") {
                    if (point_text.empty())
                        throw std::invalid_argument("gen --family avoiding needs --point");
                    mods = avoiding_family(ring, LinearForm::parse(ring, point_text),
                                           c.budget, c.seed, c.max_deg, c.trials, &cache);
                } else {
                    FamilySpec spec;
                    if (family_kind == "h") {
                        if (g_text.empty())
                            throw std::invalid_argument("gen --family h needs --g");
                        spec.kind = FamilySpec::Kind::HFamily;
                        spec.g = LinearForm::parse(ring, g_text);
                    } else if (family_kind == "axis") {
                        spec.kind = FamilySpec::Kind::AxisQuotients;
                    } else if (family_kind == "syzygy") {
                        spec.kind = FamilySpec::Kind::SyzygyClosure;
                        spec.depth = depth;
                    } else if (family_kind == "extension") {
                        spec.kind = FamilySpec::Kind::ExtensionClosure;
                        spec.count = count;
                    } else {
                        spec.kind = FamilySpec::Kind::RestrictionChain;
                        std::size_t pos = 0;
                        while (pos <= u_text.size()) {
                            std::size_t comma = u_text.find(',', pos);
                            spec.powers.push_back(static_cast<unsigned>(
                                std::stoul(u_text.substr(pos, comma - pos))));
                            if (comma == std::string::npos) break;
                            pos = comma + 1;
                        }
                    }
                    mods = family_from_spec(ring, spec, c.seed, &cache);
                    if (mods.size() > c.budget)
                        mods.erase(mods.begin() + static_cast<std::ptrdiff_t>(c.budget),
                                   mods.end());
                }
                std::filesystem::create_directories(c.out_path);
                json manifest;
                manifest["ring"] = ring.spec_string();
                manifest["family"] = family_kind;
                manifest["seed"] = c.seed;
                json files = json::array();
                for (std::size_t i = 0; i < mods.size(); ++i) {
                    char name[32];
                    std::snprintf(name, sizeof name, "m%03zu.json", i);
                    save_module(mods[i], std::filesystem::path(c.out_path) / name);
                    json f;
                    f["file"] = name;
                    f["hash"] = content_hash(mods[i]);
                    f["length"] = mods[i].length();
                    files.push_back(std::move(f));
                }
                manifest["modules"] = std::move(files);
                std::ofstream out(std::filesystem::path(c.out_path) / "manifest.json");
                out << manifest.dump(2) << "\n";
                emit(c, manifest,
                     "wrote " + std::to_string(mods.size()) + " modules to " + c.out_path +
                         "\n");
                return kOk;
            };
        });
    }

    // resolve / betti ---------------------------------------------------
    for (const char* name : {"resolve", "betti"}) {
        bool is_betti = std::string(name) == "betti";
        auto* sub = app.add_subcommand(name, is_betti ? "print Betti numbers"
                                                      : "print resolution data");
        add_common(sub);
        sub->add_option("--module", c.module_path, "module file")->required();
        sub->callback([&, is_betti] {
            action = [&, is_betti]() {
                Module m = load_module(c.module_path);
                Cache cache = make_cache(c);
                Resolution res = resolve(m, c.max_deg, &cache);
                std::vector<std::size_t> betti = res.betti_prefix(c.max_deg);
                std::string joined;
                for (std::size_t i = 0; i < betti.size(); ++i)
                    joined += (i ? "," : "") + std::to_string(betti[i]);
                json j;
                j["betti"] = betti;
                if (is_betti) {
                    emit(c, j, joined + "\n");
                    return kOk;
                }
                json dims = json::array();
                for (std::size_t i = 0; i <= c.max_deg + 1; ++i)
                    dims.push_back(res.syzygy_module(i).dim());
                j["syzygy_dims"] = dims;
                std::string text = "betti: " + joined + "\nsyzygy dims:";
                for (std::size_t i = 0; i <= c.max_deg + 1; ++i)
                    text += " " + std::to_string(res.syzygy_module(i).dim());
                emit(c, j, text + "\n");
                return kOk;
            };
        });
    }

    // syzygy / cosyzygy ---------------------------------------------------
    for (const char* name : {"syzygy", "cosyzygy"}) {
        bool co = std::string(name) == "cosyzygy";
        auto* sub = app.add_subcommand(name, co ? "compute the cosyzygy Omega^{-1}"
                                                : "compute the first syzygy Omega");
        add_common(sub);
        sub->add_option("--module", c.module_path, "module file")->required();
        sub->add_option("--out", c.out_path, "write the result as a module file");
        sub->callback([&, co] {
            action = [&, co]() {
                Module m = load_module(c.module_path);
                Cache cache = make_cache(c);
                Module r = co ? cosyzygy(m, &cache) : syzygy(m, &cache);
                if (!c.out_path.empty()) save_module(r, c.out_path);
                json j;
                j["dim"] = r.dim();
                j["hash"] = content_hash(r);
                emit(c, j, "dim " + std::to_string(r.dim()) + "\n");
                return kOk;
            };
        });
    }

    // tensor ---------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("tensor", "tensor product over A");
        add_common(sub);
        sub->add_option("--module", c.module_path, "first module file")->required();
        sub->add_option("--module2", c.module2_path, "second module file")->required();
        sub->add_option("--out", c.out_path, "write the result as a module file");
        sub->callback([&] {
            action = [&]() {
                Module m = load_module(c.module_path);
                Module n = load_module(c.module2_path);
                Module t = tensor(m, n);
                if (!c.out_path.empty()) save_module(t, c.out_path);
                json j;
                j["dim"] = t.dim();
                emit(c, j, "dim " + std::to_string(t.dim()) + "\n");
                return kOk;
            };
        });
    }

    // tor --------------------------------------------------------------
    std::size_t tor_i = 1;
    {
        auto* sub = app.add_subcommand("tor", "dimension of Tor_i(M, N)");
        add_common(sub);
        sub->add_option("--module", c.module_path, "first module file")->required();
        sub->add_option("--module2", c.module2_path, "second module file")->required();
        sub->add_option("--i", tor_i, "homological degree")->required();
        sub->callback([&] {
            action = [&]() {
                Module m = load_module(c.module_path);
                Module n = load_module(c.module2_path);
                Cache cache = make_cache(c);
                std::size_t max_deg = std::max(c.max_deg, tor_i);
                std::size_t d = tor(m, n, tor_i, max_deg, &cache).dim();
                json j;
                j["i"] = tor_i;
                j["dim"] = d;
                emit(c, j, "dim Tor_" + std::to_string(tor_i) + " = " + std::to_string(d) +
                               "\n");
                return kOk; // tor reports, it does not assert
            };
        });
    }

    // iso ---------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("iso", "three-valued isomorphism test");
        add_common(sub);
        sub->add_option("--module", c.module_path, "first module file")->required();
        sub->add_option("--module2", c.module2_path, "second module file")->required();
        sub->callback([&] {
            action = [&]() {
                Module m = load_module(c.module_path);
                Module n = load_module(c.module2_path);
                Cache cache = make_cache(c);
                IsoResult r = iso_test(m, n, c.trials, c.seed, &cache);
                std::string v = r.verdict == IsoResult::Verdict::Iso
                                    ? "iso"
                                    : (r.verdict == IsoResult::Verdict::NotIso ? "not-iso"
                                                                               : "unknown");
                json j;
                j["verdict"] = v;
                j["witness"] = r.witness;
                emit(c, j, v + " (" + r.witness + ")\n");
                if (r.verdict == IsoResult::Verdict::Iso) return kOk;
                if (r.verdict == IsoResult::Verdict::NotIso) return kNegative;
                return kUndetermined;
            };
        });
    }

    // support -------------------------------------------------------------
    {
        auto* sub = app.add_subcommand(
            "support", "support point membership (with --point) or location");
        add_common(sub);
        sub->add_option("--module", c.module_path, "module file")->required();
        sub->add_option("--point", point_text, "projective point, e.g. 0,1 or y");
        sub->callback([&] {
            action = [&]() {
                Module m = load_module(c.module_path);
                Cache cache = make_cache(c);
                if (!point_text.empty()) {
                    LinearForm alpha = LinearForm::parse(m.ring(), point_text);
                    bool in = rank_point_membership(m, alpha);
                    json j;
                    j["point"] = alpha.to_string();
                    j["member"] = in;
                    emit(c, j, std::string(in ? "member" : "not-member") + "\n");
                    return in ? kOk : kNegative;
                }
                LocateResult loc =
                    locate_periodic_support(m, c.max_deg, c.trials, c.seed, &cache);
                json j;
                if (loc.point) {
                    j["point"] = loc.point->to_string();
                    emit(c, j, "point " + loc.point->to_string() + "\n");
                    return kOk;
                }
                j["diagnostics"] = loc.diagnostics;
                emit(c, j, "undetermined: " + loc.diagnostics + "\n");
                return kUndetermined;
            };
        });
    }

    // disjoint ---------------------------------------------------------
    {
        auto* sub = app.add_subcommand("disjoint", "support disjointness via Tor vanishing");
        add_common(sub);
        sub->add_option("--module", c.module_path, "first module file")->required();
        sub->add_option("--module2", c.module2_path, "second module file")->required();
        sub->callback([&] {
            action = [&]() {
                Module m = load_module(c.module_path);
                Module n = load_module(c.module2_path);
                Cache cache = make_cache(c);
                DisjointVerdict v =
                    supports_disjoint(m, n, c.max_deg, c.trials, c.seed, &cache);
                json j;
                j["verdict"] = v.to_string();
                j["note"] = v.note;
                emit(c, j, v.to_string() + " (" + v.note + ")\n");
                if (v.kind == DisjointVerdict::Kind::Disjoint) return kOk;
                if (v.kind == DisjointVerdict::Kind::NotDisjoint) return kNegative;
                return kUndetermined;
            };
        });
    }

    // gclass / subgroup ----------------------------------------------------
    {
        auto* sub = app.add_subcommand("gclass", "stable Grothendieck class of a module");
        add_common(sub);
        sub->add_option("--module", c.module_path, "module file")->required();
        sub->callback([&] {
            action = [&]() {
                Module m = load_module(c.module_path);
                GClass g = gclass(m);
                json j;
                j["value"] = g.value;
                j["modulus"] = g.modulus;
                emit(c, j,
                     std::to_string(g.value) + " mod " + std::to_string(g.modulus) + "\n");
                return kOk;
            };
        });
    }
    std::vector<std::string> module_paths;
    {
        auto* sub = app.add_subcommand("subgroup",
                                       "subgroup of Z/l(A)Z generated by family lengths");
        add_common(sub, true);
        sub->add_option("--module", module_paths, "module files (repeatable)");
        sub->callback([&] {
            action = [&]() {
                Ring ring = parse_ring_spec(c.ring_spec);
                std::vector<Module> family;
                for (const auto& p : module_paths) family.push_back(load_module(p));
                SubgroupInfo s = subgroup_of_lengths(ring, family);
                json j;
                j["generator"] = s.generator;
                j["index"] = s.index;
                emit(c, j,
                     "generator " + std::to_string(s.generator) + ", index " +
                         std::to_string(s.index) + "\n");
                return kOk;
            };
        });
    }

    // verify --------------------------------------------------------------
    std::string suite_name, p_text;
    bool verify_parsed = false;
    {
        auto* sub = app.add_subcommand("verify", "run a named verification suite");
        sub->add_option("suite", suite_name,
                        "lemma-h | disjoint | length-identity | filtration | divisibility | gap")
            ->required();
        add_common(sub, true);
        sub->add_option("--g", g_text,
                        "linear form (lemma-h, length-identity, filtration, gap)");
        sub->add_option("--p", p_text, "prime (divisibility)");
        sub->add_option("--budget", c.budget, "family budget");
        sub->add_option("--sample", c.sample, "sample count");
        sub->callback([&] {
            verify_parsed = true;
            action = [&]() {
                Ring ring = parse_ring_spec(c.ring_spec);
                Cache cache = make_cache(c);
                SuiteOptions opt;
                opt.max_deg = c.max_deg;
                opt.trials = c.trials;
                opt.budget = c.budget;
                opt.sample = c.sample;
                opt.seed = c.seed;
                opt.cache = &cache;
                std::optional<LinearForm> g;
                if (!g_text.empty()) g = LinearForm::parse(ring, g_text);
                std::uint64_t p = p_text.empty() ? 0 : std::stoull(p_text);
                SuiteReport rep = run_suite(suite_name, ring, g, p, opt);
                if (c.format == "text")
                    std::cout << report_to_text(rep);
                else
                    std::cout << report_to_json(rep);
                std::fprintf(stderr, "runtime: %.3f s\n", rep.runtime_seconds);
                if (rep.pass) return kOk;
                // a hard failure outranks an undetermined sub-verdict
                for (const auto& chk : rep.checks)
                    if (chk.verdict == "fail") return kNegative;
                return kUndetermined;
            };
        });
    }

    // cache gc ----------------------------------------------------------
    {
        auto* sub = app.add_subcommand("cache", "cache maintenance");
        auto* gc = sub->add_subcommand("gc", "drop invalid cache entries");
        gc->add_option("--cache-dir", c.cache_dir, "resolution cache directory");
        gc->add_option("--format", c.format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
        gc->callback([&] {
            action = [&]() {
                Cache cache((std::filesystem::path(c.cache_dir)));
                std::size_t removed = cache.gc();
                json j;
                j["removed"] = removed;
                emit(c, j, "removed " + std::to_string(removed) + " invalid entries\n");
                return kOk;
            };
        });
        sub->require_subcommand(1);
    }

    // verify defaults to JSON output (the report is the product)
    bool format_given = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]).rfind("--format", 0) == 0) format_given = true;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    if (verify_parsed && !format_given) c.format = "json";

    try {
        return action ? action() : kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kUsage;
    }
}
