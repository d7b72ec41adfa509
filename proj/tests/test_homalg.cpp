#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "cihomol/cache.hpp"
#include "cihomol/construct.hpp"
#include "cihomol/homalg.hpp"
#include "cihomol/prng.hpp"
#include "test_support_oracles.hpp"

using namespace cihomol;

namespace {

const Ring r22(Fp(5), {2, 2});
const Ring r24(Fp(5), {2, 4});
const Ring r34(Fp(5), {3, 4});

Module h_of(const Ring& r, std::size_t var, unsigned j) {
    return quotient_by_form_power(r, LinearForm::variable(r, var), j);
}

} // namespace

TEST_CASE("minimal cover shapes") {
    // free module: cover is an isomorphism, kernel zero
    Module a = regular_module(r22);
    CoverData cd = minimal_cover_data(a);
    CHECK(cd.cover.src().dim() == 4);
    CHECK(cd.kernel.dim() == 0);
    CHECK(rank(cd.cover.mat()) == a.dim());

    // k: cover A -> k with kernel m of dimension l(A) - 1
    CoverData ck = minimal_cover_data(residue_field(r22));
    CHECK(ck.cover.src().dim() == 4);
    CHECK(ck.kernel.dim() == 3);

    // H_1 over (2,4): kernel dimension 8 - 2 = 6 = l(H_3)
    CoverData ch = minimal_cover_data(h_of(r24, 1, 1));
    CHECK(ch.kernel.dim() == 6);

    // covers are A-linear and minimal: kernel sits inside m F
    for (const Module& m : {residue_field(r22), h_of(r24, 1, 2), direct_sum(h_of(r24, 1, 1), residue_field(r24))}) {
        CoverData c = minimal_cover_data(m);
        c.cover.validate();
        c.kernel_inclusion.validate();
        CHECK(rank(c.cover.mat()) == m.dim()); // surjective
        RowSpace rad = radical_subspace(c.cover.src());
        for (std::size_t i = 0; i < c.kernel.dim(); ++i)
            CHECK(rad.contains(c.kernel_inclusion.mat().col(i)));
    }
}

TEST_CASE("syzygies") {
    CHECK(syzygy(regular_module(r22)).dim() == 0);
    Module ok = syzygy(residue_field(r22));
    CHECK(ok.dim() == 3); // l(A) - 1
    CHECK(min_generators(ok) == 2);
    // Omega(H_i) ~= H_{r-i} over (2,4), g = y
    for (unsigned i = 1; i <= 3; ++i) {
        Module om = syzygy(h_of(r24, 1, i));
        CHECK(iso_test(om, h_of(r24, 1, 4 - i), 16, 0).verdict == IsoResult::Verdict::Iso);
    }
}

TEST_CASE("resolution of the regular module and Betti prefixes") {
    Resolution res = resolve(regular_module(r22), 4);
    CHECK(res.betti() == std::vector<std::size_t>{1, 0, 0, 0, 0});
    // degenerate degree 0: beta_0 only
    Resolution res0 = resolve(residue_field(r22), 0);
    CHECK(res0.betti() == std::vector<std::size_t>{1});
    CHECK(res0.syzygy_module(1).dim() == 3);
}

TEST_CASE("hom_space and tor reject mixed rings") {
    CHECK_THROWS_AS(hom_space(residue_field(r22), residue_field(r24)),
                    std::invalid_argument);
    CHECK_THROWS_AS(tor(residue_field(r22), residue_field(r24), 1, 2),
                    std::invalid_argument);
}

TEST_CASE("Betti numbers of k over (2,2) against the brute-force resolver") {
    Module k = residue_field(r22);
    // oracle first: the standalone mini resolver
    std::vector<std::size_t> expect = oracle::mini_betti(k, 8);
    CHECK(expect == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    Resolution res = resolve(k, 8);
    CHECK(res.betti() == expect);
}

TEST_CASE("Betti numbers of H_s over (2,4) are all 1") {
    for (unsigned s = 1; s <= 3; ++s) {
        Resolution res = resolve(h_of(r24, 1, s), 8);
        for (std::size_t l = 0; l <= 8; ++l) CHECK(res.betti()[l] == 1);
        CHECK(oracle::mini_betti(h_of(r24, 1, s), 4) ==
              std::vector<std::size_t>{1, 1, 1, 1, 1});
    }
}

TEST_CASE("cosyzygy") {
    CHECK(cosyzygy(Module::zero(r22)).dim() == 0);
    Module k = residue_field(r22);
    CHECK(iso_test(cosyzygy(syzygy(k)), k, 16, 0).verdict == IsoResult::Verdict::Iso);
    for (unsigned i = 1; i <= 3; ++i)
        CHECK(iso_test(cosyzygy(h_of(r24, 1, i)), h_of(r24, 1, 4 - i), 16, 0).verdict ==
              IsoResult::Verdict::Iso);
}

TEST_CASE("tensor products") {
    Module a = regular_module(r24);
    Module h2 = h_of(r24, 1, 2);
    Module t = tensor(a, h2);
    CHECK(t.length() == h2.length()); // A ox N ~= N
    CHECK(iso_test(t, h2, 16, 0).verdict == IsoResult::Verdict::Iso);
    Module k = residue_field(r22);
    CHECK(iso_test(tensor(k, k), k, 8, 0).verdict == IsoResult::Verdict::Iso);
    // A/(x) ox A/(y) over (3,4) is one-dimensional
    CHECK(tensor(h_of(r34, 0, 1), h_of(r34, 1, 1)).length() == 1);
    CHECK_THROWS_AS(tensor(regular_module(r22), regular_module(r24)), std::invalid_argument);
}

TEST_CASE("tensor of axis power quotients has the ideal-theoretic dimension") {
    // A/(x^i) ox A/(x^j) = A/(x^min(i,j)) over (3,4)
    LinearForm x = LinearForm::variable(r34, 0);
    for (unsigned i = 1; i <= 2; ++i)
        for (unsigned j = 1; j <= 2; ++j) {
            Module t = tensor(quotient_by_form_power(r34, x, i),
                              quotient_by_form_power(r34, x, j));
            Module expect = quotient_by_form_power(r34, x, std::min(i, j));
            CHECK(t.length() == expect.length());
            CHECK(iso_test(t, expect, 16, 0).verdict == IsoResult::Verdict::Iso);
        }
}

TEST_CASE("tor") {
    Module a = regular_module(r24);
    Module h2 = h_of(r24, 1, 2);
    for (std::size_t i = 1; i <= 3; ++i) CHECK(tor(a, h2, i, 4).dim() == 0);
    Module k22 = residue_field(r22);
    CHECK(tor(k22, k22, 1, 2).dim() == 2); // beta_1(k) = 2
    // Tor_0 ~= tensor
    CHECK(tor(k22, k22, 0, 1).dim() == tensor(k22, k22).dim());
    CHECK(tor(h_of(r34, 0, 1), h_of(r34, 1, 1), 1, 3).dim() == 0);
    CHECK(tor(h_of(r34, 0, 1), h_of(r34, 1, 1), 2, 3).dim() == 0);
    CHECK_THROWS_AS(tor(k22, k22, 3, 2), std::invalid_argument);
}

TEST_CASE("tor dimension symmetry on sampled pairs") {
    std::vector<Module> mods{residue_field(r24), h_of(r24, 0, 1), h_of(r24, 1, 2),
                             direct_sum(h_of(r24, 1, 1), h_of(r24, 1, 3))};
    for (const Module& m : mods)
        for (const Module& n : mods)
            for (std::size_t i = 1; i <= 3; ++i)
                CHECK(tor(m, n, i, 3).dim() == tor(n, m, i, 3).dim());
}

TEST_CASE("beta_i(m) equals dim Tor_i(m, k)") {
    Module k = residue_field(r24);
    for (const Module& m : {h_of(r24, 1, 2), direct_sum(h_of(r24, 0, 1), residue_field(r24))}) {
        Resolution res = resolve(m, 4);
        for (std::size_t i = 0; i <= 4; ++i) CHECK(res.betti()[i] == tor(m, k, i, 4).dim());
    }
}

TEST_CASE("extension: split case and length additivity") {
    Module h1 = h_of(r24, 1, 1);
    Module h2 = h_of(r24, 1, 2);
    Module k = syzygy(h1);
    ModuleMap zero = ModuleMap::zero(k, h2);
    ExtensionData ed = extension_data(h1, zero);
    CHECK(ed.module.length() == h1.length() + h2.length());
    CHECK(iso_test(ed.module, direct_sum(h1, h2), 16, 0).verdict == IsoResult::Verdict::Iso);
    CHECK(is_exact(short_exact_chain(ed.sub_inclusion, ed.quotient_onto)));

    // nonzero class: Omega(k) -> k over (2,2) gives a dim-2 middle
    Module k22 = residue_field(r22);
    Module ok = syzygy(k22);
    auto homs = hom_space(ok, k22);
    REQUIRE(!homs.empty());
    ExtensionData enz = extension_data(k22, homs.front());
    CHECK(enz.module.length() == 2);
    std::size_t mu = min_generators(enz.module);
    CHECK((mu == 1 || mu == 2));
    CHECK(is_exact(short_exact_chain(enz.sub_inclusion, enz.quotient_onto)));
    enz.sub_inclusion.validate();
    enz.quotient_onto.validate();

    Module wrong = residue_field(r24);
    CHECK_THROWS_AS(extension_data(h1, ModuleMap::zero(wrong, h2)), std::invalid_argument);
}

TEST_CASE("is_exact") {
    Module m = h_of(r24, 1, 2);
    CHECK(is_exact(short_exact_chain(ModuleMap::zero(Module::zero(r24), m),
                                     ModuleMap::identity(m))));
    // 0 -> H_{r-i} -> A -> H_i -> 0 realized through the ideal (y^i)A
    Module a = regular_module(r24);
    Mat img = form_action(a, LinearForm::variable(r24, 1)).pow(2); // (y^2) A
    SubmoduleData sub = submodule(a, RowSpace::from_rows(img.transpose()));
    QuotientData quo = quotient(a, RowSpace::from_rows(img.transpose()));
    CHECK(sub.module.dim() == 4);
    CHECK(quo.module.dim() == 4);
    CHECK(is_exact(short_exact_chain(sub.inclusion, quo.projection)));
    CHECK(iso_test(sub.module, h_of(r24, 1, 2), 16, 0).verdict == IsoResult::Verdict::Iso);
    // alternating length sum vanishes on exact sequences
    CHECK(a.length() == sub.module.length() + quo.module.length());
    // 0 -> k -> k -> 0 with the zero map is not exact
    Module k = residue_field(r24);
    CHECK(!is_exact(short_exact_chain(ModuleMap::zero(Module::zero(r24), k),
                                      ModuleMap::zero(k, k))));
    CHECK_THROWS_AS(is_exact({ModuleMap::identity(k), ModuleMap::identity(a)}),
                    std::invalid_argument);
}

TEST_CASE("stable_reduce") {
    Module a = regular_module(r24);
    CHECK(stable_reduce(a).dim() == 0);
    Module k = residue_field(r22);
    Module mixed = direct_sum(k, regular_module(r22));
    CHECK(iso_test(stable_reduce(mixed), k, 16, 0).verdict == IsoResult::Verdict::Iso);
    for (unsigned i = 1; i <= 3; ++i) {
        Module h = h_of(r24, 1, i);
        CHECK(iso_test(stable_reduce(h), h, 16, 0).verdict == IsoResult::Verdict::Iso);
    }
    // idempotence up to isomorphism
    Module once = stable_reduce(mixed);
    Module twice = stable_reduce(once);
    CHECK(iso_test(twice, once, 16, 0).verdict == IsoResult::Verdict::Iso);
}

TEST_CASE("classify_complexity") {
    CHECK(classify_complexity(free_module(r24, 2), 4, 8, 0).kind ==
          ComplexityVerdict::Kind::Free);
    for (unsigned i = 1; i <= 3; ++i) {
        ComplexityVerdict v = classify_complexity(h_of(r24, 1, i), 6, 16, 0);
        CHECK(v.kind == ComplexityVerdict::Kind::PeriodicFrom);
        CHECK(v.start == 0);
        if (i == 2) CHECK(v.period == 1); // H_2 = H_{4-2}
    }
    ComplexityVerdict vk = classify_complexity(residue_field(r22), 8, 8, 0);
    CHECK(vk.kind == ComplexityVerdict::Kind::UnboundedEvidence);
    CHECK(vk.betti_prefix == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK_THROWS_AS(classify_complexity(residue_field(r22), 1, 8, 0), std::invalid_argument);
}

TEST_CASE("periodic Tor shift") {
    Module h1 = h_of(r24, 1, 1); // Omega^2(H_1) ~= H_1
    Module x = direct_sum(residue_field(r24), h_of(r24, 0, 1));
    for (std::size_t i = 1; i + 2 <= 5; ++i)
        CHECK(tor(h1, x, i, 6).dim() == tor(h1, x, i + 2, 6).dim());
}

TEST_CASE("length identity for self-syzygy H") {
    // over (2,2) with g = y: H = A/(y), Omega(H) ~= H, mu(H) = 1
    Module h = h_of(r22, 1, 1);
    REQUIRE(iso_test(syzygy(h), h, 16, 0).verdict == IsoResult::Verdict::Iso);
    std::size_t r = min_generators(h);
    std::vector<Module> xs{residue_field(r22), regular_module(r22), h, h_of(r22, 0, 1),
                           direct_sum(h, h)};
    for (const Module& x : xs) {
        std::size_t lhs = tor(x, h, 1, 2).dim() + r * x.length();
        CHECK(lhs == 2 * tensor(h, x).length());
    }
}

TEST_CASE("resolution cache: hits, extension, corruption as miss") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "cihomol-test-cache";
    fs::remove_all(dir);
    Cache cache(dir);
    Module k = residue_field(r22);

    Resolution fresh = resolve(k, 4);
    Resolution cached = resolve(k, 4, &cache);
    CHECK(fresh.betti() == cached.betti());
    // a second cache instance reads from disk
    Cache cache2(dir);
    Resolution reread = resolve(k, 4, &cache2);
    CHECK(reread.betti() == fresh.betti());
    for (std::size_t i = 0; i <= 5; ++i) {
        CHECK(resolve(k, 6, &cache2).syzygy_module(i).actions() ==
              resolve(k, 6).syzygy_module(i).actions()); // extension matches fresh
    }

    // corrupt every cache file; loads must degrade to misses with identical results
    for (const auto& e : fs::directory_iterator(dir)) {
        std::ofstream out(e.path(), std::ios::app);
        out << "garbage";
    }
    Cache cache3(dir);
    CHECK(resolve(k, 4, &cache3).betti() == fresh.betti());
    Cache gc_cache(dir);
    fs::path bogus = dir / "not-a-cache-entry.json";
    std::ofstream(bogus) << "{}";
    CHECK(gc_cache.gc() >= 1);
    CHECK(!fs::exists(bogus));
    fs::remove_all(dir);
}
