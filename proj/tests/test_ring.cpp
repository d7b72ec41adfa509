#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cihomol/homalg.hpp"
#include "cihomol/module.hpp"
#include "cihomol/ring.hpp"
#include "cihomol/serialize.hpp"

using namespace cihomol;

TEST_CASE("ring basis bookkeeping") {
    Ring r(Fp(5), {2, 4});
    CHECK(r.codim() == 2);
    CHECK(r.length() == 8);
    CHECK(r.basis_index({0, 0}) == 0);
    CHECK(r.basis_index({0, 3}) == 3);
    CHECK(r.basis_index({1, 0}) == 4);
    CHECK(r.exponent_of(5) == std::vector<unsigned>{1, 1});
    CHECK(r.shift_index(r.basis_index({1, 3}), 0) == Ring::npos);
    CHECK(r.shift_index(r.basis_index({0, 3}), 1) == Ring::npos);
    CHECK(r.shift_index(0, 1) == 1);
    auto [var, prev] = r.predecessor(r.basis_index({1, 2}));
    CHECK(var == 0);
    CHECK(prev == r.basis_index({0, 2}));
    CHECK_THROWS_AS(Ring(Fp(5), {1, 2}), std::invalid_argument);
    CHECK(r.spec_string() == "p=5;exps=2,4");
}

TEST_CASE("regular module dimensions") {
    CHECK(regular_module(Ring(Fp(5), {2, 2})).dim() == 4);
    Module a = regular_module(Ring(Fp(5), {2, 4}));
    CHECK(a.dim() == 8);
    a.validate(); // commuting and nilpotent
    // x * (x y^3) = 0: exponent overflow kills the monomial
    Ring r(Fp(5), {2, 4});
    std::vector<std::uint64_t> v(8, 0);
    v[r.basis_index({1, 3})] = 1;
    auto img = a.action(0).apply(v);
    for (auto y : img) CHECK(y == 0);
}

TEST_CASE("l(A) = r * l(B/g) bookkeeping for g = x over F_5[x,y]/(x^3,y^4)") {
    Ring r(Fp(5), {3, 4});
    CHECK(regular_module(r).dim() == 12);
    Module h1 = quotient_by_form_power(r, LinearForm::variable(r, 0), 1);
    CHECK(h1.dim() == 4);
    CHECK(12 == 3 * h1.dim());
}

TEST_CASE("power subring embedding over F_7[x,y]/(x^6,y^9)") {
    Ring r(Fp(7), {6, 9});
    Embedding emb = power_subring_embedding(r, {2, 3});
    CHECK(emb.sub.exps() == std::vector<unsigned>{3, 3});
    CHECK(emb.rank() == 6);
    CHECK(emb.sub.length() == 9);
    CHECK(r.length() == emb.rank() * emb.sub.length());
    // A restricted along the embedding is free over R of rank 6
    Module restricted = restrict_scalars(regular_module(r), emb);
    restricted.validate();
    CHECK(restricted.length() == 54);
    auto free_rank = is_free(restricted);
    REQUIRE(free_rank.has_value());
    CHECK(*free_rank == 6);
}

TEST_CASE("identity embedding and invalid embeddings") {
    Ring r(Fp(5), {2, 4});
    Embedding id = power_subring_embedding(r, {1, 1});
    CHECK(id.sub == r);
    CHECK(id.rank() == 1);
    // exponent 2/2 = 1 < 2 is not a legal ring
    CHECK_THROWS_AS(power_subring_embedding(r, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(power_subring_embedding(r, {3, 2}), std::invalid_argument);
}

TEST_CASE("projective point enumeration") {
    CHECK(enumerate_points(Ring(Fp(5), {2, 2})).size() == 6);   // (25-1)/4
    CHECK(enumerate_points(Ring(Fp(5), {3})).size() == 1);
    CHECK(enumerate_points(Ring(Fp(2), {2, 2, 2})).size() == 7); // Fano
    // no duplicates, all normalized
    auto pts = enumerate_points(Ring(Fp(3), {2, 2})); // 4 points
    CHECK(pts.size() == 4);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) CHECK(!(pts[i] == pts[j]));
}

TEST_CASE("linear form parsing and normalization") {
    Ring r(Fp(5), {2, 4});
    CHECK(LinearForm::parse(r, "y") == LinearForm::variable(r, 1));
    CHECK(LinearForm::parse(r, "x2") == LinearForm::variable(r, 1));
    CHECK(LinearForm::parse(r, "0,1") == LinearForm::variable(r, 1));
    // normalization: (2, 4) ~ (1, 2)
    LinearForm f(Fp(5), {2, 4});
    CHECK(f.coeffs() == std::vector<std::uint64_t>{1, 2});
    CHECK(f.axis() == static_cast<std::size_t>(-1));
    CHECK(LinearForm::variable(r, 1).axis() == 1);
    CHECK_THROWS_AS(LinearForm(Fp(5), {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(LinearForm::parse(r, "q"), std::invalid_argument);
}

TEST_CASE("ring spec parsing errors carry positions") {
    CHECK(parse_ring_spec("p=5;exps=2,4").spec_string() == "p=5;exps=2,4");
    CHECK_THROWS_WITH_AS(parse_ring_spec("q=5;exps=2"), doctest::Contains("position 0"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_ring_spec("p=x;exps=2"), doctest::Contains("position 2"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_ring_spec("p=5;exps=2,1"), doctest::Contains("position 11"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_ring_spec("p=4;exps=2,2"), std::invalid_argument);
}
