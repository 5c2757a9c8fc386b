#include <doctest.h>

#include <schur/modules.hpp>
#include <schur/oracle.hpp>

using namespace schur;

TEST_CASE("truncated polynomial algebras") {
    TruncatedPolyAlgebra t{2, 3};
    CHECK(t.dimension() == 9);
    CHECK(TruncatedPolyAlgebra{0, 2}.dimension() == 1);
    CHECK(TruncatedPolyAlgebra{3, 2}.dimension() == 8);
    // trivial algebras compare equal whatever the cap
    CHECK(TruncatedPolyAlgebra{0, 2} == TruncatedPolyAlgebra{0, 7});
    CHECK(TruncatedPolyAlgebra{1, 2} != TruncatedPolyAlgebra{1, 3});
}

TEST_CASE("steinberg tilting descriptor") {
    auto d = steinberg_tilting(2, 3, DominantWeight({1, 0}));
    CHECK(d.socle_weight == DominantWeight({2, 1}));
    REQUIRE(d.character.has_value());
    CHECK(d.character->dimension() == 6);
    CHECK(d.character->multiplicity(Weight({2, 1})) == 2);
    CHECK(d.end_algebra.dim == 2);
    REQUIRE(d.end_algebra.truncated.has_value());
    CHECK(*d.end_algebra.truncated == TruncatedPolyAlgebra{1, 2});
    CHECK(d.index.value == 1);
    CHECK(d.index.exact);

    // lam = 0 gives the Steinberg module itself
    auto st = steinberg_tilting(2, 3, DominantWeight({0, 0}));
    CHECK(st.socle_weight == DominantWeight({2, 0}));
    CHECK(*st.character == weyl_character(Weight({2, 0})));
    CHECK(st.end_algebra.dim == 1);
    CHECK(st.index.value == 0);
    CHECK(st.index.exact);

    // character can be suppressed
    CHECK_FALSE(steinberg_tilting(2, 3, DominantWeight({1, 0}), false).character.has_value());

    CHECK_THROWS_AS(steinberg_tilting(2, 3, DominantWeight({3, 0})), PreconditionError);
    CHECK_THROWS_AS(steinberg_tilting(2, 4, DominantWeight({1, 0})), PreconditionError);
    CHECK_THROWS_AS(steinberg_tilting(2, 3, DominantWeight({0, -1})), PreconditionError);
    CHECK_THROWS_AS(steinberg_tilting(3, 3, DominantWeight({1, 0})), PreconditionError);
}

TEST_CASE("steinberg tilting endomorphism dimensions across a sweep") {
    for (long pl : {2l, 3l, 5l}) {
        Int p(pl);
        for (std::size_t n = 2; n <= 3; ++n) {
            for (const auto& lam : box_partitions(n, static_cast<unsigned long>(pl - 1))) {
                auto d = steinberg_tilting(n, p, lam, false);
                CHECK(d.end_algebra.dim == Int(weyl_orbit(lam).size()));
                CHECK(d.socle_weight.weight() == (p - 1) * delta(n) + w0_apply(lam));
            }
        }
    }
    // orbit of a two-step partition in rank 3
    CHECK(steinberg_tilting(3, 5, DominantWeight({2, 1, 0}), false).end_algebra.dim == 6);
}

TEST_CASE("tilting character matches the expansion of chi((p-1)delta) s(lam)") {
    for (long pl : {2l, 3l}) {
        Int p(pl);
        for (std::size_t n = 2; n <= 3; ++n) {
            DominantWeight st((p - 1) * delta(n));
            for (const auto& lam : box_partitions(n, static_cast<unsigned long>(pl - 1))) {
                auto d = steinberg_tilting(n, p, lam);
                Character expected = weyl_character(st) * orbit_sum(lam);
                CHECK(*d.character == expected);

                // and the same thing as a plain sum of shifted Weyl characters
                Character as_sum(n);
                for (const Weight& mu : weyl_orbit(lam))
                    as_sum = as_sum + weyl_character(st.weight() + mu);
                CHECK(*d.character == as_sum);
            }
        }
    }
}

TEST_CASE("hook injective endomorphism algebra") {
    auto h = hook_injective_end(2, 3, 1);
    CHECK(h == TruncatedPolyAlgebra{1, 2});
    CHECK(h.dimension() == 2);
    CHECK(hook_injective_end(4, 5, 3).dimension() == 4);
    CHECK(hook_injective_end(3, 7, 6).cap == 3);

    // dimension equals the orbit size of a*eps_1
    for (std::size_t n = 2; n <= 4; ++n)
        for (unsigned long a = 1; a <= 4; ++a)
            CHECK(hook_injective_end(n, 5, a).dimension() ==
                  Int(weyl_orbit(Int(a) * epsilon(n, 1)).size()));

    CHECK_THROWS_AS(hook_injective_end(1, 3, 1), PreconditionError);
    CHECK_THROWS_AS(hook_injective_end(2, 3, 0), PreconditionError);
    CHECK_THROWS_AS(hook_injective_end(2, 3, 3), PreconditionError);
    CHECK_THROWS_AS(hook_injective_end(2, 4, 1), PreconditionError);
}

TEST_CASE("pm hook injective") {
    // m = 1 collapses to the tilting description of a single hook
    for (long a = 0; a <= 2; ++a) {
        auto hook = pm_hook_injective(2, 3, 1, a);
        auto tilt = steinberg_tilting(2, 3, DominantWeight({a, 0}));
        CHECK(hook.socle_weight.weight() == Int(2) * delta(2) + Int(a) * epsilon(2, 2));
        CHECK(*hook.character == *tilt.character);
        CHECK(hook.end_algebra.dim == tilt.end_algebra.dim);
        CHECK(hook.index.value == tilt.index.value);
        CHECK(hook.index.exact);
    }

    // two nonzero digits: a = 4 = 1 + 1*3
    auto d = pm_hook_injective(2, 3, 2, 4);
    CHECK(d.socle_weight == DominantWeight({8, 4}));
    REQUIRE(d.end_algebra.truncated.has_value());
    CHECK(*d.end_algebra.truncated == TruncatedPolyAlgebra{2, 2});
    CHECK(d.end_algebra.dim == 4);
    CHECK(d.index.value == 2);
    CHECK(d.index.exact);
    REQUIRE(d.character.has_value());
    CHECK(d.character->dimension() == 36);
    CHECK(d.character->multiplicity(Weight({8, 4})) == 4);
    CHECK(degree(d.socle_weight) == 12);

    // zero digit in the middle: a = 9 over p = 3, m = 3
    auto z = pm_hook_injective(3, 3, 3, 9);
    CHECK(z.end_algebra.dim == 3);
    CHECK(z.end_algebra.truncated->generators == 1);
    CHECK(z.end_algebra.truncated->cap == 3);
    CHECK(z.index.value == 1);

    // a = 0 gives the m-th Steinberg: trivial End, twisted character product
    auto st2 = pm_hook_injective(2, 3, 2, 0);
    CHECK(st2.end_algebra.dim == 1);
    CHECK(st2.index.value == 0);
    CHECK(st2.character->dimension() == 9);
    CHECK(*st2.character ==
          weyl_character(Weight({2, 0})) * frobenius_twist(weyl_character(Weight({2, 0})), 3));

    CHECK_THROWS_AS(pm_hook_injective(2, 3, 2, 9), PreconditionError);
    CHECK_THROWS_AS(pm_hook_injective(2, 3, 0, 0), PreconditionError);
    CHECK_THROWS_AS(pm_hook_injective(2, 6, 1, 1), PreconditionError);
}

TEST_CASE("determinant shift") {
    auto d = steinberg_tilting(2, 3, DominantWeight({1, 0}));
    auto s = determinant_shift(d, 2);
    CHECK(s.socle_weight == DominantWeight({4, 3}));
    CHECK(s.end_algebra.dim == d.end_algebra.dim);
    CHECK(s.index.value == d.index.value);
    CHECK(s.character->dimension() == d.character->dimension());
    CHECK(s.character->multiplicity(Weight({4, 3})) == d.character->multiplicity(Weight({2, 1})));
    CHECK(*s.character == *d.character * exponential(Weight({2, 2})));

    auto id = determinant_shift(d, 0);
    CHECK(id.socle_weight == d.socle_weight);
    CHECK(*id.character == *d.character);
}

TEST_CASE("tensor factorization") {
    auto f = steinberg_tilting(2, 3, DominantWeight({1, 0}));

    // the degree-12 construction: two hook factors, trivial top
    auto big = tensor_factorization({f, f}, 3, 1, DominantWeight({0, 0}));
    CHECK(big.socle_weight == DominantWeight({8, 4}));
    CHECK(big.end_algebra.dim == 4);
    CHECK(*big.end_algebra.truncated == TruncatedPolyAlgebra{2, 2});
    CHECK(big.index.value == 2);
    CHECK(big.index.exact);
    REQUIRE(big.character.has_value());
    CHECK(big.character->dimension() == 36);
    CHECK(*big.character == *pm_hook_injective(2, 3, 2, 4).character);

    // socle digits recover the factors
    auto dec = p_adic_decompose(big.socle_weight, 3);
    REQUIRE(dec.digits.size() == 2);
    CHECK(dec.digits[0] == f.socle_weight);
    CHECK(dec.digits[1] == f.socle_weight);

    // every support weight sits in the same degree as the socle
    for (const auto& [w, mult] : big.character->terms())
        CHECK(degree(w) == degree(big.socle_weight));

    // single factor with trivial gamma is the identity
    auto one = tensor_factorization({f}, 3, 1, DominantWeight({0, 0}));
    CHECK(one.socle_weight == f.socle_weight);
    CHECK(one.end_algebra.dim == f.end_algebra.dim);
    CHECK(*one.character == *f.character);

    // nontrivial gamma raises the top layer
    auto g = tensor_factorization({f}, 3, 1, DominantWeight({1, 0}));
    CHECK(g.socle_weight.weight() == f.socle_weight.weight() + Int(3) * Weight({1, 0}));
    CHECK(g.end_algebra.dim == f.end_algebra.dim);
    CHECK(*g.character == *f.character * frobenius_twist(weyl_character(Weight({1, 0})), 3));

    // missing characters propagate
    auto nochar = tensor_factorization({steinberg_tilting(2, 3, DominantWeight({1, 0}), false)},
                                       3, 1, DominantWeight({0, 0}));
    CHECK_FALSE(nochar.character.has_value());

    CHECK_THROWS_AS(tensor_factorization({}, 3, 1, DominantWeight({0, 0})), PreconditionError);
    // socle (3,0) is not column 3-regular
    InjectiveDescriptor bad{DominantWeight({3, 0}), std::nullopt, {}, {}};
    CHECK_THROWS_AS(tensor_factorization({bad}, 3, 1, DominantWeight({0, 0})), PreconditionError);
    CHECK_THROWS_AS(tensor_factorization({f}, 3, 1, DominantWeight({0, -1})), PreconditionError);
}

TEST_CASE("multiplicity products") {
    CHECK(multiplicity_product({SymbolicValue{Int(2), {}}, SymbolicValue{Int(2), {}}}).to_string() ==
          "4");
    CHECK(multiplicity_product({}).is_integer());
    auto v = multiplicity_product({SymbolicValue{Int(6), {}}, SymbolicValue{Int(1), {"t"}}});
    CHECK_FALSE(v.is_integer());
    CHECK(v.to_string() == "6*t");
    CHECK(v.coefficient == 6);
}
