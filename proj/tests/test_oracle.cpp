#include <doctest.h>

#include <schur/oracle.hpp>

using namespace schur;

TEST_CASE("alternant evaluation at hand-checked points") {
    // s_(1,0)(2,3) = 2 + 3
    CHECK(alternant_eval(DominantWeight({1, 0}), {Rat(2), Rat(3)}) == Rat(5));
    // s_(1,1)(2,3) = 2 * 3
    CHECK(alternant_eval(DominantWeight({1, 1}), {Rat(2), Rat(3)}) == Rat(6));
    // s_(2,0)(2,3) = 4 + 6 + 9
    CHECK(alternant_eval(DominantWeight({2, 0}), {Rat(2), Rat(3)}) == Rat(19));
    // s_(2,1)(2,3) = (2^2)(3) + (2)(3^2)
    CHECK(alternant_eval(DominantWeight({2, 1}), {Rat(2), Rat(3)}) == Rat(30));
    // empty shape
    CHECK(alternant_eval(DominantWeight({0, 0, 0}), {Rat(2), Rat(3), Rat(5)}) == Rat(1));
    // rational point
    CHECK(alternant_eval(DominantWeight({1, 0}), {Rat(1, 2), Rat(1, 3)}) == Rat(5, 6));

    CHECK_THROWS_AS(alternant_eval(DominantWeight({1, 0}), {Rat(2), Rat(2)}), PreconditionError);
    CHECK_THROWS_AS(alternant_eval(DominantWeight({1, 0}), {Rat(0), Rat(2)}), PreconditionError);
    CHECK_THROWS_AS(alternant_eval(DominantWeight({1, 0}), {Rat(2)}), PreconditionError);
    CHECK_THROWS_AS(alternant_eval(DominantWeight({0, -1}), {Rat(2), Rat(3)}), PreconditionError);
}

TEST_CASE("dimension product formula") {
    CHECK(dimension_via_product(DominantWeight({0, 0})) == 1);
    CHECK(dimension_via_product(DominantWeight({1, 1, 1})) == 1);
    for (long p : {2l, 3l, 5l, 7l})
        CHECK(dimension_via_product(DominantWeight({p, 0})) == p + 1);
    CHECK(dimension_via_product(DominantWeight({2, 1, 0})) == 8);
    CHECK(dimension_via_product(DominantWeight({2, 2, 0})) == 6);
    // (p-1)delta has dimension p^(n choose 2)
    CHECK(dimension_via_product(DominantWeight({4, 2, 0})) == 27);
    CHECK(dimension_via_product(DominantWeight({3, 2, 1, 0})) == 64);
}

TEST_CASE("tableaux agree with the alternant") {
    for (const auto& lam :
         {DominantWeight({3, 1}), DominantWeight({2, 1, 0}), DominantWeight({4, 2, 1, 0})}) {
        auto rep = verify_chi_against_alternant(lam, 5);
        CHECK(rep.checked == 5);
        CHECK(rep.pass());
        CHECK(weyl_character(lam).dimension() == dimension_via_product(lam));
    }
}

TEST_CASE("identity suite passes and is deterministic") {
    SuiteOptions opt;
    opt.max_n = 3;
    opt.max_degree = 8;
    opt.primes = {Int(2), Int(3)};
    opt.seed = 42;

    auto reports = run_suite(opt);
    REQUIRE(reports.size() == 14);
    for (const auto& r : reports) {
        INFO(r.identity);
        CHECK(r.checked > 0);
        CHECK(r.pass());
    }

    const char* expected[] = {"padic_reconstruction",
                              "orbit_size_law",
                              "dominance_partial_order",
                              "w0_involution",
                              "steinberg_shift_regular",
                              "chi_weyl_symmetry",
                              "chi_highest_weight",
                              "weyl_dimension_product",
                              "brauer_identity",
                              "brauer_dominant_regime",
                              "twist_dimension_multiplicative",
                              "twist_ring_homomorphism",
                              "zhat_dimension",
                              "alternant_agreement"};
    for (std::size_t i = 0; i < reports.size(); ++i) CHECK(reports[i].identity == expected[i]);

    auto again = run_suite(opt);
    REQUIRE(again.size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(again[i].identity == reports[i].identity);
        CHECK(again[i].checked == reports[i].checked);
    }
}

TEST_CASE("suite handles degenerate and larger configurations") {
    SuiteOptions tiny;
    tiny.max_n = 1;
    tiny.max_degree = 3;
    tiny.primes = {Int(2)};
    for (const auto& r : run_suite(tiny)) {
        INFO(r.identity);
        CHECK(r.pass());
    }

    SuiteOptions wide;
    wide.max_n = 2;
    wide.max_degree = 6;
    wide.primes = {Int(5)};
    wide.seed = 7;
    for (const auto& r : run_suite(wide)) {
        INFO(r.identity);
        CHECK(r.pass());
    }
}
