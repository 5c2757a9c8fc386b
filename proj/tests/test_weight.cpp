#include <doctest.h>

#include <schur/weight.hpp>

#include <algorithm>
#include <numeric>
#include <set>

using namespace schur;

namespace {

// Independent orbit computation: permute positions instead of sorting values.
std::set<Weight> orbit_by_index_permutation(const Weight& w) {
    const std::size_t n = w.rank();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end());
    std::set<Weight> out;
    do {
        std::vector<Int> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = w[idx[i]];
        out.insert(Weight(std::move(v)));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

}  // namespace

TEST_CASE("special weights") {
    CHECK(delta(3) == Weight({2, 1, 0}));
    CHECK(delta(1) == Weight({0}));
    CHECK(omega(2) == Weight({1, 1}));
    CHECK(epsilon(3, 1) == Weight({1, 0, 0}));
    CHECK(epsilon(3, 3) == Weight({0, 0, 1}));
    CHECK_THROWS_AS(epsilon(3, 0), PreconditionError);
    CHECK_THROWS_AS(epsilon(3, 4), PreconditionError);
    CHECK(degree(delta(4)) == 6);
    CHECK(degree(Weight({-1, 1})) == 0);
}

TEST_CASE("dominant weight validation") {
    CHECK_NOTHROW(DominantWeight({3, 1, 0}));
    CHECK_NOTHROW(DominantWeight({0, -2}));
    CHECK_THROWS_AS(DominantWeight({1, 2}), PreconditionError);
    CHECK(DominantWeight({3, 1, 0}).is_polynomial());
    CHECK_FALSE(DominantWeight({0, -2}).is_polynomial());
    CHECK(breadth(DominantWeight({4, 2, 1})) == 4);
    CHECK(breadth(DominantWeight({0, 0})) == 0);
}

TEST_CASE("dominance order") {
    DominantWeight a({1, 1}), b({2, 0});
    CHECK(dominance_leq(a, b));
    CHECK_FALSE(dominance_leq(b, a));
    CHECK(dominance_leq(a, a));
    // different degrees are incomparable
    CHECK_FALSE(dominance_leq(DominantWeight({1, 0}), b));
    CHECK_FALSE(dominance_leq(b, DominantWeight({1, 0})));
    CHECK_THROWS_AS(dominance_leq(a, DominantWeight({2, 0, 0})), PreconditionError);

    // antisymmetry over a sweep
    for (const auto& x : lambda_plus(3, 6))
        for (const auto& y : lambda_plus(3, 6))
            if (dominance_leq(x, y) && dominance_leq(y, x))
                CHECK(static_cast<const Weight&>(x) == static_cast<const Weight&>(y));
}

TEST_CASE("longest element action") {
    CHECK(w0_apply(Weight({2, 1, 0})) == Weight({0, 1, 2}));
    CHECK(w0_apply(Weight({1, 1})) == Weight({1, 1}));
    for (const auto& lam : lambda_plus(4, 5))
        CHECK(w0_apply(w0_apply(lam)) == static_cast<const Weight&>(lam));
}

TEST_CASE("weyl orbit") {
    auto orb = weyl_orbit(DominantWeight({1, 0}));
    REQUIRE(orb.size() == 2);
    CHECK(orb[0] == Weight({1, 0}));
    CHECK(orb[1] == Weight({0, 1}));

    CHECK(weyl_orbit(DominantWeight({1, 1})).size() == 1);
    CHECK(weyl_orbit(DominantWeight({2, 1, 0})).size() == 6);
    CHECK(weyl_orbit(DominantWeight({2, 2, 0})).size() == 3);

    // orbit agrees with brute-force index permutations; dominant member first
    for (const auto& lam : lambda_plus(4, 6)) {
        auto fast = weyl_orbit(lam);
        auto slow = orbit_by_index_permutation(lam);
        CHECK(fast.size() == slow.size());
        CHECK(std::set<Weight>(fast.begin(), fast.end()) == slow);
        CHECK(fast.front() == static_cast<const Weight&>(lam));
    }
}

TEST_CASE("column regularity") {
    CHECK(is_column_regular(DominantWeight({2, 1}), 3));
    CHECK_FALSE(is_column_regular(DominantWeight({3, 0}), 3));
    CHECK(is_column_regular(DominantWeight({8, 4, 2}), 5));
    CHECK_FALSE(is_column_regular(DominantWeight({8, 4, 2}), 2));
    CHECK(is_column_regular(DominantWeight({0, 0}), 2));
    CHECK_THROWS_AS(is_column_regular(DominantWeight({1, 0}), 1), PreconditionError);

    // X_m membership is column p^m-regularity
    CHECK(in_Xm(DominantWeight({2, 1}), 3, 1));
    CHECK(in_Xm(DominantWeight({8, 4}), 3, 2));
    CHECK_FALSE(in_Xm(DominantWeight({9, 0}), 3, 2));
}

TEST_CASE("p-adic decomposition examples") {
    auto d = p_adic_decompose(DominantWeight({8, 4}), 3);
    REQUIRE(d.digits.size() == 2);
    CHECK(static_cast<const Weight&>(d.digits[0]) == Weight({2, 1}));
    CHECK(static_cast<const Weight&>(d.digits[1]) == Weight({2, 1}));
    CHECK(p_adic_breadth(DominantWeight({8, 4}), 3) == 2);

    auto e = p_adic_decompose(DominantWeight({3, 0}), 3);
    REQUIRE(e.digits.size() == 2);
    CHECK(static_cast<const Weight&>(e.digits[0]) == Weight({0, 0}));
    CHECK(static_cast<const Weight&>(e.digits[1]) == Weight({1, 0}));

    auto f = p_adic_decompose(DominantWeight({5, 0}), 5);
    REQUIRE(f.digits.size() == 2);
    CHECK(static_cast<const Weight&>(f.digits[0]) == Weight({0, 0}));
    CHECK(static_cast<const Weight&>(f.digits[1]) == Weight({1, 0}));

    auto z = p_adic_decompose(DominantWeight({0, 0, 0}), 2);
    REQUIRE(z.digits.size() == 1);
    CHECK(static_cast<const Weight&>(z.digits[0]) == Weight({0, 0, 0}));

    CHECK(p_adic_breadth(DominantWeight({1, 0}), 5) == 1);
    CHECK(p_adic_breadth(DominantWeight({6, 0}), 7) == 6);

    CHECK_THROWS_AS(p_adic_decompose(DominantWeight({0, -1}), 2), PreconditionError);
    CHECK_THROWS_AS(p_adic_decompose(DominantWeight({1, 0}), 1), PreconditionError);
}

TEST_CASE("p-adic digits reconstruct and are regular") {
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        for (unsigned n = 1; n <= 3; ++n) {
            for (unsigned r = 0; r <= 9; ++r) {
                for (const auto& lam : lambda_plus(n, r)) {
                    auto dec = p_adic_decompose(lam, p);
                    CHECK(dec.reconstruct() == static_cast<const Weight&>(lam));
                    for (const auto& digit : dec.digits)
                        CHECK(is_column_regular(digit, p));
                    if (dec.digits.size() > 1)
                        CHECK(static_cast<const Weight&>(dec.digits.back()) !=
                              Weight(std::vector<Int>(n, 0)));
                }
            }
        }
    }
}

TEST_CASE("weight enumeration") {
    auto l24 = lambda_plus(2, 4);
    REQUIRE(l24.size() == 3);
    CHECK(static_cast<const Weight&>(l24[0]) == Weight({2, 2}));
    CHECK(static_cast<const Weight&>(l24[2]) == Weight({4, 0}));

    CHECK(lambda_plus(3, 0).size() == 1);
    CHECK(lambda_plus(1, 7).size() == 1);
    CHECK(lambda_plus(3, 6).size() == 7);

    CHECK(box_partitions(2, 2).size() == 6);
    CHECK(box_partitions(3, 1).size() == 4);
    for (const auto& lam : box_partitions(3, 4))
        CHECK(breadth(lam) <= 4);
}

TEST_CASE("parsing and printing") {
    CHECK(to_string(Weight({3, -1, 0})) == "(3,-1,0)");
    CHECK(parse_weight("(8,4)") == Weight({8, 4}));
    CHECK(parse_weight("8, 4") == Weight({8, 4}));
    CHECK(parse_weight(" ( -2 , 5 ) ") == Weight({-2, 5}));
    CHECK(parse_weight("123456789012345678901234567890")[0] ==
          Int("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_weight(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight("(1,,2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight("(1,x)"), std::invalid_argument);
    for (const auto& lam : lambda_plus(3, 5))
        CHECK(parse_weight(to_string(lam)) == static_cast<const Weight&>(lam));
}

TEST_CASE("steinberg shift lands in X_m") {
    for (unsigned long p : {2ul, 3ul}) {
        for (unsigned long m = 1; m <= 2; ++m) {
            unsigned long P = 1;
            for (unsigned long j = 0; j < m; ++j) P *= p;
            for (unsigned n = 2; n <= 3; ++n) {
                for (const auto& lam : box_partitions(n, P - 1)) {
                    Weight shifted = (P - 1) * delta(n) + w0_apply(lam);
                    CHECK(is_dominant(shifted));
                    CHECK(in_Xm(DominantWeight(shifted), p, m));
                }
            }
        }
    }
}
