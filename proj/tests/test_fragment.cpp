#include <string>

#include "doctest.h"
#include "idem/fragment.hpp"

using namespace idem;

namespace {
const bool_poly X = bp_monomial({1, 0});
const bool_poly Y = bp_monomial({0, 1});
}  // namespace

TEST_CASE("fragment saturation from a single seed") {
    auto frag = fragment_saturate(2, {{X, Y}}, 6);
    CHECK(fragment_member(frag, X, Y).verdict == membership::proven);
    CHECK(fragment_member(frag, Y, X).verdict == membership::proven);
    // Diagonal pairs are proven unconditionally, even above the bound.
    CHECK(fragment_member(frag, X, X).verdict == membership::proven);
    auto big = bp_from_monomials(2, {{5, 5}});
    CHECK(fragment_member(frag, big, big).verdict == membership::proven);
    // Componentwise products and translations of the seed are derived.
    CHECK(frag.find_pair(bp_pow(X, 2), bp_pow(Y, 2)).has_value());
    CHECK(frag.find_pair(bp_pow(X, 3), bp_pow(Y, 3)).has_value());
    CHECK(frag.find_pair(bp_add(X, bp_one(2)), bp_add(Y, bp_one(2))).has_value());
    // Unrelated pairs stay inconclusive; the fragment never claims absence.
    CHECK(fragment_member(frag, X, bp_one(2)).verdict == membership::inconclusive);

    CHECK_THROWS_AS(fragment_saturate(2, {{bp_pow(X, 9), Y}}, 6), validation_error);
    CHECK_THROWS_AS(fragment_saturate(4, {}, 3), capability_error);
}

TEST_CASE("every stored pair replays its derivation") {
    fragment_caps caps;
    caps.max_pairs = 4000;
    caps.max_rounds = 3;
    caps.max_attempts = 200000;
    auto frag = fragment_saturate(2, {{X, Y}}, 5, caps);
    REQUIRE(!frag.pairs.empty());
    for (size_t i = 0; i < frag.pairs.size(); ++i) {
        const auto& p = frag.pairs[i];
        if (p.parent1 >= 0) CHECK(p.parent1 < static_cast<int>(i));
        if (p.parent2 >= 0) CHECK(p.parent2 < static_cast<int>(i));
        if (p.rule == "seed") {
            CHECK(p.first == X);
            CHECK(p.second == Y);
        } else if (p.rule == "diagonal") {
            CHECK(p.first == p.second);
        } else if (p.rule == "symmetry") {
            REQUIRE(p.parent1 >= 0);
            CHECK(frag.pairs[p.parent1].first == p.second);
            CHECK(frag.pairs[p.parent1].second == p.first);
        } else if (p.rule == "add") {
            const auto& l = frag.pairs[p.parent1];
            const auto& r = frag.pairs[p.parent2];
            CHECK(p.first == bp_add(l.first, r.first));
            CHECK(p.second == bp_add(l.second, r.second));
        } else if (p.rule == "mul") {
            const auto& l = frag.pairs[p.parent1];
            const auto& r = frag.pairs[p.parent2];
            CHECK(p.first == bp_mul(l.first, r.first));
            CHECK(p.second == bp_mul(l.second, r.second));
        } else if (p.rule == "trans") {
            const auto& l = frag.pairs[p.parent1];
            const auto& r = frag.pairs[p.parent2];
            CHECK(l.second == r.first);
            CHECK(p.first == l.first);
            CHECK(p.second == r.second);
        } else {
            FAIL("unexpected rule ", p.rule);
        }
    }
}

TEST_CASE("product fragment proves the even power pairs") {
    for (int n : {1, 2, 3}) {
        CAPTURE(n);
        int bound = 2 * n + 4;
        auto cd = cd_product_fragment(bound);
        auto lhs = bp_add(bp_pow(X, 2 * n), bp_pow(Y, 2 * n));
        auto rhs = bp_mul(bp_pow(X, n), bp_pow(Y, n));
        auto v = fragment_member(cd.product, lhs, rhs, &cd.base);
        CHECK(v.verdict == membership::proven);
        REQUIRE(!v.derivation.empty());
        bool has_twist = false;
        for (const auto& line : v.derivation)
            if (line.find("twist") != std::string::npos) has_twist = true;
        CHECK(has_twist);
    }
}

TEST_CASE("degree-8 product fragment keeps powers of x unrelated") {
    auto cd = cd_product_fragment(8);

    // The pinned membership: a twisted square of (x^2, y^2).
    auto lhs = bp_add(bp_pow(X, 4), bp_pow(Y, 4));
    auto rhs = bp_mul(bp_pow(X, 2), bp_pow(Y, 2));
    auto v = fragment_member(cd.product, lhs, rhs, &cd.base);
    CHECK(v.verdict == membership::proven);

    // No stored pair relates x^k (k <= 4) to anything but itself, in either
    // orientation: a bounded necessary condition for the power monomials
    // staying in singleton classes.
    int violations = 0;
    for (int k = 1; k <= 4; ++k) {
        auto xk = bp_pow(X, k);
        for (const auto& p : cd.product.pairs) {
            if (p.first == xk && !(p.second == xk)) ++violations;
            if (p.second == xk && !(p.first == xk)) ++violations;
        }
    }
    CHECK(violations == 0);

    // Spot probes around x^2 come back inconclusive, never proven.
    for (const auto& q :
         {bp_pow(Y, 2), bp_mul(X, Y), bp_add(bp_pow(X, 2), bp_pow(Y, 2)), X, bp_one(2)})
        CHECK(fragment_member(cd.product, bp_pow(X, 2), q).verdict ==
              membership::inconclusive);
}

TEST_CASE("tiny degree bounds saturate cleanly and answer inconclusive") {
    // Bounds too small to hold the even-power pairs must still terminate
    // with well-formed fragments; absence stays inconclusive, never proven.
    for (int bound = 1; bound <= 5; ++bound) {
        auto cd = cd_product_fragment(bound);
        CHECK(cd.product.degree_bound == bound);
        for (const auto& p : cd.product.pairs) {
            CHECK(bp_degree(p.first) <= bound);
            CHECK(bp_degree(p.second) <= bound);
        }
        auto lhs = bp_add(bp_pow(X, 6), bp_pow(Y, 6));
        auto rhs = bp_mul(bp_pow(X, 3), bp_pow(Y, 3));
        CHECK(fragment_member(cd.product, lhs, rhs, &cd.base).verdict ==
              membership::inconclusive);
    }
}
