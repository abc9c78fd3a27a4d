#include <algorithm>

#include "doctest.h"
#include "idem/corpus.hpp"
#include "idem/semiring.hpp"

using namespace idem;

namespace {

// Z/2 with xor/and: a valid commutative semiring that is NOT idempotent.
finite_semiring make_z2() {
    finite_semiring s;
    s.names = {"0", "1"};
    s.add_table = {0, 1, 1, 0};
    s.mul_table = {0, 0, 0, 1};
    s.zero = 0;
    s.one = 1;
    validate_semiring(s);
    return s;
}

}  // namespace

TEST_CASE("validation rejects broken tables") {
    finite_semiring s = make_bool();
    SUBCASE("non-commutative addition") {
        s.add_table = {0, 1, 0, 1};
        CHECK_THROWS_AS(validate_semiring(s), validation_error);
    }
    SUBCASE("zero not absorbing") {
        s.mul_table = {0, 1, 1, 1};
        CHECK_THROWS_AS(validate_semiring(s), validation_error);
    }
    SUBCASE("out-of-range entry") {
        s.add_table = {0, 1, 1, 7};
        CHECK_THROWS_AS(validate_semiring(s), validation_error);
    }
    SUBCASE("duplicate labels") {
        s.names = {"x", "x"};
        CHECK_THROWS_AS(validate_semiring(s), validation_error);
    }
    SUBCASE("zero equals one on a non-trivial carrier") {
        s.one = 0;
        s.mul_table = {0, 0, 0, 0};
        CHECK_THROWS_AS(validate_semiring(s), validation_error);
    }
}

TEST_CASE("classification of the named carriers") {
    // Expected flags computed by hand from the tables.
    auto expect = [](const finite_semiring& s, bool idem_, bool integral, bool canc,
                     bool zsf, bool idealic, bool rad, bool total, bool fresh) {
        property_report r = classify(s);
        CAPTURE(s.names.size());
        CHECK(r.idempotent == idem_);
        CHECK(r.integral == integral);
        CHECK(r.cancellative == canc);
        CHECK(r.zero_sum_free == zsf);
        CHECK(r.idealic == idealic);
        CHECK(r.radical_idealic == rad);
        CHECK(r.totally_ordered == total);
        CHECK(r.freshman_dream == fresh);
    };
    //                       idem  intgr canc  zsf   ideal rad   total fresh
    expect(make_trivial(),   true, true, true, true, true, true, true, true);
    expect(make_bool(),      true, true, true, true, true, true, true, true);
    expect(make_chain3(),    true, true, false,true, true, true, true, true);
    expect(make_n3(),        true, false,false,true, true, false,true, true);
    expect(make_inf3(),      true, true, false,true, false,false,true, true);
    expect(make_diamond(),   true, false,false,true, true, true, false,true);
    // Z/2 is a char-2 ring, so the freshman's dream genuinely holds there.
    expect(make_z2(),        false,true, true, false,false,false,false,true);
}

TEST_CASE("canonical order") {
    auto c3 = make_chain3();
    CHECK(canonical_leq(c3, 0, 1));
    CHECK(canonical_leq(c3, 1, 2));
    CHECK(canonical_leq(c3, 0, 2));
    CHECK(!canonical_leq(c3, 2, 1));
    CHECK(canonical_leq(c3, 1, 1));

    auto d = make_diamond();
    int a = d.index_of("a"), b = d.index_of("b"), c = d.index_of("c"), top = d.index_of("1");
    CHECK(!canonical_leq(d, a, b));
    CHECK(!canonical_leq(d, b, a));
    CHECK(canonical_leq(d, a, c));
    CHECK(canonical_leq(d, b, c));
    CHECK(canonical_leq(d, c, top));

    CHECK_THROWS_AS(canonical_leq(make_z2(), 0, 1), capability_error);
}

TEST_CASE("homomorphism checking") {
    auto c3 = make_chain3();
    auto b = make_bool();
    // Collapse a down to 0: preserves max/min on the chain.
    CHECK(check_homomorphism({0, 0, 1}, c3, b));
    // Collapse a up to 1: also order-compatible.
    CHECK(check_homomorphism({0, 1, 1}, c3, b));
    // Identity is a homomorphism; swapping 0/1 is not.
    CHECK(check_homomorphism({0, 1}, b, b));
    CHECK(!check_homomorphism({1, 0}, b, b));
    // n3 -> bool collapsing a to 1 breaks multiplication: a*a = 0 but 1*1 = 1.
    CHECK(!check_homomorphism({0, 1, 1}, make_n3(), b));
    // ... while a to 0 works.
    CHECK(check_homomorphism({0, 0, 1}, make_n3(), b));
    // Wrong length is rejected.
    CHECK(!check_homomorphism({0, 1}, c3, b));
}

TEST_CASE("quotients by compatible partitions") {
    auto c3 = make_chain3();
    // {0} {a,1} is compatible with max/min.
    auto q = quotient_semiring(c3, {0, 1, 1});
    CHECK(q.size() == 2);
    CHECK(find_semiring_isomorphism(q, make_bool()).has_value());
    CHECK(q.names[1] == "{a,1}");

    // {0,1} {a} merges 0 with 1 but not a: incompatible (0+a=a, 1+a=1).
    CHECK_THROWS_AS(quotient_semiring(c3, {0, 1, 0}), validation_error);
}

TEST_CASE("isomorphism search") {
    auto c3 = make_chain3();
    // Relabel chain3 with permuted indices: 1 < a < 0 under new tables.
    finite_semiring r;
    r.names = {"x", "y", "z"};
    // permutation p: old 0 -> new 2, old a -> new 0, old 1 -> new 1
    std::vector<int> p = {2, 0, 1};
    r.add_table.assign(9, 0);
    r.mul_table.assign(9, 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            r.add_table[p[i] * 3 + p[j]] = p[c3.add(i, j)];
            r.mul_table[p[i] * 3 + p[j]] = p[c3.mul(i, j)];
        }
    r.zero = p[c3.zero];
    r.one = p[c3.one];
    validate_semiring(r);

    auto f = find_semiring_isomorphism(c3, r);
    REQUIRE(f.has_value());
    CHECK(check_homomorphism(*f, c3, r));
    CHECK((*f)[0] == 2);

    CHECK(!find_semiring_isomorphism(c3, make_n3()).has_value());
    CHECK(!find_semiring_isomorphism(c3, make_inf3()).has_value());
    CHECK(!find_semiring_isomorphism(make_n3(), make_inf3()).has_value());
    CHECK(!find_semiring_isomorphism(c3, make_bool()).has_value());
}

TEST_CASE("exhaustive enumeration of small idempotent carriers") {
    auto e1 = enumerate_idempotent_commutative_semirings(1, true);
    CHECK(e1.size() == 1);
    auto e2 = enumerate_idempotent_commutative_semirings(2, true);
    REQUIRE(e2.size() == 1);
    CHECK(find_semiring_isomorphism(e2[0], make_bool()).has_value());

    auto e3 = enumerate_idempotent_commutative_semirings(3, true);
    REQUIRE(e3.size() == 3);
    // Exactly the three named order-3 carriers, in some order.
    for (auto make : {make_chain3, make_n3, make_inf3}) {
        auto target = make();
        int hits = 0;
        for (const auto& s : e3)
            if (find_semiring_isomorphism(s, target)) ++hits;
        CHECK(hits == 1);
    }

    auto e4 = enumerate_idempotent_commutative_semirings(4, true);
    // All pairwise non-isomorphic and valid.
    for (size_t i = 0; i < e4.size(); ++i)
        for (size_t j = i + 1; j < e4.size(); ++j)
            CHECK(!find_semiring_isomorphism(e4[i], e4[j]).has_value());
    // The 4-chain with max/min must occur...
    finite_semiring chain4;
    chain4.names = {"0", "a", "b", "1"};
    chain4.add_table.assign(16, 0);
    chain4.mul_table.assign(16, 0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            chain4.add_table[i * 4 + j] = std::max(i, j);
            chain4.mul_table[i * 4 + j] = std::min(i, j);
        }
    chain4.zero = 0;
    chain4.one = 3;
    validate_semiring(chain4);
    int hits = 0;
    for (const auto& s : e4)
        if (find_semiring_isomorphism(s, chain4)) ++hits;
    CHECK(hits == 1);
    // ... and so must bool x bool (the 2x2 square lattice).
    finite_semiring bb;
    bb.names = {"00", "01", "10", "11"};
    bb.add_table.assign(16, 0);
    bb.mul_table.assign(16, 0);
    auto bl = make_bool();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int a1 = i >> 1, a2 = i & 1, b1 = j >> 1, b2 = j & 1;
            bb.add_table[i * 4 + j] = (bl.add(a1, b1) << 1) | bl.add(a2, b2);
            bb.mul_table[i * 4 + j] = (bl.mul(a1, b1) << 1) | bl.mul(a2, b2);
        }
    bb.zero = 0;
    bb.one = 3;
    validate_semiring(bb);
    hits = 0;
    for (const auto& s : e4)
        if (find_semiring_isomorphism(s, bb)) ++hits;
    CHECK(hits == 1);

    CHECK_THROWS_AS(enumerate_idempotent_commutative_semirings(5, true), capability_error);
}

TEST_CASE("binomial identities over the corpus") {
    // (a+b)^(m+n) = a^m (a+b)^n + b^n (a+b)^m for 1 <= m, n <= 3.
    for (const auto& s : standard_corpus_with_trivial())
        for (int a = 0; a < s.size(); ++a)
            for (int b = 0; b < s.size(); ++b)
                for (int m = 1; m <= 3; ++m)
                    for (int n = 1; n <= 3; ++n) {
                        int ab = s.add(a, b);
                        CHECK(s.pow(ab, m + n) ==
                              s.add(s.mul(s.pow(a, m), s.pow(ab, n)),
                                    s.mul(s.pow(b, n), s.pow(ab, m))));
                    }

    // On the cancellative members, (a+b)^n = a^n + b^n for 1 <= n <= 4.
    for (const auto& s : standard_corpus_with_trivial()) {
        if (!classify(s).cancellative) continue;
        for (int a = 0; a < s.size(); ++a)
            for (int b = 0; b < s.size(); ++b)
                for (int n = 1; n <= 4; ++n)
                    CHECK(s.pow(s.add(a, b), n) == s.add(s.pow(a, n), s.pow(b, n)));
    }
}
