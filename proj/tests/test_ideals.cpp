#include <algorithm>

#include "doctest.h"
#include "idem/corpus.hpp"
#include "idem/ideals.hpp"

using namespace idem;

namespace {

bits bs(int n, std::initializer_list<int> xs) {
    bits b(n);
    for (int x : xs) b.set(x);
    return b;
}

// Test-local re-derivation of the k-ideal definition, used as an oracle for
// the production enumeration (which takes the principal down-set route on
// idempotent carriers).
bool oracle_is_k_ideal(const finite_semiring& s, uint32_t mask) {
    const int n = s.size();
    auto in = [&](int x) { return (mask >> x) & 1; };
    if (!in(s.zero)) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (in(x) && in(y) && !in(s.add(x, y))) return false;
            if (in(y) && !in(s.mul(x, y))) return false;
            if (in(x) && in(s.add(x, y)) && !in(y)) return false;
        }
    return true;
}

std::vector<bits> oracle_k_ideals(const finite_semiring& s) {
    std::vector<bits> out;
    for (uint32_t mask = 0; mask < (1u << s.size()); ++mask)
        if (oracle_is_k_ideal(s, mask)) {
            bits b(s.size());
            for (int i = 0; i < s.size(); ++i)
                if (mask >> i & 1) b.set(i);
            out.push_back(b);
        }
    canonicalize_family(out);
    return out;
}

}  // namespace

TEST_CASE("ideal and k-ideal recognition") {
    auto inf3 = make_inf3();  // 0 < 1 < a with names 0,1,a at indices 0,1,2
    CHECK(is_ideal(inf3, bs(3, {0, 2})));
    CHECK(!is_k_ideal(inf3, bs(3, {0, 2})));  // a + 1 = a stays in, 1 does not
    CHECK(!is_ideal(inf3, bs(3, {0, 1})));    // 1 * a = a escapes
    CHECK(is_k_ideal(inf3, bs(3, {0})));
    CHECK(is_k_ideal(inf3, bits::full(3)));

    auto d = make_diamond();
    CHECK(is_k_ideal(d, bs(5, {0, 1})));           // {0,a}
    CHECK(is_k_ideal(d, bs(5, {0, 1, 2, 3})));     // {0,a,b,c}
    CHECK(!is_ideal(d, bs(5, {0, 1, 2})));         // a+b=c escapes
    CHECK(!is_ideal(d, bs(5, {0, 3})));            // c*a=a escapes
}

TEST_CASE("ideal enumeration on the named carriers") {
    struct row { finite_semiring s; size_t all, k, prime; };
    std::vector<row> rows = {
        {make_trivial(), 1, 1, 0}, {make_bool(), 2, 2, 1},  {make_chain3(), 3, 3, 2},
        {make_n3(), 3, 3, 1},      {make_inf3(), 3, 2, 1},  {make_diamond(), 5, 5, 3},
    };
    for (const auto& r : rows) {
        CAPTURE(r.s.size());
        CHECK(enumerate_ideals(r.s, ideal_kind::all).size() == r.all);
        CHECK(enumerate_ideals(r.s, ideal_kind::k).size() == r.k);
        CHECK(enumerate_ideals(r.s, ideal_kind::prime_k).size() == r.prime);
        CHECK(enumerate_ideals(r.s, ideal_kind::proper).size() == r.all - 1);
        // The principal-down-set route must agree with raw exhaustion.
        CHECK(enumerate_ideals(r.s, ideal_kind::k) == oracle_k_ideals(r.s));
    }

    // Exact families where hand-computed.
    auto d = make_diamond();
    auto primes = enumerate_ideals(d, ideal_kind::prime_k);
    REQUIRE(primes.size() == 3);
    CHECK(std::find(primes.begin(), primes.end(), bs(5, {0, 1})) != primes.end());
    CHECK(std::find(primes.begin(), primes.end(), bs(5, {0, 2})) != primes.end());
    CHECK(std::find(primes.begin(), primes.end(), bs(5, {0, 1, 2, 3})) != primes.end());

    auto n3 = make_n3();
    auto n3p = enumerate_ideals(n3, ideal_kind::prime_k);
    REQUIRE(n3p.size() == 1);
    CHECK(n3p[0] == bs(3, {0, 1}));  // {0,a}: the zero ideal is not prime (a*a=0)
    CHECK(!is_prime_k_ideal(n3, bs(3, {0})));
}

TEST_CASE("k-closure") {
    auto inf3 = make_inf3();
    // {0,a} is an ideal whose k-closure is everything: 1 + a = a.
    CHECK(k_closure(inf3, bs(3, {0, 2})) == bits::full(3));
    // k-ideals are fixed points.
    for (const auto& s : standard_corpus_with_trivial())
        for (const bits& i : enumerate_ideals(s, ideal_kind::k))
            CHECK(k_closure(s, i) == i);
    // Agreement with the intersection-of-k-ideals oracle on every ideal.
    for (const auto& s : standard_corpus_with_trivial()) {
        auto ks = oracle_k_ideals(s);
        for (const bits& i : enumerate_ideals(s, ideal_kind::all)) {
            bits expect = bits::full(s.size());
            for (const bits& k : ks)
                if (i.subset_of(k)) expect &= k;
            CHECK(k_closure(s, i) == expect);
        }
    }
    CHECK_THROWS_AS(k_closure(make_bool(), bs(2, {1})), validation_error);
}

TEST_CASE("sums and products of ideals") {
    auto d = make_diamond();
    CHECK(k_sum(d, bs(5, {0, 1}), bs(5, {0, 2})) == bs(5, {0, 1, 2, 3}));
    CHECK(k_product(d, bs(5, {0, 1}), bs(5, {0, 2})) == bs(5, {0}));
    CHECK(ideal_product(d, bs(5, {0, 1}), bs(5, {0, 2})) == bs(5, {0}));

    auto n3 = make_n3();
    CHECK(ideal_product(n3, bs(3, {0, 1}), bs(3, {0, 1})) == bs(3, {0}));

    auto c3 = make_chain3();
    CHECK(k_sum(c3, bs(3, {0}), bs(3, {0, 1})) == bs(3, {0, 1}));
    CHECK(k_product(c3, bs(3, {0, 1}), bs(3, {0, 1})) == bs(3, {0, 1}));

    // k-sum and k-product are commutative, associative, and monotone on the
    // k-ideals of every corpus member.
    for (const auto& s : standard_corpus_with_trivial()) {
        auto ks = enumerate_ideals(s, ideal_kind::k);
        for (const bits& a : ks)
            for (const bits& b : ks) {
                CHECK(k_sum(s, a, b) == k_sum(s, b, a));
                CHECK(k_product(s, a, b) == k_product(s, b, a));
                for (const bits& c : ks) {
                    CHECK(k_sum(s, k_sum(s, a, b), c) == k_sum(s, a, k_sum(s, b, c)));
                    CHECK(k_product(s, k_product(s, a, b), c) ==
                          k_product(s, a, k_product(s, b, c)));
                }
            }
    }
}

TEST_CASE("prime recognition: element form vs pair form") {
    for (const auto& s : standard_corpus_with_trivial())
        for (const bits& i : enumerate_ideals(s, ideal_kind::k))
            CHECK(is_prime_k_ideal(s, i) == is_prime_k_ideal_pair_form(s, i));
}

TEST_CASE("prime spectra of the named carriers") {
    CHECK(spec_k(make_trivial()).size() == 0);
    CHECK(spec_k(make_bool()).size() == 1);
    CHECK(spec_k(make_n3()).size() == 1);
    CHECK(spec_k(make_inf3()).size() == 1);

    auto c3spec = spec_k(make_chain3());
    REQUIRE(c3spec.size() == 2);
    // {0} comes first in canonical order and is the generic point.
    CHECK(c3spec.point_names[0] == "{0}");
    CHECK(c3spec.point_names[1] == "{0,a}");
    CHECK(c3spec.leq(0, 1));
    CHECK(!c3spec.leq(1, 0));
    CHECK(c3spec.opens.size() == 3);  // Sierpinski

    auto dspec = spec_k(make_diamond());
    REQUIRE(dspec.size() == 3);
    CHECK(dspec.point_names[0] == "{0,a}");
    CHECK(dspec.point_names[1] == "{0,b}");
    CHECK(dspec.point_names[2] == "{0,a,b,c}");
    CHECK(dspec.opens.size() == 5);
    CHECK(dspec.leq(0, 2));
    CHECK(dspec.leq(1, 2));
    CHECK(!dspec.leq(0, 1));
    CHECK(!dspec.leq(1, 0));
    CHECK(!dspec.leq(2, 0));

    // Specialization on a hull-kernel space is member inclusion.
    for (const auto& s : standard_corpus_with_trivial()) {
        auto primes = enumerate_ideals(s, ideal_kind::prime_k);
        auto sp = spec_k(s);
        REQUIRE(sp.size() == static_cast<int>(primes.size()));
        for (size_t i = 0; i < primes.size(); ++i)
            for (size_t j = 0; j < primes.size(); ++j)
                CHECK(sp.leq(static_cast<int>(i), static_cast<int>(j)) ==
                      primes[i].subset_of(primes[j]));
        CHECK(is_spectral(sp));
    }
}

TEST_CASE("radicals") {
    auto n3 = make_n3();
    CHECK(radical_k_ideal(n3, bs(3, {0})) == bs(3, {0, 1}));
    CHECK(radical_k_ideal(make_chain3(), bs(3, {0})) == bs(3, {0}));
    CHECK(radical_k_ideal(make_diamond(), bs(5, {0})) == bs(5, {0}));
    CHECK(radical_k_ideal(make_inf3(), bs(3, {0})) == bs(3, {0}));
    // No prime above the full ideal: radical is the whole carrier.
    CHECK(radical_k_ideal(n3, bits::full(3)) == bits::full(3));
    CHECK(radical_k_ideal(make_trivial(), bits::full(1)) == bits::full(1));

    // Radical is idempotent and extensive on k-ideals.
    for (const auto& s : standard_corpus_with_trivial())
        for (const bits& i : enumerate_ideals(s, ideal_kind::k)) {
            bits r = radical_k_ideal(s, i);
            CHECK(i.subset_of(r));
            CHECK(radical_k_ideal(s, r) == r);
        }
}

TEST_CASE("radical membership via power criterion") {
    auto n3 = make_n3();
    auto got = radical_power_criterion(n3, bs(3, {0, 1}), bs(3, {0}));
    REQUIRE(got.has_value());
    CHECK(*got == 2);  // {0,a}^2 = {0} lands in the zero ideal at the square

    CHECK(!radical_power_criterion(make_chain3(), bs(3, {0, 1}), bs(3, {0})).has_value());

    // Full equivalence with the intersection-of-primes radical on all pairs
    // of k-ideals of every corpus member.
    for (const auto& s : standard_corpus_with_trivial())
        for (const bits& i : enumerate_ideals(s, ideal_kind::k)) {
            bits rad = radical_k_ideal(s, i);
            for (const bits& j : enumerate_ideals(s, ideal_kind::k))
                CHECK(radical_power_criterion(s, j, i).has_value() == j.subset_of(rad));
        }
}
