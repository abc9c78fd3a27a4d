#pragma once

#include <string>
#include <utility>

#include "idem/common.hpp"

namespace idem {

// Exact rational numbers; all identities here are exact, so floating point
// is never used.
struct rational {
    long long num = 0;
    long long den = 1;  // invariant: den > 0, gcd(|num|, den) = 1

    bool operator==(const rational&) const = default;
};

rational make_rational(long long num, long long den = 1);
rational rational_add(const rational& a, const rational& b);
int rational_cmp(const rational& a, const rational& b);  // -1 / 0 / +1
std::string rational_to_string(const rational& a);

// Max-plus element: addition is max, multiplication is rational addition,
// with a distinguished bottom (-infinity) as the additive zero; the
// multiplicative one is the rational 0.
struct trop {
    bool bottom = true;
    rational value;

    bool operator==(const trop& o) const {
        return bottom == o.bottom && (bottom || value == o.value);
    }
};

trop trop_bottom();
trop make_trop(long long num, long long den = 1);
trop trop_add(const trop& a, const trop& b);  // max
trop trop_mul(const trop& a, const trop& b);  // rational addition, bottom absorbs
trop trop_pow(const trop& a, int k);          // k >= 0; a^0 = multiplicative one
std::string trop_to_string(const trop& a);

// Indicator of the non-bottom elements: the support map onto {0, 1}, which
// preserves both operations.
int trop_support(const trop& a);

// Twisted product on pairs, same formula as for finite carriers.
using trop_pair = std::pair<trop, trop>;
trop_pair trop_twisted_mul(const trop_pair& x, const trop_pair& y);

}  // namespace idem
