#include "idem/tropical.hpp"

#include <numeric>

namespace idem {

rational make_rational(long long num, long long den) {
    if (den == 0) throw validation_error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return rational{num, den};
}

rational rational_add(const rational& a, const rational& b) {
    return make_rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

int rational_cmp(const rational& a, const rational& b) {
    long long lhs = a.num * b.den, rhs = b.num * a.den;
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

std::string rational_to_string(const rational& a) {
    if (a.den == 1) return std::to_string(a.num);
    return std::to_string(a.num) + "/" + std::to_string(a.den);
}

trop trop_bottom() { return trop{}; }

trop make_trop(long long num, long long den) {
    return trop{false, make_rational(num, den)};
}

trop trop_add(const trop& a, const trop& b) {
    if (a.bottom) return b;
    if (b.bottom) return a;
    return rational_cmp(a.value, b.value) >= 0 ? a : b;
}

trop trop_mul(const trop& a, const trop& b) {
    if (a.bottom || b.bottom) return trop_bottom();
    return trop{false, rational_add(a.value, b.value)};
}

trop trop_pow(const trop& a, int k) {
    if (k < 0) throw validation_error("negative power");
    trop r = make_trop(0);
    for (int i = 0; i < k; ++i) r = trop_mul(r, a);
    return r;
}

std::string trop_to_string(const trop& a) {
    return a.bottom ? "-inf" : rational_to_string(a.value);
}

int trop_support(const trop& a) { return a.bottom ? 0 : 1; }

trop_pair trop_twisted_mul(const trop_pair& x, const trop_pair& y) {
    return {trop_add(trop_mul(x.first, y.first), trop_mul(x.second, y.second)),
            trop_add(trop_mul(x.first, y.second), trop_mul(x.second, y.first))};
}

}  // namespace idem
