#pragma once

#include <string>
#include <utility>
#include <vector>

#include "idem/common.hpp"

namespace idem {

// Polynomials with coefficients in the two-element Boolean semifield: since
// every coefficient is 0 or 1 and addition is idempotent, a polynomial is
// exactly its set of monomials.  A monomial is an exponent vector.
struct bool_poly {
    int arity = 0;
    std::vector<std::vector<int>> monomials;  // sorted lexicographically, deduplicated

    bool operator==(const bool_poly&) const = default;
    bool is_zero() const { return monomials.empty(); }
};

bool_poly bp_zero(int arity);
bool_poly bp_one(int arity);
bool_poly bp_monomial(std::vector<int> exps);
bool_poly bp_from_monomials(int arity, std::vector<std::vector<int>> ms);

// Addition is monomial-set union; multiplication is the sumset of exponent
// vectors.  Mixed arities are rejected.
bool_poly bp_add(const bool_poly& p, const bool_poly& q);
bool_poly bp_mul(const bool_poly& p, const bool_poly& q);
bool_poly bp_pow(const bool_poly& p, int k);  // k >= 0; p^0 = 1

// The canonical order: p <= q iff every monomial of p appears in q.
bool bp_leq(const bool_poly& p, const bool_poly& q);

// Largest total degree of a monomial; -1 for the zero polynomial.
int bp_degree(const bool_poly& p);

// Rendering like "x^2*y + x + 1"; variables are x, y, z, then x3, x4, ...
std::string bp_to_string(const bool_poly& p);

// Pairs of polynomials under the twisted product
// (x1,x2) . (y1,y2) = (x1 y1 + x2 y2, x1 y2 + x2 y1).
using bp_pair = std::pair<bool_poly, bool_poly>;
bp_pair bp_twisted_mul(const bp_pair& x, const bp_pair& y);

}  // namespace idem
