#pragma once

// Finite table-based commutative semirings: validation, structural
// classification, the canonical order of idempotent carriers, homomorphism
// checking, quotients by compatible partitions, and isomorphism search.

#include <optional>
#include <string>
#include <vector>

#include "idem/common.hpp"

namespace idem {

// A commutative semiring on a finite carrier, given by full operation
// tables.  Both operations are commutative monoids, multiplication
// distributes over addition, and 0 is multiplicatively absorbing; all of
// this is verified exhaustively on construction via validate().
struct finite_semiring {
    std::vector<std::string> names;
    std::vector<int> add_table;  // n*n row-major
    std::vector<int> mul_table;  // n*n row-major
    int zero = 0;
    int one = 0;

    int size() const { return static_cast<int>(names.size()); }
    int add(int a, int b) const { return add_table[a * size() + b]; }
    int mul(int a, int b) const { return mul_table[a * size() + b]; }

    // x^k for k >= 1 under multiplication.
    int pow(int x, int k) const;
    // Sum of a list of elements (empty sum = 0).
    int sum(const std::vector<int>& xs) const;

    int index_of(const std::string& label) const;  // throws parse_error if absent
};

// Structural property flags, each decided by exhaustive quantifier
// elimination over the carrier.
struct property_report {
    bool idempotent = false;      // a + a = a
    bool integral = false;        // no zero divisors
    bool cancellative = false;    // ac = bc, c != 0  =>  a = b
    bool zero_sum_free = false;   // x + a = 0  =>  x = a = 0
    bool idealic = false;         // idempotent and 1 is the maximum element
    bool radical_idealic = false; // idealic and x^2 = x for all x
    bool totally_ordered = false; // idempotent and x + y in {x, y} for all x, y
    bool freshman_dream = false;  // x^n + y^n = (x+y)^n for all x, y and 1 <= n <= |S|
};

// Verifies every semiring axiom on the tables; throws validation_error
// naming the failing law and witness triple on the first violation.
void validate_semiring(const finite_semiring& s);

property_report classify(const finite_semiring& s);

// Canonical order of an idempotent semiring: x <= y iff x + y = y.
// Throws capability_error if s is not idempotent.
bool canonical_leq(const finite_semiring& s, int x, int y);

// True iff f (a total map on indices of s) preserves +, *, 0, 1 everywhere.
bool check_homomorphism(const std::vector<int>& f, const finite_semiring& s,
                        const finite_semiring& t);

// The quotient semiring by a partition (block index per element), together
// with labels "{a,b}" naming each block.  The partition must be compatible
// with both operations (validated; throws validation_error otherwise).
finite_semiring quotient_semiring(const finite_semiring& s, const std::vector<int>& block_of);

// Backtracking isomorphism search keyed on additive/multiplicative order
// profiles.  Returns the element bijection s -> t if one exists.
std::optional<std::vector<int>> find_semiring_isomorphism(const finite_semiring& s,
                                                          const finite_semiring& t);

}  // namespace idem
