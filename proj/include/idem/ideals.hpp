#pragma once

// Ideals of a finite commutative semiring, subtractive ("k-") ideals and
// their closure, sums, products, prime k-ideals, the hull-kernel prime
// spectrum, and radicals.

#include <optional>
#include <vector>

#include "idem/common.hpp"
#include "idem/semiring.hpp"
#include "idem/topology.hpp"

namespace idem {

enum class ideal_kind { all, proper, k, prime_k };

// contains 0, closed under +, absorbs multiplication by the carrier.
bool is_ideal(const finite_semiring& s, const bits& subset);

// An ideal with the subtraction property: x in I and x + y in I imply y in I.
bool is_k_ideal(const finite_semiring& s, const bits& subset);

// All ideals of the requested kind, canonically ordered.  Uses the principal
// down-set route for k-kinds of idempotent carriers; otherwise exhaustive
// over subsets (supported up to 16 elements).
std::vector<bits> enumerate_ideals(const finite_semiring& s, ideal_kind kind);

// Smallest ideal containing the given elements.
bits ideal_generated_by(const finite_semiring& s, const bits& gens);

// Smallest k-ideal containing the ideal: repeatedly adjoin every x such
// that x + y lies in the set for some member y.
bits k_closure(const finite_semiring& s, const bits& ideal);

// k-closure of {a + b : a in I, b in J}.
bits k_sum(const finite_semiring& s, const bits& i, const bits& j);

// The plain ideal generated by pairwise products, and its k-closure.
bits ideal_product(const finite_semiring& s, const bits& i, const bits& j);
bits k_product(const finite_semiring& s, const bits& i, const bits& j);

// Element form: proper k-ideal with xy in I => x in I or y in I.
bool is_prime_k_ideal(const finite_semiring& s, const bits& subset);
// Pair form over k-ideals: JK subset I => J subset I or K subset I.
// Equivalent to the element form; kept separate as a cross-check.
bool is_prime_k_ideal_pair_form(const finite_semiring& s, const bits& subset);

// Hull-kernel space on the prime k-ideals.
finite_space spec_k(const finite_semiring& s);

// Intersection of the prime k-ideals containing the ideal; the whole
// carrier when no prime contains it.
bits radical_k_ideal(const finite_semiring& s, const bits& ideal);

// Least n with J^n (k-product powers) inside I, searching until the power
// sequence stabilizes (at most |S|^2 steps); nullopt when no power lands
// in I.  J lies in the radical of I exactly when this succeeds.
std::optional<int> radical_power_criterion(const finite_semiring& s, const bits& j,
                                           const bits& i);

}  // namespace idem
