#pragma once

#include <vector>

#include "idem/semiring.hpp"

namespace idem {

// Small named carriers used throughout the test-bed.  Every one is an
// idempotent commutative semiring; see each builder for the order diagram.

// One element: 0 = 1.
finite_semiring make_trivial();

// Booleans {0,1}: or / and.
finite_semiring make_bool();

// Chain 0 < a < 1 with add = max, mul = min.
finite_semiring make_chain3();

// Chain 0 < a < 1 with add = max but a*a = 0 (nilpotent midpoint).
finite_semiring make_n3();

// Chain 0 < 1 < a: the top element is not 1, so adding 1 does not absorb.
finite_semiring make_inf3();

// Five-element diamond 0 < a,b < c < 1 with a+b = c and a*b = 0.
finite_semiring make_diamond();

// All named carriers above except the trivial one, in a stable order.
std::vector<finite_semiring> standard_corpus();

// Same list including the trivial carrier.
std::vector<finite_semiring> standard_corpus_with_trivial();

// Every idempotent commutative semiring on n labelled elements; when
// up_to_iso is set, one representative per isomorphism class.
// Exhaustive table search - intended for n <= 4.
std::vector<finite_semiring> enumerate_idempotent_commutative_semirings(int n, bool up_to_iso);

}  // namespace idem
