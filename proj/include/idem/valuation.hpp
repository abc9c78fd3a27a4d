#pragma once

#include <vector>

#include "idem/congruence.hpp"
#include "idem/semiring.hpp"
#include "idem/topology.hpp"

namespace idem {

// A valuation presented by the prime congruence it factors through: the
// quotient is a totally ordered semifield (finite and cancellative, so
// fractions are already present) and the map is evaluation into it.
struct valuation_witness {
    finite_semiring source;
    congruence prime;
    finite_semiring quotient;
    std::vector<int> map;               // source index -> quotient index
    std::vector<uint8_t> quotient_leq;  // total order on the quotient

    bool value_le(int qx, int qy) const {
        return quotient_leq[qx * quotient.size() + qy] != 0;
    }
};

// Builds the witness for a prime congruence and checks every axiom: the
// quotient is cancellative, totally ordered, and has inverses for all
// nonzero classes; the map fixes 0 and 1, preserves products, and sends a
// sum to the larger of the two values.  Throws validation_error on a
// non-prime input.
valuation_witness valuation_from_prime(const finite_semiring& s, const congruence& c);

// The pairs (x, y) with equal values; recovered prime, asserted prime.
congruence kernel_congruence(const valuation_witness& v);

// One witness per prime congruence, in the canonical congruence order (the
// point order of spec_c); both round trips are verified.
std::vector<valuation_witness> spv(const finite_semiring& s);

// Total preorder x <= y iff v(x) <= v(y).
struct valuation_order {
    finite_semiring source;
    std::vector<uint8_t> rel;  // n*n row-major

    bool le(int x, int y) const { return rel[x * source.size() + y] != 0; }
};
valuation_order valuation_order_of(const valuation_witness& v);

// Points are the valuations; subbasic opens
//   D(x, y) = {v : v(x) <= v(y) and v(y) != 0}
// range over all pairs of source elements.  Checked spectral.
finite_space spv_topology(const finite_semiring& s);

}  // namespace idem
