#pragma once

// Congruences on finite semirings: generation from seed pairs, twisted
// products of pairs, congruence products, prime congruences and their
// hull-kernel spectrum, kernels, generalized powers, and radicals.

#include <string>
#include <utility>
#include <vector>

#include "idem/common.hpp"
#include "idem/semiring.hpp"
#include "idem/topology.hpp"

namespace idem {

// A partition of the carrier compatible with both operations.  Blocks are
// numbered by first occurrence, so equal partitions compare equal.
struct congruence {
    std::vector<int> block_of;

    int size() const { return static_cast<int>(block_of.size()); }
    int blocks() const;
    bool related(int x, int y) const { return block_of[x] == block_of[y]; }
    bool operator==(const congruence&) const = default;
    bool operator<(const congruence& o) const { return block_of < o.block_of; }

    // The congruence as a subset of A x A (index x*n + y).
    bits pair_bits() const;
    // The block containing x, as a carrier subset.
    bits class_of(int x) const;
};

// Renumber blocks by first occurrence.
congruence normalize_partition(std::vector<int> raw);
congruence diagonal_congruence(int n);
congruence full_congruence(int n);

// Partition well-formedness plus compatibility with + and *.
bool is_congruence(const finite_semiring& s, const congruence& c);

// Build from explicit blocks (each a list of element indices); validates
// that the blocks partition the carrier and form a congruence.
congruence congruence_from_blocks(const finite_semiring& s,
                                  const std::vector<std::vector<int>>& blocks);

// "{0,a}{1}" rendering under the semiring's element names.
std::string congruence_label(const finite_semiring& s, const congruence& c);

// Least congruence containing the seed pairs: symmetrize, add the diagonal,
// close under componentwise + and *, transitive-close, iterate to fixpoint.
congruence generate_congruence(const finite_semiring& s,
                               const std::vector<std::pair<int, int>>& seed);

// All congruences, canonically ordered (partition scan; carriers up to 10).
std::vector<congruence> enumerate_congruences(const finite_semiring& s);

congruence intersect_congruences(const congruence& a, const congruence& b);
// a refines b (a's relation is contained in b's).
bool congruence_leq(const congruence& a, const congruence& b);

// --- pair arithmetic over A x A ------------------------------------------

inline int pair_index(const finite_semiring& s, int x, int y) { return x * s.size() + y; }
inline std::pair<int, int> pair_of(const finite_semiring& s, int e) {
    return {e / s.size(), e % s.size()};
}
// Componentwise sum of pairs.
int pair_add(const finite_semiring& s, int e1, int e2);
// (x1,x2) . (y1,y2) = (x1y1 + x2y2, x1y2 + x2y1).
int twisted_mul(const finite_semiring& s, int e1, int e2);
// e^k under the twisted product, k >= 1.
int twisted_pow(const finite_semiring& s, int e, int k);

// A x A with componentwise addition and the twisted multiplication; zero
// (0,0), one (1,0).  A commutative semiring (validated on construction).
finite_semiring twisted_pair_semiring(const finite_semiring& s);

// --- products, primes, spectrum -------------------------------------------

// Congruence generated by all twisted products of a C-pair with a D-pair.
congruence congruence_product(const finite_semiring& s, const congruence& c,
                              const congruence& d);
// Coordinate-wise variant (experimental; produces a different congruence).
congruence congruence_product_componentwise(const finite_semiring& s, const congruence& c,
                                            const congruence& d);

// Proper, and alpha .t beta in C implies alpha in C or beta in C, checked
// over all pairs of pairs.  Throws capability_error on non-idempotent
// carriers.
bool is_prime_congruence(const finite_semiring& s, const congruence& c);
// Cross-check: the quotient is totally ordered and multiplicatively
// cancellative.
bool is_prime_congruence_via_quotient(const finite_semiring& s, const congruence& c);

// Hull-kernel space on the prime congruences, with A x A as base set.
finite_space spec_c(const finite_semiring& s);
// Hull-kernel space over any family of congruences (same base set).
finite_space congruence_family_space(const finite_semiring& s,
                                     const std::vector<congruence>& family);

// Class of 0; always a k-ideal (verified, as an internal consistency check).
bits kernel_of(const finite_semiring& s, const congruence& c);
// Least congruence relating every member of the ideal to 0.
congruence congruence_from_ideal(const finite_semiring& s, const bits& ideal);

// All values ((a*)^m + (c,0)) .t a^n for 1 <= m <= m_max, 1 <= n <= n_max
// and c over the carrier, where a* = (x1+x2, 0); returned as a subset of
// A x A.  Powers use the twisted product.
bits generalized_powers(const finite_semiring& s, int alpha, int m_max, int n_max);

// Intersection of all prime congruences containing c; the full congruence
// when no prime contains it.
congruence radical_congruence(const finite_semiring& s, const congruence& c);
// The generalized-power membership test with m,n <= |S|^2 + 1, returned as
// a pair set; agrees with radical_congruence on every corpus input.
bits radical_congruence_via_powers(const finite_semiring& s, const congruence& c);

}  // namespace idem
