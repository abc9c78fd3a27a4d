#pragma once

#include <string>
#include <vector>

#include "idem/common.hpp"
#include "idem/semiring.hpp"
#include "idem/topology.hpp"

namespace idem {

// Finite bounded lattice given by explicit tables.  join/meet must be the
// least upper / greatest lower bounds of leq; validate_lattice checks that.
struct finite_lattice {
    std::vector<std::string> names;
    std::vector<uint8_t> leq;  // row-major n*n, leq[x*n+y] iff x <= y
    std::vector<int> join_table, meet_table;
    int bottom = 0, top = 0;

    int size() const { return static_cast<int>(names.size()); }
    bool le(int x, int y) const { return leq[x * size() + y] != 0; }
    int join(int x, int y) const { return join_table[x * size() + y]; }
    int meet(int x, int y) const { return meet_table[x * size() + y]; }
};

void validate_lattice(const finite_lattice& l);
bool is_distributive_lattice(const finite_lattice& l);

// Builds the tables from an order matrix; throws validation_error when some
// pair lacks a least upper or greatest lower bound.
finite_lattice lattice_from_leq(std::vector<std::string> names,
                                std::vector<uint8_t> leq);

// The equivalence between lattice structure and semiring structure on the
// same carrier: join = add, meet = mul.  Either direction validates its
// input and refuses carriers outside its half of the correspondence.
finite_lattice semiring_to_lattice(const finite_semiring& s);   // needs every
                                                                // k-ideal radical
finite_semiring lattice_to_semiring(const finite_lattice& l);   // needs
                                                                // distributivity

// All additive k-subsemigroups of the carrier: subsets containing 0, closed
// under +, and downward closed in the canonical order; they form a lattice
// under inclusion.
struct k_subsemigroup_family {
    finite_semiring base;
    std::vector<bits> elements;  // canonical order
};
k_subsemigroup_family k_subsemigroup_lattice(const finite_semiring& s);

// Index of the smallest family member containing the given subset.
int smallest_k_subsemigroup(const k_subsemigroup_family& f, const bits& set);

// In the finite case every element is a finite join of itself, so every
// element is compact; returned explicitly so statements about the compact
// part are exercised as written.
std::vector<int> compact_elements(const k_subsemigroup_family& f);

// The compact part as a semiring: join of subsemigroups as addition and the
// smallest subsemigroup containing all pairwise products as multiplication.
finite_semiring compact_semiring(const k_subsemigroup_family& f);

// x -> smallest k-subsemigroup containing x, as indices into f.elements.
std::vector<int> principal_map(const k_subsemigroup_family& f);

// Quotients by the structural congruences: x+1 ~ 1 makes every element lie
// below 1 (idealization); x^2 ~ x makes every element idempotent
// (radicalization); both at once gives the compact radical-ideal semiring.
struct quotient_result {
    finite_semiring semiring;
    std::vector<int> block_of;  // quotient map, carrier index -> class index
};
quotient_result idealization(const finite_semiring& s);
quotient_result radicalization(const finite_semiring& s);
quotient_result i_rad_compact(const finite_semiring& s);

// The semiring of k-ideals under k-sum and k-product, and the semiring of
// radical k-ideals under the radicals of those operations.
finite_semiring k_ideal_semiring(const finite_semiring& s);
finite_semiring radical_k_ideal_semiring(const finite_semiring& s);

// Elements p (excluding the top) with xy <= p implying x <= p or y <= p.
std::vector<int> prime_lattice_elements(const finite_semiring& s);

// Space of prime elements with closed sets V(x) = {p prime : x <= p};
// requires 1 to be the maximum element so that V(1) is empty.
finite_space zariski_space(const finite_semiring& s);

// Rebuilds a carrier from a spectral space: the semiring of opens (union /
// intersection) together with the point map onto its prime k-ideal spectrum,
// verified to be a homeomorphism.
struct realization {
    finite_semiring semiring;
    std::vector<int> point_map;  // space point -> spectrum point
};
realization realize_space(const finite_space& x);

// All T0 topologies on n points up to homeomorphism (n <= 5), and all
// bounded distributive lattices with n elements up to isomorphism (n <= 5).
std::vector<finite_space> enumerate_t0_spaces(int n);
std::vector<finite_lattice> enumerate_bounded_distributive_lattices(int n);

}  // namespace idem
