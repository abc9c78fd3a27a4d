#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idem/boolpoly.hpp"
#include "idem/common.hpp"

namespace idem {

// Bounded, sound under-approximation of a congruence on a Boolean polynomial
// semiring.  Every stored pair carries a derivation from the seeds, so
// membership answers are "proven" or "inconclusive" — never "not a member":
// the saturation discards anything leaving the degree bound, and the caps
// below can stop it early, so absence proves nothing.
struct fragment_caps {
    int max_pairs = 20000;
    int max_rounds = 4;
    long long max_attempts = 2000000;  // combination attempts across the run
};

struct fragment_pair {
    bool_poly first, second;
    std::string rule;  // seed | twist | diagonal | symmetry | add | mul | trans
    int parent1 = -1;  // indices of the pairs this one was derived from;
    int parent2 = -1;  // for "twist" they point into the base fragment
};

struct congruence_fragment {
    int arity = 2;
    int degree_bound = 0;
    bool truncated = false;  // a cap tripped before saturation stabilized
    std::vector<fragment_pair> pairs;

    std::optional<int> find_pair(const bool_poly& a, const bool_poly& b) const;
};

// Saturates seed pairs under symmetry, the diagonal, componentwise + and
// twisted-free componentwise *, and transitivity, discarding any derived
// pair containing a monomial of total degree above the bound.
congruence_fragment fragment_saturate(int arity, const std::vector<bp_pair>& seeds,
                                      int degree_bound, fragment_caps caps = {});

// Same, with caller-supplied provenance per seed (used for product
// fragments whose seeds are twisted products of pairs of another fragment).
struct seeded_pair {
    bp_pair value;
    std::string rule = "seed";
    int parent1 = -1;
    int parent2 = -1;
};
congruence_fragment fragment_saturate_seeded(int arity,
                                             const std::vector<seeded_pair>& seeds,
                                             int degree_bound, fragment_caps caps = {});

enum class membership { proven, inconclusive };

struct membership_verdict {
    membership verdict = membership::inconclusive;
    std::vector<std::string> derivation;  // one step per line, parents first
};

// Proven iff the pair is diagonal or stored in the fragment; the derivation
// lists every step back to the seeds.  For fragments with "twist" seeds,
// pass the fragment those twist parents index into.
membership_verdict fragment_member(const congruence_fragment& frag, const bool_poly& a,
                                   const bool_poly& b,
                                   const congruence_fragment* twist_source = nullptr);

// The product congruence C.C for C = <(x,y)> on B[x,y], approximated at a
// degree bound: a fragment of C is saturated first, then the product
// fragment is seeded with twisted products of its pairs and saturated.
struct cd_example_result {
    congruence_fragment base;     // fragment of C
    congruence_fragment product;  // fragment of C.C; twist parents index base
};
cd_example_result cd_product_fragment(int degree_bound, fragment_caps caps = {},
                                      int seed_budget = 5000);

}  // namespace idem
