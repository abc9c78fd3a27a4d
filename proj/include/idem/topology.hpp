#pragma once

// Finite topological spaces represented by their full lattice of open sets,
// plus the constructions the spectral-space tests rely on: generation from a
// subbasis, the four-part spectrality check, patch topology, hull-kernel
// spaces over set families, and homeomorphism search.

#include <optional>
#include <string>
#include <vector>

#include "idem/common.hpp"

namespace idem {

struct finite_space {
    std::vector<std::string> point_names;
    // Every open set, in canonical order; always contains {} and the full set.
    std::vector<bits> opens;

    int size() const { return static_cast<int>(point_names.size()); }
    bool is_open(const bits& u) const;
    bool is_closed(const bits& c) const;
    // Smallest closed superset: complement of the union of opens missing s.
    bits closure(const bits& s) const;
    bits closure_of_point(int p) const;
    // Specialization order: leq(x, y) iff y lies in the closure of {x},
    // equivalently every open containing y contains x.
    bool leq(int x, int y) const;
};

// Must hold for every space handled here; throws validation_error otherwise.
void validate_space(const finite_space& s);

// The topology generated by an arbitrary family of subsets: close under
// finite intersection (giving a basis), then under union.
finite_space space_from_subbasis(std::vector<std::string> point_names,
                                 const std::vector<bits>& subbasis);

// A spectral space is quasi-compact, T0, has a basis of quasi-compact opens
// closed under finite intersection, and is sober.  In a finite space every
// subset is quasi-compact, so the first and third conditions hold by
// finiteness; T0 and sobriety are checked exhaustively.
struct spectral_report {
    bool t0 = false;
    bool quasi_compact = false;
    bool qc_open_basis = false;
    bool sober = false;
    std::string detail;  // witness description when some check fails
    bool spectral() const { return t0 && quasi_compact && qc_open_basis && sober; }
};

spectral_report check_spectral(const finite_space& s);
bool is_spectral(const finite_space& s);

// Topology generated by the original opens together with all closed sets.
finite_space patch_topology(const finite_space& s);

// Hull-kernel space of a family of subsets of {0..carrier-1}: one point per
// family member, with subbasic opens {member : x not in member} for each
// carrier element x.  (Opens cut out by larger test sets F are unions of
// these, so the singleton subbasis generates the same topology.)
finite_space hull_kernel_space(const std::vector<bits>& family,
                               const std::vector<std::string>& member_names);

// Exhaustive homeomorphism search (point bijection carrying opens onto
// opens).  Guarded to at most 8 points per space; throws capability_error
// beyond that.
std::optional<std::vector<int>> find_homeomorphism(const finite_space& a,
                                                   const finite_space& b);

// True iff the two spaces have identical point count and open families
// (up to point order given by the identity; use find_homeomorphism for
// relabelings).
bool same_topology(const finite_space& a, const finite_space& b);

}  // namespace idem
