#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "idem/common.hpp"
#include "idem/congruence.hpp"
#include "idem/semiring.hpp"
#include "idem/topology.hpp"

namespace idem {

// A closure operator on a finite inclusion-ordered family of sets: either
// the ideals of a carrier (bit sets of elements) or its congruences (bit
// sets of related pairs).
struct closure_operator {
    std::string name;
    std::vector<bits> domain;               // the whole poset, canonical order
    std::vector<std::string> domain_names;  // parallel labels
    std::function<bits(const bits&)> map;
};

struct axiom_report {
    bool ok = true;
    std::string failing_axiom;  // "domain" | "extension" | "idempotence" | "order"
    std::string detail;
};

// Exhaustively checks that map lands in the domain and satisfies extension,
// idempotence, and order preservation; reports the first failure found.
axiom_report verify_closure_axioms(const closure_operator& op);

// {x | exists z in I with x ~_C z}: the union of the C-classes meeting I.
bits closure_at_congruence(const finite_semiring& s, const congruence& c, const bits& i);

// {x | exists z in I with (z, x+z) in C}; a k-ideal even when I is not.
bits bracket_closure(const finite_semiring& s, const congruence& c, const bits& i);

// {x | exists z in I and n <= |S|^2+1 with (x+z)^n = z (x+z)^(n-1)}.
bits integral_elements(const finite_semiring& s, const bits& i);

struct integral_witness {
    int element;
    int z;
    int n;
};
std::vector<integral_witness> integral_witnesses(const finite_semiring& s, const bits& i);

// k-closure of the integral elements; the closure operator proper.
bits integral_closure(const finite_semiring& s, const bits& i);

// {x | exists n <= |S|+1 with x^n in I^[n]}, where I^[n] is the ideal
// generated by the n-th powers of I.  Requires the power-sum identity
// (a+b)^n = a^n + b^n on the carrier.
bits frobenius_closure(const finite_semiring& s, const bits& i);

struct frobenius_witness {
    int element;
    int n;
};
std::vector<frobenius_witness> frobenius_witnesses(const finite_semiring& s,
                                                   const bits& i);

// cl(I) = union of cl(J) over domain members J <= I: literally true on a
// finite carrier for every well-formed closure; kept as a consistency check.
bool is_finite_type(const closure_operator& op);

// Hull-kernel space on the fixed points of the operator.
finite_space fixed_point_space(const closure_operator& op);

// Builds one ideal-domain closure by name: identity | indiscrete | radical
// (domain restricted to k-ideals) | k | at-congruence | bracket | integral |
// integral-raw | frobenius.  The congruence argument is required for
// at-congruence and bracket, rejected otherwise.
closure_operator make_ideal_closure(const finite_semiring& s, const std::string& name,
                                    const std::optional<congruence>& c = std::nullopt);

// The radical on the congruence lattice as a closure operator.
closure_operator make_congruence_radical_closure(const finite_semiring& s);

// Every registered closure on the carrier: the ideal closures above (the
// congruence-parameterized ones instantiated at every congruence, frobenius
// only where the power-sum identity holds) plus the congruence radical.
std::vector<closure_operator> standard_closures(const finite_semiring& s);

}  // namespace idem
