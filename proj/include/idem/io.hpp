#pragma once

// JSON document formats for every structure the command-line tool reads or
// writes, plus DOT rendering of order diagrams.  All documents are purely
// label-based: operation tables, subsets, partitions, and point maps are
// written with element names, never internal indices, so a document stays
// meaningful under any reordering of the carrier.

#include <string>

#include "json.hpp"

#include "idem/common.hpp"
#include "idem/congruence.hpp"
#include "idem/lattice.hpp"
#include "idem/semiring.hpp"
#include "idem/topology.hpp"
#include "idem/valuation.hpp"

namespace idem {

// Semiring document: {"elements": [labels], "zero": label, "one": label,
// "add": [[labels]], "mul": [[labels]]} with row-major n x n tables whose
// row index is the left operand.  Reading validates every axiom.
nlohmann::json semiring_to_doc(const finite_semiring& s);
finite_semiring semiring_from_doc(const nlohmann::json& doc);

// Space document: {"points": [labels], "opens": [[labels], ...]}.  Reading
// canonicalizes the open family and validates the topology axioms.
nlohmann::json space_to_doc(const finite_space& x);
finite_space space_from_doc(const nlohmann::json& doc);

// Lattice document: {"elements": [labels]} together with either
// "leq": [[lo, hi], ...] (order pairs; reflexive and transitive pairs may be
// omitted, the reader closes the relation) or full "join"/"meet" tables in
// the same shape as semiring tables.  Writing emits the strict order pairs.
nlohmann::json lattice_to_doc(const finite_lattice& l);
finite_lattice lattice_from_doc(const nlohmann::json& doc);

// Subsets of a carrier (ideals in particular) are arrays of labels.
nlohmann::json subset_to_doc(const finite_semiring& s, const bits& subset);
bits subset_from_doc(const finite_semiring& s, const nlohmann::json& doc);

// Congruences are arrays of blocks, each block an array of labels.
nlohmann::json congruence_to_doc(const finite_semiring& s, const congruence& c);
congruence congruence_from_doc(const finite_semiring& s, const nlohmann::json& doc);

// Valuation document: the prime partition as blocks, the quotient semiring
// tables, and the value assigned to each carrier element as a quotient
// label.  Write-only; valuations are derived data, never inputs.
nlohmann::json valuation_to_doc(const valuation_witness& v);

// "semiring" | "space" | "lattice", decided by which fields are present;
// throws parse_error when the shape matches none of them.
std::string doc_kind(const nlohmann::json& doc);

// Reads and parses a JSON document from a file; throws parse_error on
// missing files or malformed JSON.
nlohmann::json load_doc(const std::string& path);

// DOT digraphs of the covering edges only: for spaces the specialization
// order (an edge x -> y when y lies in the closure of {x} with nothing
// properly between), for lattices the Hasse diagram read upward.
std::string space_to_dot(const finite_space& x);
std::string lattice_to_dot(const finite_lattice& l);

}  // namespace idem
