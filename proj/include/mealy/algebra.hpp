// algebra.hpp -- canonical element forms for the functions a machine's
// states generate, enumeration of the machine (semi)group with Cayley
// table, element order, and orbit-based infiniteness lower bounds
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mealy/invert.hpp"
#include "mealy/machine.hpp"
#include "mealy/parallel.hpp"

namespace mealy {

/// Canonical form of the function an initial machine denotes: trimmed,
/// states merged by the coarsest output-respecting congruence, then
/// renumbered breadth-first from the start with arcs in alphabet order.
/// Two canonical forms have equal tables iff the functions are equal;
/// canonicalization is idempotent.
InitialMachine canonicalize(const InitialMachine& im);

/// Structural identity key of a canonical machine (alphabets + tables;
/// machine and state names are ignored). Equal keys == equal functions,
/// for machines produced by canonicalize.
std::string canon_key(const InitialMachine& im);

/// A (semi)group element: its canonical machine plus the shortlex-least
/// generator word that produces it.
struct ElementCanon {
  InitialMachine machine;
  GenWord witness;
};

/// Canonical form of the composite action of a nonempty generator word,
/// letters applied left to right. Requires input alphabet == output
/// alphabet; inverse letters require an invertible machine.
ElementCanon element(const Machine& m, const GenWord& word);

struct SemigroupOptions {
  std::size_t max_elems = 10000;
  std::size_t max_len = 64;
  bool signed_gens = false;  // generate over Q u Q^-1 (machine group)
  exec mode = exec::parallel;
};

/// Result of the breadth-first enumeration. `finite` is only reported when
/// a whole word-length level added no new element and the product table
/// closed; any tripped bound yields `lower_bound_only` instead. Elements
/// are ordered by (witness length, witness lexicographic) and the whole
/// result is deterministic for fixed inputs and bounds.
struct SemigroupResult {
  enum class Status { finite, lower_bound_only };
  Status status = Status::lower_bound_only;
  std::vector<ElementCanon> elements;
  // table[i][j] = index of (element i followed by element j); only when finite.
  std::vector<std::vector<std::uint32_t>> table;
  bool signed_gens = false;
};

SemigroupResult enumerate_semigroup(const Machine& m, const SemigroupOptions& opts);

/// Index of the element whose canonical machine matches, if enumerated.
std::optional<std::uint32_t> find_element(const SemigroupResult& r, const InitialMachine& canon);

/// o(a): the number of distinct positive powers of element `index`.
/// Requires a finite result.
std::size_t element_order(const SemigroupResult& r, std::uint32_t index);

/// Applies each pattern word to the length-(2k+2) prefix of x (k = number
/// of patterns) and counts pairwise-distinct outputs. Distinct outputs
/// certify distinct elements, so the count is a lower bound on the size of
/// the generated semigroup.
std::size_t orbit_witness(const Machine& m, std::span<const GenWord> patterns, const UPWord& x);

}  // namespace mealy
