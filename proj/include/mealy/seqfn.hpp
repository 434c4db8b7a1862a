// seqfn.hpp -- sequential functions as black-box oracles: axiom checks,
// quotient exploration, machine synthesis, and the regular-rooted-tree view
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mealy/machine.hpp"

namespace mealy {

/// A black-box word function f: A* -> B*. Oracles must be pure; every
/// verdict produced from one is relative to the probed depth.
struct SeqFn {
  Alphabet input;
  Alphabet output;
  std::function<Word(const Word&)> eval;
  std::string label;
};

/// The function u -> start * u of an initial machine.
SeqFn machine_fn(const InitialMachine& im);

struct SeqCounterexample {
  Word u, v;  // u is a prefix of v but the axiom fails on (u, v)
};

/// Checks both sequential-function axioms (length preservation and prefix
/// preservation) on every word of length <= depth.
std::optional<SeqCounterexample> sequential_violation(const SeqFn& f, std::size_t depth);
bool check_sequential(const SeqFn& f, std::size_t depth);

/// The quotient f_u: v -> the length-|v| suffix of f(uv).
SeqFn quotient(const SeqFn& f, const Word& u);

/// Result of a breadth-first exploration of the quotients of f, with
/// quotients compared by exhaustive probing to the stated depth.
/// Representative words are shortlex-minimal. closed == false means the
/// state budget ran out before the table closed ("not determined").
struct QuotientTable {
  std::size_t depth = 0;
  std::vector<Word> reps;
  std::vector<std::vector<std::uint32_t>> next;  // next[r][a], index into reps
  std::vector<std::vector<Sym>> emit;            // emit[r][a] = f_rep(a)
  bool closed = false;
};

QuotientTable explore_quotients(const SeqFn& f, std::size_t depth, std::size_t max_states);

/// Builds the initial machine whose states are the quotient classes of the
/// table. The result agrees with f on every word of length <= table depth.
/// Throws table_not_closed when the exploration was cut off.
InitialMachine synthesize(const QuotientTable& t, const SeqFn& f);

/// p^n, the number of level-n vertices of the p-regular rooted tree.
std::uint64_t level_count(std::uint64_t arity, std::uint64_t level);

/// True iff f fixes the root and maps every arc (u, ua) with |u| < depth to
/// an arc. Agrees with check_sequential at the same depth.
bool check_endomorphism(const SeqFn& f, std::size_t depth);

/// A rooted tree given by arcs over vertex ids 0..vertices-1.
struct RootedTree {
  std::size_t vertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
};

/// Canonical labeling of an out-p-regular rooted tree: the unique-root
/// check plus a breadth-first assignment of words over {0..p-1}, children
/// taken in vertex-id order. Returns one word per vertex; arcs map to arcs
/// in both directions.
std::vector<Word> canonical_tree_labeling(const RootedTree& tree, std::size_t arity);

}  // namespace mealy
