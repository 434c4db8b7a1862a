// compose.hpp -- serial (cascade) composition, reachable trimming, and
// alphabet relabeling
#pragma once

#include <span>

#include "mealy/machine.hpp"

namespace mealy {

/// Cascade composition: feeds the output of `first` into `second`.
/// Requires every output symbol of `first` to exist in `second`'s input
/// alphabet. States are pairs (q2, q1) ordered by (second index, first
/// index); the result satisfies run(result, u) = run(second, run(first, u))
/// on every word. Callers opt into trim() separately.
InitialMachine cascade(const InitialMachine& first, const InitialMachine& second);

/// Restriction to the states reachable from the start. Same denoted
/// function; retained states keep their relative declaration order.
InitialMachine trim(const InitialMachine& im);

/// Alphabet relabeling along a bijection phi: A -> B, for machines with
/// input alphabet == output alphabet. phi[a] is the target symbol of a;
/// the result acts on B* as phi . f . phi^-1 acts.
InitialMachine relabel(const InitialMachine& im, const Alphabet& target,
                       std::span<const Sym> phi);

}  // namespace mealy
