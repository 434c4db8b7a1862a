// morphism.hpp -- exhaustive search for machine homomorphisms and
// simulation triples over all total sort maps
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mealy/machine.hpp"
#include "mealy/parallel.hpp"

namespace mealy {

/// Total sort maps (mu1: states, mu2: inputs, mu3: outputs), as image
/// indices per source index. A verified triple satisfies
///   mu1(q o a) = mu1(q) o' mu2(a)  and  mu3(q * a) = mu1(q) *' mu2(a)
/// for every (q, a). The maps need not be injective.
struct MorphismTriple {
  std::vector<State> state_map;
  std::vector<Sym> in_map;
  std::vector<Sym> out_map;

  bool operator==(const MorphismTriple&) const = default;
};

/// First (q, a) where a triple breaks either equation; nullopt when the
/// triple is a homomorphism. Throws partial_triple on wrongly sized maps.
std::optional<std::pair<State, Sym>> homomorphism_violation(const Machine& src,
                                                            const Machine& dst,
                                                            const MorphismTriple& t);

inline bool verify_homomorphism(const Machine& src, const Machine& dst,
                                const MorphismTriple& t) {
  return !homomorphism_violation(src, dst, t).has_value();
}

struct HomSearch {
  std::optional<MorphismTriple> triple;
  std::uint64_t refuted = 0;  // candidates checked and rejected
};

/// Exhaustive scan of all candidate triples. The identity triple is tried
/// first when it is well formed; after that candidates go in lexicographic
/// order of (mu1, mu2, mu3) image tuples, and the first verifying triple
/// wins regardless of execution mode. Throws search_space_too_large when
/// the candidate count exceeds the budget.
HomSearch find_homomorphism(const Machine& src, const Machine& dst,
                            std::uint64_t budget = 100'000'000,
                            exec mode = exec::parallel);

/// Simulation maps (h1: states -> states', h2: inputs -> inputs',
/// h3: outputs' -> outputs). `by` simulates `target` at depth d when
///   q * u = h3(h1(q) *' h2(u))
/// for every target state q and every word |u| <= d, h2/h3 letterwise.
struct SimulationTriple {
  std::vector<State> state_map;
  std::vector<Sym> in_map;
  std::vector<Sym> out_map;

  bool operator==(const SimulationTriple&) const = default;
};

/// First (q, u) violating the simulation equation, checked over all words
/// 1 <= |u| <= depth; nullopt when the triple simulates to that depth.
std::optional<std::pair<State, Word>> simulation_violation(const Machine& target,
                                                           const Machine& by,
                                                           const SimulationTriple& t,
                                                           std::size_t depth);

struct SimSearch {
  std::optional<SimulationTriple> triple;
  std::uint64_t refuted = 0;
};

/// Exhaustive scan over (h1, h2, h3), identity-seeded and ordered like
/// find_homomorphism. Rejection is sound; acceptance is relative to the
/// probe depth.
SimSearch find_simulation(const Machine& target, const Machine& by, std::size_t depth,
                          std::uint64_t budget = 100'000'000, exec mode = exec::parallel);

}  // namespace mealy
