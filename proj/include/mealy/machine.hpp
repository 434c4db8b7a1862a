// machine.hpp -- Mealy machines: validated transition/output tables and the
// extended actions of states on words
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mealy/words.hpp"

namespace mealy {

using State = std::uint32_t;

/// One transition row of an unvalidated machine description.
struct RawRow {
  std::string state, input, next, output;
  std::size_t line = 0;  // source line for diagnostics, 0 if synthetic
};

/// Unvalidated machine description, as read from a file or built by hand.
struct RawMachine {
  std::string name;
  std::vector<std::string> inputs, outputs, states;
  std::optional<std::string> start;
  std::vector<RawRow> rows;
};

/// A Mealy machine <Q, A, B, next, emit>: total transition map Q x A -> Q
/// and total output map Q x A -> B. Immutable after construction; states
/// and symbols carry stable indices in declaration order.
///
/// Output surjectivity is a queryable property, not an invariant: the
/// (semi)group constructions work without it, so validation only flags it.
class Machine {
 public:
  Machine(std::string name, Alphabet input, Alphabet output,
          std::vector<std::string> states, std::vector<State> next,
          std::vector<Sym> emit);

  const std::string& name() const { return name_; }
  const Alphabet& input() const { return input_; }
  const Alphabet& output() const { return output_; }

  std::size_t state_count() const { return states_.size(); }
  const std::string& state_name(State q) const { return states_.at(q); }
  std::span<const std::string> state_names() const { return states_; }
  std::optional<State> state_index(std::string_view name) const;

  /// q o a (next state). Throws on out-of-range state or symbol.
  State next(State q, Sym a) const;
  /// q * a (output letter).
  Sym emit(State q, Sym a) const;
  std::pair<State, Sym> step(State q, Sym a) const;

  /// Whether the output map Q x A -> B is onto B (advisory only).
  bool output_surjective() const;

  std::span<const State> next_table() const { return next_; }
  std::span<const Sym> emit_table() const { return emit_; }

  Machine renamed(std::string name) const;

  bool operator==(const Machine& other) const;

 private:
  void check(State q, Sym a) const;

  std::string name_;
  Alphabet input_, output_;
  std::vector<std::string> states_;
  std::unordered_map<std::string, State> state_index_;
  std::vector<State> next_;  // row-major: next_[q * |A| + a]
  std::vector<Sym> emit_;
};

/// Checks a raw description against the machine invariants: nonempty sorts,
/// every (state, input) pair defined exactly once, all targets and outputs
/// declared. Returns the validated machine.
Machine validate(const RawMachine& raw);

/// A machine with a designated start state; denotes the sequential
/// function u -> start * u.
struct InitialMachine {
  Machine machine;
  State start;

  InitialMachine(Machine m, State s);
};

struct RunResult {
  State state;   // start o u
  Word output;   // start * u
};

/// Folds the word through the tables; iterative, |output| == |input|.
RunResult run(const InitialMachine& im, const Word& u);

/// q * u and q o u without wrapping the machine in an InitialMachine.
Word run_output(const Machine& m, State q, const Word& u);
State run_state(const Machine& m, State q, const Word& u);

/// Output on the length-n prefix of an ultimately periodic input.
Word run_up(const InitialMachine& im, const UPWord& x, std::size_t n);

/// States reachable from the start under the transition action, ascending.
std::vector<State> reachable_states(const InitialMachine& im);

}  // namespace mealy
