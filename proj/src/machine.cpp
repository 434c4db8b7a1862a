#include "mealy/machine.hpp"

#include <algorithm>
#include <deque>

#include "mealy/error.hpp"

namespace mealy {

Machine::Machine(std::string name, Alphabet input, Alphabet output,
                 std::vector<std::string> states, std::vector<State> next,
                 std::vector<Sym> emit)
    : name_(std::move(name)),
      input_(std::move(input)),
      output_(std::move(output)),
      states_(std::move(states)),
      next_(std::move(next)),
      emit_(std::move(emit)) {
  if (input_.size() == 0) fail(errc::empty_alphabet, "input alphabet is empty");
  if (output_.size() == 0) fail(errc::empty_alphabet, "output alphabet is empty");
  if (states_.empty()) fail(errc::empty_alphabet, "state set is empty");
  const std::size_t cells = states_.size() * input_.size();
  if (next_.size() != cells || emit_.size() != cells)
    fail(errc::missing_transition, "transition tables are not total");
  for (State t : next_)
    if (t >= states_.size()) fail(errc::unknown_state, "transition target out of range");
  for (Sym b : emit_)
    if (b >= output_.size()) fail(errc::unknown_symbol, "output symbol out of range");
  for (State q = 0; q < states_.size(); ++q) {
    if (states_[q].empty()) fail(errc::parse_error, "empty state name");
    auto [_, fresh] = state_index_.emplace(states_[q], q);
    if (!fresh) fail(errc::duplicate_symbol, "duplicate state name '" + states_[q] + "'");
  }
}

std::optional<State> Machine::state_index(std::string_view name) const {
  auto it = state_index_.find(std::string(name));
  if (it == state_index_.end()) return std::nullopt;
  return it->second;
}

void Machine::check(State q, Sym a) const {
  if (q >= states_.size())
    fail(errc::unknown_state, "state index out of range in machine " + name_);
  if (a >= input_.size())
    fail(errc::unknown_symbol, "input symbol out of range in machine " + name_);
}

State Machine::next(State q, Sym a) const {
  check(q, a);
  return next_[q * input_.size() + a];
}

Sym Machine::emit(State q, Sym a) const {
  check(q, a);
  return emit_[q * input_.size() + a];
}

std::pair<State, Sym> Machine::step(State q, Sym a) const {
  check(q, a);
  const std::size_t i = q * input_.size() + a;
  return {next_[i], emit_[i]};
}

bool Machine::output_surjective() const {
  std::vector<bool> hit(output_.size(), false);
  for (Sym b : emit_) hit[b] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

Machine Machine::renamed(std::string name) const {
  Machine copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool Machine::operator==(const Machine& other) const {
  return name_ == other.name_ && input_ == other.input_ &&
         output_ == other.output_ && states_ == other.states_ &&
         next_ == other.next_ && emit_ == other.emit_;
}

Machine validate(const RawMachine& raw) {
  if (raw.inputs.empty()) fail(errc::empty_alphabet, "input alphabet is empty");
  if (raw.outputs.empty()) fail(errc::empty_alphabet, "output alphabet is empty");
  if (raw.states.empty()) fail(errc::empty_alphabet, "state set is empty");

  Alphabet input(raw.inputs);
  Alphabet output(raw.outputs);
  std::unordered_map<std::string, State> state_of;
  for (State q = 0; q < raw.states.size(); ++q) {
    auto [_, fresh] = state_of.emplace(raw.states[q], q);
    if (!fresh) fail(errc::duplicate_symbol, "duplicate state name '" + raw.states[q] + "'");
  }

  const std::size_t cells = raw.states.size() * input.size();
  std::vector<State> next(cells, 0);
  std::vector<Sym> emit(cells, 0);
  std::vector<bool> seen(cells, false);

  auto where = [](const RawRow& row) {
    return row.line ? " at line " + std::to_string(row.line) : std::string{};
  };

  for (const RawRow& row : raw.rows) {
    auto qit = state_of.find(row.state);
    if (qit == state_of.end())
      fail(errc::unknown_state, "unknown state '" + row.state + "'" + where(row));
    auto a = input.find(row.input);
    if (!a)
      fail(errc::unknown_symbol, "unknown input symbol '" + row.input + "'" + where(row));
    auto tit = state_of.find(row.next);
    if (tit == state_of.end())
      fail(errc::unknown_state, "unknown target state '" + row.next + "'" + where(row));
    auto b = output.find(row.output);
    if (!b)
      fail(errc::unknown_symbol, "unknown output symbol '" + row.output + "'" + where(row));
    const std::size_t i = qit->second * input.size() + *a;
    if (seen[i])
      fail(errc::duplicate_row,
           "duplicate transition row for (" + row.state + ", " + row.input + ")" + where(row));
    seen[i] = true;
    next[i] = tit->second;
    emit[i] = *b;
  }

  for (State q = 0; q < raw.states.size(); ++q)
    for (Sym a = 0; a < input.size(); ++a)
      if (!seen[q * input.size() + a])
        fail(errc::missing_transition, "missing transition for (" + raw.states[q] + ", " +
                                           input.name(a) + ")");

  return Machine(raw.name, std::move(input), std::move(output), raw.states,
                 std::move(next), std::move(emit));
}

InitialMachine::InitialMachine(Machine m, State s) : machine(std::move(m)), start(s) {
  if (start >= machine.state_count())
    fail(errc::unknown_state, "start state out of range in machine " + machine.name());
}

RunResult run(const InitialMachine& im, const Word& u) {
  State q = im.start;
  Word out;
  for (Sym a : u) {
    auto [next, b] = im.machine.step(q, a);
    out.push_back(b);
    q = next;
  }
  return {q, std::move(out)};
}

Word run_output(const Machine& m, State q, const Word& u) {
  Word out;
  for (Sym a : u) {
    auto [next, b] = m.step(q, a);
    out.push_back(b);
    q = next;
  }
  return out;
}

State run_state(const Machine& m, State q, const Word& u) {
  for (Sym a : u) q = m.next(q, a);
  return q;
}

Word run_up(const InitialMachine& im, const UPWord& x, std::size_t n) {
  return run(im, x.prefix(n)).output;
}

std::vector<State> reachable_states(const InitialMachine& im) {
  const Machine& m = im.machine;
  std::vector<bool> seen(m.state_count(), false);
  std::deque<State> queue{im.start};
  seen[im.start] = true;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (Sym a = 0; a < m.input().size(); ++a) {
      State t = m.next(q, a);
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  std::vector<State> out;
  for (State q = 0; q < m.state_count(); ++q)
    if (seen[q]) out.push_back(q);
  return out;
}

}  // namespace mealy
