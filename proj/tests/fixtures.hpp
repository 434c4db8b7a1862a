// fixtures.hpp -- the worked-example machines, random machine generators,
// and implementation-independent oracles shared by the test suites
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mealy/machine.hpp"
#include "mealy/seqfn.hpp"
#include "mealy/words.hpp"

namespace fixtures {

using namespace mealy;

inline Alphabet binary() { return Alphabet({"0", "1"}); }

inline Alphabet letters(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('0' + i)));
  return Alphabet(names);
}

// q o a = q + a (mod 2), q * a = q.a (mod 2). Not invertible at state 0.
inline Machine v11() {
  return Machine("V11", binary(), binary(), {"0", "1"}, {0, 1, 1, 0}, {0, 0, 0, 1});
}

// The two-state invertible machine of the worked inversion example.
inline Machine v12() {
  return Machine("V12", binary(), binary(), {"q0", "q1"}, {1, 0, 1, 0}, {1, 0, 0, 1});
}

// Its inverse, transition for transition.
inline Machine v12_prime() {
  return Machine("V12'", binary(), binary(), {"q0", "q1"}, {0, 1, 1, 0}, {1, 0, 0, 1});
}

// p complements every letter and stays put; q copies one letter and hands
// over to p. Generates the Klein four-group.
inline Machine v20() {
  return Machine("V20", binary(), binary(), {"p", "q"}, {0, 0, 0, 0}, {1, 0, 0, 1});
}

// Binary adding machine: s adds one (LSB first), e is the identity.
inline Machine odometer() {
  return Machine("odometer", binary(), binary(), {"s", "e"}, {1, 0, 1, 1}, {1, 0, 0, 1});
}

inline Machine identity_machine(std::size_t copies = 1) {
  std::vector<std::string> states;
  std::vector<State> next;
  std::vector<Sym> emit;
  for (std::size_t q = 0; q < copies; ++q) {
    states.push_back("e" + std::to_string(q));
    for (Sym a = 0; a < 2; ++a) {
      next.push_back(static_cast<State>(q));
      emit.push_back(a);
    }
  }
  return Machine("I", binary(), binary(), std::move(states), std::move(next), std::move(emit));
}

// Two identity components with no transitions between them.
inline Machine two_component() {
  return Machine("cc", binary(), binary(), {"c0", "c1"}, {0, 0, 1, 1}, {0, 1, 0, 1});
}

// Five-state invertible machine reconstructed from the homomorphism
// case-analysis equalities; paired with its inverse it admits no machine
// homomorphism in either direction.
inline Machine v13() {
  return Machine("V13", binary(), binary(), {"q0", "q1", "q2", "q3", "q4"},
                 {2, 1, 3, 0, 1, 4, 4, 2, 2, 3}, {1, 0, 0, 1, 0, 1, 0, 1, 1, 0});
}

inline Machine random_machine(std::mt19937& rng, std::size_t nq, std::size_t na, std::size_t nb,
                              const std::string& name) {
  std::uniform_int_distribution<State> qd(0, static_cast<State>(nq - 1));
  std::uniform_int_distribution<Sym> bd(0, static_cast<Sym>(nb - 1));
  std::vector<std::string> states;
  for (std::size_t q = 0; q < nq; ++q) states.push_back("q" + std::to_string(q));
  std::vector<State> next(nq * na);
  std::vector<Sym> emit(nq * na);
  for (auto& t : next) t = qd(rng);
  for (auto& b : emit) b = bd(rng);
  return Machine(name, letters(na), letters(nb), std::move(states), std::move(next),
                 std::move(emit));
}

inline Machine random_invertible(std::mt19937& rng, std::size_t nq, std::size_t na,
                                 const std::string& name) {
  std::uniform_int_distribution<State> qd(0, static_cast<State>(nq - 1));
  std::vector<std::string> states;
  for (std::size_t q = 0; q < nq; ++q) states.push_back("q" + std::to_string(q));
  std::vector<State> next(nq * na);
  std::vector<Sym> emit(nq * na);
  for (auto& t : next) t = qd(rng);
  std::vector<Sym> perm(na);
  for (Sym a = 0; a < na; ++a) perm[a] = a;
  for (std::size_t q = 0; q < nq; ++q) {
    std::shuffle(perm.begin(), perm.end(), rng);
    for (Sym a = 0; a < na; ++a) emit[q * na + a] = perm[a];
  }
  return Machine(name, letters(na), letters(na), std::move(states), std::move(next),
                 std::move(emit));
}

// Random machine guaranteed to have some state fixed under some letter.
inline Machine random_with_fixed_point(std::mt19937& rng, std::size_t nq, std::size_t na,
                                       const std::string& name) {
  Machine m = random_machine(rng, nq, na, na, name);
  std::uniform_int_distribution<State> qd(0, static_cast<State>(nq - 1));
  std::uniform_int_distribution<Sym> ad(0, static_cast<Sym>(na - 1));
  State q = qd(rng);
  Sym a = ad(rng);
  std::vector<State> next(m.next_table().begin(), m.next_table().end());
  std::vector<Sym> emit(m.emit_table().begin(), m.emit_table().end());
  next[q * na + a] = q;
  std::vector<std::string> states(m.state_names().begin(), m.state_names().end());
  return Machine(name, m.input(), m.output(), std::move(states), std::move(next),
                 std::move(emit));
}

// Same function, different presentation: permutes the state indices and,
// when room allows, appends a redundant copy of one state.
inline InitialMachine disguise(std::mt19937& rng, const Machine& m, State start,
                               std::size_t max_states) {
  const std::size_t na = m.input().size();
  std::vector<State> perm(m.state_count());
  for (State q = 0; q < perm.size(); ++q) perm[q] = q;
  std::shuffle(perm.begin(), perm.end(), rng);

  std::size_t n = m.state_count();
  bool duplicate = n < max_states;
  std::size_t total = n + (duplicate ? 1 : 0);
  std::vector<std::string> states(total);
  std::vector<State> next(total * na);
  std::vector<Sym> emit(total * na);
  for (State q = 0; q < n; ++q) {
    states[perm[q]] = "d" + std::to_string(perm[q]);
    for (Sym a = 0; a < na; ++a) {
      next[perm[q] * na + a] = perm[m.next(q, a)];
      emit[perm[q] * na + a] = m.emit(q, a);
    }
  }
  if (duplicate) {
    // unreachable clone of a random state
    states[n] = "d" + std::to_string(n);
    std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
    State src = pick(rng);
    for (Sym a = 0; a < na; ++a) {
      next[n * na + a] = perm[m.next(src, a)];
      emit[n * na + a] = m.emit(src, a);
    }
  }
  Machine out("disguise", m.input(), m.output(), std::move(states), std::move(next),
              std::move(emit));
  return InitialMachine(std::move(out), perm[start]);
}

// Brute-force functional equality: walks every input word of length
// <= depth through both machines and compares outputs letter by letter.
// Deliberately unrelated to canonicalization.
inline bool functionally_equal(const Machine& m1, State q1, const Machine& m2, State q2,
                               std::size_t depth) {
  if (!(m1.input() == m2.input()) || !(m1.output() == m2.output())) return false;
  struct Frame {
    State a, b;
    std::size_t left;
  };
  std::vector<Frame> stack{{q1, q2, depth}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.left == 0) continue;
    for (Sym s = 0; s < m1.input().size(); ++s) {
      auto [na, oa] = m1.step(f.a, s);
      auto [nb, ob] = m2.step(f.b, s);
      if (oa != ob) return false;
      stack.push_back({na, nb, f.left - 1});
    }
  }
  return true;
}

inline bool functionally_equal(const InitialMachine& x, const InitialMachine& y,
                               std::size_t depth) {
  return functionally_equal(x.machine, x.start, y.machine, y.start, depth);
}

// The canonical out-p-regular tree to the given depth: vertex i is the
// i-th word in shortlex order, arcs (u, ua).
inline RootedTree canonical_tree(std::size_t arity, std::size_t depth) {
  std::vector<Word> words = words_up_to(letters(arity), depth);
  std::map<Word, std::uint32_t> index;
  for (std::uint32_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
  RootedTree tree;
  tree.vertices = words.size();
  for (std::uint32_t i = 0; i < words.size(); ++i) {
    if (words[i].size() == depth) continue;
    for (Sym a = 0; a < arity; ++a) {
      Word child = words[i];
      child.push_back(a);
      tree.arcs.emplace_back(i, index.at(child));
    }
  }
  return tree;
}

// Same tree with vertex ids permuted and arcs shuffled.
inline RootedTree shuffled_tree(std::mt19937& rng, std::size_t arity, std::size_t depth,
                                std::vector<std::uint32_t>* perm_out = nullptr) {
  RootedTree tree = canonical_tree(arity, depth);
  std::vector<std::uint32_t> perm(tree.vertices);
  for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [s, t] : tree.arcs) {
    s = perm[s];
    t = perm[t];
  }
  std::shuffle(tree.arcs.begin(), tree.arcs.end(), rng);
  if (perm_out) *perm_out = perm;
  return tree;
}

}  // namespace fixtures
