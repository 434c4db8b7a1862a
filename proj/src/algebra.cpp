#include "mealy/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "mealy/compose.hpp"
#include "mealy/error.hpp"

namespace mealy {

namespace {

// Coarsest partition where equivalent states agree on outputs and their
// successors stay equivalent (Moore refinement to fixpoint).
std::vector<std::uint32_t> state_partition(const Machine& m) {
  const std::size_t n = m.state_count();
  const std::size_t na = m.input().size();

  std::vector<std::uint32_t> cls(n);
  {
    std::map<std::vector<Sym>, std::uint32_t> ids;
    for (State q = 0; q < n; ++q) {
      std::vector<Sym> row(na);
      for (Sym a = 0; a < na; ++a) row[a] = m.emit(q, a);
      cls[q] = ids.emplace(std::move(row), static_cast<std::uint32_t>(ids.size())).first->second;
    }
  }

  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::uint32_t> refined(n);
    for (State q = 0; q < n; ++q) {
      std::vector<std::uint32_t> sig;
      sig.reserve(na + 1);
      sig.push_back(cls[q]);
      for (Sym a = 0; a < na; ++a) sig.push_back(cls[m.next(q, a)]);
      refined[q] = ids.emplace(std::move(sig), static_cast<std::uint32_t>(ids.size())).first->second;
    }
    if (refined == cls) return cls;
    cls = std::move(refined);
  }
}

}  // namespace

InitialMachine canonicalize(const InitialMachine& im) {
  InitialMachine t = trim(im);
  const Machine& m = t.machine;
  const std::size_t na = m.input().size();

  std::vector<std::uint32_t> cls = state_partition(m);
  const std::uint32_t nclasses = *std::max_element(cls.begin(), cls.end()) + 1;

  // One representative per class for reading off the merged tables.
  std::vector<State> rep(nclasses, 0);
  std::vector<bool> have(nclasses, false);
  for (State q = 0; q < m.state_count(); ++q)
    if (!have[cls[q]]) {
      have[cls[q]] = true;
      rep[cls[q]] = q;
    }

  // Breadth-first renumbering from the start class, arcs in alphabet order.
  std::vector<std::uint32_t> order(nclasses, UINT32_MAX);
  std::deque<std::uint32_t> queue{cls[t.start]};
  order[cls[t.start]] = 0;
  std::uint32_t assigned = 1;
  while (!queue.empty()) {
    std::uint32_t c = queue.front();
    queue.pop_front();
    for (Sym a = 0; a < na; ++a) {
      std::uint32_t d = cls[m.next(rep[c], a)];
      if (order[d] == UINT32_MAX) {
        order[d] = assigned++;
        queue.push_back(d);
      }
    }
  }

  std::vector<std::string> states(nclasses);
  std::vector<State> next(nclasses * na);
  std::vector<Sym> emit(nclasses * na);
  for (std::uint32_t c = 0; c < nclasses; ++c) {
    const std::uint32_t id = order[c];
    states[id] = "s" + std::to_string(id);
    for (Sym a = 0; a < na; ++a) {
      next[id * na + a] = order[cls[m.next(rep[c], a)]];
      emit[id * na + a] = m.emit(rep[c], a);
    }
  }

  Machine canon("canon", m.input(), m.output(), std::move(states), std::move(next),
                std::move(emit));
  return InitialMachine(std::move(canon), 0);
}

std::string canon_key(const InitialMachine& im) {
  const Machine& m = im.machine;
  std::string key;
  key += std::to_string(m.state_count());
  key += '#';
  for (const std::string& s : m.input().names()) {
    key += s;
    key += ',';
  }
  key += '#';
  for (const std::string& s : m.output().names()) {
    key += s;
    key += ',';
  }
  key += '#';
  key += std::to_string(im.start);
  key += '#';
  for (State t : m.next_table()) {
    key += std::to_string(t);
    key += ',';
  }
  key += '#';
  for (Sym b : m.emit_table()) {
    key += std::to_string(b);
    key += ',';
  }
  return key;
}

namespace {

InitialMachine generator_machine(const Machine& m, const std::optional<Machine>& inv,
                                 const GenLetter& g) {
  return InitialMachine(g.inverse ? *inv : m, g.state);
}

}  // namespace

ElementCanon element(const Machine& m, const GenWord& word) {
  if (word.empty()) fail(errc::empty_word, "generator word must be nonempty");
  if (!(m.input() == m.output()))
    fail(errc::alphabet_mismatch,
         "machine " + m.name() + " needs input alphabet == output alphabet");
  std::optional<Machine> inv;
  if (std::any_of(word.begin(), word.end(), [](const GenLetter& g) { return g.inverse; }))
    inv = invert(m);

  InitialMachine acc = canonicalize(generator_machine(m, inv, word[0]));
  for (std::size_t i = 1; i < word.size(); ++i)
    acc = canonicalize(trim(cascade(acc, generator_machine(m, inv, word[i]))));
  return ElementCanon{std::move(acc), word};
}

SemigroupResult enumerate_semigroup(const Machine& m, const SemigroupOptions& opts) {
  if (!(m.input() == m.output()))
    fail(errc::alphabet_mismatch,
         "machine " + m.name() + " needs input alphabet == output alphabet");
  std::optional<Machine> inv;
  if (opts.signed_gens) inv = invert(m);

  std::vector<GenLetter> gens;
  for (State q = 0; q < m.state_count(); ++q) gens.push_back({q, false});
  if (opts.signed_gens)
    for (State q = 0; q < m.state_count(); ++q) gens.push_back({q, true});

  SemigroupResult result;
  result.signed_gens = opts.signed_gens;
  std::unordered_map<std::string, std::uint32_t> seen;
  bool capped = false;

  // Duplicates never trip the element budget; only a fresh element that
  // would exceed it does, so a semigroup that saturates inside the budget
  // is still reported finite.
  auto add_candidate = [&](InitialMachine canon, GenWord witness) -> bool {
    std::string key = canon_key(canon);
    if (seen.contains(key)) return false;
    if (result.elements.size() >= opts.max_elems) {
      capped = true;
      return false;
    }
    seen.emplace(std::move(key), static_cast<std::uint32_t>(result.elements.size()));
    result.elements.push_back({std::move(canon), std::move(witness)});
    return true;
  };

  // Level 1: the generators themselves.
  std::vector<std::uint32_t> frontier;
  for (const GenLetter& g : gens) {
    if (capped) break;
    InitialMachine canon = canonicalize(generator_machine(m, inv, g));
    if (add_candidate(std::move(canon), GenWord{g}))
      frontier.push_back(static_cast<std::uint32_t>(result.elements.size() - 1));
  }

  for (std::size_t len = 2; !capped && !frontier.empty() && len <= opts.max_len; ++len) {
    // Candidate products of this level, canonicalized in parallel and then
    // merged in (parent, generator) order so results are schedule-independent.
    const std::size_t count = frontier.size() * gens.size();
    std::vector<std::optional<InitialMachine>> canons(count);
    par::for_each_index(opts.mode, count, [&](std::size_t i) {
      const ElementCanon& parent = result.elements[frontier[i / gens.size()]];
      const GenLetter& g = gens[i % gens.size()];
      canons[i] = canonicalize(trim(cascade(parent.machine, generator_machine(m, inv, g))));
    });

    std::vector<std::uint32_t> next_frontier;
    for (std::size_t i = 0; i < count && !capped; ++i) {
      GenWord witness = result.elements[frontier[i / gens.size()]].witness;
      witness.push_back(gens[i % gens.size()]);
      if (add_candidate(std::move(*canons[i]), std::move(witness)))
        next_frontier.push_back(static_cast<std::uint32_t>(result.elements.size() - 1));
    }
    frontier = std::move(next_frontier);
  }

  if (capped || !frontier.empty()) {
    // A bound tripped while elements were still appearing.
    result.status = SemigroupResult::Status::lower_bound_only;
    return result;
  }

  // Saturated: close the product table.
  const std::size_t n = result.elements.size();
  result.table.assign(n, std::vector<std::uint32_t>(n, 0));
  std::vector<std::optional<InitialMachine>> products(n * n);
  par::for_each_index(opts.mode, n * n, [&](std::size_t i) {
    products[i] = canonicalize(
        trim(cascade(result.elements[i / n].machine, result.elements[i % n].machine)));
  });
  for (std::size_t i = 0; i < n * n; ++i) {
    auto it = seen.find(canon_key(*products[i]));
    if (it == seen.end())
      fail(errc::table_not_closed, "product table failed to close after saturation");
    result.table[i / n][i % n] = it->second;
  }
  result.status = SemigroupResult::Status::finite;
  return result;
}

std::optional<std::uint32_t> find_element(const SemigroupResult& r, const InitialMachine& canon) {
  std::string key = canon_key(canon);
  for (std::uint32_t i = 0; i < r.elements.size(); ++i)
    if (canon_key(r.elements[i].machine) == key) return i;
  return std::nullopt;
}

std::size_t element_order(const SemigroupResult& r, std::uint32_t index) {
  if (r.status != SemigroupResult::Status::finite)
    fail(errc::table_not_closed, "element order needs a finite enumeration");
  if (index >= r.elements.size()) fail(errc::unknown_state, "element index out of range");
  std::set<std::uint32_t> powers;
  std::uint32_t p = index;
  while (powers.insert(p).second) p = r.table[p][index];
  return powers.size();
}

std::size_t orbit_witness(const Machine& m, std::span<const GenWord> patterns, const UPWord& x) {
  const std::size_t n = 2 * patterns.size() + 2;
  const Word probe = x.prefix(n);
  std::set<Word> outputs;
  for (const GenWord& w : patterns) outputs.insert(act(m, w, probe));
  return outputs.size();
}

}  // namespace mealy
