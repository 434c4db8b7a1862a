#include "mealy/seqfn.hpp"

#include <deque>
#include <map>

#include "mealy/error.hpp"

namespace mealy {

SeqFn machine_fn(const InitialMachine& im) {
  return SeqFn{
      im.machine.input(), im.machine.output(),
      [im](const Word& u) { return run(im, u).output; },
      im.machine.name() + "@" + im.machine.state_name(im.start),
  };
}

std::optional<SeqCounterexample> sequential_violation(const SeqFn& f, std::size_t depth) {
  // Length preservation plus prefix preservation on all parent/child pairs;
  // the latter propagates to arbitrary prefix pairs by transitivity.
  for (const Word& v : words_up_to(f.input, depth)) {
    Word fv = f.eval(v);
    if (fv.size() != v.size()) return SeqCounterexample{v, v};
    if (v.empty()) continue;
    Word u = v.take(v.size() - 1);
    if (!is_prefix(f.eval(u), fv)) return SeqCounterexample{u, v};
  }
  return std::nullopt;
}

bool check_sequential(const SeqFn& f, std::size_t depth) {
  return !sequential_violation(f, depth).has_value();
}

SeqFn quotient(const SeqFn& f, const Word& u) {
  auto eval = f.eval;
  std::size_t skip = u.size();
  return SeqFn{
      f.input, f.output,
      [eval, u, skip](const Word& v) { return eval(u + v).drop(skip); },
      f.label + "_" + std::to_string(u.size()),
  };
}

namespace {

// Probe signature of the quotient f_u: the outputs f_u(w) for all w with
// |w| <= depth, concatenated in shortlex order of w. Two quotients agree at
// this resolution iff their signatures are equal.
Word quotient_signature(const SeqFn& f, const Word& u,
                        const std::vector<Word>& probes) {
  Word sig;
  for (const Word& w : probes) sig += f.eval(u + w).drop(u.size());
  return sig;
}

}  // namespace

QuotientTable explore_quotients(const SeqFn& f, std::size_t depth, std::size_t max_states) {
  if (depth < 1) fail(errc::parse_error, "quotient exploration needs depth >= 1");
  if (max_states < 1) fail(errc::parse_error, "quotient exploration needs max_states >= 1");

  const std::vector<Word> probes = words_up_to(f.input, depth);
  const std::size_t na = f.input.size();

  QuotientTable t;
  t.depth = depth;
  std::map<Word, std::uint32_t> by_signature;

  t.reps.push_back(Word{});
  by_signature.emplace(quotient_signature(f, Word{}, probes), 0);

  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    std::uint32_t r = queue.front();
    queue.pop_front();
    const Word rep = t.reps[r];
    t.next.resize(t.reps.size());
    t.emit.resize(t.reps.size());
    t.next[r].assign(na, 0);
    t.emit[r].assign(na, 0);
    for (Sym a = 0; a < na; ++a) {
      Word child = rep;
      child.push_back(a);
      Word out = f.eval(child);
      if (out.size() != child.size())
        fail(errc::parse_error, "oracle '" + f.label + "' is not length-preserving");
      t.emit[r][a] = out[out.size() - 1];
      Word sig = quotient_signature(f, child, probes);
      auto it = by_signature.find(sig);
      if (it != by_signature.end()) {
        t.next[r][a] = it->second;
        continue;
      }
      if (t.reps.size() >= max_states) {
        t.closed = false;  // not determined at this budget
        return t;
      }
      std::uint32_t fresh = static_cast<std::uint32_t>(t.reps.size());
      by_signature.emplace(std::move(sig), fresh);
      t.reps.push_back(std::move(child));
      t.next[r][a] = fresh;
      queue.push_back(fresh);
    }
  }
  t.next.resize(t.reps.size());
  t.emit.resize(t.reps.size());
  t.closed = true;
  return t;
}

InitialMachine synthesize(const QuotientTable& t, const SeqFn& f) {
  if (!t.closed)
    fail(errc::table_not_closed, "quotient table is not closed; raise the state budget");

  const std::size_t na = f.input.size();
  std::vector<std::string> states;
  std::vector<State> next(t.reps.size() * na);
  std::vector<Sym> emit(t.reps.size() * na);
  states.reserve(t.reps.size());
  for (std::size_t r = 0; r < t.reps.size(); ++r) {
    states.push_back("s" + std::to_string(r));
    for (Sym a = 0; a < na; ++a) {
      next[r * na + a] = t.next[r][a];
      emit[r * na + a] = t.emit[r][a];
    }
  }
  Machine m("synth", f.input, f.output, std::move(states), std::move(next), std::move(emit));
  return InitialMachine(std::move(m), 0);
}

std::uint64_t level_count(std::uint64_t arity, std::uint64_t level) {
  if (arity < 1) fail(errc::parse_error, "tree arity must be >= 1");
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < level; ++i) {
    if (arity != 0 && out > UINT64_MAX / arity)
      fail(errc::overflow, "level count overflows a 64-bit counter");
    out *= arity;
  }
  return out;
}

bool check_endomorphism(const SeqFn& f, std::size_t depth) {
  if (!f.eval(Word{}).empty()) return false;  // root must map to the root
  if (depth == 0) return true;
  for (const Word& u : words_up_to(f.input, depth - 1)) {
    Word fu = f.eval(u);
    if (fu.size() != u.size()) return false;
    for (Sym a = 0; a < f.input.size(); ++a) {
      Word ua = u;
      ua.push_back(a);
      Word fua = f.eval(ua);
      // (f(u), f(ua)) must be an arc: one symbol longer, extending f(u).
      if (fua.size() != ua.size() || !is_prefix(fu, fua)) return false;
    }
  }
  return true;
}

std::vector<Word> canonical_tree_labeling(const RootedTree& tree, std::size_t arity) {
  if (arity < 1) fail(errc::parse_error, "tree arity must be >= 1");
  if (tree.vertices == 0) fail(errc::multiple_roots, "tree has no vertices");

  std::vector<std::vector<std::uint32_t>> children(tree.vertices);
  std::vector<std::uint32_t> indegree(tree.vertices, 0);
  for (auto [s, t] : tree.arcs) {
    if (s >= tree.vertices || t >= tree.vertices)
      fail(errc::parse_error, "arc endpoint out of range");
    children[s].push_back(t);
    ++indegree[t];
  }

  std::optional<std::uint32_t> root;
  for (std::uint32_t v = 0; v < tree.vertices; ++v) {
    if (indegree[v] == 0) {
      if (root) fail(errc::multiple_roots, "tree has more than one root");
      root = v;
    }
    if (indegree[v] > 1)
      fail(errc::not_regular, "vertex " + std::to_string(v) + " has indegree " +
                                  std::to_string(indegree[v]));
  }
  if (!root) fail(errc::multiple_roots, "tree has no root");

  std::vector<Word> label(tree.vertices);
  std::vector<bool> visited(tree.vertices, false);
  std::vector<std::size_t> depth_of(tree.vertices, 0);
  std::size_t max_depth = 0;

  std::deque<std::uint32_t> queue{*root};
  visited[*root] = true;
  std::size_t seen = 1;
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    auto& kids = children[v];
    if (!kids.empty() && kids.size() != arity)
      fail(errc::not_regular, "vertex " + std::to_string(v) + " has outdegree " +
                                  std::to_string(kids.size()));
    std::sort(kids.begin(), kids.end());
    for (Sym a = 0; a < kids.size(); ++a) {
      std::uint32_t c = kids[a];
      if (visited[c]) fail(errc::not_regular, "vertex " + std::to_string(c) + " revisited");
      visited[c] = true;
      ++seen;
      label[c] = label[v];
      label[c].push_back(a);
      depth_of[c] = depth_of[v] + 1;
      max_depth = std::max(max_depth, depth_of[c]);
      queue.push_back(c);
    }
  }
  if (seen != tree.vertices)
    fail(errc::not_regular, "tree has vertices unreachable from the root");
  for (std::uint32_t v = 0; v < tree.vertices; ++v)
    if (children[v].empty() && depth_of[v] != max_depth)
      fail(errc::not_regular, "leaf " + std::to_string(v) + " above the deepest level");
  return label;
}

}  // namespace mealy
