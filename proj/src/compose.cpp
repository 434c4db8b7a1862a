#include "mealy/compose.hpp"

#include <algorithm>

#include "mealy/error.hpp"

namespace mealy {

InitialMachine cascade(const InitialMachine& first, const InitialMachine& second) {
  const Machine& f = first.machine;
  const Machine& s = second.machine;

  // B of the first machine must embed in A' of the second, matched by name.
  std::vector<Sym> into(f.output().size());
  for (Sym b = 0; b < f.output().size(); ++b) {
    auto a2 = s.input().find(f.output().name(b));
    if (!a2)
      fail(errc::alphabet_mismatch, "output symbol '" + f.output().name(b) + "' of " +
                                        f.name() + " is not an input symbol of " + s.name());
    into[b] = *a2;
  }

  const std::size_t n1 = f.state_count();
  const std::size_t n2 = s.state_count();
  const std::size_t na = f.input().size();

  std::vector<std::string> states(n1 * n2);
  std::vector<State> next(n1 * n2 * na);
  std::vector<Sym> emit(n1 * n2 * na);

  auto id = [n1](State q2, State q1) { return static_cast<State>(q2 * n1 + q1); };

  for (State q2 = 0; q2 < n2; ++q2)
    for (State q1 = 0; q1 < n1; ++q1) {
      states[id(q2, q1)] = "(" + s.state_name(q2) + "," + f.state_name(q1) + ")";
      for (Sym a = 0; a < na; ++a) {
        auto [t1, b] = f.step(q1, a);
        auto [t2, c] = s.step(q2, into[b]);
        next[id(q2, q1) * na + a] = id(t2, t1);
        emit[id(q2, q1) * na + a] = c;
      }
    }

  Machine product(f.name() + ">" + s.name(), f.input(), s.output(), std::move(states),
                  std::move(next), std::move(emit));
  return InitialMachine(std::move(product), id(second.start, first.start));
}

InitialMachine trim(const InitialMachine& im) {
  const Machine& m = im.machine;
  std::vector<State> keep = reachable_states(im);
  if (keep.size() == m.state_count()) return im;

  std::vector<State> remap(m.state_count(), 0);
  for (State i = 0; i < keep.size(); ++i) remap[keep[i]] = i;

  const std::size_t na = m.input().size();
  std::vector<std::string> states;
  std::vector<State> next(keep.size() * na);
  std::vector<Sym> emit(keep.size() * na);
  states.reserve(keep.size());
  for (State i = 0; i < keep.size(); ++i) {
    states.push_back(m.state_name(keep[i]));
    for (Sym a = 0; a < na; ++a) {
      auto [t, b] = m.step(keep[i], a);
      next[i * na + a] = remap[t];
      emit[i * na + a] = b;
    }
  }

  Machine trimmed(m.name(), m.input(), m.output(), std::move(states), std::move(next),
                  std::move(emit));
  return InitialMachine(std::move(trimmed), remap[im.start]);
}

InitialMachine relabel(const InitialMachine& im, const Alphabet& target,
                       std::span<const Sym> phi) {
  const Machine& m = im.machine;
  if (!(m.input() == m.output()))
    fail(errc::alphabet_mismatch,
         "relabeling needs input alphabet == output alphabet in machine " + m.name());
  if (phi.size() != m.input().size() || target.size() != m.input().size())
    fail(errc::not_a_bijection, "relabeling map must be a bijection onto the target alphabet");
  std::vector<bool> hit(target.size(), false);
  for (Sym image : phi) {
    if (image >= target.size() || hit[image])
      fail(errc::not_a_bijection, "relabeling map must be a bijection onto the target alphabet");
    hit[image] = true;
  }

  const std::size_t na = m.input().size();
  std::vector<State> next(m.state_count() * na);
  std::vector<Sym> emit(m.state_count() * na);
  for (State q = 0; q < m.state_count(); ++q)
    for (Sym a = 0; a < na; ++a) {
      auto [t, b] = m.step(q, a);
      next[q * na + phi[a]] = t;
      emit[q * na + phi[a]] = phi[b];
    }

  std::vector<std::string> states(m.state_names().begin(), m.state_names().end());
  Machine relabeled(m.name() + "_rl", target, target, std::move(states), std::move(next),
                    std::move(emit));
  return InitialMachine(std::move(relabeled), im.start);
}

}  // namespace mealy
