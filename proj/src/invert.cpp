#include "mealy/invert.hpp"

#include <algorithm>
#include <optional>

#include "mealy/error.hpp"

namespace mealy {

namespace {

void require_same_alphabets(const Machine& m) {
  if (!(m.input() == m.output()))
    fail(errc::alphabet_mismatch,
         "machine " + m.name() + " needs input alphabet == output alphabet");
}

std::optional<State> non_bijective_state(const Machine& m) {
  for (State q = 0; q < m.state_count(); ++q) {
    std::vector<bool> hit(m.input().size(), false);
    for (Sym a = 0; a < m.input().size(); ++a) {
      Sym b = m.emit(q, a);
      if (hit[b]) return q;
      hit[b] = true;
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_invertible(const Machine& m) {
  require_same_alphabets(m);
  return !non_bijective_state(m).has_value();
}

Machine invert(const Machine& m) {
  require_same_alphabets(m);
  if (auto q = non_bijective_state(m))
    fail(errc::not_invertible,
         "state " + m.state_name(*q) + ": letter map not a bijection");

  const std::size_t na = m.input().size();
  std::vector<State> next(m.state_count() * na);
  std::vector<Sym> emit(m.state_count() * na);
  for (State q = 0; q < m.state_count(); ++q)
    for (Sym b = 0; b < na; ++b) {
      Sym a = m.emit(q, b);  // q * b = a, so q *' a = b and q o' a = q o b
      next[q * na + a] = m.next(q, b);
      emit[q * na + a] = b;
    }

  std::vector<std::string> states(m.state_names().begin(), m.state_names().end());
  return Machine(m.name() + "'", m.input(), m.output(), std::move(states), std::move(next),
                 std::move(emit));
}

Word act(const Machine& m, const GenWord& w, const Word& u) {
  require_same_alphabets(m);
  const bool needs_inverse =
      std::any_of(w.begin(), w.end(), [](const GenLetter& g) { return g.inverse; });
  std::optional<Machine> inv;
  if (needs_inverse) inv = invert(m);

  Word cur = u;
  for (const GenLetter& g : w) {
    if (g.state >= m.state_count())
      fail(errc::unknown_state, "generator letter out of range in machine " + m.name());
    cur = run_output(g.inverse ? *inv : m, g.state, cur);
  }
  return cur;
}

GenWord parse_gen_word(const Machine& m, std::string_view text) {
  GenWord out;
  auto push = [&](std::string_view tok) {
    bool inverse = false;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      inverse = true;
      tok.remove_suffix(3);
    }
    auto q = m.state_index(tok);
    if (!q) fail(errc::unknown_state, "unknown state '" + std::string(tok) + "' in generator word");
    out.push_back({*q, inverse});
  };

  if (text.empty()) return out;

  bool single = std::all_of(m.state_names().begin(), m.state_names().end(),
                            [](const std::string& n) { return n.size() == 1; });
  if (text.find('.') == std::string_view::npos && single) {
    std::size_t i = 0;
    while (i < text.size()) {
      std::size_t len = 1;
      if (text.substr(i + 1, 3) == "^-1") len = 4;
      push(text.substr(i, len));
      i += len;
    }
    return out;
  }

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    push(text.substr(pos, dot == std::string_view::npos ? dot : dot - pos));
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return out;
}

std::string format_gen_word(const Machine& m, const GenWord& w) {
  std::vector<std::string> toks;
  toks.reserve(w.size());
  bool single = true;
  for (const GenLetter& g : w) {
    std::string t = m.state_name(g.state);
    if (g.inverse) t += "^-1";
    single = single && t.size() == 1;
    toks.push_back(std::move(t));
  }
  std::string out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (!single && i > 0) out += '.';
    out += toks[i];
  }
  return out;
}

}  // namespace mealy
