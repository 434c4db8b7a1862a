#include "mealy/io.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

#include "mealy/error.hpp"

namespace mealy {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) toks.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  fail(errc::parse_error, what + " at line " + std::to_string(line));
}

}  // namespace

ParsedMachine parse_machine_text(std::string_view text) {
  RawMachine raw;
  bool have_name = false, have_in = false, have_out = false, have_states = false;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    ++lineno;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0] == "machine") {
      if (have_name) parse_fail(lineno, "duplicate 'machine' header");
      if (toks.size() != 2) parse_fail(lineno, "expected 'machine NAME'");
      raw.name = toks[1];
      have_name = true;
      continue;
    }
    if (!have_name) parse_fail(lineno, "missing 'machine NAME' header");

    if (toks[0] == "in:") {
      if (have_in) parse_fail(lineno, "duplicate 'in:' header");
      raw.inputs.assign(toks.begin() + 1, toks.end());
      have_in = true;
      continue;
    }
    if (toks[0] == "out:") {
      if (have_out) parse_fail(lineno, "duplicate 'out:' header");
      raw.outputs.assign(toks.begin() + 1, toks.end());
      have_out = true;
      continue;
    }
    if (toks[0] == "states:") {
      if (have_states) parse_fail(lineno, "duplicate 'states:' header");
      raw.states.assign(toks.begin() + 1, toks.end());
      have_states = true;
      continue;
    }
    if (toks[0] == "start:") {
      if (raw.start) parse_fail(lineno, "duplicate 'start:' header");
      if (toks.size() != 2) parse_fail(lineno, "expected 'start: STATE'");
      raw.start = toks[1];
      continue;
    }

    if (toks.size() != 6 || toks[2] != "->" || toks[4] != "/")
      parse_fail(lineno, "expected transition row 'STATE INPUT -> STATE / OUTPUT'");
    if (!have_in || !have_out || !have_states)
      parse_fail(lineno, "transition row before in:/out:/states: headers");
    raw.rows.push_back({toks[0], toks[1], toks[3], toks[5], lineno});
  }

  if (!have_name) fail(errc::parse_error, "missing 'machine NAME' header");

  Machine m = validate(raw);
  std::optional<State> start;
  if (raw.start) {
    start = m.state_index(*raw.start);
    if (!start) fail(errc::unknown_state, "unknown start state '" + *raw.start + "'");
  }
  return ParsedMachine{std::move(m), start};
}

ParsedMachine load_machine_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_machine_text(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string emit_machine_text(const Machine& m, std::optional<State> start,
                              std::string_view comment) {
  std::string out;
  if (!comment.empty()) {
    out += "# ";
    out += comment;
    out += '\n';
  }
  out += "machine " + m.name() + "\n";
  out += "in:";
  for (const std::string& s : m.input().names()) out += " " + s;
  out += "\nout:";
  for (const std::string& s : m.output().names()) out += " " + s;
  out += "\nstates:";
  for (const std::string& s : m.state_names()) out += " " + s;
  out += "\n";
  if (start) out += "start: " + m.state_name(*start) + "\n";
  for (State q = 0; q < m.state_count(); ++q)
    for (Sym a = 0; a < m.input().size(); ++a) {
      auto [t, b] = m.step(q, a);
      out += m.state_name(q) + " " + m.input().name(a) + " -> " + m.state_name(t) + " / " +
             m.output().name(b) + "\n";
    }
  return out;
}

void save_machine_file(const std::string& path, const Machine& m, std::optional<State> start,
                       std::string_view comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::parse_error, "cannot write '" + path + "'");
  out << emit_machine_text(m, start, comment);
}

FnTable parse_fn_table(std::string_view text) {
  FnTable table;
  bool have_alphabet = false;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    ++lineno;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0] == "alphabet:") {
      if (have_alphabet) parse_fail(lineno, "duplicate 'alphabet:' header");
      table.alphabet = Alphabet(std::vector<std::string>(toks.begin() + 1, toks.end()));
      if (table.alphabet.size() == 0) fail(errc::empty_alphabet, "function table alphabet is empty");
      have_alphabet = true;
      continue;
    }
    if (!have_alphabet) parse_fail(lineno, "missing 'alphabet:' header");
    if (toks.size() != 3 || toks[1] != "->")
      parse_fail(lineno, "expected function row 'u -> v'");
    Word u = parse_word(table.alphabet, toks[0]);
    Word v = parse_word(table.alphabet, toks[2]);
    if (u.empty()) parse_fail(lineno, "function rows need a nonempty argument");
    if (u.size() != v.size()) parse_fail(lineno, "function rows need |u| == |v|");
    if (!table.map.emplace(std::move(u), std::move(v)).second)
      parse_fail(lineno, "duplicate function row");
  }

  if (!have_alphabet) fail(errc::parse_error, "missing 'alphabet:' header");
  for (const auto& [u, v] : table.map) table.depth = std::max(table.depth, u.size());
  for (const Word& u : words_up_to(table.alphabet, table.depth))
    if (!u.empty() && !table.map.contains(u))
      fail(errc::missing_transition,
           "function table is missing '" + format_word(table.alphabet, u) + "'");
  return table;
}

FnTable load_fn_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_fn_table(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

SeqFn table_fn(const FnTable& table) {
  auto map = std::make_shared<const std::map<Word, Word>>(table.map);
  std::size_t depth = table.depth;
  return SeqFn{
      table.alphabet, table.alphabet,
      [map, depth](const Word& u) {
        if (u.empty()) return Word{};
        if (u.size() > depth)
          fail(errc::probe_too_deep, "probe of length " + std::to_string(u.size()) +
                                         " exceeds table depth " + std::to_string(depth));
        auto it = map->find(u);
        if (it == map->end()) fail(errc::probe_too_deep, "word missing from function table");
        return it->second;
      },
      "table",
  };
}

std::string machine_dot(const Machine& m, std::optional<State> start) {
  std::string out = "digraph \"" + m.name() + "\" {\n";
  out += "  rankdir=LR;\n  node [shape=circle];\n";
  if (start) {
    out += "  __start [shape=point, label=\"\"];\n";
    out += "  __start -> \"" + m.state_name(*start) + "\";\n";
  }
  for (State q = 0; q < m.state_count(); ++q)
    out += "  \"" + m.state_name(q) + "\";\n";
  for (State q = 0; q < m.state_count(); ++q)
    for (Sym a = 0; a < m.input().size(); ++a) {
      auto [t, b] = m.step(q, a);
      out += "  \"" + m.state_name(q) + "\" -> \"" + m.state_name(t) + "\" [label=\"" +
             m.input().name(a) + "/" + m.output().name(b) + "\"];\n";
    }
  out += "}\n";
  return out;
}

std::string cayley_dot(const Machine& m, const SemigroupResult& result) {
  if (result.status != SemigroupResult::Status::finite)
    fail(errc::table_not_closed, "Cayley graph needs a finite enumeration");

  std::string out = "digraph \"cayley\" {\n  node [shape=box];\n";
  for (std::uint32_t i = 0; i < result.elements.size(); ++i)
    out += "  e" + std::to_string(i) + " [label=\"" +
           format_gen_word(m, result.elements[i].witness) + "\"];\n";

  std::vector<GenLetter> gens;
  for (State q = 0; q < m.state_count(); ++q) gens.push_back({q, false});
  if (result.signed_gens)
    for (State q = 0; q < m.state_count(); ++q) gens.push_back({q, true});

  for (const GenLetter& g : gens) {
    auto gi = find_element(result, element(m, GenWord{g}).machine);
    if (!gi) fail(errc::table_not_closed, "generator missing from element list");
    for (std::uint32_t x = 0; x < result.elements.size(); ++x)
      out += "  e" + std::to_string(x) + " -> e" + std::to_string(result.table[*gi][x]) +
             " [label=\"" + format_gen_word(m, GenWord{g}) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace mealy
