// io.hpp -- machine file format, function-table files, and DOT emission
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "mealy/algebra.hpp"
#include "mealy/machine.hpp"
#include "mealy/seqfn.hpp"

namespace mealy {

struct ParsedMachine {
  Machine machine;
  std::optional<State> start;
};

/// Machine file format (UTF-8, LF, '#' comments):
///
///   machine V12
///   in: 0 1
///   out: 0 1
///   states: q0 q1
///   start: q0          # optional
///   q0 0 -> q1 / 1
///   ...
///
/// Every (state, input) pair appears exactly once; duplicates are a parse
/// error. parse(emit(m)) == m, and emit(parse(text)) is the normalized
/// form (declaration-order rows, single spaces).
ParsedMachine parse_machine_text(std::string_view text);
ParsedMachine load_machine_file(const std::string& path);
std::string emit_machine_text(const Machine& m, std::optional<State> start,
                              std::string_view comment = {});
void save_machine_file(const std::string& path, const Machine& m, std::optional<State> start,
                       std::string_view comment = {});

/// A finite sequential-function table: `alphabet:` header plus lines
/// `u -> v` with |u| == |v|, total over all nonempty words up to the
/// table's depth.
struct FnTable {
  Alphabet alphabet;
  std::size_t depth = 0;
  std::map<Word, Word> map;
};

FnTable parse_fn_table(std::string_view text);
FnTable load_fn_file(const std::string& path);

/// Oracle backed by a table; probing past the table depth throws
/// probe_too_deep.
SeqFn table_fn(const FnTable& table);

/// DOT digraph of a machine; arcs labeled "a/b", deterministic order.
std::string machine_dot(const Machine& m, std::optional<State> start);

/// DOT digraph of the left-multiplication Cayley graph of a finite
/// enumeration: one node per element, one arc per (generator, element).
std::string cayley_dot(const Machine& m, const SemigroupResult& result);

}  // namespace mealy
