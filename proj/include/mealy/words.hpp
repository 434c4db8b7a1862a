// words.hpp -- finite words, ultimately periodic words, and interned alphabets
#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mealy {

/// A symbol is an index into an Alphabet's declaration order.
using Sym = std::uint32_t;

/// Ordered set of symbol names. Symbols are opaque interned tokens, so
/// multi-character names ("aa", "left") work the same as single characters.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Sym s) const { return names_.at(s); }
  std::span<const std::string> names() const { return names_; }
  std::optional<Sym> find(std::string_view name) const;

  /// True when every symbol name is a single character; controls the
  /// textual word syntax (concatenated vs dot-separated).
  bool single_char() const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Sym> index_;
};

/// A finite word: a sequence of symbols. The empty word is Word{}.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Sym> syms) : syms_(std::move(syms)) {}
  Word(std::initializer_list<Sym> syms) : syms_(syms) {}

  std::size_t size() const { return syms_.size(); }
  bool empty() const { return syms_.empty(); }
  Sym operator[](std::size_t i) const { return syms_[i]; }
  auto begin() const { return syms_.begin(); }
  auto end() const { return syms_.end(); }
  const std::vector<Sym>& symbols() const { return syms_; }

  void push_back(Sym s) { syms_.push_back(s); }
  Word& operator+=(const Word& w);
  friend Word operator+(Word u, const Word& v) { return u += v; }

  /// First min(n, size) symbols.
  Word take(std::size_t n) const;
  /// All symbols after the first n.
  Word drop(std::size_t n) const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Sym> syms_;
};

/// True iff there exists w' with u.w' = w.
bool is_prefix(const Word& u, const Word& w);

/// Shortlex order: by length, then lexicographically.
bool length_lex_less(const Word& a, const Word& b);

/// The infinite word u.v^omega, represented by its anti-period u and
/// period v (|v| >= 1). Finite words are deliberately a separate type.
class UPWord {
 public:
  UPWord(Word preperiod, Word period);

  const Word& preperiod() const { return pre_; }
  const Word& period() const { return period_; }

  /// The first n symbols of u.v^omega.
  Word prefix(std::size_t n) const;

 private:
  Word pre_;
  Word period_;
};

/// Textual word syntax: symbols concatenated when the alphabet is all
/// single characters, dot-separated otherwise. An ultimately periodic
/// word is written "u:v" (":01" is (01)^omega).
Word parse_word(const Alphabet& alphabet, std::string_view text);
std::string format_word(const Alphabet& alphabet, const Word& w);
UPWord parse_up_word(const Alphabet& alphabet, std::string_view text);
std::string format_up_word(const Alphabet& alphabet, const UPWord& x);

/// All words of length <= maxlen over the alphabet, in shortlex order.
std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t maxlen);

}  // namespace mealy
