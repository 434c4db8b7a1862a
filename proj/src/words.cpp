#include "mealy/words.hpp"

#include <algorithm>

#include "mealy/error.hpp"

namespace mealy {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (Sym i = 0; i < names_.size(); ++i) {
    if (names_[i].empty())
      fail(errc::parse_error, "empty symbol name in alphabet");
    auto [_, fresh] = index_.emplace(names_[i], i);
    if (!fresh)
      fail(errc::duplicate_symbol, "duplicate symbol '" + names_[i] + "' in alphabet");
  }
}

std::optional<Sym> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Alphabet::single_char() const {
  return std::all_of(names_.begin(), names_.end(),
                     [](const std::string& n) { return n.size() == 1; });
}

Word& Word::operator+=(const Word& w) {
  syms_.insert(syms_.end(), w.syms_.begin(), w.syms_.end());
  return *this;
}

Word Word::take(std::size_t n) const {
  n = std::min(n, syms_.size());
  return Word(std::vector<Sym>(syms_.begin(), syms_.begin() + n));
}

Word Word::drop(std::size_t n) const {
  n = std::min(n, syms_.size());
  return Word(std::vector<Sym>(syms_.begin() + n, syms_.end()));
}

bool is_prefix(const Word& u, const Word& w) {
  if (u.size() > w.size()) return false;
  return std::equal(u.begin(), u.end(), w.begin());
}

bool length_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

UPWord::UPWord(Word preperiod, Word period)
    : pre_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty())
    fail(errc::empty_word, "ultimately periodic word needs a nonempty period");
}

Word UPWord::prefix(std::size_t n) const {
  Word out = pre_.take(n);
  while (out.size() < n) out.push_back(period_[(out.size() - pre_.size()) % period_.size()]);
  return out;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Word out;
  if (text.empty()) return out;
  if (text.find('.') != std::string_view::npos || !alphabet.single_char()) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t dot = text.find('.', pos);
      std::string_view tok = text.substr(pos, dot == std::string_view::npos ? dot : dot - pos);
      auto s = alphabet.find(tok);
      if (!s) fail(errc::unknown_symbol, "unknown symbol '" + std::string(tok) + "' in word");
      out.push_back(*s);
      if (dot == std::string_view::npos) break;
      pos = dot + 1;
    }
    return out;
  }
  for (char c : text) {
    auto s = alphabet.find(std::string_view(&c, 1));
    if (!s) fail(errc::unknown_symbol, std::string("unknown symbol '") + c + "' in word");
    out.push_back(*s);
  }
  return out;
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
  std::string out;
  bool dots = !alphabet.single_char();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (dots && i > 0) out += '.';
    out += alphabet.name(w[i]);
  }
  return out;
}

UPWord parse_up_word(const Alphabet& alphabet, std::string_view text) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    fail(errc::parse_error, "ultimately periodic word must be written 'u:v'");
  return UPWord(parse_word(alphabet, text.substr(0, colon)),
                parse_word(alphabet, text.substr(colon + 1)));
}

std::string format_up_word(const Alphabet& alphabet, const UPWord& x) {
  return format_word(alphabet, x.preperiod()) + ":" + format_word(alphabet, x.period());
}

std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t maxlen) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= maxlen; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (Sym a = 0; a < alphabet.size(); ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    level_begin = level_end;
  }
  return out;
}

}  // namespace mealy
