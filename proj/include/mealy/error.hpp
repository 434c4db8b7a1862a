// error.hpp -- library error codes and the exception type carrying them
#pragma once

#include <stdexcept>
#include <string>

namespace mealy {

enum class errc {
  parse_error,
  empty_alphabet,
  duplicate_symbol,
  duplicate_row,
  missing_transition,
  unknown_state,
  unknown_symbol,
  alphabet_mismatch,
  not_a_bijection,
  not_invertible,
  empty_word,
  table_not_closed,
  probe_too_deep,
  search_space_too_large,
  partial_triple,
  not_regular,
  multiple_roots,
  overflow,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, std::string message) {
  throw Error(code, std::move(message));
}

}  // namespace mealy
