// invert.hpp -- invertibility test, inverse-machine construction, and the
// action of signed generator words on input words
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mealy/machine.hpp"

namespace mealy {

/// True iff every state's one-letter output map a -> q*a is a permutation
/// of the alphabet. Requires input alphabet == output alphabet.
bool is_invertible(const Machine& m);

/// The inverse machine over the same state set: q *' a = b and
/// q o' a = q o b where q * b = a. For every reachable state the word maps
/// of m and invert(m) are mutually inverse.
Machine invert(const Machine& m);

/// A generator letter: a state action q, or its inverse q^-1.
struct GenLetter {
  State state;
  bool inverse = false;

  bool operator==(const GenLetter&) const = default;
  auto operator<=>(const GenLetter&) const = default;
};

using GenWord = std::vector<GenLetter>;

/// Applies the letters of w to u left to right: first letter first.
/// Inverse letters act through the inverse machine, so the machine must be
/// invertible when any appear; positive-only words work for any machine
/// with input alphabet == output alphabet.
Word act(const Machine& m, const GenWord& w, const Word& u);

/// Generator-word syntax follows the word syntax over state names, with
/// "^-1" suffixing inverted letters (e.g. "pq", "q0.q1^-1").
GenWord parse_gen_word(const Machine& m, std::string_view text);
std::string format_gen_word(const Machine& m, const GenWord& w);

}  // namespace mealy
