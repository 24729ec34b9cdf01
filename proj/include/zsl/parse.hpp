#pragma once

#include <string>

#include "zsl/group.hpp"
#include "zsl/sequence.hpp"

namespace zsl {

// Text grammar, '*'-separated terms:
//   sequence := term ('*' term)*
//   term     := element | element '^[' count ']' | '(' element ')' '^[' count ']'
//   element  := '1' | 'x' | 'y' | 'y^' int | 'x*y' | 'x*y^' int
// Example: "(y^3)^[7] * x*y^2".
//
// The '*' inside "x*y^2" is resolved greedily: after an 'x', a directly
// following "* y..." is merged into a single element. Write "x * (y)" to keep
// an x term and a y term separate. Exponents reduce mod n. Whitespace is
// ignored everywhere; empty input is the empty sequence.
Sequence parse_sequence_text(const std::string& text, const Group& g);

// JSON form: array of objects {"a": 0|1, "b": int, "mult": count >= 0},
// mult defaulting to 1. b reduces mod n.
Sequence parse_sequence_json(const std::string& text, const Group& g);

// Dispatches on the first non-space character: '[' selects the JSON form.
Sequence parse_sequence(const std::string& text, const Group& g);

// Canonical text: elements in index order, "(name)^[m]" when m > 1, bare
// name otherwise. Index order puts every y-power before every x term, so the
// output never contains the ambiguous "x * y" juxtaposition and reparsing
// always reproduces the sequence.
std::string format_sequence(const Sequence& s, const Group& g);

// JSON array of {a, b, mult} in element index order.
std::string sequence_to_json(const Sequence& s, const Group& g);

// "metacyclic:n=<N>,s=<S>" or "cyclic:m=<M>".
Group parse_group_spec(const std::string& spec);

}  // namespace zsl
