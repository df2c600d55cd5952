#ifndef COX_PRESENTATION_HPP_
#define COX_PRESENTATION_HPP_

#include <string>
#include <string_view>

#include "cox/matrix.hpp"
#include "cox/word.hpp"

namespace cox {

// Text DSL:
//
//   gen s t u
//   m s t = 2
//
// First a `gen` line naming the generators, then zero or more `m` lines with
// finite labels k >= 2; every pair not listed has label infinity.  Blank
// lines and lines starting with '#' are ignored.
//
// JSON alternative: {"generators":[...], "orders":[[...]]} with 0 encoding
// infinity and 1 on the diagonal.
//
// parse_presentation sniffs the format (leading '{' selects JSON).
MatrixPtr parse_presentation(std::string_view text);
MatrixPtr load_presentation(const std::string& path);

std::string to_dsl(const CoxeterMatrix& m);
std::string to_json_presentation(const CoxeterMatrix& m);

// Comma-separated generator names -> word ("s,t,s"); empty string or "e" is
// the identity.  Throws ParseError on unknown names.
Word parse_word(const CoxeterMatrix& m, std::string_view text);

// Inverse of parse_word on canonical names; identity prints as "e".
std::string format_word(const CoxeterMatrix& m, const Word& w);

}  // namespace cox

#endif  // COX_PRESENTATION_HPP_
