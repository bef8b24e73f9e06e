#pragma once

// Element and matrix literal syntax shared by the library and the CLI.
//
//   Z, Zn        integers, optionally signed ("-3"); Zn reduces mod n
//   Zi7, Qi7     "a", "b*w", "a+b*w", "a-b*w"; parts are integers (Zi7) or
//                p/q rationals (Qi7); w stands for sqrt(-7)
//   Mat, Tri     nested brackets "[[a,b],[c,d]]" with entries in base syntax
//   products     "(x, y, ...)"
//   SkewS        coefficient list, lowest degree first: "[c0, c1, ...]"
//
// A bare integer is accepted for every ring and denotes n * 1.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/element.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

class MatrixOverRing;

/// Cursor over literal text. Whitespace is skipped before every token.
/// Errors are raised as ParseError carrying the byte offset.
class LiteralScanner {
 public:
  explicit LiteralScanner(std::string_view text) : text_(text) {}

  std::size_t offset() const { return pos_; }
  bool at_end();
  char peek();
  bool accept(char c);
  void expect(char c);
  bool starts_integer();
  mpz_class integer();
  /// p or p/q, canonicalized.
  mpq_class rational();
  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected);

 private:
  void skip_space();

  std::string_view text_;
  std::size_t pos_ = 0;
};

/// "a+b*w" style value in Q(sqrt(-7)).
QuadraticValue parse_quadratic_literal(LiteralScanner& in);

Element parse_element(const Ring& ring, std::string_view text);

/// Comma-separated elements; commas nested inside brackets or parentheses
/// belong to the element.
std::vector<Element> parse_element_list(const Ring& ring, std::string_view text);

/// "[[a,b],[c,d]]" with entries in the syntax of `ring`.
MatrixOverRing parse_matrix(const RingHandle& ring, std::string_view text);

std::string format_matrix(const MatrixOverRing& m);

}  // namespace ringlab
