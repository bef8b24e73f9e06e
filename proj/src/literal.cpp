#include "ringlab/literal.hpp"

#include <cctype>

#include "ringlab/error.hpp"
#include "ringlab/matrix.hpp"

namespace ringlab {

void LiteralScanner::skip_space() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool LiteralScanner::at_end() {
  skip_space();
  return pos_ >= text_.size();
}

char LiteralScanner::peek() {
  skip_space();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool LiteralScanner::accept(char c) {
  if (peek() != c) return false;
  ++pos_;
  return true;
}

void LiteralScanner::expect(char c) {
  if (!accept(c)) fail("unexpected input", {std::string(1, c)});
}

bool LiteralScanner::starts_integer() {
  const char c = peek();
  if (std::isdigit(static_cast<unsigned char>(c))) return true;
  if ((c == '-' || c == '+') && pos_ + 1 < text_.size()) {
    return std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) != 0;
  }
  return false;
}

mpz_class LiteralScanner::integer() {
  bool negative = false;
  if (accept('-')) {
    negative = true;
  } else {
    accept('+');
  }
  // No whitespace between sign and digits is required; accept either.
  skip_space();
  const std::size_t start = pos_;
  while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  if (start == pos_) fail("expected an integer", {"digit"});
  mpz_class v(std::string(text_.substr(start, pos_ - start)), 10);
  return negative ? mpz_class(-v) : v;
}

mpq_class LiteralScanner::rational() {
  const mpz_class p = integer();
  if (!accept('/')) return mpq_class(p);
  const std::size_t at = pos_;
  const mpz_class q = integer();
  if (sgn(q) <= 0) throw ParseError("denominator must be positive", at, {"positive integer"});
  mpq_class r(p, q);
  r.canonicalize();
  return r;
}

void LiteralScanner::fail(const std::string& what, std::vector<std::string> expected) {
  skip_space();
  std::string msg = what + " at offset " + std::to_string(pos_);
  if (!expected.empty()) {
    msg += "; expected one of:";
    for (const auto& e : expected) msg += " '" + e + "'";
  }
  throw ParseError(msg, pos_, std::move(expected));
}

// value := ['+'|'-'] term { ('+'|'-') term };  term := 'w' | rational ['*' 'w']
QuadraticValue parse_quadratic_literal(LiteralScanner& in) {
  QuadraticValue acc(0);
  bool first = true;
  for (;;) {
    bool negative = false;
    if (in.accept('-')) {
      negative = true;
    } else if (!in.accept('+') && !first) {
      break;
    }
    QuadraticValue term;
    if (in.accept('w')) {
      term = QuadraticValue::w();
    } else {
      if (!std::isdigit(static_cast<unsigned char>(in.peek()))) {
        in.fail("expected a rational or w", {"digit", "w"});
      }
      const mpq_class r = in.rational();
      if (in.accept('*')) {
        in.expect('w');
        term = QuadraticValue(0, r);
      } else {
        term = QuadraticValue(r, 0);
      }
    }
    acc = negative ? acc - term : acc + term;
    first = false;
  }
  return acc;
}

Element parse_element(const Ring& ring, std::string_view text) {
  LiteralScanner in(text);
  Element e = ring.parse_literal(in);
  if (!in.at_end()) in.fail("trailing input after element", {"end of input"});
  return e;
}

std::vector<Element> parse_element_list(const Ring& ring, std::string_view text) {
  LiteralScanner in(text);
  std::vector<Element> out;
  if (in.at_end()) return out;
  do {
    out.push_back(ring.parse_literal(in));
  } while (in.accept(','));
  if (!in.at_end()) in.fail("trailing input after element list", {",", "end of input"});
  return out;
}

MatrixOverRing parse_matrix(const RingHandle& ring, std::string_view text) {
  LiteralScanner in(text);
  std::vector<std::vector<Element>> rows;
  in.expect('[');
  do {
    in.expect('[');
    std::vector<Element> row;
    do {
      row.push_back(ring->parse_literal(in));
    } while (in.accept(','));
    in.expect(']');
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw RingError(ErrorKind::DimensionMismatch, "matrix rows have different lengths");
    }
    rows.push_back(std::move(row));
  } while (in.accept(','));
  in.expect(']');
  if (!in.at_end()) in.fail("trailing input after matrix", {"end of input"});
  std::vector<Element> entries;
  for (auto& r : rows) {
    for (auto& e : r) entries.push_back(std::move(e));
  }
  return MatrixOverRing(ring, rows.size(), rows.front().size(), std::move(entries));
}

std::string format_matrix(const MatrixOverRing& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += m.ring()->format(m.at(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace ringlab
