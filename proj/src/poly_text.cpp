#include "hpt/poly_text.hpp"

#include <cctype>
#include <climits>
#include <optional>
#include <sstream>

#include "hpt/errors.hpp"

namespace hpt {

namespace {

struct ParsedTerm {
  Count mult = 1;
  int sign = 1;
  std::optional<BracketAtom> atom;
  TriDegree deg;
  SourcePos where;
};

class Cursor {
 public:
  Cursor(std::string_view text, SourcePos at) : text_(text), line_(at.line), col_(at.column) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  SourcePos here() {
    skip_space();
    return {line_, col_};
  }
  [[noreturn]] void fail(const std::string& msg) {
    skip_space();
    std::string near = pos_ < text_.size() ? std::string(1, text_[pos_]) : std::string("end of input");
    throw SyntaxError(msg + " near " + (pos_ < text_.size() ? "'" + near + "'" : near), line_, col_);
  }

  Count uint_count() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    Count v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      advance();
    }
    return v;
  }
  int uint_small() {
    SourcePos at = here();
    Count v = uint_count();
    if (v > INT_MAX / 4) throw SyntaxError("exponent too large", at.line, at.column);
    return v.convert_to<int>();
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int col_;
};

// Returns the exponent doubled.
int parse_exponent(Cursor& cur, bool allow_half) {
  if (!cur.accept('^')) return 2;
  bool neg = cur.accept('-');
  int v = cur.uint_small() * 2;
  if (cur.accept('/')) {
    SourcePos at = cur.here();
    if (cur.uint_small() != 2) throw SyntaxError("only halves are allowed as fractions", at.line, at.column);
    if (!allow_half) throw SyntaxError("half-integer exponents are only allowed on t", at.line, at.column);
    if ((v / 2) % 2 == 0) throw SyntaxError("fraction is not a proper half", at.line, at.column);
    v /= 2;
  }
  return neg ? -v : v;
}

ParsedTerm parse_term(Cursor& cur) {
  ParsedTerm term;
  term.where = cur.here();
  bool any = false;
  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    term.mult = cur.uint_count();
    any = true;
  }
  if (cur.accept('[')) {
    cur.expect('N');
    int off = 0;
    if (cur.accept('+')) {
      off = cur.uint_small();
    } else if (cur.accept('-')) {
      off = -cur.uint_small();
    }
    cur.expect(']');
    term.atom = BracketAtom{off};
    any = true;
  }
  for (;;) {
    char c = cur.peek();
    if (c != 'a' && c != 'q' && c != 't') break;
    cur.advance();
    int e2 = parse_exponent(cur, c == 't');
    if (c == 'a') term.deg.a += e2 / 2;
    if (c == 'q') term.deg.q += e2 / 2;
    if (c == 't') term.deg.t2 += e2;
    any = true;
  }
  if (!any) cur.fail("expected a term");
  return term;
}

std::vector<ParsedTerm> parse_terms(std::string_view text, SourcePos at, bool allow_minus) {
  Cursor cur(text, at);
  std::vector<ParsedTerm> out;
  if (cur.done()) return out;
  int sign = 1;
  if (allow_minus && cur.accept('-')) sign = -1;
  for (;;) {
    ParsedTerm t = parse_term(cur);
    t.sign = sign;
    out.push_back(t);
    if (cur.done()) break;
    if (cur.accept('+')) {
      sign = 1;
    } else if (allow_minus && cur.accept('-')) {
      sign = -1;
    } else {
      cur.fail(allow_minus ? "expected '+' or '-'" : "expected '+'");
    }
  }
  return out;
}

std::string exponent_text(int e) { return e == 1 ? "" : "^" + std::to_string(e); }

std::string factors(TriDegree d) {
  std::string s;
  if (d.a != 0) s += "a" + exponent_text(d.a);
  if (d.q != 0) s += "q" + exponent_text(d.q);
  if (d.t2 != 0) s += format_t(d.t2);
  return s;
}

std::string term_text(TriDegree d, const Count& mult, const std::optional<BracketAtom>& atom) {
  std::string body;
  if (atom) {
    body = "[N";
    if (atom->offset > 0) body += "+" + std::to_string(atom->offset);
    if (atom->offset < 0) body += std::to_string(atom->offset);
    body += "]";
  }
  body += factors(d);
  std::string m = mult == 1 ? "" : mult.str();
  if (body.empty()) return m.empty() ? "1" : m;
  return m + body;
}

}  // namespace

SyntaxError::SyntaxError(std::string msg, int line, int column)
    : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      detail_(std::move(msg)),
      line_(line),
      column_(column) {}

FamilyPoincare parse_family(std::string_view text, SourcePos at) {
  FamilyPoincare f;
  for (const auto& t : parse_terms(text, at, false)) {
    // A lone "0" stands for the zero polynomial.
    if (t.mult == 0 && !t.atom && t.deg == TriDegree{}) continue;
    if (t.mult == 0) throw SyntaxError("zero multiplicity", t.where.line, t.where.column);
    f.add(FamilyKey{t.deg, t.atom}, t.mult);
  }
  return f;
}

Poincare parse_poincare(std::string_view text, SourcePos at) {
  Poincare p;
  for (const auto& t : parse_terms(text, at, false)) {
    if (t.atom) throw SyntaxError("[N+c] strings are not allowed here", t.where.line, t.where.column);
    if (t.mult == 0 && t.deg == TriDegree{}) continue;
    if (t.mult == 0) throw SyntaxError("zero multiplicity", t.where.line, t.where.column);
    p.add(t.deg, t.mult);
  }
  return p;
}

LaurentPoly parse_laurent(std::string_view text, SourcePos at) {
  LaurentPoly p;
  for (const auto& t : parse_terms(text, at, true)) {
    if (t.atom) throw SyntaxError("[N+c] strings are not allowed here", t.where.line, t.where.column);
    if (t.deg.t2 != 0) throw SyntaxError("t is not allowed in a HOMFLY-PT polynomial", t.where.line, t.where.column);
    p.add(t.deg.a, t.deg.q, t.sign * t.mult);
  }
  return p;
}

TriDegree parse_monomial(std::string_view text, SourcePos at) {
  auto terms = parse_terms(text, at, false);
  if (terms.size() != 1) throw SyntaxError("expected a single monomial", at.line, at.column);
  const auto& t = terms.front();
  if (t.atom || t.mult != 1) throw SyntaxError("expected a monomial without coefficient", t.where.line, t.where.column);
  return t.deg;
}

std::string format_t(int t2) {
  if (t2 % 2 == 0) return "t" + exponent_text(t2 / 2);
  return "t^" + std::to_string(t2) + "/2";
}

std::string format_degree(TriDegree d) { return term_text(d, 1, std::nullopt); }

std::string format(const Poincare& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, m] : p.terms()) {
    if (!first) os << " + ";
    os << term_text(d, m, std::nullopt);
    first = false;
  }
  return os.str();
}

std::string format(const FamilyPoincare& f) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, m] : f.terms()) {
    if (!first) os << " + ";
    os << term_text(k.center, m, k.atom);
    first = false;
  }
  return os.str();
}

std::string format(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    Count mag = c < 0 ? Count(-c) : c;
    std::string body = term_text({k.first, k.second, 0}, mag, std::nullopt);
    if (first) {
      os << (c < 0 ? "-" : "") << body;
    } else {
      os << (c < 0 ? " - " : " + ") << body;
    }
    first = false;
  }
  return os.str();
}

}  // namespace hpt
