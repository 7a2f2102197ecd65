#include "fsing/parse.hpp"

#include <cctype>
#include <string>

#include "fsing/errors.hpp"

namespace fsing {

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text, const NameResolver& resolver, int line,
         int column_offset)
      : ring_(ring), text_(text), resolver_(resolver), line_(line), offset_(column_offset) {}

  Poly parse_all() {
    skip_space();
    if (at_end()) fail("expected a polynomial");
    Poly p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, offset_ + static_cast<int>(pos_), msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    bool negate = accept('-');
    Poly acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    if (accept('^')) {
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
      std::uint64_t n = integer();
      if (n > (std::uint64_t{1} << 31)) throw Error(ErrorKind::DegreeOverflow, "exponent too large");
      base = base.pow(n);
    }
    return base;
  }

  std::uint64_t integer() {
    std::uint64_t v = 0;
    bool any = false;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (std::uint64_t{1} << 60)) fail("integer literal too large");
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      ++pos_;
      any = true;
    }
    if (!any) fail("expected an integer");
    return v;
  }

  Poly atom() {
    skip_space();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = integer();
      return Poly::constant(ring_, static_cast<std::int64_t>(v % ring_->characteristic()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (auto idx = ring_->var_index(name)) return Poly::variable(ring_, *idx);
      if (resolver_) {
        if (const Poly* p = resolver_(name)) {
          require_same_ring(ring_, p->ring());
          return *p;
        }
      }
      pos_ = start;
      throw Error(ErrorKind::UnknownName, "line " + std::to_string(line_) + ", column " +
                                              std::to_string(offset_ + static_cast<int>(start)) +
                                              ": unknown name '" + std::string(name) + "'");
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  const RingPtr& ring_;
  std::string_view text_;
  const NameResolver& resolver_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const RingPtr& ring, std::string_view text, const NameResolver& resolver, int line,
                int column_offset) {
  return Parser(ring, text, resolver, line, column_offset).parse_all();
}

std::vector<Poly> parse_poly_list(const RingPtr& ring, std::string_view text,
                                  const NameResolver& resolver, int line, int column_offset) {
  std::vector<Poly> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (text[i] != ',' || depth != 0) continue;
    }
    out.push_back(parse_poly(ring, text.substr(start, i - start), resolver, line,
                             column_offset + static_cast<int>(start)));
    start = i + 1;
  }
  return out;
}

}  // namespace fsing
