#include "fsing/session.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "fsing/errors.hpp"
#include "fsing/parse.hpp"

namespace fsing {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

/// Cursor over one line; columns are 1-based.
class LineReader {
 public:
  LineReader(std::string_view text, int line) : text_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, column(), msg); }
  int column() const { return static_cast<int>(pos_) + 1; }
  int line() const { return line_; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  void expect(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }
  std::string_view word() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return text_.substr(start, pos_ - start);
  }
  std::uint64_t number() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 18) {
      pos_ = start;
      fail("number too large");
    }
    return std::stoull(std::string(text_.substr(start, pos_ - start)));
  }
  /// Remainder of the line and its starting column.
  std::pair<std::string_view, int> rest() {
    skip_space();
    auto out = std::make_pair(text_.substr(pos_), column());
    pos_ = text_.size();
    return out;
  }
  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }

 private:
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

std::string join_polys(const std::vector<Poly>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ", ";
    s += ps[i].to_string();
  }
  return s;
}

}  // namespace

RingCtx Session::context() const {
  if (quotient.empty()) return RingCtx(ring);
  return RingCtx(ring, Ideal(ring, quotient));
}

const Session::Entry* Session::find(std::string_view name) const {
  for (const Entry& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

Ideal Session::ideal(std::string_view name) const {
  if (name == "quotient") return Ideal(ring, quotient);
  const Entry* e = find(name);
  if (!e || e->kind == Kind::Map)
    throw Error(ErrorKind::UnknownName, "no ideal named '" + std::string(name) + "'");
  return Ideal(ring, e->polys);
}

Poly Session::poly(std::string_view name) const {
  const Entry* e = find(name);
  if (!e || e->kind != Kind::Poly) {
    if (auto idx = ring->var_index(name)) return Poly::variable(ring, *idx);
    throw Error(ErrorKind::UnknownName, "no polynomial named '" + std::string(name) + "'");
  }
  return e->polys[0];
}

CartierMapSpec Session::map(std::string_view name) const {
  const Entry* e = find(name);
  if (!e || e->kind != Kind::Map) throw Error(ErrorKind::UnknownName, "no map named '" + std::string(name) + "'");
  return CartierMapSpec(context(), e->e, e->polys[0]);
}

bool Session::operator==(const Session& o) const {
  if (!ring || !o.ring || !(*ring == *o.ring)) return false;
  if (!(quotient == o.quotient) || entries.size() != o.entries.size()) return false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Entry& a = entries[i];
    const Entry& b = o.entries[i];
    if (a.kind != b.kind || a.name != b.name || a.e != b.e || !(a.polys == b.polys)) return false;
  }
  return true;
}

Session parse_session(std::string_view text) {
  Session s;
  bool have_quotient = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    LineReader in(raw, line_no);
    in.skip_space();
    if (in.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    const int keyword_col = in.column();
    std::string keyword(in.word());
    if (keyword.empty()) in.fail("expected a directive");
    if (keyword != "ring" && !s.ring) throw ParseError(line_no, keyword_col, "the ring header must come first");

    NameResolver resolver = [&s](std::string_view name) -> const Poly* {
      const Session::Entry* e = s.find(name);
      return e && e->kind == Session::Kind::Poly ? &e->polys[0] : nullptr;
    };

    if (keyword == "ring") {
      if (s.ring) throw ParseError(line_no, keyword_col, "duplicate ring header");
      in.expect(":");
      in.expect("p");
      in.expect("=");
      std::uint64_t p = in.number();
      in.expect("vars");
      in.expect("=");
      in.expect("[");
      std::vector<std::string> vars;
      in.skip_space();
      if (in.peek() != ']') {
        for (;;) {
          std::string_view v = in.word();
          if (v.empty()) in.fail("expected a variable name");
          vars.emplace_back(v);
          in.skip_space();
          if (in.peek() == ',') {
            in.expect(",");
            continue;
          }
          break;
        }
      }
      in.expect("]");
      in.skip_space();
      if (!in.at_end()) in.fail("unexpected text after the ring header");
      s.ring = make_ring(p, std::move(vars));
    } else if (keyword == "quotient") {
      if (have_quotient) throw ParseError(line_no, keyword_col, "duplicate quotient line");
      in.expect(":");
      auto [body, col] = in.rest();
      s.quotient = parse_poly_list(s.ring, body, resolver, line_no, col);
      for (Poly& g : s.quotient)
        if (g.is_zero()) throw ParseError(line_no, col, "quotient generators must be nonzero");
      Ideal J(s.ring, s.quotient);
      if (J.is_unit()) throw ParseError(line_no, col, "quotient by the unit ideal");
      have_quotient = true;
    } else if (keyword == "ideal" || keyword == "poly" || keyword == "map") {
      const int name_col = (in.skip_space(), in.column());
      std::string name(in.word());
      if (!is_identifier(name)) throw ParseError(line_no, name_col, "expected a name");
      if (name == "quotient" || s.find(name) || s.ring->var_index(name))
        throw ParseError(line_no, name_col, "name '" + name + "' is already in use");
      in.expect(":");
      Session::Entry entry;
      entry.name = name;
      if (keyword == "ideal") {
        entry.kind = Session::Kind::Ideal;
        auto [body, col] = in.rest();
        entry.polys = parse_poly_list(s.ring, body, resolver, line_no, col);
      } else if (keyword == "poly") {
        entry.kind = Session::Kind::Poly;
        auto [body, col] = in.rest();
        entry.polys.push_back(parse_poly(s.ring, body, resolver, line_no, col));
      } else {
        entry.kind = Session::Kind::Map;
        in.expect("e");
        in.expect("=");
        std::uint64_t e = in.number();
        if (e < 1 || e > 30) in.fail("map level e must be between 1 and 30");
        entry.e = static_cast<int>(e);
        in.expect("u");
        in.expect("=");
        auto [body, col] = in.rest();
        entry.polys.push_back(parse_poly(s.ring, body, resolver, line_no, col));
        if (entry.polys[0].is_zero()) throw ParseError(line_no, col, "map multiplier must be nonzero");
      }
      s.entries.push_back(std::move(entry));
    } else {
      throw ParseError(line_no, keyword_col, "unknown directive '" + keyword + "'");
    }
    if (end == text.size()) break;
  }
  if (!s.ring) throw ParseError(line_no < 1 ? 1 : line_no, 1, "missing ring header");
  return s;
}

Session load_session(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read session file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_session(buf.str());
}

std::string print_session(const Session& s) {
  std::string out = "ring: p=" + std::to_string(s.ring->characteristic()) + " vars=[";
  for (std::size_t i = 0; i < s.ring->nvars(); ++i) {
    if (i) out += ",";
    out += s.ring->vars()[i];
  }
  out += "]\n";
  if (!s.quotient.empty()) out += "quotient: " + join_polys(s.quotient) + "\n";
  for (const Session::Entry& e : s.entries) {
    switch (e.kind) {
      case Session::Kind::Ideal: out += "ideal " + e.name + ": " + join_polys(e.polys) + "\n"; break;
      case Session::Kind::Poly: out += "poly " + e.name + ": " + e.polys[0].to_string() + "\n"; break;
      case Session::Kind::Map:
        out += "map " + e.name + ": e=" + std::to_string(e.e) + " u=" + e.polys[0].to_string() + "\n";
        break;
    }
  }
  return out;
}

}  // namespace fsing
