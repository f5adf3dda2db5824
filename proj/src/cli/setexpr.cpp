#include "gca/cli/setexpr.hpp"

#include <cctype>
#include <string>

#include "gca/errors.hpp"

namespace gca::cli {

namespace {

class Parser {
 public:
  Parser(const Fiber& t, std::string_view text) : t_(t), text_(text) {}

  SetExprValue top() {
    SetExprValue out;
    out.set = expr();
    if (accept("==")) {
      RingSet rhs = expr();
      out.equal = ring_equals(t_, out.set, rhs);
      out.rhs = canonicalize(t_, rhs);
    }
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(text_.substr(pos_)) + "'");
    out.set = canonicalize(t_, out.set);
    return out;
  }

 private:
  RingSet expr() {
    RingSet x = diff();
    for (;;) {
      skip_space();
      if (peek("==")) return x;
      if (accept("|")) {
        x = ring_union(t_, x, diff());
      } else if (accept("^")) {
        x = ring_symmdiff(t_, x, diff());
      } else {
        return x;
      }
    }
  }

  RingSet diff() {
    RingSet x = inter();
    while (accept("-")) x = ring_diff(t_, x, inter());
    return x;
  }

  RingSet inter() {
    RingSet x = atom();
    while (accept("&")) x = ring_intersect(t_, x, atom());
    return x;
  }

  RingSet atom() {
    if (accept("(")) {
      RingSet x = expr();
      expect(")");
      return x;
    }
    if (accept_word("empty")) return RingSet{};
    if (!accept("V(")) fail("expected V(...), empty or '('");
    const Path apex = Path::parse(t_.graph(), token(";)"));
    std::vector<EdgeInstance> excluded;
    if (accept(";")) {
      do {
        const SignedEdge e = t_.graph().parse_edge(token(",)"));
        if (e.reversed) fail("excluded edges must be positive");
        excluded.push_back(e.instance);
      } while (accept(","));
    }
    expect(")");
    return ring_of(make_basic(t_, apex, excluded));
  }

  // Raw text up to (not including) any stop character.
  std::string token(std::string_view stops) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && stops.find(text_[pos_]) == std::string_view::npos) ++pos_;
    std::string out(text_.substr(start, pos_ - start));
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    if (out.empty()) fail("missing name");
    return out;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(std::string_view s) {
    skip_space();
    return text_.substr(pos_, s.size()) == s;
  }
  bool accept(std::string_view s) {
    if (!peek(s)) return false;
    pos_ += s.size();
    return true;
  }
  bool accept_word(std::string_view w) {
    if (!peek(w)) return false;
    const std::size_t end = pos_ + w.size();
    if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) return false;
    pos_ = end;
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("set expression, column " + std::to_string(pos_ + 1) + ": " + what);
  }

  const Fiber& t_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SetExprValue eval_set_expr(const Fiber& t, std::string_view text) { return Parser(t, text).top(); }

}  // namespace gca::cli
