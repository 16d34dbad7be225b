#include <cctype>
#include <map>

#include "typetwo/lambda.hpp"

namespace typetwo::lambda {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Type parse_type() {
    Type lhs;
    skip_ws();
    if (eat('(')) {
      lhs = parse_type();
      expect(')');
    } else if (eat('0')) {
      lhs = Type::ground();
    } else {
      fail("expected a type");
    }
    skip_ws();
    if (s_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return Type::arrow(lhs, parse_type());
    }
    return lhs;
  }

  Term parse_term() {
    skip_ws();
    if (peek() == '\\') return parse_abs();
    std::optional<Term> acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '\0' || c == ')') break;
      Term next = c == '\\' ? parse_abs() : parse_atom();
      acc = acc ? Term::app(*acc, next) : next;
      if (c == '\\') break;
    }
    if (!acc) fail("expected a term");
    return *acc;
  }

  void finish() {
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
  }

 private:
  Term parse_abs() {
    expect('\\');
    std::string x = ident();
    expect(':');
    Type t = parse_type();
    expect('.');
    scope_.emplace_back(x, t);
    Term body = parse_term();
    scope_.pop_back();
    return Term::abs(x, t, body);
  }

  Term parse_atom() {
    skip_ws();
    if (eat('(')) {
      Term t = parse_term();
      expect(')');
      return t;
    }
    if (eat('#')) {
      std::string name = ident();
      try {
        return Term::constant(name);
      } catch (const UnknownConstant& e) {
        fail(e.what());
      }
    }
    if (eat('"')) {
      std::string bits;
      while (peek() == '0' || peek() == '1') bits.push_back(s_[pos_++]);
      expect('"');
      return Term::literal(BitString(bits));
    }
    std::string x = ident();
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == x) return Term::var(x, it->second);
    }
    throw UnboundVariable("unbound variable '" + x + "' at offset " + std::to_string(pos_));
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                s_[pos_] == '_' || s_[pos_] == '\'')) {
      ++pos_;
    }
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(s_[start]))) {
      pos_ = start;
      fail("expected an identifier");
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == ';') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw SyntaxError(msg + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<std::pair<std::string, Type>> scope_;
};

}  // namespace

Type Type::parse(std::string_view text) {
  Parser p(text);
  Type t = p.parse_type();
  p.finish();
  return t;
}

Term parse_term(std::string_view text) {
  Parser p(text);
  Term t = p.parse_term();
  p.finish();
  return t;
}

}  // namespace typetwo::lambda
