#include "typetwo/sopoly.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace typetwo {

// ---------------------------------------------------------------- unary

UnaryPolynomial::UnaryPolynomial(std::vector<BigNat> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c < 0) throw std::invalid_argument("UnaryPolynomial: negative coefficient");
  }
  normalize();
}

void UnaryPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UnaryPolynomial UnaryPolynomial::scaled_power(const BigNat& c, unsigned d) {
  UnaryPolynomial acc = constant(c);
  UnaryPolynomial n_plus_1({1, 1});
  for (unsigned i = 0; i < d; ++i) acc = acc * n_plus_1;
  return acc;
}

BigNat UnaryPolynomial::operator()(const BigNat& n) const {
  BigNat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

std::uint64_t UnaryPolynomial::eval_u64(std::uint64_t n) const {
  BigNat v = (*this)(BigNat(n));
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("polynomial value exceeds 64 bits");
  }
  return v.convert_to<std::uint64_t>();
}

UnaryPolynomial operator+(const UnaryPolynomial& a, const UnaryPolynomial& b) {
  std::vector<BigNat> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return UnaryPolynomial(std::move(out));
}

UnaryPolynomial operator*(const UnaryPolynomial& a, const UnaryPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigNat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnaryPolynomial(std::move(out));
}

std::string UnaryPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigNat& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "n";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

SizeFunction UnaryPolynomial::as_size_function() const {
  return [p = *this](const BigNat& x) { return p(x); };
}

// ---------------------------------------------------------------- AST

struct SecondOrderPolynomial::Node {
  Kind kind;
  BigNat value;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

SecondOrderPolynomial SecondOrderPolynomial::zero() {
  return SecondOrderPolynomial(std::make_shared<Node>(Node{Kind::Zero, 0, nullptr, nullptr}));
}
SecondOrderPolynomial SecondOrderPolynomial::one() {
  return SecondOrderPolynomial(std::make_shared<Node>(Node{Kind::One, 1, nullptr, nullptr}));
}
SecondOrderPolynomial SecondOrderPolynomial::constant(BigNat c) {
  if (c == 0) return zero();
  if (c == 1) return one();
  return SecondOrderPolynomial(std::make_shared<Node>(Node{Kind::Const, std::move(c), nullptr, nullptr}));
}
SecondOrderPolynomial SecondOrderPolynomial::n() {
  return SecondOrderPolynomial(std::make_shared<Node>(Node{Kind::N, 0, nullptr, nullptr}));
}
SecondOrderPolynomial SecondOrderPolynomial::plus(SecondOrderPolynomial a, SecondOrderPolynomial b) {
  return SecondOrderPolynomial(std::make_shared<Node>(Node{Kind::Plus, 0, a.node_, b.node_}));
}
SecondOrderPolynomial SecondOrderPolynomial::times(SecondOrderPolynomial a, SecondOrderPolynomial b) {
  return SecondOrderPolynomial(std::make_shared<Node>(Node{Kind::Times, 0, a.node_, b.node_}));
}
SecondOrderPolynomial SecondOrderPolynomial::apply(SecondOrderPolynomial inner) {
  return SecondOrderPolynomial(std::make_shared<Node>(Node{Kind::Apply, 0, inner.node_, nullptr}));
}

SecondOrderPolynomial::Kind SecondOrderPolynomial::kind() const { return node_->kind; }
const BigNat& SecondOrderPolynomial::value() const { return node_->value; }

namespace {

using Kind = SecondOrderPolynomial::Kind;

std::size_t depth_of(const SecondOrderPolynomial::Node* n);

BigNat eval_node(const SecondOrderPolynomial::Node* node, const SizeFunction& l, const BigNat& n) {
  switch (node->kind) {
    case Kind::Zero: return 0;
    case Kind::One: return 1;
    case Kind::Const: return node->value;
    case Kind::N: return n;
    case Kind::Plus: return eval_node(node->a.get(), l, n) + eval_node(node->b.get(), l, n);
    case Kind::Times: {
      BigNat left = eval_node(node->a.get(), l, n);
      if (left == 0) return 0;
      return left * eval_node(node->b.get(), l, n);
    }
    case Kind::Apply: return l(eval_node(node->a.get(), l, n));
  }
  return 0;
}

UnaryPolynomial collapse(const SecondOrderPolynomial::Node* node, bool allow_apply) {
  switch (node->kind) {
    case Kind::Zero: return {};
    case Kind::One: return UnaryPolynomial::constant(1);
    case Kind::Const: return UnaryPolynomial::constant(node->value);
    case Kind::N: return UnaryPolynomial::identity();
    case Kind::Plus: return collapse(node->a.get(), allow_apply) + collapse(node->b.get(), allow_apply);
    case Kind::Times: return collapse(node->a.get(), allow_apply) * collapse(node->b.get(), allow_apply);
    case Kind::Apply:
      if (!allow_apply) throw ParseError("l(...) is not allowed in a unary polynomial");
      return UnaryPolynomial::identity();
  }
  return {};
}

int precedence(Kind k) {
  switch (k) {
    case Kind::Plus: return 1;
    case Kind::Times: return 2;
    default: return 3;
  }
}

void print_node(const SecondOrderPolynomial::Node* node, std::ostream& os, int parent_prec) {
  int prec = precedence(node->kind);
  bool paren = prec < parent_prec;
  if (paren) os << "(";
  switch (node->kind) {
    case Kind::Zero: os << "0"; break;
    case Kind::One: os << "1"; break;
    case Kind::Const: os << node->value; break;
    case Kind::N: os << "n"; break;
    case Kind::Plus:
      print_node(node->a.get(), os, 1);
      os << "+";
      print_node(node->b.get(), os, 2);
      break;
    case Kind::Times:
      print_node(node->a.get(), os, 2);
      os << "*";
      print_node(node->b.get(), os, 3);
      break;
    case Kind::Apply:
      os << "l(";
      print_node(node->a.get(), os, 0);
      os << ")";
      break;
  }
  if (paren) os << ")";
}

std::size_t depth_of(const SecondOrderPolynomial::Node* n) {
  if (!n) return 0;
  return 1 + std::max(depth_of(n->a.get()), depth_of(n->b.get()));
}

class SopParser {
 public:
  explicit SopParser(std::string_view text) : text_(text) {}

  SecondOrderPolynomial parse_all() {
    auto p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  SecondOrderPolynomial expr() {
    auto acc = term();
    while (eat('+')) acc = SecondOrderPolynomial::plus(acc, term());
    return acc;
  }
  SecondOrderPolynomial term() {
    auto acc = power();
    while (eat('*')) acc = SecondOrderPolynomial::times(acc, power());
    return acc;
  }
  SecondOrderPolynomial power() {
    auto base = atom();
    if (!eat('^')) return base;
    BigNat e = number();
    if (e > 64) fail("exponent too large");
    unsigned k = e.convert_to<unsigned>();
    if (k == 0) return SecondOrderPolynomial::one();
    auto acc = base;
    for (unsigned i = 1; i < k; ++i) acc = SecondOrderPolynomial::times(acc, base);
    return acc;
  }
  SecondOrderPolynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == 'n') {
      ++pos_;
      return SecondOrderPolynomial::n();
    }
    if (c == 'l') {
      ++pos_;
      if (!eat('(')) fail("expected '(' after l");
      auto inner = expr();
      if (!eat(')')) fail("expected ')'");
      return SecondOrderPolynomial::apply(inner);
    }
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return SecondOrderPolynomial::constant(number());
    fail("unexpected '" + std::string(1, c) + "'");
  }
  BigNat number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return BigNat(std::string(text_.substr(start, pos_ - start)));
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::size_t SecondOrderPolynomial::depth() const { return depth_of(node_.get()); }

std::string SecondOrderPolynomial::to_string() const {
  std::ostringstream os;
  print_node(node_.get(), os, 0);
  return os.str();
}

SecondOrderPolynomial SecondOrderPolynomial::parse(std::string_view text) {
  return SopParser(text).parse_all();
}

SecondOrderPolynomial SecondOrderPolynomial::from_unary(const UnaryPolynomial& p,
                                                        const SecondOrderPolynomial& arg) {
  const auto& cs = p.coeffs();
  if (cs.empty()) return zero();
  // Horner form keeps the AST linear in the degree.
  SecondOrderPolynomial acc = constant(cs.back());
  for (std::size_t i = cs.size() - 1; i-- > 0;) {
    acc = times(acc, arg);
    if (cs[i] != 0) acc = plus(acc, constant(cs[i]));
  }
  return acc;
}

UnaryPolynomial UnaryPolynomial::parse(std::string_view text) {
  return collapse(SecondOrderPolynomial::parse(text).root(), false);
}

BigNat eval_sop(const SecondOrderPolynomial& p, const SizeFunction& l, const BigNat& n) {
  return eval_node(p.root(), l, n);
}

UnaryPolynomial step_count_from_bound(const SecondOrderPolynomial& p) {
  return collapse(p.root(), true);
}

SecondOrderPolynomial mpt_time_bound(const UnaryPolynomial& p, unsigned r) {
  using SOP = SecondOrderPolynomial;
  SOP base = SOP::from_unary(p, SOP::n());
  SOP iterated = base;
  for (unsigned i = 0; i < r; ++i) iterated = SOP::from_unary(p, SOP::apply(iterated));
  return SOP::plus(iterated, base);
}

BigNat composition_bound(const SecondOrderPolynomial& p, const SecondOrderPolynomial& q,
                         const BigNat& c, const SizeFunction& l, const BigNat& n) {
  SizeFunction inner = [&](const BigNat& m) { return eval_sop(p, l, m); };
  BigNat qv = eval_sop(q, inner, n);
  return c * (eval_sop(p, l, qv) * qv + 1);
}

}  // namespace typetwo
