#include <algorithm>

#include "typetwo/lambda.hpp"

namespace typetwo::lambda {

// ---------------------------------------------------------------- types

struct Type::Node {
  Type from;
  Type to;
};

Type Type::arrow(Type from, Type to) {
  return Type(std::make_shared<const Node>(Node{std::move(from), std::move(to)}));
}

Type Type::function(const std::vector<Type>& args) {
  Type t;
  for (auto it = args.rbegin(); it != args.rend(); ++it) t = arrow(*it, t);
  return t;
}

const Type& Type::from() const {
  if (!node_) throw TypeError("ground type has no domain");
  return node_->from;
}

const Type& Type::to() const {
  if (!node_) throw TypeError("ground type has no codomain");
  return node_->to;
}

std::vector<Type> Type::args() const {
  std::vector<Type> out;
  for (const Type* t = this; !t->is_ground(); t = &t->to()) out.push_back(t->from());
  return out;
}

std::size_t Type::level() const {
  if (is_ground()) return 0;
  return std::max(from().level() + 1, to().level());
}

std::string Type::to_string() const {
  if (is_ground()) return "0";
  std::string lhs = from().to_string();
  if (!from().is_ground()) lhs = "(" + lhs + ")";
  return lhs + " -> " + to().to_string();
}

bool operator==(const Type& x, const Type& y) {
  if (x.is_ground() || y.is_ground()) return x.is_ground() == y.is_ground();
  return x.from() == y.from() && x.to() == y.to();
}

// ---------------------------------------------------------------- values

Value::Value(BitString s) : s_(std::make_shared<const BitString>(std::move(s))) {}
Value::Value(Fn f) : f_(std::make_shared<const Fn>(std::move(f))) {}

const BitString& Value::str() const {
  if (!s_) throw TypeError("value is a function, not a string");
  return *s_;
}

Value Value::operator()(const Value& arg) const {
  if (!f_) throw TypeError("value is a string and cannot be applied");
  return (*f_)(arg);
}

Value unary_fn(std::function<BitString(const BitString&)> f) {
  return Value(Value::Fn([f](const Value& x) { return Value(f(x.str())); }));
}

Value binary_fn(std::function<BitString(const BitString&, const BitString&)> f) {
  return Value(Value::Fn([f](const Value& x) {
    BitString xs = x.str();
    return Value(Value::Fn([f, xs](const Value& y) { return Value(f(xs, y.str())); }));
  }));
}

Value oracle_value(const Oracle& phi) {
  return unary_fn([phi](const BitString& q) { return phi(q); });
}

Oracle as_oracle(const Value& f, std::string name) {
  return Oracle(std::move(name), [f](const BitString& q) { return f(Value(q)).str(); });
}

BinaryRule as_binary(const Value& f) {
  return [f](const BitString& s, const BitString& t) { return f(Value(s), Value(t)).str(); };
}

// ---------------------------------------------------------------- terms

struct Term::Node {
  Kind kind;
  std::string name;
  Type type;
  Type var_type;
  std::optional<BitString> literal;
  std::optional<Term> a;  // body or function
  std::optional<Term> b;  // argument
  std::size_t size = 1;
};

Term Term::var(std::string name, Type type) {
  Node n{Kind::Var, std::move(name), std::move(type), {}, {}, {}, {}, 1};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::constant(const std::string& name) {
  Node n{Kind::Const, name, lookup_constant(name).type, {}, {}, {}, {}, 1};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::literal(BitString value) {
  Node n{Kind::Const, "\"" + value.str() + "\"", Type(), {}, std::move(value), {}, {}, 1};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::abs(std::string var, Type var_type, Term body) {
  Type t = Type::arrow(var_type, body.type());
  std::size_t size = body.size() + 1;
  Node n{Kind::Abs, std::move(var), std::move(t), std::move(var_type), {}, std::move(body), {}, size};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::app(Term fun, Term arg) {
  const Type& ft = fun.type();
  if (ft.is_ground()) {
    throw TypeError("cannot apply " + fun.to_string() + " of type 0");
  }
  if (!(ft.from() == arg.type())) {
    throw TypeError("argument " + arg.to_string() + " has type " + arg.type().to_string() +
                    ", expected " + ft.from().to_string());
  }
  Type t = ft.to();
  std::size_t size = fun.size() + arg.size() + 1;
  Node n{Kind::App, {}, std::move(t), {}, {}, std::move(fun), std::move(arg), size};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const Type& Term::type() const { return node_->type; }
const Type& Term::var_type() const { return node_->var_type; }
const Term& Term::body() const { return *node_->a; }
const Term& Term::fun() const { return *node_->a; }
const Term& Term::arg() const { return *node_->b; }
const std::optional<BitString>& Term::literal_value() const { return node_->literal; }
std::size_t Term::size() const { return node_->size; }

std::string Term::to_string() const {
  switch (kind()) {
    case Kind::Var: return name();
    case Kind::Const: return literal_value() ? name() : "#" + name();
    case Kind::Abs: {
      std::string vt = var_type().to_string();
      if (!var_type().is_ground()) vt = "(" + vt + ")";
      return "\\" + name() + ":" + vt + ". " + body().to_string();
    }
    case Kind::App: {
      std::string f = fun().to_string();
      if (fun().kind() == Kind::Abs) f = "(" + f + ")";
      std::string x = arg().to_string();
      if (arg().kind() == Kind::Abs || arg().kind() == Kind::App) x = "(" + x + ")";
      return f + " " + x;
    }
  }
  return {};
}

namespace {

bool alpha_eq(const Term& x, const Term& y, std::vector<std::pair<std::string, std::string>>& bound) {
  if (x.kind() != y.kind() || !(x.type() == y.type())) return false;
  switch (x.kind()) {
    case Term::Kind::Var:
      for (auto it = bound.rbegin(); it != bound.rend(); ++it) {
        if (it->first == x.name() || it->second == y.name()) {
          return it->first == x.name() && it->second == y.name();
        }
      }
      return x.name() == y.name();
    case Term::Kind::Const: return x.name() == y.name();
    case Term::Kind::Abs: {
      bound.emplace_back(x.name(), y.name());
      bool eq = alpha_eq(x.body(), y.body(), bound);
      bound.pop_back();
      return eq;
    }
    case Term::Kind::App:
      return alpha_eq(x.fun(), y.fun(), bound) && alpha_eq(x.arg(), y.arg(), bound);
  }
  return false;
}

}  // namespace

bool operator==(const Term& x, const Term& y) {
  std::vector<std::pair<std::string, std::string>> bound;
  return alpha_eq(x, y, bound);
}

}  // namespace typetwo::lambda
