#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "typetwo/oracle.hpp"
#include "typetwo/operators.hpp"
#include "typetwo/strings.hpp"

namespace typetwo::lambda {

class LambdaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class TypeError : public LambdaError {
 public:
  using LambdaError::LambdaError;
};
class UnboundVariable : public LambdaError {
 public:
  using LambdaError::LambdaError;
};
class UnknownConstant : public LambdaError {
 public:
  using LambdaError::LambdaError;
};
class SyntaxError : public LambdaError {
 public:
  using LambdaError::LambdaError;
};

/// Simple types over the ground type 0; arrows associate to the right.
class Type {
 public:
  Type() = default;  // ground
  static Type ground() { return Type(); }
  static Type arrow(Type from, Type to);
  /// tau_1 -> ... -> tau_k -> 0
  static Type function(const std::vector<Type>& args);
  static Type parse(std::string_view text);

  bool is_ground() const noexcept { return node_ == nullptr; }
  const Type& from() const;
  const Type& to() const;
  /// Argument types of the normal form tau_1 -> ... -> tau_k -> 0.
  std::vector<Type> args() const;
  std::size_t level() const;
  std::string to_string() const;

  friend bool operator==(const Type& x, const Type& y);

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Semantic values: bit strings at type 0, host callables above.
class Value {
 public:
  using Fn = std::function<Value(const Value&)>;

  Value() : Value(BitString{}) {}
  Value(BitString s);  // NOLINT(google-explicit-constructor)
  Value(Fn f);         // NOLINT(google-explicit-constructor)

  bool is_string() const noexcept { return s_ != nullptr; }
  const BitString& str() const;
  Value operator()(const Value& arg) const;
  template <class... Rest>
  Value operator()(const Value& arg, const Rest&... rest) const {
    return (*this)(arg)(rest...);
  }

 private:
  std::shared_ptr<const BitString> s_;
  std::shared_ptr<const Fn> f_;
};

Value unary_fn(std::function<BitString(const BitString&)> f);
Value binary_fn(std::function<BitString(const BitString&, const BitString&)> f);
Value oracle_value(const Oracle& phi);  // 0 -> 0
/// View a 0 -> 0 value as an oracle and a 0 -> 0 -> 0 value as a binary rule.
Oracle as_oracle(const Value& f, std::string name = "lambda");
BinaryRule as_binary(const Value& f);

class Term {
 public:
  enum class Kind { Var, Const, Abs, App };

  static Term var(std::string name, Type type);
  static Term constant(const std::string& name);  // looked up in the registry
  static Term literal(BitString value);
  static Term abs(std::string var, Type var_type, Term body);
  static Term app(Term fun, Term arg);  // throws TypeError
  template <class... Rest>
  static Term app(Term fun, Term arg, Rest... rest) {
    return app(app(std::move(fun), std::move(arg)), std::move(rest)...);
  }

  Kind kind() const;
  const std::string& name() const;  // Var, Const, Abs (bound variable)
  const Type& type() const;
  const Type& var_type() const;     // Abs
  const Term& body() const;         // Abs
  const Term& fun() const;          // App
  const Term& arg() const;          // App
  const std::optional<BitString>& literal_value() const;

  std::size_t size() const;
  std::string to_string() const;
  friend bool operator==(const Term& x, const Term& y);  // alpha-equivalence

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses `\x:0. x`, juxtaposition, `#name` constants, `"0101"` literals.
Term parse_term(std::string_view text);

struct ConstantDef {
  Type type;
  Value value;
};

/// Registered constants (library constants plus anything added later).
const ConstantDef& lookup_constant(const std::string& name);
void register_constant(const std::string& name, Type type, Value value);
std::vector<std::string> constant_names();

using Env = std::map<std::string, Value>;

Value eval_term(const Term& t, const Env& env = {});

std::vector<std::string> free_variables(const Term& t);
Term substitute(const Term& t, const std::string& x, const Term& s);
Term beta_eta_normalize(const Term& t);

/// Closed bridge terms: rec_via_recprime, recprime_via_rec, operator_R,
/// const_K, tupler_T, rec_symbol_replacement, argmax_via_T, filr_as_term.
Term bridge_term(const std::string& name);
std::vector<std::string> bridge_names();

struct SectionEntry {
  Term term;
  Value value;
};

/// Closed terms whose type has level between 1 and `order`, evaluated.
std::vector<SectionEntry> section(const std::vector<Term>& terms, std::size_t order);

/// Random closed well-typed term of type `type` with at most `max_size` nodes.
Term random_term(std::mt19937_64& rng, const Type& type, std::size_t max_size = 12);

}  // namespace typetwo::lambda
