#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace typetwo {

using BigNat = boost::multiprecision::cpp_int;

/// A unary size function l : N -> N. Callers are expected to pass
/// nondecreasing functions; evaluation does not check.
using SizeFunction = std::function<BigNat(const BigNat&)>;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomial with natural coefficients, coeffs[i] multiplying n^i.
class UnaryPolynomial {
 public:
  UnaryPolynomial() = default;
  explicit UnaryPolynomial(std::vector<BigNat> coeffs);

  static UnaryPolynomial constant(BigNat c) { return UnaryPolynomial({std::move(c)}); }
  static UnaryPolynomial identity() { return UnaryPolynomial({0, 1}); }
  /// c * (n + 1)^d
  static UnaryPolynomial scaled_power(const BigNat& c, unsigned d);

  /// Parses the second-order syntax and rejects any use of l(...).
  static UnaryPolynomial parse(std::string_view text);

  BigNat operator()(const BigNat& n) const;
  std::uint64_t eval_u64(std::uint64_t n) const;  // throws std::overflow_error

  const std::vector<BigNat>& coeffs() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::string to_string() const;

  friend UnaryPolynomial operator+(const UnaryPolynomial& a, const UnaryPolynomial& b);
  friend UnaryPolynomial operator*(const UnaryPolynomial& a, const UnaryPolynomial& b);
  friend bool operator==(const UnaryPolynomial&, const UnaryPolynomial&) = default;

  SizeFunction as_size_function() const;

 private:
  void normalize();
  std::vector<BigNat> coeffs_;
};

/// AST over {0, 1, n, +, *, l(.)}. Const is a literal natural, kept so that
/// fitted constants print as numbers rather than as towers of ones.
class SecondOrderPolynomial {
 public:
  enum class Kind { Zero, One, Const, N, Plus, Times, Apply };

  static SecondOrderPolynomial zero();
  static SecondOrderPolynomial one();
  static SecondOrderPolynomial constant(BigNat c);
  static SecondOrderPolynomial n();
  static SecondOrderPolynomial plus(SecondOrderPolynomial a, SecondOrderPolynomial b);
  static SecondOrderPolynomial times(SecondOrderPolynomial a, SecondOrderPolynomial b);
  static SecondOrderPolynomial apply(SecondOrderPolynomial inner);

  /// `n`, `0`, `1`, decimal literals, `+`, `*`, `^k`, `l(...)`, parentheses.
  static SecondOrderPolynomial parse(std::string_view text);

  /// Substitutes the argument for n in a unary polynomial.
  static SecondOrderPolynomial from_unary(const UnaryPolynomial& p, const SecondOrderPolynomial& arg);

  Kind kind() const;
  const BigNat& value() const;  // for Const
  std::size_t depth() const;

  std::string to_string() const;

  struct Node;
  const Node* root() const noexcept { return node_.get(); }

 private:
  explicit SecondOrderPolynomial(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

BigNat eval_sop(const SecondOrderPolynomial& p, const SizeFunction& l, const BigNat& n);

/// p(n) := P(l_n, n) with l_n the constant-n function.
UnaryPolynomial step_count_from_bound(const SecondOrderPolynomial& p);

/// (p o l)^r(p(n)) + p(n).
SecondOrderPolynomial mpt_time_bound(const UnaryPolynomial& p, unsigned r);

/// C * (P(l, q) * q + 1) where q := Q(m -> P(l, m), n).
BigNat composition_bound(const SecondOrderPolynomial& p, const SecondOrderPolynomial& q,
                         const BigNat& c, const SizeFunction& l, const BigNat& n);

}  // namespace typetwo
