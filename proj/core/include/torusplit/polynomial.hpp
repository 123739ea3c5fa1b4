#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "torusplit/integer.hpp"

namespace torusplit {

struct Variable {
  std::string name;
  bool invertible = false;

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Ordered variable names; invertible variables admit negative exponents.
class VariableTable {
public:
  explicit VariableTable(std::vector<Variable> vars);

  std::size_t size() const noexcept { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const noexcept { return vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VariableTable&, const VariableTable&) = default;

private:
  std::vector<Variable> vars_;
};

using VariableTablePtr = std::shared_ptr<const VariableTable>;

VariableTablePtr make_variable_table(std::vector<Variable> vars);

/// Exponent vector, one entry per variable of the table.
struct Monomial {
  std::vector<long> exponents;

  long degree() const;
  bool is_constant() const;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Total degree descending, then lexicographic descending in variable order.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Laurent polynomial with exact rational coefficients.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  explicit Polynomial(VariableTablePtr vars);

  static Polynomial constant(VariableTablePtr vars, const Rational& c);
  static Polynomial variable(VariableTablePtr vars, std::size_t index);
  /// Throws NegativeExponentOnNonInvertible when the exponents violate the
  /// invertibility flags.
  static Polynomial term(VariableTablePtr vars, Monomial m, const Rational& c);

  const VariableTable& variables() const noexcept { return *vars_; }
  const VariableTablePtr& variable_table() const noexcept { return vars_; }
  std::size_t n_vars() const noexcept { return vars_->size(); }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned long e) const;

private:
  void add_term(const Monomial& m, const Rational& c);
  void check_compatible(const Polynomial& other) const;

  VariableTablePtr vars_;
  TermMap terms_;
};

/// Parses the polynomial grammar documented in the README:
///
///   expr    := term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := ('+' | '-') factor | power
///   power   := primary ('^' exponent)?
///   exponent:= ['-'] INT | '(' ['-'] INT ')'
///   primary := INT ['/' INT] | IDENT | '(' expr ')'
///
/// Multiplication must be explicit. Throws SyntaxError (with byte offset),
/// UnknownVariable and NegativeExponentOnNonInvertible.
Polynomial parse_polynomial(std::string_view text, VariableTablePtr vars);

/// Canonical text: terms in GrlexDescending order, reparseable.
std::string to_string(const Polynomial& p);
std::string to_string(const Monomial& m, const VariableTable& vars);

/// Exact value at a point. Throws ZeroAtInvertibleVariable when an invertible
/// coordinate is zero, DimensionMismatch on a wrong-length point.
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

Polynomial partial_derivative(const Polynomial& p, std::size_t var_index);

} // namespace torusplit
