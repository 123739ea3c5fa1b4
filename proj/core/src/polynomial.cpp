#include "torusplit/polynomial.hpp"

#include <cctype>
#include <set>
#include <utility>

#include "torusplit/error.hpp"

namespace torusplit {

VariableTable::VariableTable(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw Error(ErrorCode::InvalidArgument, "empty variable name");
    if (!(std::isalpha(static_cast<unsigned char>(v.name[0])) || v.name[0] == '_')) {
      throw Error(ErrorCode::InvalidArgument, "invalid variable name '" + v.name + "'");
    }
    for (char ch : v.name) {
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) {
        throw Error(ErrorCode::InvalidArgument, "invalid variable name '" + v.name + "'");
      }
    }
    if (!seen.insert(v.name).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate variable '" + v.name + "'");
    }
  }
}

std::optional<std::size_t> VariableTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

VariableTablePtr make_variable_table(std::vector<Variable> vars) {
  return std::make_shared<const VariableTable>(std::move(vars));
}

long Monomial::degree() const {
  long d = 0;
  for (long e : exponents) d += e;
  return d;
}

bool Monomial::is_constant() const {
  for (long e : exponents)
    if (e != 0) return false;
  return true;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  const long da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.exponents > b.exponents;
}

Polynomial::Polynomial(VariableTablePtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw Error(ErrorCode::InvalidArgument, "null variable table");
}

Polynomial Polynomial::constant(VariableTablePtr vars, const Rational& c) {
  Polynomial p(std::move(vars));
  p.add_term(Monomial{std::vector<long>(p.n_vars(), 0)}, c);
  return p;
}

Polynomial Polynomial::variable(VariableTablePtr vars, std::size_t index) {
  Polynomial p(std::move(vars));
  if (index >= p.n_vars()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  std::vector<long> e(p.n_vars(), 0);
  e[index] = 1;
  p.add_term(Monomial{std::move(e)}, Rational(1));
  return p;
}

Polynomial Polynomial::term(VariableTablePtr vars, Monomial m, const Rational& c) {
  Polynomial p(std::move(vars));
  if (m.exponents.size() != p.n_vars()) {
    throw Error(ErrorCode::DimensionMismatch, "monomial length differs from variable count");
  }
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] < 0 && !p.variables()[i].invertible) {
      throw Error(ErrorCode::NegativeExponentOnNonInvertible,
                  "negative exponent on non-invertible variable '" +
                      p.variables()[i].name + "'");
    }
  }
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (vars_ != other.vars_ && !(*vars_ == *other.vars_)) {
    throw Error(ErrorCode::InvalidArgument, "polynomials over different variable tables");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coeff] : terms_) coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial p(a.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] += mb.exponents[i];
      p.add_term(m, ca * cb);
    }
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial result = constant(vars_, Rational(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

namespace {

constexpr long kMaxExponent = 1'000'000;
constexpr long kMaxPolynomialPower = 64;

class Parser {
public:
  Parser(std::string_view text, VariableTablePtr vars)
      : text_(text), vars_(std::move(vars)) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) throw SyntaxError(pos_, "empty input");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw SyntaxError(pos_, "unexpected '" + std::string(1, text_[pos_]) +
                                  "' (multiplication must be written with '*')");
    }
    return p;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) {
      throw SyntaxError(pos_, std::string("expected '") + ch + "'" + found());
    }
  }

  std::string found() const {
    if (pos_ >= text_.size()) return " but reached end of input";
    return std::string(" but found '") + text_[pos_] + "'";
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    return power();
  }

  Polynomial power() {
    const std::size_t base_pos = (skip_ws(), pos_);
    Polynomial base = primary();
    if (!accept('^')) return base;
    const std::size_t exp_pos = (skip_ws(), pos_);
    long e = exponent();
    if (e >= 0) {
      if (e > kMaxPolynomialPower && base.terms().size() > 1) {
        throw SyntaxError(exp_pos, "exponent too large for a multi-term base");
      }
      return base.pow(static_cast<unsigned long>(e));
    }
    if (base.terms().size() != 1) {
      throw SyntaxError(exp_pos, "negative exponent requires a single-term base");
    }
    const auto& [m, c] = *base.terms().begin();
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] != 0 && !vars_->operator[](i).invertible) {
        throw Error(ErrorCode::NegativeExponentOnNonInvertible,
                    "negative exponent on non-invertible variable '" +
                        (*vars_)[i].name + "' at position " + std::to_string(base_pos));
      }
    }
    Monomial inv = m;
    for (auto& x : inv.exponents) x = -x;
    Polynomial unit = Polynomial::term(vars_, inv, 1 / c);
    return unit.pow(static_cast<unsigned long>(-e));
  }

  long exponent() {
    const bool paren = accept('(');
    bool negative = false;
    if (accept('-')) negative = true;
    skip_ws();
    const std::size_t start = pos_;
    Integer value = digits();
    if (!value.fits_slong_p() || value > kMaxExponent) {
      throw SyntaxError(start, "exponent too large");
    }
    if (paren) expect(')');
    const long e = value.get_si();
    return negative ? -e : e;
  }

  Integer digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "expected integer" + found());
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "expected operand but reached end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial p = expr();
      expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Integer num = digits();
      Integer den = 1;
      if (accept('/')) {
        const std::size_t den_pos = (skip_ws(), pos_);
        den = digits();
        if (den == 0) throw SyntaxError(den_pos, "zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(vars_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      auto idx = vars_->index_of(name);
      if (!idx) {
        throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) +
                                                    "' at position " + std::to_string(start));
      }
      return Polynomial::variable(vars_, *idx);
    }
    throw SyntaxError(pos_, std::string("unexpected '") + ch + "'");
  }

  std::string_view text_;
  VariableTablePtr vars_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, VariableTablePtr vars) {
  return Parser(text, std::move(vars)).parse();
}

std::string to_string(const Monomial& m, const VariableTable& vars) {
  std::string s;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    const long e = m.exponents[i];
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i].name;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    const Rational a = abs(c);
    if (m.is_constant()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += to_string(m, p.variables());
    }
  }
  return s;
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.n_vars()) {
    throw Error(ErrorCode::DimensionMismatch, "point length differs from variable count");
  }
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (p.variables()[i].invertible && point[i] == 0) {
      throw Error(ErrorCode::ZeroAtInvertibleVariable,
                  "invertible variable '" + p.variables()[i].name + "' is zero at the point");
    }
  }
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      const long e = m.exponents[i];
      if (e == 0) continue;
      Rational base = point[i];
      if (base == 0) {
        t = 0;
        break;
      }
      Rational f;
      mpz_pow_ui(f.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
      mpz_pow_ui(f.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
      f.canonicalize();
      t *= e < 0 ? Rational(1 / f) : f;
    }
    total += t;
  }
  return total;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var_index) {
  if (var_index >= p.n_vars()) {
    throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  }
  Polynomial d(p.variable_table());
  for (const auto& [m, c] : p.terms()) {
    const long e = m.exponents[var_index];
    if (e == 0) continue;
    Monomial dm = m;
    dm.exponents[var_index] = e - 1;
    d += Polynomial::term(p.variable_table(), std::move(dm), c * e);
  }
  return d;
}

} // namespace torusplit
