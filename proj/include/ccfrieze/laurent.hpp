// Exact multivariate Laurent polynomials over the integers.
//
// A LaurentPoly lives in Z[x_1^{+-1}, ..., x_k^{+-1}] where the variables are
// given by a shared, immutable VarTable.  Values never carry zero
// coefficients, so structural equality is ring equality.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ccfrieze {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t k) const { return names_.at(k); }
  const std::vector<std::string>& names() const { return names_; }

  // Throws std::out_of_range for unknown names.
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const;

  bool operator==(const VarTable& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vars(std::vector<std::string> names);

// Exponent vector, one entry per variable; negative entries allowed.
using Monomial = std::vector<int>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Integer>;

  explicit LaurentPoly(VarTablePtr vars);

  static LaurentPoly constant(VarTablePtr vars, const Integer& c);
  static LaurentPoly monomial(VarTablePtr vars, Monomial exponents, const Integer& c = 1);
  static LaurentPoly variable(VarTablePtr vars, std::string_view name);

  // Accepts the expanded form "1+u*v-2*z^-1" and the fraction form
  // "(1+v*z)/z"; a single term may also carry a "/monomial" divisor.
  static LaurentPoly parse(std::string_view text, VarTablePtr vars);

  const VarTable& vars() const { return *vars_; }
  const VarTablePtr& vars_ptr() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // True iff the value equals the integer c.
  bool equals_constant(const Integer& c) const;
  // A single term with coefficient +-1.
  bool is_unit() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);
  LaurentPoly& operator*=(const LaurentPoly& q);
  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(LaurentPoly p, const LaurentPoly& q) { return p *= q; }

  // Integer powers; negative powers only for units.
  LaurentPoly pow(int k) const;

  bool operator==(const LaurentPoly& q) const;
  bool operator!=(const LaurentPoly& q) const { return !(*this == q); }

  // Throws std::invalid_argument if a variable is missing from the
  // assignment and std::domain_error if one is assigned zero.
  Rational evaluate(const std::map<std::string, Integer>& assignment) const;
  Rational evaluate_all(const Integer& value) const;

  // Canonical text: graded order (ascending total degree, ties broken by
  // descending exponent vector); the fraction form "(num)/den" whenever some
  // exponent is negative.
  std::string to_string() const;

  // Monomial of least exponents over all terms, clamped to at most zero.
  Monomial denominator() const;

 private:
  void require_same_vars(const LaurentPoly& q) const;

  VarTablePtr vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// Canonical text for a bare monomial with non-negative exponents, e.g. "u*v^2".
std::string monomial_to_string(const Monomial& exponents, const VarTable& vars);

}  // namespace ccfrieze
