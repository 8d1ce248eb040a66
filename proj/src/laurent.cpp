#include "ccfrieze/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace ccfrieze {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
      throw std::invalid_argument("variable name must start with a letter: " + n);
    for (char ch : n)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
        throw std::invalid_argument("invalid character in variable name: " + n);
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: " + n);
  }
}

std::size_t VarTable::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::out_of_range("unknown variable: " + std::string(name));
  return static_cast<std::size_t>(it - names_.begin());
}

bool VarTable::contains(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

VarTablePtr make_vars(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}

// --------------------------------------------------------------------------

LaurentPoly::LaurentPoly(VarTablePtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw std::invalid_argument("null variable table");
}

LaurentPoly LaurentPoly::constant(VarTablePtr vars, const Integer& c) {
  return monomial(std::move(vars), {}, c);
}

LaurentPoly LaurentPoly::monomial(VarTablePtr vars, Monomial exponents, const Integer& c) {
  LaurentPoly p(std::move(vars));
  if (exponents.empty()) exponents.assign(p.vars_->size(), 0);
  if (exponents.size() != p.vars_->size())
    throw std::invalid_argument("monomial length does not match variable count");
  if (c != 0) p.terms_.emplace(std::move(exponents), c);
  return p;
}

LaurentPoly LaurentPoly::variable(VarTablePtr vars, std::string_view name) {
  Monomial e(vars->size(), 0);
  e[vars->index_of(name)] = 1;
  return monomial(std::move(vars), std::move(e), 1);
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool LaurentPoly::equals_constant(const Integer& c) const {
  if (c == 0) return terms_.empty();
  return is_constant() && !terms_.empty() && terms_.begin()->second == c;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

void LaurentPoly::require_same_vars(const LaurentPoly& q) const {
  if (vars_ != q.vars_ && !(*vars_ == *q.vars_))
    throw std::invalid_argument("Laurent polynomials over different variable tables");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  require_same_vars(q);
  for (const auto& [e, c] : q.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) { return *this += -q; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) {
  require_same_vars(q);
  TermMap out;
  Monomial e(vars_->size());
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : q.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = e1[k] + e2[k];
      auto [it, inserted] = out.emplace(e, c1 * c2);
      if (!inserted) {
        it->second += c1 * c2;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) {
    if (!is_unit()) throw std::domain_error("negative power of a non-unit Laurent polynomial");
    const auto& [e, c] = *terms_.begin();
    Monomial inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
    return monomial(vars_, inv, c).pow(-k);
  }
  LaurentPoly result = constant(vars_, 1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

bool LaurentPoly::operator==(const LaurentPoly& q) const {
  require_same_vars(q);
  return terms_ == q.terms_;
}

Rational LaurentPoly::evaluate(const std::map<std::string, Integer>& assignment) const {
  std::vector<Integer> values(vars_->size());
  for (std::size_t k = 0; k < vars_->size(); ++k) {
    auto it = assignment.find(vars_->name(k));
    if (it == assignment.end())
      throw std::invalid_argument("no value assigned to variable " + vars_->name(k));
    if (it->second == 0)
      throw std::domain_error("variable " + vars_->name(k) + " assigned zero");
    values[k] = it->second;
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Integer num = c, den = 1;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] > 0) num *= boost::multiprecision::pow(values[k], static_cast<unsigned>(e[k]));
      if (e[k] < 0) den *= boost::multiprecision::pow(values[k], static_cast<unsigned>(-e[k]));
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    sum += Rational(num, den);
  }
  return sum;
}

Rational LaurentPoly::evaluate_all(const Integer& value) const {
  std::map<std::string, Integer> a;
  for (const auto& n : vars_->names()) a[n] = value;
  return evaluate(a);
}

Monomial LaurentPoly::denominator() const {
  Monomial d(vars_->size(), 0);
  for (const auto& [e, c] : terms_)
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = std::min(d[k], e[k]);
  return d;
}

// --------------------------------------------------------------------------
// Formatting

std::string monomial_to_string(const Monomial& exponents, const VarTable& vars) {
  std::string out;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(k);
    if (exponents[k] != 1) out += '^' + std::to_string(exponents[k]);
  }
  return out;
}

namespace {

int total_degree(const Monomial& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::string format_sum(const std::vector<std::pair<Monomial, Integer>>& terms, const VarTable& vars) {
  auto sorted = terms;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    if (c < 0)
      out += '-';
    else if (!first)
      out += '+';
    first = false;
    Integer a = abs(c);
    std::string mono = monomial_to_string(e, vars);
    if (mono.empty())
      out += a.str();
    else if (a == 1)
      out += mono;
    else
      out += a.str() + '*' + mono;
  }
  return out;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  Monomial den = denominator();
  bool fraction = std::any_of(den.begin(), den.end(), [](int x) { return x < 0; });
  std::vector<std::pair<Monomial, Integer>> shifted;
  shifted.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    Monomial s = e;
    for (std::size_t k = 0; k < s.size(); ++k) s[k] -= den[k];
    shifted.emplace_back(std::move(s), c);
  }
  std::string num = format_sum(shifted, *vars_);
  if (!fraction) return num;
  Monomial pos(den.size());
  for (std::size_t k = 0; k < den.size(); ++k) pos[k] = -den[k];
  std::string d = monomial_to_string(pos, *vars_);
  if (terms_.size() == 1) return num + '/' + d;
  return '(' + num + ")/" + d;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

// --------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, VarTablePtr vars) : s_(text), vars_(std::move(vars)) {}

  LaurentPoly parse_all() {
    LaurentPoly p = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  bool peek_ident() {
    skip();
    return pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_');
  }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  int exponent() {
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    Integer v = integer();
    if (v > 1000000) fail("exponent out of range");
    int e = v.convert_to<int>();
    return neg ? -e : e;
  }

  Monomial mono() {
    Monomial e(vars_->size(), 0);
    do {
      if (!peek_ident()) fail("expected variable");
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (!vars_->contains(name)) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      int k = 1;
      if (accept('^')) k = exponent();
      e[vars_->index_of(name)] += k;
    } while (accept('*'));
    return e;
  }

  LaurentPoly divide_by(LaurentPoly p, const Monomial& d) {
    Monomial inv(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) inv[k] = -d[k];
    return p * LaurentPoly::monomial(vars_, inv, 1);
  }

  LaurentPoly item() {
    if (accept('(')) {
      LaurentPoly inner = sum();
      if (!accept(')')) fail("expected ')'");
      if (accept('/')) return divide_by(std::move(inner), mono());
      return inner;
    }
    Integer coeff = 1;
    bool have = false;
    if (peek_digit()) {
      coeff = integer();
      have = true;
      if (accept('*') && !peek_ident()) fail("expected variable after '*'");
    }
    Monomial e(vars_->size(), 0);
    if (peek_ident()) {
      e = mono();
      have = true;
    }
    if (!have) fail("expected term");
    LaurentPoly t = LaurentPoly::monomial(vars_, e, coeff);
    if (accept('/')) return divide_by(std::move(t), mono());
    return t;
  }

  LaurentPoly sum() {
    LaurentPoly acc(vars_);
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    for (;;) {
      LaurentPoly t = item();
      if (neg)
        acc -= t;
      else
        acc += t;
      if (accept('+'))
        neg = false;
      else if (accept('-'))
        neg = true;
      else
        break;
    }
    return acc;
  }

  std::string_view s_;
  VarTablePtr vars_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, VarTablePtr vars) {
  return Parser(text, std::move(vars)).parse_all();
}

}  // namespace ccfrieze
