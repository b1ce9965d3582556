#include "logres/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "logres/errors.hpp"

namespace logres {

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

VariableList merge_variables(const VariableList& a, const VariableList& b) {
  VariableList out = a;
  for (const auto& v : b) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

namespace {

const std::shared_ptr<const VariableList>& empty_vars() {
  static const auto empty = std::make_shared<const VariableList>();
  return empty;
}

}  // namespace

Polynomial::Polynomial() : vars_(empty_vars()) {}

Polynomial::Polynomial(VariableList vars) : vars_(std::make_shared<const VariableList>(std::move(vars))) {}

Polynomial::Polynomial(std::shared_ptr<const VariableList> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {}

Polynomial Polynomial::constant(const Rational& c, VariableList vars) {
  Polynomial p(std::move(vars));
  p.add_term(Exponent(p.vars_->size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(const std::string& name, VariableList vars) {
  if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
  Polynomial p(std::move(vars));
  Exponent e(p.vars_->size(), 0);
  e[*p.index_of(name)] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(VariableList vars, Exponent e, const Rational& c) {
  if (e.size() != vars.size()) throw InvalidArgument("exponent length does not match variables");
  Polynomial p(std::move(vars));
  p.add_term(e, c);
  return p;
}

std::optional<std::size_t> Polynomial::index_of(const std::string& name) const {
  auto it = std::find(vars_->begin(), vars_->end(), name);
  if (it == vars_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_->begin());
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_term() const {
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) == 0) return c;
  }
  return 0;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.begin()->first));
}

int Polynomial::degree_in(const std::string& name) const {
  if (terms_.empty()) return -1;
  auto idx = index_of(name);
  if (!idx) return 0;
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[*idx]);
  return static_cast<int>(best);
}

VariableList Polynomial::support() const {
  std::vector<bool> used(vars_->size(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] > 0;
  }
  VariableList out;
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (used[i]) out.push_back((*vars_)[i]);
  }
  return out;
}

std::pair<Exponent, Rational> Polynomial::leading_term() const {
  if (terms_.empty()) throw InvalidArgument("leading term of zero polynomial");
  return *terms_.begin();
}

Polynomial Polynomial::embed(const VariableList& target) const {
  if (target == *vars_) return *this;
  std::vector<std::size_t> map(vars_->size(), target.size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = std::find(target.begin(), target.end(), (*vars_)[i]);
    if (it != target.end()) map[i] = static_cast<std::size_t>(it - target.begin());
  }
  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Exponent ne(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] == target.size()) {
        throw MissingAssignment("variable '" + (*vars_)[i] + "' not in target ring");
      }
      ne[map[i]] = e[i];
    }
    out.add_term(ne, c);
  }
  return out;
}

Polynomial Polynomial::derivative(const std::string& name) const {
  Polynomial out(vars_, {});
  auto idx = index_of(name);
  if (!idx) return out;
  for (const auto& [e, c] : terms_) {
    if (e[*idx] == 0) continue;
    Exponent ne = e;
    ne[*idx] -= 1;
    out.add_term(ne, c * Rational(static_cast<long>(e[*idx])));
  }
  return out;
}

namespace {

Rational rational_pow(const Rational& base, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= base;
  return r;
}

}  // namespace

Rational Polynomial::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<const Rational*> values(vars_->size(), nullptr);
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = point.find((*vars_)[i]);
    if (it != point.end()) values[i] = &it->second;
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!values[i]) throw MissingAssignment("no value for '" + (*vars_)[i] + "'");
      t *= rational_pow(*values[i], e[i]);
    }
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::partial_evaluate(const std::map<std::string, Rational>& point) const {
  Polynomial out(vars_, {});
  std::vector<const Rational*> values(vars_->size(), nullptr);
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = point.find((*vars_)[i]);
    if (it != point.end()) values[i] = &it->second;
  }
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    Exponent ne = e;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (values[i] && e[i] > 0) {
        t *= rational_pow(*values[i], e[i]);
        ne[i] = 0;
      }
    }
    out.add_term(ne, t);
  }
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(1, *vars_);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::coefficient_of(const std::string& name, unsigned power) const {
  Polynomial out(vars_, {});
  auto idx = index_of(name);
  for (const auto& [e, c] : terms_) {
    const unsigned have = idx ? e[*idx] : 0;
    if (have != power) continue;
    Exponent ne = e;
    if (idx) ne[*idx] = 0;
    out.add_term(ne, c);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (!mag.is_one() || total_degree(e) == 0) {
      os << mag.to_string();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << (*vars_)[i];
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

std::shared_ptr<const VariableList> Polynomial::merged(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ == b.vars_ || *a.vars_ == *b.vars_) return a.vars_;
  return std::make_shared<const VariableList>(merge_variables(*a.vars_, *b.vars_));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  auto vars = merged(*this, o);
  if (vars != vars_) *this = embed(*vars);
  const Polynomial rhs = (*o.vars_ == *vars_) ? o : o.embed(*vars_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  auto vars = Polynomial::merged(a, b);
  const Polynomial lhs = (*a.vars_ == *vars) ? a : a.embed(*vars);
  const Polynomial rhs = (*b.vars_ == *vars) ? b : b.embed(*vars);
  Polynomial out(vars, {});
  Exponent e(vars->size());
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (*a.vars_ == *b.vars_) return a.terms_ == b.terms_;
  const VariableList vars = merge_variables(*a.vars_, *b.vars_);
  return a.embed(vars).terms_ == b.embed(vars).terms_;
}

namespace {

bool divides(const Exponent& small, const Exponent& big) {
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small[i] > big[i]) return false;
  }
  return true;
}

Exponent exponent_difference(const Exponent& big, const Exponent& small) {
  Exponent out(big.size());
  for (std::size_t i = 0; i < big.size(); ++i) out[i] = big[i] - small[i];
  return out;
}

// One-divisor division; returns {quotient, remainder}.
std::pair<Polynomial, Polynomial> divide(const Polynomial& f, const Polynomial& g, bool stop_on_remainder) {
  if (g.is_zero()) throw DivisionByZero("division by the zero polynomial");
  const VariableList vars = merge_variables(f.variables(), g.variables());
  Polynomial r = f.embed(vars);
  const Polynomial d = g.embed(vars);
  const auto [lg, lc] = d.leading_term();
  Polynomial q(vars);
  Polynomial rem(vars);
  while (!r.is_zero()) {
    const auto [lr, rc] = r.leading_term();
    if (divides(lg, lr)) {
      const Polynomial t = Polynomial::monomial(vars, exponent_difference(lr, lg), rc / lc);
      q += t;
      r -= t * d;
    } else {
      if (stop_on_remainder) throw NotDivisible(f.to_string() + " by " + g.to_string());
      const Polynomial t = Polynomial::monomial(vars, lr, rc);
      rem += t;
      r -= t;
    }
  }
  return {q, rem};
}

}  // namespace

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) { return divide(f, g, true).first; }

Polynomial normal_form(const Polynomial& f, const Polynomial& g) { return divide(f, g, false).second; }

Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& assignment,
                      std::optional<VariableList> target) {
  const VariableList& fv = f.variables();
  std::vector<const Polynomial*> images(fv.size(), nullptr);
  const VariableList support = f.support();
  VariableList vars = target ? *target : VariableList{};
  for (std::size_t i = 0; i < fv.size(); ++i) {
    auto it = assignment.find(fv[i]);
    if (it != assignment.end()) images[i] = &it->second;
  }
  for (const auto& name : support) {
    const std::size_t i = *f.index_of(name);
    if (!images[i]) throw MissingAssignment("no image for '" + name + "'");
    if (!target) vars = merge_variables(vars, images[i]->variables());
  }
  // Power cache per variable.
  std::vector<std::vector<Polynomial>> powers(fv.size());
  auto power_of = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(1, vars));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]->embed(vars));
    return cache[k];
  };
  Polynomial out(vars);
  for (const auto& [e, c] : f.terms()) {
    Polynomial term = Polynomial::constant(c, vars);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term *= power_of(i, e[i]);
    }
    out += term;
  }
  return out.embed(vars);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::optional<VariableList> vars) : text_(text), fixed_(vars.has_value()) {
    if (vars) vars_ = *vars;
  }

  Polynomial run() {
    Polynomial p = expression();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p.embed(vars_);
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  Polynomial expression() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        Polynomial d = factor();
        if (!d.is_constant()) fail("division by a non-constant");
        if (d.is_zero()) throw DivisionByZero("in polynomial text");
        acc *= d.constant_term().inverse();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Polynomial base = primary();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Polynomial primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial p = expression();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial::constant(Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_' || text_[pos_] == '\'')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
        if (fixed_) fail("unknown variable '" + name + "'");
        vars_.push_back(name);
      }
      return Polynomial::variable(name, vars_);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool fixed_;
  VariableList vars_;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, std::optional<VariableList> vars) {
  return Parser(text, std::move(vars)).run();
}

}  // namespace logres
