#include "lieelem/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "lieelem/errors.hpp"

namespace lieelem {

// ---------------------------------------------------------------- Var

Var::Var(char kind, std::initializer_list<int> indices)
    : Var(kind, std::vector<int>(indices)) {}

Var::Var(char kind, const std::vector<int>& indices) {
  if (indices.size() > static_cast<std::size_t>(kMaxIndices)) {
    throw DimensionError("Var: at most four indices are supported");
  }
  code_ = static_cast<std::uint64_t>(static_cast<unsigned char>(kind)) << 56;
  code_ |= static_cast<std::uint64_t>(indices.size()) << 48;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] > kMaxIndex) throw DimensionError("Var: index out of range");
    code_ |= static_cast<std::uint64_t>(indices[i]) << (36 - 12 * i);
  }
}

std::vector<int> Var::indices() const {
  const auto count = static_cast<std::size_t>((code_ >> 48) & 0xff);
  std::vector<int> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = static_cast<int>((code_ >> (36 - 12 * i)) & 0xfff);
  }
  return out;
}

std::string Var::name() const {
  std::string s(1, kind());
  const auto idx = indices();
  if (idx.empty()) return s;
  s += '[';
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(idx[i]);
  }
  s += ']';
  return s;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  std::vector<Factor> merged;
  for (const auto& [v, e] : factors_) {
    if (e == 0) continue;
    if (!merged.empty() && merged.back().first == v) {
      merged.back().second += e;
    } else {
      merged.emplace_back(v, e);
    }
  }
  factors_ = std::move(merged);
}

Monomial Monomial::of(Var v, unsigned exponent) { return Monomial({{v, exponent}}); }

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned Monomial::exponent(Var v) const {
  const auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{v, 0u},
                                   [](const Factor& a, const Factor& b) { return a.first < b.first; });
  return (it != factors_.end() && it->first == v) ? it->second : 0u;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [v, e] : factors_) {
    if (other.exponent(v) < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<Factor> out;
  for (const auto& [v, e] : other.factors_) {
    const unsigned mine = exponent(v);
    if (e > mine) out.emplace_back(v, e - mine);
  }
  return Monomial(std::move(out));
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += '*';
    s += factors_[i].first.name();
    if (factors_[i].second != 1) s += '^' + std::to_string(factors_[i].second);
  }
  return s;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) {
      // The monomial carrying the earlier variable is the larger one.
      return fb[i].first < fa[i].first;
    }
    if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second;
  }
  // Equal degree and identical prefix means identical monomials.
  return false;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

MultiPoly MultiPoly::variable(Var v) { return term(Monomial::of(v), Rational(1)); }

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const { return coeff_at(Monomial{}); }

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0u : terms_.rbegin()->first.degree();
}

Rational MultiPoly::coeff_at(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::evaluate(const std::function<Rational(Var)>& value_of) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m.factors()) t *= pow(value_of(v), e);
    total += t;
  }
  return total;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

MultiPoly& MultiPoly::operator/=(const Rational& c) {
  for (auto& [m, coef] : terms_) coef /= c;
  return *this;
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("MultiPoly: division by zero");
  if (b.is_constant()) return a / b.constant_term();
  const auto& [lead_m, lead_c] = *b.terms_.rbegin();
  MultiPoly quotient;
  MultiPoly rest = a;
  // Single-divisor division by leading terms terminates with zero remainder
  // exactly when b divides a.
  while (!rest.is_zero()) {
    const auto& [rm, rc] = *rest.terms_.rbegin();
    if (!lead_m.divides(rm)) throw InexactDivisionError("MultiPoly: divisor does not divide dividend");
    const MultiPoly t = MultiPoly::term(lead_m.quotient_of(rm), rc / lead_c);
    quotient += t;
    rest -= t * b;
  }
  return quotient;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    Rational c = it->second;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (c.sign() < 0) c = -c;
    if (m.is_one()) {
      os << c;
    } else {
      if (!c.is_one()) os << c << '*';
      os << m.to_string();
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
  MultiPoly result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

Rational coeff_at(const MultiPoly& p, const std::vector<Monomial::Factor>& exponents) {
  return p.coeff_at(Monomial(exponents));
}

}  // namespace lieelem
