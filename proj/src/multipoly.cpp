#include "pfrac/multipoly.hpp"

#include <numeric>
#include <sstream>

#include "pfrac/error.hpp"

namespace pfrac {

namespace {

std::uint64_t degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

}  // namespace

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = degree(a);
  const auto db = degree(b);
  if (da != db) return da > db;
  return b < a;
}

MultiPoly MultiPoly::constant(std::size_t n_vars, const Rational& c) {
  MultiPoly p(n_vars);
  p.add_term(Exponent(n_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t n_vars, std::size_t index) {
  if (index >= n_vars) throw Error(ErrorCode::DimensionMismatch, "variable index out of range");
  Exponent e(n_vars, 0);
  e[index] = 1;
  MultiPoly p(n_vars);
  p.add_term(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::from_terms(std::size_t n_vars,
                                const std::vector<std::pair<Exponent, Rational>>& terms) {
  MultiPoly p(n_vars);
  for (const auto& [e, c] : terms) {
    if (e.size() != n_vars) {
      throw Error(ErrorCode::DimensionMismatch,
                  "exponent vector of length " + std::to_string(e.size()) + " in a ring of " +
                      std::to_string(n_vars) + " variables");
    }
    p.add_term(e, c);
  }
  return p;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void MultiPoly::check_same_ring(const MultiPoly& other, const char* op) const {
  if (other.n_vars_ != n_vars_) {
    throw Error(ErrorCode::DimensionMismatch, std::string(op) + " of polynomials in " +
                                                  std::to_string(n_vars_) + " and " +
                                                  std::to_string(other.n_vars_) + " variables");
  }
}

bool MultiPoly::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  return degree(e) == 0 && c == Rational(1);
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree(terms_.begin()->first));
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational() : it->second;
}

Rational MultiPoly::evaluate(const RatVector& point) const {
  if (point.size() != n_vars_) {
    throw Error(ErrorCode::DimensionMismatch,
                "evaluation point of length " + std::to_string(point.size()) + " for " +
                    std::to_string(n_vars_) + " variables");
  }
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < n_vars_; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += "x" + std::to_string(i);
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    const Rational mag = c.abs();
    if (monomial.empty()) {
      os << mag;
    } else if (mag == Rational(1)) {
      os << monomial;
    } else {
      os << mag << '*' << monomial;
    }
  }
  return os.str();
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(n_vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_same_ring(rhs, "sum");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_same_ring(rhs, "difference");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  lhs.check_same_ring(rhs, "product");
  MultiPoly out(lhs.n_vars_);
  Exponent e(lhs.n_vars_);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
  MultiPoly out(p.n_vars_);
  if (c.is_zero()) return out;
  for (const auto& [e, coeff] : p.terms_) out.terms_.emplace(e, c * coeff);
  return out;
}

MultiPoly poly_from_form(const AffineForm& form) {
  const std::size_t n = form.a.size();
  std::vector<std::pair<Exponent, Rational>> terms;
  for (std::size_t j = 0; j < n; ++j) {
    Exponent e(n, 0);
    e[j] = 1;
    terms.emplace_back(std::move(e), form.a[j]);
  }
  terms.emplace_back(Exponent(n, 0), form.mu);
  return MultiPoly::from_terms(n, terms);
}

MultiPoly product_of_forms(std::size_t n_vars, std::span<const AffineForm> forms) {
  MultiPoly out = MultiPoly::constant(n_vars, Rational(1));
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].a.size() != n_vars) {
      throw Error(ErrorCode::DimensionMismatch,
                  "form " + std::to_string(i) + " has dimension " +
                      std::to_string(forms[i].a.size()) + ", expected " + std::to_string(n_vars));
    }
    out = out * poly_from_form(forms[i]);
  }
  return out;
}

}  // namespace pfrac
