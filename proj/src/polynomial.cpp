#include "degenlab/polynomial.hpp"

#include "degenlab/error.hpp"

#include <sstream>

namespace degenlab {

int weighted_degree(const Exponent& e, std::span<const int> weights) {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * weights[i];
  return d;
}

Polynomial::Polynomial(int constant) {
  if (constant != 0) terms_.emplace(Exponent{}, Rational(constant));
}

Polynomial::Polynomial(const Rational& constant, std::size_t num_vars) : num_vars_(num_vars) {
  if (constant != 0) terms_.emplace(Exponent(num_vars, 0), constant);
}

Polynomial Polynomial::monomial(const Rational& coefficient, Exponent exponent) {
  Polynomial p;
  p.num_vars_ = exponent.size();
  if (coefficient != 0) p.terms_.emplace(std::move(exponent), coefficient);
  return p;
}

Polynomial Polynomial::variable(std::size_t index, std::size_t num_vars) {
  Exponent e(num_vars, 0);
  e.at(index) = 1;
  return monomial(Rational(1), std::move(e));
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  for (int v : terms_.begin()->first)
    if (v != 0) return false;
  return true;
}

Rational Polynomial::constant_term() const {
  for (const auto& [e, c] : terms_) {
    bool all_zero = true;
    for (int v : e) all_zero = all_zero && v == 0;
    if (all_zero) return c;
  }
  return Rational(0);
}

void Polynomial::adopt_arity(const Polynomial& other) {
  if (num_vars_ >= other.num_vars_) return;
  // Constants built from Polynomial(int) carry an empty exponent; pad them.
  Terms padded;
  for (auto& [e, c] : terms_) {
    Exponent f = e;
    f.resize(other.num_vars_, 0);
    padded.emplace(std::move(f), c);
  }
  terms_ = std::move(padded);
  num_vars_ = other.num_vars_;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  Exponent f = e;
  if (f.size() < num_vars_) f.resize(num_vars_, 0);
  if (f.size() > num_vars_) {
    Polynomial arity;
    arity.num_vars_ = f.size();
    adopt_arity(arity);
  }
  auto [it, inserted] = terms_.emplace(std::move(f), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_homogeneous(std::span<const int> weights, int degree) const {
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f.resize(weights.size(), 0);
    if (weighted_degree(f, weights) != degree) return false;
  }
  return true;
}

std::optional<int> Polynomial::degree(std::span<const int> weights) const {
  if (terms_.empty()) return std::nullopt;
  Exponent f = terms_.begin()->first;
  f.resize(weights.size(), 0);
  return weighted_degree(f, weights);
}

int Polynomial::max_degree(std::span<const int> weights) const {
  int best = 0;
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f.resize(weights.size(), 0);
    best = std::max(best, weighted_degree(f, weights));
  }
  return best;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  adopt_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  adopt_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  out.num_vars_ = std::max(a.num_vars_, b.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(out.num_vars_, 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ == b.num_vars_) return a.terms_ == b.terms_;
  Polynomial pa = a;
  Polynomial pb = b;
  pa.adopt_arity(pb);
  pb.adopt_arity(pa);
  return pa.terms_ == pb.terms_;
}

Polynomial operator-(Polynomial a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool any_var = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) vars << "*";
      vars << (i < names.size() ? names[i] : "v" + std::to_string(i));
      if (e[i] > 1) vars << "^" << e[i];
      any_var = true;
    }
    if (!any_var) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << "*";
      out << vars.str();
    }
  }
  return out.str();
}

Rational evaluate(const UnivariatePolynomial& p, const Rational& s) {
  Rational total(0);
  for (const auto& [k, c] : p) {
    Rational term = c;
    for (int i = 0; i < k; ++i) term *= s;
    total += term;
  }
  return total;
}

}  // namespace degenlab
