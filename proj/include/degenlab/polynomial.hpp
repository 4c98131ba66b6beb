#pragma once

#include "degenlab/rational.hpp"

#include <Eigen/Core>

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace degenlab {

using Exponent = std::vector<int>;

// Weighted degree of a monomial.
int weighted_degree(const Exponent& e, std::span<const int> weights);

// Sparse polynomial with rational coefficients. Terms are kept in descending
// lexicographic order of exponent vectors; zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational, std::greater<>>;

  Polynomial() = default;
  // Constant polynomial; the number of variables is taken from context when
  // it is combined with another polynomial.
  Polynomial(int constant);  // NOLINT(google-explicit-constructor): Eigen needs Scalar(0)
  Polynomial(const Rational& constant, std::size_t num_vars);
  static Polynomial monomial(const Rational& coefficient, Exponent exponent);
  static Polynomial variable(std::size_t index, std::size_t num_vars);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::size_t num_vars() const { return num_vars_; }

  void add_term(const Exponent& e, const Rational& c);

  // True iff every term has the given weighted degree (zero is homogeneous of any degree).
  bool is_homogeneous(std::span<const int> weights, int degree) const;
  // Weighted degree of the leading term; only meaningful for homogeneous input.
  std::optional<int> degree(std::span<const int> weights) const;
  int max_degree(std::span<const int> weights) const;

  Rational evaluate(std::span<const Rational> point) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Human-readable, e.g. "x^2 - 3/2*x*y".
  std::string to_string(std::span<const std::string> names) const;

 private:
  void adopt_arity(const Polynomial& other);
  Terms terms_;
  std::size_t num_vars_ = 0;
};

// Univariate polynomial in a parameter s, used for parametrized curves.
using UnivariatePolynomial = std::map<int, Rational>;
Rational evaluate(const UnivariatePolynomial& p, const Rational& s);

using PolynomialMatrix = MatrixX<Polynomial>;

}  // namespace degenlab

namespace Eigen {
template <>
struct NumTraits<degenlab::Polynomial> {
  using Real = degenlab::Polynomial;
  using NonInteger = degenlab::Polynomial;
  using Literal = degenlab::Polynomial;
  using Nested = degenlab::Polynomial;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 10,
    MulCost = 100
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
