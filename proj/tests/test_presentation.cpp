#include <doctest.h>

#include "degenlab/presentation.hpp"

using namespace degenlab;

namespace {

RingPtr truncated_line(int n) {
  Polynomial f = Polynomial::monomial(Rational(1), {n});
  return std::make_shared<RingSpec>("kx" + std::to_string(n), std::vector<std::string>{"x"},
                                    std::vector<int>{1}, f, n - 1);
}

Presentation cyclic(const RingPtr& r, int i, int n) {
  PolynomialMatrix phi(1, 1), psi(1, 1);
  phi(0, 0) = Polynomial::monomial(Rational(1), {i});
  psi(0, 0) = Polynomial::monomial(Rational(1), {n - i});
  return Presentation(r, GradedMatrix(phi, {0}, {i}), GradedMatrix(psi, {i}, {n}));
}

}  // namespace

TEST_CASE("pieces of k[x]/(x^i) over k[x]/(x^n)") {
  const auto r = truncated_line(4);
  const auto m = cyclic(r, 2, 4);
  CHECK(m.dimension(-1) == 0);
  CHECK(m.dimension(0) == 1);
  CHECK(m.dimension(1) == 1);
  CHECK(m.dimension(2) == 0);
  const auto s = m.shifted(3);
  CHECK(s.dimension(-3) == 1);
  CHECK(s.dimension(-2) == 1);
  CHECK(s.dimension(-1) == 0);
  const auto f = Presentation::free(r, 0);
  for (int d = 0; d < 4; ++d) CHECK(f.dimension(d) == 1);
  CHECK(f.dimension(4) == 0);
}

TEST_CASE("matrix factorization identities are enforced") {
  const auto r = truncated_line(3);
  PolynomialMatrix phi(1, 1), psi(1, 1);
  phi(0, 0) = Polynomial::monomial(Rational(1), {1});
  psi(0, 0) = Polynomial::monomial(Rational(1), {1});
  CHECK_THROWS(Presentation(r, GradedMatrix(phi, {0}, {1}), GradedMatrix(psi, {1}, {2})));
}
