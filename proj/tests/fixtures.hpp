#pragma once

#include "degenlab/presentation.hpp"

#include <memory>
#include <string>

namespace fixtures {

using namespace degenlab;

inline RingPtr ring(const std::string& name, std::vector<std::string> vars, std::vector<int> weights,
                    const std::string& relation) {
  const Polynomial f = parse_polynomial(relation, vars);
  int sum = 0;
  for (int w : weights) sum += w;
  const int twist = *f.degree(weights) - sum;
  return std::make_shared<RingSpec>(name, std::move(vars), std::move(weights), f, twist);
}

inline RingPtr truncated(int n) { return ring("kx" + std::to_string(n), {"x"}, {1}, "x^" + std::to_string(n)); }
inline RingPtr two_lines() { return ring("two-lines", {"x", "y"}, {1, 1}, "x^2 - y^2"); }
inline RingPtr cusp() { return ring("cusp", {"x", "y"}, {3, 2}, "x^2 - y^3"); }
inline RingPtr double_line() { return ring("kxy-x2", {"x", "y"}, {1, 1}, "x^2"); }

inline GradedMatrix matrix(const RingPtr& r, const std::vector<std::vector<std::string>>& entries,
                           std::vector<int> rows, std::vector<int> cols) {
  PolynomialMatrix m(static_cast<Eigen::Index>(entries.size()),
                     entries.empty() ? 0 : static_cast<Eigen::Index>(entries[0].size()));
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = r->parse_polynomial(entries[i][j]);
  return GradedMatrix(m, std::move(rows), std::move(cols));
}

// R/(x^i) over k[x]/(x^n).
inline Presentation cyclic(const RingPtr& r, int i, int n) {
  return Presentation(r, matrix(r, {{"x^" + std::to_string(i)}}, {0}, {i}),
                      matrix(r, {{"x^" + std::to_string(n - i)}}, {i}, {n}));
}

inline Presentation cusp_m1(const RingPtr& r) {
  return Presentation(r, matrix(r, {{"x", "y^2"}, {"-y", "-x"}}, {0, 1}, {3, 4}),
                      matrix(r, {{"x", "y^2"}, {"-y", "-x"}}, {3, 4}, {6, 7}));
}

inline Presentation line(const RingPtr& r, const std::string& l, const std::string& other) {
  return Presentation(r, matrix(r, {{l}}, {0}, {1}), matrix(r, {{other}}, {1}, {2}));
}

}  // namespace fixtures
