#include "degenlab/localization.hpp"

#include "degenlab/error.hpp"

#include <algorithm>

namespace degenlab {

long localization_rank(const Presentation& m, const MinimalPrime& p) {
  const RingSpec& ring = *m.ring();
  if (p.parametrization.size() != ring.num_vars())
    throw Error(ErrorCode::kUnsupported, "prime " + p.id + " has no parametrization for every variable");
  std::vector<int> var_degree;
  for (const auto& u : p.parametrization) var_degree.push_back(u.empty() ? 0 : u.rbegin()->first);
  const GradedMatrix& phi = m.phi();
  int max_degree = 0;
  for (Eigen::Index i = 0; i < phi.rows(); ++i)
    for (Eigen::Index j = 0; j < phi.cols(); ++j)
      for (const auto& [e, c] : phi.entries(i, j).terms()) {
        int d = 0;
        for (std::size_t k = 0; k < e.size(); ++k) d += e[k] * var_degree[k];
        max_degree = std::max(max_degree, d);
      }
  // A nonzero r x r minor has degree <= r * max_degree in s, so it survives at
  // one of r * max_degree + 1 distinct points.
  const long samples = std::min(phi.rows(), phi.cols()) * static_cast<long>(max_degree) + 1;
  Eigen::Index best = 0;
  for (long s = 1; s <= samples; ++s) {
    std::vector<Rational> point;
    for (const auto& u : p.parametrization) point.push_back(evaluate(u, Rational(s)));
    RationalMatrix a(phi.rows(), phi.cols());
    for (Eigen::Index i = 0; i < phi.rows(); ++i)
      for (Eigen::Index j = 0; j < phi.cols(); ++j) a(i, j) = phi.entries(i, j).evaluate(point);
    best = std::max(best, rank(a));
  }
  return static_cast<long>(phi.rows() - best);
}

namespace {

Presentation free_module(const RingPtr& ring, const std::vector<int>& degrees) {
  std::vector<Presentation> parts;
  for (int g : degrees) parts.push_back(Presentation::free(ring, -g));
  return direct_sum(ring, parts);
}

}  // namespace

void verify_resolution(const Presentation& y, const FreeResolution& res, const Window& window) {
  const RingPtr& ring = y.ring();
  auto fail = [](const std::string& why) { return Error(ErrorCode::kPrecondition, "resolution check failed: " + why); };
  if (res.differentials.empty()) throw fail("no differentials");
  if (!(res.differentials[0] == y.phi())) throw fail("first differential differs from the presentation");
  std::vector<Presentation> terms;
  terms.push_back(free_module(ring, res.differentials[0].row_degrees));
  for (std::size_t k = 0; k < res.differentials.size(); ++k) {
    const GradedMatrix& d = res.differentials[k];
    validate(d, *ring, "differential " + std::to_string(k + 1));
    if (d.row_degrees != terms.back().generator_degrees())
      throw fail("differential " + std::to_string(k + 1) + " has mismatched degrees");
    terms.push_back(free_module(ring, d.col_degrees));
  }
  for (std::size_t k = 0; k + 1 < res.differentials.size(); ++k) {
    if (!is_zero_map(res.differentials[k] * res.differentials[k + 1], terms[k + 2], terms[k]))
      throw fail("d" + std::to_string(k + 1) + " * d" + std::to_string(k + 2) + " is not zero over R");
  }
  for (int deg = window.lo; deg <= window.hi; ++deg) {
    // rank of d_k in this degree; d_0 := 0 -> exactness at F_k for k >= 1.
    std::vector<Eigen::Index> ranks;
    for (std::size_t k = 0; k < res.differentials.size(); ++k)
      ranks.push_back(rank(induced_map(res.differentials[k], terms[k + 1], terms[k], deg)));
    for (std::size_t k = 1; k < terms.size(); ++k) {
      const Eigen::Index kernel = terms[k].dimension(deg) - ranks[k - 1];
      const Eigen::Index image = k < ranks.size() ? ranks[k] : 0;
      if (kernel != image)
        throw fail("not exact at F_" + std::to_string(k) + " in degree " + std::to_string(deg));
    }
  }
}

bool finite_pd_hom_test(const Presentation& m, const Presentation& n, const Presentation& y,
                        const FreeResolution& res, std::optional<Window> window) {
  Window w = window ? *window : natural_window(y);
  verify_resolution(y, res, w);
  const auto rm = rational_form(m), rn = rational_form(n);
  if (rm && rn) {
    if (!(*rm == *rn)) throw Error(ErrorCode::kPrecondition, "finite_pd_hom_test needs h(M) = h(N)");
  } else {
    const Window wm = natural_window(m), wn = natural_window(n);
    for (int d = std::min(wm.lo, wn.lo); d <= std::max(wm.hi, wn.hi); ++d)
      if (m.dimension(d) != n.dimension(d))
        throw Error(ErrorCode::kPrecondition, "finite_pd_hom_test needs h(M) = h(N)");
  }
  return hom_dim(m, y) == hom_dim(n, y);
}

}  // namespace degenlab
