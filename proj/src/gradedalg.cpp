#include "degenlab/gradedalg.hpp"

#include "degenlab/error.hpp"

#include <algorithm>
#include <random>

namespace degenlab {

namespace {

// Adds c * p * x^u to generator `gen` of the ambient vector of `piece`.
void accumulate(RationalVector& v, const GradedPiece& piece, int gen, const Polynomial& p, const Exponent& u,
                std::size_t nv) {
  for (const auto& [e, c] : p.terms()) {
    Exponent m(nv, 0);
    for (std::size_t k = 0; k < nv; ++k) m[k] = (k < u.size() ? u[k] : 0) + (k < e.size() ? e[k] : 0);
    const int idx = piece.coordinate(gen, m);
    if (idx < 0) throw Error(ErrorCode::kMalformed, "map entry has the wrong degree");
    v(idx) += c;
  }
}

void check_map_shape(const GradedMatrix& map, const Presentation& source, const Presentation& target) {
  if (source.ring() != target.ring()) throw Error(ErrorCode::kMixedRings, "map between modules over different rings");
  if (map.row_degrees != target.generator_degrees() || map.col_degrees != source.generator_degrees())
    throw Error(ErrorCode::kMalformed, "map degrees do not match the generator degrees of source and target");
}

// Degree-d image vector of a column of polynomials (one per target generator).
RationalVector image_vector(const Presentation& target, int d, const std::vector<Polynomial>& column,
                            const Exponent& u) {
  const GradedPiece& piece = target.piece(d);
  RationalVector v = RationalVector::Zero(piece.ambient_size());
  const std::size_t nv = target.ring()->num_vars();
  for (std::size_t i = 0; i < column.size(); ++i) {
    if (!column[i].is_zero()) accumulate(v, piece, static_cast<int>(i), column[i], u, nv);
  }
  return v;
}

std::vector<Polynomial> column_of(const GradedMatrix& m, Eigen::Index j) {
  std::vector<Polynomial> col;
  for (Eigen::Index i = 0; i < m.rows(); ++i) col.push_back(m.entries(i, j));
  return col;
}

struct HomSystem {
  RationalMatrix matrix;
  std::vector<std::pair<int, std::pair<int, Exponent>>> unknowns;  // (M generator, N basis label)
};

HomSystem hom_system(const Presentation& m, const Presentation& n) {
  if (m.ring() != n.ring()) throw Error(ErrorCode::kMixedRings, "Hom between modules over different rings");
  const std::size_t nv = m.ring()->num_vars();
  HomSystem sys;
  const auto& g = m.generator_degrees();
  const auto& h = m.phi().col_degrees;
  std::vector<int> row_offset(h.size() + 1, 0);
  for (std::size_t j = 0; j < h.size(); ++j) row_offset[j + 1] = row_offset[j] + n.dimension(h[j]);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const GradedPiece& p = n.piece(g[i]);
    for (int b = 0; b < p.dimension(); ++b)
      sys.unknowns.push_back({static_cast<int>(i), p.label(p.basis[static_cast<std::size_t>(b)])});
  }
  sys.matrix = RationalMatrix::Zero(row_offset.back(), static_cast<Eigen::Index>(sys.unknowns.size()));
  for (std::size_t col = 0; col < sys.unknowns.size(); ++col) {
    const auto& [i, label] = sys.unknowns[col];
    for (std::size_t j = 0; j < h.size(); ++j) {
      const Polynomial& entry = m.phi().entries(i, static_cast<Eigen::Index>(j));
      if (entry.is_zero()) continue;
      const GradedPiece& q = n.piece(h[j]);
      RationalVector v = RationalVector::Zero(q.ambient_size());
      accumulate(v, q, label.first, entry, label.second, nv);
      const RationalVector nf = q.normal_form(std::move(v));
      sys.matrix.block(row_offset[j], static_cast<Eigen::Index>(col), nf.size(), 1) = nf;
    }
  }
  return sys;
}

Polynomial scaled(const Polynomial& p, const Rational& c) { return p * c; }

}  // namespace

std::vector<std::pair<int, Exponent>> graded_piece(const Presentation& m, int d) {
  const GradedPiece& p = m.piece(d);
  std::vector<std::pair<int, Exponent>> out;
  for (int c : p.basis) out.push_back(p.label(c));
  return out;
}

std::optional<RationalForm> rational_form(const Presentation& m) {
  if (!m.is_certified_cm()) return std::nullopt;
  RationalForm r(m.ring()->weights());
  for (int g : m.generator_degrees()) r.add_monomial(g, 1);
  for (int h : m.phi().col_degrees) r.add_monomial(h, -1);
  return r;
}

HilbertSeries hilbert_series(const Presentation& m, const Window& window) {
  HilbertSeries s;
  s.window = window;
  for (int d = window.lo; d <= window.hi; ++d) s.values.push_back(m.dimension(d));
  s.rational_form = rational_form(m);
  if (s.rational_form && s.rational_form->expand(window) != s.values)
    throw Error(ErrorCode::kInconsistent, "Hilbert series disagrees with the rational form on " + to_string(window));
  return s;
}

RationalMatrix induced_map(const GradedMatrix& map, const Presentation& source, const Presentation& target, int d) {
  check_map_shape(map, source, target);
  const GradedPiece& p = source.piece(d);
  const int rows = target.dimension(d);
  RationalMatrix out(rows, p.dimension());
  for (int k = 0; k < p.dimension(); ++k) {
    const auto [j, u] = p.label(p.basis[static_cast<std::size_t>(k)]);
    out.col(k) = target.piece(d).normal_form(image_vector(target, d, column_of(map, j), u));
  }
  return out;
}

bool is_well_defined(const GradedMatrix& map, const Presentation& source, const Presentation& target) {
  check_map_shape(map, source, target);
  const GradedMatrix images = map * source.phi();
  const Exponent one(source.ring()->num_vars(), 0);
  for (Eigen::Index c = 0; c < images.cols(); ++c) {
    const int d = source.phi().col_degrees[static_cast<std::size_t>(c)];
    if (!target.piece(d).normal_form(image_vector(target, d, column_of(images, c), one)).isZero()) return false;
  }
  return true;
}

bool is_zero_map(const GradedMatrix& map, const Presentation& source, const Presentation& target) {
  check_map_shape(map, source, target);
  const Exponent one(source.ring()->num_vars(), 0);
  for (Eigen::Index j = 0; j < map.cols(); ++j) {
    const int d = source.generator_degrees()[static_cast<std::size_t>(j)];
    if (!target.piece(d).normal_form(image_vector(target, d, column_of(map, j), one)).isZero()) return false;
  }
  return true;
}

long hom_dim(const Presentation& m, const Presentation& n, int t) {
  const HomSystem sys = hom_system(m, t == 0 ? n : n.shifted(t));
  return static_cast<long>(sys.matrix.cols() - rank(sys.matrix));
}

std::vector<GradedMatrix> hom_basis(const Presentation& m, const Presentation& n) {
  const HomSystem sys = hom_system(m, n);
  const auto ech = reduced_row_echelon(sys.matrix);
  const auto cols = static_cast<Eigen::Index>(sys.unknowns.size());
  std::vector<bool> pivot(static_cast<std::size_t>(cols), false);
  for (auto p : ech.pivots) pivot[static_cast<std::size_t>(p)] = true;
  const std::size_t nv = m.ring()->num_vars();
  std::vector<GradedMatrix> basis;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (pivot[static_cast<std::size_t>(free)]) continue;
    RationalVector x = RationalVector::Zero(cols);
    x(free) = 1;
    for (Eigen::Index k = 0; k < ech.rank(); ++k) x(ech.pivots[static_cast<std::size_t>(k)]) = -ech.rows(k, free);
    GradedMatrix g = GradedMatrix::zero(n.generator_degrees(), m.generator_degrees());
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (x(c) == 0) continue;
      const auto& [i, label] = sys.unknowns[static_cast<std::size_t>(c)];
      Polynomial term = Polynomial::monomial(x(c), label.second);
      if (term.num_vars() < nv) term += Polynomial(Rational(0), nv);
      g.entries(label.first, i) += term;
    }
    basis.push_back(std::move(g));
  }
  return basis;
}

Presentation canonical_dual(const Presentation& m) {
  if (!m.is_certified_cm())
    throw Error(ErrorCode::kNotCohenMacaulay, "canonical dual needs a matrix-factorization partner");
  const int e = m.ring()->relation_degree();
  const int a = m.ring()->canonical_twist();
  auto reflect = [](const std::vector<int>& degs, int c) {
    std::vector<int> out;
    for (int d : degs) out.push_back(c - d);
    return out;
  };
  const GradedMatrix& phi = m.phi();
  const GradedMatrix& psi = *m.psi();
  GradedMatrix phi2(phi.entries.transpose(), reflect(phi.col_degrees, e - a), reflect(phi.row_degrees, e - a));
  GradedMatrix psi2(psi.entries.transpose(), reflect(psi.col_degrees, 2 * e - a), reflect(psi.row_degrees, 2 * e - a));
  return Presentation(m.ring(), std::move(phi2), std::move(psi2));
}

Presentation minimize(const Presentation& m) {
  GradedMatrix phi = m.phi();
  std::optional<GradedMatrix> psi = m.psi();
  auto find_unit = [&]() -> std::optional<std::pair<Eigen::Index, Eigen::Index>> {
    for (Eigen::Index i = 0; i < phi.rows(); ++i)
      for (Eigen::Index j = 0; j < phi.cols(); ++j)
        if (!phi.entries(i, j).is_zero() && phi.entries(i, j).is_constant()) return std::make_pair(i, j);
    return std::nullopt;
  };
  while (auto unit = find_unit()) {
    const auto [i, j] = *unit;
    const Rational inv = Rational(1) / phi.entries(i, j).constant_term();
    for (Eigen::Index k = 0; k < phi.cols(); ++k) {
      if (k == j || phi.entries(i, k).is_zero()) continue;
      const Polynomial q = scaled(phi.entries(i, k), inv);
      for (Eigen::Index r = 0; r < phi.rows(); ++r) phi.entries(r, k) -= q * phi.entries(r, j);
      if (psi)
        for (Eigen::Index c = 0; c < psi->cols(); ++c) psi->entries(j, c) += q * psi->entries(k, c);
    }
    for (Eigen::Index r = 0; r < phi.rows(); ++r) {
      if (r == i || phi.entries(r, j).is_zero()) continue;
      const Polynomial q = scaled(phi.entries(r, j), inv);
      for (Eigen::Index c = 0; c < phi.cols(); ++c) phi.entries(r, c) -= q * phi.entries(i, c);
      if (psi)
        for (Eigen::Index s = 0; s < psi->rows(); ++s) psi->entries(s, i) += psi->entries(s, r) * q;
    }
    auto drop = [](GradedMatrix& g, Eigen::Index row, Eigen::Index col) {
      PolynomialMatrix e(g.rows() - 1, g.cols() - 1);
      for (Eigen::Index r = 0, rr = 0; r < g.rows(); ++r) {
        if (r == row) continue;
        for (Eigen::Index c = 0, cc = 0; c < g.cols(); ++c) {
          if (c == col) continue;
          e(rr, cc++) = g.entries(r, c);
        }
        ++rr;
      }
      g.entries = std::move(e);
      g.row_degrees.erase(g.row_degrees.begin() + row);
      g.col_degrees.erase(g.col_degrees.begin() + col);
    };
    drop(phi, i, j);
    if (psi) drop(*psi, j, i);
  }
  return Presentation(m.ring(), std::move(phi), std::move(psi));
}

Presentation syzygy(const Presentation& m) {
  if (!m.is_certified_cm()) throw Error(ErrorCode::kNotCohenMacaulay, "syzygy needs a matrix-factorization partner");
  const int e = m.ring()->relation_degree();
  return minimize(Presentation(m.ring(), *m.psi(), m.phi().shifted(-e)));
}

Presentation cosyzygy(const Presentation& m) { return canonical_dual(syzygy(canonical_dual(m))); }

Presentation syzygy(const Presentation& m, int times) {
  Presentation out = m;
  for (int k = 0; k < times; ++k) out = syzygy(out);
  for (int k = 0; k > times; --k) out = cosyzygy(out);
  return out;
}

Window natural_window(const Presentation& m) {
  const auto& g = m.generator_degrees();
  if (g.empty()) return {0, 0};
  const int lo = *std::min_element(g.begin(), g.end());
  const int hi = *std::max_element(g.begin(), g.end());
  return {lo - 1, hi + m.phi().max_entry_degree(*m.ring()) + 2 * m.ring()->weight_lcm()};
}

bool is_isomorphic(const Presentation& a, const Presentation& b, int trials) {
  if (a.ring() != b.ring()) throw Error(ErrorCode::kMixedRings, "isomorphism test across rings");
  const auto ra = rational_form(a);
  const auto rb = rational_form(b);
  Window w = natural_window(a);
  const Window wb = natural_window(b);
  w = {std::min(w.lo, wb.lo), std::max(w.hi, wb.hi)};
  if (ra && rb) {
    if (!(*ra == *rb)) return false;
  } else {
    for (int d = w.lo; d <= w.hi; ++d)
      if (a.dimension(d) != b.dimension(d)) return false;
  }
  bool b_is_zero = true;
  for (int d = w.lo; d <= w.hi; ++d) b_is_zero = b_is_zero && b.dimension(d) == 0;
  if (b_is_zero) return true;
  const auto basis = hom_basis(a, b);
  if (basis.empty()) return false;
  const auto& gb = b.generator_degrees();
  const int top = *std::max_element(gb.begin(), gb.end());
  const int bottom = *std::min_element(gb.begin(), gb.end());
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int t = 0; t < trials; ++t) {
    GradedMatrix map = GradedMatrix::zero(b.generator_degrees(), a.generator_degrees());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const int c = t == 0 ? static_cast<int>(k) + 1 : coeff(rng);
      map.entries += basis[k].entries * Polynomial(Rational(c), a.ring()->num_vars());
    }
    bool onto = true;
    for (int d = bottom; d <= top && onto; ++d) onto = rank(induced_map(map, a, b, d)) == b.dimension(d);
    if (onto) return true;
  }
  return false;
}

}  // namespace degenlab
