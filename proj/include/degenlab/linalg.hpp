#pragma once

// Exact dense linear algebra, templated on the scalar. Only field operations
// are used, so any exact field type (Rational) works; nothing here pivots on
// magnitude.

#include <Eigen/Core>

#include <vector>

namespace degenlab {

template <typename Scalar>
struct Echelon {
  // Reduced row echelon form; only the first rank() rows are kept.
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> rows;
  std::vector<Eigen::Index> pivots;  // pivot column of each kept row

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
  Eigen::Index cols() const { return rows.cols(); }
};

template <typename Derived>
Echelon<typename Derived::Scalar> reduced_row_echelon(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = input;
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  const Scalar zero(0);
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n && r < m; ++c) {
    Eigen::Index p = r;
    while (p < m && a(p, c) == zero) ++p;
    if (p == m) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    for (Eigen::Index j = c; j < n; ++j) {
      if (a(r, j) != zero) a(r, j) *= inv;
    }
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == r || a(i, c) == zero) continue;
      const Scalar factor = a(i, c);
      for (Eigen::Index j = c; j < n; ++j) {
        if (a(r, j) != zero) a(i, j) -= factor * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon<Scalar> out;
  out.rows = a.topRows(r);
  out.pivots = std::move(pivots);
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a) {
  return reduced_row_echelon(a).rank();
}

template <typename Derived>
Eigen::Index nullity(const Eigen::MatrixBase<Derived>& a) {
  return a.cols() - rank(a);
}

// Subtracts the echelon rows from v so that v vanishes on every pivot column.
template <typename Scalar, typename Derived>
void reduce_against(const Echelon<Scalar>& echelon, Eigen::MatrixBase<Derived>& v) {
  const Scalar zero(0);
  for (Eigen::Index k = 0; k < echelon.rank(); ++k) {
    const Eigen::Index p = echelon.pivots[static_cast<std::size_t>(k)];
    if (v(p) == zero) continue;
    const Scalar factor = v(p);
    for (Eigen::Index j = p; j < echelon.cols(); ++j) {
      if (echelon.rows(k, j) != zero) v(j) -= factor * echelon.rows(k, j);
    }
  }
}

}  // namespace degenlab
