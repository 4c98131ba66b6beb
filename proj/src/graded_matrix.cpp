#include "degenlab/graded_matrix.hpp"

#include "degenlab/error.hpp"

namespace degenlab {

GradedMatrix GradedMatrix::zero(std::vector<int> rows, std::vector<int> cols) {
  PolynomialMatrix e = PolynomialMatrix::Constant(static_cast<Eigen::Index>(rows.size()),
                                                  static_cast<Eigen::Index>(cols.size()), Polynomial());
  return GradedMatrix(std::move(e), std::move(rows), std::move(cols));
}

GradedMatrix GradedMatrix::identity(const std::vector<int>& degrees) {
  GradedMatrix m = zero(degrees, degrees);
  for (Eigen::Index i = 0; i < m.rows(); ++i) m.entries(i, i) = Polynomial(1);
  return m;
}

GradedMatrix GradedMatrix::shifted(int s) const {
  GradedMatrix m = *this;
  for (int& d : m.row_degrees) d -= s;
  for (int& d : m.col_degrees) d -= s;
  return m;
}

GradedMatrix GradedMatrix::transposed() const {
  return GradedMatrix(entries.transpose(), col_degrees, row_degrees);
}

bool GradedMatrix::is_zero() const {
  for (Eigen::Index i = 0; i < rows(); ++i)
    for (Eigen::Index j = 0; j < cols(); ++j)
      if (!entries(i, j).is_zero()) return false;
  return true;
}

int GradedMatrix::max_entry_degree(const RingSpec& ring) const {
  int best = 0;
  for (Eigen::Index i = 0; i < rows(); ++i)
    for (Eigen::Index j = 0; j < cols(); ++j)
      best = std::max(best, entries(i, j).max_degree(ring.weights()));
  return best;
}

void validate(const GradedMatrix& m, const RingSpec& ring, const std::string& what) {
  if (static_cast<std::size_t>(m.rows()) != m.row_degrees.size() ||
      static_cast<std::size_t>(m.cols()) != m.col_degrees.size())
    throw Error(ErrorCode::kMalformed, what + ": degree lists do not match the matrix shape");
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const int want = m.col_degrees[static_cast<std::size_t>(j)] - m.row_degrees[static_cast<std::size_t>(i)];
      const Polynomial& p = m.entries(i, j);
      if (p.is_zero()) continue;
      if (want < 0 || !p.is_homogeneous(ring.weights(), want))
        throw Error(ErrorCode::kMalformed,
                    what + ": entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                        ring.format(p) + " is not homogeneous of degree " + std::to_string(want));
    }
  }
}

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::kMalformed, "graded matrix product: inner dimensions differ");
  return GradedMatrix(a.entries.lazyProduct(b.entries).eval(), a.row_degrees, b.col_degrees);
}

GradedMatrix block_diagonal(const std::vector<GradedMatrix>& blocks) {
  std::vector<int> rows, cols;
  for (const auto& b : blocks) {
    rows.insert(rows.end(), b.row_degrees.begin(), b.row_degrees.end());
    cols.insert(cols.end(), b.col_degrees.begin(), b.col_degrees.end());
  }
  GradedMatrix out = GradedMatrix::zero(rows, cols);
  Eigen::Index r = 0, c = 0;
  for (const auto& b : blocks) {
    if (b.rows() > 0 && b.cols() > 0) out.entries.block(r, c, b.rows(), b.cols()) = b.entries;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.row_degrees != b.row_degrees || a.col_degrees != b.col_degrees) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a.entries(i, j) == b.entries(i, j))) return false;
  return true;
}

}  // namespace degenlab
