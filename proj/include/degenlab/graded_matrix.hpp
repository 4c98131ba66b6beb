#pragma once

#include "degenlab/polynomial.hpp"
#include "degenlab/ring.hpp"

#include <vector>

namespace degenlab {

// A degree-0 map between graded free modules: columns index the source
// generators, rows the target generators. Entry (i, j) is homogeneous of
// degree col_degrees[j] - row_degrees[i] (or zero).
struct GradedMatrix {
  PolynomialMatrix entries;
  std::vector<int> row_degrees;
  std::vector<int> col_degrees;

  GradedMatrix() = default;
  GradedMatrix(PolynomialMatrix e, std::vector<int> rows, std::vector<int> cols)
      : entries(std::move(e)), row_degrees(std::move(rows)), col_degrees(std::move(cols)) {}

  static GradedMatrix zero(std::vector<int> rows, std::vector<int> cols);
  static GradedMatrix identity(const std::vector<int>& degrees);

  Eigen::Index rows() const { return entries.rows(); }
  Eigen::Index cols() const { return entries.cols(); }
  const Polynomial& operator()(Eigen::Index i, Eigen::Index j) const { return entries(i, j); }

  // Source and target generators both moved by M(s): degrees drop by s.
  GradedMatrix shifted(int s) const;
  GradedMatrix transposed() const;
  bool is_zero() const;
  int max_entry_degree(const RingSpec& ring) const;
};

// Throws Error{kMalformed} naming the first entry that breaks homogeneity.
void validate(const GradedMatrix& m, const RingSpec& ring, const std::string& what = "matrix");

// Plain matrix product; degrees are taken from the outer factors.
GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix block_diagonal(const std::vector<GradedMatrix>& blocks);

// Entrywise equality modulo the ring relation is not needed anywhere; this is
// equality as polynomial matrices.
bool operator==(const GradedMatrix& a, const GradedMatrix& b);

}  // namespace degenlab
