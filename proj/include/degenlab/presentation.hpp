#pragma once

#include "degenlab/graded_matrix.hpp"
#include "degenlab/linalg.hpp"
#include "degenlab/ring.hpp"

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>

namespace degenlab {

// Degree-d piece of coker(phi) over R, realized inside the degree-d part of
// the ambient free S-module F0 (S the polynomial ring). Coordinates are
// (generator, monomial) pairs; the relation image is kept in reduced echelon
// form so that its non-pivot coordinates form the normal-form basis.
struct GradedPiece {
  int degree = 0;                               // degree relative to the unshifted presentation
  std::vector<int> offsets;                     // offsets[i] = first coordinate of generator i
  std::vector<const MonomialBasis*> monomials;  // monomials of degree (degree - g_i)
  Echelon<Rational> image;
  std::vector<int> basis;      // ambient coordinates of the normal-form basis
  std::vector<int> basis_pos;  // ambient coordinate -> basis index, or -1

  int ambient_size() const { return offsets.empty() ? 0 : offsets.back(); }
  int dimension() const { return static_cast<int>(basis.size()); }
  int coordinate(int generator, const Exponent& m) const;
  std::pair<int, Exponent> label(int coordinate) const;
  RationalVector normal_form(RationalVector ambient) const;
};

// A graded R-module coker(phi: F1 -> F0), R = S/(f). phi rows are the
// generators of F0 (row degrees = generator degrees), columns the relations.
// psi, when present, is a matrix-factorization partner (phi psi = psi phi = f I)
// and certifies the module maximal Cohen-Macaulay.
class Presentation {
 public:
  Presentation(RingPtr ring, GradedMatrix phi, std::optional<GradedMatrix> psi = std::nullopt);

  static Presentation zero(RingPtr ring);
  // R(s): one generator in degree -s.
  static Presentation free(RingPtr ring, int shift = 0);

  const RingPtr& ring() const { return ring_; }
  const GradedMatrix& phi() const { return phi_; }
  const std::optional<GradedMatrix>& psi() const { return psi_; }
  bool is_certified_cm() const { return psi_.has_value(); }
  const std::vector<int>& generator_degrees() const { return phi_.row_degrees; }
  int num_generators() const { return static_cast<int>(phi_.rows()); }
  int num_relations() const { return static_cast<int>(phi_.cols()); }

  // M(s), M(s)_d = M_{d+s}. Shares the degree-piece memo with *this.
  Presentation shifted(int s) const;

  const GradedPiece& piece(int d) const;
  int dimension(int d) const { return piece(d).dimension(); }

 private:
  struct Memo;
  Presentation(RingPtr ring, GradedMatrix phi, std::optional<GradedMatrix> psi,
               std::shared_ptr<Memo> memo, int offset);

  RingPtr ring_;
  GradedMatrix phi_;
  std::optional<GradedMatrix> psi_;
  std::shared_ptr<Memo> memo_;
  int offset_ = 0;  // piece(d) == memo piece at d + offset_
};

Presentation direct_sum(const std::vector<Presentation>& parts);
Presentation direct_sum(RingPtr ring, const std::vector<Presentation>& parts);

}  // namespace degenlab
