#pragma once

#include "degenlab/hilbert.hpp"
#include "degenlab/presentation.hpp"

#include <optional>

namespace degenlab {

// Normal-form monomial basis of M_d, as (generator, monomial) labels.
std::vector<std::pair<int, Exponent>> graded_piece(const Presentation& m, int d);

// dim M_d over `window`; the rational form is attached when M carries a
// matrix factorization, and then cross-checked against the window values.
HilbertSeries hilbert_series(const Presentation& m, const Window& window);
std::optional<RationalForm> rational_form(const Presentation& m);

// Matrix of the degree-d part of the map F0(source) -> F0(target) given by
// `map` (rows: target generators, columns: source generators), between the
// normal-form bases of source_d and target_d.
RationalMatrix induced_map(const GradedMatrix& map, const Presentation& source, const Presentation& target, int d);

// True iff `map` sends every relation of `source` to zero in `target`.
bool is_well_defined(const GradedMatrix& map, const Presentation& source, const Presentation& target);

// True iff every generator of `source` maps to zero in `target`.
bool is_zero_map(const GradedMatrix& map, const Presentation& source, const Presentation& target);

// dim_k Hom_R(M, N(t))_0.
long hom_dim(const Presentation& m, const Presentation& n, int t = 0);

// Basis of Hom_R(M, N)_0 as graded matrices (rows: N generators, columns: M generators).
std::vector<GradedMatrix> hom_basis(const Presentation& m, const Presentation& n);

// Hom_R(M, omega_R) for certified maximal Cohen-Macaulay M.
Presentation canonical_dual(const Presentation& m);

// First syzygy (minimal) of certified MCM M, and its inverse via duality.
Presentation syzygy(const Presentation& m);
Presentation cosyzygy(const Presentation& m);
Presentation syzygy(const Presentation& m, int times);

// Removes unit entries of phi (trivial summands R -> R) keeping psi in step.
Presentation minimize(const Presentation& m);

// Exact when both modules carry matrix factorizations: the rational forms
// must agree and some degree-0 map must be onto. Candidate maps are
// deterministic pseudo-random combinations of a Hom basis; a negative answer
// after the trials is reported as non-isomorphic.
bool is_isomorphic(const Presentation& a, const Presentation& b, int trials = 6);

// Window covering the generators of M and its first relations.
Window natural_window(const Presentation& m);

}  // namespace degenlab
