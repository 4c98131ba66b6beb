#pragma once

#include "degenlab/exactness.hpp"

#include <string>

namespace degenlab {

// A graded minimal prime p of R together with a parametrization
// k[vars] -> k[s] whose kernel is p, so that k(s) is the residue field of R_(p).
struct MinimalPrime {
  std::string id;
  std::vector<Polynomial> generators;
  std::vector<UnivariatePolynomial> parametrization;  // one per variable
};

// rank of M_(p) over the field R_(p): generator count minus the rank of phi
// over k(s).
long localization_rank(const Presentation& m, const MinimalPrime& p);

// 0 -> F_n -> ... -> F_1 -> F_0 -> Y -> 0 with differentials[0] = presentation of Y.
struct FreeResolution {
  std::vector<GradedMatrix> differentials;
};

// Throws Error{kPrecondition} naming the failing check: first differential
// equals Y's presentation matrix, consecutive composites vanish over R, the
// complex is exact on `window` and the last differential is injective there.
void verify_resolution(const Presentation& y, const FreeResolution& res, const Window& window);

// [M, Y] == [N, Y]; requires equal Hilbert series of M and N and a verified resolution of Y.
bool finite_pd_hom_test(const Presentation& m, const Presentation& n, const Presentation& y,
                        const FreeResolution& res, std::optional<Window> window = std::nullopt);

}  // namespace degenlab
