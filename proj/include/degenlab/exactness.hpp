#pragma once

#include "degenlab/gradedalg.hpp"

#include <optional>
#include <string>

namespace degenlab {

// 0 -> left --alpha--> middle --beta--> right -> 0.
// alpha: rows = middle generators, columns = left generators; beta likewise.
struct ShortExactSequence {
  Presentation left;
  Presentation middle;
  Presentation right;
  GradedMatrix alpha;
  GradedMatrix beta;
};

enum class ExactnessStatus { kExact, kNotWellDefined, kNotComplex, kNotExact };
const char* to_string(ExactnessStatus s);

struct ExactnessCertificate {
  Window window;
  ExactnessStatus status = ExactnessStatus::kExact;
  std::optional<int> failing_degree;  // set for kNotExact
  std::string detail;
  bool well_defined = false;
  bool composition_zero = false;
  bool degreewise_exact = false;
  bool hilbert_additive = false;
  bool hilbert_exact_form = false;    // additivity checked as rational forms, not only on the window
  bool surjective_everywhere = false; // window covers the generators of the right term
  std::string periodicity_note;

  bool exact() const { return status == ExactnessStatus::kExact; }
};

// [min generator degree - 1, max generator degree + span + 2 lcm(weights)] over all three terms.
Window default_window(const ShortExactSequence& seq);

// Degree bookkeeping is validated first (throws Error{kMalformed}); then
// well-definedness of both maps, composition zero, degreewise exactness and
// Hilbert additivity.
ExactnessCertificate verify_exact(const ShortExactSequence& seq, std::optional<Window> window = std::nullopt);

}  // namespace degenlab
