#pragma once

#include "degenlab/mesh.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace degenlab {

// Hypothesis gate for degeneration decisions: graded Gorenstein,
// graded isolated singularity, finite type, AR quiver representation directed.
struct Gate {
  bool ok = false;
  std::string reason;  // empty when ok
};

// Positive gaps [N, X] - [M, X] over a shift window.
struct FSet {
  std::map<Vertex, long> gaps;
  bool empty() const { return gaps.empty(); }
  long total() const;
};

// Per-ring evaluation context: validated quiver and caches of knitted hom
// vectors, Hilbert forms and localization ranks of indecomposables.
class RingContext {
 public:
  explicit RingContext(const RingEntry& entry, int shift_bound = 12);

  const RingEntry& entry() const { return *entry_; }
  const RingPtr& ring() const { return entry_->ring; }
  const ARQuiver* quiver() const { return quiver_ ? &*quiver_ : nullptr; }
  const ARQuiver& require_quiver() const;
  int shift_bound() const { return shift_bound_; }
  const Gate& gate() const { return gate_; }

  RationalForm hilbert(const ModuleExpr& m) const;
  RationalForm hilbert(const Vertex& v) const;

  // [a, b] for indecomposables, by knitting.
  long hom(const Vertex& a, const Vertex& b) const;
  // [A, B] by additivity.
  long hom(const ModuleExpr& a, const ModuleExpr& b) const;
  long hom(const ModuleExpr& a, const Vertex& b) const;
  long hom(const Vertex& a, const ModuleExpr& b) const;

  // Default window for M and N together: [min shift - bound, max shift + bound].
  Window window_for(const ModuleExpr& m, const ModuleExpr& n) const;
  HomVector hom_vector(const ModuleExpr& m, const Window& shifts) const;
  HomVector hom_vector(const ModuleExpr& m) const { return hom_vector(m, window_for(m, m)); }

  // Localization rank of an indecomposable at a catalogued minimal prime.
  long rank(const Vertex& v, const MinimalPrime& p) const;
  long rank(const ModuleExpr& m, const MinimalPrime& p) const;

  // Throws Error{kParse} with position or the unknown ids.
  ModuleExpr parse(const std::string& text) const;

 private:
  std::shared_ptr<const HomVector> base_vector(const std::string& id, int radius) const;

  const RingEntry* entry_;
  int shift_bound_;
  std::optional<ARQuiver> quiver_;
  Gate gate_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, std::shared_ptr<const HomVector>> base_;
  mutable std::map<std::string, RationalForm> hilbert_;
  mutable std::map<std::pair<std::string, std::string>, long> ranks_;
};

}  // namespace degenlab
