#pragma once

#include "degenlab/catalog.hpp"
#include "degenlab/exactness.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace degenlab {

// Catalog AR sequence lifted to a shift: 0 -> tau X -> middle -> X -> 0.
struct ArSequence {
  Vertex tau;
  ModuleExpr middle;
  Vertex end;
};

// Values [M, X] for every indecomposable X whose shift lies in `shifts`;
// zero entries are not stored.
struct HomVector {
  ModuleExpr source;
  Window shifts;
  std::map<Vertex, long> values;

  long at(const Vertex& v) const;
  bool covers(const Vertex& v) const { return shifts.contains(v.shift); }
  friend bool operator==(const HomVector&, const HomVector&) = default;
};

// Shift-periodic AR quiver of a catalog ring, validated against gradedalg at load.
class ARQuiver {
 public:
  // Throws Error{kData} listing every violation (sequence, tau, arrow or flag).
  static ARQuiver load(const RingEntry& entry);

  const RingEntry& entry() const { return *entry_; }
  const RingPtr& ring() const { return entry_->ring; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  bool is_free(const std::string& id) const;
  bool has_vertex(const std::string& id) const;
  std::string free_vertex() const { return free_id_; }

  Vertex tau(const Vertex& x) const;               // x non-free
  std::optional<Vertex> tau_inverse(const Vertex& x) const;  // nullopt if x is not tau of anything
  // The AR sequence ending at x; throws Error{kPrecondition} for free x.
  ArSequence ar_sequence(const Vertex& x) const;
  // The AR sequence starting at x (ending at tau^{-1} x); nullopt when x is free-type at the start.
  std::optional<ArSequence> ar_sequence_from(const Vertex& x) const;
  // Explicit maps of the lifted AR sequence, generators ordered as the middle term is written.
  ShortExactSequence ar_sequence_maps(const Vertex& x) const;

  bool directed() const { return directed_; }
  // Linear height c * shift + p(id), strictly increasing along arrows; only when directed.
  long height(const Vertex& v) const;
  // True if some path runs from a to b (a != b); uses height pruning.
  bool has_path(const Vertex& a, const Vertex& b) const;
  std::vector<Vertex> successors(const Vertex& v) const;

  // [V, X] for V = base(0) indecomposable and all X with shift in `shifts`.
  HomVector knit_indecomposable(const std::string& base, const Window& shifts) const;

  // Graphviz description of the fundamental domain with tau as dashed edges.
  std::string to_dot() const;

 private:
  ARQuiver() = default;
  const RingEntry* entry_ = nullptr;
  std::vector<std::string> vertices_;
  std::map<std::string, bool> free_;
  std::string free_id_;
  std::vector<Arrow> arrows_;
  std::map<std::string, Vertex> tau_;
  std::map<std::string, Vertex> tau_inverse_;  // keyed by the id of tau X, value X shifted so tau X is at shift 0
  std::map<std::string, ModuleExpr> middle_;
  std::map<std::string, const ArSequenceEntry*> sequence_data_;
  bool directed_ = false;
  long height_scale_ = 0;
  std::map<std::string, long> potential_;
};

// Arrow set implied by the AR sequences: Y -> X for each summand Y of E_X,
// and tau X -> P for each free summand P of E_X.
std::vector<Arrow> arrows_from_meshes(const std::map<std::string, Vertex>& tau,
                                      const std::map<std::string, ModuleExpr>& middles);
// Violations of mesh compatibility (arrows between non-free vertices seen from both ends).
std::vector<std::string> mesh_consistency(const std::map<std::string, Vertex>& tau,
                                          const std::map<std::string, ModuleExpr>& middles);

// No closed walk with zero net shift in the lifted quiver: every strongly
// connected component has cycles of one strict sign only.
bool is_representation_directed(const std::vector<std::string>& vertices, const std::vector<Arrow>& arrows);
bool is_representation_directed(const ARQuiver& q);

// Heights c * shift + p(v) with c * k + p(target) - p(source) >= 1 on every
// arrow; nullopt if none exists for |c| <= limit.
std::optional<std::pair<long, std::map<std::string, long>>> solve_heights(const std::vector<std::string>& vertices,
                                                                           const std::vector<Arrow>& arrows,
                                                                           long limit);

// [M, X] over the window [min shift - bound, max shift + bound] of M's summands.
HomVector knit_hom_vector(const ARQuiver& q, const ModuleExpr& m, int bound = 12);
HomVector knit_hom_vector(const ARQuiver& q, const ModuleExpr& m, const Window& shifts);

// Inverse of knit_hom_vector. Throws Error{kPrecondition} on a negative
// multiplicity ("not a hom vector of a module").
ModuleExpr decompose_from_hom(const ARQuiver& q, const HomVector& h);

}  // namespace degenlab
