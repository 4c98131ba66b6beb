#pragma once

#include "degenlab/witness.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace degenlab {

enum class Relation { kHom, kDeg, kExt, kStable };
enum class Verdict { kYes, kNo, kIncomparablePrecondition };
const char* to_string(Relation r);
const char* to_string(Verdict v);

struct HilbertComparison {
  bool equal = false;
  std::optional<int> mismatch_degree;  // lowest exponent of h(N) - h(M)
};

// Hom-order violation: [N, X] < [M, X].
struct HomViolation {
  Vertex vertex;
  long m_value = 0;
  long n_value = 0;
};

struct Distinguisher {
  bool distinguished = false;
  bool hilbert_only = false;  // ring has no catalogued minimal primes
  std::string evidence;
};

struct OrderDecision {
  Relation relation = Relation::kHom;
  Verdict verdict = Verdict::kNo;
  std::string reason;
  FSet fset;                                 // hom / deg yes
  std::optional<HomViolation> violation;     // hom no
  std::optional<int> hilbert_mismatch;       // deg no on Hilbert data
  std::optional<Distinguisher> distinguisher;
  std::optional<WitnessChain> chain;         // deg / ext yes
  std::optional<ChainReport> report;
  std::optional<StableDecision> stable;

  bool yes() const { return verdict == Verdict::kYes; }
};

// Exact comparison of rational Hilbert forms.
HilbertComparison same_hilbert(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n);

// [M, X] <= [N, X] for all X. The comparison window grows until every
// nonzero gap lies clear of its edges; Error{kSupportBound} past 16 * shift bound.
OrderDecision hom_leq(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n);

// Window on which hom_leq compared M and N.
Window comparison_window(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n);

// Least l with [M, X(+-k)] = [N, X(+-k)] for all k >= l inside the comparison window.
long stabilization_bound(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n, const Vertex& x);

// Necessary conditions for equal Grothendieck classes: Hilbert form and the
// localization rank at every catalogued minimal prime.
Distinguisher class_distinguisher(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n);

struct DegOptions {
  bool build_chain = true;
  bool verify = true;
  ChainVerifier* verifier = nullptr;  // shared memo; a fresh one is used when null
};

// Decides M <=_deg N when the gate passes; otherwise verdict
// incomparable-precondition with the gate reason. Yes verdicts carry a chain.
OrderDecision deg_leq(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n, const DegOptions& opts = {});
// Same decision reported as the extension order.
OrderDecision ext_leq(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n, const DegOptions& opts = {});
OrderDecision stable_leq(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n);

struct TauFormulaResult {
  bool holds = true;
  std::optional<Vertex> counterexample;
  long gap = 0;       // [N, X] - [M, X]
  long dual_gap = 0;  // [tau^-1 X, N] - [tau^-1 X, M]
  std::size_t checked = 0;
};

// [N, X] - [M, X] = [tau^-1 X, N] - [tau^-1 X, M] on every non-free X of the
// union of supports. Requires equal Hilbert series and M <=_hom N.
TauFormulaResult tau_formula_check(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n);

// Canonical expressions built from the catalog indecomposables with shifts in
// `shifts` and at most `max_summands` summands whose Hilbert forms sum to
// `target`. Sorted canonically.
std::vector<ModuleExpr> enumerate_hilbert_class(const RingContext& ctx, const RationalForm& target,
                                                const Window& shifts, int max_summands);
// Every nonzero expression within the bounds, grouped by Hilbert form; groups
// ordered by their first member.
std::vector<std::vector<ModuleExpr>> hilbert_classes(const RingContext& ctx, const Window& shifts, int max_summands);

struct HasseDiagram {
  std::vector<ModuleExpr> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // covers a < b under <=_deg

  std::string to_dot(const std::string& name = "hasse") const;
  bool acyclic() const;
};

// Throws Error{kPrecondition} when the gate fails.
HasseDiagram hasse_diagram(const RingContext& ctx, const std::vector<ModuleExpr>& mods);

}  // namespace degenlab
