#pragma once

#include "degenlab/context.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace degenlab {

// Explicit short exact sequence between catalog modules. Each term lists its
// indecomposable summands in generator order; the maps use those orders.
struct SequenceWitness {
  std::vector<Vertex> left;
  std::vector<Vertex> middle;
  std::vector<Vertex> right;
  PolynomialMatrix alpha;  // middle generators x left generators
  PolynomialMatrix beta;   // right generators x middle generators
  std::optional<Window> window;
};

enum class StepKind { kExtension, kZwara, kCancelCommon, kCancelFree, kIsoRearrange };
const char* to_string(StepKind k);

// One elementary relation from <= to (degeneration order).
//  kExtension:    0 -> L -> E -> N -> 0; from = E + passive, to = L + N + passive.
//  kZwara:        0 -> Z -> M + Z -> N -> 0 (middle written M-part first); from = M + passive, to = N + passive.
//  kCancelCommon: sub-chain proves from + cancel <= to + cancel, evidence [cancel, from] = [cancel, to].
//  kCancelFree:   sub-chain proves from + cancel <= to + cancel with cancel free.
//  kIsoRearrange: from and to are the same module (canonical multisets agree).
struct Step {
  StepKind kind = StepKind::kIsoRearrange;
  ModuleExpr from;
  ModuleExpr to;
  ModuleExpr passive;
  std::optional<SequenceWitness> sequence;
  ModuleExpr cancel;
  long evidence_from = 0;  // [cancel, from] as claimed by the constructor
  long evidence_to = 0;
  std::vector<Step> sub;
  std::string justification;
};

struct WitnessChain {
  std::string ring;
  ModuleExpr source;
  ModuleExpr target;
  std::vector<Step> steps;
};

struct StepReport {
  std::string path;  // "3" or "1.2.1" for nested steps
  std::string kind;
  bool ok = true;
  std::string message;
};

struct ChainReport {
  bool ok = true;
  std::vector<StepReport> steps;
  std::string summary;
};

// Re-checks chains from the catalog presentations with gradedalg only:
// endpoint chaining, multiset bookkeeping, exactness certificates and
// cancellation evidence. Nothing computed by the constructor is trusted.
// Results are memoized up to a common shift, so one verifier can be reused
// across many chains of the same ring.
class ChainVerifier {
 public:
  explicit ChainVerifier(const RingEntry& entry) : entry_(&entry) {}

  ChainReport verify(const WitnessChain& chain);
  ExactnessCertificate check_sequence(const SequenceWitness& seq);
  long hom(const Vertex& a, const Vertex& b);
  long hom(const ModuleExpr& a, const ModuleExpr& b);

 private:
  struct Totals {
    std::size_t steps = 0, failed = 0;
  };
  void verify_steps(const std::vector<Step>& steps, const ModuleExpr& source, const ModuleExpr& target,
                    const std::string& prefix, ChainReport& report, Totals& totals);
  std::string verify_step(const Step& step, const std::string& path, ChainReport& report, Totals& totals);

  const RingEntry* entry_;
  std::mutex mutex_;
  std::map<std::tuple<std::string, std::string, int>, long> homs_;
  std::map<std::string, ExactnessCertificate> sequences_;
};

ChainReport verify_chain(const RingEntry& entry, const WitnessChain& chain);

// Structural size of a chain (number of steps including nested ones).
std::size_t chain_size(const WitnessChain& chain);

// Extension moves flattened in order, with their passive summands.
std::vector<const Step*> extension_moves(const WitnessChain& chain);

// Constructions working on the knitted hom data of a RingContext.

struct RiedtmannWitness {
  FSet fset;
  ModuleExpr u, v, w;  // sum of X^gap, E_X^gap, (tau^-1 X)^gap
  ModuleExpr l;        // = v
  bool identity_holds = false;  // M + U + W == N + V
  std::vector<std::pair<Vertex, long>> sequences;  // AR sequences starting at X, with multiplicity
};

// Requires same Hilbert series and M <=_hom N (Error{kPrecondition} otherwise).
RiedtmannWitness riedtmann_witness(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n);

// A path-minimal element of F_{M,N} after stripping common summands; ties
// broken by (id, shift). Asserts [E_X, M] == [E_X, N].
Vertex minimal_vertex(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n);

// Inductive chain for M <=_deg N: each round cancels the middle term E of the
// AR sequence starting at a minimal X after the extension move
// E + M' -> X + tau^-1 X + M'.
WitnessChain degeneration_chain(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n);

// Rewrites of an existing chain proving m + x <= n + x.
Step cancel_common(const RingContext& ctx, const WitnessChain& padded, const ModuleExpr& x);
Step cancel_free(const RingEntry& entry, const WitnessChain& padded, const ModuleExpr& f);

// Sequence of the AR mesh starting at X as a witness (0 -> X -> E -> tau^-1 X -> 0).
SequenceWitness ar_sequence_witness(const ARQuiver& q, const Vertex& x);

struct StableTriangle {
  ModuleExpr z, m_plus_z, n;  // stable images (free summands removed)
};

struct StableDecision {
  bool yes = false;
  std::string reason;
  ModuleExpr padding;  // free F with F + M' <=_deg N' on stable representatives
  ModuleExpr stable_source, stable_target;
  std::optional<WitnessChain> chain;
  std::vector<StableTriangle> triangles;
};

StableDecision stable_deg_decide(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n);
// Independent route: try every free padding with shifts in `shifts` and at most `max_free` summands.
bool stable_deg_exhaustive(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n, const Window& shifts,
                           int max_free);

// Free part and non-free part of an expression.
ModuleExpr free_part(const RingEntry& entry, const ModuleExpr& m);
ModuleExpr nonfree_part(const RingEntry& entry, const ModuleExpr& m);

// Witness files (JSON, schema degenlab-witness/1).
std::string witness_to_json(const WitnessChain& chain, const std::string& catalog_hash);
WitnessChain witness_from_json(const std::string& text, std::string* catalog_hash = nullptr);

}  // namespace degenlab
