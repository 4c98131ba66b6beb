#include "degenlab/orders.hpp"

#include "degenlab/error.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

namespace degenlab {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::kHom: return "hom";
    case Relation::kDeg: return "deg";
    case Relation::kExt: return "ext";
    case Relation::kStable: return "stable";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kIncomparablePrecondition: return "incomparable-precondition";
  }
  return "?";
}

namespace {

struct Comparison {
  Window window;
  HomVector hm, hn;
  bool hilbert_equal = false;
};

std::set<Vertex> support(const HomVector& a, const HomVector& b) {
  std::set<Vertex> s;
  for (const auto& [v, x] : a.values) s.insert(v);
  for (const auto& [v, x] : b.values) s.insert(v);
  return s;
}

Comparison compare(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n) {
  Comparison c;
  c.hilbert_equal = ctx.hilbert(m) == ctx.hilbert(n);
  c.window = ctx.window_for(m, n);
  const int margin = std::max(1, ctx.ring()->weight_lcm());
  const int limit = 16 * std::max(1, ctx.shift_bound());
  for (;;) {
    c.hm = ctx.hom_vector(m, c.window);
    c.hn = ctx.hom_vector(n, c.window);
    if (!c.hilbert_equal) return c;  // gaps need not vanish; the caller decides on this window
    bool clear = true;
    for (const Vertex& v : support(c.hm, c.hn)) {
      if (c.hn.at(v) < c.hm.at(v)) return c;  // a violation settles the comparison
      if (c.hm.at(v) != c.hn.at(v) && (v.shift < c.window.lo + margin || v.shift > c.window.hi - margin)) clear = false;
    }
    if (clear) return c;
    if (c.window.size() > 2 * limit)
      throw Error(ErrorCode::kSupportBound, "hom gaps of " + m.to_string() + " and " + n.to_string() +
                                                " do not vanish near the edge of window " + to_string(c.window));
    const int grow = c.window.size() / 2 + 1;
    c.window = {c.window.lo - grow, c.window.hi + grow};
  }
}

std::string hilbert_reason(const HilbertComparison& h) {
  std::string r = "Hilbert series differ";
  if (h.mismatch_degree) r += " (first at degree " + std::to_string(*h.mismatch_degree) + ")";
  return r;
}

std::string violation_reason(const HomViolation& v) {
  return "[N, " + to_string(v.vertex) + "] = " + std::to_string(v.n_value) + " < [M, " + to_string(v.vertex) +
         "] = " + std::to_string(v.m_value);
}

}  // namespace

HilbertComparison same_hilbert(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n) {
  const RationalForm diff = ctx.hilbert(n) - ctx.hilbert(m);
  HilbertComparison h;
  h.equal = diff.is_zero();
  if (!h.equal) h.mismatch_degree = diff.lowest_exponent();
  return h;
}

Window comparison_window(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n) {
  return compare(ctx, m, n).window;
}

OrderDecision hom_leq(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n) {
  const ARQuiver& q = ctx.require_quiver();
  const Comparison c = compare(ctx, m, n);
  OrderDecision d;
  d.relation = Relation::kHom;
  for (const Vertex& v : support(c.hm, c.hn)) {
    const long a = c.hm.at(v), b = c.hn.at(v);
    if (b < a) {
      d.verdict = Verdict::kNo;
      d.violation = HomViolation{v, a, b};
      d.reason = violation_reason(*d.violation);
      return d;
    }
    if (b == a) continue;
    if (q.is_free(v.id)) {
      if (c.hilbert_equal)
        throw Error(ErrorCode::kInconsistent, "nonzero gap at free vertex " + to_string(v) + " with equal Hilbert series");
      continue;
    }
    d.fset.gaps[v] = b - a;
  }
  d.verdict = Verdict::kYes;
  if (!c.hilbert_equal) d.reason = "decided on shift window " + to_string(c.window) + " (Hilbert series differ)";
  return d;
}

long stabilization_bound(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n, const Vertex& x) {
  if (!same_hilbert(ctx, m, n).equal) throw Error(ErrorCode::kPrecondition, "stabilization_bound: Hilbert series differ");
  if (!hom_leq(ctx, m, n).yes()) throw Error(ErrorCode::kPrecondition, "stabilization_bound: M is not <=_hom N");
  const Comparison c = compare(ctx, m, n);
  long bound = 0;
  const int reach = std::max(c.window.hi - x.shift, x.shift - c.window.lo);
  for (int k = 0; k <= reach; ++k)
    for (int sign : {1, -1}) {
      const Vertex y = x.shifted(sign * k);
      if (c.window.contains(y.shift) && c.hm.at(y) != c.hn.at(y)) bound = k + 1;
    }
  return bound;
}

Distinguisher class_distinguisher(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n) {
  Distinguisher d;
  const HilbertComparison h = same_hilbert(ctx, m, n);
  d.hilbert_only = ctx.entry().primes.empty();
  if (!h.equal) {
    d.distinguished = true;
    d.evidence = hilbert_reason(h);
    return d;
  }
  for (const MinimalPrime& p : ctx.entry().primes) {
    const long a = ctx.rank(m, p), b = ctx.rank(n, p);
    if (a != b) {
      d.distinguished = true;
      d.evidence = "rank at " + p.id + ": " + std::to_string(a) + " vs " + std::to_string(b);
      return d;
    }
  }
  d.evidence = d.hilbert_only ? "equal Hilbert series (no minimal primes catalogued)" : "equal so far";
  return d;
}

OrderDecision deg_leq(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n, const DegOptions& opts) {
  OrderDecision d;
  d.relation = Relation::kDeg;
  if (!ctx.gate().ok) {
    d.verdict = Verdict::kIncomparablePrecondition;
    d.reason = ctx.gate().reason;
    return d;
  }
  const HilbertComparison h = same_hilbert(ctx, m, n);
  if (!h.equal) {
    d.hilbert_mismatch = h.mismatch_degree;
    d.reason = hilbert_reason(h);
    return d;
  }
  d.distinguisher = class_distinguisher(ctx, m, n);
  const OrderDecision hom = hom_leq(ctx, m, n);
  if (d.distinguisher->distinguished) {
    if (hom.yes())
      throw Error(ErrorCode::kInconsistent, "hom order holds although the classes differ: " + d.distinguisher->evidence);
    d.violation = hom.violation;
    d.reason = "Grothendieck distinguisher: " + d.distinguisher->evidence;
    return d;
  }
  if (!hom.yes()) {
    d.violation = hom.violation;
    d.reason = violation_reason(*hom.violation);
    return d;
  }
  d.verdict = Verdict::kYes;
  d.fset = hom.fset;
  d.reason = "equal Hilbert series and M <=_hom N";
  if (!opts.build_chain) return d;
  d.chain = degeneration_chain(ctx, m, n);
  if (opts.verify) {
    std::optional<ChainVerifier> local;
    ChainVerifier* v = opts.verifier;
    if (!v) v = &local.emplace(ctx.entry());
    d.report = v->verify(*d.chain);
    if (!d.report->ok)
      throw Error(ErrorCode::kInconsistent, "constructed chain failed verification: " + d.report->summary);
  }
  return d;
}

OrderDecision ext_leq(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n, const DegOptions& opts) {
  OrderDecision d = deg_leq(ctx, m, n, opts);
  d.relation = Relation::kExt;
  return d;
}

OrderDecision stable_leq(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n) {
  OrderDecision d;
  d.relation = Relation::kStable;
  if (!ctx.gate().ok) {
    d.verdict = Verdict::kIncomparablePrecondition;
    d.reason = ctx.gate().reason;
    return d;
  }
  d.stable = stable_deg_decide(ctx, m, n);
  d.verdict = d.stable->yes ? Verdict::kYes : Verdict::kNo;
  d.reason = d.stable->reason;
  d.chain = d.stable->chain;
  return d;
}

TauFormulaResult tau_formula_check(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n) {
  if (!same_hilbert(ctx, m, n).equal) throw Error(ErrorCode::kPrecondition, "tau_formula_check: Hilbert series differ");
  if (!hom_leq(ctx, m, n).yes()) throw Error(ErrorCode::kPrecondition, "tau_formula_check: M is not <=_hom N");
  const ARQuiver& q = ctx.require_quiver();
  const Comparison c = compare(ctx, m, n);
  TauFormulaResult r;
  for (const Vertex& x : support(c.hm, c.hn)) {
    if (q.is_free(x.id)) continue;
    const auto up = q.tau_inverse(x);
    if (!up) continue;
    ++r.checked;
    const long gap = c.hn.at(x) - c.hm.at(x);
    const long dual = ctx.hom(*up, n) - ctx.hom(*up, m);
    if (gap != dual) {
      r.holds = false;
      r.counterexample = x;
      r.gap = gap;
      r.dual_gap = dual;
      return r;
    }
  }
  return r;
}

namespace {

struct Candidate {
  Vertex v;
  RationalForm form;
  std::vector<long long> series;
};

std::vector<Candidate> candidates(const RingContext& ctx, const Window& shifts, Window& degrees) {
  std::vector<Candidate> out;
  int lo = 0, hi = 0;
  bool first = true;
  for (const ModuleEntry& e : ctx.entry().modules)
    for (int s = shifts.lo; s <= shifts.hi; ++s) {
      const Vertex v{e.id, s};
      for (int g : e.presentation.generator_degrees()) {
        lo = first ? g - s : std::min(lo, g - s);
        hi = first ? g - s : std::max(hi, g - s);
        first = false;
      }
      out.push_back({v, ctx.hilbert(v), {}});
    }
  const RingSpec& r = *ctx.ring();
  degrees = {lo, hi + r.relation_degree() + 2 * r.weight_lcm()};
  for (Candidate& c : out) c.series = c.form.expand(degrees);
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.v < b.v; });
  return out;
}

}  // namespace

std::vector<ModuleExpr> enumerate_hilbert_class(const RingContext& ctx, const RationalForm& target,
                                                const Window& shifts, int max_summands) {
  Window degrees;
  const std::vector<Candidate> cands = candidates(ctx, shifts, degrees);
  const std::vector<long long> goal = target.expand(degrees);
  std::vector<ModuleExpr> found;
  ModuleExpr current;
  RationalForm form(ctx.ring()->weights());
  std::vector<long long> partial(goal.size(), 0);

  std::function<void(std::size_t, int)> dfs = [&](std::size_t start, int left) {
    if (form == target || (form.is_zero() && target.is_zero())) found.push_back(current);
    if (left == 0) return;
    for (std::size_t i = start; i < cands.size(); ++i) {
      const Candidate& c = cands[i];
      bool fits = true;
      for (std::size_t k = 0; k < goal.size() && fits; ++k) fits = partial[k] + c.series[k] <= goal[k];
      if (!fits) continue;
      for (std::size_t k = 0; k < goal.size(); ++k) partial[k] += c.series[k];
      form += c.form;
      current.add(c.v);
      dfs(i, left - 1);
      current.subtract(ModuleExpr(c.v));
      form -= c.form;
      for (std::size_t k = 0; k < goal.size(); ++k) partial[k] -= c.series[k];
    }
  };
  dfs(0, max_summands);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<std::vector<ModuleExpr>> hilbert_classes(const RingContext& ctx, const Window& shifts, int max_summands) {
  Window degrees;
  const std::vector<Candidate> cands = candidates(ctx, shifts, degrees);
  std::map<std::map<int, long long>, std::vector<ModuleExpr>> groups;
  ModuleExpr current;
  RationalForm form(ctx.ring()->weights());
  std::function<void(std::size_t, int)> dfs = [&](std::size_t start, int left) {
    if (!current.empty()) groups[form.numerator()].push_back(current);
    if (left == 0) return;
    for (std::size_t i = start; i < cands.size(); ++i) {
      form += cands[i].form;
      current.add(cands[i].v);
      dfs(i, left - 1);
      current.subtract(ModuleExpr(cands[i].v));
      form -= cands[i].form;
    }
  };
  dfs(0, max_summands);
  std::vector<std::vector<ModuleExpr>> out;
  for (auto& [key, g] : groups) {
    std::sort(g.begin(), g.end());
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::string HasseDiagram::to_dot(const std::string& name) const {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=TB;\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) os << "  n" << i << " [label=\"" << nodes[i].to_string() << "\"];\n";
  for (const auto& [a, b] : edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

bool HasseDiagram::acyclic() const {
  std::vector<int> indegree(nodes.size(), 0);
  std::vector<std::vector<std::size_t>> out(nodes.size());
  for (const auto& [a, b] : edges) {
    out[a].push_back(b);
    ++indegree[b];
  }
  std::queue<std::size_t> ready;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (indegree[i] == 0) ready.push(i);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t i = ready.front();
    ready.pop();
    ++seen;
    for (std::size_t j : out[i])
      if (--indegree[j] == 0) ready.push(j);
  }
  return seen == nodes.size();
}

HasseDiagram hasse_diagram(const RingContext& ctx, const std::vector<ModuleExpr>& mods) {
  if (!ctx.gate().ok) throw Error(ErrorCode::kPrecondition, ctx.gate().reason);
  HasseDiagram g;
  g.nodes = mods;
  std::sort(g.nodes.begin(), g.nodes.end());
  g.nodes.erase(std::unique(g.nodes.begin(), g.nodes.end()), g.nodes.end());
  const std::size_t k = g.nodes.size();
  std::vector<std::vector<char>> leq(k, std::vector<char>(k, 0));
  DegOptions opts;
  opts.build_chain = false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      leq[i][j] = i == j || deg_leq(ctx, g.nodes[i], g.nodes[j], opts).yes();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool cover = true;
      for (std::size_t m = 0; m < k && cover; ++m)
        if (m != i && m != j && leq[i][m] && leq[m][j]) cover = false;
      if (cover) g.edges.emplace_back(i, j);
    }
  return g;
}

}  // namespace degenlab
