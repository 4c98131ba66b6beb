#include "degenlab/witness.hpp"

#include "degenlab/error.hpp"
#include "degenlab/orders.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace degenlab {

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::kExtension: return "extension";
    case StepKind::kZwara: return "zwara";
    case StepKind::kCancelCommon: return "cancel-common";
    case StepKind::kCancelFree: return "cancel-free";
    case StepKind::kIsoRearrange: return "iso-rearrange";
  }
  return "?";
}

namespace {

StepKind step_kind(const std::string& s) {
  for (StepKind k : {StepKind::kExtension, StepKind::kZwara, StepKind::kCancelCommon, StepKind::kCancelFree,
                     StepKind::kIsoRearrange})
    if (s == to_string(k)) return k;
  throw Error(ErrorCode::kParse, "unknown step kind '" + s + "'");
}

const char* justification(StepKind k) {
  switch (k) {
    case StepKind::kExtension: return "a short exact sequence degenerates its middle term to the sum of its end terms";
    case StepKind::kZwara: return "Zwara sequence criterion";
    case StepKind::kCancelCommon: return "cancellation of a common summand with equal hom evidence";
    case StepKind::kCancelFree: return "cancellation of a free summand";
    case StepKind::kIsoRearrange: return "identical decomposition into indecomposables";
  }
  return "";
}

ModuleExpr sum(const std::vector<Vertex>& parts) {
  ModuleExpr e;
  for (const Vertex& v : parts) e.add(v);
  return e;
}

std::string joined(const std::vector<Vertex>& parts) {
  if (parts.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " + " : "") + to_string(parts[i]);
  return s;
}

std::string matrix_key(const PolynomialMatrix& m) {
  std::ostringstream os;
  os << m.rows() << 'x' << m.cols() << ':';
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      os << '[';
      for (const auto& [e, c] : m(i, j).terms()) {
        os << format_rational(c) << '@';
        for (int x : e) os << x << ',';
        os << ';';
      }
      os << ']';
    }
  return os.str();
}

int min_shift(const SequenceWitness& s) {
  int lo = 0;
  bool first = true;
  for (const auto* part : {&s.left, &s.middle, &s.right})
    for (const Vertex& v : *part) {
      lo = first ? v.shift : std::min(lo, v.shift);
      first = false;
    }
  return lo;
}

std::vector<Vertex> moved(const std::vector<Vertex>& parts, int s) {
  std::vector<Vertex> out;
  for (const Vertex& v : parts) out.push_back(v.shifted(s));
  return out;
}

}  // namespace

ModuleExpr free_part(const RingEntry& entry, const ModuleExpr& m) {
  ModuleExpr out;
  for (const auto& [v, k] : m.terms())
    if (entry.module(v.id).free) out.add(v, k);
  return out;
}

ModuleExpr nonfree_part(const RingEntry& entry, const ModuleExpr& m) {
  ModuleExpr out;
  for (const auto& [v, k] : m.terms())
    if (!entry.module(v.id).free) out.add(v, k);
  return out;
}

std::size_t chain_size(const WitnessChain& chain) {
  std::function<std::size_t(const std::vector<Step>&)> count = [&](const std::vector<Step>& steps) {
    std::size_t n = 0;
    for (const Step& s : steps) n += 1 + count(s.sub);
    return n;
  };
  return count(chain.steps);
}

std::vector<const Step*> extension_moves(const WitnessChain& chain) {
  std::vector<const Step*> out;
  std::function<void(const std::vector<Step>&)> walk = [&](const std::vector<Step>& steps) {
    for (const Step& s : steps) {
      if (s.kind == StepKind::kExtension) out.push_back(&s);
      walk(s.sub);
    }
  };
  walk(chain.steps);
  return out;
}

long ChainVerifier::hom(const Vertex& a, const Vertex& b) {
  const auto key = std::make_tuple(a.id, b.id, b.shift - a.shift);
  {
    std::lock_guard lock(mutex_);
    auto it = homs_.find(key);
    if (it != homs_.end()) return it->second;
  }
  const long value = hom_dim(entry_->presentation(Vertex{a.id, 0}), entry_->presentation(Vertex{b.id, b.shift - a.shift}));
  std::lock_guard lock(mutex_);
  homs_.emplace(key, value);
  return value;
}

long ChainVerifier::hom(const ModuleExpr& a, const ModuleExpr& b) {
  long s = 0;
  for (const auto& [u, i] : a.terms())
    for (const auto& [v, j] : b.terms()) s += static_cast<long>(i) * j * hom(u, v);
  return s;
}

ExactnessCertificate ChainVerifier::check_sequence(const SequenceWitness& seq) {
  // Shifting every term by the same amount leaves the matrices unchanged, so
  // certificates are shared across shifts unless a window is pinned.
  const int base = seq.window ? 0 : min_shift(seq);
  std::ostringstream key;
  key << joined(moved(seq.left, -base)) << '|' << joined(moved(seq.middle, -base)) << '|'
      << joined(moved(seq.right, -base)) << '|' << matrix_key(seq.alpha) << '|' << matrix_key(seq.beta);
  if (seq.window) key << '|' << seq.window->lo << ".." << seq.window->hi;
  {
    std::lock_guard lock(mutex_);
    auto it = sequences_.find(key.str());
    if (it != sequences_.end()) return it->second;
  }
  ExactnessCertificate cert;
  try {
    const Presentation left = entry_->presentation(moved(seq.left, -base));
    const Presentation middle = entry_->presentation(moved(seq.middle, -base));
    const Presentation right = entry_->presentation(moved(seq.right, -base));
    if (seq.alpha.rows() != middle.num_generators() || seq.alpha.cols() != left.num_generators() ||
        seq.beta.rows() != right.num_generators() || seq.beta.cols() != middle.num_generators())
      throw Error(ErrorCode::kMalformed, "map shapes do not match the generator counts of the terms");
    ShortExactSequence ses{left, middle, right, GradedMatrix(seq.alpha, middle.generator_degrees(), left.generator_degrees()),
                           GradedMatrix(seq.beta, right.generator_degrees(), middle.generator_degrees())};
    cert = verify_exact(ses, seq.window);
  } catch (const Error& e) {
    cert.status = ExactnessStatus::kNotExact;
    cert.detail = std::string(to_string(e.code())) + ": " + e.what();
  }
  std::lock_guard lock(mutex_);
  sequences_.emplace(key.str(), cert);
  return cert;
}

std::string ChainVerifier::verify_step(const Step& step, const std::string& path, ChainReport& report, Totals& totals) {
  std::string problem;
  const auto sequence_problem = [&]() -> std::string {
    if (!step.sequence) return "missing sequence";
    const ExactnessCertificate cert = check_sequence(*step.sequence);
    if (!cert.exact()) {
      std::string msg = std::string("sequence is ") + to_string(cert.status);
      if (cert.failing_degree) msg += " at degree " + std::to_string(*cert.failing_degree);
      if (!cert.detail.empty()) msg += " (" + cert.detail + ")";
      return msg;
    }
    return "";
  };
  const auto sub_problem = [&]() -> std::string {
    const ModuleExpr src = step.from + step.cancel, tgt = step.to + step.cancel;
    const std::size_t before = totals.failed;
    verify_steps(step.sub, src, tgt, path + ".", report, totals);
    return totals.failed > before ? "sub-chain failed" : "";
  };

  try {
    switch (step.kind) {
      case StepKind::kExtension: {
        if (!step.sequence) {
          problem = "missing sequence";
          break;
        }
        const SequenceWitness& s = *step.sequence;
        if (step.from != sum(s.middle) + step.passive)
          problem = "source " + step.from.to_string() + " is not middle term + passive";
        else if (step.to != sum(s.left) + sum(s.right) + step.passive)
          problem = "result " + step.to.to_string() + " is not end terms + passive";
        else
          problem = sequence_problem();
        break;
      }
      case StepKind::kZwara: {
        if (!step.sequence) {
          problem = "missing sequence";
          break;
        }
        const SequenceWitness& s = *step.sequence;
        const ModuleExpr z = sum(s.left), mid = sum(s.middle);
        if (!mid.contains(z))
          problem = "middle term does not contain Z = " + z.to_string();
        else if (step.from != (mid - z) + step.passive)
          problem = "source " + step.from.to_string() + " is not (middle - Z) + passive";
        else if (step.to != sum(s.right) + step.passive)
          problem = "result " + step.to.to_string() + " is not right term + passive";
        else
          problem = sequence_problem();
        break;
      }
      case StepKind::kCancelCommon: {
        const long a = hom(step.cancel, step.from), b = hom(step.cancel, step.to);
        if (a != b)
          problem = "[X, M] = " + std::to_string(a) + " but [X, N] = " + std::to_string(b);
        else if (a != step.evidence_from || b != step.evidence_to)
          problem = "recorded evidence " + std::to_string(step.evidence_from) + "/" + std::to_string(step.evidence_to) +
                    " differs from recomputed " + std::to_string(a) + "/" + std::to_string(b);
        else
          problem = sub_problem();
        break;
      }
      case StepKind::kCancelFree: {
        if (free_part(*entry_, step.cancel) != step.cancel)
          problem = "cancelled summand " + step.cancel.to_string() + " is not free";
        else
          problem = sub_problem();
        break;
      }
      case StepKind::kIsoRearrange:
        if (step.from != step.to) problem = "decompositions differ";
        break;
    }
  } catch (const Error& e) {
    problem = std::string(to_string(e.code())) + ": " + e.what();
  }
  return problem;
}

void ChainVerifier::verify_steps(const std::vector<Step>& steps, const ModuleExpr& source, const ModuleExpr& target,
                                 const std::string& prefix, ChainReport& report, Totals& totals) {
  ModuleExpr current = source;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step& step = steps[i];
    const std::string path = prefix + std::to_string(i + 1);
    const std::size_t slot = report.steps.size();
    report.steps.push_back({path, to_string(step.kind), true, ""});
    ++totals.steps;
    std::string problem;
    if (step.from != current)
      problem = "starts at " + step.from.to_string() + " but the previous module is " + current.to_string();
    const std::string own = verify_step(step, path, report, totals);
    if (problem.empty()) problem = own;
    if (!problem.empty()) {
      report.steps[slot].ok = false;
      report.steps[slot].message = problem;
      ++totals.failed;
    } else {
      report.steps[slot].message = step.from.to_string() + " -> " + step.to.to_string();
    }
    current = step.to;
  }
  if (current != target) {
    report.steps.push_back({prefix.empty() ? "end" : prefix + "end", "endpoint", false,
                            "chain ends at " + current.to_string() + ", expected " + target.to_string()});
    ++totals.failed;
  }
}

ChainReport ChainVerifier::verify(const WitnessChain& chain) {
  ChainReport report;
  Totals totals;
  try {
    entry_->check_ids(chain.source);
    entry_->check_ids(chain.target);
  } catch (const Error& e) {
    report.ok = false;
    report.summary = e.what();
    return report;
  }
  verify_steps(chain.steps, chain.source, chain.target, "", report, totals);
  report.ok = totals.failed == 0;
  std::ostringstream os;
  if (report.ok) {
    os << "all " << totals.steps << " steps verified";
  } else {
    os << "failed at";
    for (const StepReport& s : report.steps)
      if (!s.ok) os << ' ' << s.path;
  }
  report.summary = os.str();
  return report;
}

ChainReport verify_chain(const RingEntry& entry, const WitnessChain& chain) {
  ChainVerifier v(entry);
  return v.verify(chain);
}

SequenceWitness ar_sequence_witness(const ARQuiver& q, const Vertex& x) {
  const auto seq = q.ar_sequence_from(x);
  if (!seq) throw Error(ErrorCode::kData, "no AR sequence starts at " + to_string(x));
  const Vertex end = seq->end;
  const ArSequenceEntry* data = nullptr;
  for (const ArSequenceEntry& s : q.entry().quiver->sequences)
    if (s.end == end.id) data = &s;
  if (!data) throw Error(ErrorCode::kData, "no AR sequence ends at " + end.id);
  SequenceWitness w;
  w.left = {x};
  w.middle = moved(data->middle_order, end.shift);
  w.right = {end};
  w.alpha = data->into_middle;
  w.beta = data->onto_end;
  return w;
}

namespace {

void require_pair(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n, const char* what) {
  if (!same_hilbert(ctx, m, n).equal) throw Error(ErrorCode::kPrecondition, std::string(what) + ": Hilbert series differ");
  if (!hom_leq(ctx, m, n).yes()) throw Error(ErrorCode::kPrecondition, std::string(what) + ": M is not <=_hom N");
}

Vertex pick_minimal(const ARQuiver& q, const FSet& f) {
  for (const auto& [x, gap] : f.gaps) {
    bool minimal = true;
    for (const auto& [y, g] : f.gaps)
      if (y != x && q.has_path(y, x)) {
        minimal = false;
        break;
      }
    if (minimal) return x;
  }
  throw Error(ErrorCode::kInconsistent, "F-set has no minimal element");
}

Vertex minimal_of_stripped(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n, const FSet& f) {
  const ARQuiver& q = ctx.require_quiver();
  const Vertex x = pick_minimal(q, f);
  const ModuleExpr e = q.ar_sequence_from(x)->middle;
  const long a = ctx.hom(e, m), b = ctx.hom(e, n);
  if (a != b)
    throw Error(ErrorCode::kInconsistent, "minimal vertex " + to_string(x) + ": [E, M] = " + std::to_string(a) +
                                              " but [E, N] = " + std::to_string(b));
  return x;
}

void add_passive(const RingContext& ctx, Step& s, const ModuleExpr& c) {
  if (c.empty()) return;
  s.from += c;
  s.to += c;
  switch (s.kind) {
    case StepKind::kExtension:
    case StepKind::kZwara:
      s.passive += c;
      break;
    case StepKind::kCancelCommon: {
      const long extra = ctx.hom(s.cancel, c);
      s.evidence_from += extra;
      s.evidence_to += extra;
      for (Step& t : s.sub) add_passive(ctx, t, c);
      break;
    }
    case StepKind::kCancelFree:
      for (Step& t : s.sub) add_passive(ctx, t, c);
      break;
    case StepKind::kIsoRearrange:
      break;
  }
}

std::vector<Step> build_chain(const RingContext& ctx, const ModuleExpr& p, const ModuleExpr& q, long expected) {
  const ModuleExpr c = p.common(q);
  const ModuleExpr ps = p - c, qs = q - c;
  if (ps.empty() && qs.empty()) {
    if (expected > 0) throw Error(ErrorCode::kInconsistent, "descent measure did not reach zero");
    return {};
  }
  const OrderDecision hom = hom_leq(ctx, ps, qs);
  if (!hom.yes()) throw Error(ErrorCode::kInconsistent, "hom order lost during induction at " + ps.to_string());
  const long d = hom.fset.total();
  if (expected >= 0 && d != expected)
    throw Error(ErrorCode::kInconsistent, "descent measure is " + std::to_string(d) + ", expected " +
                                              std::to_string(expected));
  if (d == 0)
    throw Error(ErrorCode::kInconsistent, "equal hom vectors for different modules " + ps.to_string() + " and " +
                                              qs.to_string());

  const ARQuiver& quiver = ctx.require_quiver();
  const Vertex x = minimal_of_stripped(ctx, ps, qs, hom.fset);
  SequenceWitness seq = ar_sequence_witness(quiver, x);
  const ModuleExpr e = sum(seq.middle);
  const ModuleExpr next = ps + sum(seq.left) + sum(seq.right);

  Step ext;
  ext.kind = StepKind::kExtension;
  ext.from = ps + e;
  ext.to = next;
  ext.passive = ps;
  ext.sequence = std::move(seq);
  ext.justification = justification(StepKind::kExtension);

  Step cancel;
  cancel.kind = StepKind::kCancelCommon;
  cancel.from = ps;
  cancel.to = qs;
  cancel.cancel = e;
  cancel.evidence_from = ctx.hom(e, ps);
  cancel.evidence_to = ctx.hom(e, qs);
  cancel.justification = justification(StepKind::kCancelCommon);
  cancel.sub.push_back(std::move(ext));
  for (Step& s : build_chain(ctx, next, qs + e, d - 1)) cancel.sub.push_back(std::move(s));
  add_passive(ctx, cancel, c);
  return {std::move(cancel)};
}

}  // namespace

Vertex minimal_vertex(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n) {
  require_pair(ctx, m, n, "minimal_vertex");
  const ModuleExpr c = m.common(n);
  const ModuleExpr ms = m - c, ns = n - c;
  const FSet f = hom_leq(ctx, ms, ns).fset;
  if (f.empty()) throw Error(ErrorCode::kPrecondition, "minimal_vertex: modules isomorphic");
  return minimal_of_stripped(ctx, ms, ns, f);
}

WitnessChain degeneration_chain(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n) {
  if (!ctx.gate().ok) throw Error(ErrorCode::kPrecondition, ctx.gate().reason);
  require_pair(ctx, m, n, "degeneration_chain");
  WitnessChain chain{ctx.ring()->name(), m, n, {}};
  chain.steps = build_chain(ctx, m, n, -1);
  return chain;
}

RiedtmannWitness riedtmann_witness(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n) {
  require_pair(ctx, m, n, "riedtmann_witness");
  const ARQuiver& q = ctx.require_quiver();
  RiedtmannWitness w;
  w.fset = hom_leq(ctx, m, n).fset;
  for (const auto& [x, gap] : w.fset.gaps) {
    const auto seq = q.ar_sequence_from(x);
    if (!seq) throw Error(ErrorCode::kData, "no AR sequence starts at " + to_string(x));
    const int g = static_cast<int>(gap);
    w.u.add(x, g);
    w.v += seq->middle.scaled(g);
    w.w.add(seq->end, g);
    w.sequences.emplace_back(x, gap);
  }
  w.l = w.v;
  w.identity_holds = m + w.u + w.w == n + w.v;
  return w;
}

Step cancel_common(const RingContext& ctx, const WitnessChain& padded, const ModuleExpr& x) {
  if (!padded.source.contains(x) || !padded.target.contains(x))
    throw Error(ErrorCode::kPrecondition, "cancel_common: " + x.to_string() + " is not a summand of both ends");
  Step s;
  s.kind = StepKind::kCancelCommon;
  s.from = padded.source - x;
  s.to = padded.target - x;
  s.cancel = x;
  s.evidence_from = ctx.hom(x, s.from);
  s.evidence_to = ctx.hom(x, s.to);
  if (s.evidence_from != s.evidence_to)
    throw Error(ErrorCode::kPrecondition, "cancel_common refused: [X, M] = " + std::to_string(s.evidence_from) +
                                              ", [X, N] = " + std::to_string(s.evidence_to));
  s.sub = padded.steps;
  s.justification = justification(StepKind::kCancelCommon);
  return s;
}

Step cancel_free(const RingEntry& entry, const WitnessChain& padded, const ModuleExpr& f) {
  if (free_part(entry, f) != f) throw Error(ErrorCode::kPrecondition, "cancel_free refused: " + f.to_string() + " is not free");
  if (!free_part(entry, padded.source).contains(f))
    throw Error(ErrorCode::kPrecondition, "cancel_free refused: " + f.to_string() + " exceeds the free part of " +
                                              padded.source.to_string());
  if (!padded.target.contains(f))
    throw Error(ErrorCode::kPrecondition, "cancel_free refused: " + f.to_string() + " is not a summand of " +
                                              padded.target.to_string());
  Step s;
  s.kind = StepKind::kCancelFree;
  s.from = padded.source - f;
  s.to = padded.target - f;
  s.cancel = f;
  s.sub = padded.steps;
  s.justification = justification(StepKind::kCancelFree);
  return s;
}

namespace {

// Writes numerator(h) = (1 - t^e) q(t) and returns q, or nullopt if (1 - t^e) does not divide.
std::optional<std::map<int, long long>> divide_by_relation(std::map<int, long long> num, int e) {
  std::map<int, long long> q;
  if (num.empty()) return q;
  const int top = num.rbegin()->first;
  while (!num.empty()) {
    const auto [k, c] = *num.begin();
    if (k + e > top) return std::nullopt;
    q[k] += c;
    num.erase(num.begin());
    if ((num[k + e] += c) == 0) num.erase(k + e);
  }
  return q;
}

}  // namespace

StableDecision stable_deg_decide(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n) {
  if (!ctx.entry().flags.gorenstein) throw Error(ErrorCode::kPrecondition, "ring not graded Gorenstein");
  const ARQuiver& q = ctx.require_quiver();
  StableDecision d;
  d.stable_source = nonfree_part(ctx.entry(), m);
  d.stable_target = nonfree_part(ctx.entry(), n);
  const RationalForm diff = ctx.hilbert(d.stable_target) - ctx.hilbert(d.stable_source);
  const auto quotient = divide_by_relation(diff.numerator(), ctx.ring()->relation_degree());
  if (!quotient) {
    d.reason = "h(N) - h(M) is not a combination of free Hilbert series";
    return d;
  }
  for (const auto& [k, c] : *quotient) {
    if (c < 0) {
      d.reason = "h(N) - h(M) needs R(" + std::to_string(-k) + ") with multiplicity " + std::to_string(c);
      return d;
    }
    d.padding.add(Vertex{q.free_vertex(), -k}, static_cast<int>(c));
  }
  const ModuleExpr padded = d.padding + d.stable_source;
  const OrderDecision deg = deg_leq(ctx, padded, d.stable_target);
  if (!deg.yes()) {
    d.reason = "F + M does not degenerate to N for the only admissible padding F = " + d.padding.to_string() + ": " +
               deg.reason;
    return d;
  }
  d.yes = true;
  d.reason = "F + M <=_deg N with F = " + d.padding.to_string();
  d.chain = deg.chain;
  for (const Step* s : extension_moves(*d.chain)) {
    const ModuleExpr z = sum(s->sequence->left), right = sum(s->sequence->right);
    const ModuleExpr middle = s->from + z;
    d.triangles.push_back({nonfree_part(ctx.entry(), z), nonfree_part(ctx.entry(), middle),
                           nonfree_part(ctx.entry(), z + right + s->passive)});
  }
  return d;
}

bool stable_deg_exhaustive(const RingContext& ctx, const ModuleExpr& m, const ModuleExpr& n, const Window& shifts,
                           int max_free) {
  const ARQuiver& q = ctx.require_quiver();
  const ModuleExpr ms = nonfree_part(ctx.entry(), m), ns = nonfree_part(ctx.entry(), n);
  DegOptions opts;
  opts.build_chain = false;
  ModuleExpr pad;
  std::function<bool(int, int)> search = [&](int shift, int left) {
    if (deg_leq(ctx, pad + ms, ns, opts).yes()) return true;
    if (left == 0) return false;
    for (int s = shift; s <= shifts.hi; ++s) {
      const Vertex r{q.free_vertex(), s};
      pad.add(r);
      const bool found = search(s, left - 1);
      pad.subtract(ModuleExpr(r));
      if (found) return true;
    }
    return false;
  };
  return search(shifts.lo, max_free);
}

namespace {

using json = nlohmann::ordered_json;

json matrix_json(const PolynomialMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      json entry = json::array();
      for (const auto& [e, c] : m(i, j).terms()) entry.push_back(json::array({format_rational(c), e}));
      row.push_back(entry);
    }
    rows.push_back(row);
  }
  return rows;
}

PolynomialMatrix matrix_from(const json& j, std::size_t nv, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, where + ": matrix must be a list of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j[0].size());
  PolynomialMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j[r].size()) != cols) throw Error(ErrorCode::kParse, where + ": ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) {
      Polynomial p(Rational(0), nv);
      for (const auto& term : j[r][c]) {
        Exponent e = term.at(1).get<Exponent>();
        if (e.size() != nv) throw Error(ErrorCode::kParse, where + ": exponent vector has the wrong length");
        p.add_term(e, parse_rational(term.at(0).get<std::string>()));
      }
      m(r, c) = p;
    }
  }
  return m;
}

std::size_t arity(const PolynomialMatrix& a, const PolynomialMatrix& b) {
  for (const auto* m : {&a, &b})
    for (Eigen::Index i = 0; i < m->rows(); ++i)
      for (Eigen::Index j = 0; j < m->cols(); ++j)
        if (!(*m)(i, j).terms().empty()) return (*m)(i, j).terms().begin()->first.size();
  return 0;
}

json step_json(const Step& s) {
  json j;
  j["kind"] = to_string(s.kind);
  j["from"] = s.from.to_string();
  j["to"] = s.to.to_string();
  if (!s.justification.empty()) j["justification"] = s.justification;
  if (s.kind == StepKind::kExtension || s.kind == StepKind::kZwara) j["passive"] = s.passive.to_string();
  if (s.sequence) {
    json q;
    q["left"] = joined(s.sequence->left);
    q["middle"] = joined(s.sequence->middle);
    q["right"] = joined(s.sequence->right);
    q["num_vars"] = arity(s.sequence->alpha, s.sequence->beta);
    q["alpha"] = matrix_json(s.sequence->alpha);
    q["beta"] = matrix_json(s.sequence->beta);
    if (s.sequence->window) q["window"] = json::array({s.sequence->window->lo, s.sequence->window->hi});
    j["sequence"] = q;
  }
  if (s.kind == StepKind::kCancelCommon || s.kind == StepKind::kCancelFree) {
    j["cancel"] = s.cancel.to_string();
    if (s.kind == StepKind::kCancelCommon) j["evidence"] = json::array({s.evidence_from, s.evidence_to});
    json sub = json::array();
    for (const Step& t : s.sub) sub.push_back(step_json(t));
    j["sub"] = sub;
  }
  return j;
}

std::vector<Vertex> ordered(const std::string& text) {
  return text == "0" ? std::vector<Vertex>{} : ModuleExpr::parse_ordered(text);
}

Step step_from(const json& j, const std::string& where) {
  Step s;
  s.kind = step_kind(j.at("kind").get<std::string>());
  s.from = ModuleExpr::parse(j.at("from").get<std::string>());
  s.to = ModuleExpr::parse(j.at("to").get<std::string>());
  s.justification = j.value("justification", "");
  if (j.contains("passive")) s.passive = ModuleExpr::parse(j["passive"].get<std::string>());
  if (j.contains("sequence")) {
    const json& q = j["sequence"];
    SequenceWitness w;
    w.left = ordered(q.at("left").get<std::string>());
    w.middle = ordered(q.at("middle").get<std::string>());
    w.right = ordered(q.at("right").get<std::string>());
    const std::size_t nv = q.at("num_vars").get<std::size_t>();
    w.alpha = matrix_from(q.at("alpha"), nv, where + ".alpha");
    w.beta = matrix_from(q.at("beta"), nv, where + ".beta");
    if (q.contains("window")) w.window = Window{q["window"].at(0).get<int>(), q["window"].at(1).get<int>()};
    s.sequence = std::move(w);
  }
  if (j.contains("cancel")) s.cancel = ModuleExpr::parse(j["cancel"].get<std::string>());
  if (j.contains("evidence")) {
    s.evidence_from = j["evidence"].at(0).get<long>();
    s.evidence_to = j["evidence"].at(1).get<long>();
  }
  if (j.contains("sub")) {
    std::size_t i = 0;
    for (const json& t : j["sub"]) s.sub.push_back(step_from(t, where + "." + std::to_string(++i)));
  }
  return s;
}

constexpr const char* kWitnessSchema = "degenlab-witness/1";

}  // namespace

std::string witness_to_json(const WitnessChain& chain, const std::string& catalog_hash) {
  json j;
  j["schema"] = kWitnessSchema;
  j["catalog_hash"] = catalog_hash;
  j["ring"] = chain.ring;
  j["source"] = chain.source.to_string();
  j["target"] = chain.target.to_string();
  json steps = json::array();
  for (const Step& s : chain.steps) steps.push_back(step_json(s));
  j["steps"] = steps;
  return j.dump(1) + "\n";
}

WitnessChain witness_from_json(const std::string& text, std::string* catalog_hash) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("witness is not valid JSON: ") + e.what());
  }
  try {
    if (j.value("schema", "") != kWitnessSchema)
      throw Error(ErrorCode::kParse, "witness schema must be " + std::string(kWitnessSchema));
    if (catalog_hash) *catalog_hash = j.value("catalog_hash", "");
    WitnessChain c;
    c.ring = j.at("ring").get<std::string>();
    c.source = ModuleExpr::parse(j.at("source").get<std::string>());
    c.target = ModuleExpr::parse(j.at("target").get<std::string>());
    std::size_t i = 0;
    for (const json& s : j.at("steps")) c.steps.push_back(step_from(s, "step " + std::to_string(++i)));
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed witness: ") + e.what());
  }
}

}  // namespace degenlab
