#include "degenlab/mesh.hpp"

#include "degenlab/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace degenlab {

long HomVector::at(const Vertex& v) const {
  auto it = values.find(v);
  return it == values.end() ? 0 : it->second;
}

std::vector<Arrow> arrows_from_meshes(const std::map<std::string, Vertex>& tau,
                                      const std::map<std::string, ModuleExpr>& middles) {
  // Arrows into a non-free X come from E_X; arrows into a free vertex P are
  // tau Z -> P for the meshes with P in E_Z.
  std::vector<Arrow> out;
  for (const auto& [x, e] : middles) {
    const Vertex t = tau.at(x);
    for (const auto& [y, mult] : e.terms()) {
      for (int k = 0; k < mult; ++k) {
        out.push_back({y.id, x, -y.shift});
        if (!middles.count(y.id)) out.push_back({t.id, y.id, y.shift - t.shift});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> mesh_consistency(const std::map<std::string, Vertex>& tau,
                                          const std::map<std::string, ModuleExpr>& middles) {
  // Each arrow tau Z -> Y into a non-free Y must also be an arrow Y receives from E_Y.
  std::vector<Arrow> into, out_of;
  for (const auto& [x, e] : middles) {
    const Vertex t = tau.at(x);
    for (const auto& [y, mult] : e.terms()) {
      for (int k = 0; k < mult; ++k) {
        if (middles.count(y.id)) out_of.push_back({t.id, y.id, y.shift - t.shift});
        if (middles.count(y.id)) into.push_back({y.id, x, -y.shift});
      }
    }
  }
  std::sort(into.begin(), into.end());
  std::sort(out_of.begin(), out_of.end());
  std::vector<std::string> problems;
  if (into != out_of) problems.push_back("meshes disagree on arrows between non-free vertices");
  return problems;
}

namespace {

std::vector<std::vector<int>> strongly_connected(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) adj[static_cast<std::size_t>(u)].push_back(v);
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;
  std::function<void(int)> visit = [&](int u) {
    const auto su = static_cast<std::size_t>(u);
    index[su] = low[su] = counter++;
    stack.push_back(u);
    on_stack[su] = true;
    for (int v : adj[su]) {
      const auto sv = static_cast<std::size_t>(v);
      if (index[sv] < 0) {
        visit(v);
        low[su] = std::min(low[su], low[sv]);
      } else if (on_stack[sv]) {
        low[su] = std::min(low[su], index[sv]);
      }
    }
    if (low[su] == index[su]) {
      std::vector<int> comp;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[static_cast<std::size_t>(w)] = false;
        comp.push_back(w);
      } while (w != u);
      comps.push_back(std::move(comp));
    }
  };
  for (int u = 0; u < n; ++u)
    if (index[static_cast<std::size_t>(u)] < 0) visit(u);
  return comps;
}

// True iff the weighted digraph has no negative cycle.
bool no_negative_cycle(int n, const std::vector<std::tuple<int, int, long>>& edges) {
  std::vector<long> dist(static_cast<std::size_t>(n), 0);
  for (int round = 0; round < n; ++round) {
    bool changed = false;
    for (auto [u, v, w] : edges) {
      if (dist[static_cast<std::size_t>(u)] + w < dist[static_cast<std::size_t>(v)]) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + w;
        changed = true;
      }
    }
    if (!changed) return true;
  }
  for (auto [u, v, w] : edges)
    if (dist[static_cast<std::size_t>(u)] + w < dist[static_cast<std::size_t>(v)]) return false;
  return true;
}

}  // namespace

bool is_representation_directed(const std::vector<std::string>& vertices, const std::vector<Arrow>& arrows) {
  std::map<std::string, int> idx;
  for (const auto& v : vertices) idx.emplace(v, static_cast<int>(idx.size()));
  std::vector<std::pair<int, int>> edges;
  for (const auto& a : arrows) edges.push_back({idx.at(a.source), idx.at(a.target)});
  const int n = static_cast<int>(vertices.size());
  for (const auto& comp : strongly_connected(n, edges)) {
    std::set<int> members(comp.begin(), comp.end());
    std::vector<const Arrow*> inside;
    for (const auto& a : arrows)
      if (members.count(idx.at(a.source)) && members.count(idx.at(a.target))) inside.push_back(&a);
    if (inside.empty()) continue;
    // A cycle of length L <= n with net shift S has weight K*S - L; it is
    // negative exactly when S <= 0, because K exceeds n.
    const long k = n + 1;
    auto one_sign = [&](long sign) {
      std::vector<std::tuple<int, int, long>> weighted;
      for (const Arrow* a : inside) weighted.emplace_back(idx.at(a->source), idx.at(a->target), sign * k * a->shift - 1);
      return no_negative_cycle(n, weighted);
    };
    if (!one_sign(1) && !one_sign(-1)) return false;
  }
  return true;
}

std::optional<std::pair<long, std::map<std::string, long>>> solve_heights(const std::vector<std::string>& vertices,
                                                                           const std::vector<Arrow>& arrows,
                                                                           long limit) {
  std::map<std::string, int> idx;
  for (const auto& v : vertices) idx.emplace(v, static_cast<int>(idx.size()));
  const int n = static_cast<int>(vertices.size());
  for (long mag = 1; mag <= limit; ++mag) {
    for (const long c : {mag, -mag}) {
      // p(source) - p(target) <= c*k - 1 : edge target -> source with that weight.
      std::vector<long> dist(static_cast<std::size_t>(n), 0);
      bool feasible = false;
      for (int round = 0; round <= n; ++round) {
        bool changed = false;
        for (const auto& a : arrows) {
          const auto s = static_cast<std::size_t>(idx.at(a.source));
          const auto t = static_cast<std::size_t>(idx.at(a.target));
          const long w = c * a.shift - 1;
          if (dist[t] + w < dist[s]) {
            dist[s] = dist[t] + w;
            changed = true;
          }
        }
        if (!changed) {
          feasible = true;
          break;
        }
      }
      if (!feasible) continue;
      std::map<std::string, long> p;
      for (const auto& v : vertices) p[v] = dist[static_cast<std::size_t>(idx.at(v))];
      return std::make_pair(c, p);
    }
  }
  return std::nullopt;
}

bool ARQuiver::is_free(const std::string& id) const {
  auto it = free_.find(id);
  if (it == free_.end()) throw Error(ErrorCode::kParse, "unknown vertex '" + id + "'");
  return it->second;
}

bool ARQuiver::has_vertex(const std::string& id) const { return free_.count(id) > 0; }

Vertex ARQuiver::tau(const Vertex& x) const {
  auto it = tau_.find(x.id);
  if (it == tau_.end()) throw Error(ErrorCode::kPrecondition, "no AR sequence ends in the projective " + to_string(x));
  return it->second.shifted(x.shift);
}

std::optional<Vertex> ARQuiver::tau_inverse(const Vertex& x) const {
  auto it = tau_inverse_.find(x.id);
  if (it == tau_inverse_.end()) return std::nullopt;
  return it->second.shifted(x.shift);
}

ArSequence ARQuiver::ar_sequence(const Vertex& x) const {
  return {tau(x), middle_.at(x.id).shifted(x.shift), x};
}

std::optional<ArSequence> ARQuiver::ar_sequence_from(const Vertex& x) const {
  const auto end = tau_inverse(x);
  if (!end) return std::nullopt;
  return ar_sequence(*end);
}

ShortExactSequence ARQuiver::ar_sequence_maps(const Vertex& x) const {
  const ArSequenceEntry& data = *sequence_data_.at(x.id);
  std::vector<Vertex> order;
  for (const auto& v : data.middle_order) order.push_back(v.shifted(x.shift));
  const Presentation left = entry_->presentation(tau(x));
  const Presentation middle = entry_->presentation(order);
  const Presentation right = entry_->presentation(x);
  GradedMatrix alpha(data.into_middle, middle.generator_degrees(), left.generator_degrees());
  GradedMatrix beta(data.onto_end, right.generator_degrees(), middle.generator_degrees());
  return {left, middle, right, std::move(alpha), std::move(beta)};
}

long ARQuiver::height(const Vertex& v) const {
  if (!directed_) throw Error(ErrorCode::kSupportBound, "quiver is not representation directed; no height function");
  return height_scale_ * v.shift + potential_.at(v.id);
}

std::vector<Vertex> ARQuiver::successors(const Vertex& v) const {
  std::vector<Vertex> out;
  for (const auto& a : arrows_)
    if (a.source == v.id) out.push_back({a.target, v.shift + a.shift});
  return out;
}

bool ARQuiver::has_path(const Vertex& a, const Vertex& b) const {
  const long hb = height(b);
  if (height(a) >= hb) return false;
  std::set<Vertex> seen{a};
  std::queue<Vertex> todo;
  todo.push(a);
  while (!todo.empty()) {
    const Vertex v = todo.front();
    todo.pop();
    for (const Vertex& w : successors(v)) {
      if (w == b) return true;
      if (height(w) < hb && seen.insert(w).second) todo.push(w);
    }
  }
  return false;
}

HomVector ARQuiver::knit_indecomposable(const std::string& base, const Window& shifts) const {
  if (!directed_)
    throw Error(ErrorCode::kSupportBound, "knitting needs a representation-directed quiver (ring " + ring()->name() + ")");
  const Vertex v0{base, 0};
  const long h0 = height(v0);
  long hmax = h0;
  for (const auto& id : vertices_)
    for (int n : {shifts.lo, shifts.hi}) hmax = std::max(hmax, height({id, n}));
  // Every vertex with h0 <= height <= hmax, in increasing height.
  std::vector<Vertex> order;
  const long c = height_scale_;
  auto floor_div = [](long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); };
  for (const auto& id : vertices_) {
    const long p = potential_.at(id);
    long lo = c > 0 ? -floor_div(-(h0 - p), c) : -floor_div(-(hmax - p), c);
    long hi = c > 0 ? floor_div(hmax - p, c) : floor_div(h0 - p, c);
    for (long n = lo; n <= hi; ++n) order.push_back({id, static_cast<int>(n)});
  }
  std::sort(order.begin(), order.end(), [&](const Vertex& a, const Vertex& b) {
    const long ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  const RationalForm dual = *rational_form(canonical_dual(entry_->presentation(v0)));
  const int twist = ring()->canonical_twist();
  std::map<Vertex, long> value;
  auto get = [&](const Vertex& w) -> long {
    auto it = value.find(w);
    if (it != value.end()) return it->second;
    if (height(w) < h0) return 0;
    throw Error(ErrorCode::kInconsistent, "knitting reached " + to_string(w) + " before computing it");
  };
  for (const Vertex& w : order) {
    long val;
    if (free_.at(w.id)) {
      val = dual.coefficient(w.shift - twist);  // [V, R(n)] = dim (V*)_{n-a}
    } else {
      val = (w == v0 ? 1 : 0) - get(tau(w));
      for (const auto& [y, mult] : middle_.at(w.id).terms()) val += mult * get(y.shifted(w.shift));
    }
    if (val < 0) throw Error(ErrorCode::kInconsistent, "negative knitted value at " + to_string(w));
    value[w] = val;
  }
  HomVector out;
  out.source = ModuleExpr(v0);
  out.shifts = shifts;
  for (const auto& [w, val] : value)
    if (val != 0 && shifts.contains(w.shift)) out.values[w] = val;
  return out;
}

std::string ARQuiver::to_dot() const {
  std::ostringstream out;
  out << "digraph \"" << ring()->name() << "\" {\n  rankdir=LR;\n  node [shape=box];\n";
  for (const auto& v : vertices_) {
    out << "  \"" << v << "\"";
    if (free_.at(v)) out << " [peripheries=2]";
    out << ";\n";
  }
  auto label = [](int s) { return (s > 0 ? "+" : "") + std::to_string(s); };
  for (const auto& a : arrows_)
    out << "  \"" << a.source << "\" -> \"" << a.target << "\" [label=\"" << label(a.shift) << "\"];\n";
  for (const auto& [x, t] : tau_)
    out << "  \"" << x << "\" -> \"" << t.id << "\" [style=dashed, label=\"tau " << label(t.shift) << "\"];\n";
  out << "}\n";
  return out.str();
}

ARQuiver ARQuiver::load(const RingEntry& entry) {
  if (!entry.quiver) throw Error(ErrorCode::kUnsupported, "ring " + entry.ring->name() + " has no AR quiver");
  const QuiverEntry& data = *entry.quiver;
  ARQuiver q;
  q.entry_ = &entry;
  std::vector<std::string> violations;
  const RingPtr& ring = entry.ring;

  for (const auto& m : entry.modules) {
    q.vertices_.push_back(m.id);
    q.free_[m.id] = m.free;
    if (m.free) {
      if (!q.free_id_.empty()) violations.push_back("more than one free vertex");
      q.free_id_ = m.id;
      if (!is_isomorphic(m.presentation, Presentation::free(ring)))
        violations.push_back("vertex " + m.id + " is flagged free but is not R");
    }
    if (hom_dim(m.presentation, m.presentation) != 1)
      violations.push_back("vertex " + m.id + ": End_0 is not one-dimensional");
  }
  if (q.free_id_.empty()) violations.push_back("no free vertex");

  for (const auto& [x, t] : data.tau) {
    if (!q.has_vertex(x) || !q.has_vertex(t.id)) {
      violations.push_back("tau entry " + x + " -> " + to_string(t) + " names an unknown vertex");
      continue;
    }
    if (q.free_.at(x)) violations.push_back("tau given for the free vertex " + x);
    q.tau_[x] = t;
    if (q.tau_inverse_.count(t.id)) violations.push_back("tau is not injective at " + t.id);
    q.tau_inverse_[t.id] = Vertex{x, -t.shift};
  }
  for (const auto& seq : data.sequences) {
    if (!q.has_vertex(seq.end)) {
      violations.push_back("AR sequence ends in unknown vertex " + seq.end);
      continue;
    }
    if (q.sequence_data_.count(seq.end)) violations.push_back("two AR sequences end in " + seq.end);
    ModuleExpr e;
    bool ids_ok = true;
    for (const auto& v : seq.middle_order) {
      ids_ok = ids_ok && q.has_vertex(v.id);
      e.add(v);
    }
    if (!ids_ok) {
      violations.push_back("AR sequence ending in " + seq.end + " has a middle term with unknown ids");
      continue;
    }
    q.middle_[seq.end] = e;
    q.sequence_data_[seq.end] = &seq;
  }
  for (const auto& v : q.vertices_) {
    const bool has_seq = q.sequence_data_.count(v) > 0;
    if (q.free_.at(v) && has_seq) violations.push_back("an AR sequence ends in the free vertex " + v);
    if (!q.free_.at(v) && (!has_seq || !q.tau_.count(v)))
      violations.push_back("non-free vertex " + v + " lacks an AR sequence or tau");
  }
  if (!violations.empty()) throw Error(ErrorCode::kData, "quiver of " + ring->name() + ": " + violations.front(), violations);

  const int d = ring->krull_dimension();
  for (const auto& [x, seq] : q.sequence_data_) {
    const Vertex xv{x, 0};
    const std::string name = "AR sequence ending in " + x;
    try {
      const ShortExactSequence ses = q.ar_sequence_maps(xv);
      const auto cert = verify_exact(ses);
      if (!cert.exact()) violations.push_back(name + " is " + to_string(cert.status) + ": " + cert.detail);
      ModuleExpr split;
      split.add(q.tau_.at(x));
      split.add(xv);
      if (q.middle_.at(x) == split) violations.push_back(name + " splits (middle term is tau X + X)");
      const Presentation computed = syzygy(entry.presentation(xv), 2 - d).shifted(ring->canonical_twist());
      if (!is_isomorphic(computed, entry.presentation(q.tau_.at(x))))
        violations.push_back("tau " + x + " = " + to_string(q.tau_.at(x)) + " disagrees with the syzygy formula");
    } catch (const Error& e) {
      violations.push_back(name + ": " + e.what());
    }
  }

  q.arrows_ = data.arrows;
  std::sort(q.arrows_.begin(), q.arrows_.end());
  const auto derived = arrows_from_meshes(q.tau_, q.middle_);
  std::vector<Arrow> missing, extra;
  std::set_difference(derived.begin(), derived.end(), q.arrows_.begin(), q.arrows_.end(), std::back_inserter(missing));
  std::set_difference(q.arrows_.begin(), q.arrows_.end(), derived.begin(), derived.end(), std::back_inserter(extra));
  auto show = [](const Arrow& a) { return a.source + " -> " + a.target + "(" + std::to_string(a.shift) + ")"; };
  for (const auto& a : extra) violations.push_back("arrow " + show(a) + " is not implied by any AR sequence");
  for (const auto& a : missing) violations.push_back("arrow " + show(a) + " is implied by the AR sequences but missing");
  for (const auto& v : mesh_consistency(q.tau_, q.middle_)) violations.push_back(v);
  for (const auto& a : q.arrows_)
    if (!q.has_vertex(a.source) || !q.has_vertex(a.target)) violations.push_back("arrow " + show(a) + " names an unknown vertex");

  if (violations.empty()) {
    q.directed_ = is_representation_directed(q.vertices_, q.arrows_);
    if (entry.flags.representation_directed && *entry.flags.representation_directed != q.directed_)
      violations.push_back(std::string("flag representation_directed = ") +
                           (*entry.flags.representation_directed ? "true" : "false") + " contradicts the computed value");
    if (q.directed_) {
      long limit = 2;
      for (const auto& a : q.arrows_) limit += 2 * std::abs(a.shift);
      limit *= static_cast<long>(q.vertices_.size());
      auto h = solve_heights(q.vertices_, q.arrows_, limit);
      if (!h) {
        violations.push_back("directed quiver without a linear height function");
        q.directed_ = false;
      } else {
        q.height_scale_ = h->first;
        q.potential_ = h->second;
      }
    }
  }
  if (!violations.empty()) throw Error(ErrorCode::kData, "quiver of " + ring->name() + ": " + violations.front(), violations);
  return q;
}

bool is_representation_directed(const ARQuiver& q) { return q.directed(); }

HomVector knit_hom_vector(const ARQuiver& q, const ModuleExpr& m, const Window& shifts) {
  HomVector out;
  out.source = m;
  out.shifts = shifts;
  for (const auto& [v, mult] : m.terms()) {
    const HomVector base = q.knit_indecomposable(v.id, {shifts.lo - v.shift, shifts.hi - v.shift});
    for (const auto& [x, val] : base.values) out.values[x.shifted(v.shift)] += mult * val;
  }
  return out;
}

HomVector knit_hom_vector(const ARQuiver& q, const ModuleExpr& m, int bound) {
  if (m.empty()) return knit_hom_vector(q, m, Window{-bound, bound});
  int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
  for (const auto& [v, mult] : m.terms()) {
    lo = std::min(lo, v.shift);
    hi = std::max(hi, v.shift);
  }
  return knit_hom_vector(q, m, Window{lo - bound, hi + bound});
}

ModuleExpr decompose_from_hom(const ARQuiver& q, const HomVector& h) {
  auto not_module = [](const std::string& why) {
    return Error(ErrorCode::kPrecondition, "not a hom vector of a module: " + why);
  };
  ModuleExpr out;
  for (const auto& id : q.vertices()) {
    if (q.is_free(id)) continue;
    for (int n = h.shifts.lo; n <= h.shifts.hi; ++n) {
      const Vertex x{id, n};
      const ArSequence seq = q.ar_sequence(x);
      bool covered = h.covers(seq.tau);
      for (const auto& [y, mult] : seq.middle.terms()) covered = covered && h.covers(y);
      if (!covered) continue;
      long mu = h.at(x) + h.at(seq.tau);
      for (const auto& [y, mult] : seq.middle.terms()) mu -= mult * h.at(y);
      if (mu < 0) throw not_module("multiplicity " + std::to_string(mu) + " at " + to_string(x));
      out.add(x, static_cast<int>(mu));
    }
  }
  // Free part: the residual on free targets is sum_t c_t dim R_{n-t}.
  const std::string r = q.free_vertex();
  const HomVector nonfree = knit_hom_vector(q, out, h.shifts);
  const RationalForm hr = *rational_form(Presentation::free(q.ring()));
  std::map<int, long> coeff;
  for (int n = h.shifts.lo; n <= h.shifts.hi; ++n) {
    long residual = h.at({r, n}) - nonfree.at({r, n});
    for (const auto& [t, c] : coeff) residual -= c * hr.coefficient(n - t);
    if (residual < 0) throw not_module("negative free multiplicity at " + r + "(" + std::to_string(n) + ")");
    if (residual > 0) {
      coeff[n] = residual;
      out.add({r, n}, static_cast<int>(residual));
    }
  }
  if (!(knit_hom_vector(q, out, h.shifts) == HomVector{out, h.shifts, h.values}))
    throw not_module("recovered decomposition " + out.to_string() + " does not reproduce it");
  return out;
}

}  // namespace degenlab
