#include "degenlab/context.hpp"

#include "degenlab/error.hpp"

#include <algorithm>
#include <limits>

namespace degenlab {

long FSet::total() const {
  long t = 0;
  for (const auto& [v, g] : gaps) t += g;
  return t;
}

RingContext::RingContext(const RingEntry& entry, int shift_bound) : entry_(&entry), shift_bound_(shift_bound) {
  if (entry.quiver) quiver_.emplace(ARQuiver::load(entry));
  const RingFlags& f = entry.flags;
  if (!f.gorenstein) gate_.reason = "ring not graded Gorenstein";
  else if (!f.isolated) gate_.reason = "ring not a graded isolated singularity";
  else if (!f.finite_type) gate_.reason = "ring not of graded finite representation type";
  else if (!quiver_) gate_.reason = "ring has no AR quiver in the catalog";
  else if (!quiver_->directed()) gate_.reason = "AR quiver not representation directed";
  gate_.ok = gate_.reason.empty();
}

const ARQuiver& RingContext::require_quiver() const {
  if (!quiver_) throw Error(ErrorCode::kUnsupported, "ring " + ring()->name() + " has no AR quiver");
  return *quiver_;
}

RationalForm RingContext::hilbert(const Vertex& v) const {
  std::lock_guard lock(mutex_);
  auto it = hilbert_.find(v.id);
  if (it == hilbert_.end()) {
    const auto form = rational_form(entry_->module(v.id).presentation);
    if (!form) throw Error(ErrorCode::kNotCohenMacaulay, "module " + v.id + " has no matrix factorization");
    it = hilbert_.emplace(v.id, *form).first;
  }
  return it->second.shifted(v.shift);
}

RationalForm RingContext::hilbert(const ModuleExpr& m) const {
  RationalForm sum(ring()->weights());
  for (const auto& [v, mult] : m.terms()) sum += hilbert(v).scaled(mult);
  return sum;
}

std::shared_ptr<const HomVector> RingContext::base_vector(const std::string& id, int radius) const {
  std::lock_guard lock(mutex_);
  auto& slot = base_[id];
  if (!slot || slot->shifts.hi < radius) {
    const int r = std::max(radius, slot ? 2 * slot->shifts.hi : 2 * shift_bound_ + 8);
    slot = std::make_shared<const HomVector>(require_quiver().knit_indecomposable(id, {-r, r}));
  }
  return slot;
}

long RingContext::hom(const Vertex& a, const Vertex& b) const {
  const int rel = b.shift - a.shift;
  return base_vector(a.id, std::abs(rel))->at({b.id, rel});
}

long RingContext::hom(const ModuleExpr& a, const Vertex& b) const {
  long s = 0;
  for (const auto& [v, mult] : a.terms()) s += mult * hom(v, b);
  return s;
}

long RingContext::hom(const Vertex& a, const ModuleExpr& b) const {
  long s = 0;
  for (const auto& [v, mult] : b.terms()) s += mult * hom(a, v);
  return s;
}

long RingContext::hom(const ModuleExpr& a, const ModuleExpr& b) const {
  long s = 0;
  for (const auto& [v, mult] : b.terms()) s += mult * hom(a, v);
  return s;
}

Window RingContext::window_for(const ModuleExpr& m, const ModuleExpr& n) const {
  int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
  for (const ModuleExpr* e : {&m, &n})
    for (const auto& [v, mult] : e->terms()) {
      lo = std::min(lo, v.shift);
      hi = std::max(hi, v.shift);
    }
  if (lo > hi) lo = hi = 0;
  return {lo - shift_bound_, hi + shift_bound_};
}

HomVector RingContext::hom_vector(const ModuleExpr& m, const Window& shifts) const {
  HomVector out;
  out.source = m;
  out.shifts = shifts;
  for (const auto& [v, mult] : m.terms()) {
    const int radius = std::max(std::abs(shifts.lo - v.shift), std::abs(shifts.hi - v.shift));
    const auto base = base_vector(v.id, radius);
    for (const auto& [x, val] : base->values) {
      const Vertex t = x.shifted(v.shift);
      if (shifts.contains(t.shift)) out.values[t] += mult * val;
    }
  }
  return out;
}

long RingContext::rank(const Vertex& v, const MinimalPrime& p) const {
  std::lock_guard lock(mutex_);
  const auto key = std::make_pair(v.id, p.id);
  auto it = ranks_.find(key);
  if (it == ranks_.end()) it = ranks_.emplace(key, localization_rank(entry_->module(v.id).presentation, p)).first;
  return it->second;
}

long RingContext::rank(const ModuleExpr& m, const MinimalPrime& p) const {
  long s = 0;
  for (const auto& [v, mult] : m.terms()) s += mult * rank(v, p);
  return s;
}

ModuleExpr RingContext::parse(const std::string& text) const {
  ModuleExpr m = ModuleExpr::parse(text);
  entry_->check_ids(m);
  return m;
}

}  // namespace degenlab
