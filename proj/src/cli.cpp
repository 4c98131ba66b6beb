#include "degenlab/cli.hpp"

#include "degenlab/error.hpp"
#include "degenlab/orders.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

namespace degenlab {
namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Options {
  std::string catalog;
  bool no_cache = false;
  std::string window;
  int shift_bound = 12;
  std::string dot;
  std::string report = "text";
};

struct Output {
  int code = kExitYes;
  std::string text;
  std::string dot;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes through a temporary file in the same directory and renames it into place.
void write_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::random_device rd;
  const fs::path tmp = path.string() + ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    out << content;
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

class Cache {
 public:
  Cache(bool disabled) {
    const char* dir = std::getenv("DEGENLAB_CACHE_DIR");
    if (!disabled && dir && *dir) dir_ = dir;
  }

  static std::string key(const std::string& catalog_hash, const std::vector<std::string>& parts) {
    std::string text = std::string(kToolVersion) + '\0' + catalog_hash;
    for (const auto& p : parts) text += '\0' + p;
    return content_hash(text);
  }

  std::optional<Output> get(const std::string& key) const {
    if (dir_.empty()) return std::nullopt;
    const fs::path p = fs::path(dir_) / (key + ".json");
    std::error_code ec;
    if (!fs::exists(p, ec)) return std::nullopt;
    try {
      const json j = json::parse(read_file(p.string()));
      if (j.value("version", "") != kToolVersion) return std::nullopt;  // stale entries are ignored
      return Output{j.at("code").get<int>(), j.at("text").get<std::string>(), j.at("dot").get<std::string>()};
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  void put(const std::string& key, const Output& o) const {
    if (dir_.empty()) return;
    json j;
    j["version"] = kToolVersion;
    j["code"] = o.code;
    j["text"] = o.text;
    j["dot"] = o.dot;
    try {
      write_atomic(fs::path(dir_) / (key + ".json"), j.dump());
    } catch (const std::exception&) {
      // an unwritable cache only costs recomputation
    }
  }

 private:
  std::string dir_;
};

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::kYes: return kExitYes;
    case Verdict::kNo: return kExitNo;
    case Verdict::kIncomparablePrecondition: return kExitGate;
  }
  return kExitError;
}

json fset_json(const FSet& f) {
  json j = json::object();
  for (const auto& [v, g] : f.gaps) j[to_string(v)] = g;
  return j;
}

std::string fset_text(const FSet& f) {
  if (f.empty()) return "{}";
  std::string s;
  for (const auto& [v, g] : f.gaps) s += (s.empty() ? "" : ", ") + to_string(v) + ":" + std::to_string(g);
  return "{" + s + "}";
}

// Name of the mathematical fact behind each verdict.
std::string basis_of(const OrderDecision& d) {
  switch (d.relation) {
    case Relation::kHom:
      return "comparison of knitted hom vectors over all indecomposables";
    case Relation::kDeg:
    case Relation::kExt:
      if (d.verdict == Verdict::kIncomparablePrecondition) return "hypotheses of the hom/degeneration equivalence";
      if (d.yes()) return "equal Hilbert series and hom order, with an explicit chain of exact sequences";
      if (d.distinguisher && d.distinguisher->distinguished) return "degenerations preserve the Grothendieck class";
      return "degeneration implies equal Hilbert series and the hom order";
    case Relation::kStable:
      return "stable degeneration is degeneration after adding a free module";
  }
  return "";
}

Output report_decision(const Options& opt, const std::string& ring, const ModuleExpr& m, const ModuleExpr& n,
                       const OrderDecision& d) {
  Output o;
  o.code = exit_for(d.verdict);
  if (opt.report == "structured") {
    json j;
    j["ring"] = ring;
    j["relation"] = to_string(d.relation);
    j["source"] = m.to_string();
    j["target"] = n.to_string();
    j["verdict"] = to_string(d.verdict);
    j["reason"] = d.reason;
    j["basis"] = basis_of(d);
    if (d.yes() && d.relation != Relation::kStable) j["fset"] = fset_json(d.fset);
    if (d.violation)
      j["violation"] = {{"vertex", to_string(d.violation->vertex)}, {"m", d.violation->m_value}, {"n", d.violation->n_value}};
    if (d.hilbert_mismatch) j["hilbert_mismatch_degree"] = *d.hilbert_mismatch;
    if (d.distinguisher) j["distinguisher"] = {{"distinguished", d.distinguisher->distinguished}, {"evidence", d.distinguisher->evidence}};
    if (d.chain) j["chain_steps"] = chain_size(*d.chain);
    if (d.report) j["verification"] = {{"ok", d.report->ok}, {"summary", d.report->summary}};
    if (d.stable) {
      j["padding"] = d.stable->padding.to_string();
      json tri = json::array();
      for (const auto& t : d.stable->triangles)
        tri.push_back({{"z", t.z.to_string()}, {"middle", t.m_plus_z.to_string()}, {"end", t.n.to_string()}});
      j["triangles"] = tri;
    }
    o.text = j.dump(1) + "\n";
    return o;
  }
  std::ostringstream os;
  os << "ring: " << ring << "\nrelation: " << to_string(d.relation) << "\nM: " << m.to_string() << "\nN: "
     << n.to_string() << "\nverdict: " << to_string(d.verdict) << "\nreason: " << d.reason << "\nbasis: " << basis_of(d)
     << "\n";
  if (d.yes() && d.relation != Relation::kStable) os << "F-set: " << fset_text(d.fset) << "\n";
  if (d.violation)
    os << "violation: [N, X] = " << d.violation->n_value << " < [M, X] = " << d.violation->m_value << " at X = "
       << to_string(d.violation->vertex) << "\n";
  if (d.chain) os << "chain: " << chain_size(*d.chain) << " steps\n";
  if (d.report) os << "verification: " << (d.report->ok ? "pass" : "FAIL") << " (" << d.report->summary << ")\n";
  if (d.stable && d.stable->yes) {
    os << "padding: " << d.stable->padding.to_string() << "\n";
    for (const auto& t : d.stable->triangles)
      os << "triangle: " << t.z.to_string() << " -> " << t.m_plus_z.to_string() << " -> " << t.n.to_string() << "\n";
  }
  o.text = os.str();
  return o;
}

std::string verify_table(const std::string& path, const WitnessChain& c, const ChainReport& r) {
  std::ostringstream os;
  os << "witness: " << path << "\nring: " << c.ring << "\nsource: " << c.source.to_string()
     << "\ntarget: " << c.target.to_string() << "\n";
  std::size_t width = 4;
  for (const auto& s : r.steps) width = std::max(width, s.path.size());
  os << std::left;
  os.width(static_cast<std::streamsize>(width + 2));
  os << "step";
  os.width(15);
  os << "kind";
  os.width(8);
  os << "status" << "detail\n";
  for (const auto& s : r.steps) {
    os.width(static_cast<std::streamsize>(width + 2));
    os << s.path;
    os.width(15);
    os << s.kind;
    os.width(8);
    os << (s.ok ? "ok" : "FAIL") << s.message << "\n";
  }
  os << "result: " << (r.ok ? "pass" : "FAIL") << " (" << r.summary << ")\n";
  return os.str();
}

struct SuiteResult {
  std::string ring, suite;
  bool ok = true;
  std::string detail;
};

template <typename F>
SuiteResult run_suite(const std::string& ring, const std::string& suite, F&& body) {
  SuiteResult r{ring, suite, true, ""};
  try {
    r.detail = body();
    r.ok = r.detail.empty();
  } catch (const Error& e) {
    r.ok = false;
    r.detail = e.what();
    for (const auto& d : e.details())
      if (d != e.what()) r.detail += "; " + d;
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = e.what();
  }
  return r;
}

std::vector<SuiteResult> selftest_ring(const RingEntry& entry, int bound) {
  const std::string name = entry.ring->name();
  std::vector<SuiteResult> out;
  std::optional<RingContext> ctx;
  out.push_back(run_suite(name, "load", [&]() -> std::string {
    ctx.emplace(entry, bound);
    return "";
  }));
  if (!ctx) return out;
  if (!ctx->quiver()) {
    out.push_back(run_suite(name, "gate", [&]() -> std::string {
      if (ctx->gate().ok) return "ring without quiver passes the gate";
      const auto d = deg_leq(*ctx, ModuleExpr(Vertex{entry.modules.front().id, 0}),
                             ModuleExpr(Vertex{entry.modules.front().id, 0}));
      return d.verdict == Verdict::kIncomparablePrecondition ? "" : "decision attempted outside the hypotheses";
    }));
    return out;
  }
  const ARQuiver& q = *ctx->quiver();
  out.push_back(run_suite(name, "knitting", [&]() -> std::string {
    for (const auto& a : q.vertices())
      for (const auto& b : q.vertices())
        for (int s = -3; s <= 3; ++s) {
          const long k = ctx->hom(Vertex{a, 0}, Vertex{b, s});
          const long g = hom_dim(entry.presentation(Vertex{a, 0}), entry.presentation(Vertex{b, s}));
          if (k != g)
            return "[" + a + ", " + b + "(" + std::to_string(s) + ")] knitted " + std::to_string(k) + ", computed " +
                   std::to_string(g);
        }
    return "";
  }));
  out.push_back(run_suite(name, "decomposition", [&]() -> std::string {
    for (const auto& a : q.vertices())
      for (const auto& b : q.vertices())
        for (int s = 0; s <= 1; ++s) {
          ModuleExpr m(Vertex{a, 0});
          m.add(Vertex{b, s});
          if (decompose_from_hom(q, knit_hom_vector(q, m)) != m) return "round trip failed for " + m.to_string();
        }
    return "";
  }));
  out.push_back(run_suite(name, "tau-formula", [&]() -> std::string {
    for (const auto& id : q.vertices()) {
      if (q.is_free(id)) continue;
      const auto seq = q.ar_sequence(Vertex{id, 0});
      ModuleExpr ends(seq.tau);
      ends.add(seq.end);
      const auto r = tau_formula_check(*ctx, seq.middle, ends);
      if (!r.holds) return "fails at " + to_string(*r.counterexample) + " for the sequence ending in " + id;
    }
    return "";
  }));
  out.push_back(run_suite(name, "equivalence", [&]() -> std::string {
    if (!ctx->gate().ok) return "";
    ChainVerifier verifier(entry);
    DegOptions opts;
    opts.verifier = &verifier;
    for (const auto& cls : hilbert_classes(*ctx, {-1, 1}, 2))
      for (const auto& m : cls)
        for (const auto& n : cls) {
          const auto d = deg_leq(*ctx, m, n, opts);
          const bool expected = same_hilbert(*ctx, m, n).equal && hom_leq(*ctx, m, n).yes();
          if (d.yes() != expected) return "verdict mismatch for " + m.to_string() + " vs " + n.to_string();
          if (d.yes() && !(d.report && d.report->ok)) return "chain rejected for " + m.to_string() + " vs " + n.to_string();
        }
    return "";
  }));
  return out;
}

struct Session {
  Options opt;
  Catalog catalog;
  std::string catalog_path;

  void load() {
    catalog_path = opt.catalog.empty() ? default_catalog_path() : opt.catalog;
    catalog = load_catalog(catalog_path);
  }
  Window window_or(Window fallback) const { return opt.window.empty() ? fallback : parse_window(opt.window); }
};

void emit_dot(const Options& opt, const std::string& dot, std::ostream& out) {
  if (opt.dot.empty()) {
    out << dot;
    return;
  }
  write_atomic(opt.dot, dot);
}

Output cmd_order(Session& s, const std::string& ring, const std::string& rel, const std::string& mt,
                 const std::string& nt) {
  const RingContext ctx(s.catalog.ring(ring), s.opt.shift_bound);
  const ModuleExpr m = ctx.parse(mt), n = ctx.parse(nt);
  OrderDecision d;
  if (rel == "hom") {
    if (!ctx.quiver()) {
      d.relation = Relation::kHom;
      d.verdict = Verdict::kIncomparablePrecondition;
      d.reason = "ring has no AR quiver in the catalog";
    } else {
      d = hom_leq(ctx, m, n);
    }
  } else if (rel == "deg" || rel == "ext") {
    d = rel == "deg" ? deg_leq(ctx, m, n) : ext_leq(ctx, m, n);
  } else {
    d = stable_leq(ctx, m, n);
  }
  return report_decision(s.opt, ring, m, n, d);
}

Output cmd_witness(Session& s, const std::string& ring, const std::string& mt, const std::string& nt,
                   const std::string& path) {
  const RingContext ctx(s.catalog.ring(ring), s.opt.shift_bound);
  const ModuleExpr m = ctx.parse(mt), n = ctx.parse(nt);
  const OrderDecision d = deg_leq(ctx, m, n);
  Output o = report_decision(s.opt, ring, m, n, d);
  if (d.yes()) {
    write_atomic(path, witness_to_json(*d.chain, s.catalog.hash));
    if (s.opt.report != "structured") o.text += "witness: " + path + "\n";
  }
  return o;
}

Output cmd_verify(Session& s, const std::string& path) {
  std::string hash;
  const WitnessChain c = witness_from_json(read_file(path), &hash);
  const ChainReport r = verify_chain(s.catalog.ring(c.ring), c);
  Output o;
  o.code = r.ok ? kExitYes : kExitNo;
  if (s.opt.report == "structured") {
    json j;
    j["witness"] = path;
    j["ring"] = c.ring;
    j["catalog_hash_matches"] = hash.empty() || hash == s.catalog.hash;
    j["ok"] = r.ok;
    j["summary"] = r.summary;
    json steps = json::array();
    for (const auto& st : r.steps) steps.push_back({{"step", st.path}, {"kind", st.kind}, {"ok", st.ok}, {"detail", st.message}});
    j["steps"] = steps;
    o.text = j.dump(1) + "\n";
  } else {
    o.text = verify_table(path, c, r);
    if (!hash.empty() && hash != s.catalog.hash) o.text += "note: witness was written against catalog " + hash + "\n";
  }
  return o;
}

std::vector<ModuleExpr> class_of(Session& s, const RingContext& ctx, const std::string& seed, const std::string& target,
                                 int max_summands) {
  if (seed.empty() == target.empty()) throw Error(ErrorCode::kParse, "give exactly one of --seed and --target");
  const RationalForm h = ctx.hilbert(ctx.parse(seed.empty() ? target : seed));
  return enumerate_hilbert_class(ctx, h, s.window_or({-1, 1}), max_summands);
}

Output cmd_enumerate(Session& s, const std::string& ring, const std::string& seed, const std::string& target,
                     int max_summands) {
  const RingContext ctx(s.catalog.ring(ring), s.opt.shift_bound);
  const auto cls = class_of(s, ctx, seed, target, max_summands);
  Output o;
  if (s.opt.report == "structured") {
    json j;
    j["ring"] = ring;
    j["count"] = cls.size();
    json mods = json::array();
    for (const auto& m : cls) mods.push_back(m.to_string());
    j["modules"] = mods;
    o.text = j.dump(1) + "\n";
  } else {
    o.text = "class size: " + std::to_string(cls.size()) + "\n";
    for (const auto& m : cls) o.text += m.to_string() + "\n";
  }
  return o;
}

Output cmd_hasse(Session& s, const std::string& ring, const std::string& seed, const std::string& target,
                 int max_summands) {
  const RingContext ctx(s.catalog.ring(ring), s.opt.shift_bound);
  Output o;
  if (!ctx.gate().ok) {
    o.code = kExitGate;
    o.text = "error: " + ctx.gate().reason + "\n";
    return o;
  }
  const auto cls = class_of(s, ctx, seed, target, max_summands);
  const HasseDiagram g = hasse_diagram(ctx, cls);
  o.dot = g.to_dot();
  std::ostringstream os;
  os << "nodes: " << g.nodes.size() << "\nedges: " << g.edges.size() << "\n";
  for (const auto& [a, b] : g.edges) os << g.nodes[a].to_string() << " -> " << g.nodes[b].to_string() << "\n";
  o.text = os.str();
  return o;
}

Output cmd_quiver(Session& s, const std::string& ring) {
  const RingEntry& e = s.catalog.ring(ring);
  if (!e.quiver) throw Error(ErrorCode::kUnsupported, "ring " + ring + " has no AR quiver");
  const ARQuiver q = ARQuiver::load(e);
  Output o;
  o.dot = q.to_dot();
  return o;
}

Output cmd_selftest(Session& s, const std::string& ring) {
  std::vector<SuiteResult> results;
  for (const RingEntry& e : s.catalog.rings) {
    if (!ring.empty() && e.ring->name() != ring) continue;
    for (auto& r : selftest_ring(e, s.opt.shift_bound)) results.push_back(std::move(r));
  }
  if (results.empty()) throw Error(ErrorCode::kParse, "unknown ring " + ring);
  Output o;
  std::ostringstream os;
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.ok;
    os << (r.ok ? "pass " : "FAIL ") << r.ring << " " << r.suite;
    if (!r.detail.empty()) os << ": " << r.detail;
    os << "\n";
  }
  os << (ok ? "selftest passed\n" : "selftest FAILED\n");
  o.code = ok ? kExitYes : kExitNo;
  o.text = os.str();
  return o;
}

void print_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  for (const auto& d : e.details())
    if (d != e.what()) err << "  " << d << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degeneration, hom and extension orders on graded Cohen-Macaulay modules", "degenlab"};
  app.require_subcommand(1);
  Session s;
  app.add_option("--catalog", s.opt.catalog, "catalog file");
  app.add_flag("--no-cache", s.opt.no_cache, "ignore DEGENLAB_CACHE_DIR");
  app.add_option("--window", s.opt.window, "shift window LO..HI");
  app.add_option("--shift-bound", s.opt.shift_bound, "shift margin around the summands for hom comparisons")
      ->check(CLI::PositiveNumber);
  app.add_option("--dot", s.opt.dot, "write DOT output to this file");
  app.add_option("--report", s.opt.report, "report style")->check(CLI::IsMember({"text", "structured"}));

  std::string ring, relation, m, n, path, seed, target;
  int max_summands = 4;
  auto* order = app.add_subcommand("order", "decide M <= N");
  order->add_option("--ring", ring)->required();
  order->add_option("relation", relation)->required()->check(CLI::IsMember({"hom", "deg", "ext", "stable"}));
  order->add_option("M", m)->required();
  order->add_option("N", n)->required();
  auto* witness = app.add_subcommand("witness", "write a verified degeneration chain");
  witness->add_option("--ring", ring)->required();
  witness->add_option("M", m)->required();
  witness->add_option("N", n)->required();
  witness->add_option("out", path)->required();
  auto* verify = app.add_subcommand("verify", "re-verify a witness file");
  verify->add_option("witness", path)->required();
  auto* enumerate = app.add_subcommand("enumerate", "list a Hilbert class");
  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of a Hilbert class under <=_deg");
  for (auto* sub : {enumerate, hasse}) {
    sub->add_option("--ring", ring)->required();
    sub->add_option("--seed", seed, "module whose Hilbert class is listed");
    sub->add_option("--target", target, "alias of --seed");
    sub->add_option("--max-summands", max_summands)->check(CLI::NonNegativeNumber);
  }
  auto* quiver = app.add_subcommand("quiver", "AR quiver as DOT");
  quiver->add_option("--ring", ring)->required();
  auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
  selftest->add_option("--ring", ring);
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitError;
  }

  try {
    s.load();
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    std::vector<std::string> key_parts{name, ring, relation, m, n, seed, target, std::to_string(max_summands),
                                       s.opt.window, std::to_string(s.opt.shift_bound), s.opt.report};
    const bool cacheable = name == "order" || name == "enumerate" || name == "hasse";
    const Cache cache(s.opt.no_cache || !cacheable);
    const std::string key = Cache::key(s.catalog.hash, key_parts);
    std::optional<Output> o = cache.get(key);
    if (!o) {
      if (name == "order") o = cmd_order(s, ring, relation, m, n);
      else if (name == "witness") o = cmd_witness(s, ring, m, n, path);
      else if (name == "verify") o = cmd_verify(s, path);
      else if (name == "enumerate") o = cmd_enumerate(s, ring, seed, target, max_summands);
      else if (name == "hasse") o = cmd_hasse(s, ring, seed, target, max_summands);
      else if (name == "quiver") o = cmd_quiver(s, ring);
      else o = cmd_selftest(s, ring);
      if (o->code != kExitError) cache.put(key, *o);
    }
    out << o->text;
    if (!o->dot.empty()) emit_dot(s.opt, o->dot, out);
    return o->code;
  } catch (const Error& e) {
    print_error(e, err);
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace degenlab
