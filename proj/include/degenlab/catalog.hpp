#pragma once

#include "degenlab/localization.hpp"
#include "degenlab/module_expr.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace degenlab {

struct ModuleEntry {
  std::string id;
  bool free = false;
  Presentation presentation;
};

// AR sequence 0 -> tau X -> E -> X -> 0 on the fundamental domain. The maps
// use the generators of E in the order the middle term is written.
struct ArSequenceEntry {
  std::string end;
  std::string middle_text;
  std::vector<Vertex> middle_order;
  PolynomialMatrix into_middle;
  PolynomialMatrix onto_end;
};

struct Arrow {
  std::string source;
  std::string target;
  int shift = 0;  // source(0) -> target(shift)
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

struct QuiverEntry {
  std::vector<Arrow> arrows;
  std::map<std::string, Vertex> tau;
  std::vector<ArSequenceEntry> sequences;
};

struct RingFlags {
  bool gorenstein = false;
  bool isolated = false;
  bool finite_type = false;
  std::optional<bool> representation_directed;
};

struct RingEntry {
  RingPtr ring;
  RingFlags flags;
  std::vector<MinimalPrime> primes;
  std::vector<ModuleEntry> modules;
  std::optional<QuiverEntry> quiver;
  std::string notes;

  const ModuleEntry& module(const std::string& id) const;
  bool has_module(const std::string& id) const;
  Presentation presentation(const Vertex& v) const;
  // Direct sum in the given order.
  Presentation presentation(const std::vector<Vertex>& parts) const;
  Presentation presentation(const ModuleExpr& m) const;
  std::vector<Vertex> expand(const ModuleExpr& m) const;
  // Throws Error{kParse} listing every id that is not in this ring.
  void check_ids(const ModuleExpr& m) const;
};

struct Catalog {
  std::string schema;
  std::string hash;  // content hash of the source text
  std::vector<RingEntry> rings;

  const RingEntry& ring(const std::string& name) const;
};

std::string content_hash(std::string_view text);  // 64-bit FNV-1a, hex

// Parses and builds presentations; matrix-factorization identities and
// homogeneity are checked here. Quiver verification happens in the mesh module.
Catalog parse_catalog(const std::string& text);
Catalog load_catalog(const std::string& path);

std::string default_catalog_path();

}  // namespace degenlab
