#include "degenlab/catalog.hpp"

#include "degenlab/error.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#ifndef DEGENLAB_DEFAULT_CATALOG
#define DEGENLAB_DEFAULT_CATALOG "catalogs/standard.json"
#endif

namespace degenlab {

using nlohmann::json;

namespace {

constexpr const char* kSchema = "degenlab-catalog/1";

Error data_error(const std::string& where, const std::string& why) {
  return Error(ErrorCode::kData, where + ": " + why);
}

Polynomial read_polynomial(const json& j, std::size_t nv, const std::string& where) {
  if (!j.is_array()) throw data_error(where, "polynomial must be a list of [coefficient, exponents]");
  Polynomial p(Rational(0), nv);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_string() || !term[1].is_array())
      throw data_error(where, "bad polynomial term");
    Exponent e = term[1].get<Exponent>();
    if (e.size() != nv) throw data_error(where, "exponent vector has the wrong length");
    p.add_term(e, parse_rational(term[0].get<std::string>()));
  }
  return p;
}

PolynomialMatrix read_matrix(const json& j, std::size_t nv, const std::string& where) {
  if (!j.is_array()) throw data_error(where, "matrix must be a list of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j[0].size());
  PolynomialMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j[r].size()) != cols) throw data_error(where, "ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = read_polynomial(j[r][c], nv, where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

UnivariatePolynomial read_univariate(const json& j, const std::string& where) {
  UnivariatePolynomial u;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw data_error(where, "bad parametrization term");
    u[term[1].get<int>()] += parse_rational(term[0].get<std::string>());
  }
  return u;
}

RingEntry read_ring(const json& j) {
  RingEntry entry;
  const std::string name = j.at("name").get<std::string>();
  std::vector<std::string> vars;
  std::vector<int> weights;
  for (const auto& v : j.at("variables")) {
    vars.push_back(v.at("name").get<std::string>());
    weights.push_back(v.at("weight").get<int>());
  }
  const std::size_t nv = vars.size();
  const Polynomial f = read_polynomial(j.at("relation"), nv, name + ".relation");
  entry.ring = std::make_shared<RingSpec>(name, vars, weights, f, j.at("canonical_twist").get<int>());

  const auto& flags = j.at("flags");
  entry.flags.gorenstein = flags.at("gorenstein").get<bool>();
  entry.flags.isolated = flags.at("isolated").get<bool>();
  entry.flags.finite_type = flags.at("finite_type").get<bool>();
  if (flags.contains("representation_directed"))
    entry.flags.representation_directed = flags.at("representation_directed").get<bool>();

  for (const auto& p : j.value("minimal_primes", json::array())) {
    MinimalPrime prime;
    prime.id = p.at("id").get<std::string>();
    const std::string where = name + ".minimal_primes." + prime.id;
    for (const auto& g : p.at("generators")) prime.generators.push_back(read_polynomial(g, nv, where));
    for (const auto& u : p.at("parametrization")) prime.parametrization.push_back(read_univariate(u, where));
    if (prime.parametrization.size() != nv) throw data_error(where, "parametrization needs one entry per variable");
    for (const auto& g : prime.generators) {
      std::vector<Rational> pt;
      // The parametrization must kill the generators and the relation identically.
      for (int s = 1; s <= 3; ++s) {
        pt.clear();
        for (const auto& u : prime.parametrization) pt.push_back(evaluate(u, Rational(s)));
        if (g.evaluate(pt) != 0 || f.evaluate(pt) != 0)
          throw data_error(where, "parametrization does not lie on the prime");
      }
    }
    entry.primes.push_back(std::move(prime));
  }

  std::set<std::string> ids;
  for (const auto& m : j.at("modules")) {
    const std::string id = m.at("id").get<std::string>();
    const std::string where = name + ".modules." + id;
    if (!ids.insert(id).second) throw data_error(where, "duplicate module id");
    GradedMatrix phi(read_matrix(m.at("phi"), nv, where + ".phi"), m.at("row_degrees").get<std::vector<int>>(),
                     m.at("col_degrees").get<std::vector<int>>());
    std::optional<GradedMatrix> psi;
    if (m.contains("psi")) {
      std::vector<int> cols = phi.row_degrees;
      for (int& d : cols) d += entry.ring->relation_degree();
      psi = GradedMatrix(read_matrix(m.at("psi"), nv, where + ".psi"), phi.col_degrees, cols);
    }
    try {
      entry.modules.push_back({id, m.value("free", false), Presentation(entry.ring, std::move(phi), std::move(psi))});
    } catch (const Error& e) {
      throw data_error(where, e.what());
    }
  }

  if (j.contains("quiver")) {
    QuiverEntry q;
    const auto& jq = j.at("quiver");
    for (const auto& a : jq.at("arrows")) q.arrows.push_back({a.at(0).get<std::string>(), a.at(1).get<std::string>(), a.at(2).get<int>()});
    for (const auto& t : jq.at("tau"))
      q.tau[t.at("vertex").get<std::string>()] = Vertex{t.at("image").get<std::string>(), t.at("shift").get<int>()};
    for (const auto& s : jq.at("ar_sequences")) {
      ArSequenceEntry seq;
      seq.end = s.at("end").get<std::string>();
      const std::string where = name + ".ar_sequences." + seq.end;
      seq.middle_text = s.at("middle").get<std::string>();
      try {
        seq.middle_order = ModuleExpr::parse_ordered(seq.middle_text);
      } catch (const Error& e) {
        throw data_error(where, e.what());
      }
      seq.into_middle = read_matrix(s.at("into_middle"), nv, where + ".into_middle");
      seq.onto_end = read_matrix(s.at("onto_end"), nv, where + ".onto_end");
      q.sequences.push_back(std::move(seq));
    }
    entry.quiver = std::move(q);
  }
  entry.notes = j.value("notes", "");
  return entry;
}

}  // namespace

const ModuleEntry& RingEntry::module(const std::string& id) const {
  for (const auto& m : modules)
    if (m.id == id) return m;
  throw Error(ErrorCode::kParse, "unknown module id '" + id + "' in ring " + ring->name());
}

bool RingEntry::has_module(const std::string& id) const {
  for (const auto& m : modules)
    if (m.id == id) return true;
  return false;
}

Presentation RingEntry::presentation(const Vertex& v) const { return module(v.id).presentation.shifted(v.shift); }

Presentation RingEntry::presentation(const std::vector<Vertex>& parts) const {
  if (parts.size() == 1) return presentation(parts.front());
  std::vector<Presentation> ps;
  for (const auto& v : parts) ps.push_back(presentation(v));
  return direct_sum(ring, ps);
}

std::vector<Vertex> RingEntry::expand(const ModuleExpr& m) const {
  std::vector<Vertex> out;
  for (const auto& [v, k] : m.terms())
    for (int i = 0; i < k; ++i) out.push_back(v);
  return out;
}

Presentation RingEntry::presentation(const ModuleExpr& m) const { return presentation(expand(m)); }

void RingEntry::check_ids(const ModuleExpr& m) const {
  std::vector<std::string> unknown;
  for (const auto& [v, k] : m.terms())
    if (!has_module(v.id)) unknown.push_back(v.id);
  if (!unknown.empty()) {
    std::string list;
    for (const auto& u : unknown) list += (list.empty() ? "" : ", ") + u;
    throw Error(ErrorCode::kParse, "unknown module ids in ring " + ring->name() + ": " + list, unknown);
  }
}

const RingEntry& Catalog::ring(const std::string& name) const {
  for (const auto& r : rings)
    if (r.ring->name() == name) return r;
  std::string known;
  for (const auto& r : rings) known += (known.empty() ? "" : ", ") + r.ring->name();
  throw Error(ErrorCode::kParse, "unknown ring '" + name + "' (catalog has: " + known + ")");
}

std::string content_hash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Catalog parse_catalog(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("catalog is not valid JSON: ") + e.what());
  }
  Catalog cat;
  cat.hash = content_hash(text);
  try {
    cat.schema = j.at("schema").get<std::string>();
    if (cat.schema != kSchema) throw Error(ErrorCode::kData, "unsupported catalog schema '" + cat.schema + "'");
    std::set<std::string> names;
    for (const auto& r : j.at("rings")) {
      cat.rings.push_back(read_ring(r));
      if (!names.insert(cat.rings.back().ring->name()).second)
        throw Error(ErrorCode::kData, "duplicate ring " + cat.rings.back().ring->name());
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kData, std::string("catalog field error: ") + e.what());
  }
  return cat;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read catalog " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

std::string default_catalog_path() {
  if (const char* env = std::getenv("DEGENLAB_CATALOG")) return env;
  return DEGENLAB_DEFAULT_CATALOG;
}

}  // namespace degenlab
