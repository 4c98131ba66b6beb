#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace degenlab {

// Indecomposable id at a shift: X(s).
struct Vertex {
  std::string id;
  int shift = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
  Vertex shifted(int s) const { return {id, shift + s}; }
};
std::string to_string(const Vertex& v);

// Finite multiset of shifted indecomposables, kept in canonical (id, shift) order.
class ModuleExpr {
 public:
  using Terms = std::map<Vertex, int>;

  ModuleExpr() = default;
  explicit ModuleExpr(const Vertex& v, int multiplicity = 1) { add(v, multiplicity); }

  // SUM := TERM ('+' TERM)* ; TERM := ID ('(' INT ')')? ('^' POSINT)? ; "0" is the zero module.
  // Errors carry the character position.
  static ModuleExpr parse(std::string_view text);
  // Terms in the order written, multiplicities expanded (used where generator order matters).
  static std::vector<Vertex> parse_ordered(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int multiplicity(const Vertex& v) const;
  int total() const;  // number of indecomposable summands with multiplicity

  void add(const Vertex& v, int multiplicity = 1);
  // Removes `other`; throws Error{kPrecondition} if it is not a sub-multiset.
  void subtract(const ModuleExpr& other);
  bool contains(const ModuleExpr& other) const;
  ModuleExpr shifted(int s) const;
  ModuleExpr scaled(int k) const;
  ModuleExpr common(const ModuleExpr& other) const;  // multiset intersection

  ModuleExpr& operator+=(const ModuleExpr& other);
  friend ModuleExpr operator+(ModuleExpr a, const ModuleExpr& b) { return a += b; }
  friend ModuleExpr operator-(ModuleExpr a, const ModuleExpr& b) {
    a.subtract(b);
    return a;
  }
  friend bool operator==(const ModuleExpr&, const ModuleExpr&) = default;
  friend auto operator<=>(const ModuleExpr& a, const ModuleExpr& b) { return a.terms_ <=> b.terms_; }

  // Canonical text, e.g. "L1(-1) + Rfree(0)^2"; the zero module is "0".
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace degenlab
