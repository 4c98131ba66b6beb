#include "degenlab/module_expr.hpp"

#include "degenlab/error.hpp"

#include <cctype>

namespace degenlab {

std::string to_string(const Vertex& v) { return v.id + "(" + std::to_string(v.shift) + ")"; }

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  Error fail(const std::string& why) const {
    return Error(ErrorCode::kParse, "module expression '" + std::string(text) + "' at position " +
                                        std::to_string(pos) + ": " + why);
  }
  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long integer(bool allow_sign) {
    skip();
    const std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (digits == pos) throw fail("expected an integer");
    if (pos - digits > 9) throw fail("integer too large");
    return std::stol(std::string(text.substr(start, pos - start)));
  }
  std::vector<Vertex> sum() {
    std::vector<Vertex> out;
    skip();
    if (pos < text.size() && text[pos] == '0') {
      const std::size_t save = pos++;
      skip();
      if (pos == text.size()) return out;
      pos = save;
    }
    while (true) {
      skip();
      const std::size_t start = pos;
      if (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
          ++pos;
      }
      if (start == pos) throw fail("expected a module id");
      Vertex v{std::string(text.substr(start, pos - start)), 0};
      if (eat('(')) {
        v.shift = static_cast<int>(integer(true));
        if (!eat(')')) throw fail("expected ')'");
      }
      long mult = 1;
      if (eat('^')) {
        mult = integer(false);
        if (mult < 1) throw fail("multiplicity must be positive");
      }
      for (long k = 0; k < mult; ++k) out.push_back(v);
      skip();
      if (pos == text.size()) break;
      if (!eat('+')) throw fail("expected '+'");
    }
    return out;
  }
};

}  // namespace

std::vector<Vertex> ModuleExpr::parse_ordered(std::string_view text) { return Parser{text}.sum(); }

ModuleExpr ModuleExpr::parse(std::string_view text) {
  ModuleExpr out;
  for (const Vertex& v : parse_ordered(text)) out.add(v);
  return out;
}

int ModuleExpr::multiplicity(const Vertex& v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? 0 : it->second;
}

int ModuleExpr::total() const {
  int n = 0;
  for (const auto& [v, m] : terms_) n += m;
  return n;
}

void ModuleExpr::add(const Vertex& v, int multiplicity) {
  if (multiplicity < 0) throw Error(ErrorCode::kPrecondition, "negative multiplicity for " + degenlab::to_string(v));
  if (multiplicity > 0) terms_[v] += multiplicity;
}

bool ModuleExpr::contains(const ModuleExpr& other) const {
  for (const auto& [v, m] : other.terms_)
    if (multiplicity(v) < m) return false;
  return true;
}

void ModuleExpr::subtract(const ModuleExpr& other) {
  if (!contains(other))
    throw Error(ErrorCode::kPrecondition, other.to_string() + " is not a summand of " + to_string());
  for (const auto& [v, m] : other.terms_) {
    auto it = terms_.find(v);
    if ((it->second -= m) == 0) terms_.erase(it);
  }
}

ModuleExpr ModuleExpr::shifted(int s) const {
  ModuleExpr out;
  for (const auto& [v, m] : terms_) out.terms_.emplace(v.shifted(s), m);
  return out;
}

ModuleExpr ModuleExpr::scaled(int k) const {
  ModuleExpr out;
  if (k <= 0) return out;
  for (const auto& [v, m] : terms_) out.terms_.emplace(v, m * k);
  return out;
}

ModuleExpr ModuleExpr::common(const ModuleExpr& other) const {
  ModuleExpr out;
  for (const auto& [v, m] : terms_) out.add(v, std::min(m, other.multiplicity(v)));
  return out;
}

ModuleExpr& ModuleExpr::operator+=(const ModuleExpr& other) {
  for (const auto& [v, m] : other.terms_) terms_[v] += m;
  return *this;
}

std::string ModuleExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [v, m] : terms_) {
    if (!out.empty()) out += " + ";
    out += degenlab::to_string(v);
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

}  // namespace degenlab
