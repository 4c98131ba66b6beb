#include "degenlab/ring.hpp"

#include "degenlab/error.hpp"

#include <cctype>
#include <mutex>
#include <numeric>

namespace degenlab {

namespace {

void enumerate_monomials(std::span<const int> weights, std::size_t var, int remaining,
                         Exponent& current, std::vector<Exponent>& out) {
  if (var + 1 == weights.size()) {
    if (remaining % weights[var] == 0) {
      current[var] = remaining / weights[var];
      out.push_back(current);
      current[var] = 0;
    }
    return;
  }
  // Highest power of the earlier variable first: descending lex order.
  for (int k = remaining / weights[var]; k >= 0; --k) {
    current[var] = k;
    enumerate_monomials(weights, var + 1, remaining - k * weights[var], current, out);
  }
  current[var] = 0;
}

}  // namespace

RingSpec::RingSpec(std::string name, std::vector<std::string> variables, std::vector<int> weights,
                   Polynomial relation, int canonical_twist)
    : name_(std::move(name)),
      variables_(std::move(variables)),
      weights_(std::move(weights)),
      relation_(std::move(relation)),
      canonical_twist_(canonical_twist) {
  if (variables_.size() != weights_.size() || weights_.empty())
    throw Error(ErrorCode::kMalformed, "ring " + name_ + ": variables and weights disagree");
  for (int w : weights_) {
    if (w < 1) throw Error(ErrorCode::kMalformed, "ring " + name_ + ": weights must be >= 1");
    weight_lcm_ = std::lcm(weight_lcm_, w);
  }
  if (relation_.is_zero())
    throw Error(ErrorCode::kMalformed, "ring " + name_ + ": relation is zero");
  relation_ += Polynomial(Rational(0), weights_.size());  // fix arity
  const auto d = relation_.degree(weights_);
  if (!d || !relation_.is_homogeneous(weights_, *d))
    throw Error(ErrorCode::kMalformed, "ring " + name_ + ": relation is not homogeneous");
  relation_degree_ = *d;
  if (relation_degree_ < 1)
    throw Error(ErrorCode::kMalformed, "ring " + name_ + ": relation must have positive degree");
  const int expected = relation_degree_ - std::accumulate(weights_.begin(), weights_.end(), 0);
  if (canonical_twist_ != expected)
    throw Error(ErrorCode::kMalformed,
                "ring " + name_ + ": canonical twist " + std::to_string(canonical_twist_) +
                    " != relation degree - sum of weights = " + std::to_string(expected));
}

const MonomialBasis& RingSpec::monomials(int degree) const {
  {
    std::shared_lock lock(memo_mutex_);
    auto it = memo_.find(degree);
    if (it != memo_.end()) return *it->second;
  }
  auto basis = std::make_unique<MonomialBasis>();
  if (degree >= 0) {
    Exponent current(weights_.size(), 0);
    enumerate_monomials(weights_, 0, degree, current, basis->monomials);
    for (std::size_t i = 0; i < basis->monomials.size(); ++i)
      basis->index.emplace(basis->monomials[i], static_cast<int>(i));
  }
  std::unique_lock lock(memo_mutex_);
  auto [it, inserted] = memo_.emplace(degree, std::move(basis));
  return *it->second;
}

Polynomial RingSpec::parse_polynomial(std::string_view text) const { return degenlab::parse_polynomial(text, variables_); }

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables_) {
  const std::size_t nv = variables_.size();
  auto num_vars = [nv] { return nv; };
  // term := [coef] ['*'] factor ('*' factor)* ; factor := var ['^' int]
  Polynomial out(Rational(0), num_vars());
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::kParse,
                 "polynomial '" + std::string(text) + "' at " + std::to_string(pos) + ": " + why);
  };
  skip();
  if (pos == text.size()) throw fail("empty");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw fail("expected + or -");
    }
    first = false;
    Rational coef(1);
    bool have_factor = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
        ++pos;
      coef = parse_rational(text.substr(start, pos - start));
      have_factor = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
        have_factor = false;
      } else {
        out.add_term(Exponent(num_vars(), 0), coef * sign);
        continue;
      }
    }
    Exponent e(num_vars(), 0);
    while (true) {
      skip();
      std::size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      const std::string name(text.substr(start, pos - start));
      auto it = std::find(variables_.begin(), variables_.end(), name);
      if (it == variables_.end()) throw fail("unknown variable '" + name + "'");
      int power = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t s = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (s == pos) throw fail("expected exponent");
        power = std::stoi(std::string(text.substr(s, pos - s)));
      }
      e[static_cast<std::size_t>(it - variables_.begin())] += power;
      have_factor = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!have_factor) throw fail("dangling term");
    out.add_term(e, coef * sign);
  }
  return out;
}

}  // namespace degenlab
