#include "degenlab/hilbert.hpp"

#include "degenlab/error.hpp"

#include <sstream>

namespace degenlab {

Window parse_window(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Error(ErrorCode::kParse, "window '" + text + "' is not LO..HI");
  try {
    return Window{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParse, "window '" + text + "' is not LO..HI");
  }
}

std::string to_string(const Window& w) { return std::to_string(w.lo) + ".." + std::to_string(w.hi); }

RationalForm::RationalForm(std::map<int, long long> numerator, std::vector<int> denominator_weights)
    : weights_(std::move(denominator_weights)) {
  for (auto [k, c] : numerator) add_monomial(k, c);
}

void RationalForm::add_monomial(int exponent, long long coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = numerator_.emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) numerator_.erase(it);
  }
}

namespace {

// Number of monomials of weighted degree m in variables with the given weights.
long long monomial_count(const std::vector<int>& weights, int m) {
  if (m < 0) return 0;
  std::vector<long long> ways(static_cast<std::size_t>(m) + 1, 0);
  ways[0] = 1;
  for (int w : weights)
    for (int d = w; d <= m; ++d) ways[static_cast<std::size_t>(d)] += ways[static_cast<std::size_t>(d - w)];
  return ways[static_cast<std::size_t>(m)];
}

}  // namespace

long long RationalForm::coefficient(int d) const {
  long long total = 0;
  for (auto [k, c] : numerator_) total += c * monomial_count(weights_, d - k);
  return total;
}

std::vector<long long> RationalForm::expand(const Window& w) const {
  std::vector<long long> out;
  for (int d = w.lo; d <= w.hi; ++d) out.push_back(coefficient(d));
  return out;
}

std::optional<int> RationalForm::lowest_exponent() const {
  if (numerator_.empty()) return std::nullopt;
  return numerator_.begin()->first;
}

RationalForm RationalForm::shifted(int s) const {
  RationalForm out(weights_);
  for (auto [k, c] : numerator_) out.numerator_.emplace(k - s, c);
  return out;
}

RationalForm& RationalForm::operator+=(const RationalForm& other) {
  if (weights_.empty()) weights_ = other.weights_;
  if (!other.numerator_.empty() && other.weights_ != weights_)
    throw Error(ErrorCode::kMixedRings, "Hilbert series over different denominators");
  for (auto [k, c] : other.numerator_) add_monomial(k, c);
  return *this;
}

RationalForm& RationalForm::operator-=(const RationalForm& other) {
  if (weights_.empty()) weights_ = other.weights_;
  if (!other.numerator_.empty() && other.weights_ != weights_)
    throw Error(ErrorCode::kMixedRings, "Hilbert series over different denominators");
  for (auto [k, c] : other.numerator_) add_monomial(k, -c);
  return *this;
}

RationalForm RationalForm::scaled(long long k) const {
  RationalForm out(weights_);
  if (k == 0) return out;
  for (auto [e, c] : numerator_) out.numerator_.emplace(e, c * k);
  return out;
}

std::string RationalForm::to_string() const {
  std::ostringstream out;
  out << "(";
  if (numerator_.empty()) out << "0";
  bool first = true;
  for (auto [k, c] : numerator_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const long long mag = c < 0 ? -c : c;
    if (k == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "t^" << k;
    }
  }
  out << ")/(";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out << "*";
    out << "(1-t^" << weights_[i] << ")";
  }
  out << ")";
  return out.str();
}

}  // namespace degenlab
