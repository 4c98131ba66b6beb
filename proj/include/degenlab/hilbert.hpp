#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace degenlab {

struct Window {
  int lo = 0;
  int hi = -1;

  bool empty() const { return hi < lo; }
  bool contains(int d) const { return lo <= d && d <= hi; }
  int size() const { return empty() ? 0 : hi - lo + 1; }
  friend bool operator==(const Window&, const Window&) = default;
};

// Parses "LO..HI".
Window parse_window(const std::string& text);
std::string to_string(const Window& w);

// Generating function numerator(t) / prod_i (1 - t^{w_i}). With a fixed
// denominator the numerator determines the series, so equality of Hilbert
// series is equality of numerators.
class RationalForm {
 public:
  RationalForm() = default;
  explicit RationalForm(std::vector<int> denominator_weights) : weights_(std::move(denominator_weights)) {}
  RationalForm(std::map<int, long long> numerator, std::vector<int> denominator_weights);

  const std::map<int, long long>& numerator() const { return numerator_; }
  const std::vector<int>& denominator_weights() const { return weights_; }
  bool is_zero() const { return numerator_.empty(); }

  void add_monomial(int exponent, long long coefficient);
  // Series coefficient of t^d.
  long long coefficient(int d) const;
  std::vector<long long> expand(const Window& w) const;
  // Lowest exponent with nonzero numerator coefficient; for a difference of
  // two series this is the first degree where they disagree.
  std::optional<int> lowest_exponent() const;

  // Series of M(s): t^{-s} times the series of M.
  RationalForm shifted(int s) const;
  RationalForm& operator+=(const RationalForm& other);
  RationalForm& operator-=(const RationalForm& other);
  friend RationalForm operator+(RationalForm a, const RationalForm& b) { return a += b; }
  friend RationalForm operator-(RationalForm a, const RationalForm& b) { return a -= b; }
  RationalForm scaled(long long k) const;
  friend bool operator==(const RationalForm& a, const RationalForm& b) {
    return a.numerator_ == b.numerator_ && a.weights_ == b.weights_;
  }

  std::string to_string() const;

 private:
  std::map<int, long long> numerator_;
  std::vector<int> weights_;
};

struct HilbertSeries {
  Window window;
  std::vector<long long> values;  // values[d - window.lo] = dim M_d
  std::optional<RationalForm> rational_form;

  long long at(int d) const { return window.contains(d) ? values[static_cast<std::size_t>(d - window.lo)] : 0; }
};

}  // namespace degenlab
