#pragma once

#include "degenlab/polynomial.hpp"

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

namespace degenlab {

// Monomials of one weighted degree, in descending lexicographic order.
struct MonomialBasis {
  std::vector<Exponent> monomials;
  std::map<Exponent, int> index;

  int size() const { return static_cast<int>(monomials.size()); }
  int position(const Exponent& e) const {
    auto it = index.find(e);
    return it == index.end() ? -1 : it->second;
  }
};

// Weighted polynomial ring over the rationals modulo one homogeneous relation.
// Immutable after construction; the monomial-basis memo is safe for
// concurrent readers.
class RingSpec {
 public:
  RingSpec(std::string name, std::vector<std::string> variables, std::vector<int> weights,
           Polynomial relation, int canonical_twist);

  RingSpec(const RingSpec&) = delete;
  RingSpec& operator=(const RingSpec&) = delete;

  const std::string& name() const { return name_; }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<int>& weights() const { return weights_; }
  std::size_t num_vars() const { return weights_.size(); }
  const Polynomial& relation() const { return relation_; }
  int relation_degree() const { return relation_degree_; }
  int canonical_twist() const { return canonical_twist_; }
  int krull_dimension() const { return static_cast<int>(weights_.size()) - 1; }
  int weight_lcm() const { return weight_lcm_; }

  // Monomials of weighted degree d of the ambient polynomial ring (empty for d < 0).
  const MonomialBasis& monomials(int degree) const;

  // Parses "x^2*y - 3/2*y^3"-style text using this ring's variable names.
  Polynomial parse_polynomial(std::string_view text) const;
  std::string format(const Polynomial& p) const { return p.to_string(variables_); }

 private:
  std::string name_;
  std::vector<std::string> variables_;
  std::vector<int> weights_;
  Polynomial relation_;
  int relation_degree_ = 0;
  int canonical_twist_ = 0;
  int weight_lcm_ = 1;

  mutable std::shared_mutex memo_mutex_;
  mutable std::map<int, std::unique_ptr<MonomialBasis>> memo_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

}  // namespace degenlab
