#include "degenlab/presentation.hpp"

#include "degenlab/error.hpp"

#include <mutex>

namespace degenlab {

int GradedPiece::coordinate(int generator, const Exponent& m) const {
  const int p = monomials[static_cast<std::size_t>(generator)]->position(m);
  return p < 0 ? -1 : offsets[static_cast<std::size_t>(generator)] + p;
}

std::pair<int, Exponent> GradedPiece::label(int coordinate) const {
  for (std::size_t i = 0; i + 1 < offsets.size(); ++i) {
    if (coordinate < offsets[i + 1])
      return {static_cast<int>(i), monomials[i]->monomials[static_cast<std::size_t>(coordinate - offsets[i])]};
  }
  throw Error(ErrorCode::kInconsistent, "piece coordinate out of range");
}

RationalVector GradedPiece::normal_form(RationalVector ambient) const {
  reduce_against(image, ambient);
  RationalVector out(dimension());
  for (int k = 0; k < dimension(); ++k) out(k) = ambient(basis[static_cast<std::size_t>(k)]);
  return out;
}

struct Presentation::Memo {
  RingPtr ring;
  GradedMatrix phi;  // unshifted
  std::shared_mutex mutex;
  std::map<int, std::unique_ptr<GradedPiece>> pieces;

  std::unique_ptr<GradedPiece> compute(int d) const;
  const GradedPiece& get(int d) {
    {
      std::shared_lock lock(mutex);
      auto it = pieces.find(d);
      if (it != pieces.end()) return *it->second;
    }
    auto piece = compute(d);
    std::unique_lock lock(mutex);
    auto [it, inserted] = pieces.emplace(d, std::move(piece));
    return *it->second;
  }
};

std::unique_ptr<GradedPiece> Presentation::Memo::compute(int d) const {
  auto piece = std::make_unique<GradedPiece>();
  piece->degree = d;
  const auto n = static_cast<std::size_t>(phi.rows());
  piece->offsets.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    piece->monomials.push_back(&ring->monomials(d - phi.row_degrees[i]));
    piece->offsets[i + 1] = piece->offsets[i] + piece->monomials[i]->size();
  }
  const int ambient = piece->ambient_size();
  const std::size_t nv = ring->num_vars();

  std::vector<RationalVector> spanning;
  auto add_product = [&](RationalVector& v, std::size_t gen, const Polynomial& p, const Exponent& u) {
    for (const auto& [e, c] : p.terms()) {
      Exponent m(nv, 0);
      for (std::size_t k = 0; k < nv; ++k) m[k] = u[k] + (k < e.size() ? e[k] : 0);
      const int idx = piece->coordinate(static_cast<int>(gen), m);
      if (idx < 0) throw Error(ErrorCode::kMalformed, "presentation entry is not homogeneous");
      v(idx) += c;
    }
  };
  for (Eigen::Index j = 0; j < phi.cols(); ++j) {
    const int h = phi.col_degrees[static_cast<std::size_t>(j)];
    for (const Exponent& u : ring->monomials(d - h).monomials) {
      RationalVector v = RationalVector::Zero(ambient);
      for (std::size_t i = 0; i < n; ++i) {
        if (!phi.entries(static_cast<Eigen::Index>(i), j).is_zero())
          add_product(v, i, phi.entries(static_cast<Eigen::Index>(i), j), u);
      }
      spanning.push_back(std::move(v));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (const Exponent& u : ring->monomials(d - phi.row_degrees[i] - ring->relation_degree()).monomials) {
      RationalVector v = RationalVector::Zero(ambient);
      add_product(v, i, ring->relation(), u);
      spanning.push_back(std::move(v));
    }
  }
  RationalMatrix a(static_cast<Eigen::Index>(spanning.size()), ambient);
  for (std::size_t r = 0; r < spanning.size(); ++r) a.row(static_cast<Eigen::Index>(r)) = spanning[r].transpose();
  piece->image = reduced_row_echelon(a);
  piece->basis_pos.assign(static_cast<std::size_t>(ambient), -1);
  std::vector<bool> is_pivot(static_cast<std::size_t>(ambient), false);
  for (auto p : piece->image.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  for (int c = 0; c < ambient; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    piece->basis_pos[static_cast<std::size_t>(c)] = static_cast<int>(piece->basis.size());
    piece->basis.push_back(c);
  }
  return piece;
}

Presentation::Presentation(RingPtr ring, GradedMatrix phi, std::optional<GradedMatrix> psi)
    : ring_(std::move(ring)), phi_(std::move(phi)), psi_(std::move(psi)) {
  if (!ring_) throw Error(ErrorCode::kMalformed, "presentation without a ring");
  validate(phi_, *ring_, "presentation matrix");
  if (psi_) {
    validate(*psi_, *ring_, "matrix-factorization partner");
    std::vector<int> expected_cols = phi_.row_degrees;
    for (int& d : expected_cols) d += ring_->relation_degree();
    if (psi_->row_degrees != phi_.col_degrees || psi_->col_degrees != expected_cols)
      throw Error(ErrorCode::kMalformed, "matrix-factorization partner has inconsistent degrees");
    if (phi_.rows() != phi_.cols())
      throw Error(ErrorCode::kMalformed, "matrix factorization must be square");
    const GradedMatrix left = phi_ * *psi_;
    const GradedMatrix right = *psi_ * phi_;
    for (Eigen::Index i = 0; i < phi_.rows(); ++i) {
      for (Eigen::Index j = 0; j < phi_.rows(); ++j) {
        const Polynomial want = i == j ? ring_->relation() : Polynomial();
        if (!(left.entries(i, j) == want) || !(right.entries(i, j) == want))
          throw Error(ErrorCode::kMalformed,
                      "matrix factorization identity fails at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
      }
    }
  }
  memo_ = std::make_shared<Memo>();
  memo_->ring = ring_;
  memo_->phi = phi_;
}

Presentation::Presentation(RingPtr ring, GradedMatrix phi, std::optional<GradedMatrix> psi,
                           std::shared_ptr<Memo> memo, int offset)
    : ring_(std::move(ring)), phi_(std::move(phi)), psi_(std::move(psi)), memo_(std::move(memo)), offset_(offset) {}

Presentation Presentation::zero(RingPtr ring) {
  return Presentation(std::move(ring), GradedMatrix::zero({}, {}), GradedMatrix::zero({}, {}));
}

Presentation Presentation::free(RingPtr ring, int shift) {
  const int e = ring->relation_degree();
  PolynomialMatrix f(1, 1);
  f(0, 0) = ring->relation();
  PolynomialMatrix one(1, 1);
  one(0, 0) = Polynomial(Rational(1), ring->num_vars());
  GradedMatrix phi(f, {-shift}, {e - shift});
  GradedMatrix psi(one, {e - shift}, {e - shift});
  return Presentation(std::move(ring), std::move(phi), std::move(psi));
}

Presentation Presentation::shifted(int s) const {
  std::optional<GradedMatrix> psi;
  if (psi_) psi = psi_->shifted(s);
  return Presentation(ring_, phi_.shifted(s), std::move(psi), memo_, offset_ + s);
}

const GradedPiece& Presentation::piece(int d) const { return memo_->get(d + offset_); }

Presentation direct_sum(RingPtr ring, const std::vector<Presentation>& parts) {
  std::vector<GradedMatrix> phis, psis;
  bool all_cm = true;
  for (const auto& p : parts) {
    if (p.ring() != ring) throw Error(ErrorCode::kMixedRings, "direct sum over different rings");
    phis.push_back(p.phi());
    if (p.psi()) psis.push_back(*p.psi());
    else all_cm = false;
  }
  std::optional<GradedMatrix> psi;
  if (all_cm) psi = block_diagonal(psis);
  return Presentation(std::move(ring), block_diagonal(phis), std::move(psi));
}

Presentation direct_sum(const std::vector<Presentation>& parts) {
  if (parts.empty()) throw Error(ErrorCode::kMalformed, "empty direct sum needs an explicit ring");
  return direct_sum(parts.front().ring(), parts);
}

}  // namespace degenlab
