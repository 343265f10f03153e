#include "vlat/algebra_rep.hpp"

#include <algorithm>

#include "vlat/certify.hpp"
#include "vlat/error.hpp"

namespace vlat {

namespace {

Vector basis_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

Vector bilinear(const std::vector<std::vector<Vector>>& structure, const Vector& x, const Vector& y) {
  const std::size_t n = x.size();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Scalar w = x[i] * y[j];
      const Vector& c = structure[i][j];
      for (std::size_t k = 0; k < n; ++k) out[k] += w * c[k];
    }
  }
  return out;
}

}  // namespace

LatticeAlgebra::LatticeAlgebra(LatticeSpace space, std::vector<std::vector<Vector>> structure,
                               std::optional<Vector> unit)
    : space_(std::move(space)), structure_(std::move(structure)), unit_(std::move(unit)) {
  const std::size_t n = space_.dim();
  if (structure_.size() != n) throw Error(ErrorCode::DimensionMismatch, "structure constants");
  for (const auto& row : structure_) {
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "structure constants");
    for (const auto& c : row)
      if (c.size() != n) throw Error(ErrorCode::DimensionMismatch, "structure constants");
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vector left = bilinear(structure_, structure_[i][j], basis_vector(n, k));
        const Vector right = bilinear(structure_, basis_vector(n, i), structure_[j][k]);
        if (left != right)
          throw Error(ErrorCode::NotAssociative, "basis triple (" + std::to_string(i + 1) + "," +
                                                     std::to_string(j + 1) + "," +
                                                     std::to_string(k + 1) + ")");
      }
    }
  }

  if (unit_) {
    if (unit_->size() != n) throw Error(ErrorCode::DimensionMismatch, "unit");
    for (std::size_t i = 0; i < n; ++i) {
      const Vector b = basis_vector(n, i);
      if (bilinear(structure_, *unit_, b) != b || bilinear(structure_, b, *unit_) != b)
        throw Error(ErrorCode::HypothesisViolated, "unit");
    }
  }
}

Vector LatticeAlgebra::multiply(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw Error(ErrorCode::DimensionMismatch);
  return bilinear(structure_, x, y);
}

std::vector<std::vector<Vector>> pointwise_structure(std::size_t n) {
  std::vector<std::vector<Vector>> s(n, std::vector<Vector>(n, Vector(n)));
  for (std::size_t i = 0; i < n; ++i) s[i][i][i] = 1;
  return s;
}

Vector multiply(const LatticeAlgebra& a, const Vector& x, const Vector& y) { return a.multiply(x, y); }

bool check_positive_multiplication(const LatticeAlgebra& a) {
  const auto& cone = a.space().cone();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!is_positive(a.space(), a.multiply(cone.generator(i), cone.generator(j)))) return false;
  return true;
}

namespace {

void require_beta(const Scalar& beta) {
  if (beta < -1 || beta > 0) throw Error(ErrorCode::BetaOutOfRange, format_scalar(beta));
}

}  // namespace

LatticeAlgebra wickstead_family(const Scalar& beta) {
  require_beta(beta);
  // Columns (1, beta) and (1, 1) generate {0 <= x, beta x <= y <= x}.
  const Matrix basis{{Scalar(1), Scalar(1)}, {beta, Scalar(1)}};
  LatticeSpace space = make_space(basis, "wickstead beta=" + format_scalar(beta));
  return LatticeAlgebra(std::move(space), pointwise_structure(2), Vector{Scalar(1), Scalar(1)});
}

Scalar family_alpha(const Scalar& beta) {
  require_beta(beta);
  return Scalar(beta / (beta - 1));
}

bool beta_is_permitted(const Scalar& beta) {
  if (is_zero(beta)) return true;
  // beta = -1/(n-1), n >= 2  <=>  beta = -1/q with q a positive integer.
  return sgn(beta) < 0 && beta.get_num() == -1;
}

std::string_view to_string(Classification c) noexcept {
  return c == Classification::NonRepresentable ? "NonRepresentable" : "Inconclusive";
}

PoisonVerdict poison_verdict(const LatticeAlgebra& a, const Vector& e, const Vector& p) {
  const LatticeSpace& space = a.space();
  if (e.size() != a.dim() || p.size() != a.dim()) throw Error(ErrorCode::DimensionMismatch);
  PoisonVerdict v;
  auto record = [&v](const char* name, bool holds) {
    v.hypothesis_log.emplace_back(name, holds);
    if (!holds) throw Error(ErrorCode::HypothesisViolated, name);
  };

  record("e>0", is_positive(space, e) && !is_zero(e));
  record("p>0", is_positive(space, p) && !is_zero(p));
  record("e^2=e", a.multiply(e, e) == e);
  record("p^2=p", a.multiply(p, p) == p);
  record("ep=p", a.multiply(e, p) == p);
  record("pe=p", a.multiply(p, e) == p);

  // The only candidate decomposition with x disjoint from e is the band one.
  v.band_part = band_project(space, e, p);
  v.disjoint_part = p - v.band_part;
  const auto pivot = std::find_if(e.begin(), e.end(), [](const Scalar& s) { return sgn(s) != 0; });
  v.alpha = v.band_part[static_cast<std::size_t>(pivot - e.begin())] / *pivot;
  record("scalar-multiple", v.alpha * e == v.band_part);
  record("alpha>=0", sgn(v.alpha) >= 0);
  record("x^e=0", is_zero(vec_inf(space, v.disjoint_part, e)));

  v.classification = (is_zero(v.alpha) || is_unit_fraction(v.alpha)) ? Classification::Inconclusive
                                                                      : Classification::NonRepresentable;
  return v;
}

DiagonalPart transported_diagonal(const RegularOperator& e, const RegularOperator& t,
                                  const Scalar& alpha) {
  const RegularOperator p = alpha * e + t;
  return diagonal_part(restrict_to_range(e, p));
}

}  // namespace vlat
