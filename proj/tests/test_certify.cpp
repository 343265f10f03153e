#include "doctest.h"

#include "support.hpp"
#include "vlat/certify.hpp"
#include "vlat/error.hpp"
#include "vlat/projection_lab.hpp"

using namespace vlat;
using vlat::testing::frac;

namespace {

RegularOperator std_op(std::initializer_list<std::initializer_list<Scalar>> rows) {
  return RegularOperator::standard(Matrix(rows));
}

std::string hypothesis_failure(const RegularOperator& e, const RegularOperator& t) {
  try {
    transfer_check(e, t);
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::HypothesisViolated);
    return err.detail();
  }
  return "none";
}

PoisonedPair four_dim_pair() {
  return poisoned_pair_with_weights(4, parse_partition("1,2;3,4"), {{0, 1, Scalar(1)}});
}

Scalar larger(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

// Sup inside Y computed from coordinates in a lattice basis of Y: an oracle
// that never looks at E(y1 v y2).
Vector sup_in_range_by_basis(const std::vector<Vector>& basis, const Vector& y1, const Vector& y2) {
  const auto a = solve_combination(basis, y1);
  const auto b = solve_combination(basis, y2);
  REQUIRE(a);
  REQUIRE(b);
  Vector out(y1.size());
  for (std::size_t k = 0; k < basis.size(); ++k) out = out + larger((*a)[k], (*b)[k]) * basis[k];
  return out;
}

}  // namespace

TEST_CASE("certify_meet examples") {
  const RegularOperator s = std_op({{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}});
  const RegularOperator t = std_op({{Scalar(4), Scalar(3)}, {Scalar(2), Scalar(1)}});
  const Vector x{Scalar(1), Scalar(1)};
  const CertifiedVector cv = certify_meet(s, t, x);
  CHECK(cv.value == Vector{Scalar(3), Scalar(3)});
  CHECK(cv.value == op_meet(s, t).apply(x));
  CHECK(cv.certificate.holds);
  CHECK(cv.certificate.recheck());
  CHECK(cv.certificate.claim == "riesz-kantorovich-infimum");

  CHECK(certify_meet(s, s, x).value == s.apply(x));

  const PoisonedPair pp = four_dim_pair();
  const Vector y{Scalar(1), Scalar(2), Scalar(3), frac(1, 2)};
  CHECK(is_zero(certify_meet(pp.e, pp.t, y).value));

  const RegularOperator neg = std_op({{Scalar(1), Scalar(-1)}, {Scalar(0), Scalar(1)}});
  CHECK_THROWS_AS(certify_meet(neg, s, x), Error);
}

TEST_CASE("certify_meet equals the closed-form meet on random pairs") {
  SplitMix64 rng(401);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    const LatticeSpace space = testing::random_space(rng, n);
    const RegularOperator s = testing::random_positive_operator(rng, space);
    const RegularOperator t = testing::random_positive_operator(rng, space);
    const Vector x = testing::random_positive_vector(rng, space);
    const CertifiedVector cv = certify_meet(s, t, x);
    CHECK(cv.certificate.holds);
    CHECK(cv.value == op_meet(s, t).apply(x));
  }
}

TEST_CASE("tampered certificates fail the recheck") {
  const CertifiedSublattice whole(identity_operator(LatticeSpace::standard(2)));
  CertifiedVector cv = range_sup(whole, Vector{Scalar(1), Scalar(0)}, Vector{Scalar(0), Scalar(1)});
  REQUIRE(cv.certificate.holds);
  REQUIRE(!cv.certificate.witnesses.empty());
  cv.certificate.witnesses.front().value = cv.certificate.witnesses.front().bound == WitnessBound::AtLeastZero
                                               ? Scalar(-1)
                                               : Scalar(1);
  CHECK_FALSE(cv.certificate.recheck());
}

TEST_CASE("range_sup examples") {
  const CertifiedSublattice blocks(block_projection(4, parse_partition("1,2;3,4")));
  const auto a = range_sup(blocks, Vector{Scalar(1), Scalar(1), Scalar(0), Scalar(0)},
                           Vector{Scalar(0), Scalar(0), Scalar(1), Scalar(1)});
  CHECK(a.value == Vector(4, Scalar(1)));
  CHECK(a.certificate.holds);
  CHECK(a.certificate.claim == "range-least-upper-bound");

  const auto b = range_sup(blocks, Vector{Scalar(2), Scalar(2), Scalar(0), Scalar(0)}, Vector(4, Scalar(1)));
  CHECK(b.value == Vector{Scalar(2), Scalar(2), Scalar(1), Scalar(1)});
  CHECK(b.certificate.holds);

  const CertifiedSublattice line(block_projection(3, parse_partition("1,2,3")));
  const auto c = range_sup(line, Vector(3, Scalar(1)), Vector(3, Scalar(-1)));
  CHECK(c.value == Vector(3, Scalar(1)));
  CHECK(c.certificate.holds);
  CHECK(range_lattice_basis(line.projector()).size() == 1);

  try {
    range_sup(blocks, Vector{Scalar(1), Scalar(0), Scalar(0), Scalar(0)}, Vector(4, Scalar(1)));
    FAIL("vector outside the range accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInRange);
  }
}

TEST_CASE("range_sup is commutative, associative and matches the lattice-basis oracle") {
  SplitMix64 rng(402);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng.below(4);
    const Family f = rng.below(2) == 0 ? Family::ConjugatedBlock : Family::RankOne;
    const RegularOperator e = random_instance(rng.below(3) == 0 ? f : Family::Block, n, rng.next());
    const CertifiedSublattice sub(e);
    const auto basis = range_lattice_basis(e);
    CHECK(basis.size() == rank(e.matrix()));
    auto in_range = [&] { return e.apply(testing::random_coords(rng, n)); };
    const Vector y1 = in_range();
    const Vector y2 = in_range();
    const Vector y3 = in_range();
    const CertifiedVector s12 = range_sup(sub, y1, y2);
    CHECK(s12.certificate.holds);
    CHECK(s12.value == range_sup(sub, y2, y1).value);
    CHECK(s12.value == sup_in_range_by_basis(basis, y1, y2));
    const Vector left = range_sup(sub, s12.value, y3).value;
    const Vector right = range_sup(sub, y1, range_sup(sub, y2, y3).value).value;
    CHECK(left == right);
  }
}

TEST_CASE("range_sup equals vec_sup for band projections") {
  SplitMix64 rng(403);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    const LatticeSpace space = testing::random_space(rng, n);
    Vector mask(n);
    for (auto& m : mask) m = Scalar(static_cast<long>(rng.below(2)));
    const RegularOperator band = central_operator(space, mask);
    const CertifiedSublattice sub(band);
    const Vector y1 = band.apply(from_coords(space, testing::random_coords(rng, n)));
    const Vector y2 = band.apply(from_coords(space, testing::random_coords(rng, n)));
    const CertifiedVector s = range_sup(sub, y1, y2);
    CHECK(s.certificate.holds);
    CHECK(s.value == vec_sup(space, y1, y2));
  }
}

TEST_CASE("CertifiedSublattice rejects non-projections") {
  try {
    CertifiedSublattice bad(std_op({{Scalar(1), Scalar(1)}, {Scalar(0), Scalar(1)}}));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIdempotent);
  }
  try {
    CertifiedSublattice bad(std_op({{Scalar(1), Scalar(-1)}, {Scalar(0), Scalar(0)}}));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositive);
  }
}

TEST_CASE("transfer_check examples") {
  const PoisonedPair pp = four_dim_pair();
  CHECK(pp.t.matrix()(0, 2) == frac(1, 2));
  CHECK(pp.t.matrix()(1, 3) == frac(1, 2));
  CHECK(pp.t.matrix()(2, 0) == 0);
  const Certificate cert = transfer_check(pp.e, pp.t);
  CHECK(cert.holds);
  CHECK(cert.recheck());
  CHECK(cert.claim == "disjointness-transfer");
  CHECK_FALSE(cert.witnesses.empty());

  CHECK(transfer_check(pp.e, zero_operator(pp.e.space())).holds);
}

TEST_CASE("transfer_check names the failed hypothesis") {
  const PoisonedPair pp = four_dim_pair();
  CHECK(hypothesis_failure(pp.e, pp.e) == "meet");

  // Rows constant on blocks (so ET = T) but columns are not averaged.
  Matrix skew(4, 4);
  skew(0, 2) = 1;
  skew(1, 2) = 1;
  CHECK(hypothesis_failure(pp.e, RegularOperator::standard(skew)) == "TE=T");
  CHECK(hypothesis_failure(pp.e, RegularOperator::standard(skew.transpose())) == "ET=T");

  CHECK(hypothesis_failure(pp.e, pp.t + frac(1, 2) * pp.e) == "meet");

  const RegularOperator not_idem = std_op({{Scalar(1), Scalar(1)}, {Scalar(0), Scalar(1)}});
  CHECK(hypothesis_failure(not_idem, zero_operator(not_idem.space())) == "idempotent");
  CHECK(hypothesis_failure(pp.e, Scalar(-1) * pp.t) == "positive");
}

TEST_CASE("transfer holds on generated poisoned pairs") {
  SplitMix64 rng(404);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = std::vector<std::size_t>{4, 6, 8, 9}[rng.below(4)];
    Partition blocks = testing::random_equal_partition(rng, n);
    if (blocks.blocks.size() < 2) continue;
    const PoisonedPair pp = poisoned_pair(n, blocks, rng.next());
    CHECK(compose(pp.e, pp.t) == pp.t);
    CHECK(compose(pp.t, pp.e) == pp.t);
    CHECK(op_meet(pp.e, pp.t).matrix().is_zero());
    CHECK(transfer_check(pp.e, pp.t).holds);
  }
}

TEST_CASE("rank-one averaging projector has a one-dimensional range") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const RegularOperator e = block_projection(n, Partition{{[n] {
      std::vector<std::size_t> all(n);
      for (std::size_t i = 0; i < n; ++i) all[i] = i;
      return all;
    }()}});
    CHECK(range_lattice_basis(e).size() == 1);
    CHECK(positive_spanning_set(e).size() == 1);
    CHECK(transfer_check(e, zero_operator(e.space())).holds);
  }
}
