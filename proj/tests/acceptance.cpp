// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check recomputes its expected values independently of the
// code under test where an independent route exists.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "vlat/algebra_rep.hpp"
#include "vlat/certify.hpp"
#include "vlat/error.hpp"
#include "vlat/projection_lab.hpp"

using namespace vlat;
using vlat::testing::frac;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int id, const char* title, double time_limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (time_limit_s > 0 && secs > time_limit_s) {
    out.pass = false;
    std::ostringstream msg;
    msg << "runtime " << secs << " s exceeds " << time_limit_s << " s";
    out.failures.push_back(msg.str());
  }
  std::printf("criterion %d %s %s: %s (%.2f s)\n", id, out.pass ? "PASS" : "FAIL", title, out.detail.c_str(), secs);
  for (const auto& f : out.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
  return out.pass;
}

Matrix square(const Matrix& m) { return m * m; }

bool in_law(const Scalar& alpha) { return is_zero(alpha) || is_unit_fraction(alpha); }

// 1. Two-by-two positive idempotents with both diagonal entries alpha.
//    P = [[a, b], [c, a]]; P^2 = P reads
//      a^2 + bc = a,   b(2a - 1) = 0,   c(2a - 1) = 0.
Outcome exhaustive_two_by_two() {
  Outcome out;
  // Symbolic case split. Case 2a - 1 = 0: a = 1/2 and bc = a - a^2 = 1/4.
  // Case 2a - 1 != 0: b = c = 0 and a^2 = a, whose rational roots divide the
  // constant term 0 and leading coefficient 1: a in {0, 1}.
  std::set<Scalar> alphas;
  const Scalar a_half = frac(1, 2);
  alphas.insert(a_half);
  for (const Scalar& r : {Scalar(0), Scalar(1)})
    if (r * r == r) alphas.insert(r);
  out.require(alphas == std::set<Scalar>{Scalar(0), a_half, Scalar(1)}, "oracle alpha set");

  std::vector<Matrix> solutions;
  solutions.push_back(Matrix(2, 2));
  solutions.push_back(Matrix::identity(2));
  for (const Scalar& b : {frac(1, 4), frac(1, 2), Scalar(1), Scalar(2)}) {
    const Scalar c = (a_half - a_half * a_half) / b;
    solutions.push_back(Matrix{{a_half, b}, {c, a_half}});
  }
  for (const Matrix& m : solutions) {
    const ProjectionReport r = analyze(RegularOperator::standard(m));
    out.require(square(m) == m, "oracle solution is idempotent");
    out.require(r.is_positive && r.is_idempotent && r.alpha && r.alpha == m(0, 0) && r.violations.empty(),
                "analyze disagrees on an oracle solution");
  }

  // Grid cross-check: idempotent exactly at oracle solutions.
  std::vector<Scalar> entries{Scalar(0), frac(1, 8), frac(1, 4), frac(1, 2), Scalar(1), Scalar(2)};
  std::size_t grid = 0;
  for (int k = 0; k <= 12; ++k) {
    const Scalar a = frac(k, 12);
    for (const auto& b : entries)
      for (const auto& c : entries) {
        const Matrix m{{a, b}, {c, a}};
        const bool predicted = (a == a_half && b * c == frac(1, 4)) ||
                               ((a == 0 || a == 1) && is_zero(b) && is_zero(c));
        out.require((square(m) == m) == predicted, "grid point disagrees with the case split");
        const ProjectionReport r = analyze(RegularOperator::standard(m));
        out.require(r.is_idempotent == predicted, "analyze idempotence on grid");
        ++grid;
      }
  }
  std::ostringstream d;
  d << "alpha in {0, 1/2, 1}; " << solutions.size() << " oracle instances, " << grid << " grid points";
  out.detail = d.str();
  return out;
}

struct SweepTally {
  std::size_t instances = 0;
  std::size_t constant = 0;
  std::size_t zero_alpha = 0;
  std::size_t zero_alpha_nonzero = 0;
};

SweepTally& tally() {
  static SweepTally t;
  return t;
}

constexpr std::uint64_t kSweepSeed = 20240601;
constexpr std::size_t kSweepCount = 200;

// 2. Law sweep over all families, n = 2..12.
Outcome law_sweep() {
  Outcome out;
  SweepTally& t = tally();
  std::size_t reported = 0;
  for (Family f : kAllFamilies) {
    for (std::size_t n = 2; n <= 12; ++n) {
      const SweepSummary s = sweep(f, n, kSweepCount, kSweepSeed);
      reported += s.instances;
      out.require(s.violations.empty(), std::string(to_string(f)) + " n=" + std::to_string(n) + " reported violations");
      // Independent recheck of every instance.
      for (std::size_t k = 0; k < kSweepCount; ++k) {
        const RegularOperator p = random_instance(f, n, kSweepSeed + k);
        ++t.instances;
        const Matrix& cf = p.cone_form();
        if (!cf.is_nonnegative() || square(cf) != cf) continue;
        const Scalar a = cf(0, 0);
        bool constant = true;
        for (std::size_t i = 1; i < n; ++i) constant = constant && cf(i, i) == a;
        if (!constant) continue;
        ++t.constant;
        const std::string where = std::string(to_string(f)) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
        out.require(in_law(a), where + ": alpha " + format_scalar(a) + " outside {0} u {1/m}");
        if (sgn(a) > 0) {
          const mpz_class m = a.get_den();
          out.require(mpz_class(static_cast<unsigned long>(n)) % m == 0, where + ": m does not divide n");
        }
        out.require(Scalar(rank(p.matrix())) == a * Scalar(n), where + ": rank != n alpha");
        if (is_zero(a)) {
          ++t.zero_alpha;
          if (!cf.is_zero()) ++t.zero_alpha_nonzero;
        }
      }
    }
  }
  out.require(t.instances >= 10000, "fewer than 10^4 instances");
  out.require(reported == t.instances, "sweep instance count mismatch");
  out.require(t.constant == t.instances, "a generated instance was not a constant-diagonal projection");
  std::ostringstream d;
  d << t.instances << " instances over 5 families, n <= 12; " << t.constant << " constant-diagonal, 0 violations";
  out.detail = d.str();
  return out;
}

// 3. Forbidden-alpha search.
Outcome forbidden_search() {
  Outcome out;
  double worst_forbidden = 1e300;
  double worst_allowed = 0.0;
  for (std::size_t n : {3, 4, 5}) {
    for (double alpha : {0.3, 0.4, 0.45, 0.6, 0.7}) {
      const SearchResult r = feasibility_search(n, alpha, SearchBudget{}, 1);
      worst_forbidden = std::min(worst_forbidden, r.best_residual);
      std::ostringstream w;
      w << "n=" << n << " alpha=" << alpha << " residual " << r.best_residual << " < 1e-3";
      out.require(r.best_residual >= kSearchFailure, w.str());
    }
  }
  for (auto [n, alpha] : {std::pair<std::size_t, double>{4, 1.0 / 2}, {3, 1.0 / 3}, {4, 1.0 / 4}}) {
    const SearchResult r = feasibility_search(n, alpha, SearchBudget{}, 1);
    worst_allowed = std::max(worst_allowed, r.best_residual);
    std::ostringstream w;
    w << "n=" << n << " alpha=" << alpha << " residual " << r.best_residual << " > 1e-10";
    out.require(r.best_residual <= kSearchSuccess, w.str());
  }
  std::ostringstream d;
  d << "forbidden min residual " << worst_forbidden << ", allowed max residual " << worst_allowed;
  out.detail = d.str();
  return out;
}

// 4. LP oracle equals the closed-form meet.
Outcome meet_oracle() {
  Outcome out;
  SplitMix64 rng(derive_seed(kSweepSeed, 4));
  std::size_t checks = 0;
  std::size_t skewed = 0;
  for (int pair = 0; pair < 1000; ++pair) {
    const std::size_t n = 1 + rng.below(6);
    const LatticeSpace space = pair % 2 == 0 ? LatticeSpace::standard(n)
                                             : make_space(testing::random_basis(rng, n), "random");
    skewed += !space.is_standard();
    const RegularOperator s = testing::random_positive_operator(rng, space);
    const RegularOperator t = testing::random_positive_operator(rng, space);
    const RegularOperator m = op_meet(s, t);
    for (int k = 0; k < 5; ++k) {
      const Vector x = testing::random_positive_vector(rng, space);
      const CertifiedVector cv = certify_meet(s, t, x);
      out.require(cv.certificate.holds && cv.value == m.apply(x), "discrepancy on pair " + std::to_string(pair));
      ++checks;
    }
  }
  std::ostringstream d;
  d << "1000 pairs (" << skewed << " on random cones), " << checks << " vectors, 0 discrepancies";
  out.detail = out.pass ? d.str() : "discrepancies found";
  return out;
}

// 5. Block projection -> partition recovery round trip.
Outcome partition_round_trip() {
  Outcome out;
  SplitMix64 rng(derive_seed(kSweepSeed, 5));
  double worst_two = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.below(24);
    Partition part = testing::random_equal_partition(rng, n);
    const RegularOperator p = block_projection(n, part);
    part.canonicalize();
    for (const Exponent& e : {Exponent::of(1), Exponent::of(2), Exponent::inf()}) {
      const PartitionRecovery rec = recover_partition(p, e);
      out.require(rec.partition == part && rec.violations.empty(),
                  "round trip failed for " + format_partition(part) + " p=" + format_exponent(e));
      if (e.infinite || e.value == 1) {
        out.require(rec.norm.exact && *rec.norm.exact == 1, "exact norm is not 1");
      } else {
        worst_two = std::max(worst_two, std::fabs(rec.norm.value - 1.0));
        out.require(std::fabs(rec.norm.value - 1.0) <= 1e-9, "2-norm off by more than 1e-9");
      }
    }
  }
  std::ostringstream d;
  d << "1000 partitions, n <= 24, p in {1, 2, inf}; max |norm_2 - 1| = " << worst_two;
  out.detail = d.str();
  return out;
}

// Independent check of the structure invariants read straight off Q.
void check_structure(Outcome& out, const RegularOperator& q, const std::string& where) {
  const std::size_t n = q.dim();
  const Matrix& m = q.matrix();
  const Scalar alpha = m(0, 0);
  std::vector<std::vector<std::size_t>> j(n);
  for (std::size_t t = 0; t < n; ++t) {
    Scalar sum = 0;
    for (std::size_t s = 0; s < n; ++s) {
      sum += m(t, s);
      if (sgn(m(t, s)) > 0) j[t].push_back(s);
    }
    out.require(sum == 1, where + ": row sum");
    out.require(Scalar(j[t].size()) * alpha == 1, where + ": |J_t| != 1/alpha");
    for (std::size_t s : j[t]) out.require(m(t, s) == m(s, s), where + ": lambda(t,s) != lambda(s,s)");
  }
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t s = 0; s < n; ++s) {
      const bool same = j[t] == j[s];
      bool meet = false;
      for (std::size_t x : j[t]) meet = meet || std::find(j[s].begin(), j[s].end(), x) != j[s].end();
      out.require(same || !meet, where + ": J sets overlap without being equal");
    }
  const StructureReport r = structure_report(q);
  out.require(r.j_sets == j, where + ": reported J sets differ");
  out.require(r.violations.empty(), where + ": reported violations");
  std::set<std::vector<std::size_t>> distinct(j.begin(), j.end());
  out.require(r.partition.blocks.size() == distinct.size(), where + ": reported partition size");
}

// 6. Structure report on stochastic instances and normalized forms.
Outcome structure_invariants() {
  Outcome out;
  std::size_t direct = 0;
  std::size_t normalized = 0;
  for (Family f : kAllFamilies) {
    for (std::size_t n = 2; n <= 12; ++n) {
      for (std::uint64_t k = 0; k < 20; ++k) {
        const RegularOperator p = random_instance(f, n, kSweepSeed + k);
        const std::string where = std::string(to_string(f)) + " n=" + std::to_string(n);
        if (p.apply(ones(n)) == ones(n)) {
          check_structure(out, p, where);
          ++direct;
        }
        const StochasticForm sf = stochastic_normalize(p);
        check_structure(out, sf.q, where + " normalized");
        ++normalized;
      }
    }
  }
  for (std::size_t n = 1; n <= 8; ++n) {
    const GroupAverage g = group_average(n, {[n] {
                                           Permutation c(n);
                                           for (std::size_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
                                           return c;
                                         }()});
    check_structure(out, g.op, "cyclic group n=" + std::to_string(n));
    ++direct;
  }
  std::ostringstream d;
  d << direct << " stochastic instances + " << normalized << " normalized forms";
  out.detail = d.str();
  return out;
}

std::string hypothesis_code(const RegularOperator& e, const RegularOperator& t) {
  try {
    transfer_check(e, t);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::HypothesisViolated) return err.detail();
    return std::string("other error ") + err.what();
  }
  return "accepted";
}

// 7. Disjointness transfer on poisoned pairs, plus three negatives.
Outcome disjointness_transfer() {
  Outcome out;
  SplitMix64 rng(derive_seed(kSweepSeed, 7));
  const std::size_t dims[] = {4, 6, 8, 9};
  std::size_t made = 0;
  std::size_t nonzero_t = 0;
  while (made < 500) {
    const std::size_t n = dims[made % 4];
    Partition blocks = testing::random_equal_partition(rng, n);
    if (blocks.blocks.size() < 2) continue;
    const PoisonedPair pp = poisoned_pair(n, blocks, rng.next());
    nonzero_t += !pp.t.matrix().is_zero();
    const Certificate c = transfer_check(pp.e, pp.t);
    out.require(c.holds && c.recheck(), "certificate fails on n=" + std::to_string(n) + " " + format_partition(blocks));
    ++made;
  }

  const PoisonedPair base = poisoned_pair_with_weights(4, parse_partition("1,2;3,4"), {{0, 1, Scalar(1)}});
  Matrix skew(4, 4);
  skew(0, 2) = 1;
  skew(1, 2) = 1;
  const std::string c1 = hypothesis_code(base.e, base.e);
  const std::string c2 = hypothesis_code(base.e, RegularOperator::standard(skew));
  const std::string c3 = hypothesis_code(base.e, base.t + frac(1, 2) * base.e);
  out.require(c1 == "meet", "T = E gave " + c1);
  out.require(c2 == "TE=T", "non-commuting T gave " + c2);
  out.require(c3 == "meet", "overlapping T gave " + c3);
  std::ostringstream d;
  d << made << " pairs (" << nonzero_t << " with T != 0) certified; negatives rejected as " << c1 << ", " << c2 << ", "
    << c3;
  out.detail = d.str();
  return out;
}

// 8. Verdicts on the two-dimensional family.
Outcome family_verdicts() {
  Outcome out;
  const Vector e{Scalar(1), Scalar(1)};
  const Vector p{Scalar(1), Scalar(0)};
  struct Row {
    Scalar beta;
    Scalar alpha;
    Classification expected;
  };
  const std::vector<Row> rows{
      {Scalar(-1), frac(1, 2), Classification::Inconclusive},
      {frac(-1, 2), frac(1, 3), Classification::Inconclusive},
      {frac(-1, 3), frac(1, 4), Classification::Inconclusive},
      {frac(-1, 4), frac(1, 5), Classification::Inconclusive},
      {frac(-1, 5), frac(1, 6), Classification::Inconclusive},
      {frac(-2, 3), frac(2, 5), Classification::NonRepresentable},
      {frac(-2, 5), frac(2, 7), Classification::NonRepresentable},
      {frac(-3, 7), frac(3, 10), Classification::NonRepresentable},
      {frac(-9, 10), frac(9, 19), Classification::NonRepresentable},
  };
  for (const Row& r : rows) {
    const PoisonVerdict v = poison_verdict(wickstead_family(r.beta), e, p);
    const std::string where = "beta=" + format_scalar(r.beta);
    out.require(v.alpha == r.alpha, where + ": alpha " + format_scalar(v.alpha));
    out.require(v.alpha == r.beta / (r.beta - 1), where + ": alpha != beta/(beta-1)");
    out.require(v.classification == r.expected, where + ": classification");
  }
  out.detail = "9 beta values, alpha = beta/(beta-1) exactly, 5 Inconclusive + 4 NonRepresentable";
  return out;
}

// 9. Constant diagonal zero forces the zero operator.
Outcome degenerate_diagonal() {
  Outcome out;
  const SweepTally& t = tally();
  out.require(t.instances > 0, "criterion 2 sweep did not run");
  out.require(t.zero_alpha_nonzero == 0, "non-zero projection with zero diagonal in the sweep");

  // Zero operators analyze cleanly.
  for (std::size_t n = 1; n <= 12; ++n) {
    const ProjectionReport r = analyze(zero_operator(LatticeSpace::standard(n)));
    out.require(r.alpha == Scalar(0) && r.rank == 0 && r.violations.empty(), "zero operator report");
  }

  // Exhaustive 3x3 nonnegative zero-diagonal matrices over a small grid.
  const Scalar values[] = {Scalar(0), frac(1, 2), Scalar(1), Scalar(2)};
  std::size_t enumerated = 0;
  std::size_t idempotent = 0;
  for (int code = 0; code < 4096; ++code) {
    Matrix m(3, 3);
    int c = code;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) {
          m(i, j) = values[c % 4];
          c /= 4;
        }
    ++enumerated;
    if (square(m) == m) {
      ++idempotent;
      out.require(m.is_zero(), "non-zero idempotent with zero diagonal");
    }
  }
  out.require(idempotent == 1, "exactly one zero-diagonal idempotent (the zero matrix) expected");

  // A would-be counterexample is flagged.
  const auto flagged = wickstead_law_violations(3, Scalar(0), 1, Scalar(0), false);
  out.require(std::find(flagged.begin(), flagged.end(), std::string(kZeroDiagonalNonzero)) != flagged.end(),
              "non-zero claimant not flagged");

  std::ostringstream d;
  d << t.zero_alpha << " zero-diagonal instances in the sweep, all zero; " << enumerated
    << " 3x3 zero-diagonal matrices enumerated, only P = 0 idempotent; claimant flagged";
  out.detail = d.str();
  return out;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "exhaustive 2x2 law", 1.0, exhaustive_two_by_two);
  ok &= run_criterion(2, "law sweep", 300.0, law_sweep);
  ok &= run_criterion(3, "forbidden-alpha search", 600.0, forbidden_search);
  ok &= run_criterion(4, "meet oracle equivalence", 0, meet_oracle);
  ok &= run_criterion(5, "partition round trip", 0, partition_round_trip);
  ok &= run_criterion(6, "structure report", 0, structure_invariants);
  ok &= run_criterion(7, "disjointness transfer", 0, disjointness_transfer);
  ok &= run_criterion(8, "two-dimensional family verdicts", 1.0, family_verdicts);
  ok &= run_criterion(9, "degenerate diagonal", 0, degenerate_diagonal);
  std::printf("%s\n", ok ? "all criteria passed" : "SOME CRITERIA FAILED");
  return ok ? 0 : 1;
}
