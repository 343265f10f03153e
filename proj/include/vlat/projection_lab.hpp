#pragma once

// Positive projections with constant diagonal: analysis, normalization,
// structure extraction, constructions and random search.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vlat/operator_lattice.hpp"

namespace vlat {

/// Disjoint, covering, non-empty index blocks (0-based). Canonical order:
/// each block ascending, blocks ordered by their smallest element.
struct Partition {
  std::vector<std::vector<std::size_t>> blocks;

  /// Throws BadPartition unless the blocks partition {0..n-1}.
  void validate(std::size_t n) const;
  void canonicalize();
  std::optional<std::size_t> common_block_size() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// "1,3;2,4" (1-based, semicolon-separated blocks).
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

// Violation codes carried by reports. Any of them fails a run.
inline constexpr const char* kAlphaNotReciprocal = "alpha-not-reciprocal";
inline constexpr const char* kMDoesNotDivideDim = "m-does-not-divide-dim";
inline constexpr const char* kRankTraceMismatch = "rank-trace-mismatch";
inline constexpr const char* kAlphaRankMismatch = "alpha-rank-mismatch";
inline constexpr const char* kZeroDiagonalNonzero = "zero-diagonal-nonzero-operator";
inline constexpr const char* kDiagonalDefinitionsDisagree = "diagonal-definitions-disagree";

struct ProjectionReport {
  std::size_t dim = 0;
  bool is_positive = false;
  bool is_idempotent = false;
  Vector alpha_vector;  // diagonal of the cone form
  std::optional<Scalar> alpha;
  std::size_t rank = 0;
  Scalar trace;
  std::optional<std::uint64_t> wickstead_m;
  bool divides_dim = false;
  std::vector<std::string> violations;
};

/// Never throws on mathematical input; every finding lands in the report.
ProjectionReport analyze(const RegularOperator& p);

/// The law checks applied by analyze to a positive idempotent with constant
/// diagonal alpha. Exposed so the violation path can be exercised directly.
std::vector<std::string> wickstead_law_violations(std::size_t dim, const Scalar& alpha,
                                                  std::size_t rank, const Scalar& trace,
                                                  bool operator_is_zero);

struct StochasticForm {
  std::vector<std::size_t> support;  // indices where P·1 > 0
  RegularOperator q;                 // positive idempotent with Q·1 = 1
};

/// Restricts P to the ideal generated by P·1 and conjugates by diag(P·1).
/// Throws ZeroProjection, NotIdempotent or NotPositive.
StochasticForm stochastic_normalize(const RegularOperator& p);

struct StructureReport {
  Scalar alpha;
  std::vector<std::vector<std::size_t>> j_sets;  // J_t, ascending
  std::vector<std::map<std::size_t, Scalar>> lambda;  // lambda(t, s), s in J_t
  Vector row_sums;
  Partition partition;
  std::vector<std::string> violations;
};

/// Throws Error{PreconditionFailed, "positive" | "idempotent" | "stochastic"
/// | "constant-diagonal" | "alpha-positive"}.
StructureReport structure_report(const RegularOperator& q);

/// Permutation as images: perm[i] = sigma(i), 0-based.
using Permutation = std::vector<std::size_t>;

/// "(1 2 3)(4 5)" in 1-based cycle notation; fixed points may be omitted.
Permutation parse_cycles(std::string_view text, std::size_t n);
std::string format_cycles(const Permutation& perm);

inline constexpr std::size_t kGroupCap = 1000000;

struct GroupAverage {
  RegularOperator op;
  std::size_t order = 0;
  bool free_action = false;
};

/// P = (1/|G|) * sum of permutation matrices over the generated group.
/// Throws NotAPermutation or GroupTooLarge.
GroupAverage group_average(std::size_t n, const std::vector<Permutation>& generators);

/// Entry 1/|B| at (i, j) iff i and j share block B. Throws BadPartition.
RegularOperator block_projection(std::size_t n, const Partition& partition);

/// D * P * D^{-1}; keeps positivity, idempotence and the diagonal.
RegularOperator conjugate_by_diagonal(const RegularOperator& p, const Vector& d);

struct PartitionRecovery {
  Partition partition;
  Scalar alpha;
  OperatorNorm norm;
  std::vector<std::string> violations;  // non-empty only on a theorem violation
};

inline constexpr double kContractivityTolerance = 1e-9;

/// Throws UnsupportedCone, NotPositive, NotIdempotent, NotContractive,
/// DiagonalNotConstant or ZeroDiagonal.
PartitionRecovery recover_partition(const RegularOperator& p, const Exponent& exponent);

enum class Family { Block, Group, ConjugatedBlock, DirectSum, RankOne };

Family parse_family(std::string_view text);
std::string_view to_string(Family f) noexcept;
inline constexpr Family kAllFamilies[] = {Family::Block, Family::Group, Family::ConjugatedBlock,
                                          Family::DirectSum, Family::RankOne};

inline constexpr std::size_t kInstanceCap = 24;

/// Deterministic in (family, n, seed). Throws CapExceeded or BadFamily (e.g.
/// direct-sum with n < 2).
RegularOperator random_instance(Family family, std::size_t n, std::uint64_t seed,
                                std::size_t cap = kInstanceCap);

struct BlockWeight {
  std::size_t target;  // block index receiving mass
  std::size_t source;  // block index averaged from
  Scalar weight;
};

struct PoisonedPair {
  RegularOperator e;
  RegularOperator t;
  std::vector<BlockWeight> weights;
};

/// E = block projection, T = sum of weight * (averaging map source -> target)
/// over distinct block pairs. Throws NeedTwoBlocks or BadPartition.
PoisonedPair poisoned_pair_with_weights(std::size_t n, const Partition& blocks,
                                        const std::vector<BlockWeight>& weights);
PoisonedPair poisoned_pair(std::size_t n, const Partition& blocks, std::uint64_t seed);

struct SearchBudget {
  std::size_t restarts = 50;
  std::size_t iterations = 10000;
};

inline constexpr double kSearchSuccess = 1e-10;
inline constexpr double kSearchFailure = 1e-3;

struct SearchResult {
  double best_residual = 0.0;
  std::vector<std::vector<double>> best_matrix;
  std::size_t restarts_run = 0;
};

/// Projected descent on 0.5 * ||P^2 - P||_F^2 over nonnegative matrices with
/// diagonal fixed to alpha; reports the best max-entry residual of P^2 - P.
/// Throws BadAlpha unless 0 < alpha < 1.
SearchResult feasibility_search(std::size_t n, double alpha, const SearchBudget& budget,
                                std::uint64_t seed);

struct SweepRecord {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  Family family = Family::Block;
  ProjectionReport report;
};

struct SweepSummary {
  std::size_t instances = 0;
  std::size_t constant_diagonal = 0;
  std::size_t zero_alpha = 0;
  std::map<std::string, std::size_t> alpha_histogram;  // "1/m" -> count
  std::vector<SweepRecord> violations;                 // sorted by seed
};

/// Analyzes `count` instances with seeds seed, seed+1, ...; parallel over
/// seeds, merged in seed order.
SweepSummary sweep(Family family, std::size_t n, std::size_t count, std::uint64_t seed);

}  // namespace vlat
