#include "vlat/projection_lab.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <thread>
#include <utility>

#include "vlat/error.hpp"
#include "vlat/rng.hpp"

namespace vlat {

// ---------------------------------------------------------------------------
// Partition

void Partition::validate(std::size_t n) const {
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw Error(ErrorCode::BadPartition, "empty block");
    for (auto i : block) {
      if (i >= n) throw Error(ErrorCode::BadPartition, "index out of range");
      if (seen[i]) throw Error(ErrorCode::BadPartition, "index repeated");
      seen[i] = true;
      ++covered;
    }
  }
  if (covered != n) throw Error(ErrorCode::BadPartition, "blocks do not cover the index set");
}

void Partition::canonicalize() {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
}

std::optional<std::size_t> Partition::common_block_size() const {
  if (blocks.empty()) return std::nullopt;
  const std::size_t k = blocks.front().size();
  for (const auto& b : blocks)
    if (b.size() != k) return std::nullopt;
  return k;
}

namespace {

std::size_t parse_index(std::string_view token) {
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
  if (token.empty()) throw Error(ErrorCode::ParseError, "empty index");
  std::size_t v = 0;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorCode::ParseError, "bad index '" + std::string(token) + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  if (v == 0) throw Error(ErrorCode::ParseError, "indices are 1-based");
  return v - 1;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  Partition p;
  for (auto block_text : split(text, ';')) {
    std::vector<std::size_t> block;
    for (auto tok : split(block_text, ',')) block.push_back(parse_index(tok));
    p.blocks.push_back(std::move(block));
  }
  return p;
}

std::string format_partition(const Partition& p) {
  std::string out;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (b) out += ';';
    for (std::size_t i = 0; i < p.blocks[b].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(p.blocks[b][i] + 1);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// analyze

std::vector<std::string> wickstead_law_violations(std::size_t dim, const Scalar& alpha,
                                                  std::size_t rank, const Scalar& trace,
                                                  bool operator_is_zero) {
  std::vector<std::string> v;
  if (trace != Scalar(static_cast<unsigned long>(rank))) v.emplace_back(kRankTraceMismatch);
  if (is_zero(alpha)) {
    // trace = rank = 0 forces the idempotent to vanish.
    if (!operator_is_zero) v.emplace_back(kZeroDiagonalNonzero);
  } else if (!is_unit_fraction(alpha)) {
    v.emplace_back(kAlphaNotReciprocal);
  } else if (dim % alpha.get_den().get_ui() != 0) {
    v.emplace_back(kMDoesNotDivideDim);
  }
  if (alpha * static_cast<unsigned long>(dim) != Scalar(static_cast<unsigned long>(rank)))
    v.emplace_back(kAlphaRankMismatch);
  return v;
}

ProjectionReport analyze(const RegularOperator& p) {
  ProjectionReport r;
  r.dim = p.dim();
  r.is_positive = is_positive(p);
  r.is_idempotent = is_idempotent(p);
  r.alpha_vector = p.cone_form().diagonal();
  r.rank = rank(p.matrix());
  r.trace = p.cone_form().trace();
  if (!r.is_positive || !r.is_idempotent) return r;

  const DiagonalPart d = diagonal_part(p);
  if (!d.alpha) {
    if (r.trace != Scalar(static_cast<unsigned long>(r.rank))) r.violations.emplace_back(kRankTraceMismatch);
    return r;
  }
  r.alpha = d.alpha;
  if (is_unit_fraction(*r.alpha)) {
    r.wickstead_m = r.alpha->get_den().get_ui();
    r.divides_dim = r.dim % *r.wickstead_m == 0;
  }
  r.violations = wickstead_law_violations(r.dim, *r.alpha, r.rank, r.trace, p.matrix().is_zero());
  if (!satisfies_two_condition_definition(p, *r.alpha))
    r.violations.emplace_back(kDiagonalDefinitionsDisagree);
  return r;
}

// ---------------------------------------------------------------------------
// stochastic normalization and structure

StochasticForm stochastic_normalize(const RegularOperator& input) {
  const RegularOperator p = input.space().is_standard() ? input : input.in_cone_coordinates();
  if (!is_positive(p)) throw Error(ErrorCode::NotPositive);
  if (!is_idempotent(p)) throw Error(ErrorCode::NotIdempotent);
  if (p.matrix().is_zero()) throw Error(ErrorCode::ZeroProjection);

  const Vector f = p.apply(ones(p.dim()));
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (sgn(f[i]) > 0) support.push_back(i);

  const Matrix restricted = principal_submatrix(p.matrix(), support);
  const std::size_t k = support.size();
  Matrix q(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) q(i, j) = restricted(i, j) * f[support[j]] / f[support[i]];
  StochasticForm out{std::move(support), RegularOperator::standard(std::move(q))};
  return out;
}

StructureReport structure_report(const RegularOperator& input) {
  const RegularOperator q = input.space().is_standard() ? input : input.in_cone_coordinates();
  const std::size_t n = q.dim();
  if (!is_positive(q)) throw Error(ErrorCode::PreconditionFailed, "positive");
  if (!is_idempotent(q)) throw Error(ErrorCode::PreconditionFailed, "idempotent");
  if (q.apply(ones(n)) != ones(n)) throw Error(ErrorCode::PreconditionFailed, "stochastic");
  const DiagonalPart d = diagonal_part(q);
  if (!d.alpha) throw Error(ErrorCode::PreconditionFailed, "constant-diagonal");
  if (sgn(*d.alpha) <= 0) throw Error(ErrorCode::PreconditionFailed, "alpha-positive");

  StructureReport r;
  r.alpha = *d.alpha;
  const Matrix& m = q.matrix();
  r.j_sets.resize(n);
  r.lambda.resize(n);
  r.row_sums.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t s = 0; s < n; ++s) {
      if (sgn(m(t, s)) > 0) {
        r.j_sets[t].push_back(s);
        r.lambda[t].emplace(s, m(t, s));
      }
      r.row_sums[t] += m(t, s);
    }
  }

  auto flag = [&r](const char* code) {
    if (std::find(r.violations.begin(), r.violations.end(), code) == r.violations.end())
      r.violations.emplace_back(code);
  };
  const Scalar inv_alpha = 1 / r.alpha;
  for (std::size_t t = 0; t < n; ++t) {
    const auto& jt = r.j_sets[t];
    if (!std::binary_search(jt.begin(), jt.end(), t)) flag("t-not-in-J_t");
    if (r.row_sums[t] != 1) flag("row-sum");
    if (Scalar(static_cast<unsigned long>(jt.size())) != inv_alpha) flag("J-size");
    for (auto s : jt) {
      if (r.lambda[t].at(s) != m(s, s)) flag("lambda-diagonal");
      if (r.j_sets[s] != jt) flag("J-relation");
    }
  }

  // Distinct J-sets must be pairwise disjoint and cover {0..n-1}.
  std::set<std::vector<std::size_t>> distinct(r.j_sets.begin(), r.j_sets.end());
  r.partition.blocks.assign(distinct.begin(), distinct.end());
  try {
    r.partition.validate(n);
  } catch (const Error&) {
    flag("J-partition");
  }
  r.partition.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// group averages

Permutation parse_cycles(std::string_view text, std::size_t n) {
  Permutation perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<bool> used(n, false);
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw Error(ErrorCode::ParseError, "expected '(' in cycle notation");
    const auto close = text.find(')', i);
    if (close == std::string_view::npos) throw Error(ErrorCode::ParseError, "unclosed cycle");
    std::string body(text.substr(i + 1, close - i - 1));
    std::replace(body.begin(), body.end(), ',', ' ');
    std::vector<std::size_t> cycle;
    for (auto tok : split(body, ' ')) {
      if (tok.empty()) continue;
      const std::size_t idx = parse_index(tok);
      if (idx >= n) throw Error(ErrorCode::NotAPermutation, "point " + std::to_string(idx + 1) + " > n");
      if (used[idx]) throw Error(ErrorCode::NotAPermutation, "cycles are not disjoint");
      used[idx] = true;
      cycle.push_back(idx);
    }
    for (std::size_t c = 0; c < cycle.size(); ++c) perm[cycle[c]] = cycle[(c + 1) % cycle.size()];
    i = close + 1;
  }
  return perm;
}

std::string format_cycles(const Permutation& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s] || perm[s] == s) continue;
    out += '(';
    std::size_t c = s;
    bool first = true;
    while (!seen[c]) {
      seen[c] = true;
      if (!first) out += ' ';
      out += std::to_string(c + 1);
      first = false;
      c = perm[c];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

GroupAverage group_average(std::size_t n, const std::vector<Permutation>& generators) {
  for (const auto& g : generators) {
    if (g.size() != n) throw Error(ErrorCode::NotAPermutation, "wrong length");
    std::vector<bool> hit(n, false);
    for (auto x : g) {
      if (x >= n || hit[x]) throw Error(ErrorCode::NotAPermutation);
      hit[x] = true;
    }
  }
  Permutation id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});

  std::set<Permutation> group{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& h : frontier) {
      for (const auto& g : generators) {
        Permutation gh(n);
        for (std::size_t i = 0; i < n; ++i) gh[i] = g[h[i]];
        if (group.insert(gh).second) {
          if (group.size() > kGroupCap) throw Error(ErrorCode::GroupTooLarge);
          next.push_back(std::move(gh));
        }
      }
    }
    frontier = std::move(next);
  }

  const Scalar weight(1UL, static_cast<unsigned long>(group.size()));
  Matrix m(n, n);
  bool free_action = true;
  for (const auto& sigma : group) {
    const bool is_identity = sigma == id;
    for (std::size_t t = 0; t < n; ++t) {
      m(t, sigma[t]) += weight;
      if (!is_identity && sigma[t] == t) free_action = false;
    }
  }
  return GroupAverage{RegularOperator::standard(std::move(m)), group.size(), free_action};
}

// ---------------------------------------------------------------------------
// block projections and recovery

RegularOperator block_projection(std::size_t n, const Partition& partition) {
  partition.validate(n);
  Matrix m(n, n);
  for (const auto& block : partition.blocks) {
    const Scalar w(1UL, static_cast<unsigned long>(block.size()));
    for (auto i : block)
      for (auto j : block) m(i, j) = w;
  }
  return RegularOperator::standard(std::move(m));
}

RegularOperator conjugate_by_diagonal(const RegularOperator& p, const Vector& d) {
  if (d.size() != p.dim()) throw Error(ErrorCode::DimensionMismatch);
  Matrix m = p.matrix();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = d[i] * m(i, j) / d[j];
  return RegularOperator(p.space(), std::move(m));
}

PartitionRecovery recover_partition(const RegularOperator& p, const Exponent& exponent) {
  if (!p.space().is_standard()) throw Error(ErrorCode::UnsupportedCone);
  if (!is_positive(p)) throw Error(ErrorCode::NotPositive);
  if (!is_idempotent(p)) throw Error(ErrorCode::NotIdempotent);

  PartitionRecovery out;
  out.norm = operator_pnorm(p, exponent);
  const bool contractive = out.norm.exact ? *out.norm.exact <= 1
                                          : out.norm.value <= 1.0 + kContractivityTolerance;
  if (!contractive) throw Error(ErrorCode::NotContractive, std::to_string(out.norm.value));

  const DiagonalPart d = diagonal_part(p);
  if (!d.alpha) throw Error(ErrorCode::DiagonalNotConstant);
  if (is_zero(*d.alpha))
    throw Error(ErrorCode::ZeroDiagonal, p.matrix().is_zero() ? "zero operator" : kZeroDiagonalNonzero);
  out.alpha = *d.alpha;

  const std::size_t n = p.dim();
  std::set<std::vector<std::size_t>> distinct;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> ja;
    for (std::size_t b = 0; b < n; ++b)
      if (sgn(p.matrix()(a, b)) > 0) ja.push_back(b);
    if (Scalar(static_cast<unsigned long>(ja.size())) * out.alpha != 1)
      out.violations.emplace_back("J-size a=" + std::to_string(a + 1));
    distinct.insert(std::move(ja));
  }
  out.partition.blocks.assign(distinct.begin(), distinct.end());
  try {
    out.partition.validate(n);
    if (!(block_projection(n, out.partition) == p)) out.violations.emplace_back("not-block-projection");
  } catch (const Error&) {
    out.violations.emplace_back("J-partition");
  }
  out.partition.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------
// random instances

Family parse_family(std::string_view text) {
  for (auto f : kAllFamilies)
    if (to_string(f) == text) return f;
  throw Error(ErrorCode::BadFamily, std::string(text));
}

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::Block: return "block";
    case Family::Group: return "group";
    case Family::ConjugatedBlock: return "conjugated-block";
    case Family::DirectSum: return "direct-sum";
    case Family::RankOne: return "rank-one";
  }
  return "unknown";
}

namespace {

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

std::vector<std::size_t> shuffled_indices(std::size_t n, SplitMix64& rng) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  rng.shuffle(idx);
  return idx;
}

Partition random_equal_partition(std::size_t n, std::size_t k, SplitMix64& rng) {
  const auto idx = shuffled_indices(n, rng);
  Partition p;
  for (std::size_t b = 0; b < n / k; ++b)
    p.blocks.emplace_back(idx.begin() + static_cast<std::ptrdiff_t>(b * k),
                          idx.begin() + static_cast<std::ptrdiff_t>((b + 1) * k));
  p.canonicalize();
  return p;
}

Vector random_positive_vector(std::size_t n, SplitMix64& rng) {
  Vector d(n);
  for (auto& x : d) x = rng.positive_rational();
  return d;
}

RegularOperator block_instance(std::size_t n, std::size_t k, SplitMix64& rng) {
  return block_projection(n, random_equal_partition(n, k, rng));
}

RegularOperator conjugated_block_instance(std::size_t n, std::size_t k, SplitMix64& rng) {
  return conjugate_by_diagonal(block_instance(n, k, rng), random_positive_vector(n, rng));
}

// Free action of Z_a x Z_b (b = 1 gives a cyclic group) on n points; a*b | n.
RegularOperator free_group_instance(std::size_t n, std::size_t a, std::size_t b, SplitMix64& rng) {
  const auto idx = shuffled_indices(n, rng);
  Permutation g1(n), g2(n);
  const std::size_t orbit = a * b;
  for (std::size_t o = 0; o < n / orbit; ++o) {
    auto point = [&](std::size_t u, std::size_t v) { return idx[o * orbit + u * b + v]; };
    for (std::size_t u = 0; u < a; ++u) {
      for (std::size_t v = 0; v < b; ++v) {
        g1[point(u, v)] = point((u + 1) % a, v);
        g2[point(u, v)] = point(u, (v + 1) % b);
      }
    }
  }
  std::vector<Permutation> gens{g1};
  if (b > 1) gens.push_back(g2);
  return group_average(n, gens).op;
}

RegularOperator group_instance(std::size_t n, SplitMix64& rng) {
  // Candidate (a, b) with a*b | n; b = 1 is the cyclic case.
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  for (auto d : divisors(n)) {
    shapes.emplace_back(d, 1);
    for (std::size_t a = 2; a * a <= d; ++a)
      if (d % a == 0 && d / a >= 2) shapes.emplace_back(a, d / a);
  }
  const auto [a, b] = shapes[rng.below(shapes.size())];
  return free_group_instance(n, a, b, rng);
}

RegularOperator rank_one_instance(std::size_t n, SplitMix64& rng) {
  const Vector u = random_positive_vector(n, rng);
  Matrix m(n, n);
  const Scalar inv_n(1UL, static_cast<unsigned long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // v_j = 1 / (n u_j), so u_i v_i = 1/n and <v, u> = 1.
      m(i, j) = u[i] * inv_n / u[j];
    }
  }
  return RegularOperator::standard(std::move(m));
}

RegularOperator fixed_alpha_piece(std::size_t n, std::size_t k, SplitMix64& rng) {
  switch (rng.below(n == k ? 4 : 3)) {
    case 0: return block_instance(n, k, rng);
    case 1: return conjugated_block_instance(n, k, rng);
    case 2: return free_group_instance(n, k, 1, rng);
    default: return rank_one_instance(n, rng);
  }
}

}  // namespace

RegularOperator random_instance(Family family, std::size_t n, std::uint64_t seed, std::size_t cap) {
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "n must be positive");
  if (n > cap) throw Error(ErrorCode::CapExceeded, std::to_string(n) + " > " + std::to_string(cap));
  SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(family) * 1000 + n));
  const auto divs = divisors(n);
  switch (family) {
    case Family::Block:
      return block_instance(n, divs[rng.below(divs.size())], rng);
    case Family::ConjugatedBlock:
      return conjugated_block_instance(n, divs[rng.below(divs.size())], rng);
    case Family::Group:
      return group_instance(n, rng);
    case Family::RankOne:
      return rank_one_instance(n, rng);
    case Family::DirectSum: {
      if (n < 2) throw Error(ErrorCode::BadFamily, "direct-sum needs n >= 2");
      std::vector<std::size_t> ks;
      for (auto d : divs)
        if (n / d >= 2) ks.push_back(d);
      const std::size_t k = ks[rng.below(ks.size())];
      const std::size_t blocks = n / k;
      const std::size_t left = k * (1 + rng.below(blocks - 1));
      const RegularOperator a = fixed_alpha_piece(left, k, rng);
      const RegularOperator b = fixed_alpha_piece(n - left, k, rng);
      return RegularOperator::standard(direct_sum(a.matrix(), b.matrix()));
    }
  }
  throw Error(ErrorCode::BadFamily);
}

// ---------------------------------------------------------------------------
// poisoned pairs

PoisonedPair poisoned_pair_with_weights(std::size_t n, const Partition& blocks,
                                        const std::vector<BlockWeight>& weights) {
  blocks.validate(n);
  if (blocks.blocks.size() < 2) throw Error(ErrorCode::NeedTwoBlocks);
  if (!blocks.common_block_size()) throw Error(ErrorCode::BadPartition, "blocks must have equal size");
  const std::size_t k = *blocks.common_block_size();
  Matrix t(n, n);
  for (const auto& w : weights) {
    if (w.target >= blocks.blocks.size() || w.source >= blocks.blocks.size() || w.target == w.source)
      throw Error(ErrorCode::BadPartition, "weight must join two distinct blocks");
    if (sgn(w.weight) < 0) throw Error(ErrorCode::NotPositive, "block weight");
    const Scalar entry = w.weight / static_cast<unsigned long>(k);
    for (auto i : blocks.blocks[w.target])
      for (auto j : blocks.blocks[w.source]) t(i, j) += entry;
  }
  return PoisonedPair{block_projection(n, blocks), RegularOperator::standard(std::move(t)), weights};
}

PoisonedPair poisoned_pair(std::size_t n, const Partition& blocks, std::uint64_t seed) {
  SplitMix64 rng(derive_seed(seed, 0x9015));
  std::vector<BlockWeight> weights;
  const std::size_t b = blocks.blocks.size();
  for (std::size_t target = 0; target < b; ++target)
    for (std::size_t source = 0; source < b; ++source)
      if (target != source && rng.below(2) == 1)
        weights.push_back({target, source, rng.positive_rational()});
  return poisoned_pair_with_weights(n, blocks, weights);
}

// ---------------------------------------------------------------------------
// feasibility search

namespace {

double max_residual(const Eigen::MatrixXd& p) {
  return ((p * p) - p).cwiseAbs().maxCoeff();
}

double objective(const Eigen::MatrixXd& p) {
  return 0.5 * ((p * p) - p).squaredNorm();
}

void project(Eigen::MatrixXd& p, double alpha) {
  p = p.cwiseMax(0.0);
  p.diagonal().setConstant(alpha);
}

}  // namespace

SearchResult feasibility_search(std::size_t n, double alpha, const SearchBudget& budget,
                                std::uint64_t seed) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::BadAlpha, std::to_string(alpha));
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "n must be positive");
  const auto dim = static_cast<Eigen::Index>(n);
  SplitMix64 rng(derive_seed(seed, 0x5EA2C4));

  SearchResult out;
  out.best_residual = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd best;
  const double initial_step = 0.1 / static_cast<double>(n);

  for (std::size_t restart = 0; restart < budget.restarts; ++restart) {
    ++out.restarts_run;
    Eigen::MatrixXd p(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j) p(i, j) = 2.0 * rng.unit() / static_cast<double>(n);
    project(p, alpha);

    double step = initial_step;
    double f = objective(p);
    for (std::size_t it = 0; it < budget.iterations; ++it) {
      const Eigen::MatrixXd r = p * p - p;
      const Eigen::MatrixXd grad = r * p.transpose() + p.transpose() * r - r;
      Eigen::MatrixXd trial = p - step * grad;
      project(trial, alpha);
      const double ft = objective(trial);
      if (ft < f) {
        p = std::move(trial);
        f = ft;
      } else {
        step *= 0.5;
        if (step < 1e-30) break;
      }
      if (f < 1e-30) break;
    }
    const double res = max_residual(p);
    if (res < out.best_residual) {
      out.best_residual = res;
      best = p;
    }
    if (out.best_residual <= kSearchSuccess) break;
  }

  out.best_matrix.assign(n, std::vector<double>(n));
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      out.best_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = best(i, j);
  return out;
}

// ---------------------------------------------------------------------------
// sweeps

SweepSummary sweep(Family family, std::size_t n, std::size_t count, std::uint64_t seed) {
  // Surface argument errors here rather than inside a worker thread.
  if (count > 0) (void)random_instance(family, n, seed);
  std::vector<SweepRecord> records(count);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < count; k += workers) {
          const std::uint64_t s = seed + k;
          records[k] = SweepRecord{s, n, family, analyze(random_instance(family, n, s))};
        }
      });
    }
  }

  SweepSummary summary;
  summary.instances = count;
  for (auto& rec : records) {
    const auto& r = rec.report;
    if (r.is_positive && r.is_idempotent && r.alpha) {
      ++summary.constant_diagonal;
      if (is_zero(*r.alpha)) ++summary.zero_alpha;
      ++summary.alpha_histogram[format_scalar(*r.alpha)];
    }
    if (!r.violations.empty()) summary.violations.push_back(std::move(rec));
  }
  return summary;
}

}  // namespace vlat
