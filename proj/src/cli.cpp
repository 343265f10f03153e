#include "vlat/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <sstream>

#include "vlat/error.hpp"

namespace vlat::cli {

Json RunReport::to_json() const {
  Json j{{"command", command},
         {"inputs", inputs},
         {"results", results},
         {"violations", violations},
         {"exit_code", exit_code}};
  if (!error.empty()) j["error"] = error;
  return j;
}

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<Permutation> parse_generators(const std::string& text, std::size_t n) {
  std::vector<Permutation> gens;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      const std::string part = text.substr(start, i - start);
      if (part.find('(') != std::string::npos) gens.push_back(parse_cycles(part, n));
      start = i + 1;
    }
  }
  return gens;
}

std::string alpha_text(const std::optional<Scalar>& a) { return a ? format_scalar(*a) : "none"; }

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  std::string op;
  bool normalize = false;
  bool structure = false;
};

void do_analyze(const AnalyzeArgs& args, RunReport& rep) {
  rep.inputs = Json{{"op", args.op}, {"stochastic_normalize", args.normalize}, {"structure", args.structure}};
  const RegularOperator p = operator_from_json(read_json_file(args.op));
  const ProjectionReport report = analyze(p);
  rep.results["report"] = to_json(report);
  rep.violations = report.violations;

  std::optional<RegularOperator> structured = p;
  if (args.normalize) {
    const StochasticForm sf = stochastic_normalize(p);
    const ProjectionReport qr = analyze(sf.q);
    Json support = Json::array();
    for (auto i : sf.support) support.push_back(i + 1);
    rep.results["stochastic"] = Json{{"support", support}, {"operator", to_json(sf.q)}, {"report", to_json(qr)}};
    if (qr.alpha != report.alpha) rep.violations.emplace_back("normalization-changed-alpha");
    for (const auto& v : qr.violations) rep.violations.push_back("stochastic:" + v);
    structured = sf.q;
  }
  if (args.structure) {
    const StructureReport sr = structure_report(*structured);
    rep.results["structure"] = to_json(sr);
    for (const auto& v : sr.violations) rep.violations.push_back("structure:" + v);
  }
  rep.summary = "analyze: positive=" + std::string(report.is_positive ? "yes" : "no") +
                " idempotent=" + (report.is_idempotent ? "yes" : "no") + " alpha=" + alpha_text(report.alpha) +
                " rank=" + std::to_string(report.rank);
}

struct MeetArgs {
  std::string lhs;
  std::string rhs;
  bool certify = false;
};

void do_meet(const MeetArgs& args, RunReport& rep) {
  rep.inputs = Json{{"lhs", args.lhs}, {"rhs", args.rhs}, {"certify", args.certify}};
  const RegularOperator s = operator_from_json(read_json_file(args.lhs));
  const RegularOperator t = operator_from_json(read_json_file(args.rhs));
  const RegularOperator m = op_meet(s, t);
  rep.results["meet"] = to_json(m);
  std::size_t held = 0;
  if (args.certify) {
    Json certs = Json::array();
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const Vector x = s.space().cone().generator(j);
      const CertifiedVector cv = certify_meet(s, t, x);
      const bool agrees = cv.value == m.apply(x);
      certs.push_back(Json{{"x", to_json(x)},
                           {"value", to_json(cv.value)},
                           {"agrees_with_closed_form", agrees},
                           {"certificate", to_json(cv.certificate)}});
      if (!cv.certificate.holds) rep.violations.push_back("certificate-failed generator " + std::to_string(j + 1));
      if (!agrees) rep.violations.push_back("meet-oracle-mismatch generator " + std::to_string(j + 1));
      if (cv.certificate.holds && agrees) ++held;
    }
    rep.results["certificates"] = certs;
  }
  rep.summary = "meet: computed" + (args.certify ? ", " + std::to_string(held) + "/" +
                                                       std::to_string(s.dim()) + " generators certified"
                                                 : std::string());
}

struct GroupArgs {
  std::size_t n = 0;
  std::string gens;
};

void do_group(const GroupArgs& args, RunReport& rep) {
  rep.inputs = Json{{"n", args.n}, {"gens", args.gens}};
  const GroupAverage g = group_average(args.n, parse_generators(args.gens, args.n));
  const ProjectionReport report = analyze(g.op);
  rep.results = Json{{"operator", to_json(g.op)},
                     {"order", g.order},
                     {"free_action", g.free_action},
                     {"report", to_json(report)}};
  rep.violations = report.violations;
  // Diagonal entry t is |Stab(t)| / |G|, so alpha = 1/|G| exactly when no
  // non-identity element fixes a point. Transitive non-free actions still
  // have a constant (larger) diagonal.
  const bool inverse_order = report.alpha == Scalar(1UL, static_cast<unsigned long>(g.order));
  if (inverse_order != g.free_action) rep.violations.emplace_back("free-action-mismatch");
  rep.summary = "group: |G|=" + std::to_string(g.order) + " free=" + (g.free_action ? "yes" : "no") +
                " alpha=" + alpha_text(report.alpha);
}

struct BlocksArgs {
  std::size_t n = 0;
  std::string partition;
};

void do_blocks(const BlocksArgs& args, RunReport& rep) {
  rep.inputs = Json{{"n", args.n}, {"partition", args.partition}};
  Partition part = parse_partition(args.partition);
  const RegularOperator p = block_projection(args.n, part);
  part.canonicalize();
  const ProjectionReport report = analyze(p);
  rep.results = Json{{"operator", to_json(p)}, {"partition", to_json(part)}, {"report", to_json(report)}};
  rep.violations = report.violations;
  rep.summary = "blocks: " + format_partition(part) + " alpha=" + alpha_text(report.alpha);
}

struct RecoverArgs {
  std::string op;
  std::string p;
};

void do_recover(const RecoverArgs& args, RunReport& rep) {
  rep.inputs = Json{{"op", args.op}, {"p", args.p}};
  const Exponent exponent = parse_exponent(args.p);
  const RegularOperator p = operator_from_json(read_json_file(args.op));
  const PartitionRecovery rec = recover_partition(p, exponent);
  rep.results = Json{{"partition", to_json(rec.partition)},
                     {"partition_spec", format_partition(rec.partition)},
                     {"alpha", to_json(rec.alpha)},
                     {"norm", to_json(rec.norm)}};
  rep.violations = rec.violations;
  rep.summary = "recover: partition " + format_partition(rec.partition) + " alpha=" + format_scalar(rec.alpha);
}

struct SweepArgs {
  std::string family;
  std::size_t n = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
};

void do_sweep(const SweepArgs& args, RunReport& rep) {
  rep.inputs = Json{{"family", args.family}, {"n", args.n}, {"count", args.count}, {"seed", args.seed}};
  std::vector<Family> families;
  if (args.family == "all") {
    families.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
  } else {
    families.push_back(parse_family(args.family));
  }
  Json per_family = Json::object();
  std::size_t total = 0;
  for (auto f : families) {
    if (f == Family::DirectSum && args.n < 2 && families.size() > 1) continue;
    const SweepSummary s = sweep(f, args.n, args.count, args.seed);
    per_family[std::string(to_string(f))] = to_json(s);
    total += s.instances;
    for (const auto& rec : s.violations)
      for (const auto& v : rec.report.violations)
        rep.violations.push_back(std::string(to_string(f)) + " seed=" + std::to_string(rec.seed) + ": " + v);
  }
  rep.results = Json{{"families", per_family}, {"instances", total}};
  rep.summary = "sweep: " + std::to_string(total) + " instances, " + std::to_string(rep.violations.size()) +
                " violations";
}

struct SearchArgs {
  std::size_t n = 0;
  double alpha = 0.0;
  SearchBudget budget;
  std::uint64_t seed = 0;
};

void do_search(const SearchArgs& args, RunReport& rep) {
  rep.inputs = Json{{"n", args.n},
                    {"alpha", args.alpha},
                    {"restarts", args.budget.restarts},
                    {"iters", args.budget.iterations},
                    {"seed", args.seed}};
  const SearchResult r = feasibility_search(args.n, args.alpha, args.budget, args.seed);
  std::string verdict = "inconclusive";
  if (r.best_residual <= kSearchSuccess)
    verdict = "construction found";
  else if (r.best_residual >= kSearchFailure)
    verdict = "no construction found within budget";
  rep.results = to_json(r);
  rep.results["verdict"] = verdict;
  std::ostringstream res;
  res << r.best_residual;
  rep.summary = "search: best residual " + res.str() + " (" + verdict + ")";
}

struct TransferArgs {
  std::string e;
  std::string t;
};

void do_transfer(const TransferArgs& args, RunReport& rep) {
  rep.inputs = Json{{"e", args.e}, {"t", args.t}};
  const RegularOperator e = operator_from_json(read_json_file(args.e));
  const RegularOperator t = operator_from_json(read_json_file(args.t));
  const Certificate cert = transfer_check(e, t);
  rep.results = Json{{"certificate", to_json(cert)}};
  if (!cert.holds) rep.violations.emplace_back("transfer-certificate-failed");
  rep.summary = std::string("transfer: certificate ") + (cert.holds ? "holds" : "FAILS") + " (" +
                std::to_string(cert.witnesses.size()) + " witnesses)";
}

struct FamilyArgs {
  std::string beta;
  bool verdict = false;
};

void do_family(const FamilyArgs& args, RunReport& rep) {
  rep.inputs = Json{{"beta", args.beta}, {"verdict", args.verdict}};
  const Scalar beta = parse_scalar(args.beta);
  const LatticeAlgebra a = wickstead_family(beta);
  const Scalar alpha = family_alpha(beta);
  const bool positive_products = check_positive_multiplication(a);
  const Vector e{Scalar(1), Scalar(1)};
  const Vector x{Scalar(1), beta};
  const bool disjoint = is_zero(vec_inf(a.space(), x, e));
  rep.results = Json{{"algebra", to_json(a)},
                     {"alpha", to_json(alpha)},
                     {"positive_multiplication", positive_products},
                     {"x_meet_e_is_zero", disjoint},
                     {"beta_permitted", beta_is_permitted(beta)}};
  if (!positive_products) rep.violations.emplace_back("product-of-positives-not-positive");
  if (!disjoint) rep.violations.emplace_back("x-meet-e-nonzero");
  rep.summary = "family: beta=" + format_scalar(beta) + " alpha=" + format_scalar(alpha);
  if (args.verdict) {
    const PoisonVerdict v = poison_verdict(a, e, Vector{Scalar(1), Scalar(0)});
    rep.results["verdict"] = to_json(v);
    rep.results["alpha"] = to_json(v.alpha);
    rep.results["classification"] = std::string(to_string(v.classification));
    if (v.alpha != alpha) rep.violations.emplace_back("verdict-alpha-mismatch");
    if ((v.classification == Classification::NonRepresentable) == beta_is_permitted(beta))
      rep.violations.emplace_back("classification-disagrees-with-beta-rule");
    rep.summary += " " + std::string(to_string(v.classification));
  }
}

}  // namespace

RunReport run(const std::vector<std::string>& argv) {
  RunReport rep;
  CLI::App app{"Finite-dimensional vector lattices and positive projections with constant diagonal", "vlat"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a positive projection");
  analyze_cmd->add_option("--op", analyze_args.op, "Operator JSON file")->required();
  analyze_cmd->add_flag("--stochastic-normalize", analyze_args.normalize, "Also analyze the stochastic form");
  analyze_cmd->add_flag("--structure", analyze_args.structure, "Report J-sets and weights");

  MeetArgs meet_args;
  auto* meet_cmd = app.add_subcommand("meet", "Riesz-Kantorovich meet of two positive operators");
  meet_cmd->add_option("--lhs", meet_args.lhs, "Operator JSON file")->required();
  meet_cmd->add_option("--rhs", meet_args.rhs, "Operator JSON file")->required();
  meet_cmd->add_flag("--certify", meet_args.certify, "Check against the LP oracle on every generator");

  GroupArgs group_args;
  auto* group_cmd = app.add_subcommand("group", "Average over a permutation group");
  group_cmd->add_option("--n", group_args.n, "Number of points")->required()->check(CLI::PositiveNumber);
  group_cmd->add_option("--gens", group_args.gens, "Generators, e.g. \"(1 2 3);(4 5)\"")->required();

  BlocksArgs blocks_args;
  auto* blocks_cmd = app.add_subcommand("blocks", "Block-averaging projection of a partition");
  blocks_cmd->add_option("--n", blocks_args.n, "Dimension")->required()->check(CLI::PositiveNumber);
  blocks_cmd->add_option("--partition", blocks_args.partition, "e.g. \"1,3;2,4\"")->required();

  RecoverArgs recover_args;
  auto* recover_cmd = app.add_subcommand("recover", "Recover the block partition of a contractive projection");
  recover_cmd->add_option("--op", recover_args.op, "Operator JSON file (or a blocks report)")->required();
  recover_cmd->add_option("--p", recover_args.p, "Exponent: a rational >= 1 or inf")->required();

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Analyze random instances of a family");
  sweep_cmd->add_option("--family", sweep_args.family, "block|group|conjugated-block|direct-sum|rank-one|all")
      ->required();
  sweep_cmd->add_option("--n", sweep_args.n, "Dimension")->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--count", sweep_args.count, "Instances")->required();
  sweep_cmd->add_option("--seed", sweep_args.seed, "64-bit seed")->required();

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Projected-descent search for an idempotent with diagonal alpha");
  search_cmd->add_option("--n", search_args.n, "Dimension")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--alpha", search_args.alpha, "Diagonal value in (0, 1)")->required();
  search_cmd->add_option("--restarts", search_args.budget.restarts, "Random restarts");
  search_cmd->add_option("--iters", search_args.budget.iterations, "Iterations per restart");
  search_cmd->add_option("--seed", search_args.seed, "64-bit seed");

  TransferArgs transfer_args;
  auto* transfer_cmd = app.add_subcommand("transfer", "Certify id_Y ^ T|_Y = 0 on the range of E");
  transfer_cmd->add_option("--e", transfer_args.e, "Idempotent JSON file")->required();
  transfer_cmd->add_option("--t", transfer_args.t, "Operator JSON file")->required();

  FamilyArgs family_args;
  auto* family_cmd = app.add_subcommand("family", "The two-dimensional cone family P_beta");
  family_cmd->add_option("--beta", family_args.beta, "Rational in [-1, 0], e.g. -2/3")->required();
  family_cmd->add_flag("--verdict", family_args.verdict, "Issue the representability verdict");

  // Values such as "--beta -2/3" would otherwise be read as an unknown flag.
  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    const std::string& next = args[i + 1];
    if (args[i].rfind("--", 0) == 0 && args[i].find('=') == std::string::npos && next.size() > 1 &&
        next[0] == '-' && (std::isdigit(static_cast<unsigned char>(next[1])) || next[1] == '.')) {
      args[i] += "=" + next;
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i + 1));
    }
  }
  std::reverse(args.begin(), args.end());

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    rep.summary = app.help();
    return rep;
  } catch (const CLI::CallForAllHelp&) {
    rep.summary = app.help("", CLI::AppFormatMode::All);
    return rep;
  } catch (const CLI::ParseError& e) {
    rep.exit_code = kExitInputError;
    rep.error = e.what();
    rep.summary = std::string("usage error: ") + e.what();
    return rep;
  }

  try {
    if (*analyze_cmd) {
      rep.command = "analyze";
      do_analyze(analyze_args, rep);
    } else if (*meet_cmd) {
      rep.command = "meet";
      do_meet(meet_args, rep);
    } else if (*group_cmd) {
      rep.command = "group";
      do_group(group_args, rep);
    } else if (*blocks_cmd) {
      rep.command = "blocks";
      do_blocks(blocks_args, rep);
    } else if (*recover_cmd) {
      rep.command = "recover";
      do_recover(recover_args, rep);
    } else if (*sweep_cmd) {
      rep.command = "sweep";
      do_sweep(sweep_args, rep);
    } else if (*search_cmd) {
      rep.command = "search";
      do_search(search_args, rep);
    } else if (*transfer_cmd) {
      rep.command = "transfer";
      do_transfer(transfer_args, rep);
    } else if (*family_cmd) {
      rep.command = "family";
      do_family(family_args, rep);
    }
  } catch (const Error& e) {
    rep.exit_code = kExitInputError;
    rep.error = e.what();
    rep.results = Json::object();
    rep.violations.clear();
    rep.summary = rep.command + ": " + e.what();
    return rep;
  } catch (const InputError& e) {
    rep.exit_code = kExitInputError;
    rep.error = e.what();
    rep.results = Json::object();
    rep.violations.clear();
    rep.summary = rep.command + ": " + e.what();
    return rep;
  } catch (const Json::exception& e) {
    rep.exit_code = kExitInputError;
    rep.error = std::string("malformed JSON input: ") + e.what();
    rep.results = Json::object();
    rep.violations.clear();
    rep.summary = rep.command + ": " + rep.error;
    return rep;
  }

  if (!rep.violations.empty()) {
    rep.exit_code = kExitViolation;
    rep.summary += " [" + std::to_string(rep.violations.size()) + " VIOLATION(S)]";
  }
  return rep;
}

}  // namespace vlat::cli
