#include "io.hpp"

#include "crlab/constructions.hpp"
#include "crlab/error.hpp"
#include "crlab/linalg.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>

using namespace crlab;
using io::Json;

namespace {

// Exit codes: 0 success, 1 verdict failure, 2 parse or validation error.
constexpr int kVerdictFailure = 1;
constexpr int kUsageError = 2;

bool is_usage_error(ErrorKind k) {
  return k == ErrorKind::Parse || k == ErrorKind::InvalidArgument ||
         k == ErrorKind::SizeMismatch;
}

struct Outcome {
  Json report;
  int code = 0;
  bool is_report = true; // SubspaceFiles never carry a wall time
};

struct Common {
  std::size_t trials = 32;
  std::uint64_t seed = 0;
  std::string out = "-";
};

Json header(const std::string &command, const Common &c) {
  Json j;
  j["command"] = command;
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  return j;
}

Outcome cmd_construct(const FamilySpec &spec, const std::string &variant) {
  FamilySpec s = spec;
  s.variant = parse_corner_variant(variant);
  return {io::subspace_to_json(build(s)), 0, false};
}

Outcome cmd_analyze(const std::string &file, std::optional<std::size_t> k, const Common &c) {
  const auto v = io::read_subspace(file);
  Json j = header("analyze", c);
  j["file"] = file;
  j["dim"] = v.dim();
  if (!v.is_square()) {
    j["flanders"] = io::flanders_to_json(flanders_check(v, c.trials, c.seed));
    return {j};
  }
  const auto rep = check_dimension_bound(v, c.trials, c.seed);
  j["n"] = v.ambient();
  j["profile"] = io::profile_to_json(rep.profile);
  j["bound_report"] = io::bound_report_to_json(rep);
  int code = rep.status == BoundStatus::Fail ? kVerdictFailure : 0;
  if (k) {
    const auto rc = satisfies_rank_condition(v, *k, c.trials, c.seed);
    j["rank_condition"] = io::rank_condition_to_json(rc);
  }
  return {j, code};
}

Outcome cmd_triangularize(const std::string &file) {
  const auto v = io::read_subspace(file);
  Json j;
  j["command"] = "triangularize";
  j["file"] = file;
  const auto family = classify_rank_one_family(v);
  j["family"] = to_string(family.side);
  const auto res = family.side == FamilySide::Zero ? triangularize_commuting(v)
                                                   : triangularize_rank_one(v);
  j["result"] = io::triangularization_to_json(res);
  return {j};
}

Outcome cmd_search(std::size_t n, std::size_t k, std::size_t jobs, const std::string &rules,
               bool compare, const Common &c) {
  const auto r = parse_rules(rules);
  const auto rep = search_max_dimension(n, k, c.trials, c.seed, r, jobs);
  Json j = header("search", c);
  j["jobs"] = jobs;
  j["result"] = io::search_to_json(rep);
  if (compare) {
    const auto other = r == ClosureRules::Full ? ClosureRules::ThreeCase : ClosureRules::Full;
    const auto alt = search_max_dimension(n, k, c.trials, c.seed, other, jobs);
    j["comparison"] = {{"rules", to_string(other)},
                       {"max_dim", alt.max_dim},
                       {"enumerated", alt.enumerated},
                       {"same_max_dim", alt.max_dim == rep.max_dim}};
  }
  return {j, rep.matches_bound() ? 0 : kVerdictFailure};
}

Outcome cmd_verify_structure(const std::string &file, const Common &c) {
  const auto v = io::read_subspace(file);
  Json j = header("verify-structure", c);
  j["file"] = file;
  const auto rep = algebra_structure_report(v, c.trials, c.seed);
  j["verdict"] = io::structure_to_json(rep.structure);
  j["algebra_report"] = io::algebra_report_to_json(rep);
  return {j, rep.structure.status == StructureStatus::NoMatch ? kVerdictFailure : 0};
}

Outcome cmd_selftest(const Common &c) {
  Json checks = Json::array();
  bool all = true;
  auto record = [&](const std::string &name, bool ok) {
    checks.push_back({{"check", name}, {"pass", ok}});
    all = all && ok;
  };

  bool formula = true;
  for (std::size_t n = 2; n <= 10; ++n)
    for (std::size_t k = 0; k < n; ++k)
      for (auto l : valid_splits(n, k))
        formula = formula && v_k(n, k, l).dim() == dimension_bound(n, k);
  record("dim v_k(n,k,l) = bound(n,k), n <= 10", formula);

  bool identities = true;
  for (std::size_t n = 2; n <= 50; ++n) {
    identities = identities && dimension_bound(n, 0) == n * n / 4 + 1;
    identities = identities && dimension_bound(n, n - 1) == n * n - n + 1;
    identities = identities && dimension_bound(n, 1) == (n - 1) * (n - 1) / 4 + n + 1;
  }
  record("Schur, n-1 and rank-one bound identities, n <= 50", identities);

  // Exceptional corners: equality dimension, commutator rank k, and
  // recognized by the structure check.
  for (auto variant : {CornerVariant::Diag3, CornerVariant::NilRank1PlusC,
                       CornerVariant::NilRank2, CornerVariant::Diag2, CornerVariant::Scalar}) {
    const std::size_t cs = corner_size(variant);
    for (std::size_t n = std::max<std::size_t>(cs, 2); n <= cs + 2; ++n) {
      const std::size_t k = n - cs;
      const auto v = exceptional_space(n, k, variant);
      const auto s = structure_check(v, c.trials, c.seed);
      record("exceptional " + to_string(variant) + " n=" + std::to_string(n),
             v.dim() == dimension_bound(n, k) && s.k_hat == k && s.matched());
    }
  }
  Json j = header("selftest", c);
  j["checks"] = std::move(checks);
  j["pass"] = all;
  return {j, all ? 0 : kVerdictFailure};
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact tools for matrix spaces with bounded commutator rank"};
  app.require_subcommand(1);
  app.fallthrough();
  bool timing = false;
  app.add_flag("--timing", timing, "Add wall time to the report (breaks byte-exact output)");

  Common common;
  auto add_common = [&](CLI::App *sub, bool randomized, bool output) {
    if (randomized) {
      sub->add_option("--trials", common.trials, "Random trials")->check(CLI::PositiveNumber);
      sub->add_option("--seed", common.seed, "Seed");
    }
    if (output)
      sub->add_option("-o,--output", common.out, "Output file ('-' for stdout)");
  };

  std::function<Outcome()> action;

  FamilySpec spec;
  std::string family = "vk", variant = "generic";
  auto *construct = app.add_subcommand("construct", "Write a named construction");
  construct->add_option("--family", family, "Family name")->required();
  construct->add_option("--n", spec.n, "Size")->required();
  construct->add_option("--k", spec.k, "Rank parameter");
  construct->add_option("--l", spec.l, "Split parameter");
  construct->add_option("--m", spec.m, "Row count (flanders)");
  construct->add_option("--variant", variant, "Corner variant tag");
  add_common(construct, false, true);
  construct->callback([&] {
    spec.family = parse_family(family);
    action = [&] { return cmd_construct(spec, variant); };
  });

  std::string file;
  std::optional<std::size_t> level;
  auto *analyze = app.add_subcommand("analyze", "Commutator profile and dimension bound");
  analyze->add_option("file", file, "Subspace file")->required();
  analyze->add_option("--k", level, "Also test the rank condition at level k");
  add_common(analyze, true, true);
  analyze->callback([&] { action = [&] { return cmd_analyze(file, level, common); }; });

  auto *tri = app.add_subcommand("triangularize", "Simultaneous triangularization");
  tri->add_option("file", file, "Subspace file")->required();
  add_common(tri, false, true);
  tri->callback([&] { action = [&] { return cmd_triangularize(file); }; });

  std::size_t n = 0, k = 0, jobs = 1;
  std::string rules = "full";
  bool compare = false;
  auto *search = app.add_subcommand("search", "Exhaustive search over invariant spaces");
  search->add_option("--n", n, "Size")->required();
  search->add_option("--k", k, "Rank level")->required();
  search->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--rules", rules, "Closure rules")->check(CLI::IsMember({"full", "three-case"}));
  search->add_flag("--compare-rules", compare, "Also run the other rule set");
  add_common(search, true, true);
  search->callback([&] {
    if (!search->count("--trials"))
      common.trials = 16;
    action = [&] { return cmd_search(n, k, jobs, rules, compare, common); };
  });

  auto *vs = app.add_subcommand("verify-structure", "Recognize the equality-case block form");
  vs->add_option("file", file, "Subspace file")->required();
  add_common(vs, true, true);
  vs->callback([&] {
    if (!vs->count("--trials"))
      common.trials = 16;
    action = [&] { return cmd_verify_structure(file, common); };
  });

  auto *self = app.add_subcommand("selftest", "Formula identities and exceptional tables");
  add_common(self, false, true);
  self->callback([&] {
    common.trials = 16;
    action = [&] { return cmd_selftest(common); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cout << io::dump(Json{{"error", {{"kind", "PARSE"}, {"message", e.what()}}}});
    return kUsageError;
  } catch (const Error &e) {
    std::cout << io::dump(io::error_to_json(e));
    return kUsageError;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome out = action();
    if (timing && out.is_report)
      out.report["wall_time_s"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    io::write_json(out.report, common.out);
    return out.code;
  } catch (const Error &e) {
    std::cout << io::dump(io::error_to_json(e));
    return is_usage_error(e.kind()) ? kUsageError : kVerdictFailure;
  }
}
