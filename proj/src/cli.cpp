// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "mvs/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "mvs/error.hpp"
#include "mvs/instance_io.hpp"
#include "mvs/multispace.hpp"
#include "mvs/search.hpp"

namespace mvs {
namespace {

// Raised after a diagnostic has already been written.
struct Exit {
  int code;
};

struct Options {
  std::string instance;
  std::string policy;
  std::size_t cap = kDefaultEnumerationCap;
  std::string candidate;
  std::string other;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> primes{2, 3};
  std::size_t max_dim = 4;
  std::size_t max_components = 4;
  std::size_t max_ambients = 2;
  bool minimize = false;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::optional<OperationPolicy> policy_override(const Options& o) {
  if (o.policy.empty()) return std::nullopt;
  return parse_policy(o.policy);
}

ParsedInstance load(const std::string& path, const Options& o, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read '" << path << "'\n";
    throw Exit{kExitInputError};
  }
  std::ostringstream text;
  text << in.rdbuf();
  try {
    ParsedInstance parsed = parse_instance(text.str());
    if (auto p = policy_override(o)) parsed.space = parsed.space.with_policy(*p);
    return parsed;
  } catch (const InputError& e) {
    err << path << ": " << e.what() << "\n";
    throw Exit{kExitInputError};
  }
}

Limits limits_of(const Options& o) {
  Limits limits;
  limits.enumeration_cap = o.cap;
  return limits;
}

void cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const ParsedInstance inst = load(o.instance, o, err);
  const AxiomReport r = validate_axioms(inst.space, limits_of(o));
  auto count = [&](const char* axiom) {
    return std::count_if(r.violations.begin(), r.violations.end(),
                         [&](const AxiomViolation& v) { return v.axiom == axiom; });
  };
  out << "policy=" << to_string(inst.space.policy()) << " components=" << inst.space.size()
      << "\n";
  out << "closure checks=" << r.closure_checks << " violations=" << count("closure") << "\n";
  out << "associativity checks=" << r.associativity_checks
      << " violations=" << count("associativity") << "\n";
  out << "distributivity checks=" << r.distributivity_checks
      << " violations=" << count("distributivity") << "\n";
  out << "note: the scalar axiom is checked as (k1 + k2)*a = k1*a + k2*a\n";
  for (const AxiomViolation& v : r.violations) {
    out << "violation " << v.axiom << ": " << v.detail << "\n";
  }
  out << "valid=" << yes_no(r.valid()) << "\n";
}

void cmd_basis(const Options& o, std::ostream& out, std::ostream& err) {
  const ParsedInstance inst = load(o.instance, o, err);
  for (const TaggedVector& v : greedy_basis(inst.space, std::nullopt, limits_of(o))) {
    out << to_string(v) << "\n";
  }
}

void cmd_dim(const Options& o, std::ostream& out, std::ostream& err) {
  const ParsedInstance inst = load(o.instance, o, err);
  const Limits limits = limits_of(o);
  const std::size_t greedy = dim_greedy(inst.space, limits);
  const std::int64_t ie = dim_inclusion_exclusion(inst.space, limits);
  out << "greedy=" << greedy << " inclusion-exclusion=" << ie
      << " agree=" << yes_no(static_cast<std::int64_t>(greedy) == ie) << "\n";
}

void cmd_check_subspace(const Options& o, std::ostream& out, std::ostream& err) {
  const ParsedInstance parent = load(o.instance, o, err);
  const ParsedInstance candidate = load(o.candidate, o, err);
  const bool verdict = is_multi_subspace(candidate.space, parent.space, limits_of(o));
  out << "multi-subspace=" << yes_no(verdict) << "\n";
}

void cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  const ParsedInstance first = load(o.instance, o, err);
  const ParsedInstance second = load(o.other, o, err);
  const AdditiveReport r = additive_formula_check(first.space, second.space, limits_of(o));
  out << "union=" << r.union_dim << " first=" << r.first_dim << " second=" << r.second_dim
      << " intersection=" << r.intersection_dim << " right-side=" << r.right_side
      << " agree=" << yes_no(r.agree) << "\n";
}

void cmd_search(const Options& o, std::ostream& out) {
  GeneratorConfig cfg;
  cfg.primes = o.primes;
  cfg.max_ambient_dim = o.max_dim;
  cfg.max_components = o.max_components;
  cfg.max_ambients = o.max_ambients;
  cfg.policy = policy_override(o).value_or(OperationPolicy::kTotal);
  cfg.seed = o.seed;
  validate(cfg);
  const Limits limits = limits_of(o);

  out << "search seed=" << cfg.seed << " trials=" << o.trials
      << " policy=" << to_string(cfg.policy) << " primes=";
  for (std::size_t i = 0; i < cfg.primes.size(); ++i) out << (i ? "," : "") << cfg.primes[i];
  out << " max-dim=" << cfg.max_ambient_dim << " max-components=" << cfg.max_components
      << " max-ambients=" << cfg.max_ambients << "\n";

  const auto reports = find_formula_discrepancies(cfg, o.trials, {}, limits);
  for (const DiscrepancyReport& found : reports) {
    const DiscrepancyReport r = o.minimize ? minimize_counterexample(found, limits) : found;
    out << "finding trial=" << r.trial << " seed=" << r.seed
        << " inclusion-exclusion=" << r.ie_value << " greedy=" << r.greedy_value
        << (o.minimize ? " minimized=yes" : "") << "\n";
    out << format_instance(r.instance) << "end\n";
  }
  out << "findings=" << reports.size() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of unions of subspaces over prime fields", "mvspace"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_instance) {
    if (needs_instance) sub->add_option("instance", o.instance, "Instance file")->required();
    sub->add_option("--policy", o.policy, "Override the operation policy")
        ->check(CLI::IsMember({"TOTAL", "CLOSED"}));
    sub->add_option("--cap", o.cap, "Enumeration cap")->check(CLI::PositiveNumber);
  };

  auto* validate_cmd = app.add_subcommand("validate", "Re-verify the axioms exhaustively");
  add_common(validate_cmd, true);
  auto* basis_cmd = app.add_subcommand("basis", "Print the greedy basis");
  add_common(basis_cmd, true);
  auto* dim_cmd = app.add_subcommand("dim", "Compare greedy and inclusion-exclusion dimension");
  add_common(dim_cmd, true);
  auto* check_cmd = app.add_subcommand("check-subspace", "Test the sub-multispace criterion");
  add_common(check_cmd, true);
  check_cmd->add_option("--candidate", o.candidate, "Candidate instance file")->required();
  auto* compare_cmd = app.add_subcommand("compare", "Evaluate the two-instance additive formula");
  add_common(compare_cmd, true);
  compare_cmd->add_option("--other", o.other, "Second instance file")->required();
  auto* search_cmd = app.add_subcommand("search", "Audit the dimension formula on random instances");
  add_common(search_cmd, false);
  search_cmd->add_option("--trials", o.trials, "Number of random instances");
  search_cmd->add_option("--seed", o.seed, "Generator seed");
  search_cmd->add_option("--primes", o.primes, "Primes to draw from")->delimiter(',');
  search_cmd->add_option("--max-dim", o.max_dim, "Largest ambient dimension")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--max-components", o.max_components, "Largest component count")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--max-ambients", o.max_ambients, "Largest ambient count")
      ->check(CLI::PositiveNumber);
  search_cmd->add_flag("--minimize", o.minimize, "Shrink each finding before printing");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*validate_cmd) cmd_validate(o, out, err);
    if (*basis_cmd) cmd_basis(o, out, err);
    if (*dim_cmd) cmd_dim(o, out, err);
    if (*check_cmd) cmd_check_subspace(o, out, err);
    if (*compare_cmd) cmd_compare(o, out, err);
    if (*search_cmd) cmd_search(o, out);
  } catch (const Exit& e) {
    return e.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_cap_error(e.kind()) ? kExitCapExceeded : kExitInputError;
  }
  return kExitOk;
}

}  // namespace mvs
