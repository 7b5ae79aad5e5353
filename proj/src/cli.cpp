#include "perfgrp/cli.hpp"

#include "perfgrp/errors.hpp"
#include "perfgrp/paper_check.hpp"
#include "perfgrp/report.hpp"
#include "perfgrp/search.hpp"
#include "perfgrp/spec.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>

namespace perfgrp {

namespace {

constexpr const char* kSpecHelp =
    "Group spec: atoms Cn (cyclic, order n), Dm (dihedral of ORDER m, m even), Sn, An, "
    "joined by 'x' for direct products, parentheses allowed. Example: \"S3 x C5\".";

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::ordered_json seed_json(const SeedSummary& s) {
  nlohmann::ordered_json j;
  j["label"] = s.label;
  j["order"] = big_to_json(s.order);
  j["d_value"] = big_to_json(s.d_value);
  j["ratio"] = s.ratio.to_string();
  auto labels = nlohmann::ordered_json::array();
  for (const auto& l : s.factor_set) labels.push_back(l.to_string());
  j["factor_set"] = labels;
  return j;
}

SeedSummary resolve_seed(const GroupSpec& spec, const Limits& limits) {
  // A single A_n with n >= 5 is simple; its summary needs no table.
  if (spec.kind == GroupSpec::Kind::Alternating && spec.parameter >= 5) {
    return seed_summary(SimpleDescriptor{to_string(spec), spec_order(spec)});
  }
  return seed_summary(evaluate(spec, limits).relabeled(to_string(spec)));
}

int run_search(const std::string& seed_text, const SearchBounds& bounds, const Limits& limits, bool json,
               std::ostream& out) {
  const SeedSummary seed = resolve_seed(parse_spec(seed_text), limits);
  const auto certs = perfect_completions(seed, bounds);
  if (json) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["seed"] = seed_json(seed);
    j["max_prime_power"] = bounds.max_prime_power;
    j["max_depth"] = bounds.max_depth;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : certs) {
      nlohmann::ordered_json e;
      e["cofactor"] = big_to_json(c.cofactor);
      e["chain"] = c.chain;
      e["total_order"] = big_to_json(c.total_order);
      e["total_d"] = big_to_json(c.total_d);
      e["verified"] = verify_certificate(c);
      arr.push_back(e);
    }
    j["certificates"] = arr;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "seed " << seed.label << ": order " << seed.order << ", D " << seed.d_value << ", ratio " << seed.ratio
      << '\n';
  if (certs.empty()) out << "no cyclic completion within max_prime_power " << bounds.max_prime_power
                         << ", max_depth " << bounds.max_depth << '\n';
  for (const auto& c : certs) {
    out << seed.label << " x C" << c.cofactor << ": order " << c.total_order << ", D " << c.total_d << ", chain [";
    for (std::size_t i = 0; i < c.chain.size(); ++i) out << (i ? " " : "") << c.chain[i];
    out << "], " << (verify_certificate(c) ? "verified" : "NOT verified") << '\n';
  }
  return kExitOk;
}

int run_perfect_numbers(const std::string& limit_text, bool json, std::ostream& out) {
  BigInt limit;
  try {
    limit = BigInt(limit_text);
  } catch (const std::runtime_error&) {
    throw Usage("--limit expects a positive integer, got '" + limit_text + "'");
  }
  const auto numbers = even_perfect_numbers(limit);
  if (json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& n : numbers) arr.push_back(big_to_json(n));
    out << arr.dump() << '\n';
  } else {
    for (const auto& n : numbers) out << n << '\n';
  }
  return kExitOk;
}

int run_paper_check(bool json, std::ostream& out) {
  const auto results = run_paper_checks();
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (json) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : results) arr.push_back({{"identity", r.identity}, {"passed", r.passed}, {"detail", r.detail}});
    j["checks"] = arr;
    j["all_passed"] = all;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS  " : "FAIL  ") << r.identity;
      if (!r.detail.empty()) out << "  (" << r.detail << ")";
      out << '\n';
    }
    out << results.size() << " checks, " << (all ? "all passed" : "FAILURES") << '\n';
  }
  return all ? kExitOk : kExitDomain;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal-subgroup order sums D(G), perfect groups and perfect numbers.", "perfgrp"};
  app.footer(kSpecHelp);
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::size_t max_order_flag = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  auto* max_order_opt = app.add_option("--max-order", max_order_flag, "Largest group realized as a table")
                            ->check(CLI::PositiveNumber);

  std::string spec_text;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a group given by a spec");
  analyze_cmd->add_option("spec", spec_text, kSpecHelp)->required();

  std::string limit_text;
  auto* numbers_cmd = app.add_subcommand("perfect-numbers", "List even perfect numbers up to a limit");
  numbers_cmd->add_option("--limit", limit_text, "Upper bound (inclusive)")->required();

  std::string seed_text;
  SearchBounds bounds;
  auto* search_cmd = app.add_subcommand("search", "Complete a seed group to a perfect group seed x C_m");
  search_cmd->add_option("--seed", seed_text, kSpecHelp)->required();
  search_cmd->add_option("--max-prime-power", bounds.max_prime_power, "Largest prime power tried")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--max-depth", bounds.max_depth, "Longest chain of cyclic factors")->capture_default_str();

  auto* check_cmd = app.add_subcommand("paper-check", "Run the built-in regression table of published values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    Limits limits;
    if (const char* env = std::getenv(kMaxOrderEnv); env != nullptr && *env != '\0') {
      try {
        std::size_t used = 0;
        limits.max_order = std::stoull(env, &used);
        if (used != std::string(env).size() || limits.max_order == 0) throw std::invalid_argument(env);
      } catch (const std::logic_error&) {
        throw Usage(std::string(kMaxOrderEnv) + " must be a positive integer, got '" + env + "'");
      }
    }
    if (max_order_opt->count() > 0) limits.max_order = max_order_flag;
    const bool json = format == "json";

    if (analyze_cmd->parsed()) {
      const AnalysisReport report = analyze(parse_spec(spec_text), limits);
      if (json) {
        out << to_json(report).dump(2) << '\n';
      } else {
        out << to_text(report);
      }
      return kExitOk;
    }
    if (numbers_cmd->parsed()) return run_perfect_numbers(limit_text, json, out);
    if (search_cmd->parsed()) return run_search(seed_text, bounds, limits, json, out);
    if (check_cmd->parsed()) return run_paper_check(json, out);
    return kExitUsage;
  } catch (const Usage& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitResource;
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace perfgrp
