// gdyn: command-line front end for finite G-systems.

#include <charconv>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gdyn/checkers.hpp"
#include "gdyn/corpus.hpp"
#include "gdyn/implications.hpp"
#include "gdyn/miner.hpp"
#include "gdyn/report.hpp"
#include "gdyn/system_file.hpp"

namespace {

constexpr int kUsage = 2;

struct PropertySpec {
  gdyn::Property property;
  std::size_t arity = 1;
};

// Accepts the plain tags plus "nfold:<n>".
std::optional<PropertySpec> parse_property(const std::string& text) {
  if (text.rfind("nfold:", 0) == 0) {
    std::size_t n = 0;
    const char* first = text.data() + 6;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc() || ptr != last || first == last || n == 0) return std::nullopt;
    return PropertySpec{gdyn::Property::nfold, n};
  }
  auto p = gdyn::property_from_tag(text);
  if (!p || *p == gdyn::Property::nfold) return std::nullopt;
  return PropertySpec{*p, 1};
}

gdyn::GSystem quotient_system(const gdyn::GSystem& s) {
  auto q = gdyn::quotient(s.action(), s.map());
  if (!q.induced) throw gdyn::PreconditionError("quotient: map is not pseudoequivariant, no induced map");
  return gdyn::GSystem(gdyn::Action::trivial(q.space), *q.induced);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide transitivity, mixing and minimality of finite G-systems"};
  app.require_subcommand(1);

  std::string file;

  auto* validate = app.add_subcommand("validate", "Check that a system file satisfies every axiom");
  validate->add_option("file", file, "System file")->required();

  std::string property;
  auto* check = app.add_subcommand("check", "Decide one property");
  check->add_option("file", file, "System file")->required();
  check->add_option("--property", property,
                    "gt|tgt|wgm|sgm|gm|equivariant|pseudoequivariant|nfold:<n>|cover|quotient-minimal")
      ->required();

  auto* report = app.add_subcommand("report", "Full implication-diagram row");
  report->add_option("file", file, "System file")->required();

  auto* minimal = app.add_subcommand("minimal-sets", "List the G-minimal sets");
  minimal->add_option("file", file, "System file")->required();

  auto* quotient = app.add_subcommand("quotient", "Orbit space with the induced map");
  quotient->add_option("file", file, "System file")->required();

  gdyn::GeneratorConfig gen_config;
  std::string group_name, mode_name = "mixed";
  auto* gen = app.add_subcommand("gen", "Emit a random system");
  gen->add_option("--seed", gen_config.seed, "Generator seed")->required();
  gen->add_option("--min-points", gen_config.min_points, "Smallest carrier");
  gen->add_option("--max-points", gen_config.max_points, "Largest carrier");
  gen->add_option("--group", group_name, "Catalog group (default: draw from trivial, Z2, Z3, Z4, Z2xZ2)");
  gen->add_option("--mode", mode_name, "discrete|preorder|mixed");
  gen->add_flag("--pseudoequivariant", gen_config.pseudoequivariant_only, "Keep pseudoequivariant maps only");

  std::string target_expr;
  std::size_t budget = 0, sweep_points = 3;
  gdyn::GeneratorConfig mine_config;
  auto* mine = app.add_subcommand("mine", "Search for a system matching a property conjunction");
  mine->add_option("--target", target_expr, "Conjunction such as 'gt & !tgt'")->required();
  mine->add_option("--seed", mine_config.seed, "Seed for the random phase")->required();
  mine->add_option("--budget", budget, "Random trials after the sweep")->required();
  mine->add_option("--max-points", mine_config.max_points, "Largest carrier in the random phase");
  mine->add_option("--sweep-points", sweep_points, "Largest carrier in the exhaustive sweep");

  gdyn::GeneratorConfig suite_config;
  std::size_t trials = 500;
  auto* suite = app.add_subcommand("suite", "Run the implication laws over random systems");
  suite->add_option("--seed", suite_config.seed, "Base seed");
  suite->add_option("--trials", trials, "Number of systems");
  suite->add_option("--max-points", suite_config.max_points, "Largest carrier");

  std::string fixture_name;
  auto* fix = app.add_subcommand("fixture", "Emit a built-in fixture as a system file");
  fix->add_option("name", fixture_name, "Fixture name, or 'list'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*validate) {
      try {
        auto s = gdyn::read_system_file(file);
        std::cout << "valid points=" << s.size() << " group=" << s.group().order() << '\n';
        return 0;
      } catch (const gdyn::ParseError& e) {
        std::cout << "invalid: " << e.what() << '\n';
        return 1;
      }
    }
    if (*check) {
      auto wanted = parse_property(property);
      if (!wanted) {
        std::cerr << "error: unknown property '" << property << "'\n";
        return kUsage;
      }
      auto s = gdyn::read_system_file(file);
      auto r = gdyn::check(s, wanted->property, wanted->arity);
      std::cout << gdyn::format_property_report(s, r);
      return r.verdict ? 0 : 1;
    }
    if (*report) {
      std::cout << gdyn::format_diagram_row(gdyn::read_system_file(file));
      return 0;
    }
    if (*minimal) {
      std::cout << gdyn::format_minimal_sets(gdyn::read_system_file(file));
      return 0;
    }
    if (*quotient) {
      std::cout << gdyn::serialize_system(quotient_system(gdyn::read_system_file(file)));
      return 0;
    }
    if (*gen) {
      auto mode = gdyn::topology_mode_from_string(mode_name);
      if (!mode) {
        std::cerr << "error: unknown mode '" << mode_name << "'\n";
        return kUsage;
      }
      gen_config.mode = *mode;
      if (!group_name.empty()) {
        if (!gdyn::catalog_group(group_name)) {
          std::cerr << "error: unknown group '" << group_name << "'\n";
          return kUsage;
        }
        gen_config.groups = {group_name};
      }
      std::cout << gdyn::serialize_system(gdyn::generate(gen_config));
      return 0;
    }
    if (*mine) {
      auto target = gdyn::parse_target(target_expr, budget);
      auto r = gdyn::mine(target, mine_config, sweep_points);
      if (!r.witness) {
        std::cout << gdyn::format_exhausted(target, r) << '\n';
        return 1;
      }
      std::cout << "# target=" << gdyn::format_target(target) << " origin=" << r.origin
                << " seed=" << r.seed << '\n'
                << gdyn::serialize_system(*r.witness);
      return 0;
    }
    if (*suite) {
      suite_config.pseudoequivariant_only = false;
      auto filtered = suite_config;
      filtered.pseudoequivariant_only = true;
      auto r = gdyn::run_implication_suite({suite_config, filtered}, trials);
      std::cout << gdyn::format_suite_report(r);
      return r.violations.empty() ? 0 : 1;
    }
    if (*fix) {
      if (fixture_name == "list") {
        for (const auto& f : gdyn::fixtures()) std::cout << f.name << '\n';
        return 0;
      }
      auto f = gdyn::fixture(fixture_name);
      std::cout << "# " << f.name << '\n' << gdyn::serialize_system(f.system);
      return 0;
    }
  } catch (const gdyn::ExpressionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
