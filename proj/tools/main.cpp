#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "doxa/error.hpp"
#include "doxa/reductions.hpp"
#include "doxa/revision.hpp"
#include "doxa/scenario.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw doxa::Error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// parse errors name the offending file
std::string read_clause_file(const std::string& path) {
  std::string text = read_file(path);
  try {
    doxa::parse_horn_text(text);
  } catch (const doxa::ParseError& e) {
    throw doxa::ParseError(path + ": " + e.message(), e.line(), e.column());
  }
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"belief revision over ordered model partitions"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "execute a scenario file");
  std::string scenario_path;
  std::size_t bound = doxa::kDefaultEnumerationBound;
  run->add_option("file", scenario_path, "scenario file")->required();
  run->add_option("--bound", bound, "model enumeration bound (default 20)");

  auto* horn = app.add_subcommand("horn", "check two Horn clause files");
  std::string mode;
  std::string horn_file1;
  std::string horn_file2;
  horn->add_option("--mode", mode, "redundant or neg-equiv")
      ->required()
      ->check(CLI::IsMember({"redundant", "neg-equiv"}));
  horn->add_option("file1", horn_file1, "first clause file")->required();
  horn->add_option("file2", horn_file2, "second clause file")->required();

  auto* gen = app.add_subcommand("gen", "emit a reduction instance as a scenario");
  std::string reduction;
  std::string f_text;
  std::string g_text;
  std::string op_name;
  gen->add_option("--reduction", reduction, "which construction")
      ->required()
      ->check(CLI::IsMember({"hetero-hard", "hetero-flat", "nsr", "full", "msev", "dsev"}));
  gen->add_option("--f", f_text, "injected formula f")->required();
  gen->add_option("--g", g_text, "injected formula g (hetero-hard, nsr)");
  gen->add_option("--op", op_name, "operator for nsr: nat, sev or res")
      ->check(CLI::IsMember({"nat", "sev", "res"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (run->parsed()) {
      std::string text = read_file(scenario_path);
      doxa::Scenario scenario;
      try {
        scenario = doxa::parse_scenario(text);
      } catch (const doxa::ParseError& e) {
        throw doxa::ParseError(scenario_path + ": " + e.message(), e.line(), e.column());
      }
      std::cout << doxa::run_scenario(scenario, bound);
      return 0;
    }

    if (horn->parsed()) {
      const std::string text1 = read_clause_file(horn_file1);
      const std::string text2 = read_clause_file(horn_file2);
      if (mode == "redundant") {
        const doxa::HornCheck check = doxa::horn_check_redundant(text1, text2);
        if (check.result) {
          std::cout << "true (" << doxa::binary_redundancy_case_name(check.which)
                    << ")\n";
        } else {
          std::cout << "false\n";
        }
      } else {
        const doxa::HornCheck check = doxa::horn_check_neg_equiv(text1, text2);
        std::cout << (check.result ? "true" : "false") << "\n";
      }
      return 0;
    }

    if (gen->parsed()) {
      const bool needs_g = reduction == "hetero-hard" || reduction == "nsr";
      std::string usage;
      if (needs_g && g_text.empty()) usage = "--g is required for " + reduction;
      if (!needs_g && !g_text.empty()) usage = "--g is only meaningful for hetero-hard and nsr";
      if (reduction == "nsr" && op_name.empty()) usage = "--op is required for nsr";
      if (reduction != "nsr" && !op_name.empty()) usage = "--op is only meaningful for nsr";
      if (!usage.empty()) {
        std::cerr << "error: " << usage << "\n";
        return 2;
      }

      doxa::ReductionInstance instance;
      if (reduction == "hetero-hard") {
        instance = doxa::gen_hetero_hard(f_text, g_text);
      } else if (reduction == "hetero-flat") {
        instance = doxa::gen_hetero_flat(f_text);
      } else if (reduction == "nsr") {
        instance = doxa::gen_compare_nsr(f_text, g_text, *doxa::operator_from_name(op_name));
      } else if (reduction == "full") {
        instance = doxa::gen_compare_full(f_text);
      } else if (reduction == "msev") {
        instance = doxa::gen_compare_msev(f_text);
      } else {
        instance = doxa::gen_compare_dsev(f_text);
      }
      std::cout << doxa::to_scenario(instance);
      return 0;
    }
  } catch (const doxa::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const doxa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
