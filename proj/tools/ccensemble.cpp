#include "cce/cli.hpp"
#include "cce/common.hpp"
#include "cce/config.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include <iostream>

namespace {

std::string keys_for(std::string_view command) {
  std::string out = "Config keys read:\n";
  for (const auto& [key, what] : cce::config_keys()) {
    const bool general = key == "build_dir" || key == "model_dir" || key == "report_dir";
    if (general || what.find(command) != std::string::npos ||
        (command != "ingest" && key.starts_with("external")))
      out += fmt::format("  {:<28} {}\n", key, what);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ensemble code completion: corpus, strategies, simulation, models, evaluation"};
  app.require_subcommand(1);
  std::string config_path = "ccensemble.conf";
  int verbosity = 0;
  bool quiet = false;
  app.add_option("-c,--config", config_path, "config file (key = value lines)");
  app.add_flag("-v,--verbose", verbosity, "more logging (repeatable)");
  app.add_flag("-q,--quiet", quiet, "errors only");

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"ingest", "filter, preprocess and split the corpus"},
      {"train-strategies", "build the sub-token trie, BPE codec and n-gram LM"},
      {"simulate", "replay simulation and test files and store labeled samples"},
      {"fit", "train the acceptance and ranking models and the scaler"},
      {"eval", "ablation, strategy characteristics and cost spectra on the test split"},
      {"complete", "print the completion list at one cursor position"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->footer(keys_for(c.name == std::string("train-strategies") ? "train-strategies" : c.name));
    subs[c.name] = sub;
  }
  std::string file;
  std::size_t offset = 0;
  subs["complete"]->add_option("file", file, "source file")->required();
  subs["complete"]->add_option("offset", offset, "cursor offset in bytes")->required();

  CLI11_PARSE(app, argc, argv);

  spdlog::set_level(quiet ? spdlog::level::err
                          : verbosity >= 2 ? spdlog::level::debug
                          : verbosity == 1 ? spdlog::level::info
                                           : spdlog::level::warn);
  spdlog::set_pattern("[%l] %v");
  try {
    const auto cfg = cce::load_config(config_path);
    std::string line;
    if (subs["ingest"]->parsed()) line = cce::cmd_ingest(cfg);
    else if (subs["train-strategies"]->parsed()) line = cce::cmd_train_strategies(cfg);
    else if (subs["simulate"]->parsed()) line = cce::cmd_simulate(cfg);
    else if (subs["fit"]->parsed()) line = cce::cmd_fit(cfg);
    else if (subs["eval"]->parsed()) line = cce::cmd_eval(cfg);
    else if (subs["complete"]->parsed()) line = cce::cmd_complete(cfg, file, offset);
    std::cout << line << std::endl;
    return 0;
  } catch (const cce::MissingArtifact& e) {
    spdlog::error("missing artifact from stage '{}': {}", e.stage(), e.what());
    return 3;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return cce::exit_code_for(e);
  }
}
