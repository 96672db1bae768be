#include "cce/cli.hpp"
#include "cce/common.hpp"
#include "test_support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

using namespace cce;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CCE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

std::string toy_config(const fs::path& build_dir, int workers) {
  return "corpus_dir = " + testing::toy_corpus_dir().string() + "\nbuild_dir = " + build_dir.string() +
         "\nworkers = " + std::to_string(workers) +
         "\nsplit_train = 0.6\nsplit_simulation = 0.24\nsplit_test = 0.16\nbpe_vocab_size = 4096\n"
         "beam_k = 5\nbeam_t = -3\nbeam_max_steps = 12\ntheta = 0.5\n";
}

nlohmann::json run_json(const std::string& args) {
  const auto r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

// A toy run through every stage, shared by the cases below.
struct ToyRun {
  testing::TempDir dir{"cli_toy"};
  fs::path config = dir.path() / "toy.conf";
  nlohmann::json simulate;
  nlohmann::json eval;

  ToyRun() {
    write(config, toy_config(dir.path() / "build", 4));
    const std::string c = "-c " + config.string();
    run_json(c + " ingest");
    run_json(c + " train-strategies");
    simulate = run_json(c + " simulate");
    run_json(c + " fit");
    eval = run_json(c + " eval");
  }
};

ToyRun& toy_run() {
  static ToyRun r;
  return r;
}

}  // namespace

TEST_CASE("the toy corpus runs through every stage") {
  auto& r = toy_run();
  CHECK(r.eval["status"] == "ok");
  const fs::path build = r.dir.path() / "build";
  for (const char* f : {"models/acceptance.json", "models/ranking.json", "models/scaler.json",
                        "models/feature_importance.csv", "reports/summary.json", "reports/ablation.csv",
                        "reports/characteristics.csv", "artifacts.json"})
    CHECK_MESSAGE(fs::exists(build / f), f);
  CHECK_FALSE(fs::is_empty(build / "reports/spectra"));
  const auto summary = nlohmann::json::parse(read_file(build / "reports/summary.json"));
  for (const char* p : {"normalized", "fusion", "acceptance+normalized", "acceptance+fusion"})
    CHECK(summary["pipelines"].contains(p));
  for (const char* s : {"global", "local", "lm"}) CHECK(summary["strategies"].contains(s));
  const double fraction = summary["critical_fraction"];
  CHECK(fraction > 0.0);
  CHECK(fraction < 1.0);
}

TEST_CASE("a rerun of simulate gives the same store") {
  auto& r = toy_run();
  const auto again = run_json("-c " + r.config.string() + " simulate");
  CHECK(again["splits"]["test"]["digest"] == r.simulate["splits"]["test"]["digest"]);
  CHECK(again["splits"]["simulation"]["digest"] == r.simulate["splits"]["simulation"]["digest"]);
}

TEST_CASE("one and four workers write byte-identical stores") {
  auto& r = toy_run();
  const fs::path samples = r.dir.path() / "build" / "samples";
  const auto four = directory_digest(samples);
  const fs::path one_config = r.dir.path() / "one.conf";
  write(one_config, toy_config(r.dir.path() / "build", 1));
  run_json("-c " + one_config.string() + " simulate");
  CHECK(directory_digest(samples) == four);
}

TEST_CASE("complete prints a ranked list") {
  auto& r = toy_run();
  const fs::path src = r.dir.path() / "Probe.java";
  write(src, "public class Probe {\n  public static void main(String[] args) {\n    System.out.pri");
  const auto size = fs::file_size(src);
  const auto j = run_json("-c " + r.config.string() + " complete " + src.string() + " " + std::to_string(size));
  CHECK(j["mode"] == "fusion");
  CHECK(j["candidates"].size() <= 5);
  const auto k = run_json("-c " + r.config.string() + " complete " + src.string() + " " + std::to_string(size));
  CHECK(j == k);
}

TEST_CASE("complete at the start of an empty file returns an empty list") {
  auto& r = toy_run();
  const fs::path empty = r.dir.path() / "Empty.java";
  write(empty, "");
  const auto j = run_json("-c " + r.config.string() + " complete " + empty.string() + " 0");
  CHECK(j["candidates"].empty());
  CHECK(j["accepted"] == false);
  CHECK(run("-c " + r.config.string() + " complete " + empty.string() + " 5").code == 2);
}

TEST_CASE("exit codes") {
  testing::TempDir dir("cli_codes");
  const fs::path bad = dir.path() / "bad.conf";
  write(bad, "no_such_key = 1\n");
  CHECK(run("-c " + bad.string() + " ingest").code == 2);
  write(bad, "theta = high\n");
  CHECK(run("-c " + bad.string() + " eval").code == 2);
  CHECK(run("-c " + (dir.path() / "absent.conf").string() + " ingest").code == 2);

  const fs::path fresh = dir.path() / "fresh.conf";
  write(fresh, toy_config(dir.path() / "build", 1));
  CHECK(run("-c " + fresh.string() + " fit").code == 3);
  CHECK(run("-c " + fresh.string() + " eval").code == 3);
  CHECK(run("-c " + fresh.string() + " train-strategies").code == 3);
  CHECK(run("").code != 0);
}

TEST_CASE("help lists the config keys each command reads") {
  const auto ingest = run("ingest --help");
  CHECK(ingest.code == 0);
  CHECK(ingest.out.find("corpus_dir") != std::string::npos);
  CHECK(ingest.out.find("split_train") != std::string::npos);
  const auto simulate = run("simulate --help");
  CHECK(simulate.out.find("beam_k") != std::string::npos);
  CHECK(simulate.out.find("workers") != std::string::npos);
  CHECK(simulate.out.find("external.<id>") != std::string::npos);
  CHECK(run("fit --help").out.find("acceptance.<param>") != std::string::npos);
  CHECK(run("complete --help").out.find("theta") != std::string::npos);
}

TEST_CASE("exit code mapping") {
  CHECK(exit_code_for(ConfigError("x")) == 2);
  CHECK(exit_code_for(std::runtime_error("x")) == 4);
}
