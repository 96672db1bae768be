#include "cce/cli.hpp"

#include "cce/common.hpp"
#include "cce/datasets.hpp"
#include "cce/eval.hpp"
#include "cce/simulate.hpp"

#include <fmt/format.h>
#include <json.hpp>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <chrono>

namespace cce {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path require(const fs::path& p, std::string_view stage) {
  if (!fs::exists(p)) throw MissingArtifact(std::string(stage), "missing artifact: " + p.string());
  return p;
}

void record_artifacts(const RunConfig& cfg, const std::vector<fs::path>& paths) {
  const auto manifest_path = cfg.build_dir / "artifacts.json";
  json manifest = json::object();
  if (fs::exists(manifest_path)) manifest = json::parse(read_file(manifest_path));
  for (const auto& p : paths) {
    const auto rel = fs::relative(p, cfg.build_dir).generic_string();
    manifest[rel] = fs::is_directory(p) ? directory_digest(p) : file_digest(p);
  }
  write_file_atomic(manifest_path, manifest.dump(1) + "\n");
}

std::string summary(std::string_view command, json fields) {
  json j{{"command", command}, {"status", "ok"}};
  j.update(fields);
  return j.dump();
}

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json metrics_json(const Metrics& m) {
  return json{{"files", m.files},
              {"n_ori", m.n_ori},
              {"n_cc", m.n_cc},
              {"visited", m.visited},
              {"lists", m.lists},
              {"shown", m.shown},
              {"hit_events", m.hit_events},
              {"benefit", m.benefit},
              {"hidden_cost", m.hidden_cost},
              {"accuracy_at_1", opt(m.accuracy1)},
              {"accuracy_at_5", opt(m.accuracy5)},
              {"bcr", opt(m.bcr)},
              {"invalid_list_rate", opt(m.invalid_list_rate)},
              {"occurrence_rate", opt(m.occurrence_rate)},
              {"hit_position_p90", opt(m.hit_position_p90)},
              {"mean_prefix_length", opt(m.mean_prefix_length)},
              {"completeness", opt(m.completeness)}};
}

GbdtModel load_model(const fs::path& p) {
  return GbdtModel::from_json(read_file(require(p, "fit")));
}

}  // namespace

std::string directory_digest(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::uint64_t h = kFnvOffsetBasis;
  for (const auto& f : files) {
    h = fnv1a64(fs::relative(f, dir).generic_string(), h);
    h = fnv1a64(read_file(f), h);
  }
  return hex64(h);
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e)) return 2;
  if (dynamic_cast<const MissingArtifact*>(&e)) return 3;
  return 4;
}

std::unique_ptr<LoadedStrategies> load_strategies(const RunConfig& cfg, bool deterministic) {
  auto s = std::make_unique<LoadedStrategies>();
  auto want = [&](std::string_view id) {
    return std::find(cfg.strategies.begin(), cfg.strategies.end(), id) != cfg.strategies.end();
  };
  if (want("global")) {
    s->global.emplace(GlobalFrequencyStrategy::deserialize(
        read_file(require(cfg.model_dir / "global.tsv", "train-strategies"))));
    s->enabled.push_back(&*s->global);
  }
  if (want("local")) s->enabled.push_back(&s->local);
  if (want("lm")) {
    s->bpe = BpeModel::deserialize(read_file(require(cfg.model_dir / "bpe.txt", "train-strategies")));
    s->lm = NgramModel::deserialize(read_file(require(cfg.model_dir / "lm.txt", "train-strategies")));
    LmStrategyOptions opts;
    opts.beam = cfg.beam;
    if (deterministic) opts.beam.time_budget_ms = 0;
    opts.window_chars = cfg.context_window;
    opts.use_cache = cfg.lm_cache;
    s->lm_strategy = std::make_unique<LmStrategy>(s->bpe, s->lm, opts);
    s->enabled.push_back(s->lm_strategy.get());
  }
  for (const auto& e : cfg.externals) {
    s->externals.push_back(std::make_unique<ExternalStrategy>(
        e.id, e.argv, e.dimensions, e.primary, std::chrono::milliseconds(e.timeout_ms)));
    s->enabled.push_back(s->externals.back().get());
  }
  return s;
}

std::string cmd_ingest(const RunConfig& cfg) {
  if (cfg.corpus_dir.empty()) throw ConfigError("ingest: corpus_dir is not set");
  const Corpus corpus = ingest(cfg.corpus_dir, cfg.ingest);
  write_corpus(corpus, cfg.corpus_out());
  record_artifacts(cfg, {cfg.corpus_out()});
  json counts = json::object();
  for (Split s : {Split::kTrain, Split::kSimulation, Split::kTest})
    counts[std::string(to_string(s))] = corpus.in_split(s).size();
  return summary("ingest", {{"files", corpus.files.size()},
                            {"splits", counts},
                            {"corpus", cfg.corpus_out().string()},
                            {"digest", directory_digest(cfg.corpus_out())}});
}

std::string cmd_train_strategies(const RunConfig& cfg) {
  const Corpus corpus = load_corpus(cfg.corpus_out());
  const auto train = corpus.in_split(Split::kTrain);
  if (train.empty()) throw Error("train-strategies: the train split is empty");
  fs::create_directories(cfg.model_dir);

  GlobalBuildStats gstats;
  const GlobalFrequencyStrategy global(global_build(train, cfg.global, &gstats));
  write_file_atomic(cfg.model_dir / "global.tsv", global.serialize());

  std::vector<std::string> texts;
  for (const CodeFile* f : train) texts.push_back(f->text);
  const BpeModel bpe = BpeModel::train(texts, cfg.bpe_vocab_size);
  write_file_atomic(cfg.model_dir / "bpe.txt", bpe.serialize());

  const auto sequences = lm_training_sequences(train, bpe);
  const NgramModel lm = NgramModel::train(sequences, bpe.vocab_size(), cfg.lm_order, cfg.lm_backoff);
  write_file_atomic(cfg.model_dir / "lm.txt", lm.serialize());

  const json stats{{"train_files", train.size()},
                   {"token_vocabulary", gstats.token_vocabulary},
                   {"subtoken_vocabulary", gstats.subtoken_vocabulary},
                   {"subtokens_kept", gstats.kept},
                   {"bpe_vocab_size", bpe.vocab_size()},
                   {"bpe_merges", bpe.merges().size()},
                   {"lm_order", lm.order()},
                   {"lm_contexts", lm.context_count()}};
  write_file_atomic(cfg.model_dir / "strategies.json", stats.dump(1) + "\n");
  record_artifacts(cfg, {cfg.model_dir / "global.tsv", cfg.model_dir / "bpe.txt",
                         cfg.model_dir / "lm.txt", cfg.model_dir / "strategies.json"});
  return summary("train-strategies", stats);
}

std::string cmd_simulate(const RunConfig& cfg) {
  const Corpus corpus = load_corpus(cfg.corpus_out());
  if (cfg.beam.time_budget_ms != 0)
    spdlog::info("simulate: ignoring time_budget_ms so labels stay reproducible");
  const auto strategies = load_strategies(cfg, true);
  SimulationRunConfig run;
  run.workers = cfg.workers;
  json splits = json::object();
  std::vector<fs::path> written;
  for (Split split : {Split::kSimulation, Split::kTest}) {
    const auto files = corpus.in_split(split);
    const auto started = std::chrono::steady_clock::now();
    const auto results = run_parallel(files, strategies->enabled, run);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    const auto dir = cfg.samples_dir(split);
    if (fs::exists(dir)) fs::remove_all(dir);
    write_sample_store(dir, results, files);
    const auto st = critical_stats(results);
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.failed ? 1 : 0;
    splits[std::string(to_string(split))] = {{"files", files.size()},
                                             {"positions", st.positions},
                                             {"critical", st.critical},
                                             {"critical_fraction", st.fraction()},
                                             {"failed", failed},
                                             {"seconds", seconds},
                                             {"digest", directory_digest(dir)}};
    written.push_back(dir);
  }
  record_artifacts(cfg, written);
  return summary("simulate", {{"workers", cfg.workers}, {"splits", splits}});
}

std::string cmd_fit(const RunConfig& cfg) {
  const auto store = load_sample_store(cfg.samples_dir(Split::kSimulation));
  fs::create_directories(cfg.model_dir);
  const Dataset acc = make_acceptance_dataset(store, cfg.acceptance);
  if (acc.rows() == 0) throw Error("fit: no acceptance samples in the simulation store");
  const Dataset rank = make_ranking_dataset(store);
  if (rank.rows() == 0) throw Error("fit: no ranking samples (no hits) in the simulation store");
  const GbdtModel acceptance = GbdtModel::fit(acc, Objective::kLogistic, cfg.acceptance_params);
  const GbdtModel ranking = GbdtModel::fit(rank, Objective::kSquaredError, cfg.ranking_params);
  const Scaler scaler = fit_scaler(store);

  write_file_atomic(cfg.model_dir / "acceptance.json", acceptance.to_json());
  write_file_atomic(cfg.model_dir / "ranking.json", ranking.to_json());
  write_file_atomic(cfg.model_dir / "scaler.json", scaler.to_json());
  write_file_atomic(cfg.model_dir / "schema_set.json", FeatureSchema::set_level().to_json() + "\n");
  write_file_atomic(cfg.model_dir / "schema_candidate.json",
                    FeatureSchema::candidate_level().to_json() + "\n");
  std::string importance = "model,feature,splits\n";
  for (const auto* m : {&acceptance, &ranking}) {
    const auto counts = m->feature_importance();
    std::vector<std::size_t> order(counts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return counts[a] > counts[b]; });
    for (auto f : order)
      importance += fmt::format("{},{},{}\n", m == &acceptance ? "acceptance" : "ranking",
                                m->feature_names()[f], counts[f]);
  }
  write_file_atomic(cfg.model_dir / "feature_importance.csv", importance);
  record_artifacts(cfg, {cfg.model_dir / "acceptance.json", cfg.model_dir / "ranking.json",
                         cfg.model_dir / "scaler.json", cfg.model_dir / "feature_importance.csv"});
  std::size_t positives = 0;
  for (double y : acc.y) positives += y == 1.0;
  return summary("fit", {{"acceptance_samples", acc.rows()},
                         {"acceptance_positives", positives},
                         {"acceptance_trees", acceptance.trees().size()},
                         {"ranking_samples", rank.rows()},
                         {"ranking_trees", ranking.trees().size()},
                         {"scaled_dimensions", scaler.stats().size()}});
}

std::string cmd_eval(const RunConfig& cfg) {
  const auto store = load_sample_store(cfg.samples_dir(Split::kTest));
  const GbdtModel acceptance = load_model(cfg.model_dir / "acceptance.json");
  const GbdtModel ranking = load_model(cfg.model_dir / "ranking.json");
  const Scaler scaler = Scaler::from_json(read_file(require(cfg.model_dir / "scaler.json", "fit")));
  PipelineModels models;
  models.acceptance = &acceptance;
  models.ranking = &ranking;
  models.scaler = &scaler;
  for (const auto& s : cfg.strategies) models.primary[s] = std::string(primary_dimension_of(s));
  for (const auto& e : cfg.externals) models.primary[e.id] = e.id + "." + e.primary;

  fs::create_directories(cfg.report_dir);
  json pipelines = json::object();
  std::string ablation = metrics_csv_header();
  std::map<std::string, Metrics> by_name;
  for (const auto& v : ablation_variants(cfg.pipeline.theta)) {
    const auto ledgers = evaluate_store(store, models, v, cfg.workers);
    const Metrics m = summarize(ledgers);
    by_name[v.name] = m;
    pipelines[v.name] = metrics_json(m);
    ablation += metrics_csv_row(v.name, m);
    if (v.name == "acceptance+fusion") {
      const auto dir = cfg.report_dir / "spectra";
      if (fs::exists(dir)) fs::remove_all(dir);
      fs::create_directories(dir);
      for (const auto& l : ledgers)
        write_file_atomic(dir / (shard_name(l.file) + ".csv"), spectrum_csv(l));
    }
  }
  std::string characteristics = metrics_csv_header();
  json strategies = json::object();
  std::vector<std::string> ids = cfg.strategies;
  for (const auto& e : cfg.externals) ids.push_back(e.id);
  for (const auto& v : strategy_variants(ids)) {
    const Metrics m = summarize(evaluate_store(store, models, v, cfg.workers));
    strategies[v.only_strategy] = metrics_json(m);
    characteristics += metrics_csv_row(v.only_strategy, m);
  }
  std::vector<FileSamples> samples;
  for (const auto& f : store) samples.push_back(f.samples);
  const auto crit = critical_stats(samples);

  auto gt = [](const std::optional<double>& a, const std::optional<double>& b) {
    return a && b && *a > *b;
  };
  auto lt = [](const std::optional<double>& a, const std::optional<double>& b) {
    return a && b && *a < *b;
  };
  bool acc_monotone = true;
  for (const auto& [_, m] : by_name)
    acc_monotone = acc_monotone && (!m.accuracy1 || (m.accuracy5 && *m.accuracy5 >= *m.accuracy1));
  const json checks{
      {"bcr_gate_fusion", gt(by_name["acceptance+fusion"].bcr, by_name["fusion"].bcr)},
      {"bcr_gate_normalized",
       gt(by_name["acceptance+normalized"].bcr, by_name["normalized"].bcr)},
      {"invalid_gate_fusion", lt(by_name["acceptance+fusion"].invalid_list_rate,
                                 by_name["fusion"].invalid_list_rate)},
      {"invalid_gate_normalized", lt(by_name["acceptance+normalized"].invalid_list_rate,
                                     by_name["normalized"].invalid_list_rate)},
      {"accuracy5_ge_accuracy1", acc_monotone}};
  const json report{{"theta", cfg.pipeline.theta},
                    {"test_files", store.size()},
                    {"test_positions", crit.positions},
                    {"critical_fraction", crit.fraction()},
                    {"pipelines", pipelines},
                    {"strategies", strategies},
                    {"checks", checks}};
  write_file_atomic(cfg.report_dir / "summary.json", report.dump(1) + "\n");
  write_file_atomic(cfg.report_dir / "ablation.csv", ablation);
  write_file_atomic(cfg.report_dir / "characteristics.csv", characteristics);
  record_artifacts(cfg, {cfg.report_dir / "summary.json", cfg.report_dir / "ablation.csv",
                         cfg.report_dir / "characteristics.csv", cfg.report_dir / "spectra"});
  json brief = json::object();
  for (const auto& [name, m] : by_name)
    brief[name] = {{"bcr", opt(m.bcr)}, {"invalid_list_rate", opt(m.invalid_list_rate)}};
  return summary("eval", {{"report", (cfg.report_dir / "summary.json").string()},
                          {"pipelines", brief},
                          {"checks", checks}});
}

std::string cmd_complete(const RunConfig& cfg, const fs::path& file, std::size_t offset) {
  if (!fs::exists(file)) throw ConfigError("complete: file not found: " + file.string());
  const std::string text = read_file(file);
  if (offset > text.size())
    throw ConfigError(fmt::format("complete: offset {} is past the end ({} bytes)", offset,
                                  text.size()));
  const auto strategies = load_strategies(cfg, false);
  std::optional<GbdtModel> acceptance, ranking;
  std::optional<Scaler> scaler;
  PipelineModels models;
  models.primary = primary_dimensions(strategies->enabled);
  const auto& pc = cfg.pipeline;
  if (pc.gate && pc.theta > 0.0 && pc.theta < 1.0) {
    acceptance = load_model(cfg.model_dir / "acceptance.json");
    models.acceptance = &*acceptance;
  }
  if (pc.mode == RankMode::kFusion) {
    ranking = load_model(cfg.model_dir / "ranking.json");
    models.ranking = &*ranking;
  }
  if (pc.mode == RankMode::kNormalized) {
    scaler = Scaler::from_json(read_file(require(cfg.model_dir / "scaler.json", "fit")));
    models.scaler = &*scaler;
  }
  Pipeline pipeline(strategies->enabled, models, pc);
  const auto list = pipeline.complete(std::string_view(text).substr(0, offset));
  json cands = json::array();
  for (std::size_t i = 0; i < list.candidates.size(); ++i) {
    const auto& c = list.candidates[i];
    json scores = json::object();
    for (const auto& [d, v] : c.scores) scores[d] = v;
    cands.push_back({{"text", c.text},
                     {"strategies", c.strategies},
                     {"scores", scores},
                     {"final_score", list.final_scores[i]}});
  }
  return summary("complete", {{"file", file.string()},
                              {"offset", offset},
                              {"mode", to_string(list.mode)},
                              {"accepted", list.accepted},
                              {"accept_probability", list.accept_probability},
                              {"candidates", cands}});
}

}  // namespace cce
