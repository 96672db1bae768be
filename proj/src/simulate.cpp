#include "cce/simulate.hpp"

#include "cce/common.hpp"

#include <fmt/format.h>
#include <json.hpp>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <numeric>
#include <thread>

namespace cce {

using nlohmann::json;

bool SimulationSample::any_hit() const {
  return std::any_of(hits.begin(), hits.end(), [](std::uint8_t h) { return h != 0; });
}

int SimulationSample::longest_hit() const {
  int best = -1;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!hits[i]) continue;
    if (best < 0 || candidates[i].length() > candidates[best].length()) best = static_cast<int>(i);
  }
  return best;
}

bool is_hit(const Candidate& c, std::string_view ground_truth_suffix) {
  return !c.text.empty() && ground_truth_suffix.starts_with(c.text);
}

std::vector<std::uint8_t> label_candidates(std::span<const Candidate> candidates,
                                           std::string_view ground_truth_suffix) {
  std::vector<std::uint8_t> out;
  out.reserve(candidates.size());
  for (const auto& c : candidates) out.push_back(is_hit(c, ground_truth_suffix) ? 1 : 0);
  return out;
}

void mark_critical(std::vector<SimulationSample>& samples) {
  for (auto& s : samples) s.critical = false;
  std::size_t p = 0;
  while (p < samples.size()) {
    auto& s = samples[p];
    s.critical = true;
    const int h = s.longest_hit();
    p += h < 0 ? 1 : s.candidates[h].length() + 1;
  }
}

SessionSet::SessionSet(std::span<const Strategy* const> strategies) {
  for (const Strategy* s : strategies) sessions_.push_back(s->new_session());
}

std::vector<Candidate> SessionSet::gather(std::string_view prefix, std::size_t cap) {
  std::vector<std::vector<Candidate>> lists;
  lists.reserve(sessions_.size());
  for (auto& s : sessions_) {
    try {
      auto list = s->query(prefix, cap);
      if (list.size() > cap) list.resize(cap);
      lists.push_back(std::move(list));
    } catch (const std::exception& e) {
      spdlog::warn("strategy '{}' failed at offset {}: {}", s->id(), prefix.size(), e.what());
    }
  }
  return merge_candidates(lists);
}

FileSamples simulate_file(const CodeFile& file, std::span<const Strategy* const> strategies,
                          const SimulationRunConfig& cfg) {
  FileSamples out;
  out.file = file.path;
  SessionSet sessions(strategies);
  const std::string_view text = file.text;
  out.samples.reserve(text.size());
  for (std::size_t p = 0; p < text.size(); ++p) {
    SimulationSample s;
    s.pos = p;
    s.candidates = sessions.gather(text.substr(0, p), cfg.cap);
    s.hits = label_candidates(s.candidates, text.substr(p));
    out.samples.push_back(std::move(s));
  }
  mark_critical(out.samples);
  return out;
}

void parallel_for(std::size_t n, std::size_t workers,
                  const std::function<void(std::size_t)>& task) {
  if (workers == 0) throw ConfigError("worker count must be >= 1");
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    for (std::size_t i = next++; i < n; i = next++) task(i);
  };
  const std::size_t threads = std::min(workers, std::max<std::size_t>(n, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(loop);
  loop();
  for (auto& t : pool) t.join();
}

std::vector<FileSamples> run_parallel(std::span<const CodeFile* const> files,
                                      std::span<const Strategy* const> strategies,
                                      const SimulationRunConfig& cfg) {
  if (cfg.workers == 0) throw ConfigError("simulate: worker count must be >= 1");
  std::vector<const CodeFile*> order(files.begin(), files.end());
  std::sort(order.begin(), order.end(),
            [](const CodeFile* a, const CodeFile* b) { return a->path < b->path; });
  std::vector<FileSamples> results(order.size());
  parallel_for(order.size(), cfg.workers, [&](std::size_t i) {
    const CodeFile& f = *order[i];
    for (int attempt = 0; attempt < 2; ++attempt) {
      try {
        results[i] = simulate_file(f, strategies, cfg);
        return;
      } catch (const std::exception& e) {
        spdlog::warn("simulate {}: attempt {} failed: {}", f.path, attempt + 1, e.what());
        results[i] = FileSamples{f.path, {}, true, e.what()};
      }
    }
  });
  return results;
}

std::string shard_name(std::string_view file_path) {
  std::string s;
  for (char c : file_path) {
    if (c == '/')
      s += "__";
    else
      s += c;
  }
  return s;
}

std::string sample_to_json(std::string_view file, const SimulationSample& s) {
  json cands = json::array();
  for (std::size_t i = 0; i < s.candidates.size(); ++i) {
    const auto& c = s.candidates[i];
    json scores = json::object();
    for (const auto& [d, v] : c.scores) scores[d] = v;
    json ranks = json::object();
    for (const auto& [st, r] : c.ranks) ranks[st] = r;
    cands.push_back(json{{"text", c.text},
                         {"strategies", c.strategies},
                         {"scores", scores},
                         {"ranks", ranks},
                         {"hit", s.hits[i]}});
  }
  return json{{"file", file}, {"pos", s.pos}, {"critical", s.critical ? 1 : 0},
              {"candidates", cands}}
      .dump();
}

SimulationSample sample_from_json(std::string_view line) {
  const json j = json::parse(line);
  SimulationSample s;
  s.pos = j.at("pos").get<std::size_t>();
  s.critical = j.at("critical").get<int>() != 0;
  for (const auto& c : j.at("candidates")) {
    Candidate cand;
    cand.text = c.at("text").get<std::string>();
    cand.strategies = c.at("strategies").get<std::vector<std::string>>();
    for (const auto& [d, v] : c.at("scores").items()) cand.scores.emplace(d, v.get<double>());
    if (c.contains("ranks"))
      for (const auto& [st, r] : c.at("ranks").items()) cand.ranks.emplace(st, r.get<int>());
    s.candidates.push_back(std::move(cand));
    s.hits.push_back(static_cast<std::uint8_t>(c.at("hit").get<int>()));
  }
  return s;
}

void write_sample_store(const std::filesystem::path& dir, std::span<const FileSamples> results,
                        std::span<const CodeFile* const> files) {
  namespace fs = std::filesystem;
  fs::create_directories(dir / "truth");
  json index = json::array();
  for (const auto& r : results) {
    const auto shard = shard_name(r.file);
    const auto it = std::find_if(files.begin(), files.end(),
                                 [&](const CodeFile* f) { return f->path == r.file; });
    if (it == files.end()) throw Error("sample store: unknown file " + r.file);
    std::string body;
    for (const auto& s : r.samples) {
      body += sample_to_json(r.file, s);
      body += '\n';
    }
    write_file_atomic(dir / (shard + ".jsonl"), body);
    write_file_atomic(dir / "truth" / (shard + ".txt"), (*it)->text);
    json entry{{"file", r.file}, {"shard", shard}, {"samples", r.samples.size()},
               {"failed", r.failed}};
    if (r.failed) entry["error"] = r.error;
    index.push_back(entry);
  }
  write_file_atomic(dir / "index.json", json{{"files", index}}.dump(1) + "\n");
}

std::vector<StoredFile> load_sample_store(const std::filesystem::path& dir) {
  if (!std::filesystem::exists(dir / "index.json"))
    throw MissingArtifact("simulate", "no sample store at " + dir.string());
  const json index = json::parse(read_file(dir / "index.json"));
  std::vector<StoredFile> out;
  for (const auto& e : index.at("files")) {
    StoredFile f;
    f.samples.file = e.at("file").get<std::string>();
    f.samples.failed = e.at("failed").get<bool>();
    const auto shard = e.at("shard").get<std::string>();
    f.text = read_file(dir / "truth" / (shard + ".txt"));
    std::ifstream in(dir / (shard + ".jsonl"));
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) f.samples.samples.push_back(sample_from_json(line));
    out.push_back(std::move(f));
  }
  return out;
}

CriticalStats critical_stats(std::span<const FileSamples> results) {
  CriticalStats st;
  for (const auto& r : results) {
    st.positions += r.samples.size();
    for (const auto& s : r.samples) st.critical += s.critical ? 1 : 0;
  }
  return st;
}

}  // namespace cce
