#include "cce/corpus.hpp"

#include "cce/common.hpp"
#include "cce/lexer.hpp"

#include <json.hpp>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>

namespace cce {
namespace {

using nlohmann::json;

enum class LineKind { kBlank, kComment, kCode };

struct Line {
  std::size_t begin = 0;
  std::size_t end = 0;  // one past the trailing newline (or end of text)
  LineKind kind = LineKind::kBlank;
  std::vector<std::size_t> code;  // indices of code tokens on this line
};

// Splits the token stream into physical lines. Multi-line comment tokens
// mark every line they touch as carrying a comment.
std::vector<Line> analyze_lines(std::string_view text, const std::vector<Token>& toks) {
  std::vector<Line> lines;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      if (i == text.size() && begin == i && !lines.empty()) break;
      lines.push_back(Line{begin, std::min(i + 1, text.size()), LineKind::kBlank, {}});
      begin = i + 1;
    }
  }
  std::size_t li = 0;
  for (std::size_t t = 0; t < toks.size(); ++t) {
    const auto& tok = toks[t];
    while (li + 1 < lines.size() && tok.offset >= lines[li].end) ++li;
    if (tok.kind == TokenKind::kWhitespace || tok.kind == TokenKind::kNewline) continue;
    if (tok.kind == TokenKind::kComment) {
      for (std::size_t l = li; l < lines.size() && lines[l].begin < tok.end(); ++l)
        if (lines[l].kind == LineKind::kBlank) lines[l].kind = LineKind::kComment;
      continue;
    }
    lines[li].kind = LineKind::kCode;
    lines[li].code.push_back(t);
  }
  return lines;
}

constexpr std::array<std::string_view, 12> kControlWords = {
    "if", "for", "while", "switch", "catch", "else", "do", "try",
    "synchronized", "return", "new", "throw"};

bool is_annotation_line(const Line& line, const std::vector<Token>& toks) {
  return line.kind == LineKind::kCode && toks[line.code.front()].text == "@";
}

// Index of the method-name token if the line looks like a signature that
// opens a body on the same line.
std::optional<std::size_t> signature_name(const Line& line, const std::vector<Token>& toks) {
  if (line.kind != LineKind::kCode) return std::nullopt;
  const auto& code = line.code;
  if (toks[code.back()].text != "{") return std::nullopt;
  const auto& first = toks[code.front()];
  if (first.text == "}" || first.text == "@") return std::nullopt;
  for (auto t : code) {
    const auto& tok = toks[t];
    if (tok.text == "=" || tok.text == ";") return std::nullopt;
    if (std::find(kControlWords.begin(), kControlWords.end(), tok.text) != kControlWords.end())
      return std::nullopt;
  }
  for (std::size_t i = 1; i < code.size(); ++i) {
    if (toks[code[i]].text == "(" && toks[code[i - 1]].kind == TokenKind::kIdentifier)
      return code[i - 1];
  }
  return std::nullopt;
}

bool is_signature(const Line& line, const std::vector<Token>& toks) {
  return signature_name(line, toks).has_value();
}

}  // namespace

std::string_view to_string(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kSimulation: return "simulation";
    case Split::kTest: return "test";
  }
  return "?";
}

Split split_from_string(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "simulation") return Split::kSimulation;
  if (name == "test") return Split::kTest;
  throw Error("unknown split '" + std::string(name) + "'");
}

std::string_view to_string(MethodFiltering m) {
  switch (m) {
    case MethodFiltering::kOff: return "off";
    case MethodFiltering::kTrain: return "train";
    case MethodFiltering::kAll: return "all";
  }
  return "?";
}

MethodFiltering method_filtering_from_string(std::string_view name) {
  if (name == "off") return MethodFiltering::kOff;
  if (name == "train" || name == "on") return MethodFiltering::kTrain;
  if (name == "all") return MethodFiltering::kAll;
  throw ConfigError("method_filtering must be off|train|all, got '" + std::string(name) + "'");
}

bool filter_file(std::string_view path) {
  const auto slash = path.find_last_of("/\\");
  std::string name(slash == std::string_view::npos ? path : path.substr(slash + 1));
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return name.find("test") == std::string::npos;
}

bool filter_method(std::string_view method_name, std::size_t line_count) {
  static constexpr std::array<std::string_view, 4> kDropped = {"toString", "equals",
                                                               "finalize", "clone"};
  if (std::find(kDropped.begin(), kDropped.end(), method_name) != kDropped.end()) return false;
  return line_count <= 20;
}

std::string strip_comments(std::string_view text) {
  const auto toks = tokenize(text);
  const auto lines = analyze_lines(text, toks);

  // keep[l]: line l belongs to a comment run adjacent to a signature.
  std::vector<bool> keep(lines.size(), false);
  for (std::size_t l = 0; l < lines.size();) {
    if (lines[l].kind != LineKind::kComment) {
      ++l;
      continue;
    }
    std::size_t run_end = l;
    while (run_end < lines.size() && lines[run_end].kind == LineKind::kComment) ++run_end;
    bool adjacent = false;
    if (l > 0 && is_signature(lines[l - 1], toks)) adjacent = true;
    std::size_t next = run_end;
    while (next < lines.size() && is_annotation_line(lines[next], toks)) ++next;
    if (next < lines.size() && is_signature(lines[next], toks)) adjacent = true;
    if (adjacent)
      for (std::size_t k = l; k < run_end; ++k) keep[k] = true;
    l = run_end;
  }

  std::string out;
  out.reserve(text.size());
  std::size_t li = 0;
  for (const auto& tok : toks) {
    if (tok.kind != TokenKind::kComment) {
      out += tok.text;
      continue;
    }
    while (li + 1 < lines.size() && tok.offset >= lines[li].end) ++li;
    bool kept = true;
    for (std::size_t l = li; l < lines.size() && lines[l].begin < tok.end(); ++l)
      kept = kept && keep[l];
    const bool unterminated = tok.text.starts_with("/*") &&
                              (tok.text.size() < 4 || !tok.text.ends_with("*/"));
    if (unterminated) {
      spdlog::warn("unterminated block comment at offset {}; removed", tok.offset);
      kept = false;
    }
    if (kept) out += tok.text;
  }
  return out;
}

std::string remove_non_english(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if ((u >= 0x20 && u <= 0x7e) || c == '\t' || c == '\n') out.push_back(c);
  }
  return out;
}

void count_literals(std::string_view text, LiteralCounts& counts) {
  for (const auto& tok : tokenize(text)) {
    if (tok.kind == TokenKind::kString || tok.kind == TokenKind::kNumber) {
      auto it = counts.find(tok.text);
      if (it == counts.end())
        counts.emplace(std::string(tok.text), 1);
      else
        ++it->second;
    }
  }
}

std::string replace_literals(std::string_view text, const PreprocessConfig& cfg,
                             const LiteralCounts& literal_counts) {
  std::string out;
  out.reserve(text.size());
  for (const auto& tok : tokenize(text)) {
    const bool literal = tok.kind == TokenKind::kString || tok.kind == TokenKind::kNumber;
    if (literal && tok.text.size() > cfg.string_len_threshold) {
      auto it = literal_counts.find(tok.text);
      const std::uint64_t count = it == literal_counts.end() ? 0 : it->second;
      if (count < cfg.string_freq_threshold) {
        out += tok.kind == TokenKind::kString ? cfg.placeholder_string : cfg.placeholder_number;
        continue;
      }
    }
    out += tok.text;
  }
  return out;
}

std::vector<MethodSpan> find_methods(std::string_view text) {
  const auto toks = tokenize(text);
  const auto lines = analyze_lines(text, toks);
  std::vector<MethodSpan> methods;
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const auto name_tok = signature_name(lines[l], toks);
    if (!name_tok) continue;
    // Brace-match from the '{' that ends the signature line.
    int depth = 0;
    std::size_t close = toks.size();
    for (std::size_t t = lines[l].code.back(); t < toks.size(); ++t) {
      if (toks[t].kind != TokenKind::kSymbol) continue;
      if (toks[t].text == "{") ++depth;
      if (toks[t].text == "}" && --depth == 0) {
        close = t;
        break;
      }
    }
    if (close == toks.size()) continue;
    std::size_t last = l;
    while (last + 1 < lines.size() && lines[last].end <= toks[close].offset) ++last;
    std::size_t first = l;
    while (first > 0 && (is_annotation_line(lines[first - 1], toks) ||
                         lines[first - 1].kind == LineKind::kComment))
      --first;
    methods.push_back(MethodSpan{std::string(toks[*name_tok].text), lines[first].begin,
                                 lines[last].end, last - l + 1});
    l = last;
  }
  return methods;
}

std::string excise_methods(std::string_view text) {
  std::string out;
  std::size_t pos = 0;
  for (const auto& m : find_methods(text)) {
    if (filter_method(m.name, m.line_count)) continue;
    out += text.substr(pos, m.begin - pos);
    pos = m.end;
  }
  out += text.substr(pos);
  return out;
}

void split_corpus(std::vector<CodeFile>& files, const SplitRatios& ratios, std::uint64_t seed) {
  if (files.empty()) throw Error("split_corpus: empty corpus");
  const std::array<double, 3> r = {ratios.train, ratios.simulation, ratios.test};
  if (std::any_of(r.begin(), r.end(), [](double x) { return x < 0; }) ||
      std::abs(r[0] + r[1] + r[2] - 1.0) > 1e-9)
    throw ConfigError("split ratios must be non-negative and sum to 1");

  // Largest-remainder split sizes.
  const auto n = files.size();
  std::array<std::size_t, 3> sizes{};
  std::array<double, 3> rem{};
  std::size_t assigned = 0;
  for (int i = 0; i < 3; ++i) {
    const double exact = r[i] * static_cast<double>(n);
    sizes[i] = static_cast<std::size_t>(std::floor(exact + 1e-9));
    rem[i] = exact - static_cast<double>(sizes[i]);
    assigned += sizes[i];
  }
  while (assigned < n) {
    int best = 0;
    for (int i = 1; i < 3; ++i)
      if (rem[i] > rem[best] + 1e-12) best = i;
    ++sizes[best];
    rem[best] = -1;
    ++assigned;
  }

  // Shuffle within each project, then interleave projects by relative
  // position so every split prefix draws from all projects evenly.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return files[a].path < files[b].path; });
  std::map<std::string, std::vector<std::size_t>> by_project;
  for (auto i : order) by_project[files[i].project_id].push_back(i);

  std::mt19937_64 rng(seed);
  struct Slot {
    double quantile;
    std::string project;
    std::size_t file;
  };
  std::vector<Slot> slots;
  for (auto& [project, members] : by_project) {
    for (std::size_t i = members.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(rng() % i);
      std::swap(members[i - 1], members[j]);
    }
    for (std::size_t i = 0; i < members.size(); ++i)
      slots.push_back({(static_cast<double>(i) + 0.5) / static_cast<double>(members.size()),
                       project, members[i]});
  }
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
    return std::tie(a.quantile, a.project) < std::tie(b.quantile, b.project);
  });
  std::size_t k = 0;
  for (int s = 0; s < 3; ++s)
    for (std::size_t c = 0; c < sizes[s]; ++c) files[slots[k++].file].split = static_cast<Split>(s);
}

std::vector<const CodeFile*> Corpus::in_split(Split split) const {
  std::vector<const CodeFile*> out;
  for (const auto& f : files)
    if (f.split == split) out.push_back(&f);
  return out;
}

const CodeFile* Corpus::find(std::string_view path) const {
  for (const auto& f : files)
    if (f.path == path) return &f;
  return nullptr;
}

Corpus ingest(const std::filesystem::path& root, const IngestOptions& options) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root)) throw MissingArtifact("ingest", "corpus directory not found: " + root.string());

  std::vector<fs::path> paths;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension().string();
    if (std::find(options.extensions.begin(), options.extensions.end(), ext) ==
        options.extensions.end())
      continue;
    paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());

  Corpus corpus;
  for (const auto& p : paths) {
    const auto rel = fs::relative(p, root).generic_string();
    if (!filter_file(rel)) continue;
    std::string raw;
    try {
      raw = read_file(p);
    } catch (const std::exception& e) {
      spdlog::warn("skipping unreadable file {}: {}", rel, e.what());
      continue;
    }
    const auto slash = rel.find('/');
    CodeFile f;
    f.path = rel;
    f.project_id = slash == std::string::npos ? "default" : rel.substr(0, slash);
    f.text = remove_non_english(raw);
    corpus.files.push_back(std::move(f));
  }
  split_corpus(corpus.files, options.ratios, options.seed);

  for (auto& f : corpus.files) {
    const bool excise = options.method_filtering == MethodFiltering::kAll ||
                        (options.method_filtering == MethodFiltering::kTrain &&
                         f.split == Split::kTrain);
    if (excise) f.text = excise_methods(f.text);
    f.text = strip_comments(f.text);
  }

  LiteralCounts counts;
  for (const auto& f : corpus.files)
    if (f.split == Split::kTrain) count_literals(f.text, counts);
  for (auto& f : corpus.files) f.text = replace_literals(f.text, options.preprocess, counts);
  return corpus;
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& out_dir) {
  json files = json::array();
  for (const auto& f : corpus.files) {
    write_file_atomic(out_dir / "files" / f.path, f.text);
    files.push_back({{"path", f.path},
                     {"project_id", f.project_id},
                     {"split", to_string(f.split)},
                     {"byte_length", f.text.size()},
                     {"digest", hex64(fnv1a64(f.text))}});
  }
  json manifest = {{"version", 1}, {"files", std::move(files)}};
  write_file_atomic(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

Corpus load_corpus(const std::filesystem::path& out_dir) {
  const auto manifest_path = out_dir / "manifest.json";
  if (!std::filesystem::exists(manifest_path))
    throw MissingArtifact("ingest", "corpus manifest not found: " + manifest_path.string());
  const auto manifest = json::parse(read_file(manifest_path));
  Corpus corpus;
  for (const auto& e : manifest.at("files")) {
    CodeFile f;
    f.path = e.at("path").get<std::string>();
    f.project_id = e.at("project_id").get<std::string>();
    f.split = split_from_string(e.at("split").get<std::string>());
    f.text = read_file(out_dir / "files" / f.path);
    corpus.files.push_back(std::move(f));
  }
  return corpus;
}

}  // namespace cce
