#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cce {

enum class Split { kTrain, kSimulation, kTest };

std::string_view to_string(Split split);
Split split_from_string(std::string_view name);

struct CodeFile {
  std::string path;        // relative to the corpus root, '/' separated
  std::string text;        // preprocessed
  std::string project_id;  // first path component
  Split split = Split::kTrain;
};

struct PreprocessConfig {
  std::size_t string_len_threshold = 32;
  std::size_t string_freq_threshold = 10;
  std::string placeholder_string = "\"__STR__\"";
  std::string placeholder_number = "__NUM__";
};

enum class MethodFiltering { kOff, kTrain, kAll };

std::string_view to_string(MethodFiltering m);
MethodFiltering method_filtering_from_string(std::string_view name);

struct SplitRatios {
  double train = 0.6;
  double simulation = 0.24;
  double test = 0.16;
};

// Keep/drop decisions. True means keep.
bool filter_file(std::string_view path);
bool filter_method(std::string_view method_name, std::size_t line_count);

// Keeps pure comment lines directly above a method signature (annotation
// lines may sit in between) and pure comment lines directly below a
// signature that opens a body; every other comment token is removed. Bytes
// outside comments are untouched. Unterminated block comments are removed
// with a warning.
std::string strip_comments(std::string_view text);

// Deletes every character outside printable ASCII, tab and newline.
// Multi-byte UTF-8 sequences disappear as a whole.
std::string remove_non_english(std::string_view text);

using LiteralCounts = std::map<std::string, std::uint64_t, std::less<>>;

// Adds the string and number literal occurrences of `text` to `counts`.
void count_literals(std::string_view text, LiteralCounts& counts);

// A literal becomes the placeholder iff its length exceeds
// string_len_threshold and its count is below string_freq_threshold.
std::string replace_literals(std::string_view text, const PreprocessConfig& cfg,
                             const LiteralCounts& literal_counts);

struct MethodSpan {
  std::string name;
  std::size_t begin = 0;  // offset of the first character of the signature line
  std::size_t end = 0;    // one past the newline after the closing brace
  std::size_t line_count = 0;
};

// Methods found by signature/brace matching, in file order.
std::vector<MethodSpan> find_methods(std::string_view text);

// Removes the methods `filter_method` drops.
std::string excise_methods(std::string_view text);

// Assigns splits in place. Deterministic for a fixed seed; split sizes
// follow the ratios by largest remainder and every project is spread across
// the splits proportionally. Throws on an empty corpus or ratios that do
// not sum to 1.
void split_corpus(std::vector<CodeFile>& files, const SplitRatios& ratios,
                  std::uint64_t seed);

struct IngestOptions {
  PreprocessConfig preprocess;
  SplitRatios ratios;
  std::uint64_t seed = 7;
  MethodFiltering method_filtering = MethodFiltering::kTrain;
  std::vector<std::string> extensions = {".java"};
};

struct Corpus {
  std::vector<CodeFile> files;  // sorted by path

  std::vector<const CodeFile*> in_split(Split split) const;
  const CodeFile* find(std::string_view path) const;
};

// Walks `root`, filters, preprocesses and splits. Unreadable files are
// skipped with a warning.
Corpus ingest(const std::filesystem::path& root, const IngestOptions& options);

// Writes files under <out_dir>/files/<path> and <out_dir>/manifest.json.
void write_corpus(const Corpus& corpus, const std::filesystem::path& out_dir);
Corpus load_corpus(const std::filesystem::path& out_dir);

}  // namespace cce
