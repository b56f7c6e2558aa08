#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "herdscope/config.hpp"
#include "herdscope/corpus.hpp"
#include "herdscope/preprocess.hpp"
#include "herdscope/sentiment.hpp"

namespace herdscope {

inline constexpr const char* kPipelineVersion = "herdscope-pipeline/" HERDSCOPE_VERSION;

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitData = 1, kExitIo = 2 };

struct RunOptions {
  std::filesystem::path config_path;
  std::vector<std::filesystem::path> corpus_paths;
  std::filesystem::path out_dir = "herdscope_out";
  std::optional<std::string> hashtag;
};

/// Extract + transform + score, shared by `score` and `analyze`.
struct ScoredCorpus {
  Corpus corpus;  // after the optional hashtag filter
  LoadReport load;
  std::size_t valid_records = 0;  // before filtering
  std::vector<TokenDoc> docs;
  std::vector<SentimentScore> scores;
  CorpusSummary summary;
};

ScoredCorpus load_and_score(const RunOptions& options, const Resources& resources);

int cmd_validate(const std::filesystem::path& corpus_path, std::ostream& out,
                 std::ostream& err);
int cmd_score(const RunOptions& options, std::ostream& out, std::ostream& err);
int cmd_analyze(const RunOptions& options, std::ostream& out, std::ostream& err);
int cmd_plot(const std::filesystem::path& bundle_dir, std::ostream& out,
             std::ostream& err);

}  // namespace herdscope
