#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "herdscope/herd.hpp"
#include "herdscope/preprocess.hpp"
#include "herdscope/sentiment.hpp"

namespace herdscope {

/// Run configuration as read from JSON. Relative data paths resolve against
/// the directory holding the config file.
struct RunConfig {
  std::vector<double> band_edges = kDefaultBandEdges;
  double herd_threshold = kDefaultHerdThreshold;
  CampConfig camps;
  std::filesystem::path lexicon_path;
  std::filesystem::path stopwords_path;
  std::filesystem::path negation_path;
  std::filesystem::path stemmer_rules_path;
  /// Optional published outcome (camp id -> vote share %) compared against
  /// the predicted ranking.
  std::map<std::string, double> reference_shares;

  static RunConfig load(const std::filesystem::path& path);
  static RunConfig parse(std::string_view json_text,
                         const std::filesystem::path& base_dir);
};

/// Loaded data files a run needs.
struct Resources {
  Lexicon lexicon;
  Preprocessor preprocessor;
  Stoplist negations;

  static Resources load(const RunConfig& config);
};

}  // namespace herdscope
