#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "herdscope/corpus.hpp"
#include "herdscope/graph.hpp"
#include "herdscope/preprocess.hpp"
#include "herdscope/sentiment.hpp"

namespace herdscope {

struct AuthorProfile {
  std::string author_id;
  double mean_subjectivity = 0.0;
  double mean_polarity = 0.0;
  std::size_t tweet_count = 0;
  double local_clustering = 0.0;
};

/// One profile per author with at least one scored tweet, sorted by author id.
/// `scores[i]` must belong to `corpus.records[i]`.
std::vector<AuthorProfile> profile_authors(const Corpus& corpus,
                                           std::span<const SentimentScore> scores,
                                           const SocialGraph& graph);

inline const std::vector<double> kDefaultBandEdges{0.0, 0.5, 0.8, 1.0};
inline constexpr double kDefaultHerdThreshold = 0.0;

struct SubjectivityBand {
  double lower = 0.0;
  double upper = 0.0;  // exclusive, except the last band which closes at 1
  std::size_t author_count = 0;
  double mean_clustering = 0.0;
};

struct HerdReport {
  std::vector<SubjectivityBand> bands;
  double global_mean_clustering = 0.0;
  double herd_index = 0.0;
  double threshold = kDefaultHerdThreshold;
  bool herd_flag = false;
};

/// Throws ConfigError unless edges are strictly increasing from 0 to 1.
void validate_band_edges(std::span<const double> edges);

/// herd_index = mean clustering of the top subjectivity band minus the mean
/// over every profile; an empty top band gives index 0 and no flag.
/// Throws DataError on empty profiles.
HerdReport herd_report(std::span<const AuthorProfile> profiles,
                       std::span<const double> band_edges = kDefaultBandEdges,
                       double threshold = kDefaultHerdThreshold);

struct Camp {
  std::string id;
  std::set<std::string, std::less<>> keywords;
};

struct CampConfig {
  std::vector<Camp> camps;

  /// Unique ids, non-empty lowercase keyword sets. Throws ConfigError.
  void validate() const;
};

struct CampAssignment {
  std::optional<std::size_t> camp;  // index into CampConfig::camps
  bool tie = false;
};

/// Camp with the most distinct keyword hits among tokens and hashtags.
/// No hits or a shared maximum leaves the tweet unassigned.
CampAssignment assign_camp(const TokenDoc& doc, const TweetRecord& record,
                           const CampConfig& camps);

struct CampResult {
  std::string camp_id;
  std::size_t tweet_count = 0;
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t neutral = 0;
  Percent positive_pct;
  Percent negative_pct;
  Percent neutral_pct;
  double support = 0.0;  // (positive - negative) / tweet_count
  std::size_t rank = 0;  // 1-based; equal support shares a rank
};

struct PredictionReport {
  std::vector<CampResult> ranking;
  std::optional<std::string> winner;  // empty when the top is tied
  double margin = 0.0;
  bool degenerate = false;  // fewer than two camps carry tweets
  std::size_t ties = 0;
  std::size_t unassigned = 0;
  double herd_index = 0.0;
  bool herd_flag = false;
};

/// Ranks camps by support score. Herd figures are carried as context only.
/// Throws DataError("no camp signal") when no tweet is assigned.
PredictionReport predict(std::span<const SentimentScore> scores,
                         std::span<const CampAssignment> assignments,
                         const CampConfig& camps, const HerdReport& herd);

}  // namespace herdscope
