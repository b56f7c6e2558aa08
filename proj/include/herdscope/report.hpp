#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "herdscope/graph.hpp"
#include "herdscope/herd.hpp"
#include "herdscope/sentiment.hpp"

// Text renderers for every report file. All numbers use fixed formatting
// (6 decimals, percentages truncated to 2) so output is byte-stable.
namespace herdscope::report {

std::string fixed6(double value);
std::string csv_field(std::string_view value);
std::string sha256_hex(std::string_view bytes);

std::string scores_csv(std::span<const SentimentScore> scores);
std::string summary_csv(const CorpusSummary& summary);
/// Human-readable block printed by `score`.
std::string summary_text(const CorpusSummary& summary, std::string_view source_label);

std::string subjectivity_scatter_csv(std::span<const SentimentScore> scores);
std::string polarity_scatter_csv(std::span<const SentimentScore> scores);
std::string combined_scatter_csv(std::span<const SentimentScore> scores);

std::string graph_stats_csv(const SocialGraph& g, const ClusteringStats& stats);
std::string degree_distribution_csv(const ClusteringStats& stats);
std::string local_clustering_csv(const SocialGraph& g, const ClusteringStats& stats);
std::string ck_curve_csv(const ClusteringStats& stats);

std::string author_profiles_csv(std::span<const AuthorProfile> profiles);
std::string herd_bands_csv(const HerdReport& herd);
std::string herd_summary_csv(const HerdReport& herd);

struct ReferenceComparison {
  std::string reference_winner;
  bool agrees = false;
};

/// Winner of the reference shares compared with the predicted winner;
/// nullopt without reference data or when the reference top is tied.
std::optional<ReferenceComparison> compare_reference(
    const PredictionReport& prediction,
    const std::map<std::string, double>& reference_shares);

std::string prediction_csv(const PredictionReport* prediction);
/// `error` is the failure marker when prediction could not be produced.
std::string prediction_summary_csv(const PredictionReport* prediction,
                                   std::string_view error,
                                   const std::map<std::string, double>& reference_shares);

}  // namespace herdscope::report
