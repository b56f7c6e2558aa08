#include "herdscope/report.hpp"

#include <openssl/evp.h>

#include <array>

#include <fmt/format.h>

#include "herdscope/error.hpp"

namespace herdscope::report {

namespace {

std::string_view yes_no(bool b) { return b ? "true" : "false"; }

template <typename Row>
std::string scatter(std::span<const SentimentScore> scores, std::string_view header,
                    Row row) {
  std::string out(header);
  out += '\n';
  for (std::size_t i = 0; i < scores.size(); ++i) {
    out += fmt::format("{},", i + 1);
    out += row(scores[i]);
    out += '\n';
  }
  return out;
}

}  // namespace

std::string fixed6(double value) {
  auto s = fmt::format("{:.6f}", value);
  if (s == "-0.000000") s.erase(0, 1);
  return s;
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(),
                 nullptr) != 1)
    throw Error("sha256 digest failed");
  std::string hex;
  hex.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

std::string scores_csv(std::span<const SentimentScore> scores) {
  std::string out = "tweet_id,polarity,subjectivity,label\n";
  for (const auto& s : scores) {
    out += fmt::format("{},{},{},{}\n", csv_field(s.tweet_id), fixed6(s.polarity),
                       fixed6(s.subjectivity), to_string(s.label));
  }
  return out;
}

std::string summary_csv(const CorpusSummary& s) {
  return fmt::format(
      "label,count,percent\nNEGATIVE,{},{}\nPOSITIVE,{},{}\nNEUTRAL,{},{}\nTOTAL,{},\n",
      s.negative, s.negative_pct.str(), s.positive, s.positive_pct.str(), s.neutral,
      s.neutral_pct.str(), s.total);
}

std::string summary_text(const CorpusSummary& s, std::string_view source_label) {
  return fmt::format(
      "source: {}\n"
      "tweets: {}\n"
      "negative: {} %\n"
      "positive: {} %\n"
      "neutral: {} %\n",
      source_label.empty() ? "-" : source_label, s.total, s.negative_pct.str(),
      s.positive_pct.str(), s.neutral_pct.str());
}

std::string subjectivity_scatter_csv(std::span<const SentimentScore> scores) {
  return scatter(scores, "index,subjectivity",
                 [](const SentimentScore& s) { return fixed6(s.subjectivity); });
}

std::string polarity_scatter_csv(std::span<const SentimentScore> scores) {
  return scatter(scores, "index,polarity",
                 [](const SentimentScore& s) { return fixed6(s.polarity); });
}

std::string combined_scatter_csv(std::span<const SentimentScore> scores) {
  return scatter(scores, "index,subjectivity,polarity", [](const SentimentScore& s) {
    return fixed6(s.subjectivity) + "," + fixed6(s.polarity);
  });
}

std::string graph_stats_csv(const SocialGraph& g, const ClusteringStats& stats) {
  return fmt::format(
      "metric,value\n"
      "nodes,{}\n"
      "edges,{}\n"
      "triangles,{}\n"
      "connected_triples,{}\n"
      "mean_clustering,{}\n"
      "global_clustering,{}\n",
      g.node_count(), g.edge_count(), stats.triangles, stats.connected_triples,
      fixed6(stats.mean_clustering), fixed6(stats.global_clustering));
}

std::string degree_distribution_csv(const ClusteringStats& stats) {
  std::string out = "degree,count\n";
  for (const auto& [k, n] : stats.degree_distribution) out += fmt::format("{},{}\n", k, n);
  return out;
}

std::string local_clustering_csv(const SocialGraph& g, const ClusteringStats& stats) {
  std::string out = "author_id,degree,clustering\n";
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    out += fmt::format("{},{},{}\n", csv_field(g.id(v)), stats.degree[v],
                       fixed6(stats.local[v]));
  }
  return out;
}

std::string ck_curve_csv(const ClusteringStats& stats) {
  std::string out = "degree,mean_clustering,node_count\n";
  for (const auto& p : stats.ck_curve)
    out += fmt::format("{},{},{}\n", p.degree, fixed6(p.mean_clustering), p.node_count);
  return out;
}

std::string author_profiles_csv(std::span<const AuthorProfile> profiles) {
  std::string out =
      "author_id,tweet_count,mean_subjectivity,mean_polarity,local_clustering\n";
  for (const auto& p : profiles) {
    out += fmt::format("{},{},{},{},{}\n", csv_field(p.author_id), p.tweet_count,
                       fixed6(p.mean_subjectivity), fixed6(p.mean_polarity),
                       fixed6(p.local_clustering));
  }
  return out;
}

std::string herd_bands_csv(const HerdReport& herd) {
  std::string out = "band_lower,band_upper,author_count,mean_clustering\n";
  for (const auto& b : herd.bands) {
    out += fmt::format("{},{},{},{}\n", fixed6(b.lower), fixed6(b.upper), b.author_count,
                       fixed6(b.mean_clustering));
  }
  return out;
}

std::string herd_summary_csv(const HerdReport& herd) {
  return fmt::format(
      "metric,value\n"
      "global_mean_clustering,{}\n"
      "top_band_mean_clustering,{}\n"
      "herd_index,{}\n"
      "herd_threshold,{}\n"
      "herd_flag,{}\n",
      fixed6(herd.global_mean_clustering),
      fixed6(herd.bands.empty() ? 0.0 : herd.bands.back().mean_clustering),
      fixed6(herd.herd_index), fixed6(herd.threshold), yes_no(herd.herd_flag));
}

std::optional<ReferenceComparison> compare_reference(
    const PredictionReport& prediction,
    const std::map<std::string, double>& reference_shares) {
  if (reference_shares.empty()) return std::nullopt;
  auto best = reference_shares.begin();
  bool tied = false;
  for (auto it = std::next(reference_shares.begin()); it != reference_shares.end(); ++it) {
    if (it->second > best->second) {
      best = it;
      tied = false;
    } else if (it->second == best->second) {
      tied = true;
    }
  }
  if (tied) return std::nullopt;
  return ReferenceComparison{best->first,
                             prediction.winner && *prediction.winner == best->first};
}

std::string prediction_csv(const PredictionReport* prediction) {
  std::string out =
      "rank,camp_id,tweet_count,positive,negative,neutral,positive_pct,negative_pct,"
      "neutral_pct,support\n";
  if (prediction == nullptr) return out;
  for (const auto& r : prediction->ranking) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", r.rank, csv_field(r.camp_id),
                       r.tweet_count, r.positive, r.negative, r.neutral,
                       r.positive_pct.str(), r.negative_pct.str(), r.neutral_pct.str(),
                       fixed6(r.support));
  }
  return out;
}

std::string prediction_summary_csv(const PredictionReport* prediction,
                                   std::string_view error,
                                   const std::map<std::string, double>& reference_shares) {
  std::string out = "metric,value\n";
  if (prediction == nullptr) {
    out += "status,error\n";
    out += fmt::format("error,{}\n", csv_field(error));
    return out;
  }
  const auto& p = *prediction;
  out += "status,ok\n";
  out += fmt::format("winner,{}\n", p.winner ? csv_field(*p.winner) : "undecided");
  out += fmt::format("margin,{}\n", fixed6(p.margin));
  out += fmt::format("degenerate,{}\n", yes_no(p.degenerate));
  out += fmt::format("assignment_ties,{}\n", p.ties);
  out += fmt::format("unassigned,{}\n", p.unassigned);
  out += fmt::format("herd_index,{}\n", fixed6(p.herd_index));
  out += fmt::format("herd_flag,{}\n", yes_no(p.herd_flag));
  for (const auto& [camp, share] : reference_shares)
    out += fmt::format("reference_share:{},{}\n", csv_field(camp), fixed6(share));
  if (auto cmp = compare_reference(p, reference_shares)) {
    out += fmt::format("reference_winner,{}\n", csv_field(cmp->reference_winner));
    out += fmt::format("agrees_with_reference,{}\n", yes_no(cmp->agrees));
  }
  return out;
}

}  // namespace herdscope::report
