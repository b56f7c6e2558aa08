#include "herdscope/herd.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include <fmt/format.h>

#include "herdscope/error.hpp"

namespace herdscope {

std::vector<AuthorProfile> profile_authors(const Corpus& corpus,
                                           std::span<const SentimentScore> scores,
                                           const SocialGraph& graph) {
  if (scores.size() != corpus.records.size())
    throw DataError(fmt::format("{} scores for {} records", scores.size(),
                                corpus.records.size()));

  struct Acc {
    double subjectivity = 0.0;
    double polarity = 0.0;
    std::size_t count = 0;
  };
  std::map<std::string, Acc, std::less<>> by_author;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const auto& rec = corpus.records[i];
    if (scores[i].tweet_id != rec.tweet_id)
      throw DataError(fmt::format("score for '{}' does not match record '{}'",
                                  scores[i].tweet_id, rec.tweet_id));
    auto& acc = by_author[rec.author_id];
    acc.subjectivity += scores[i].subjectivity;
    acc.polarity += scores[i].polarity;
    ++acc.count;
  }

  std::vector<AuthorProfile> profiles;
  profiles.reserve(by_author.size());
  for (const auto& [author, acc] : by_author) {
    auto n = static_cast<double>(acc.count);
    AuthorProfile p;
    p.author_id = author;
    p.mean_subjectivity = std::clamp(acc.subjectivity / n, 0.0, 1.0);
    p.mean_polarity = std::clamp(acc.polarity / n, -1.0, 1.0);
    p.tweet_count = acc.count;
    if (auto v = graph.find(author)) p.local_clustering = local_clustering(graph, *v);
    profiles.push_back(std::move(p));
  }
  return profiles;
}

void validate_band_edges(std::span<const double> edges) {
  if (edges.size() < 2)
    throw ConfigError("band_edges needs at least two values");
  if (edges.front() != 0.0 || edges.back() != 1.0)
    throw ConfigError("band_edges must start at 0 and end at 1");
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (!(edges[i] > edges[i - 1]))
      throw ConfigError("band_edges must be strictly increasing");
  }
}

HerdReport herd_report(std::span<const AuthorProfile> profiles,
                       std::span<const double> band_edges, double threshold) {
  validate_band_edges(band_edges);
  if (profiles.empty()) throw DataError("herd report needs at least one profile");

  HerdReport report;
  report.threshold = threshold;
  const std::size_t nbands = band_edges.size() - 1;
  std::vector<double> sums(nbands, 0.0);
  report.bands.resize(nbands);
  for (std::size_t b = 0; b < nbands; ++b) {
    report.bands[b].lower = band_edges[b];
    report.bands[b].upper = band_edges[b + 1];
  }

  double total = 0.0;
  for (const auto& p : profiles) {
    // first edge strictly above s, minus one; s == 1 falls in the last band
    auto it = std::upper_bound(band_edges.begin(), band_edges.end(), p.mean_subjectivity);
    std::size_t b = static_cast<std::size_t>(it - band_edges.begin());
    b = std::clamp<std::size_t>(b, 1, nbands) - 1;
    sums[b] += p.local_clustering;
    ++report.bands[b].author_count;
    total += p.local_clustering;
  }
  for (std::size_t b = 0; b < nbands; ++b) {
    if (report.bands[b].author_count > 0)
      report.bands[b].mean_clustering =
          sums[b] / static_cast<double>(report.bands[b].author_count);
  }
  report.global_mean_clustering = total / static_cast<double>(profiles.size());

  const auto& top = report.bands.back();
  if (top.author_count > 0) {
    report.herd_index = top.mean_clustering - report.global_mean_clustering;
    report.herd_flag = report.herd_index > threshold;
  }
  return report;
}

void CampConfig::validate() const {
  std::set<std::string, std::less<>> ids;
  for (const auto& c : camps) {
    if (c.id.empty()) throw ConfigError("camp id must be non-empty");
    if (!ids.insert(c.id).second)
      throw ConfigError(fmt::format("duplicate camp id '{}'", c.id));
    if (c.keywords.empty())
      throw ConfigError(fmt::format("camp '{}' has no keywords", c.id));
    for (const auto& k : c.keywords) {
      bool lower = !k.empty() && std::none_of(k.begin(), k.end(), [](char ch) {
        return (ch >= 'A' && ch <= 'Z') || ch == ' ' || ch == '\t';
      });
      if (!lower)
        throw ConfigError(fmt::format("camp '{}': keyword '{}' must be lowercase "
                                      "and non-empty", c.id, k));
    }
  }
}

CampAssignment assign_camp(const TokenDoc& doc, const TweetRecord& record,
                           const CampConfig& camps) {
  std::set<std::string_view> terms(doc.tokens.begin(), doc.tokens.end());
  terms.insert(record.hashtags.begin(), record.hashtags.end());

  std::size_t best_hits = 0;
  std::size_t best = 0;
  bool tie = false;
  for (std::size_t c = 0; c < camps.camps.size(); ++c) {
    const auto& kw = camps.camps[c].keywords;
    auto hits = static_cast<std::size_t>(std::count_if(
        terms.begin(), terms.end(), [&](std::string_view t) { return kw.contains(t); }));
    if (hits == 0) continue;
    if (hits > best_hits) {
      best_hits = hits;
      best = c;
      tie = false;
    } else if (hits == best_hits) {
      tie = true;
    }
  }
  CampAssignment a;
  if (best_hits == 0) return a;
  if (tie) {
    a.tie = true;
    return a;
  }
  a.camp = best;
  return a;
}

namespace {

// a.support > b.support, compared exactly on the integer counts
bool higher_support(const CampResult& a, const CampResult& b) {
  auto net = [](const CampResult& r) {
    return static_cast<std::int64_t>(r.positive) - static_cast<std::int64_t>(r.negative);
  };
  return net(a) * static_cast<std::int64_t>(b.tweet_count) >
         net(b) * static_cast<std::int64_t>(a.tweet_count);
}

}  // namespace

PredictionReport predict(std::span<const SentimentScore> scores,
                         std::span<const CampAssignment> assignments,
                         const CampConfig& camps, const HerdReport& herd) {
  if (scores.size() != assignments.size())
    throw DataError(fmt::format("{} scores for {} camp assignments", scores.size(),
                                assignments.size()));

  PredictionReport report;
  report.herd_index = herd.herd_index;
  report.herd_flag = herd.herd_flag;

  std::vector<CampResult> results(camps.camps.size());
  for (std::size_t c = 0; c < results.size(); ++c) results[c].camp_id = camps.camps[c].id;

  for (std::size_t i = 0; i < scores.size(); ++i) {
    const auto& a = assignments[i];
    if (a.tie) ++report.ties;
    if (!a.camp) {
      ++report.unassigned;
      continue;
    }
    auto& r = results.at(*a.camp);
    ++r.tweet_count;
    switch (scores[i].label) {
      case Label::Positive: ++r.positive; break;
      case Label::Negative: ++r.negative; break;
      case Label::Neutral: ++r.neutral; break;
    }
  }

  std::vector<CampResult> active;
  std::vector<CampResult> silent;
  for (auto& r : results) {
    if (r.tweet_count == 0) {
      silent.push_back(std::move(r));
      continue;
    }
    r.support = static_cast<double>(static_cast<std::int64_t>(r.positive) -
                                    static_cast<std::int64_t>(r.negative)) /
                static_cast<double>(r.tweet_count);
    r.positive_pct = truncated_percent(r.positive, r.tweet_count);
    r.negative_pct = truncated_percent(r.negative, r.tweet_count);
    r.neutral_pct = truncated_percent(r.neutral, r.tweet_count);
    active.push_back(std::move(r));
  }
  if (active.empty()) throw DataError("no camp signal");

  std::stable_sort(active.begin(), active.end(), higher_support);
  for (std::size_t i = 0; i < active.size(); ++i) {
    active[i].rank = (i > 0 && !higher_support(active[i - 1], active[i]))
                         ? active[i - 1].rank
                         : i + 1;
  }
  for (auto& r : silent) r.rank = active.size() + 1;

  report.degenerate = active.size() < 2;
  if (active.size() == 1 || active[1].rank > 1) report.winner = active.front().camp_id;
  if (active.size() >= 2) report.margin = active[0].support - active[1].support;

  report.ranking = std::move(active);
  report.ranking.insert(report.ranking.end(), std::make_move_iterator(silent.begin()),
                        std::make_move_iterator(silent.end()));
  return report;
}

}  // namespace herdscope
