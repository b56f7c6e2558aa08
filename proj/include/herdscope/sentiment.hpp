#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "herdscope/preprocess.hpp"

namespace herdscope {

enum class Label { Negative, Neutral, Positive };

std::string_view to_string(Label label);
Label label_for(double polarity);

struct LexiconEntry {
  double polarity = 0.0;      // [-1, 1]
  double subjectivity = 0.0;  // [0, 1]
};

class Lexicon {
 public:
  Lexicon() = default;

  /// Throws DataError on out-of-range values or a repeated term.
  void add(std::string term, LexiconEntry entry);

  const LexiconEntry* find(std::string_view term) const;
  std::size_t size() const noexcept { return entries_.size(); }
  const auto& entries() const noexcept { return entries_; }

  static Lexicon load(const std::filesystem::path& path);
  static Lexicon parse(std::istream& in);

 private:
  std::map<std::string, LexiconEntry, std::less<>> entries_;
};

struct SentimentScore {
  std::string tweet_id;
  double polarity = 0.0;
  double subjectivity = 0.0;
  Label label = Label::Neutral;
  std::size_t matched_terms = 0;
};

/// Mean lexicon polarity and subjectivity over matched tokens. A matched
/// token directly after a negation word contributes -0.5 times its polarity.
/// No matches scores (0, 0, Neutral).
SentimentScore score_tokens(const TokenDoc& doc, const Lexicon& lexicon,
                            const Stoplist& negations);

inline constexpr double kNegationFactor = -0.5;

/// Percentage truncated (not rounded) to hundredths, held as an integer
/// count of hundredths so formatting is exact.
struct Percent {
  long long hundredths = 0;
  std::string str() const;  // "36.56"
  friend bool operator==(Percent, Percent) = default;
};

Percent truncated_percent(std::size_t count, std::size_t total);

struct CorpusSummary {
  std::size_t total = 0;
  std::size_t negative = 0;
  std::size_t positive = 0;
  std::size_t neutral = 0;
  Percent negative_pct;
  Percent positive_pct;
  Percent neutral_pct;
};

CorpusSummary summarize(std::span<const SentimentScore> scores);

}  // namespace herdscope
