#include "herdscope/sentiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include <fmt/format.h>

#include "herdscope/error.hpp"

namespace herdscope {

std::string_view to_string(Label label) {
  switch (label) {
    case Label::Negative: return "NEGATIVE";
    case Label::Positive: return "POSITIVE";
    case Label::Neutral: break;
  }
  return "NEUTRAL";
}

Label label_for(double polarity) {
  if (polarity > 0.0) return Label::Positive;
  if (polarity < 0.0) return Label::Negative;
  return Label::Neutral;
}

void Lexicon::add(std::string term, LexiconEntry entry) {
  if (!(entry.polarity >= -1.0 && entry.polarity <= 1.0))
    throw DataError(fmt::format("lexicon term '{}': polarity {} outside [-1, 1]",
                                term, entry.polarity));
  if (!(entry.subjectivity >= 0.0 && entry.subjectivity <= 1.0))
    throw DataError(fmt::format(
        "lexicon term '{}': subjectivity {} outside [0, 1]", term,
        entry.subjectivity));
  auto [it, inserted] = entries_.emplace(std::move(term), entry);
  if (!inserted)
    throw DataError(fmt::format("duplicate lexicon term '{}'", it->first));
}

const LexiconEntry* Lexicon::find(std::string_view term) const {
  auto it = entries_.find(term);
  return it == entries_.end() ? nullptr : &it->second;
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot read lexicon '{}'", path.string()));
  return parse(in);
}

// Fields are tab separated; runs of blanks are accepted too so hand-written
// files ("good 0.7 0.6") load.
Lexicon Lexicon::parse(std::istream& in) {
  Lexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::string term, rest;
    double pol = 0.0, subj = 0.0;
    std::istringstream fields(line);
    if (!(fields >> term >> pol >> subj) || (fields >> rest))
      throw DataError(fmt::format(
          "lexicon line {}: expected term<TAB>polarity<TAB>subjectivity", line_no));
    try {
      lex.add(std::move(term), {pol, subj});
    } catch (const DataError& e) {
      throw DataError(fmt::format("lexicon line {}: {}", line_no, e.what()));
    }
  }
  return lex;
}

SentimentScore score_tokens(const TokenDoc& doc, const Lexicon& lexicon,
                            const Stoplist& negations) {
  SentimentScore score;
  score.tweet_id = doc.tweet_id;
  double pol_sum = 0.0;
  double subj_sum = 0.0;
  for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
    const LexiconEntry* e = lexicon.find(doc.tokens[i]);
    if (e == nullptr) continue;
    double p = e->polarity;
    if (i > 0 && negations.contains(doc.tokens[i - 1])) p *= kNegationFactor;
    pol_sum += p;
    subj_sum += e->subjectivity;
    ++score.matched_terms;
  }
  if (score.matched_terms > 0) {
    auto n = static_cast<double>(score.matched_terms);
    score.polarity = std::clamp(pol_sum / n, -1.0, 1.0);
    score.subjectivity = std::clamp(subj_sum / n, 0.0, 1.0);
  }
  if (score.polarity == 0.0) score.polarity = 0.0;  // no negative zero
  score.label = label_for(score.polarity);
  return score;
}

std::string Percent::str() const {
  return fmt::format("{}.{:02d}", hundredths / 100, hundredths % 100);
}

Percent truncated_percent(std::size_t count, std::size_t total) {
  if (total == 0) return {};
  return {static_cast<long long>((static_cast<unsigned long long>(count) * 10000ULL) /
                                 total)};
}

CorpusSummary summarize(std::span<const SentimentScore> scores) {
  CorpusSummary s;
  s.total = scores.size();
  for (const auto& sc : scores) {
    switch (sc.label) {
      case Label::Negative: ++s.negative; break;
      case Label::Positive: ++s.positive; break;
      case Label::Neutral: ++s.neutral; break;
    }
  }
  s.negative_pct = truncated_percent(s.negative, s.total);
  s.positive_pct = truncated_percent(s.positive, s.total);
  s.neutral_pct = truncated_percent(s.neutral, s.total);
  return s;
}

}  // namespace herdscope
