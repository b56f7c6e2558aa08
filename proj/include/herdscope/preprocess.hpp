#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "herdscope/corpus.hpp"

namespace herdscope {

using Stoplist = std::set<std::string, std::less<>>;

struct TokenDoc {
  std::string tweet_id;
  std::vector<std::string> tokens;
  std::size_t raw_length = 0;  // code points in the original text
};

// Lowercase, drop URLs and @mentions, strip '#', map every non a-z byte to
// a space, collapse whitespace. Idempotent.
std::string normalize(std::string_view text);

std::vector<std::string> tokenize(std::string_view normalized);

std::vector<std::string> remove_stopwords(std::span<const std::string> tokens,
                                          const Stoplist& stoplist);

/// One line of the stemmer rule table.
struct StemRule {
  std::string suffix;
  std::string replacement;
  std::size_t min_stem_length = 0;
};

/// Ordered suffix-rewriting stemmer.
///
/// Each pass applies the first rule (top to bottom) whose suffix matches and
/// whose remaining stem is at least `min_stem_length` letters long. Passes
/// repeat until a pass leaves the word unchanged. A rule must either shorten
/// the word or leave it unchanged (replacement == suffix, used as a guard that
/// stops later rules from firing), which guarantees termination.
class Stemmer {
 public:
  Stemmer() = default;
  explicit Stemmer(std::vector<StemRule> rules);

  static Stemmer load(const std::filesystem::path& path);
  static Stemmer parse(std::istream& in);

  std::string stem(std::string_view word) const;
  const std::vector<StemRule>& rules() const noexcept { return rules_; }

 private:
  std::vector<StemRule> rules_;
};

/// Word-per-line file; blank lines and '#' comments skipped.
Stoplist load_word_list(const std::filesystem::path& path);
Stoplist parse_word_list(std::istream& in);

struct Preprocessor {
  Stoplist stopwords;
  Stemmer stemmer;

  TokenDoc operator()(const TweetRecord& record) const;
};

TokenDoc preprocess(const TweetRecord& record, const Stoplist& stoplist,
                    const Stemmer& stemmer);

}  // namespace herdscope
