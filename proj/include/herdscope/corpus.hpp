#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace herdscope {

using Timestamp = std::chrono::sys_seconds;

struct TweetRecord {
  std::string tweet_id;
  std::string author_id;
  std::string text;
  Timestamp timestamp{};
  std::vector<std::string> hashtags;   // lowercase, no '#'
  std::vector<std::string> mentions;   // author ids, self-mentions dropped
  std::optional<std::string> retweet_of;
  std::uint64_t follower_count = 0;

  friend bool operator==(const TweetRecord&, const TweetRecord&) = default;
};

struct Corpus {
  std::vector<TweetRecord> records;  // ingestion order
  std::string source_label;
};

struct LineError {
  std::string source;  // file path or stream label
  std::size_t line = 0;
  std::string reason;
};

struct LoadReport {
  std::size_t non_empty_lines = 0;
  std::size_t unknown_keys = 0;
  std::vector<LineError> errors;
};

/// Incremental loader for one or more line-delimited corpus files.
///
/// Duplicate tweet ids are rejected across every input added to the same
/// loader (first occurrence wins). Each input is checked against the
/// invalid-line guardrail on its own: more than half of its non-empty lines
/// failing validation aborts with DataError.
class CorpusLoader {
 public:
  explicit CorpusLoader(std::string source_label);

  void add_file(const std::filesystem::path& path);
  void add_stream(std::istream& in, std::string_view source_name);

  const LoadReport& report() const noexcept { return report_; }
  const Corpus& corpus() const noexcept { return corpus_; }
  Corpus take() &&;

 private:
  Corpus corpus_;
  LoadReport report_;
  std::unordered_set<std::string> seen_ids_;
};

struct LoadedCorpus {
  Corpus corpus;
  LoadReport report;
};

LoadedCorpus load_corpus(const std::filesystem::path& path,
                         std::string source_label);

/// Parses one JSON line into a record. Throws DataError with the reason.
TweetRecord parse_record(std::string_view line, std::size_t* unknown_keys = nullptr);

/// One JSON object, keys sorted, no trailing newline.
std::string serialize_record(const TweetRecord& record);
void write_corpus(std::ostream& out, const Corpus& corpus);

Timestamp parse_timestamp(std::string_view iso);
std::string format_timestamp(Timestamp ts);

/// Lowercases and strips leading '#'.
std::string normalize_hashtag(std::string_view tag);

Corpus filter_by_hashtag(const Corpus& corpus, std::string_view tag);

}  // namespace herdscope
