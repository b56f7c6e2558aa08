#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "herdscope/corpus.hpp"

namespace herdscope::testing {

inline const std::filesystem::path kSourceDir = HERDSCOPE_SOURCE_DIR;
inline const std::filesystem::path kDataDir = kSourceDir / "data";

inline TweetRecord make_record(std::string id, std::string author, std::string text = "",
                               std::vector<std::string> hashtags = {},
                               std::vector<std::string> mentions = {},
                               std::optional<std::string> retweet_of = std::nullopt) {
  TweetRecord r;
  r.tweet_id = std::move(id);
  r.author_id = std::move(author);
  r.text = std::move(text);
  r.timestamp = parse_timestamp("2021-02-01T10:00:00Z");
  r.hashtags = std::move(hashtags);
  r.mentions = std::move(mentions);
  r.retweet_of = std::move(retweet_of);
  r.follower_count = 10;
  return r;
}

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text(const std::filesystem::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::binary);
  out << s;
}

/// Fresh, empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("herdscope_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string random_word(std::mt19937_64& rng, std::size_t max_len = 8) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<int> letter('a', 'z');
  std::string w(len(rng), 'a');
  for (auto& c : w) c = static_cast<char>(letter(rng));
  return w;
}

}  // namespace herdscope::testing

namespace herdscope::testing {

/// Opinionated authors h0..h3 all mention each other (a clique); factual
/// authors s1..s4 only talk to hub s0 (a star). Clique members score
/// subjectivity 1 with the shipped lexicon, star members 0.
inline Corpus herd_fixture_corpus() {
  Corpus c;
  c.source_label = "herd_fixture";
  int id = 0;
  auto next_id = [&] { return "h" + std::to_string(++id); };
  const std::vector<std::string> clique{"h0", "h1", "h2", "h3"};
  for (const auto& a : clique) {
    std::vector<std::string> others;
    for (const auto& b : clique)
      if (b != a) others.push_back(b);
    c.records.push_back(make_record(next_id(), a, "So proud and happy, wonderful PartyX!",
                                    {"westbengal"}, others));
  }
  for (int leaf = 1; leaf <= 4; ++leaf) {
    c.records.push_back(make_record(next_id(), "s" + std::to_string(leaf),
                                    "Polling station list published on Monday",
                                    {"westbengal"}, {"s0"}));
  }
  c.records.push_back(make_record(next_id(), "s0", "Counting scheduled for Sunday morning",
                                  {"westbengal"}));
  return c;
}

}  // namespace herdscope::testing
