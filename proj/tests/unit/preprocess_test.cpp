#include "herdscope/preprocess.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "herdscope/error.hpp"
#include "../support/fixtures.hpp"

namespace herdscope {
namespace {

using testing::kDataDir;
using testing::make_record;

const Stemmer& shipped_stemmer() {
  static const Stemmer s = Stemmer::load(kDataDir / "stemmer_rules.tsv");
  return s;
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize("Vote NOW! https://t.co/x #WestBengal @abc"), "vote now westbengal");
  EXPECT_EQ(normalize(""), "");
  EXPECT_EQ(normalize("already normalized text"), "already normalized text");
}

TEST(Normalize, EdgeCases) {
  EXPECT_EQ(normalize("RT @ana_99: great!!!"), "rt great");
  EXPECT_EQ(normalize("HTTPS://EXAMPLE.COM/A?b=1 done"), "done");
  EXPECT_EQ(normalize("a#b c"), "ab c");
  EXPECT_EQ(normalize("  tabs\tand\nnewlines  "), "tabs and newlines");
  EXPECT_EQ(normalize("7.3 crore, 294 seats"), "crore seats");
  EXPECT_EQ(normalize("café ünïcode"), "caf n code");
  EXPECT_EQ(normalize("@only"), "");
}

TEST(Tokenize, Examples) {
  EXPECT_EQ(tokenize("vote now westbengal"), (std::vector<std::string>{"vote", "now", "westbengal"}));
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_EQ(tokenize("a  b"), (std::vector<std::string>{"a", "b"}));
}

TEST(RemoveStopwords, Examples) {
  std::vector<std::string> t{"the", "vote", "is", "now"};
  EXPECT_EQ(remove_stopwords(t, Stoplist{"the", "is"}), (std::vector<std::string>{"vote", "now"}));
  EXPECT_TRUE(remove_stopwords({}, Stoplist{"the"}).empty());
  std::vector<std::string> v{"vote"};
  EXPECT_EQ(remove_stopwords(v, Stoplist{}), v);
}

TEST(Stem, ShippedRules) {
  const auto& s = shipped_stemmer();
  EXPECT_EQ(s.stem("winning"), "win");
  EXPECT_EQ(s.stem("win"), "win");
  EXPECT_EQ(s.stem("elections"), "election");
  EXPECT_EQ(s.stem("parties"), "party");
  EXPECT_EQ(s.stem("classes"), "class");
  EXPECT_EQ(s.stem("progress"), "progress");
  EXPECT_EQ(s.stem("crisis"), "crisis");
  EXPECT_EQ(s.stem("coming"), "com");
  EXPECT_EQ(s.stem("gas"), "gas");
}

TEST(Stemmer, ParsesAndValidatesRules) {
  std::istringstream ok("# comment\ning\t\t3\nss\tss\t0\n");
  auto s = Stemmer::parse(ok);
  ASSERT_EQ(s.rules().size(), 2u);
  EXPECT_EQ(s.rules()[0].replacement, "");
  EXPECT_EQ(s.rules()[0].min_stem_length, 3u);

  std::istringstream two_fields("ing\t3\n");
  EXPECT_THROW(Stemmer::parse(two_fields), ConfigError);
  std::istringstream growing("s\tss\t1\n");
  EXPECT_THROW(Stemmer::parse(growing), ConfigError);
  std::istringstream upper("ING\t\t1\n");
  EXPECT_THROW(Stemmer::parse(upper), ConfigError);
  EXPECT_THROW(Stemmer::load("/nonexistent/rules.tsv"), IoError);
}

TEST(Stemmer, FirstMatchWinsAndNeverEmpties) {
  Stemmer s({{"ss", "ss", 0}, {"s", "", 1}});
  EXPECT_EQ(s.stem("pass"), "pass");
  EXPECT_EQ(s.stem("votes"), "vote");
  EXPECT_EQ(s.stem("s"), "s");
  Stemmer greedy({{"abc", "", 0}});
  EXPECT_EQ(greedy.stem("abc"), "abc");
}

TEST(Preprocess, Examples) {
  const Stoplist stop{"the", "are"};
  auto doc = preprocess(make_record("t1", "a", "The ELECTIONS are coming! #WestBengal"), stop,
                        shipped_stemmer());
  EXPECT_EQ(doc.tweet_id, "t1");
  EXPECT_EQ(doc.tokens, (std::vector<std::string>{"election", "com", "westbengal"}));
  EXPECT_EQ(doc.raw_length, 37u);

  EXPECT_TRUE(preprocess(make_record("t2", "a", "https://t.co/xyz"), stop, shipped_stemmer())
                  .tokens.empty());
  EXPECT_EQ(preprocess(make_record("t3", "a", "vote"), stop, shipped_stemmer()).tokens,
            std::vector<std::string>{"vote"});
}

TEST(Preprocess, StemsThatBecomeStopwordsAreDropped) {
  auto doc = preprocess(make_record("t", "a", "others voted"), Stoplist{"other"}, shipped_stemmer());
  EXPECT_EQ(doc.tokens, std::vector<std::string>{"vot"});
}

TEST(Preprocess, RawLengthCountsCodePoints) {
  auto doc = preprocess(make_record("t", "a", "ভোট দিন"), {}, shipped_stemmer());
  EXPECT_EQ(doc.raw_length, 7u);
  EXPECT_TRUE(doc.tokens.empty());
}

TEST(WordList, SkipsCommentsAndBlanks) {
  std::istringstream in("# header\nThe\n\n  is \n");
  EXPECT_EQ(parse_word_list(in), (Stoplist{"the", "is"}));
}

TEST(PreprocessProperties, TokenInvariantsOnRandomText) {
  std::mt19937_64 rng(5);
  const auto stop = load_word_list(kDataDir / "stopwords_en.txt");
  const std::string alphabet = "abcXYZ #@:/._-!?0123456789\t\n";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    std::size_t len = rng() % 80;
    for (std::size_t i = 0; i < len; ++i) {
      if (rng() % 15 == 0) text += "https://t.co/q ";
      else if (rng() % 10 == 0) text += "\xC3\xA9";
      else text += alphabet[pick(rng)];
    }
    auto norm = normalize(text);
    auto doc = preprocess(make_record("t", "a", text), stop, shipped_stemmer());
    EXPECT_LE(doc.tokens.size(), tokenize(norm).size());
    for (const auto& t : doc.tokens) {
      EXPECT_FALSE(t.empty());
      EXPECT_TRUE(std::all_of(t.begin(), t.end(), [](char c) { return c >= 'a' && c <= 'z'; }));
      EXPECT_FALSE(stop.contains(t));
    }
    EXPECT_EQ(doc.tokens, preprocess(make_record("t", "a", text), stop, shipped_stemmer()).tokens);
  }
}

}  // namespace
}  // namespace herdscope
