#include "herdscope/corpus.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

#include "herdscope/error.hpp"

namespace herdscope {

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 8> kKnownKeys = {
    "tweet_id", "author_id", "text",       "timestamp",
    "hashtags", "mentions",  "retweet_of", "follower_count"};

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw DataError(fmt::format("missing {}", key));
  return *it;
}

std::string require_string(const json& obj, const char* key, bool non_empty) {
  const json& v = require(obj, key);
  if (!v.is_string()) throw DataError(fmt::format("{} must be a string", key));
  auto s = v.get<std::string>();
  if (non_empty && s.empty()) throw DataError(fmt::format("empty {}", key));
  return s;
}

std::vector<std::string> require_string_array(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_array()) throw DataError(fmt::format("{} must be an array", key));
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& item : v) {
    if (!item.is_string())
      throw DataError(fmt::format("{} must contain only strings", key));
    out.push_back(item.get<std::string>());
  }
  return out;
}

bool has_space(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

std::string strip_at(std::string_view s) {
  if (!s.empty() && s.front() == '@') s.remove_prefix(1);
  return std::string(s);
}

bool parse_int(std::string_view s, int& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

std::string normalize_hashtag(std::string_view tag) {
  while (!tag.empty() && tag.front() == '#') tag.remove_prefix(1);
  std::string out(tag);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

Timestamp parse_timestamp(std::string_view iso) {
  // YYYY-MM-DDTHH:MM:SS[.fff](Z|+00:00)
  auto fail = [&] {
    return DataError(fmt::format("invalid timestamp '{}'", iso));
  };
  if (iso.size() < 20) throw fail();
  if (iso[4] != '-' || iso[7] != '-' || (iso[10] != 'T' && iso[10] != ' ') ||
      iso[13] != ':' || iso[16] != ':')
    throw fail();
  int y, mo, d, h, mi, s;
  if (!parse_int(iso.substr(0, 4), y) || !parse_int(iso.substr(5, 2), mo) ||
      !parse_int(iso.substr(8, 2), d) || !parse_int(iso.substr(11, 2), h) ||
      !parse_int(iso.substr(14, 2), mi) || !parse_int(iso.substr(17, 2), s))
    throw fail();
  std::string_view rest = iso.substr(19);
  if (!rest.empty() && rest.front() == '.') {
    rest.remove_prefix(1);
    std::size_t digits = 0;
    while (digits < rest.size() && std::isdigit(static_cast<unsigned char>(rest[digits])))
      ++digits;
    if (digits == 0) throw fail();
    rest.remove_prefix(digits);
  }
  if (rest != "Z" && rest != "+00:00") throw fail();

  using namespace std::chrono;
  year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                     day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 59 || h < 0 || mi < 0 || s < 0)
    throw fail();
  return sys_days{ymd} + hours{h} + minutes{mi} + seconds{s};
}

std::string format_timestamp(Timestamp ts) {
  using namespace std::chrono;
  auto day_point = floor<days>(ts);
  year_month_day ymd{day_point};
  hh_mm_ss hms{ts - day_point};
  return fmt::format("{:04d}-{:02d}-{:02d}T{:02d}:{:02d}:{:02d}Z",
                     static_cast<int>(ymd.year()),
                     static_cast<unsigned>(ymd.month()),
                     static_cast<unsigned>(ymd.day()), hms.hours().count(),
                     hms.minutes().count(), hms.seconds().count());
}

TweetRecord parse_record(std::string_view line, std::size_t* unknown_keys) {
  json obj = json::parse(line.begin(), line.end(), nullptr, false);
  if (obj.is_discarded()) throw DataError("invalid JSON");
  if (!obj.is_object()) throw DataError("record is not a JSON object");

  TweetRecord r;
  r.tweet_id = require_string(obj, "tweet_id", true);
  r.author_id = require_string(obj, "author_id", true);
  r.text = require_string(obj, "text", false);
  r.timestamp = parse_timestamp(require_string(obj, "timestamp", true));

  for (auto& tag : require_string_array(obj, "hashtags")) {
    auto norm = normalize_hashtag(tag);
    if (norm.empty()) throw DataError("empty hashtag");
    if (has_space(norm) || norm.find('#') != std::string::npos)
      throw DataError(fmt::format("invalid hashtag '{}'", tag));
    r.hashtags.push_back(std::move(norm));
  }

  for (auto& m : require_string_array(obj, "mentions")) {
    auto id = strip_at(m);
    if (id.empty()) throw DataError("empty mention");
    if (id != r.author_id) r.mentions.push_back(std::move(id));
  }

  const json& rt = require(obj, "retweet_of");
  if (rt.is_string()) {
    auto id = strip_at(rt.get<std::string>());
    if (id.empty()) throw DataError("empty retweet_of");
    r.retweet_of = std::move(id);
  } else if (!rt.is_null()) {
    throw DataError("retweet_of must be a string or null");
  }

  const json& fc = require(obj, "follower_count");
  if (fc.is_number_unsigned()) {
    r.follower_count = fc.get<std::uint64_t>();
  } else if (fc.is_number_integer()) {
    throw DataError("negative follower_count");
  } else {
    throw DataError("follower_count must be an integer");
  }

  if (unknown_keys) {
    for (const auto& item : obj.items()) {
      if (std::find(kKnownKeys.begin(), kKnownKeys.end(), item.key()) ==
          kKnownKeys.end())
        ++*unknown_keys;
    }
  }
  return r;
}

std::string serialize_record(const TweetRecord& r) {
  json obj = {
      {"tweet_id", r.tweet_id},
      {"author_id", r.author_id},
      {"text", r.text},
      {"timestamp", format_timestamp(r.timestamp)},
      {"hashtags", r.hashtags},
      {"mentions", r.mentions},
      {"follower_count", r.follower_count},
  };
  obj["retweet_of"] = r.retweet_of ? json(*r.retweet_of) : json(nullptr);
  return obj.dump();
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  for (const auto& r : corpus.records) out << serialize_record(r) << '\n';
}

CorpusLoader::CorpusLoader(std::string source_label) {
  corpus_.source_label = std::move(source_label);
}

void CorpusLoader::add_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot read corpus file '{}'", path.string()));
  add_stream(in, path.string());
  if (in.bad()) throw IoError(fmt::format("read error on '{}'", path.string()));
}

void CorpusLoader::add_stream(std::istream& in, std::string_view source_name) {
  std::size_t line_no = 0;
  std::size_t non_empty = 0;
  std::size_t invalid = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = std::all_of(line.begin(), line.end(), [](unsigned char c) {
      return std::isspace(c) != 0;
    });
    if (blank) continue;
    ++non_empty;
    try {
      std::size_t unknown = 0;
      TweetRecord r = parse_record(line, &unknown);
      if (!seen_ids_.insert(r.tweet_id).second)
        throw DataError("duplicate tweet_id");
      report_.unknown_keys += unknown;
      corpus_.records.push_back(std::move(r));
    } catch (const DataError& e) {
      ++invalid;
      report_.errors.push_back({std::string(source_name), line_no, e.what()});
    }
  }
  report_.non_empty_lines += non_empty;
  if (invalid * 2 > non_empty) {
    throw DataError(fmt::format(
        "corpus '{}' rejected: {} of {} non-empty lines invalid", source_name,
        invalid, non_empty));
  }
}

Corpus CorpusLoader::take() && { return std::move(corpus_); }

LoadedCorpus load_corpus(const std::filesystem::path& path,
                         std::string source_label) {
  CorpusLoader loader(std::move(source_label));
  loader.add_file(path);
  LoadReport report = loader.report();
  return {std::move(loader).take(), std::move(report)};
}

Corpus filter_by_hashtag(const Corpus& corpus, std::string_view tag) {
  Corpus out;
  std::string wanted = normalize_hashtag(tag);
  out.source_label = wanted;
  for (const auto& r : corpus.records) {
    if (std::find(r.hashtags.begin(), r.hashtags.end(), wanted) != r.hashtags.end())
      out.records.push_back(r);
  }
  return out;
}

}  // namespace herdscope
