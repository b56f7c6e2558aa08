#include "herdscope/preprocess.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>

#include <fmt/format.h>

#include "herdscope/error.hpp"

namespace herdscope {

namespace {

bool is_lower_alpha(char c) { return c >= 'a' && c <= 'z'; }

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_mention_char(char c) {
  return is_lower_alpha(c) || (c >= '0' && c <= '9') || c == '_';
}

bool all_lower_alpha(std::string_view s) {
  return std::all_of(s.begin(), s.end(), is_lower_alpha);
}

std::size_t count_code_points(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find('\t', start);
    fields.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

}  // namespace

std::string normalize(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
  });

  std::string out;
  out.reserve(lower.size());
  bool pending_space = false;
  auto emit_space = [&] { pending_space = !out.empty(); };

  std::string_view s = lower;
  std::size_t i = 0;
  while (i < s.size()) {
    std::string_view rest = s.substr(i);
    if (rest.starts_with("http://") || rest.starts_with("https://")) {
      while (i < s.size() && !is_space(s[i])) ++i;
      emit_space();
      continue;
    }
    char c = s[i];
    if (c == '@') {
      ++i;
      while (i < s.size() && is_mention_char(s[i])) ++i;
      emit_space();
      continue;
    }
    if (c == '#') {
      ++i;
      continue;
    }
    if (is_lower_alpha(c)) {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    } else {
      emit_space();
    }
    ++i;
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view normalized) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (start <= normalized.size()) {
    auto pos = normalized.find(' ', start);
    if (pos == std::string_view::npos) pos = normalized.size();
    if (pos > start) tokens.emplace_back(normalized.substr(start, pos - start));
    start = pos + 1;
  }
  return tokens;
}

std::vector<std::string> remove_stopwords(std::span<const std::string> tokens,
                                          const Stoplist& stoplist) {
  std::vector<std::string> kept;
  kept.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!stoplist.contains(t)) kept.push_back(t);
  }
  return kept;
}

Stemmer::Stemmer(std::vector<StemRule> rules) : rules_(std::move(rules)) {
  for (const auto& r : rules_) {
    if (r.suffix.empty() || !all_lower_alpha(r.suffix) ||
        !all_lower_alpha(r.replacement))
      throw ConfigError(fmt::format("stemmer rule '{}' must use lowercase letters",
                                    r.suffix));
    if (r.replacement != r.suffix && r.replacement.size() >= r.suffix.size())
      throw ConfigError(fmt::format(
          "stemmer rule '{}' -> '{}' must shorten the word or be a guard",
          r.suffix, r.replacement));
  }
}

Stemmer Stemmer::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot read stemmer rules '{}'", path.string()));
  return parse(in);
}

Stemmer Stemmer::parse(std::istream& in) {
  std::vector<StemRule> rules;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_tabs(line);
    std::size_t min_len = 0;
    bool ok = fields.size() == 3;
    if (ok) {
      auto f = fields[2];
      auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), min_len);
      ok = ec == std::errc() && p == f.data() + f.size();
    }
    if (!ok)
      throw ConfigError(fmt::format("stemmer rules line {}: expected "
                                    "suffix<TAB>replacement<TAB>min_stem_length",
                                    line_no));
    rules.push_back({std::string(fields[0]), std::string(fields[1]), min_len});
  }
  return Stemmer(std::move(rules));
}

std::string Stemmer::stem(std::string_view word) const {
  std::string w(word);
  while (true) {
    const StemRule* hit = nullptr;
    for (const auto& r : rules_) {
      if (w.size() <= r.suffix.size() || !w.ends_with(r.suffix)) continue;
      if (w.size() - r.suffix.size() < r.min_stem_length) continue;
      hit = &r;
      break;
    }
    if (hit == nullptr || hit->replacement == hit->suffix) return w;
    w.resize(w.size() - hit->suffix.size());
    w += hit->replacement;
  }
}

Stoplist parse_word_list(std::istream& in) {
  Stoplist words;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string w = line.substr(first, last - first + 1);
    std::transform(w.begin(), w.end(), w.begin(), [](char c) {
      return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    });
    words.insert(std::move(w));
  }
  return words;
}

Stoplist load_word_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot read word list '{}'", path.string()));
  return parse_word_list(in);
}

TokenDoc preprocess(const TweetRecord& record, const Stoplist& stoplist,
                    const Stemmer& stemmer) {
  TokenDoc doc;
  doc.tweet_id = record.tweet_id;
  doc.raw_length = count_code_points(record.text);
  auto tokens = remove_stopwords(tokenize(normalize(record.text)), stoplist);
  doc.tokens.reserve(tokens.size());
  for (const auto& t : tokens) {
    auto s = stemmer.stem(t);
    // a stem can land on a stopword ("others" -> "other")
    if (!stoplist.contains(s)) doc.tokens.push_back(std::move(s));
  }
  return doc;
}

TokenDoc Preprocessor::operator()(const TweetRecord& record) const {
  return preprocess(record, stopwords, stemmer);
}

}  // namespace herdscope
