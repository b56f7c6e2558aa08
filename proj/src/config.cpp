#include "herdscope/config.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "herdscope/error.hpp"

namespace herdscope {

namespace {

using nlohmann::json;

std::filesystem::path require_path(const json& doc, const char* key,
                                   const std::filesystem::path& base) {
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_string() || it->get<std::string>().empty())
    throw ConfigError(fmt::format("config: '{}' must be a non-empty path string", key));
  std::filesystem::path p = it->get<std::string>();
  return p.is_absolute() ? p : base / p;
}

}  // namespace

RunConfig RunConfig::parse(std::string_view json_text,
                           const std::filesystem::path& base_dir) {
  json doc = json::parse(json_text.begin(), json_text.end(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw ConfigError("config: not a JSON object");

  RunConfig cfg;
  try {
    if (auto it = doc.find("band_edges"); it != doc.end())
      cfg.band_edges = it->get<std::vector<double>>();
    if (auto it = doc.find("herd_threshold"); it != doc.end())
      cfg.herd_threshold = it->get<double>();
    if (auto it = doc.find("camps"); it != doc.end()) {
      if (!it->is_object()) throw ConfigError("config: 'camps' must map id -> keywords");
      for (const auto& [id, words] : it->items()) {
        Camp camp{id, {}};
        for (const auto& w : words.get<std::vector<std::string>>()) camp.keywords.insert(w);
        cfg.camps.camps.push_back(std::move(camp));
      }
    }
    if (auto it = doc.find("reference_shares"); it != doc.end())
      cfg.reference_shares = it->get<std::map<std::string, double>>();
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("config: {}", e.what()));
  }

  cfg.lexicon_path = require_path(doc, "lexicon_path", base_dir);
  cfg.stopwords_path = require_path(doc, "stopwords_path", base_dir);
  cfg.negation_path = require_path(doc, "negation_path", base_dir);
  cfg.stemmer_rules_path = require_path(doc, "stemmer_rules_path", base_dir);

  validate_band_edges(cfg.band_edges);
  cfg.camps.validate();
  return cfg;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot read config '{}'", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.parent_path());
}

Resources Resources::load(const RunConfig& config) {
  Resources r;
  try {
    r.lexicon = Lexicon::load(config.lexicon_path);
  } catch (const DataError& e) {
    throw ConfigError(e.what());
  }
  r.preprocessor.stopwords = load_word_list(config.stopwords_path);
  r.preprocessor.stemmer = Stemmer::load(config.stemmer_rules_path);
  r.negations = load_word_list(config.negation_path);
  // negation words must survive stopword removal to reach the scorer
  for (const auto& w : r.negations) r.preprocessor.stopwords.erase(w);
  return r;
}

}  // namespace herdscope
