#include "herdscope/pipeline.hpp"

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "herdscope/error.hpp"
#include "herdscope/graph.hpp"
#include "herdscope/herd.hpp"
#include "herdscope/plot.hpp"
#include "herdscope/report.hpp"

namespace herdscope {

namespace {

class StageError : public Error {
 public:
  StageError(std::string stage, const Error& cause)
      : Error(fmt::format("stage '{}' failed: {}", stage, cause.what())),
        code_(cause.exit_code()) {}
  int exit_code() const noexcept override { return code_; }

 private:
  int code_;
};

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(name, e);
  }
}

std::string source_label(const RunOptions& options) {
  if (options.hashtag) return normalize_hashtag(*options.hashtag);
  std::string label;
  for (const auto& p : options.corpus_paths) {
    if (!label.empty()) label += '+';
    label += p.stem().string();
  }
  return label;
}

void print_line_errors(std::ostream& os, const LoadReport& report) {
  for (const auto& e : report.errors)
    os << fmt::format("{}:{}: {}\n", e.source, e.line, e.reason);
}

struct Bundle {
  std::filesystem::path dir;
  nlohmann::ordered_json files = nlohmann::ordered_json::array();

  void write(const std::string& name, const std::string& content) {
    auto path = dir / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    out.close();
    if (!out) throw IoError(fmt::format("cannot write '{}'", path.string()));
    files.push_back({{"name", name},
                     {"bytes", content.size()},
                     {"sha256", report::sha256_hex(content)}});
  }
};

void prepare_out_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir))
    throw IoError(fmt::format("cannot create output directory '{}'", dir.string()));
}

}  // namespace

ScoredCorpus load_and_score(const RunOptions& options, const Resources& resources) {
  ScoredCorpus run;
  stage("extract", [&] {
    if (options.corpus_paths.empty()) throw ConfigError("no corpus given");
    CorpusLoader loader(source_label(options));
    for (const auto& p : options.corpus_paths) loader.add_file(p);
    run.load = loader.report();
    run.corpus = std::move(loader).take();
    run.valid_records = run.corpus.records.size();
    if (options.hashtag) run.corpus = filter_by_hashtag(run.corpus, *options.hashtag);
  });
  stage("transform", [&] {
    run.docs.reserve(run.corpus.records.size());
    for (const auto& r : run.corpus.records) run.docs.push_back(resources.preprocessor(r));
  });
  stage("score", [&] {
    run.scores.reserve(run.docs.size());
    for (const auto& d : run.docs)
      run.scores.push_back(score_tokens(d, resources.lexicon, resources.negations));
    run.summary = summarize(run.scores);
  });
  return run;
}

int cmd_validate(const std::filesystem::path& corpus_path, std::ostream& out,
                 std::ostream& err) {
  CorpusLoader loader(corpus_path.stem().string());
  int code = kExitOk;
  try {
    loader.add_file(corpus_path);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    code = e.exit_code();
  }
  const auto& rep = loader.report();
  print_line_errors(out, rep);
  if (code == kExitIo) return code;
  err << fmt::format("{} valid, {} invalid, {} unknown keys\n",
                     loader.corpus().records.size(), rep.errors.size(), rep.unknown_keys);
  if (code != kExitOk) return code;
  return rep.errors.empty() ? kExitOk : kExitData;
}

int cmd_score(const RunOptions& options, std::ostream& out, std::ostream& err) {
  try {
    auto config = stage("config", [&] { return RunConfig::load(options.config_path); });
    auto resources = stage("config", [&] { return Resources::load(config); });
    auto run = load_and_score(options, resources);
    print_line_errors(err, run.load);
    stage("emit", [&] {
      prepare_out_dir(options.out_dir);
      Bundle bundle{options.out_dir};
      bundle.write("scores.csv", report::scores_csv(run.scores));
      bundle.write("summary.csv", report::summary_csv(run.summary));
    });
    out << report::summary_text(run.summary, run.corpus.source_label);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  }
}

int cmd_analyze(const RunOptions& options, std::ostream& out, std::ostream& err) {
  try {
    auto config = stage("config", [&] { return RunConfig::load(options.config_path); });
    auto resources = stage("config", [&] { return Resources::load(config); });
    auto run = load_and_score(options, resources);
    print_line_errors(err, run.load);

    auto graph = stage("graph", [&] { return build_graph(run.corpus); });
    auto stats = stage("graph", [&] { return clustering_stats(graph); });
    auto profiles = stage("herd", [&] { return profile_authors(run.corpus, run.scores, graph); });
    auto herd = stage("herd", [&] {
      return herd_report(profiles, config.band_edges, config.herd_threshold);
    });

    std::vector<CampAssignment> assignments;
    std::optional<PredictionReport> prediction;
    std::string prediction_error;
    stage("predict", [&] {
      assignments.reserve(run.docs.size());
      for (std::size_t i = 0; i < run.docs.size(); ++i)
        assignments.push_back(assign_camp(run.docs[i], run.corpus.records[i], config.camps));
      try {
        prediction = predict(run.scores, assignments, config.camps, herd);
      } catch (const DataError& e) {
        prediction_error = e.what();
      }
    });

    std::set<std::string> authors;
    for (const auto& r : run.corpus.records) authors.insert(r.author_id);
    std::size_t assigned = 0, ties = 0;
    for (const auto& a : assignments) {
      assigned += a.camp.has_value();
      ties += a.tie;
    }

    stage("emit", [&] {
      prepare_out_dir(options.out_dir);
      Bundle bundle{options.out_dir};
      bundle.write("scores.csv", report::scores_csv(run.scores));
      bundle.write("summary.csv", report::summary_csv(run.summary));
      bundle.write("subjectivity_scatter.csv", report::subjectivity_scatter_csv(run.scores));
      bundle.write("polarity_scatter.csv", report::polarity_scatter_csv(run.scores));
      bundle.write("combined_scatter.csv", report::combined_scatter_csv(run.scores));
      bundle.write("graph_stats.csv", report::graph_stats_csv(graph, stats));
      bundle.write("degree_distribution.csv", report::degree_distribution_csv(stats));
      bundle.write("local_clustering.csv", report::local_clustering_csv(graph, stats));
      bundle.write("ck_curve.csv", report::ck_curve_csv(stats));
      std::ostringstream edges;
      write_edge_list(edges, graph);
      bundle.write("edges.tsv", edges.str());
      bundle.write("author_profiles.csv", report::author_profiles_csv(profiles));
      bundle.write("herd_bands.csv", report::herd_bands_csv(herd));
      bundle.write("herd_summary.csv", report::herd_summary_csv(herd));
      const PredictionReport* pred = prediction ? &*prediction : nullptr;
      bundle.write("prediction.csv", report::prediction_csv(pred));
      bundle.write("prediction_summary.csv",
                   report::prediction_summary_csv(pred, prediction_error,
                                                  config.reference_shares));

      nlohmann::ordered_json manifest;
      manifest["pipeline_version"] = kPipelineVersion;
      manifest["config"] = options.config_path.generic_string();
      manifest["corpora"] = nlohmann::ordered_json::array();
      for (const auto& p : options.corpus_paths) manifest["corpora"].push_back(p.generic_string());
      manifest["source_label"] = run.corpus.source_label;
      manifest["status"] = prediction ? "ok" : "partial";
      manifest["stage_counts"] = {
          {"input_lines", run.load.non_empty_lines},
          {"valid_records", run.valid_records},
          {"invalid_lines", run.load.errors.size()},
          {"filtered_records", run.corpus.records.size()},
          {"scored_tweets", run.scores.size()},
          {"graph_nodes", graph.node_count()},
          {"graph_edges", graph.edge_count()},
          {"distinct_authors", authors.size()},
          {"profiled_authors", profiles.size()},
          {"camp_assigned", assigned},
          {"camp_ties", ties},
      };
      manifest["files"] = bundle.files;
      std::string text = manifest.dump(2) + "\n";
      std::ofstream mf(options.out_dir / "manifest.json", std::ios::binary);
      mf << text;
      mf.close();
      if (!mf) throw IoError("cannot write manifest.json");
    });

    out << report::summary_text(run.summary, run.corpus.source_label);
    out << fmt::format("graph: {} nodes, {} edges, mean clustering {}, global clustering {}\n",
                       graph.node_count(), graph.edge_count(),
                       report::fixed6(stats.mean_clustering),
                       report::fixed6(stats.global_clustering));
    out << fmt::format("herd index: {} ({})\n", report::fixed6(herd.herd_index),
                       herd.herd_flag ? "herd behaviour" : "no herd behaviour");
    if (prediction) {
      out << fmt::format("predicted winner: {} (margin {})\n",
                         prediction->winner.value_or("undecided"),
                         report::fixed6(prediction->margin));
      if (prediction->degenerate) err << "warning: fewer than two camps carry tweets\n";
      return kExitOk;
    }
    err << "error: stage 'predict' failed: " << prediction_error << '\n';
    return kExitData;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  }
}

int cmd_plot(const std::filesystem::path& bundle_dir, std::ostream& out,
             std::ostream& err) {
  try {
    auto outcome = plot::plot_bundle(bundle_dir);
    for (const auto& p : outcome.written) out << p.generic_string() << '\n';
    for (const auto& e : outcome.errors) err << "error: " << e << '\n';
    return outcome.errors.empty() ? kExitOk : kExitData;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  }
}

}  // namespace herdscope
