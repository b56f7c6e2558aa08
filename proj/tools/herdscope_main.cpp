#include <iostream>

#include <CLI11.hpp>

#include "herdscope/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Sentiment, clustering and herd-behaviour analysis of tweet corpora"};
  app.require_subcommand(1);
  app.set_version_flag("--version", herdscope::kPipelineVersion);

  herdscope::RunOptions options;
  std::string hashtag;

  auto* validate = app.add_subcommand("validate", "Check a corpus file line by line");
  std::filesystem::path validate_corpus;
  validate->add_option("--corpus,corpus", validate_corpus, "Corpus file (JSON lines)")
      ->required();

  auto add_run_flags = [&](CLI::App* cmd) {
    cmd->add_option("--config", options.config_path, "Run configuration (JSON)")
        ->required();
    cmd->add_option("--corpus", options.corpus_paths, "Corpus file; repeatable")
        ->required();
    cmd->add_option("--out", options.out_dir, "Output directory")->capture_default_str();
    cmd->add_option("--hashtag", hashtag, "Keep only tweets carrying this hashtag");
  };
  auto* score = app.add_subcommand("score", "Score tweets and print the label summary");
  add_run_flags(score);
  auto* analyze = app.add_subcommand("analyze", "Run the full pipeline and emit a report bundle");
  add_run_flags(analyze);

  auto* plot = app.add_subcommand("plot", "Render SVG charts from a report bundle");
  std::filesystem::path bundle_dir;
  plot->add_option("--out,bundle", bundle_dir, "Report bundle directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : herdscope::kExitIo;
  }
  if (!hashtag.empty()) options.hashtag = hashtag;

  if (*validate) return herdscope::cmd_validate(validate_corpus, std::cout, std::cerr);
  if (*score) return herdscope::cmd_score(options, std::cout, std::cerr);
  if (*analyze) return herdscope::cmd_analyze(options, std::cout, std::cerr);
  return herdscope::cmd_plot(bundle_dir, std::cout, std::cerr);
}
