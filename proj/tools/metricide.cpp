// metricide: score NLG outputs with 21 automatic metrics and relate them to
// human ratings.
#include <cstdlib>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "metricide/cli.hpp"

namespace cli = metricide::cli;

namespace {

void add_input_options(CLI::App* cmd, cli::RunConfig& cfg, std::string& format) {
  cmd->add_option("--input", cfg.input, "corpus file (csv or json)")->required();
  cmd->add_option("--format", format, "csv or json (default: from the extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--lenient", cfg.lenient, "skip invalid rows instead of aborting");
  cmd->add_flag("--strict", cfg.strict, "exit 1 when warnings were produced");
}

void add_scoring_options(CLI::App* cmd, cli::RunConfig& cfg, std::string& lepor) {
  cmd->add_option("--out", cfg.out_dir, "output directory");
  cmd->add_option("--embeddings", cfg.embeddings, "word vectors for sim");
  cmd->add_option("--dictionary", cfg.dictionary, "word list for msp");
  cmd->add_option("--synonyms", cfg.synonyms, "synonym lexicon for METEOR");
  cmd->add_option("--metrics", cfg.metrics, "comma list, 'all', '-name' to drop one");
  cmd->add_option("--lepor-unmatched", lepor, "zero or origin")
      ->check(CLI::IsMember({"zero", "origin"}));
  cmd->add_option("--jobs", cfg.jobs, "scoring threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automatic metric scoring and meta-evaluation for NLG outputs"};
  app.require_subcommand(1);

  cli::RunConfig cfg;
  std::string format, lepor = "zero", strategy = "minmax", zeros = "drop";
  std::optional<std::uint64_t> seed;

  auto* validate = app.add_subcommand("validate", "check a corpus file");
  add_input_options(validate, cfg, format);

  auto* score = app.add_subcommand("score", "write per-instance metrics (metrics.tsv)");
  add_input_options(score, cfg, format);
  add_scoring_options(score, cfg, lepor);

  auto* analyze = app.add_subcommand("analyze", "write the analysis report");
  add_input_options(analyze, cfg, format);
  add_scoring_options(analyze, cfg, lepor);
  analyze->add_option("--scores", cfg.scores, "reuse metrics.tsv from a score run");
  analyze->add_flag("--quantize", cfg.analysis.quantize, "add quantized ranking accuracy");
  analyze->add_option("--quant-strategy", strategy, "minmax or eqfreq")
      ->check(CLI::IsMember({"minmax", "eqfreq"}));
  analyze->add_option("--epsilon", cfg.analysis.epsilon, "tie tolerance on raw scores")
      ->check(CLI::NonNegativeNumber);
  analyze->add_option("--seed", seed, "random baseline seed (env METRICIDE_SEED)");
  analyze->add_option("--alpha", cfg.analysis.alpha, "significance level")
      ->check(CLI::Range(0.0, 1.0));
  analyze->add_option("--wilcoxon-zeros", zeros, "drop or pratt")
      ->check(CLI::IsMember({"drop", "pratt"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? cli::kExitOk : cli::kExitInput;
  }

  if (!format.empty()) cfg.format = metricide::format_from_name(format);
  cfg.lepor_unmatched =
      lepor == "origin" ? metricide::LeporUnmatched::to_origin : metricide::LeporUnmatched::zero;
  cfg.analysis.quant_strategy = *metricide::quant_strategy_from_name(strategy);
  cfg.analysis.wilcoxon_zeros =
      zeros == "pratt" ? metricide::stats::ZeroHandling::pratt : metricide::stats::ZeroHandling::drop;
  try {
    cfg.analysis.seed = cli::resolve_seed(seed, std::getenv(cli::kSeedEnv));
    if (cfg.metrics) cli::parse_metric_list(*cfg.metrics);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitInput;
  }

  if (validate->parsed()) return cli::cmd_validate(cfg, std::cout, std::cerr);
  if (score->parsed()) return cli::cmd_score(cfg, std::cout, std::cerr);
  return cli::cmd_analyze(cfg, std::cout, std::cerr);
}
