#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "metricide/cli.hpp"
#include "metricide/report.hpp"
#include "metricide/scorer.hpp"

namespace metricide::cli {

namespace {

CorpusFormat format_of(const RunConfig& c) {
  return c.format.value_or(format_from_path(c.input));
}

// Raised for problems with the command's inputs; maps to kExitInput.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LoadResult load(const RunConfig& c, std::ostream& err) {
  if (c.input.empty()) throw InputError("no input corpus: pass --input PATH");
  LoadOptions opts;
  opts.lenient = c.lenient;
  LoadResult r = load_corpus(c.input, format_of(c), opts);
  for (const auto& d : r.skipped) fmt::print(err, "skipped: {}\n", d.to_string());
  return r;
}

struct Resources {
  std::optional<EmbeddingTable> embeddings;
  std::optional<Dictionary> dictionary;
  std::optional<SynonymLexicon> synonyms;
};

Resources load_resources(const RunConfig& c, const MetricSelection& sel) {
  Resources r;
  if (sel.contains(Metric::sim)) {
    if (!c.embeddings) {
      throw InputError("sim is enabled but no word vectors were given: pass --embeddings PATH "
                       "or drop sim from --metrics");
    }
    r.embeddings = EmbeddingTable::load(*c.embeddings);
  }
  if (sel.contains(Metric::msp)) {
    const auto path = c.dictionary.value_or(default_dictionary_path());
    if (!std::filesystem::exists(path)) {
      throw InputError(fmt::format("msp needs a word list and {} does not exist: pass "
                                   "--dictionary PATH or drop msp from --metrics",
                                   path.string()));
    }
    r.dictionary = Dictionary::load(path);
  }
  if (c.synonyms) r.synonyms = SynonymLexicon::load(*c.synonyms);
  return r;
}

std::vector<MetricVector> compute_scores(const RunConfig& c, const Corpus& corpus) {
  const auto sel = effective_metrics(c);
  const Resources res = load_resources(c, sel);
  ScoringConfig sc;
  sc.metrics = sel;
  sc.embeddings = res.embeddings ? &*res.embeddings : nullptr;
  sc.dictionary = res.dictionary ? &*res.dictionary : nullptr;
  sc.synonyms = res.synonyms ? &*res.synonyms : nullptr;
  sc.lepor.unmatched = c.lepor_unmatched;
  sc.jobs = c.jobs;
  return score_corpus(corpus, sc);
}

// Runs `body`, translating input problems into exit code 2.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const CorpusError& e) {
    fmt::print(err, "error: {}\n", e.diagnostic().to_string());
  } catch (const InputError& e) {
    fmt::print(err, "error: {}\n", e.what());
  } catch (const MissingResourceError& e) {
    fmt::print(err, "error: {}\n", e.what());
  } catch (const std::invalid_argument& e) {
    fmt::print(err, "error: {}\n", e.what());
  } catch (const std::runtime_error& e) {
    fmt::print(err, "error: {}\n", e.what());
  }
  return kExitInput;
}

}  // namespace

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.input.empty()) throw InputError("no input corpus: pass --input PATH");
    const ValidationReport v = validate_corpus(config.input, format_of(config));
    for (const auto& d : v.errors) fmt::print(err, "{}\n", d.to_string());
    fmt::print(out, "{} rows, {} errors\n", v.rows, v.errors.size());
    fmt::print(out, "dataset\tsystem\tinstances\n");
    for (const auto& g : v.counts) fmt::print(out, "{}\t{}\t{}\n", g.dataset, g.system, g.instances);
    return v.ok() ? kExitOk : kExitInput;
  });
}

int cmd_score(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const LoadResult loaded = load(config, err);
    const auto scores = compute_scores(config, loaded.corpus);
    const auto path = config.out_dir / "metrics.tsv";
    write_file_atomic(path, scores_tsv(loaded.corpus, scores));
    fmt::print(out, "scored {} instances -> {}\n", loaded.corpus.size(), path.string());
    return config.strict && !loaded.skipped.empty() ? kExitWarnings : kExitOk;
  });
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const LoadResult loaded = load(config, err);
    const Corpus& corpus = loaded.corpus;
    std::vector<MetricVector> scores;
    if (config.scores) {
      scores = parse_scores_tsv(read_file(*config.scores), corpus);
    } else {
      scores = compute_scores(config, corpus);
      write_file_atomic(config.out_dir / "metrics.tsv", scores_tsv(corpus, scores));
    }
    AnalysisReport report = analyze(corpus, scores, config.analysis);
    for (auto& kv : cli::config_echo(config)) report.config_echo.push_back(std::move(kv));
    for (const auto& d : loaded.skipped) report.warnings.push_back("skipped row: " + d.to_string());
    write_report(report, config.out_dir);
    for (const auto& w : report.warnings) fmt::print(err, "warning: {}\n", w);
    fmt::print(out, "analyzed {} instances -> {}\n", corpus.size(), config.out_dir.string());
    return config.strict && !report.warnings.empty() ? kExitWarnings : kExitOk;
  });
}

}  // namespace metricide::cli
