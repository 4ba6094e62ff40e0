#include <gtest/gtest.h>

#include <filesystem>
#include <map>
#include <random>

#include "helpers.hpp"
#include "metricide/report.hpp"
#include "metricide/scorer.hpp"

namespace metricide {
namespace {

namespace fs = std::filesystem;

std::map<std::string, std::string> tree(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) out[fs::relative(e.path(), root).string()] = read_file(e.path());
  }
  return out;
}

TEST(WriteFileAtomic, CreatesParentsAndReplaces) {
  const auto dir = test::scratch_dir("atomic");
  const auto path = dir / "a" / "b" / "out.txt";
  write_file_atomic(path, "first");
  EXPECT_EQ(read_file(path), "first");
  write_file_atomic(path, "second");
  EXPECT_EQ(read_file(path), "second");
  EXPECT_FALSE(fs::exists(dir / "a" / "b" / "out.txt.partial"));
}

TEST(FormatValue, AbsentAndNonFinite) {
  EXPECT_EQ(format_value(std::optional<double>{}), "NA");
  EXPECT_EQ(format_value(std::nan("")), "NA");
  EXPECT_EQ(format_value(0.25), "0.25");
  EXPECT_EQ(format_value(0.1), "0.1");
}

TEST(Table, TsvAndCsv) {
  const Table t{{"a", "b"}, {{"x,y", "1"}, {"p\"q", "NA"}}};
  EXPECT_EQ(t.to_tsv(), "a\tb\nx,y\t1\np\"q\tNA\n");
  EXPECT_EQ(t.to_csv(), "a,b\n\"x,y\",1\n\"p\"\"q\",NA\n");
}

TEST(ScoresTsv, RoundTripsExactly) {
  const auto corpus = load_corpus(test::fixture("corpus.csv"), CorpusFormat::csv).corpus;
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  std::vector<MetricVector> scores(corpus.size());
  for (auto& v : scores) {
    for (const auto& info : metric_catalogue()) {
      if (rng() % 5) v[info.metric] = u(rng);
    }
  }
  EXPECT_EQ(parse_scores_tsv(scores_tsv(corpus, scores), corpus), scores);
}

TEST(ScoresTsv, Errors) {
  const auto corpus = load_corpus(test::fixture("three_rows.csv"), CorpusFormat::csv).corpus;
  std::vector<MetricVector> scores(corpus.size());
  auto doc = scores_tsv(corpus, scores);
  Corpus more = corpus;
  more.instances.push_back(test::make_instance("extra", "D", "S", {1, 1, 1}));
  EXPECT_THROW(parse_scores_tsv(doc, more), std::runtime_error);
  EXPECT_THROW(parse_scores_tsv("", corpus), std::runtime_error);
  EXPECT_THROW(parse_scores_tsv("bleu1\n0.5\n", corpus), std::runtime_error);
  EXPECT_THROW(parse_scores_tsv("instance_id\tbleu1\nt1\tabc\n", corpus), std::runtime_error);
}

TEST(WriteReport, SameReportSameBytes) {
  const auto corpus = load_corpus(test::fixture("corpus.csv"), CorpusFormat::csv).corpus;
  const Dictionary dict = Dictionary::load(default_dictionary_path());
  ScoringConfig sc;
  sc.metrics.set(Metric::sim, false);
  sc.dictionary = &dict;
  const auto scores = score_corpus(corpus, sc);
  AnalysisConfig cfg;
  cfg.quantize = true;
  const auto a = test::scratch_dir("report-a");
  const auto b = test::scratch_dir("report-b");
  write_report(analyze(corpus, scores, cfg), a);
  write_report(analyze(corpus, scores, cfg), b);
  const auto ta = tree(a);
  EXPECT_EQ(ta, tree(b));
  EXPECT_TRUE(ta.contains("report.json"));
  EXPECT_TRUE(ta.contains("tables/accuracy.tsv"));
  EXPECT_TRUE(ta.contains("tables/icc.tsv"));
  for (const auto& [name, body] : ta) {
    EXPECT_FALSE(body.empty()) << name;
    EXPECT_FALSE(name.ends_with(".partial")) << name;
  }
}

}  // namespace
}  // namespace metricide
