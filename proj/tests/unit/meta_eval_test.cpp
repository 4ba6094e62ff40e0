#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "metricide/meta_eval.hpp"
#include "metricide/report.hpp"
#include "metricide/scorer.hpp"

namespace metricide {
namespace {

using test::make_instance;

// Paired two-system corpus with random medians and random metric values.
struct Synthetic {
  Corpus corpus;
  std::vector<MetricVector> scores;
};

Synthetic synthetic(std::mt19937& rng, std::size_t pairs_per_dataset,
                    std::vector<std::string> datasets = {"D1", "D2"}) {
  Synthetic s;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& d : datasets) {
    for (std::size_t p = 0; p < pairs_per_dataset; ++p) {
      for (const char* sys : {"A", "B"}) {
        const std::string key = d + "-" + std::to_string(p);
        auto inst = make_instance(key + sys, d, sys,
                                  {1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 6),
                                   1 + static_cast<int>(rng() % 6)},
                                  key);
        if (p % 3 == 0) inst.mr = parse_mr("confirm(area=X)");
        s.corpus.instances.push_back(inst);
        MetricVector v;
        for (const auto& info : metric_catalogue()) v[info.metric] = u(rng);
        s.scores.push_back(v);
      }
    }
  }
  return s;
}

double median_of(const Instance& i, Dimension d) { return i.median(d); }

// --- quantization --------------------------------------------------------------

TEST(Quantize, MinMaxExamples) {
  EXPECT_EQ(quantize(std::vector<double>{0.0, 1.0, 0.5}, QuantStrategy::minmax),
            (std::vector<int>{1, 6, 4}));
  const std::vector<double> ints = {1, 2, 3, 4, 5, 6, 3};
  EXPECT_EQ(quantize(ints, QuantStrategy::minmax), (std::vector<int>{1, 2, 3, 4, 5, 6, 3}));
}

TEST(Quantize, ConstantInputMapsToSix) {
  bool constant = false;
  EXPECT_EQ(quantize(std::vector<double>{2.5, 2.5}, QuantStrategy::minmax, &constant),
            (std::vector<int>{6, 6}));
  EXPECT_TRUE(constant);
}

TEST(Quantize, NegatedTerPutsSmallestOnTop) {
  const std::vector<double> ter = {0.1, 0.5, 0.9, 0.3};
  std::vector<double> oriented;
  for (double t : ter) oriented.push_back(-t);
  const auto q = quantize(oriented, QuantStrategy::minmax);
  EXPECT_EQ(q[0], 6);
  EXPECT_EQ(q[2], 1);
}

TEST(Quantize, EqualFrequency) {
  EXPECT_EQ(quantize(std::vector<double>{10, 20, 30, 40, 50, 60}, QuantStrategy::eqfreq),
            (std::vector<int>{1, 2, 3, 4, 5, 6}));
}

TEST(Quantize, PreservesWeakOrder) {
  std::mt19937 rng(201);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> v(2 + rng() % 50);
    for (auto& x : v) x = rng() % 4 == 0 ? std::round(u(rng)) : u(rng);
    for (auto s : {QuantStrategy::minmax, QuantStrategy::eqfreq}) {
      const auto q = quantize(v, s);
      for (std::size_t i = 0; i < v.size(); ++i) {
        EXPECT_GE(q[i], kMinRating);
        EXPECT_LE(q[i], kMaxRating);
        for (std::size_t j = 0; j < v.size(); ++j) {
          if (v[i] <= v[j]) EXPECT_LE(q[i], q[j]);
        }
      }
    }
  }
}

// --- ranking accuracy ----------------------------------------------------------

TEST(RankingAccuracy, MetricEqualToHumanIsPerfect) {
  std::mt19937 rng(203);
  std::vector<std::pair<int, int>> human;
  std::vector<std::pair<double, double>> metric;
  for (int i = 0; i < 200; ++i) {
    const int a = 1 + static_cast<int>(rng() % 6), b = 1 + static_cast<int>(rng() % 6);
    human.emplace_back(a, b);
    metric.emplace_back(a, b);
  }
  EXPECT_EQ(ranking_accuracy(metric, human, Orientation::higher_better, 0.0), 100.0);
}

TEST(RankingAccuracy, InvariantUnderIncreasingTransforms) {
  std::mt19937 rng(207);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<int, int>> human;
    std::vector<std::pair<double, double>> metric, moved;
    const double a = 0.5 + u(rng) * 5, b = u(rng) * 10 - 5;
    auto f = [&](double x) { return a * x * x * x + std::exp(x) + b; };
    for (int i = 0; i < 60; ++i) {
      human.emplace_back(1 + rng() % 6, 1 + rng() % 6);
      const double x = std::round(u(rng) * 8) / 8, y = std::round(u(rng) * 8) / 8;
      metric.emplace_back(x, y);
      moved.emplace_back(f(x), f(y));
    }
    for (auto o : {Orientation::higher_better, Orientation::lower_better}) {
      EXPECT_EQ(ranking_accuracy(metric, human, o, 0.0), ranking_accuracy(moved, human, o, 0.0));
    }
  }
}

TEST(RankingAccuracy, TiesAndOrientation) {
  EXPECT_EQ(metric_relation(1.0, 1.0, Orientation::higher_better, 0.0), Relation::equal);
  EXPECT_EQ(metric_relation(0.98, 1.0, Orientation::higher_better, 0.0), Relation::less);
  EXPECT_EQ(metric_relation(0.98, 1.0, Orientation::higher_better, 0.05), Relation::equal);
  EXPECT_EQ(metric_relation(0.2, 0.4, Orientation::lower_better, 0.0), Relation::greater);
  EXPECT_EQ(human_relation(3, 3), Relation::equal);
}

TEST(RankingAccuracy, NoPairsThrows) {
  EXPECT_THROW(ranking_accuracy({}, {}, Orientation::higher_better, 0.0), std::invalid_argument);
}

TEST(AccuracyTable, MedianAsMetricScoresHundred) {
  std::mt19937 rng(211);
  auto s = synthetic(rng, 40);
  for (std::size_t i = 0; i < s.corpus.size(); ++i) {
    s.scores[i][Metric::bleu1] = median_of(s.corpus.instances[i], Dimension::informativeness);
    s.scores[i][Metric::ter] = -median_of(s.corpus.instances[i], Dimension::informativeness);
  }
  Warnings w;
  const auto rows = accuracy_table(s.corpus, s.scores, {}, w);
  int seen = 0;
  for (const auto& r : rows) {
    if (r.dimension != Dimension::informativeness || r.quantized) continue;
    if (r.metric == "bleu1" || r.metric == "ter") {
      EXPECT_EQ(r.accuracy, 100.0) << r.metric;
      EXPECT_EQ(r.pairs, 40u);
      ++seen;
    }
    if (r.metric == "len") ADD_FAILURE() << "unoriented metric ranked";
  }
  EXPECT_EQ(seen, 4);
}

TEST(AccuracyTable, QuantizedSectionAndRandomRows) {
  std::mt19937 rng(213);
  const auto s = synthetic(rng, 30);
  AnalysisConfig cfg;
  cfg.quantize = true;
  cfg.seed = 5;
  Warnings w;
  const auto rows = accuracy_table(s.corpus, s.scores, cfg, w);
  std::size_t rand_rows = 0, quant_rows = 0;
  for (const auto& r : rows) {
    rand_rows += r.metric == "rand";
    quant_rows += r.quantized;
    EXPECT_GE(r.accuracy, 0.0);
    EXPECT_LE(r.accuracy, 100.0);
    if (r.p_value) EXPECT_EQ(r.significant, *r.p_value < cfg.alpha);
  }
  EXPECT_EQ(rand_rows, 2u * 3u * 2u);  // datasets x dimensions x {raw, quantized}
  EXPECT_EQ(quant_rows, rows.size() / 2);
}

TEST(AccuracyTable, IncreasingTransformOfAColumnKeepsAccuracy) {
  std::mt19937 rng(217);
  const auto s = synthetic(rng, 30);
  auto moved = s.scores;
  for (auto& v : moved) v[Metric::rouge] = std::exp(3 * *v[Metric::rouge]) - 7;
  Warnings w1, w2;
  const auto a = accuracy_table(s.corpus, s.scores, {}, w1);
  const auto b = accuracy_table(s.corpus, moved, {}, w2);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].accuracy, b[i].accuracy);
    EXPECT_EQ(a[i].p_value, b[i].p_value);
  }
}

// --- system summaries ----------------------------------------------------------

TEST(SystemSummary, DuplicatedCorpusKeepsMeans) {
  std::mt19937 rng(219);
  const auto s = synthetic(rng, 15);
  Corpus twice = s.corpus;
  auto scores_twice = s.scores;
  for (const auto& inst : s.corpus.instances) {
    auto copy = inst;
    copy.instance_id += "-dup";
    copy.pair_key.clear();
    twice.instances.push_back(copy);
  }
  scores_twice.insert(scores_twice.end(), s.scores.begin(), s.scores.end());
  Warnings w;
  const auto a = system_summary(s.corpus, s.scores, {}, w);
  const auto b = system_summary(twice, scores_twice, {}, w);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t g = 0; g < a.size(); ++g) {
    EXPECT_EQ(b[g].instances, 2 * a[g].instances);
    for (std::size_t f = 0; f < kFieldCount; ++f) {
      ASSERT_EQ(a[g].fields[f].mean.has_value(), b[g].fields[f].mean.has_value());
      if (a[g].fields[f].mean) {
        EXPECT_NEAR(*a[g].fields[f].mean, *b[g].fields[f].mean, 1e-12) << a[g].fields[f].field;
      }
    }
  }
}

TEST(SystemSummary, IdenticalSystemsNeverSignificant) {
  std::mt19937 rng(223);
  auto s = synthetic(rng, 20, {"D"});
  for (std::size_t i = 0; i + 1 < s.corpus.size(); i += 2) {
    auto& b = s.corpus.instances[i + 1];
    b.ratings = s.corpus.instances[i].ratings;
    s.scores[i + 1] = s.scores[i];
  }
  Warnings w;
  for (const auto& sys : system_summary(s.corpus, s.scores, {}, w)) {
    for (const auto& f : sys.fields) EXPECT_FALSE(f.significant) << f.field;
  }
}

TEST(SystemSummary, SingleSystemHasNoSignificance) {
  Corpus c;
  std::vector<MetricVector> scores;
  for (int i = 0; i < 5; ++i) {
    c.instances.push_back(make_instance("i" + std::to_string(i), "D", "Only", {i % 6 + 1, 3, 4}));
    MetricVector v;
    v[Metric::bleu1] = i * 0.1;
    scores.push_back(v);
  }
  Warnings w;
  const auto rows = system_summary(c, scores, {}, w);
  ASSERT_EQ(rows.size(), 1u);
  for (const auto& f : rows[0].fields) {
    EXPECT_FALSE(f.p_value.has_value());
    EXPECT_FALSE(f.significant);
  }
  const auto& inf = rows[0].fields[kMetricCount];
  EXPECT_EQ(inf.field, "informativeness");
  EXPECT_DOUBLE_EQ(*inf.mean, 3.0);
  EXPECT_NEAR(*inf.sd, std::sqrt(2.5), 1e-12);
}

// --- correlation tables --------------------------------------------------------

TEST(CorrelationTable, MedianColumnCorrelatesPerfectly) {
  std::mt19937 rng(227);
  auto s = synthetic(rng, 20);
  for (std::size_t i = 0; i < s.corpus.size(); ++i) {
    s.scores[i][Metric::wps] = median_of(s.corpus.instances[i], Dimension::naturalness);
  }
  Warnings w;
  const auto tables = correlation_tables(s.corpus, s.scores, {}, w);
  ASSERT_FALSE(tables.empty());
  for (const auto& t : tables) {
    const auto it = std::find(t.metrics.begin(), t.metrics.end(), Metric::wps);
    ASSERT_NE(it, t.metrics.end());
    const auto& cell = t.cells[it - t.metrics.begin()][1];
    if (cell.rho) {
      EXPECT_NEAR(*cell.rho, 1.0, 1e-12) << t.group.label();
      EXPECT_EQ(t.best_gbm[1], Metric::wps);
    }
  }
}

TEST(CorrelationTable, GroupingsAndPairwiseDeletion) {
  std::mt19937 rng(229);
  auto s = synthetic(rng, 10);
  for (std::size_t i = 0; i < s.corpus.size(); i += 4) s.scores[i][Metric::prs].reset();
  Warnings w;
  const auto tables = correlation_tables(s.corpus, s.scores, {}, w);
  // 4 dataset x system, 2 datasets, 2 systems, 1 overall.
  EXPECT_EQ(tables.size(), 9u);
  const auto& all = tables.back();
  EXPECT_EQ(all.group.grouping, Grouping::all);
  const auto prs = std::find(all.metrics.begin(), all.metrics.end(), Metric::prs) - all.metrics.begin();
  const auto ter = std::find(all.metrics.begin(), all.metrics.end(), Metric::ter) - all.metrics.begin();
  EXPECT_EQ(all.cells[prs][0].n, 30u);
  EXPECT_EQ(all.cells[ter][0].n, 40u);
  for (const auto& t : tables) {
    for (const auto& row : t.cells) {
      for (const auto& c : row) {
        if (c.p_value) EXPECT_EQ(c.significant, *c.p_value < 0.05);
        if (c.rho) EXPECT_LE(std::abs(*c.rho), 1.0);
      }
    }
  }
}

TEST(CorrelationTable, AbsentParseScoresWarned) {
  std::mt19937 rng(231);
  auto s = synthetic(rng, 10);
  for (auto& v : s.scores) v[Metric::prs].reset();
  Warnings w;
  const auto tables = correlation_tables(s.corpus, s.scores, {}, w);
  for (const auto& t : tables) {
    EXPECT_EQ(std::count(t.metrics.begin(), t.metrics.end(), Metric::prs), 0);
  }
  EXPECT_TRUE(std::any_of(w.begin(), w.end(), [](const std::string& m) {
    return m.rfind("prs:", 0) == 0;
  }));
}

TEST(CorrelationTable, WilliamsGridIsAntisymmetric) {
  std::mt19937 rng(233);
  const auto s = synthetic(rng, 25);
  Warnings w;
  for (const auto& t : correlation_tables(s.corpus, s.scores, {}, w)) {
    for (std::size_t d = 0; d < 3; ++d) {
      const auto& g = t.williams[d];
      for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = 0; b < g.size(); ++b) {
          if (g[a][b].t && g[b][a].t) {
            EXPECT_DOUBLE_EQ(*g[a][b].t, -*g[b][a].t);
            EXPECT_EQ(g[a][b].indistinguishable, g[b][a].indistinguishable);
          }
        }
      }
    }
  }
}

TEST(CorrelationTable, SmallGroupsSkipped) {
  std::mt19937 rng(235);
  auto s = synthetic(rng, 1, {"Tiny"});
  Warnings w;
  EXPECT_TRUE(correlation_tables(s.corpus, s.scores, {}, w).empty());
  EXPECT_FALSE(w.empty());
}

TEST(SystemContrasts, IdenticalSystemsNotSignificant) {
  std::mt19937 rng(237);
  auto s = synthetic(rng, 20, {"D"});
  for (std::size_t i = 0; i + 1 < s.corpus.size(); i += 2) {
    s.corpus.instances[i + 1].ratings = s.corpus.instances[i].ratings;
    s.scores[i + 1] = s.scores[i];
  }
  Warnings w;
  const auto tables = correlation_tables(s.corpus, s.scores, {}, w);
  const auto contrasts = system_contrasts(tables, {});
  EXPECT_FALSE(contrasts.empty());
  for (const auto& c : contrasts) EXPECT_FALSE(c.significant);
}

// --- bins ----------------------------------------------------------------------

TEST(Bins, Membership) {
  EXPECT_EQ(bin_of(1), Bin::bad);
  EXPECT_EQ(bin_of(2), Bin::bad);
  EXPECT_EQ(bin_of(3), Bin::average);
  EXPECT_EQ(bin_of(4), Bin::average);
  EXPECT_EQ(bin_of(5), Bin::good);
  EXPECT_EQ(bin_of(6), Bin::good);
}

TEST(Bins, PartitionAndShares) {
  std::mt19937 rng(239);
  const auto s = synthetic(rng, 40);
  Warnings w;
  for (const auto& t : bin_analysis(s.corpus, s.scores, {}, w)) {
    const auto total = t.counts[0] + t.counts[1] + t.counts[2];
    EXPECT_EQ(total, t.scope == "all" ? 160u : 80u);
    EXPECT_NEAR(t.shares[0] + t.shares[1] + t.shares[2], 100.0, 1e-9);
  }
}

TEST(Bins, AllSixLeavesLowBinsInsufficient) {
  Corpus c;
  std::vector<MetricVector> scores;
  for (int i = 0; i < 10; ++i) {
    c.instances.push_back(make_instance("i" + std::to_string(i), "D", "S", {6, 6, 6}));
    MetricVector v;
    v[Metric::bleu1] = i;
    scores.push_back(v);
  }
  Warnings w;
  for (const auto& t : bin_analysis(c, scores, {}, w)) {
    EXPECT_EQ(t.counts[0], 0u);
    EXPECT_EQ(t.counts[1], 0u);
    EXPECT_FALSE(t.bad_sufficient);
    EXPECT_EQ(t.shares[2], 100.0);
  }
  EXPECT_FALSE(w.empty());
}

// --- MR type split -------------------------------------------------------------

TEST(MrType, InformFamily) {
  EXPECT_TRUE(is_inform_type(parse_mr("inform(a=b)")));
  EXPECT_TRUE(is_inform_type(parse_mr("inform_nomatch(a=b)")));
  EXPECT_TRUE(is_inform_type(parse_mr("inform_only_match(a=b)")));
  EXPECT_FALSE(is_inform_type(parse_mr("confirm(a=b)")));
  EXPECT_FALSE(is_inform_type(parse_mr("goodbye()")));
}

TEST(MrType, OnlyInformGivesSingleGroupWithWarning) {
  std::mt19937 rng(241);
  auto s = synthetic(rng, 10, {"OnlyInform"});
  for (auto& i : s.corpus.instances) i.mr = parse_mr("inform(name=X)");
  Warnings w;
  const auto tables = mr_type_split(s.corpus, s.scores, {}, w);
  ASSERT_FALSE(tables.empty());
  for (const auto& t : tables) {
    EXPECT_EQ(t.other_count, 0u);
    EXPECT_EQ(t.inform_count, 20u);
  }
  EXPECT_FALSE(w.empty());
}

TEST(MrType, DuplicatedGroupsNotSignificant) {
  std::mt19937 rng(243);
  auto s = synthetic(rng, 20, {"D"});
  // Second half is a copy of the first with a non-inform act.
  const std::size_t half = s.corpus.size() / 2;
  for (std::size_t i = 0; i < half; ++i) {
    s.corpus.instances[i].mr = parse_mr("inform(a=b)");
    auto& other = s.corpus.instances[half + i];
    other.ratings = s.corpus.instances[i].ratings;
    other.mr = parse_mr("confirm(a=b)");
    s.scores[half + i] = s.scores[i];
  }
  Warnings w;
  for (const auto& t : mr_type_split(s.corpus, s.scores, {}, w)) {
    for (const auto& r : t.rows) EXPECT_FALSE(r.significant);
  }
}

// --- reliability and full report ------------------------------------------------

TEST(Reliability, PooledAndPerDimension) {
  std::mt19937 rng(247);
  const auto s = synthetic(rng, 20);
  Warnings w;
  const auto rows = reliability(s.corpus, w);
  // ("all" + 2 datasets) x (3 dimensions + pooled)
  EXPECT_EQ(rows.size(), 12u);
  for (const auto& r : rows) {
    const std::size_t per_scope = r.scope == "all" ? 80u : 40u;
    EXPECT_EQ(r.items, r.dimension == "all" ? 3 * per_scope : per_scope);
    for (const auto& m : r.models) {
      if (m) EXPECT_LE(m->icc, 1.0 + 1e-12);
    }
  }
}

TEST(Analyze, DeterministicAndComplete) {
  const auto corpus = load_corpus(test::fixture("corpus.csv"), CorpusFormat::csv).corpus;
  const Dictionary dict = Dictionary::load(default_dictionary_path());
  ScoringConfig sc;
  sc.metrics.set(Metric::sim, false);
  sc.dictionary = &dict;
  const auto scores = score_corpus(corpus, sc);
  AnalysisConfig cfg;
  cfg.quantize = true;
  const auto a = analyze(corpus, scores, cfg);
  const auto b = analyze(corpus, scores, cfg);
  EXPECT_EQ(report_json(a), report_json(b));
  EXPECT_EQ(a.system_summaries.size(), 4u);
  EXPECT_FALSE(a.correlation_tables.empty());
  EXPECT_FALSE(a.accuracy_table.empty());
  EXPECT_FALSE(a.bin_table.empty());
  EXPECT_FALSE(a.mr_type_split.empty());
  EXPECT_FALSE(a.reliability.empty());
  EXPECT_TRUE(std::any_of(a.config_echo.begin(), a.config_echo.end(),
                          [](const auto& kv) { return kv.first == "random_generator"; }));
}

TEST(Analyze, SizeMismatchThrows) {
  Corpus c;
  c.instances.push_back(make_instance("a", "D", "S", {3, 3, 3}));
  EXPECT_THROW(analyze(c, {}, {}), std::invalid_argument);
}

}  // namespace
}  // namespace metricide
