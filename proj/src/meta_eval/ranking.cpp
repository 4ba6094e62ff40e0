#include <algorithm>
#include <cmath>

#include "columns.hpp"

namespace metricide {

std::string_view quant_strategy_name(QuantStrategy s) {
  return s == QuantStrategy::minmax ? "minmax" : "eqfreq";
}

std::optional<QuantStrategy> quant_strategy_from_name(std::string_view name) {
  if (name == "minmax") return QuantStrategy::minmax;
  if (name == "eqfreq") return QuantStrategy::eqfreq;
  return std::nullopt;
}

Relation human_relation(int a, int b) {
  if (a < b) return Relation::less;
  if (a > b) return Relation::greater;
  return Relation::equal;
}

Relation metric_relation(double a, double b, Orientation orientation, double epsilon) {
  if (std::abs(a - b) <= epsilon) return Relation::equal;
  const bool a_better = orientation == Orientation::lower_better ? a < b : a > b;
  return a_better ? Relation::greater : Relation::less;
}

std::vector<int> quantize(std::span<const double> values, QuantStrategy strategy,
                          bool* constant) {
  if (constant) *constant = false;
  std::vector<int> out(values.size(), kMaxRating);
  if (values.empty()) return out;
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it, hi = *hi_it;
  if (lo == hi) {
    if (constant) *constant = true;
    return out;
  }
  if (strategy == QuantStrategy::minmax) {
    const double span = static_cast<double>(kMaxRating - kMinRating);
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double scaled = kMinRating + span * (values[i] - lo) / (hi - lo);
      out[i] = std::clamp(static_cast<int>(std::round(scaled)), kMinRating, kMaxRating);
    }
  } else {
    const auto ranks = stats::rank_with_ties(values);
    const double n = static_cast<double>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      out[i] = std::clamp(static_cast<int>(std::ceil(kMaxRating * ranks[i] / n)), kMinRating,
                          kMaxRating);
    }
  }
  return out;
}

std::vector<bool> pair_agreement(std::span<const std::pair<double, double>> metric,
                                 std::span<const std::pair<int, int>> human,
                                 Orientation orientation, double epsilon) {
  if (metric.size() != human.size()) throw std::invalid_argument("pair_agreement: length mismatch");
  std::vector<bool> out(metric.size());
  for (std::size_t i = 0; i < metric.size(); ++i) {
    out[i] = metric_relation(metric[i].first, metric[i].second, orientation, epsilon) ==
             human_relation(human[i].first, human[i].second);
  }
  return out;
}

double ranking_accuracy(std::span<const std::pair<double, double>> metric,
                        std::span<const std::pair<int, int>> human, Orientation orientation,
                        double epsilon) {
  if (metric.empty()) throw std::invalid_argument("ranking_accuracy: no pairs");
  const auto ok = pair_agreement(metric, human, orientation, epsilon);
  return 100.0 * static_cast<double>(std::count(ok.begin(), ok.end(), true)) /
         static_cast<double>(ok.size());
}

bool is_ranked(Metric m) { return metric_info(m).orientation != Orientation::none; }

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

std::vector<double> as_doubles(const std::vector<bool>& v) {
  return {v.begin(), v.end()};
}

double percent(const std::vector<bool>& v) {
  return 100.0 * static_cast<double>(std::count(v.begin(), v.end(), true)) /
         static_cast<double>(v.size());
}

// Oriented (higher = better) values quantized within one dataset; instances
// without a value stay absent.
std::vector<std::optional<double>> quantized_column(const std::vector<std::optional<double>>& raw,
                                                    Orientation orientation, QuantStrategy s,
                                                    bool& constant) {
  std::vector<double> vals;
  for (const auto& x : raw) {
    if (x) vals.push_back(orientation == Orientation::lower_better ? -*x : *x);
  }
  const auto q = quantize(vals, s, &constant);
  std::vector<std::optional<double>> out(raw.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i]) out[i] = q[k++];
  }
  return out;
}

struct Candidate {
  std::string name;
  Orientation orientation;
  std::vector<std::optional<double>> values;  // indexed like the dataset rows
};

}  // namespace

std::vector<AccuracyRow> accuracy_table(const Corpus& corpus,
                                        std::span<const MetricVector> scores,
                                        const AnalysisConfig& config, Warnings& warnings) {
  std::vector<AccuracyRow> out;
  const auto random = stats::random_baseline(corpus.size(), config.seed);
  const auto by_dataset = detail::group_by(corpus, [](const Instance& i) { return i.dataset; });

  for (const auto& [dataset, rows] : by_dataset) {
    // Pairs as positions into `rows`, ordered by pair key.
    std::map<std::string, std::vector<std::size_t>> members;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const auto& key = corpus.instances[rows[k]].pair_key;
      if (!key.empty()) members[key].push_back(k);
    }
    std::vector<Pair> pairs;
    for (const auto& [key, m] : members) {
      if (m.size() == 2) pairs.emplace_back(m[0], m[1]);
    }
    if (pairs.empty()) {
      warnings.push_back("accuracy_table: dataset " + dataset + " has no output pairs; skipped");
      continue;
    }

    std::vector<std::optional<double>> rand_col;
    for (std::size_t i : rows) rand_col.push_back(random[i]);

    std::vector<Candidate> raw;
    for (const auto& info : metric_catalogue()) {
      if (!is_ranked(info.metric)) continue;
      auto col = detail::column(corpus, scores, rows, detail::metric_field(info.metric));
      if (std::none_of(col.begin(), col.end(), [](const auto& x) { return x.has_value(); })) continue;
      raw.push_back({std::string(info.name), info.orientation, std::move(col)});
    }

    auto evaluate = [&](const std::vector<Candidate>& candidates, const Candidate& rnd,
                        bool quantized, double epsilon) {
      for (Dimension d : kDimensions) {
        std::vector<int> medians;
        for (std::size_t i : rows) medians.push_back(corpus.instances[i].median(d));

        auto agreement = [&](const Candidate& c, const std::vector<Pair>& use) {
          std::vector<std::pair<double, double>> mv;
          std::vector<std::pair<int, int>> hv;
          for (const auto& [a, b] : use) {
            mv.emplace_back(*c.values[a], *c.values[b]);
            hv.emplace_back(medians[a], medians[b]);
          }
          return pair_agreement(mv, hv, c.orientation, epsilon);
        };

        const auto rand_all = agreement(rnd, pairs);
        out.push_back({dataset, d, "rand", quantized, pairs.size(), percent(rand_all),
                       percent(rand_all), std::nullopt, false});

        for (const auto& c : candidates) {
          std::vector<Pair> use;
          for (const auto& p : pairs) {
            if (c.values[p.first] && c.values[p.second]) use.push_back(p);
          }
          if (use.empty()) continue;
          const auto hits = agreement(c, use);
          const auto rand_hits = agreement(rnd, use);
          const auto w = stats::wilcoxon_signed_rank(as_doubles(hits), as_doubles(rand_hits),
                                                     config.wilcoxon_zeros);
          AccuracyRow row{dataset, d, c.name, quantized, use.size(), percent(hits),
                          percent(rand_hits), w.p_value, false};
          row.significant = !w.all_zero && w.p_value < config.alpha;
          out.push_back(std::move(row));
        }
      }
    };

    evaluate(raw, {"rand", Orientation::higher_better, rand_col}, false, config.epsilon);

    if (config.quantize) {
      std::vector<Candidate> quant;
      for (const auto& c : raw) {
        bool constant = false;
        auto q = quantized_column(c.values, c.orientation, config.quant_strategy, constant);
        if (constant) {
          warnings.push_back("quantize: " + c.name + " is constant in " + dataset +
                             "; every value mapped to 6");
        }
        quant.push_back({c.name, Orientation::higher_better, std::move(q)});
      }
      bool constant = false;
      Candidate rnd{"rand", Orientation::higher_better,
                    quantized_column(rand_col, Orientation::higher_better,
                                     config.quant_strategy, constant)};
      // Quantized scores tie only on exact equality.
      evaluate(quant, rnd, true, 0.0);
    }
  }
  return out;
}

}  // namespace metricide
