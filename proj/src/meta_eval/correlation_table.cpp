#include <cmath>

#include "columns.hpp"

namespace metricide {

std::string_view grouping_name(Grouping g) {
  switch (g) {
    case Grouping::dataset_system:
      return "dataset_system";
    case Grouping::dataset:
      return "dataset";
    case Grouping::system:
      return "system";
    case Grouping::all:
      return "all";
  }
  return "?";
}

std::string GroupKey::label() const {
  switch (grouping) {
    case Grouping::dataset_system:
      return dataset + "/" + system;
    case Grouping::dataset:
      return dataset;
    case Grouping::system:
      return system;
    case Grouping::all:
      return "all";
  }
  return "?";
}

CorrelationCell correlate(std::span<const std::optional<double>> x,
                          std::span<const std::optional<double>> y, double alpha) {
  if (x.size() != y.size()) throw std::invalid_argument("correlate: length mismatch");
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] && y[i]) {
      xs.push_back(*x[i]);
      ys.push_back(*y[i]);
    }
  }
  CorrelationCell cell;
  cell.n = xs.size();
  try {
    const auto r = stats::spearman(xs, ys);
    cell.rho = r.rho;
    cell.p_value = r.p_value;
    cell.significant = r.p_value < alpha;
  } catch (const stats::UndefinedStatistic&) {
    // too few pairs or a constant column: leave the cell empty
  }
  return cell;
}

namespace {

using Column = std::vector<std::optional<double>>;

bool complete(const Column& c) {
  for (const auto& x : c) {
    if (!x) return false;
  }
  return true;
}

WilliamsCell williams_cell(const Column& a, const Column& b, const Column& human,
                           const CorrelationCell& a_h, const CorrelationCell& b_h,
                           const CorrelationCell& a_b, double alpha) {
  WilliamsCell w;
  std::optional<double> r12 = a_h.rho, r13 = b_h.rho, r23 = a_b.rho;
  w.n = a_h.n;
  if (!complete(a) || !complete(b)) {
    // Re-estimate all three correlations on the rows where every value exists.
    Column a2, b2, h2;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] && b[i] && human[i]) {
        a2.push_back(a[i]);
        b2.push_back(b[i]);
        h2.push_back(human[i]);
      }
    }
    r12 = correlate(a2, h2, alpha).rho;
    r13 = correlate(b2, h2, alpha).rho;
    r23 = correlate(a2, b2, alpha).rho;
    w.n = a2.size();
  }
  if (!r12 || !r13 || !r23) return w;
  try {
    const auto t = stats::williams_test(*r12, *r13, *r23, w.n);
    w.t = t.statistic;
    w.p_value = t.p_value;
    w.indistinguishable = t.p_value >= alpha;
  } catch (const stats::UndefinedStatistic&) {
    // singular triple (e.g. two metrics that rank identically)
  }
  return w;
}

CorrelationTable build_table(const Corpus& corpus, std::span<const MetricVector> scores,
                             const GroupKey& key, const std::vector<std::size_t>& rows,
                             double alpha) {
  CorrelationTable t;
  t.group = key;
  t.instances = rows.size();
  t.metrics = detail::present_metrics(scores, rows);
  const std::size_t m = t.metrics.size();

  std::vector<Column> cols;
  for (Metric metric : t.metrics) {
    cols.push_back(detail::column(corpus, scores, rows, detail::metric_field(metric)));
  }
  std::array<Column, 3> human;
  for (Dimension d : kDimensions) {
    human[static_cast<std::size_t>(d)] =
        detail::column(corpus, scores, rows, detail::dimension_field(d));
  }

  t.cells.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t d = 0; d < 3; ++d) t.cells[r][d] = correlate(cols[r], human[d], alpha);
  }

  for (std::size_t d = 0; d < 3; ++d) {
    double best_w = -1.0, best_g = -1.0;
    for (std::size_t r = 0; r < m; ++r) {
      const auto& rho = t.cells[r][d].rho;
      if (!rho) continue;
      const bool wbm = metric_info(t.metrics[r]).kind == MetricKind::word_based;
      double& best = wbm ? best_w : best_g;
      auto& slot = wbm ? t.best_wbm[d] : t.best_gbm[d];
      if (std::abs(*rho) > best) {
        best = std::abs(*rho);
        slot = t.metrics[r];
      }
    }
  }

  t.metric_matrix.assign(m, std::vector<CorrelationCell>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      t.metric_matrix[a][b] = correlate(cols[a], cols[b], alpha);
      t.metric_matrix[b][a] = t.metric_matrix[a][b];
    }
  }

  for (std::size_t d = 0; d < 3; ++d) {
    auto& grid = t.williams[d];
    grid.assign(m, std::vector<WilliamsCell>(m));
    for (std::size_t a = 0; a < m; ++a) {
      grid[a][a].t = 0.0;
      grid[a][a].p_value = 1.0;
      grid[a][a].n = t.cells[a][d].n;
      grid[a][a].indistinguishable = true;
      for (std::size_t b = a + 1; b < m; ++b) {
        grid[a][b] = williams_cell(cols[a], cols[b], human[d], t.cells[a][d], t.cells[b][d],
                                   t.metric_matrix[a][b], alpha);
        grid[b][a] = grid[a][b];
        if (grid[b][a].t) grid[b][a].t = -*grid[b][a].t;
      }
    }
  }
  return t;
}

}  // namespace

std::vector<CorrelationTable> correlation_tables(const Corpus& corpus,
                                                 std::span<const MetricVector> scores,
                                                 const AnalysisConfig& config,
                                                 Warnings& warnings) {
  std::vector<std::pair<GroupKey, std::vector<std::size_t>>> groups;
  for (auto& [k, rows] : detail::group_by(
           corpus, [](const Instance& i) { return i.dataset + '\x1f' + i.system; })) {
    const auto sep = k.find('\x1f');
    groups.push_back({{Grouping::dataset_system, k.substr(0, sep), k.substr(sep + 1)}, rows});
  }
  for (auto& [k, rows] : detail::group_by(corpus, [](const Instance& i) { return i.dataset; })) {
    groups.push_back({{Grouping::dataset, k, ""}, rows});
  }
  for (auto& [k, rows] : detail::group_by(corpus, [](const Instance& i) { return i.system; })) {
    groups.push_back({{Grouping::system, "", k}, rows});
  }
  groups.push_back({{Grouping::all, "", ""}, detail::all_rows(corpus)});

  const auto all = detail::all_rows(corpus);
  if (!corpus.instances.empty()) {
    const auto present = detail::present_metrics(scores, all);
    if (std::find(present.begin(), present.end(), Metric::prs) == present.end()) {
      warnings.push_back("prs: no instance has a parse score; excluded from correlation tables");
    }
  }

  std::vector<CorrelationTable> out;
  for (const auto& [key, rows] : groups) {
    if (rows.size() < 3) {
      warnings.push_back("correlation_table: group " + key.label() + " has fewer than 3 instances; skipped");
      continue;
    }
    out.push_back(build_table(corpus, scores, key, rows, config.alpha));
  }
  return out;
}

std::vector<SystemContrast> system_contrasts(const std::vector<CorrelationTable>& tables,
                                             const AnalysisConfig& config) {
  std::map<std::string, std::vector<const CorrelationTable*>> per_dataset;
  for (const auto& t : tables) {
    if (t.group.grouping == Grouping::dataset_system) per_dataset[t.group.dataset].push_back(&t);
  }
  std::vector<SystemContrast> out;
  for (const auto& [dataset, ts] : per_dataset) {
    if (ts.size() != 2) continue;
    const auto& ta = *ts[0];
    const auto& tb = *ts[1];
    for (std::size_t ra = 0; ra < ta.metrics.size(); ++ra) {
      const auto it = std::find(tb.metrics.begin(), tb.metrics.end(), ta.metrics[ra]);
      if (it == tb.metrics.end()) continue;
      const auto rb = static_cast<std::size_t>(it - tb.metrics.begin());
      for (Dimension d : kDimensions) {
        const auto di = static_cast<std::size_t>(d);
        SystemContrast c{dataset, ta.group.system, tb.group.system, ta.metrics[ra], d,
                         ta.cells[ra][di], tb.cells[rb][di], {}, {}, false};
        detail::contrast(c.a, c.b, config.alpha, c.z, c.p_value, c.significant);
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

}  // namespace metricide
