#include <charconv>
#include <cmath>
#include <map>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "metricide/report.hpp"

namespace metricide {

using json = nlohmann::ordered_json;

std::string format_value(double v) {
  if (!std::isfinite(v)) return "NA";
  return fmt::format("{}", v);
}

std::string format_value(const std::optional<double>& v) {
  return v ? format_value(*v) : "NA";
}

namespace {

std::string clean_field(std::string s) {
  for (char& c : s) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string flag(bool b) { return b ? "1" : "0"; }

json number(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

std::string file_label(std::string s) {
  for (char& c : s) {
    const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '-' || c == '_';
    if (!keep) c = '_';
  }
  return s;
}

std::string group_file_label(const GroupKey& g) {
  return file_label(std::string(grouping_name(g.grouping)) + "-" + g.label());
}

std::string dim(Dimension d) { return std::string(dimension_name(d)); }

json cell_json(const CorrelationCell& c) {
  return json{{"rho", number(c.rho)}, {"n", c.n}, {"p_value", number(c.p_value)},
              {"significant", c.significant}};
}

}  // namespace

std::string Table::to_tsv() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += '\t';
      out += clean_field(cells[i]);
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

std::string Table::to_csv() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_field(cells[i]);
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

// --- per-instance scores ---------------------------------------------------

std::string scores_tsv(const Corpus& corpus, std::span<const MetricVector> scores) {
  Table t;
  t.header = {"instance_id", "pair_key", "dataset", "system"};
  for (const auto& info : metric_catalogue()) t.header.emplace_back(info.name);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& inst = corpus.instances[i];
    std::vector<std::string> row = {inst.instance_id, inst.pair_key, inst.dataset, inst.system};
    for (const auto& info : metric_catalogue()) row.push_back(format_value(scores[i][info.metric]));
    t.rows.push_back(std::move(row));
  }
  return t.to_tsv();
}

std::vector<MetricVector> parse_scores_tsv(std::string_view content, const Corpus& corpus) {
  auto split = [](std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      out.push_back(line.substr(start, tab == std::string_view::npos ? line.npos : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    return out;
  };
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < content.size()) {
    auto nl = content.find('\n', start);
    if (nl == std::string_view::npos) nl = content.size();
    auto line = content.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    start = nl + 1;
  }
  if (lines.empty()) throw std::runtime_error("scores file is empty");

  const auto header = split(lines.front());
  std::optional<std::size_t> id_col;
  std::vector<std::pair<std::size_t, Metric>> metric_cols;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == "instance_id") id_col = c;
    if (auto m = metric_from_name(header[c])) metric_cols.emplace_back(c, *m);
  }
  if (!id_col) throw std::runtime_error("scores file: missing instance_id column");

  std::map<std::string, MetricVector, std::less<>> by_id;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto cells = split(lines[r]);
    if (cells.size() != header.size()) {
      throw std::runtime_error(fmt::format("scores file row {}: expected {} fields, got {}", r,
                                           header.size(), cells.size()));
    }
    MetricVector mv;
    for (const auto& [c, m] : metric_cols) {
      const auto cell = cells[c];
      if (cell == "NA" || cell.empty()) continue;
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw std::runtime_error(fmt::format("scores file row {}: bad value '{}' for {}", r,
                                             cell, metric_name(m)));
      }
      mv[m] = v;
    }
    by_id.insert_or_assign(std::string(cells[*id_col]), mv);
  }

  std::vector<MetricVector> out;
  out.reserve(corpus.size());
  for (const auto& inst : corpus.instances) {
    auto it = by_id.find(inst.instance_id);
    if (it == by_id.end()) {
      throw std::runtime_error("scores file has no row for instance " + inst.instance_id);
    }
    out.push_back(it->second);
  }
  return out;
}

// --- report ----------------------------------------------------------------

namespace {

json build_json(const AnalysisReport& r) {
  json doc;
  json cfg = json::object();
  for (const auto& [k, v] : r.config_echo) cfg[k] = v;
  doc["config_echo"] = cfg;
  doc["warnings"] = r.warnings;

  json sums = json::array();
  for (const auto& s : r.system_summaries) {
    json fields = json::array();
    for (const auto& f : s.fields) {
      fields.push_back({{"field", f.field}, {"n", f.n}, {"mean", number(f.mean)},
                        {"sd", number(f.sd)}, {"p_value", number(f.p_value)},
                        {"significant", f.significant}});
    }
    sums.push_back({{"dataset", s.dataset}, {"system", s.system}, {"instances", s.instances},
                    {"fields", fields}});
  }
  doc["system_summaries"] = sums;

  json tables = json::array();
  for (const auto& t : r.correlation_tables) {
    json names = json::array();
    for (Metric m : t.metrics) names.push_back(metric_name(m));
    json cells = json::array();
    for (std::size_t i = 0; i < t.metrics.size(); ++i) {
      for (Dimension d : kDimensions) {
        json c = cell_json(t.cells[i][static_cast<std::size_t>(d)]);
        c["metric"] = metric_name(t.metrics[i]);
        c["dimension"] = dim(d);
        cells.push_back(c);
      }
    }
    json best = json::object();
    json williams = json::object();
    for (Dimension d : kDimensions) {
      const auto di = static_cast<std::size_t>(d);
      auto name_or_null = [](const std::optional<Metric>& m) -> json {
        return m ? json(metric_name(*m)) : json(nullptr);
      };
      best[dim(d)] = {{"wbm", name_or_null(t.best_wbm[di])}, {"gbm", name_or_null(t.best_gbm[di])}};
      json grid = json::array();
      for (const auto& row : t.williams[di]) {
        json jr = json::array();
        for (const auto& w : row) {
          jr.push_back({{"t", number(w.t)}, {"p_value", number(w.p_value)}, {"n", w.n},
                        {"indistinguishable", w.indistinguishable}});
        }
        grid.push_back(jr);
      }
      williams[dim(d)] = grid;
    }
    json matrix = json::array();
    for (const auto& row : t.metric_matrix) {
      json jr = json::array();
      for (const auto& c : row) jr.push_back(number(c.rho));
      matrix.push_back(jr);
    }
    tables.push_back({{"grouping", grouping_name(t.group.grouping)},
                      {"dataset", t.group.dataset},
                      {"system", t.group.system},
                      {"instances", t.instances},
                      {"metrics", names},
                      {"cells", cells},
                      {"best", best},
                      {"williams", williams},
                      {"metric_matrix", matrix}});
  }
  doc["correlation_tables"] = tables;

  json contrasts = json::array();
  for (const auto& c : r.system_contrasts) {
    contrasts.push_back({{"dataset", c.dataset}, {"system_a", c.system_a}, {"system_b", c.system_b},
                         {"metric", metric_name(c.metric)}, {"dimension", dim(c.dimension)},
                         {"a", cell_json(c.a)}, {"b", cell_json(c.b)}, {"z", number(c.z)},
                         {"p_value", number(c.p_value)}, {"significant", c.significant}});
  }
  doc["system_contrasts"] = contrasts;

  json acc = json::array();
  for (const auto& a : r.accuracy_table) {
    acc.push_back({{"dataset", a.dataset}, {"dimension", dim(a.dimension)}, {"metric", a.metric},
                   {"quantized", a.quantized}, {"pairs", a.pairs}, {"accuracy", a.accuracy},
                   {"random_accuracy", a.random_accuracy}, {"p_value", number(a.p_value)},
                   {"significant", a.significant}});
  }
  doc["accuracy_table"] = acc;

  json bins = json::array();
  for (const auto& b : r.bin_table) {
    json shares = json::object(), counts = json::object();
    for (Bin bin : {Bin::bad, Bin::average, Bin::good}) {
      counts[std::string(bin_name(bin))] = b.counts[static_cast<std::size_t>(bin)];
      shares[std::string(bin_name(bin))] = b.shares[static_cast<std::size_t>(bin)];
    }
    json rows = json::array();
    for (const auto& row : b.rows) {
      rows.push_back({{"metric", metric_name(row.metric)}, {"bad", cell_json(row.bad)},
                      {"average_good", cell_json(row.rest)}, {"z", number(row.z)},
                      {"p_value", number(row.p_value)}, {"significant", row.significant}});
    }
    bins.push_back({{"scope", b.scope}, {"dimension", dim(b.dimension)}, {"counts", counts},
                    {"shares", shares}, {"bad_sufficient", b.bad_sufficient},
                    {"average_good_sufficient", b.rest_sufficient}, {"rows", rows}});
  }
  doc["bin_table"] = bins;

  json split = json::array();
  for (const auto& t : r.mr_type_split) {
    json rows = json::array();
    for (const auto& row : t.rows) {
      rows.push_back({{"metric", metric_name(row.metric)}, {"inform", cell_json(row.inform)},
                      {"other", cell_json(row.other)}, {"z", number(row.z)},
                      {"p_value", number(row.p_value)}, {"significant", row.significant}});
    }
    split.push_back({{"scope", t.scope}, {"dimension", dim(t.dimension)},
                     {"inform_count", t.inform_count}, {"other_count", t.other_count},
                     {"rows", rows}});
  }
  doc["mr_type_split"] = split;

  json rel = json::array();
  for (const auto& row : r.reliability) {
    json models = json::object();
    for (auto m : {stats::IccModel::one_way, stats::IccModel::two_way_single,
                   stats::IccModel::two_way_average}) {
      const auto& res = row.models[static_cast<std::size_t>(m)];
      models[std::string(stats::icc_model_name(m))] =
          res ? json{{"icc", number(res->icc)}, {"f", number(res->f)}, {"df1", res->df1},
                     {"df2", res->df2}, {"p_value", number(res->p_value)}}
              : json(nullptr);
    }
    rel.push_back({{"scope", row.scope}, {"dimension", row.dimension}, {"items", row.items},
                   {"models", models}});
  }
  doc["reliability"] = rel;
  return doc;
}

std::string cell_fmt(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return "NA";
  return fmt::format("{:.6g}", *v);
}

}  // namespace

std::string report_json(const AnalysisReport& report) {
  return build_json(report).dump(2) + "\n";
}

void write_report(const AnalysisReport& r, const std::filesystem::path& out_dir) {
  namespace fs = std::filesystem;
  write_file_atomic(out_dir / "report.json", report_json(r));
  const fs::path tables = out_dir / "tables";
  const fs::path plots = out_dir / "plots";

  {
    Table t{{"dataset", "system", "field", "n", "mean", "sd", "p_value", "significant"}, {}};
    for (const auto& s : r.system_summaries) {
      for (const auto& f : s.fields) {
        t.rows.push_back({s.dataset, s.system, f.field, std::to_string(f.n), cell_fmt(f.mean),
                          cell_fmt(f.sd), cell_fmt(f.p_value), flag(f.significant)});
      }
    }
    write_file_atomic(tables / "system_summary.tsv", t.to_tsv());
  }
  {
    Table corr{{"grouping", "dataset", "system", "metric", "dimension", "rho", "n", "p_value",
                "significant", "best"},
               {}};
    Table will{{"grouping", "dataset", "system", "dimension", "metric_a", "metric_b", "t",
                "p_value", "n", "indistinguishable"},
               {}};
    for (const auto& tb : r.correlation_tables) {
      const std::string g(grouping_name(tb.group.grouping));
      Table heat{{"metric_a", "metric_b", "rho"}, {}};
      for (std::size_t i = 0; i < tb.metrics.size(); ++i) {
        const std::string m(metric_name(tb.metrics[i]));
        for (Dimension d : kDimensions) {
          const auto di = static_cast<std::size_t>(d);
          const auto& c = tb.cells[i][di];
          std::string best;
          if (tb.best_wbm[di] == tb.metrics[i]) best = "wbm";
          if (tb.best_gbm[di] == tb.metrics[i]) best = "gbm";
          corr.rows.push_back({g, tb.group.dataset, tb.group.system, m, dim(d), cell_fmt(c.rho),
                               std::to_string(c.n), cell_fmt(c.p_value), flag(c.significant),
                               best.empty() ? "NA" : best});
        }
        for (std::size_t j = 0; j < tb.metrics.size(); ++j) {
          heat.rows.push_back({m, std::string(metric_name(tb.metrics[j])),
                               cell_fmt(tb.metric_matrix[i][j].rho)});
        }
      }
      write_file_atomic(plots / ("heatmap_" + group_file_label(tb.group) + ".csv"), heat.to_csv());

      for (Dimension d : kDimensions) {
        const auto di = static_cast<std::size_t>(d);
        Table grid{{"metric_a", "metric_b", "indistinguishable_flag"}, {}};
        for (std::size_t i = 0; i < tb.metrics.size(); ++i) {
          for (std::size_t j = 0; j < tb.metrics.size(); ++j) {
            const auto& w = tb.williams[di][i][j];
            const std::string a(metric_name(tb.metrics[i])), b(metric_name(tb.metrics[j]));
            will.rows.push_back({g, tb.group.dataset, tb.group.system, dim(d), a, b,
                                 cell_fmt(w.t), cell_fmt(w.p_value), std::to_string(w.n),
                                 w.p_value ? flag(w.indistinguishable) : "NA"});
            grid.rows.push_back({a, b, w.p_value ? flag(w.indistinguishable) : "NA"});
          }
        }
        write_file_atomic(plots / ("williams_" + group_file_label(tb.group) + "_" + dim(d) + ".csv"),
                          grid.to_csv());
      }
    }
    write_file_atomic(tables / "correlations.tsv", corr.to_tsv());
    write_file_atomic(tables / "williams.tsv", will.to_tsv());
  }
  {
    Table t{{"dataset", "system_a", "system_b", "metric", "dimension", "rho_a", "n_a", "rho_b",
             "n_b", "z", "p_value", "significant"},
            {}};
    for (const auto& c : r.system_contrasts) {
      t.rows.push_back({c.dataset, c.system_a, c.system_b, std::string(metric_name(c.metric)),
                        dim(c.dimension), cell_fmt(c.a.rho), std::to_string(c.a.n),
                        cell_fmt(c.b.rho), std::to_string(c.b.n), cell_fmt(c.z),
                        cell_fmt(c.p_value), flag(c.significant)});
    }
    write_file_atomic(tables / "system_contrasts.tsv", t.to_tsv());
  }
  {
    Table t{{"dataset", "dimension", "metric", "quantized", "pairs", "accuracy",
             "random_accuracy", "p_value", "significant"},
            {}};
    for (const auto& a : r.accuracy_table) {
      t.rows.push_back({a.dataset, dim(a.dimension), a.metric, flag(a.quantized),
                        std::to_string(a.pairs), cell_fmt(a.accuracy), cell_fmt(a.random_accuracy),
                        cell_fmt(a.p_value), flag(a.significant)});
    }
    write_file_atomic(tables / "accuracy.tsv", t.to_tsv());
  }
  {
    Table shares{{"scope", "dimension", "bin", "count", "share"}, {}};
    Table rows{{"scope", "dimension", "metric", "rho_bad", "n_bad", "p_bad", "rho_average_good",
                "n_average_good", "p_average_good", "z", "p_value", "significant"},
               {}};
    for (const auto& b : r.bin_table) {
      for (Bin bin : {Bin::bad, Bin::average, Bin::good}) {
        const auto bi = static_cast<std::size_t>(bin);
        shares.rows.push_back({b.scope, dim(b.dimension), std::string(bin_name(bin)),
                               std::to_string(b.counts[bi]), cell_fmt(b.shares[bi])});
      }
      for (const auto& row : b.rows) {
        rows.rows.push_back({b.scope, dim(b.dimension), std::string(metric_name(row.metric)),
                             cell_fmt(row.bad.rho), std::to_string(row.bad.n),
                             cell_fmt(row.bad.p_value), cell_fmt(row.rest.rho),
                             std::to_string(row.rest.n), cell_fmt(row.rest.p_value),
                             cell_fmt(row.z), cell_fmt(row.p_value), flag(row.significant)});
      }
    }
    write_file_atomic(tables / "bin_shares.tsv", shares.to_tsv());
    write_file_atomic(tables / "bins.tsv", rows.to_tsv());
  }
  {
    Table t{{"scope", "dimension", "metric", "rho_inform", "n_inform", "p_inform", "rho_other",
             "n_other", "p_other", "z", "p_value", "significant"},
            {}};
    for (const auto& s : r.mr_type_split) {
      for (const auto& row : s.rows) {
        t.rows.push_back({s.scope, dim(s.dimension), std::string(metric_name(row.metric)),
                          cell_fmt(row.inform.rho), std::to_string(row.inform.n),
                          cell_fmt(row.inform.p_value), cell_fmt(row.other.rho),
                          std::to_string(row.other.n), cell_fmt(row.other.p_value),
                          cell_fmt(row.z), cell_fmt(row.p_value), flag(row.significant)});
      }
    }
    write_file_atomic(tables / "mr_type.tsv", t.to_tsv());
  }
  {
    Table t{{"scope", "dimension", "model", "items", "icc", "f", "df1", "df2", "p_value"}, {}};
    for (const auto& row : r.reliability) {
      for (auto m : {stats::IccModel::one_way, stats::IccModel::two_way_single,
                     stats::IccModel::two_way_average}) {
        const auto& res = row.models[static_cast<std::size_t>(m)];
        t.rows.push_back({row.scope, row.dimension, std::string(stats::icc_model_name(m)),
                          std::to_string(row.items), res ? cell_fmt(res->icc) : "NA",
                          res ? cell_fmt(res->f) : "NA", res ? cell_fmt(res->df1) : "NA",
                          res ? cell_fmt(res->df2) : "NA", res ? cell_fmt(res->p_value) : "NA"});
      }
    }
    write_file_atomic(tables / "icc.tsv", t.to_tsv());
  }
}

}  // namespace metricide
