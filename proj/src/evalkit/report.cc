#include "medaug/evalkit/report.h"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace medaug {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kReportSchema = "medaug.metrics";

ordered_json prf_json(const PRF& s) {
  ordered_json j;
  j["precision"] = s.precision;
  j["recall"] = s.recall;
  j["fscore"] = s.fscore;
  j["tp"] = s.tp;
  j["fp"] = s.fp;
  j["fn"] = s.fn;
  return j;
}

ordered_json block_json(const MetricsBlock& b) {
  ordered_json j;
  j["micro"] = prf_json(b.micro);
  j["macro"] = prf_json(b.macro);
  ordered_json per_class = ordered_json::object();
  for (const auto& [cls, s] : b.per_class) per_class[cls] = prf_json(s);
  j["per_class"] = per_class;
  return j;
}

PRF prf_from(const ordered_json& j) {
  PRF s;
  s.precision = j.at("precision").get<double>();
  s.recall = j.at("recall").get<double>();
  s.fscore = j.at("fscore").get<double>();
  s.tp = j.at("tp").get<std::size_t>();
  s.fp = j.at("fp").get<std::size_t>();
  s.fn = j.at("fn").get<std::size_t>();
  return s;
}

MetricsBlock block_from(const ordered_json& j) {
  MetricsBlock b;
  b.micro = prf_from(j.at("micro"));
  b.macro = prf_from(j.at("macro"));
  for (const auto& [cls, s] : j.at("per_class").items()) b.per_class[cls] = prf_from(s);
  return b;
}

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string report_to_json(const MetricsReport& r) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["schema_version"] = kReportSchemaVersion;
  j["task"] = task_name(r.task);
  j["match_policy"] = r.policy == MatchPolicy::kMaximum ? "maximum" : "greedy";
  j["macro_excludes_absent_classes"] = r.macro_excludes_absent;
  ordered_json counts;
  counts["documents"] = r.documents;
  counts["gold_mentions"] = r.gold_mentions;
  counts["predicted_mentions"] = r.predicted_mentions;
  counts["documents_with_overlapping_gold"] = r.overlapping_gold_documents;
  j["counts"] = counts;
  j["strict"] = block_json(r.strict);
  j["lenient"] = block_json(r.lenient);
  return j.dump(2) + "\n";
}

MetricsReport report_from_json(std::string_view text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    if (j.at("schema").get<std::string>() != kReportSchema) {
      throw std::invalid_argument("not a metrics report");
    }
    if (j.at("schema_version").get<int>() != kReportSchemaVersion) {
      throw std::invalid_argument("unsupported report schema version");
    }
    MetricsReport r;
    auto task = parse_task(j.at("task").get<std::string>());
    if (!task) throw std::invalid_argument("unknown task in report");
    r.task = *task;
    const std::string policy = j.at("match_policy").get<std::string>();
    if (policy != "maximum" && policy != "greedy") throw std::invalid_argument("unknown match policy");
    r.policy = policy == "maximum" ? MatchPolicy::kMaximum : MatchPolicy::kGreedy;
    r.macro_excludes_absent = j.at("macro_excludes_absent_classes").get<bool>();
    const auto& counts = j.at("counts");
    r.documents = counts.at("documents").get<std::size_t>();
    r.gold_mentions = counts.at("gold_mentions").get<std::size_t>();
    r.predicted_mentions = counts.at("predicted_mentions").get<std::size_t>();
    r.overlapping_gold_documents = counts.at("documents_with_overlapping_gold").get<std::size_t>();
    r.strict = block_from(j.at("strict"));
    r.lenient = block_from(j.at("lenient"));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string format_report_table(const MetricsReport& r) {
  std::string out;
  out += "task: " + std::string(task_name(r.task)) + "  documents: " + std::to_string(r.documents) +
         "  gold: " + std::to_string(r.gold_mentions) +
         "  predicted: " + std::to_string(r.predicted_mentions) + "\n";
  const std::size_t w = 16;
  out += pad("", w) + "| " + pad("Strict", 24) + "| Lenient\n";
  out += pad("", w) + "| " + pad("P       R       F", 24) + "| P       R       F\n";
  auto row = [&](const std::string& name, const PRF& s, const PRF& l) {
    out += pad(name, w) + "| " + fixed4(s.precision) + "  " + fixed4(s.recall) + "  " +
           fixed4(s.fscore) + "  | " + fixed4(l.precision) + "  " + fixed4(l.recall) + "  " +
           fixed4(l.fscore) + "\n";
  };
  row("Micro", r.strict.micro, r.lenient.micro);
  row("Macro", r.strict.macro, r.lenient.macro);
  for (const auto& [cls, s] : r.strict.per_class) {
    auto it = r.lenient.per_class.find(cls);
    row("  " + cls, s, it == r.lenient.per_class.end() ? PRF{} : it->second);
  }
  if (r.overlapping_gold_documents > 0) {
    out += "note: " + std::to_string(r.overlapping_gold_documents) +
           " document(s) have overlapping gold mentions\n";
  }
  return out;
}

std::string delta_to_json(const ReportDelta& d) {
  ordered_json j;
  j["schema"] = "medaug.metrics_delta";
  j["schema_version"] = kReportSchemaVersion;
  j["task"] = task_name(d.task);
  ordered_json entries = ordered_json::array();
  for (const DeltaEntry& e : d.entries) {
    ordered_json row;
    row["key"] = e.key;
    row["a"] = e.a;
    row["b"] = e.b;
    row["delta"] = e.delta;
    row["changed"] = e.changed;
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j.dump(2) + "\n";
}

std::string format_delta_table(const ReportDelta& d) {
  std::string out;
  int width = 0;
  for (const DeltaEntry& e : d.entries) width = std::max(width, static_cast<int>(e.key.size()));
  for (const DeltaEntry& e : d.entries) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-*s %.4f -> %.4f  %+.4f%s\n", width, e.key.c_str(), e.a,
                  e.b, e.delta, e.changed ? "  *" : "");
    out += buf;
  }
  return out;
}

}  // namespace medaug
