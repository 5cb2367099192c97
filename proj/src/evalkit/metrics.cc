#include "medaug/evalkit/metrics.h"

#include <algorithm>
#include <set>

#include "medaug/corpus/files.h"

namespace medaug {

PRF PRF::from_counts(std::size_t tp, std::size_t fp, std::size_t fn) {
  PRF s;
  s.tp = tp;
  s.fp = fp;
  s.fn = fn;
  s.precision = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
  s.recall = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
  const double denom = s.precision + s.recall;
  s.fscore = denom == 0.0 ? 0.0 : 2.0 * s.precision * s.recall / denom;
  return s;
}

PRF macro_average(const std::map<std::string, PRF>& per_class, bool exclude_absent) {
  PRF macro;
  std::size_t n = 0;
  for (const auto& [name, s] : per_class) {
    const bool absent = s.tp + s.fn == 0 && s.tp + s.fp == 0;
    if (exclude_absent && absent) continue;
    macro.precision += s.precision;
    macro.recall += s.recall;
    macro.fscore += s.fscore;
    macro.tp += s.tp;
    macro.fp += s.fp;
    macro.fn += s.fn;
    ++n;
  }
  if (n > 0) {
    macro.precision /= static_cast<double>(n);
    macro.recall /= static_cast<double>(n);
    macro.fscore /= static_cast<double>(n);
  }
  return macro;
}

namespace {

struct Counts {
  std::size_t tp = 0, fp = 0, fn = 0;
};

// Per-class counts for one document and one mode.
using ClassCounts = std::map<std::string, Counts>;

std::string class_of(const MentionSpan& m, TaskMode task) {
  return task == TaskMode::kIdentification ? "Drug" : std::string(label_name(m.label));
}

ClassCounts count_document(const std::vector<MentionSpan>& gold,
                           const std::vector<MentionSpan>& pred, MatchMode mode, TaskMode task,
                           MatchPolicy policy) {
  const MatchResult r = match_spans(gold, pred, mode, task, policy);
  ClassCounts counts;
  // Under event classification a pair shares its label; identification has a
  // single class.
  for (const auto& [g, p] : r.pairs) ++counts[class_of(g, task)].tp;
  for (const MentionSpan& g : r.unmatched_gold) ++counts[class_of(g, task)].fn;
  for (const MentionSpan& p : r.unmatched_pred) ++counts[class_of(p, task)].fp;
  return counts;
}

MetricsBlock make_block(const ClassCounts& totals, TaskMode task, bool exclude_absent) {
  MetricsBlock block;
  std::vector<std::string> classes;
  if (task == TaskMode::kIdentification) {
    classes.push_back("Drug");
  } else {
    for (EventLabel l : kAllEventLabels) classes.emplace_back(label_name(l));
  }
  Counts micro;
  for (const std::string& cls : classes) {
    auto it = totals.find(cls);
    const Counts c = it == totals.end() ? Counts{} : it->second;
    block.per_class[cls] = PRF::from_counts(c.tp, c.fp, c.fn);
    micro.tp += c.tp;
    micro.fp += c.fp;
    micro.fn += c.fn;
  }
  block.micro = PRF::from_counts(micro.tp, micro.fp, micro.fn);
  block.macro = macro_average(block.per_class, exclude_absent);
  return block;
}

void check_span(const std::string& doc_id, const AnnotatedDocument& doc, const MentionSpan& m) {
  if (m.start >= m.end || m.end > doc.text.size()) {
    throw ScoreError(ScoreError::Kind::kInvalidSpan,
                     "InvalidSpan(" + doc_id + ", " + m.id + " [" + std::to_string(m.start) + "," +
                         std::to_string(m.end) + "))",
                     doc_id);
  }
}

}  // namespace

MetricsReport score(const Corpus& gold, const Predictions& predictions, TaskMode task,
                    const ScoreOptions& options) {
  for (const auto& [doc_id, spans] : predictions) {
    auto it = gold.documents.find(doc_id);
    if (it == gold.documents.end()) {
      throw ScoreError(ScoreError::Kind::kUnknownDocument, "UnknownDocument(" + doc_id + ")",
                       doc_id);
    }
    for (const MentionSpan& m : spans) check_span(doc_id, it->second, m);
  }

  std::vector<const AnnotatedDocument*> docs;
  for (const auto& [doc_id, doc] : gold.documents) {
    if (options.split && gold.split_of(doc_id) != *options.split) continue;
    docs.push_back(&doc);
  }

  struct DocResult {
    ClassCounts strict, lenient;
    bool overlapping = false;
    std::size_t predicted = 0;
  };
  static const std::vector<MentionSpan> kNoPredictions;
  std::vector<DocResult> results(docs.size());
  parallel_for(docs.size(), options.jobs, [&](std::size_t i) {
    const AnnotatedDocument& doc = *docs[i];
    auto it = predictions.find(doc.doc_id);
    const std::vector<MentionSpan>& pred = it == predictions.end() ? kNoPredictions : it->second;
    results[i].strict = count_document(doc.mentions, pred, MatchMode::kStrict, task, options.policy);
    results[i].lenient =
        count_document(doc.mentions, pred, MatchMode::kLenient, task, options.policy);
    results[i].overlapping = has_overlaps(doc.mentions);
    results[i].predicted = pred.size();
  });

  MetricsReport report;
  report.task = task;
  report.policy = options.policy;
  report.macro_excludes_absent = options.macro_exclude_absent;
  ClassCounts strict_totals, lenient_totals;
  auto accumulate = [](ClassCounts& into, const ClassCounts& from) {
    for (const auto& [cls, c] : from) {
      into[cls].tp += c.tp;
      into[cls].fp += c.fp;
      into[cls].fn += c.fn;
    }
  };
  for (std::size_t i = 0; i < docs.size(); ++i) {
    accumulate(strict_totals, results[i].strict);
    accumulate(lenient_totals, results[i].lenient);
    report.documents += 1;
    report.gold_mentions += docs[i]->mentions.size();
    report.predicted_mentions += results[i].predicted;
    if (results[i].overlapping) ++report.overlapping_gold_documents;
  }
  report.strict = make_block(strict_totals, task, options.macro_exclude_absent);
  report.lenient = make_block(lenient_totals, task, options.macro_exclude_absent);
  return report;
}

const DeltaEntry* ReportDelta::find(const std::string& key) const {
  for (const DeltaEntry& e : entries) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

bool ReportDelta::any_changed() const {
  return std::any_of(entries.begin(), entries.end(), [](const DeltaEntry& e) { return e.changed; });
}

namespace {

void add_prf(const std::string& prefix, const PRF& a, const PRF& b, std::vector<DeltaEntry>* out) {
  auto add = [&](const char* field, double va, double vb) {
    DeltaEntry e;
    e.key = prefix + "." + field;
    e.a = va;
    e.b = vb;
    e.delta = vb - va;
    e.changed = e.delta != 0.0;
    out->push_back(std::move(e));
  };
  add("precision", a.precision, b.precision);
  add("recall", a.recall, b.recall);
  add("fscore", a.fscore, b.fscore);
}

}  // namespace

ReportDelta diff_reports(const MetricsReport& a, const MetricsReport& b) {
  if (a.task != b.task) {
    throw ScoreError(ScoreError::Kind::kTaskMismatch,
                     "TaskMismatch: " + std::string(task_name(a.task)) + " vs " +
                         std::string(task_name(b.task)));
  }
  ReportDelta delta;
  delta.task = a.task;
  for (MatchMode mode : {MatchMode::kStrict, MatchMode::kLenient}) {
    const std::string m(match_mode_name(mode));
    const MetricsBlock& ba = a.block(mode);
    const MetricsBlock& bb = b.block(mode);
    add_prf(m + ".micro", ba.micro, bb.micro, &delta.entries);
    add_prf(m + ".macro", ba.macro, bb.macro, &delta.entries);
    std::set<std::string> classes;
    for (const auto& [cls, s] : ba.per_class) classes.insert(cls);
    for (const auto& [cls, s] : bb.per_class) classes.insert(cls);
    for (const std::string& cls : classes) {
      auto ia = ba.per_class.find(cls);
      auto ib = bb.per_class.find(cls);
      add_prf(m + ".class." + cls, ia == ba.per_class.end() ? PRF{} : ia->second,
              ib == bb.per_class.end() ? PRF{} : ib->second, &delta.entries);
    }
  }
  return delta;
}

}  // namespace medaug
