#include "support.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <stdexcept>

namespace medaug::testing {

namespace fs = std::filesystem;

TempDir::TempDir() {
  static std::mt19937_64 rng(std::random_device{}());
  for (int i = 0; i < 100; ++i) {
    fs::path p = fs::temp_directory_path() / ("medaug-test-" + std::to_string(rng()));
    if (fs::create_directory(p)) {
      path_ = p;
      return;
    }
  }
  throw std::runtime_error("cannot create temp dir");
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

void write_text(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << content;
}

MentionSpan span(std::size_t start, std::size_t end, EventLabel label, std::string id) {
  MentionSpan m;
  m.id = std::move(id);
  m.start = start;
  m.end = end;
  m.label = label;
  return m;
}

AnnotatedDocument make_doc(const std::string& doc_id, const std::u32string& text,
                           std::vector<MentionSpan> mentions) {
  AnnotatedDocument doc;
  doc.doc_id = doc_id;
  doc.text = text;
  for (auto& m : mentions) m.surface = text.substr(m.start, m.end - m.start);
  sort_mentions(mentions);
  doc.mentions = std::move(mentions);
  return doc;
}

std::size_t brute_force_matching(std::size_t n_gold, std::size_t n_pred,
                                 const std::vector<std::vector<bool>>& edge) {
  std::vector<bool> used(n_pred, false);
  std::size_t best = 0;
  std::function<void(std::size_t, std::size_t)> search = [&](std::size_t g, std::size_t size) {
    if (size + (n_gold - g) <= best) return;
    if (g == n_gold) {
      best = std::max(best, size);
      return;
    }
    for (std::size_t p = 0; p < n_pred; ++p) {
      if (edge[g][p] && !used[p]) {
        used[p] = true;
        search(g + 1, size + 1);
        used[p] = false;
      }
    }
    search(g + 1, size);
  };
  search(0, 0);
  return best;
}

namespace {

double ratio(std::size_t a, std::size_t b) {
  return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b);
}

double harmonic(double p, double r) { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

std::vector<std::string> classes_for(TaskMode task) {
  if (task == TaskMode::kIdentification) return {"Drug"};
  return {"Disposition", "NoDisposition", "Undetermined"};
}

std::string class_name(const MentionSpan& m, TaskMode task) {
  if (task == TaskMode::kIdentification) return "Drug";
  switch (m.label) {
    case EventLabel::kDisposition:
      return "Disposition";
    case EventLabel::kNoDisposition:
      return "NoDisposition";
    case EventLabel::kUndetermined:
      return "Undetermined";
  }
  return "";
}

OracleBlock oracle_block(const Corpus& gold, const Predictions& pred, TaskMode task, bool strict,
                         bool exclude_absent) {
  OracleBlock block;
  const auto classes = classes_for(task);
  for (const auto& c : classes) block.per_class[c] = {};
  static const std::vector<MentionSpan> kNone;
  for (const auto& [id, doc] : gold.documents) {
    auto it = pred.find(id);
    const auto& p_all = it == pred.end() ? kNone : it->second;
    for (const auto& cls : classes) {
      std::vector<MentionSpan> g, p;
      for (const auto& m : doc.mentions) {
        if (class_name(m, task) == cls) g.push_back(m);
      }
      for (const auto& m : p_all) {
        if (class_name(m, task) == cls) p.push_back(m);
      }
      std::vector<std::vector<bool>> edge(g.size(), std::vector<bool>(p.size()));
      for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
          edge[i][j] = strict ? (g[i].start == p[j].start && g[i].end == p[j].end)
                              : (g[i].start < p[j].end && p[j].start < g[i].end);
        }
      }
      const std::size_t tp = brute_force_matching(g.size(), p.size(), edge);
      auto& c = block.per_class[cls];
      c.tp += tp;
      c.fp += p.size() - tp;
      c.fn += g.size() - tp;
    }
  }
  std::size_t tp = 0, fp = 0, fn = 0;
  std::size_t n = 0;
  for (const auto& [cls, c] : block.per_class) {
    tp += c.tp;
    fp += c.fp;
    fn += c.fn;
    if (exclude_absent && c.tp + c.fp + c.fn == 0) continue;
    const double p = ratio(c.tp, c.tp + c.fp);
    const double r = ratio(c.tp, c.tp + c.fn);
    block.macro_p += p;
    block.macro_r += r;
    block.macro_f += harmonic(p, r);
    ++n;
  }
  if (n > 0) {
    block.macro_p /= static_cast<double>(n);
    block.macro_r /= static_cast<double>(n);
    block.macro_f /= static_cast<double>(n);
  }
  block.micro_tp = tp;
  block.micro_p = ratio(tp, tp + fp);
  block.micro_r = ratio(tp, tp + fn);
  block.micro_f = harmonic(block.micro_p, block.micro_r);
  return block;
}

std::size_t below(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

EventLabel random_label(std::mt19937_64& rng) { return kAllEventLabels[below(rng, 3)]; }

}  // namespace

OracleReport oracle_score(const Corpus& gold, const Predictions& pred, TaskMode task,
                          bool macro_exclude_absent) {
  return {oracle_block(gold, pred, task, true, macro_exclude_absent),
          oracle_block(gold, pred, task, false, macro_exclude_absent)};
}

RandomScoringCase random_scoring_case(std::mt19937_64& rng, std::size_t max_docs,
                                      std::size_t max_mentions, bool allow_overlap) {
  RandomScoringCase c;
  const std::size_t n_docs = 1 + below(rng, max_docs);
  for (std::size_t d = 0; d < n_docs; ++d) {
    const std::string id = "d" + std::to_string(d);
    const std::size_t len = 40 + below(rng, 80);
    std::u32string text;
    for (std::size_t i = 0; i < len; ++i) {
      text += below(rng, 5) == 0 ? U' ' : static_cast<char32_t>(U'a' + below(rng, 26));
    }
    const std::size_t n = below(rng, max_mentions + 1);
    std::vector<MentionSpan> gold;
    if (allow_overlap) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t s = below(rng, len - 1);
        const std::size_t e = s + 1 + below(rng, std::min<std::size_t>(12, len - s));
        gold.push_back(span(s, e, random_label(rng), "T" + std::to_string(k + 1)));
      }
    } else {
      std::vector<std::size_t> cuts;
      while (cuts.size() < 2 * n) {
        const std::size_t x = below(rng, len + 1);
        if (std::find(cuts.begin(), cuts.end(), x) == cuts.end()) cuts.push_back(x);
      }
      std::sort(cuts.begin(), cuts.end());
      for (std::size_t k = 0; k < n; ++k) {
        gold.push_back(span(cuts[2 * k], cuts[2 * k + 1], random_label(rng), "T" + std::to_string(k + 1)));
      }
    }
    c.gold.documents.emplace(id, make_doc(id, text, gold));
    c.gold.split[id] = Split::kTrain;

    if (below(rng, 10) == 0) continue;  // no predictions for this document
    std::vector<MentionSpan> pred;
    for (const auto& g : gold) {
      const std::size_t action = below(rng, 10);
      MentionSpan p = g;
      if (action < 4) {
        if (below(rng, 5) == 0) p.label = random_label(rng);
      } else if (action < 7) {
        const long ds = static_cast<long>(below(rng, 7)) - 3;
        const long de = static_cast<long>(below(rng, 7)) - 3;
        long s = static_cast<long>(g.start) + ds;
        long e = static_cast<long>(g.end) + de;
        s = std::clamp<long>(s, 0, static_cast<long>(len) - 1);
        e = std::clamp<long>(e, s + 1, static_cast<long>(len));
        p.start = static_cast<std::size_t>(s);
        p.end = static_cast<std::size_t>(e);
        if (below(rng, 4) == 0) p.label = random_label(rng);
      } else {
        continue;
      }
      pred.push_back(p);
    }
    const std::size_t extra = below(rng, 4);
    for (std::size_t k = 0; k < extra; ++k) {
      const std::size_t s = below(rng, len - 1);
      const std::size_t e = s + 1 + below(rng, std::min<std::size_t>(10, len - s));
      pred.push_back(span(s, e, random_label(rng)));
    }
    for (std::size_t k = 0; k < pred.size(); ++k) {
      pred[k].id = "P" + std::to_string(k + 1);
      pred[k].surface = text.substr(pred[k].start, pred[k].end - pred[k].start);
    }
    c.pred[id] = std::move(pred);
  }
  return c;
}

AnnotatedDocument random_document(std::mt19937_64& rng, const std::string& doc_id) {
  static const std::u32string kPool =
      U"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
      U"          \t\n.,;:!?()-/#%'\"éüßñçΩλжя漢字薬😀💊";
  const std::size_t len = 1 + below(rng, 200);
  std::u32string text;
  for (std::size_t i = 0; i < len; ++i) text += kPool[below(rng, kPool.size())];

  const std::size_t n = below(rng, std::min<std::size_t>(8, len / 2) + 1);
  std::vector<std::size_t> cuts;
  while (cuts.size() < 2 * n) {
    const std::size_t x = below(rng, len + 1);
    if (std::find(cuts.begin(), cuts.end(), x) == cuts.end()) cuts.push_back(x);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::size_t> ids(n);
  for (std::size_t k = 0; k < n; ++k) ids[k] = k + 1 + below(rng, 3) * 10 * (k + 1);
  std::vector<MentionSpan> mentions;
  for (std::size_t k = 0; k < n; ++k) {
    MentionSpan m = span(cuts[2 * k], cuts[2 * k + 1], random_label(rng), "T" + std::to_string(ids[k]));
    if (below(rng, 5) == 0) {
      m.label = EventLabel::kUndetermined;
      m.drug = true;
    }
    mentions.push_back(m);
  }
  return make_doc(doc_id, text, mentions);
}

SentenceUnit random_aligned_unit(std::mt19937_64& rng) {
  static const std::vector<std::u32string> kWords = {
      U"Lipitor", U"20mg", U"daily", U"insulin", U"glargine", U"café", U"Ωmega",
      U"漢字", U"薬", U"💊", U"b12", U"x", U"METFORMIN", U"über"};
  static const std::vector<std::u32string> kPunct = {U".", U",", U"/", U"(", U")", U"-"};
  static const std::vector<std::u32string> kSpace = {U" ", U"  ", U"\t", U"\n", U" \n "};
  SentenceUnit unit;
  unit.doc_id = "u";
  unit.start = below(rng, 1000);
  std::vector<std::pair<std::size_t, std::size_t>> tokens;
  const std::size_t n = 1 + below(rng, 20);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) unit.text += kSpace[below(rng, kSpace.size())];
    const bool punct = below(rng, 4) == 0;
    const std::u32string& w = punct ? kPunct[below(rng, kPunct.size())] : kWords[below(rng, kWords.size())];
    tokens.push_back({unit.text.size(), unit.text.size() + w.size()});
    unit.text += w;
  }
  std::size_t t = below(rng, 3);
  while (t < tokens.size() && unit.mentions.size() < 4) {
    const std::size_t len = 1 + below(rng, 3);
    if (t + len > tokens.size()) break;
    MentionSpan m = span(tokens[t].first, tokens[t + len - 1].second, random_label(rng),
                         "T" + std::to_string(unit.mentions.size() + 1));
    m.surface = unit.text.substr(m.start, m.end - m.start);
    unit.mentions.push_back(m);
    t += len + below(rng, 4);
  }
  unit.end = unit.start + unit.text.size();
  return unit;
}

std::vector<MalformedFixture> malformed_fixtures() {
  const std::string text = "Start Lipitor 20mg daily. Continue metformin.\n";
  const std::string ok = "T1\tDisposition 6 13\tLipitor\n";
  return {
      {"too few fields", text, ok + "T2\tNoDisposition 35 44\n", ParseErrorKind::kMalformedLine, 2},
      {"bad mention id", text, "X1\tDisposition 6 13\tLipitor\n", ParseErrorKind::kMalformedLine, 1},
      {"non-numeric offset", text, "T1\tDisposition 6 1x\tLipitor\n", ParseErrorKind::kMalformedLine, 1},
      {"discontinuous span", text, "T1\tDisposition 6 9;10 13\tLip itor\n",
       ParseErrorKind::kDiscontinuousSpan, 1},
      {"start after end", text, ok + "T2\tDisposition 13 6\tLipitor\n", ParseErrorKind::kInvalidOffsets, 2},
      {"empty span", text, "T1\tDisposition 6 6\t\n", ParseErrorKind::kInvalidOffsets, 1},
      {"offset past end", text, "T1\tDisposition 40 60\tmetformin\n", ParseErrorKind::kOffsetOutOfRange, 1},
      {"surface mismatch", text, "T1\tDisposition 6 13\tLipitol\n", ParseErrorKind::kSurfaceMismatch, 1},
      {"unknown label", text, "T1\tDosage 6 13\tLipitor\n", ParseErrorKind::kUnknownLabel, 1},
      {"duplicate id", text, ok + "T1\tNoDisposition 35 44\tmetformin\n",
       ParseErrorKind::kDuplicateMentionId, 2},
      {"invalid utf-8 text", "Start \xC3\x28 daily.\n", "", ParseErrorKind::kInvalidEncoding, 0},
      {"invalid utf-8 surface", text, "T1\tDisposition 6 13\tLip\xFFtor\n",
       ParseErrorKind::kInvalidEncoding, 1},
  };
}

}  // namespace medaug::testing
