#include <algorithm>
#include <random>

#include "doctest.h"
#include "medaug/evalkit/matching.h"
#include "medaug/evalkit/metrics.h"
#include "medaug/evalkit/report.h"
#include "support.h"

using namespace medaug;
using medaug::testing::make_doc;
using medaug::testing::span;

namespace {

// Two-mention fixture: the first prediction is exact, the second starts
// one character late.
struct LipitorFixture {
  Corpus gold;
  Predictions pred;
  LipitorFixture() {
    const std::u32string text = U"Start Lipitor 20mg daily. Continue metformin.";
    gold.documents["note"] = make_doc("note", text,
                                      {span(6, 13, EventLabel::kDisposition, "T1"),
                                       span(35, 44, EventLabel::kNoDisposition, "T2")});
    pred["note"] = {span(6, 13, EventLabel::kDisposition, "T1"),
                    span(36, 44, EventLabel::kNoDisposition, "T2")};
  }
};

double f1(double p, double r) { return p + r == 0 ? 0 : 2 * p * r / (p + r); }

}  // namespace

TEST_CASE("hand fixture: strict and lenient pairs") {
  LipitorFixture f;
  const auto& g = f.gold.documents["note"].mentions;
  const auto& p = f.pred["note"];
  CHECK(match_spans(g, p, MatchMode::kStrict, TaskMode::kEventClassification).tp() == 1);
  CHECK(match_spans(g, p, MatchMode::kLenient, TaskMode::kEventClassification).tp() == 2);
}

TEST_CASE("hand fixture: metrics") {
  LipitorFixture f;
  const MetricsReport r = score(f.gold, f.pred, TaskMode::kEventClassification);
  // Strict: tp=1, fp=1, fn=1.
  CHECK(r.strict.micro.precision == 0.5);
  CHECK(r.strict.micro.recall == 0.5);
  CHECK(r.strict.micro.fscore == 0.5);
  CHECK(r.lenient.micro.fscore == 1.0);
  // Disposition F=1, NoDisposition F=0, Undetermined absent and left out.
  CHECK(r.strict.per_class.at("Disposition").fscore == 1.0);
  CHECK(r.strict.per_class.at("NoDisposition").fscore == 0.0);
  CHECK(r.strict.macro.fscore == (1.0 + 0.0) / 2);

  ScoreOptions all;
  all.macro_exclude_absent = false;
  const MetricsReport r3 = score(f.gold, f.pred, TaskMode::kEventClassification, all);
  CHECK(r3.strict.macro.fscore == doctest::Approx(1.0 / 3).epsilon(1e-15));
}

TEST_CASE("identification ignores labels") {
  LipitorFixture f;
  f.pred["note"][0].label = EventLabel::kUndetermined;
  const MetricsReport ev = score(f.gold, f.pred, TaskMode::kEventClassification);
  const MetricsReport id = score(f.gold, f.pred, TaskMode::kIdentification);
  CHECK(ev.strict.micro.tp == 0);
  CHECK(id.strict.micro.tp == 1);
  CHECK(id.lenient.micro.tp == 2);
  CHECK(id.strict.per_class.size() == 1);
  CHECK(id.strict.macro.fscore == id.strict.micro.fscore);
}

TEST_CASE("greedy lenient pairing can fall short of a maximum matching") {
  // Gold spans are disjoint. Greedy hands [8,11) to [0,10) (overlap 2 beats
  // overlap 1) and leaves [10,12) without a partner.
  const std::vector<MentionSpan> gold = {span(0, 10, EventLabel::kDisposition, "T1"),
                                         span(10, 12, EventLabel::kDisposition, "T2")};
  const std::vector<MentionSpan> pred = {span(8, 11, EventLabel::kDisposition, "P1"),
                                         span(0, 1, EventLabel::kDisposition, "P2")};
  CHECK_FALSE(has_overlaps(gold));
  const auto greedy =
      match_spans(gold, pred, MatchMode::kLenient, TaskMode::kEventClassification, MatchPolicy::kGreedy);
  const auto maximum = match_spans(gold, pred, MatchMode::kLenient, TaskMode::kEventClassification);
  CHECK(greedy.tp() == 1);
  CHECK(maximum.tp() == 2);
  std::vector<std::vector<bool>> edge = {{true, true}, {true, false}};
  CHECK(medaug::testing::brute_force_matching(2, 2, edge) == 2);
}

TEST_CASE("greedy follows the preference order") {
  const std::vector<MentionSpan> gold = {span(10, 20, EventLabel::kDisposition, "T1")};
  const std::vector<MentionSpan> pred = {span(5, 12, EventLabel::kDisposition, "P1"),
                                         span(18, 25, EventLabel::kDisposition, "P2"),
                                         span(12, 14, EventLabel::kDisposition, "P3")};
  auto r = match_spans(gold, pred, MatchMode::kLenient, TaskMode::kEventClassification,
                       MatchPolicy::kGreedy);
  // All overlaps are 2; the smallest start wins.
  REQUIRE(r.tp() == 1);
  CHECK(r.pairs[0].second.id == "P1");
  CHECK(r.unmatched_pred.size() == 2);
}

TEST_CASE("matching does not depend on input order") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    auto c = medaug::testing::random_scoring_case(rng, 1, 10, true);
    auto& [id, doc] = *c.gold.documents.begin();
    auto pred = c.pred.count(id) ? c.pred[id] : std::vector<MentionSpan>{};
    auto gold = doc.mentions;
    for (MatchMode mode : {MatchMode::kStrict, MatchMode::kLenient}) {
      for (MatchPolicy policy : {MatchPolicy::kMaximum, MatchPolicy::kGreedy}) {
        const auto a = match_spans(gold, pred, mode, TaskMode::kEventClassification, policy);
        std::shuffle(gold.begin(), gold.end(), rng);
        std::shuffle(pred.begin(), pred.end(), rng);
        const auto b = match_spans(gold, pred, mode, TaskMode::kEventClassification, policy);
        CHECK(a.pairs == b.pairs);
        CHECK(a.unmatched_gold == b.unmatched_gold);
        CHECK(a.unmatched_pred == b.unmatched_pred);
      }
    }
  }
}

TEST_CASE("scores agree with the brute-force reference") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const auto c = medaug::testing::random_scoring_case(rng, 6, 8, i % 2 == 0);
    for (TaskMode task : {TaskMode::kIdentification, TaskMode::kEventClassification}) {
      const MetricsReport r = score(c.gold, c.pred, task);
      const auto o = medaug::testing::oracle_score(c.gold, c.pred, task);
      CHECK(r.strict.micro.tp == o.strict.micro_tp);
      CHECK(r.lenient.micro.tp == o.lenient.micro_tp);
      CHECK(r.strict.micro.fscore == doctest::Approx(o.strict.micro_f).epsilon(1e-12));
      CHECK(r.strict.macro.fscore == doctest::Approx(o.strict.macro_f).epsilon(1e-12));
      CHECK(r.lenient.macro.recall == doctest::Approx(o.lenient.macro_r).epsilon(1e-12));
    }
  }
}

TEST_CASE("zero denominators score zero") {
  Corpus gold;
  gold.documents["a"] = make_doc("a", U"nothing here", {});
  const MetricsReport r = score(gold, {}, TaskMode::kEventClassification);
  CHECK(r.strict.micro == PRF{});
  CHECK(r.strict.macro.fscore == 0.0);
  const PRF s = PRF::from_counts(0, 3, 0);
  CHECK(s.precision == 0.0);
  CHECK(s.recall == 0.0);
  CHECK(s.fscore == 0.0);
}

TEST_CASE("score rejects bad predictions") {
  LipitorFixture f;
  Predictions unknown = f.pred;
  unknown["other"] = {};
  try {
    score(f.gold, unknown, TaskMode::kIdentification);
    FAIL("scored");
  } catch (const ScoreError& e) {
    CHECK(e.kind() == ScoreError::Kind::kUnknownDocument);
    CHECK(e.doc_id() == "other");
  }
  Predictions bad = f.pred;
  bad["note"].push_back(span(40, 100, EventLabel::kDisposition, "T9"));
  try {
    score(f.gold, bad, TaskMode::kIdentification);
    FAIL("scored");
  } catch (const ScoreError& e) {
    CHECK(e.kind() == ScoreError::Kind::kInvalidSpan);
  }
}

TEST_CASE("split filter and missing predictions") {
  LipitorFixture f;
  f.gold.documents["dev1"] =
      make_doc("dev1", U"Hold aspirin.", {span(5, 12, EventLabel::kDisposition, "T1")});
  f.gold.split = {{"note", Split::kTest}, {"dev1", Split::kDev}};
  ScoreOptions o;
  o.split = Split::kDev;
  const MetricsReport r = score(f.gold, f.pred, TaskMode::kEventClassification, o);
  CHECK(r.documents == 1);
  CHECK(r.strict.micro.fn == 1);
  CHECK(r.strict.micro.recall == 0.0);
}

TEST_CASE("thread count does not change the report") {
  std::mt19937_64 rng(77);
  const auto c = medaug::testing::random_scoring_case(rng, 20, 10, true);
  ScoreOptions one, many;
  many.jobs = 7;
  CHECK(report_to_json(score(c.gold, c.pred, TaskMode::kEventClassification, one)) ==
        report_to_json(score(c.gold, c.pred, TaskMode::kEventClassification, many)));
}

TEST_CASE("report json round trip") {
  std::mt19937_64 rng(3);
  const auto c = medaug::testing::random_scoring_case(rng, 10, 10, true);
  const MetricsReport r = score(c.gold, c.pred, TaskMode::kEventClassification);
  const std::string json = report_to_json(r);
  CHECK(json.back() == '\n');
  CHECK(json.rfind("{\n  \"schema\": \"medaug.metrics\",\n  \"schema_version\": 1,", 0) == 0);
  const MetricsReport back = report_from_json(json);
  CHECK(back == r);
  CHECK(report_to_json(back) == json);

  CHECK_THROWS_AS(report_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(report_from_json("not json"), std::invalid_argument);
  std::string future = json;
  future.replace(future.find("\"schema_version\": 1"), 19, "\"schema_version\": 9");
  CHECK_THROWS_AS(report_from_json(future), std::invalid_argument);
}

TEST_CASE("report table layout") {
  LipitorFixture f;
  const std::string table = format_report_table(score(f.gold, f.pred, TaskMode::kEventClassification));
  CHECK(table.find("Micro           | 0.5000  0.5000  0.5000  | 1.0000  1.0000  1.0000\n") !=
        std::string::npos);
}

TEST_CASE("diff reports") {
  LipitorFixture f;
  const MetricsReport a = score(f.gold, f.pred, TaskMode::kEventClassification);
  Predictions exact = f.pred;
  exact["note"][1].start = 35;
  const MetricsReport b = score(f.gold, exact, TaskMode::kEventClassification);
  const ReportDelta d = diff_reports(a, b);
  const DeltaEntry* e = d.find("strict.micro.fscore");
  REQUIRE(e != nullptr);
  CHECK(e->a == 0.5);
  CHECK(e->b == 1.0);
  CHECK(e->delta == 0.5);
  CHECK(e->changed);
  REQUIRE(d.find("lenient.class.Disposition.recall") != nullptr);
  CHECK_FALSE(d.find("lenient.class.Disposition.recall")->changed);
  CHECK(d.any_changed());
  CHECK_FALSE(diff_reports(a, a).any_changed());

  const MetricsReport id = score(f.gold, f.pred, TaskMode::kIdentification);
  try {
    diff_reports(a, id);
    FAIL("diffed");
  } catch (const ScoreError& err) {
    CHECK(err.kind() == ScoreError::Kind::kTaskMismatch);
  }
}

TEST_CASE("oracle sanity") {
  // Independent check of the reference itself on a hand-solved case.
  std::vector<std::vector<bool>> edge = {{true, true, false}, {true, false, false}, {false, true, true}};
  CHECK(medaug::testing::brute_force_matching(3, 3, edge) == 3);
  CHECK(f1(0.5, 0.5) == 0.5);
}
