#include "medaug/evalkit/matching.h"

#include <algorithm>
#include <functional>
#include <tuple>

namespace medaug {
namespace {

bool canonical_less(const MentionSpan& a, const MentionSpan& b) {
  return std::tie(a.start, a.end, a.label, a.drug, a.id, a.surface) <
         std::tie(b.start, b.end, b.label, b.drug, b.id, b.surface);
}

std::vector<MentionSpan> canonical(std::vector<MentionSpan> spans) {
  std::sort(spans.begin(), spans.end(), canonical_less);
  return spans;
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

std::string_view match_mode_name(MatchMode mode) {
  return mode == MatchMode::kStrict ? "strict" : "lenient";
}

std::size_t overlap_length(const MentionSpan& a, const MentionSpan& b) {
  const std::size_t lo = std::max(a.start, b.start);
  const std::size_t hi = std::min(a.end, b.end);
  return hi > lo ? hi - lo : 0;
}

bool compatible(const MentionSpan& gold, const MentionSpan& pred, MatchMode mode, TaskMode task) {
  if (task == TaskMode::kEventClassification && gold.label != pred.label) return false;
  if (mode == MatchMode::kStrict) return gold.start == pred.start && gold.end == pred.end;
  return overlap_length(gold, pred) > 0;
}

MatchResult match_spans(const std::vector<MentionSpan>& gold_in,
                        const std::vector<MentionSpan>& pred_in, MatchMode mode, TaskMode task,
                        MatchPolicy policy) {
  const std::vector<MentionSpan> gold = canonical(gold_in);
  const std::vector<MentionSpan> pred = canonical(pred_in);

  // Candidate predictions per gold mention, most preferred first.
  std::vector<std::vector<std::size_t>> candidates(gold.size());
  for (std::size_t g = 0; g < gold.size(); ++g) {
    for (std::size_t p = 0; p < pred.size(); ++p) {
      if (compatible(gold[g], pred[p], mode, task)) candidates[g].push_back(p);
    }
    const MentionSpan& gs = gold[g];
    std::stable_sort(candidates[g].begin(), candidates[g].end(), [&](std::size_t a, std::size_t b) {
      const std::size_t oa = overlap_length(gs, pred[a]);
      const std::size_t ob = overlap_length(gs, pred[b]);
      if (oa != ob) return oa > ob;
      return std::tie(pred[a].start, pred[a].end) < std::tie(pred[b].start, pred[b].end);
    });
  }

  std::vector<std::size_t> gold_to_pred(gold.size(), kNone);
  std::vector<std::size_t> pred_to_gold(pred.size(), kNone);
  for (std::size_t g = 0; g < gold.size(); ++g) {
    for (std::size_t p : candidates[g]) {
      if (pred_to_gold[p] == kNone) {
        gold_to_pred[g] = p;
        pred_to_gold[p] = g;
        break;
      }
    }
  }

  if (policy == MatchPolicy::kMaximum) {
    std::vector<char> visited(pred.size());
    std::function<bool(std::size_t)> augment = [&](std::size_t g) {
      for (std::size_t p : candidates[g]) {
        if (visited[p]) continue;
        visited[p] = 1;
        if (pred_to_gold[p] == kNone || augment(pred_to_gold[p])) {
          gold_to_pred[g] = p;
          pred_to_gold[p] = g;
          return true;
        }
      }
      return false;
    };
    // A vertex with no augmenting path now never gains one later, so a
    // single pass suffices.
    for (std::size_t g = 0; g < gold.size(); ++g) {
      if (gold_to_pred[g] != kNone || candidates[g].empty()) continue;
      std::fill(visited.begin(), visited.end(), 0);
      augment(g);
    }
  }

  MatchResult result;
  for (std::size_t g = 0; g < gold.size(); ++g) {
    if (gold_to_pred[g] == kNone) {
      result.unmatched_gold.push_back(gold[g]);
    } else {
      result.pairs.emplace_back(gold[g], pred[gold_to_pred[g]]);
    }
  }
  for (std::size_t p = 0; p < pred.size(); ++p) {
    if (pred_to_gold[p] == kNone) result.unmatched_pred.push_back(pred[p]);
  }
  return result;
}

bool has_overlaps(const std::vector<MentionSpan>& mentions) {
  std::vector<MentionSpan> sorted = canonical(mentions);
  std::size_t reach = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i].start < reach) return true;
    reach = std::max(reach, sorted[i].end);
  }
  return false;
}

}  // namespace medaug
