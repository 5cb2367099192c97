#include "medaug/baseline/synthetic.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <random>

#include "json.hpp"
#include "medaug/baseline/tagger.h"
#include "medaug/corpus/unicode.h"

namespace medaug {

namespace {

const std::vector<std::u32string> kUndeterminedLeads = {U"Discussed", U"Reviewed", U"Considering",
                                                         U"Asked about"};
const std::vector<std::u32string> kDoses = {U"5 mg",    U"10 mg",    U"20 mg", U"40 mg",
                                            U"500 mg",  U"1 tablet", U"2 puffs"};
const std::vector<std::u32string> kFrequencies = {U"daily",         U"twice daily", U"at bedtime",
                                                  U"every morning", U"as needed",   U"weekly"};
const std::vector<std::u32string> kFillers = {U"Patient seen for follow-up.", U"Vitals were stable.",
                                              U"No acute distress noted.",
                                              U"Labs were within normal limits."};

std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(rng, i)]);
}

template <typename T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[below(rng, v.size())];
}

std::u32string capitalized(std::u32string word) {
  if (!word.empty() && word[0] >= U'a' && word[0] <= U'z') word[0] -= 32;
  return word;
}

// Largest-remainder apportionment of `total` items over `weights`.
std::array<std::size_t, 3> apportion(const std::array<double, 3>& weights, std::size_t total) {
  std::array<std::size_t, 3> counts{};
  std::array<double, 3> remainder{};
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double exact = weights[i] * static_cast<double>(total);
    counts[i] = static_cast<std::size_t>(std::floor(exact));
    remainder[i] = exact - static_cast<double>(counts[i]);
    assigned += counts[i];
  }
  std::array<std::size_t, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t k = 0; assigned < total; ++k, ++assigned) ++counts[order[k % 3]];
  return counts;
}

}  // namespace

void SyntheticSpec::validate() const {
  if (n_documents == 0) throw SpecError("n_documents must be >= 1");
  if (min_sentences == 0 || min_sentences > max_sentences) {
    throw SpecError("need 1 <= min_sentences <= max_sentences");
  }
  if (medications.empty()) throw SpecError("medications must not be empty");
  for (const auto& m : medications) {
    if (collapse_whitespace(decode_utf8(m)).empty()) throw SpecError("empty medication name");
    if (m.find('\n') != std::string::npos) throw SpecError("medication names must be single-line");
  }
  double sum = 0.0;
  for (double p : label_mix) {
    if (p < 0.0) throw SpecError("label_mix proportions must be >= 0");
    sum += p;
  }
  if (std::fabs(sum - 1.0) > 1e-9) throw SpecError("label_mix must sum to 1");
  if (dev_fraction < 0 || test_fraction < 0 || dev_fraction + test_fraction > 1.0) {
    throw SpecError("dev_fraction and test_fraction must be >= 0 and sum to at most 1");
  }
}

SyntheticSpec parse_synthetic_spec(std::string_view text, const std::uint64_t* seed_override) {
  SyntheticSpec spec;
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    for (const auto& [key, value] : j.items()) {
      (void)value;
      static const std::vector<std::string> known = {
          "n_documents", "min_sentences", "max_sentences", "medications",
          "label_mix",   "dev_fraction",  "test_fraction", "seed"};
      if (std::find(known.begin(), known.end(), key) == known.end()) {
        throw SpecError("unknown key '" + key + "' in synthetic spec");
      }
    }
    if (j.contains("n_documents")) spec.n_documents = j["n_documents"].get<std::size_t>();
    if (j.contains("min_sentences")) spec.min_sentences = j["min_sentences"].get<std::size_t>();
    if (j.contains("max_sentences")) spec.max_sentences = j["max_sentences"].get<std::size_t>();
    if (j.contains("medications")) spec.medications = j["medications"].get<std::vector<std::string>>();
    if (j.contains("label_mix")) {
      const auto& mix = j["label_mix"];
      for (std::size_t i = 0; i < 3; ++i) {
        spec.label_mix[i] = mix.value(std::string(label_name(kAllEventLabels[i])), 0.0);
      }
    }
    if (j.contains("dev_fraction")) spec.dev_fraction = j["dev_fraction"].get<double>();
    if (j.contains("test_fraction")) spec.test_fraction = j["test_fraction"].get<double>();
    if (seed_override) {
      spec.seed = *seed_override;
    } else if (j.contains("seed")) {
      spec.seed = j["seed"].get<std::uint64_t>();
    } else {
      throw SpecError("synthetic spec needs a seed");
    }
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("invalid synthetic spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

Corpus generate_synthetic(const SyntheticSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);

  struct DocPlan {
    std::size_t mentions;
    std::size_t fillers;
  };
  std::vector<DocPlan> plans(spec.n_documents);
  std::size_t total_mentions = 0;
  for (DocPlan& p : plans) {
    p.mentions = spec.min_sentences + below(rng, spec.max_sentences - spec.min_sentences + 1);
    p.fillers = below(rng, 3);
    total_mentions += p.mentions;
  }

  std::vector<std::size_t> order(spec.n_documents);
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);
  const auto n_test = static_cast<std::size_t>(std::llround(spec.test_fraction * spec.n_documents));
  const auto n_dev = std::min(spec.n_documents - n_test,
                              static_cast<std::size_t>(std::llround(spec.dev_fraction * spec.n_documents)));
  std::vector<Split> splits(spec.n_documents, Split::kTrain);
  for (std::size_t k = 0; k < n_test; ++k) splits[order[k]] = Split::kTest;
  for (std::size_t k = n_test; k < n_test + n_dev; ++k) splits[order[k]] = Split::kDev;

  const auto quota = apportion(spec.label_mix, total_mentions);
  std::vector<EventLabel> labels;
  for (std::size_t i = 0; i < 3; ++i) labels.insert(labels.end(), quota[i], kAllEventLabels[i]);
  shuffle(labels, rng);

  std::vector<std::u32string> meds;
  for (const auto& m : spec.medications) meds.push_back(to_nfc(decode_utf8(m)));
  std::vector<std::size_t> coverage(meds.size());
  std::iota(coverage.begin(), coverage.end(), 0);
  shuffle(coverage, rng);

  const RuleSet rules = RuleSet::defaults();
  auto lexicon = [&](EventLabel label) {
    std::vector<std::u32string> words;
    for (const Rule& r : rules.rules) {
      if (r.label == label) {
        for (const auto& w : r.triggers) words.push_back(capitalized(w));
      }
    }
    return words;
  };
  const std::vector<std::u32string> disposition = lexicon(EventLabel::kDisposition);
  const std::vector<std::u32string> no_disposition = lexicon(EventLabel::kNoDisposition);

  Corpus corpus;
  corpus.name = "synthetic";
  std::size_t label_cursor = 0;
  std::size_t train_mentions = 0;
  for (std::size_t d = 0; d < spec.n_documents; ++d) {
    char id_buf[32];
    std::snprintf(id_buf, sizeof id_buf, "synth%04zu", d);
    AnnotatedDocument doc;
    doc.doc_id = id_buf;

    // true = medication sentence
    std::vector<bool> slots(plans[d].mentions, true);
    for (std::size_t f = 0; f < plans[d].fillers; ++f) {
      slots.insert(slots.begin() + static_cast<std::ptrdiff_t>(below(rng, slots.size() + 1)), false);
    }
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (s > 0) doc.text += below(rng, 4) == 0 ? U"\n" : U" ";
      if (!slots[s]) {
        doc.text += pick(kFillers, rng);
        continue;
      }
      const EventLabel label = labels[label_cursor++];
      std::u32string lead;
      switch (label) {
        case EventLabel::kDisposition:
          lead = pick(disposition, rng);
          break;
        case EventLabel::kNoDisposition:
          lead = pick(no_disposition, rng);
          break;
        case EventLabel::kUndetermined:
          lead = pick(kUndeterminedLeads, rng);
          break;
      }
      std::size_t med;
      if (splits[d] == Split::kTrain && train_mentions < coverage.size()) {
        med = coverage[train_mentions];
      } else {
        med = below(rng, meds.size());
      }
      if (splits[d] == Split::kTrain) ++train_mentions;

      doc.text += lead + U" ";
      MentionSpan m;
      m.id = "T" + std::to_string(doc.mentions.size() + 1);
      m.start = doc.text.size();
      doc.text += meds[med];
      m.end = doc.text.size();
      m.surface = meds[med];
      m.label = label;
      doc.mentions.push_back(std::move(m));
      doc.text += U" " + pick(kDoses, rng) + U" " + pick(kFrequencies, rng) + U".";
    }
    doc.text += U"\n";
    corpus.split[doc.doc_id] = splits[d];
    corpus.documents.emplace(doc.doc_id, std::move(doc));
  }
  return corpus;
}

}  // namespace medaug
