#include "medaug/cli/cli.h"

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <filesystem>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "medaug/augment/config.h"
#include "medaug/augment/drift.h"
#include "medaug/augment/errors.h"
#include "medaug/augment/http_provider.h"
#include "medaug/augment/merge.h"
#include "medaug/augment/mock_provider.h"
#include "medaug/augment/pipeline.h"
#include "medaug/augment/prompt.h"
#include "medaug/augment/records.h"
#include "medaug/augment/sampling.h"
#include "medaug/baseline/gazetteer.h"
#include "medaug/baseline/synthetic.h"
#include "medaug/baseline/tagger.h"
#include "medaug/corpus/corpus.h"
#include "medaug/corpus/errors.h"
#include "medaug/corpus/files.h"
#include "medaug/corpus/standoff.h"
#include "medaug/corpus/unicode.h"
#include "medaug/evalkit/metrics.h"
#include "medaug/evalkit/report.h"
#include "medaug/textproc/conll.h"

namespace medaug::cli {

namespace fs = std::filesystem;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

spdlog::logger& logger() {
  static std::shared_ptr<spdlog::logger> log = [] {
    auto l = spdlog::stderr_logger_st("medaug");
    l->set_pattern("%Y-%m-%dT%H:%M:%S.%e %l %v");
    return l;
  }();
  return *log;
}

struct Options {
  std::string log_level = "info";
  std::size_t jobs = 1;

  std::string dir;

  std::string spec;
  std::string out;
  std::optional<std::uint64_t> seed;

  std::string config;
  std::string provider;

  std::string orig;
  std::string aug;

  std::string train;
  std::string in;
  std::vector<std::string> drop_labels;

  std::string gold;
  std::string pred;
  std::string task;
  std::string report;
  std::string split;
  std::string policy = "maximum";
  bool macro_all_classes = false;

  std::string a;
  std::string b;
  bool json = false;

  std::string corpus;
};

TaskMode task_arg(const std::string& name) {
  auto task = parse_task(name);
  if (!task) throw UsageError("unknown task '" + name + "' (expected id or event)");
  return *task;
}

AugmentConfig read_config(const Options& o) {
  AugmentConfig cfg = load_augment_config(o.config);
  if (o.seed) cfg.seed = *o.seed;
  if (!cfg.seed) throw ConfigError("no seed: pass --seed or set \"seed\" in the config");
  return cfg;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto issues = validate_directory(o.dir, {o.jobs});
  std::size_t errors = 0;
  for (const Issue& issue : issues) {
    const bool error = issue.severity() == Severity::kError;
    errors += error ? 1 : 0;
    out << (error ? "error" : "warning") << '\t' << issue.doc_id << '\t'
        << (issue.mention_id.empty() ? "-" : issue.mention_id) << '\t'
        << issue.line_no << '\t' << issue_category_name(issue.category) << '\t' << issue.message << '\n';
  }
  logger().info("stage=validate errors={} warnings={}", errors, issues.size() - errors);
  return has_errors(issues) ? kValidationIssues : kSuccess;
}

int cmd_synth(const Options& o) {
  const std::uint64_t* seed = o.seed ? &*o.seed : nullptr;
  const SyntheticSpec spec = parse_synthetic_spec(read_file(o.spec), seed);
  const Corpus corpus = generate_synthetic(spec);
  write_corpus(corpus, o.out);
  std::size_t mentions = 0;
  for (const auto& [id, doc] : corpus.documents) mentions += doc.mentions.size();
  logger().info("stage=synth documents={} mentions={} seed={} out={}", corpus.documents.size(),
                mentions, spec.seed, o.out);
  return kSuccess;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const AugmentConfig cfg = read_config(o);
  const Corpus corpus = load_corpus(cfg.corpus, {o.jobs});
  const auto units = sample_units(corpus, cfg.fraction, *cfg.seed);
  for (const SentenceUnit& unit : units) {
    nlohmann::ordered_json j;
    j["doc_id"] = unit.doc_id;
    j["start"] = unit.start;
    j["end"] = unit.end;
    j["text"] = encode_utf8(unit.text);
    out << j.dump() << '\n';
  }
  logger().info("stage=sample eligible={} sampled={} seed={}", eligible_units(corpus).size(),
                units.size(), *cfg.seed);
  return kSuccess;
}

int cmd_augment(const Options& o) {
  AugmentConfig cfg = read_config(o);
  if (!o.provider.empty()) {
    auto kind = parse_provider_kind(o.provider);
    if (!kind) throw UsageError("unknown provider '" + o.provider + "' (expected mock or http)");
    cfg.provider.kind = *kind;
  }
  cfg.concurrency = o.jobs;
  cfg.validate();

  const Corpus corpus = load_corpus(cfg.corpus, {o.jobs});
  const PromptTemplate tmpl = load_template(cfg.template_dir, cfg.prompt_template_id);
  std::unique_ptr<ParaphraseProvider> provider;
  if (cfg.provider.kind == ProviderKind::kMock) {
    provider = std::make_unique<MockProvider>();
  } else {
    provider = std::make_unique<HttpProvider>(cfg.provider);
  }

  const fs::path out_dir = o.out;
  fs::create_directories(out_dir);
  ResponseJournal journal(out_dir / "responses.journal.jsonl");
  const AugmentRun run = run_augmentation(corpus, cfg, tmpl, *provider, &journal);

  atomic_write(out_dir / "records.jsonl", records_to_jsonl(run.records));
  const auto& s = run.stats;
  logger().info(
      "stage=augment provider={} sampled={} generated={} accepted={} rejected_missing_entity={} "
      "rejected_realign_failure={} provider_errors={} units_without_acceptance={}",
      provider_kind_name(cfg.provider.kind), s.sampled, s.generated, s.accepted,
      s.rejected_missing_entity, s.rejected_realign_failure, s.provider_errors,
      s.units_without_acceptance);
  if (run.drift) {
    atomic_write(out_dir / "drift.json", drift_to_json(*run.drift));
    logger().info("stage=drift l1={:.6f} threshold={} verdict={}", run.drift->l1_distance,
                  run.drift->threshold, drift_verdict_name(run.drift->verdict));
  } else {
    std::error_code ec;
    fs::remove(out_dir / "drift.json", ec);
    logger().warn("stage=drift skipped reason=no_accepted_records");
  }
  if (s.provider_errors > 0) {
    logger().error("stage=augment units_ended_by_provider_error={}", s.provider_errors);
    return kProviderFailure;
  }
  return kSuccess;
}

int cmd_merge(const Options& o) {
  const Corpus original = load_corpus(o.orig, {o.jobs});
  const auto records = records_from_jsonl(read_file(o.aug));
  const auto accepted = accepted_only(records);
  const Corpus merged = merge_corpus(original, accepted);
  write_corpus(merged, o.out);
  logger().info("stage=merge original={} records={} accepted={} merged={}",
                original.documents.size(), records.size(), accepted.size(),
                merged.documents.size());
  return kSuccess;
}

// Reads every <id>.txt in `dir`, keeping splits.tsv assignments if present.
Corpus read_texts(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw ParseError(ParseErrorKind::kIo, "not a directory: " + dir.string());
  Corpus corpus;
  corpus.name = dir.filename().string();
  std::set<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") paths.insert(entry.path());
  }
  for (const fs::path& p : paths) {
    AnnotatedDocument doc;
    doc.doc_id = p.stem().string();
    try {
      doc.text = to_nfc(decode_utf8(read_file(p)));
    } catch (const ParseError& e) {
      throw e.with_doc(doc.doc_id);
    }
    corpus.split[doc.doc_id] = Split::kTrain;
    corpus.documents.emplace(doc.doc_id, std::move(doc));
  }
  const fs::path manifest = dir / kSplitManifest;
  if (fs::exists(manifest)) {
    std::istringstream lines(read_file(manifest));
    std::string line;
    int row = 0;
    while (std::getline(lines, line)) {
      ++row;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      const auto tab = line.find('\t');
      const auto split = tab == std::string::npos ? std::nullopt : parse_split(line.substr(tab + 1));
      if (!split) throw ParseError(ParseErrorKind::kInvalidManifest, "bad manifest line", row);
      const std::string id = line.substr(0, tab);
      if (corpus.documents.count(id)) corpus.split[id] = *split;
    }
  }
  return corpus;
}

int cmd_tag(const Options& o) {
  const Corpus train = load_corpus(o.train, {o.jobs});
  const Gazetteer gazetteer = build_gazetteer(train);
  RuleSet rules = RuleSet::defaults();
  for (const std::string& name : o.drop_labels) {
    auto label = parse_event_label(name);
    if (!label) throw UsageError("unknown label '" + name + "'");
    rules = rules.without(*label);
  }

  Corpus corpus = read_texts(o.in);
  std::vector<AnnotatedDocument*> docs;
  for (auto& [id, doc] : corpus.documents) docs.push_back(&doc);
  parallel_for(docs.size(), o.jobs,
               [&](std::size_t i) { docs[i]->mentions = tag(docs[i]->text, gazetteer, rules); });
  write_corpus(corpus, o.out);

  std::size_t mentions = 0;
  for (const auto* doc : docs) mentions += doc->mentions.size();
  logger().info("stage=tag gazetteer_entries={} rules={} documents={} mentions={}",
                gazetteer.entries.size(), rules.rules.size(), docs.size(), mentions);
  return kSuccess;
}

int cmd_score(const Options& o, std::ostream& out) {
  const TaskMode task = task_arg(o.task);
  ScoreOptions options;
  options.jobs = o.jobs;
  options.macro_exclude_absent = !o.macro_all_classes;
  if (o.policy == "maximum") {
    options.policy = MatchPolicy::kMaximum;
  } else if (o.policy == "greedy") {
    options.policy = MatchPolicy::kGreedy;
  } else {
    throw UsageError("unknown policy '" + o.policy + "' (expected maximum or greedy)");
  }
  if (!o.split.empty()) {
    options.split = parse_split(o.split);
    if (!options.split) throw UsageError("unknown split '" + o.split + "'");
  }

  const Corpus gold = load_corpus(o.gold, {o.jobs});
  const fs::path pred_dir = o.pred;
  if (!fs::is_directory(pred_dir)) {
    throw ParseError(ParseErrorKind::kIo, "not a directory: " + pred_dir.string());
  }
  std::set<std::string> ids;
  for (const auto& entry : fs::directory_iterator(pred_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".ann") {
      ids.insert(entry.path().stem().string());
    }
  }
  for (const std::string& id : ids) {
    if (!gold.documents.count(id)) {
      throw ScoreError(ScoreError::Kind::kUnknownDocument, "prediction for unknown document " + id, id);
    }
  }
  const std::vector<std::string> id_list(ids.begin(), ids.end());
  std::vector<std::vector<MentionSpan>> parsed(id_list.size());
  parallel_for(id_list.size(), o.jobs, [&](std::size_t i) {
    const std::string& id = id_list[i];
    const std::string standoff = read_file(pred_dir / (id + ".ann"));
    try {
      parsed[i] = parse_document(id, gold.documents.at(id).text, standoff).mentions;
    } catch (const ParseError& e) {
      throw e.with_doc(id);
    }
  });
  Predictions predictions;
  for (std::size_t i = 0; i < id_list.size(); ++i) predictions[id_list[i]] = std::move(parsed[i]);

  const MetricsReport report = score(gold, predictions, task, options);
  if (!o.report.empty()) atomic_write(o.report, report_to_json(report));
  out << format_report_table(report);
  logger().info(
      "stage=score task={} documents={} gold={} predicted={} strict_micro_f={:.4f} "
      "lenient_micro_f={:.4f} overlapping_gold_documents={}",
      task_name(task), report.documents, report.gold_mentions, report.predicted_mentions,
      report.strict.micro.fscore, report.lenient.micro.fscore, report.overlapping_gold_documents);
  return kSuccess;
}

MetricsReport read_report(const std::string& path) {
  const std::string content = read_file(path);
  try {
    return report_from_json(content);
  } catch (const std::invalid_argument& e) {
    throw ParseError(ParseErrorKind::kMalformedLine, path + ": " + e.what());
  }
}

int cmd_diff(const Options& o, std::ostream& out) {
  const ReportDelta delta = diff_reports(read_report(o.a), read_report(o.b));
  out << (o.json ? delta_to_json(delta) : format_delta_table(delta));
  std::size_t changed = 0;
  for (const auto& e : delta.entries) changed += e.changed ? 1 : 0;
  logger().info("stage=diff task={} entries={} changed={}", task_name(delta.task),
                delta.entries.size(), changed);
  return kSuccess;
}

int cmd_export(const Options& o) {
  const TaskMode task = task_arg(o.task);
  const Corpus corpus = load_corpus(o.corpus, {o.jobs});
  EncodeStats stats;
  const auto by_split = encode_corpus(corpus, task, &stats);
  const fs::path out_dir = o.out;
  for (Split split : {Split::kTrain, Split::kDev, Split::kTest}) {
    auto it = by_split.find(split);
    const std::vector<TaggedSequence> none;
    const auto& seqs = it == by_split.end() ? none : it->second;
    atomic_write(out_dir / (std::string(split_name(split)) + ".conll"), write_conll(seqs));
    logger().info("stage=export split={} sequences={}", split_name(split), seqs.size());
  }
  logger().info("stage=export task={} snapped={} dropped={}", task_name(task), stats.snapped,
                stats.dropped);
  if (stats.snapped || stats.dropped) {
    logger().warn("stage=export mentions_not_token_aligned snapped={} dropped={}", stats.snapped,
                  stats.dropped);
  }
  return kSuccess;
}

int report_failure(std::ostream& err, int code, const std::string& what) {
  err << "medaug: " << what << '\n';
  return code;
}

std::string describe(const ParseError& e) {
  std::string s = std::string(parse_error_kind_name(e.kind()));
  if (!e.doc_id().empty()) s += " in " + e.doc_id();
  if (e.line_no() > 0) s += " line " + std::to_string(e.line_no());
  if (!e.mention_id().empty()) s += " mention " + e.mention_id();
  return s + ": " + e.detail();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clinical medication corpus augmentation and evaluation", "medaug"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--log-level", o.log_level, "trace, debug, info, warn, error or off")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "off"}));

  auto jobs_opt = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  auto seed_opt = [&](CLI::App* cmd) { cmd->add_option("--seed", o.seed, "random seed"); };

  auto* validate = app.add_subcommand("validate", "check a corpus directory");
  validate->add_option("dir", o.dir, "corpus directory")->required();
  jobs_opt(validate);

  auto* synth = app.add_subcommand("synth", "generate a synthetic corpus");
  synth->add_option("--spec", o.spec, "JSON spec file")->required();
  synth->add_option("--out", o.out, "output directory")->required();
  seed_opt(synth);

  auto* sample = app.add_subcommand("sample", "print the units an augmentation run would use");
  sample->add_option("--config", o.config, "augmentation config")->required();
  seed_opt(sample);
  jobs_opt(sample);

  auto* augment = app.add_subcommand("augment", "paraphrase sampled units");
  augment->add_option("--config", o.config, "augmentation config")->required();
  augment->add_option("--out", o.out, "output directory")->required();
  augment->add_option("--provider", o.provider, "mock or http (overrides the config)");
  seed_opt(augment);
  jobs_opt(augment);

  auto* merge = app.add_subcommand("merge", "add accepted paraphrases to a corpus");
  merge->add_option("--orig", o.orig, "original corpus")->required();
  merge->add_option("--aug", o.aug, "records.jsonl from augment")->required();
  merge->add_option("--out", o.out, "output directory")->required();
  jobs_opt(merge);

  auto* tagcmd = app.add_subcommand("tag", "run the gazetteer baseline");
  tagcmd->add_option("--train", o.train, "training corpus")->required();
  tagcmd->add_option("--in", o.in, "directory of .txt files to tag")->required();
  tagcmd->add_option("--out", o.out, "output directory")->required();
  tagcmd->add_option("--drop-rules", o.drop_labels, "remove the rules emitting these labels");
  jobs_opt(tagcmd);

  auto* scorecmd = app.add_subcommand("score", "score predictions against gold");
  scorecmd->add_option("--gold", o.gold, "gold corpus")->required();
  scorecmd->add_option("--pred", o.pred, "directory of predicted .ann files")->required();
  scorecmd->add_option("--task", o.task, "id or event")->required();
  scorecmd->add_option("--report", o.report, "write the JSON report here");
  scorecmd->add_option("--split", o.split, "score only train, dev or test documents");
  scorecmd->add_option("--policy", o.policy, "lenient pairing: maximum or greedy");
  scorecmd->add_flag("--macro-all-classes", o.macro_all_classes,
                     "average every class, including ones absent from gold and predictions");
  jobs_opt(scorecmd);

  auto* diff = app.add_subcommand("diff", "compare two reports");
  diff->add_option("--a", o.a, "baseline report")->required();
  diff->add_option("--b", o.b, "other report")->required();
  diff->add_flag("--json", o.json, "print JSON instead of a table");

  auto* exportcmd = app.add_subcommand("export", "write CoNLL token files per split");
  exportcmd->add_option("--corpus", o.corpus, "corpus directory")->required();
  exportcmd->add_option("--task", o.task, "id or event")->required();
  exportcmd->add_option("--out", o.out, "output directory")->required();

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("medaug");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "medaug: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }
  logger().set_level(spdlog::level::from_str(o.log_level));

  try {
    if (*validate) return cmd_validate(o, out);
    if (*synth) return cmd_synth(o);
    if (*sample) return cmd_sample(o, out);
    if (*augment) return cmd_augment(o);
    if (*merge) return cmd_merge(o);
    if (*tagcmd) return cmd_tag(o);
    if (*scorecmd) return cmd_score(o, out);
    if (*diff) return cmd_diff(o, out);
    if (*exportcmd) return cmd_export(o);
    return kUsageError;
  } catch (const UsageError& e) {
    err << "medaug: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  } catch (const ConfigError& e) {
    return report_failure(err, kUsageError, std::string("config: ") + e.what());
  } catch (const SpecError& e) {
    return report_failure(err, kUsageError, std::string("spec: ") + e.what());
  } catch (const EmptyTrainingSetError& e) {
    return report_failure(err, kUsageError, e.what());
  } catch (const AugmentError& e) {
    const bool usage = e.kind() == AugmentError::Kind::kNoEligibleUnits ||
                       e.kind() == AugmentError::Kind::kEmptyAcceptedSet;
    return report_failure(err, usage ? kUsageError : kIoError, e.what());
  } catch (const ProviderError& e) {
    return report_failure(err, kProviderFailure,
                          std::string(provider_error_kind_name(e.kind())) + ": " + e.what());
  } catch (const ScoreError& e) {
    const bool usage = e.kind() == ScoreError::Kind::kTaskMismatch;
    return report_failure(err, usage ? kUsageError : kIoError, e.what());
  } catch (const ParseError& e) {
    return report_failure(err, kIoError, describe(e));
  } catch (const fs::filesystem_error& e) {
    return report_failure(err, kIoError, e.what());
  } catch (const nlohmann::json::exception& e) {
    return report_failure(err, kIoError, e.what());
  } catch (const std::invalid_argument& e) {
    return report_failure(err, kIoError, e.what());
  }
}

}  // namespace medaug::cli
