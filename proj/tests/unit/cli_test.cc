#include <algorithm>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "medaug/cli/cli.h"
#include "medaug/corpus/corpus.h"
#include "medaug/corpus/files.h"
#include "support.h"

namespace fs = std::filesystem;
using medaug::testing::TempDir;
using medaug::testing::write_text;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), {"--log-level", "off"});
  std::ostringstream out, err;
  const int code = medaug::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) { return medaug::read_file(p); }

// Small synthetic corpus plus an augmentation config pointing at it.
struct Workspace {
  TempDir dir;
  fs::path corpus = dir / "corpus";
  fs::path config = dir / "augment.json";
  Workspace() {
    write_text(dir / "spec.json", R"({"n_documents": 20, "seed": 5})");
    REQUIRE(run({"synth", "--spec", (dir / "spec.json").string(), "--out", corpus.string()}).code == 0);
    write_text(config, R"({"corpus": "corpus", "fraction": 0.2, "seed": 3})");
  }
};

}  // namespace

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"score", "--gold", "x"}).code == 2);
  const Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("augment") != std::string::npos);
}

TEST_CASE("missing inputs are i/o errors") {
  TempDir t;
  const Result r = run({"validate", (t / "nope").string()});
  CHECK(r.code == 4);
  CHECK(r.err.find("medaug:") == 0);
}

TEST_CASE("validate lists issues and exits 1 on errors") {
  TempDir t;
  write_text(t / "a.txt", "Start Lipitor.");
  write_text(t / "a.ann", "T1\tDisposition 6 13\tLipitor\n");
  write_text(t / "b.txt", "Hold aspirin.");
  write_text(t / "b.ann", "T1\tDisposition 5 12\tAspirin\n");
  const Result r = run({"validate", t.path().string()});
  CHECK(r.code == 1);
  CHECK(r.out == "error\tb\tT1\t1\tSurfaceMismatch\t" + r.out.substr(r.out.rfind('\t') + 1));

  write_text(t / "b.ann", "T1\tDisposition 5 12\taspirin\n");
  const Result ok = run({"validate", t.path().string()});
  CHECK(ok.code == 0);
  CHECK(ok.out.empty());
}

TEST_CASE("synth needs a seed") {
  TempDir t;
  write_text(t / "spec.json", R"({"n_documents": 3})");
  CHECK(run({"synth", "--spec", (t / "spec.json").string(), "--out", (t / "c").string()}).code == 2);
  CHECK(run({"synth", "--spec", (t / "spec.json").string(), "--out", (t / "c").string(), "--seed",
             "1"})
            .code == 0);
  CHECK(fs::exists(t / "c" / "synth0002.ann"));
}

TEST_CASE("augment is reproducible and merge adds the accepted documents") {
  Workspace w;
  const fs::path a = w.dir / "a", b = w.dir / "b";
  REQUIRE(run({"augment", "--config", w.config.string(), "--out", a.string()}).code == 0);
  REQUIRE(run({"augment", "--config", w.config.string(), "--out", b.string(), "--jobs", "3"}).code == 0);
  CHECK(slurp(a / "records.jsonl") == slurp(b / "records.jsonl"));
  CHECK(slurp(a / "drift.json") == slurp(b / "drift.json"));
  CHECK(fs::exists(a / "responses.journal.jsonl"));

  const Result sampled = run({"sample", "--config", w.config.string()});
  CHECK(sampled.code == 0);
  const std::string records = slurp(a / "records.jsonl");
  const auto units = static_cast<std::size_t>(std::count(sampled.out.begin(), sampled.out.end(), '\n'));
  CHECK(units >= 1);

  const fs::path merged = w.dir / "merged";
  REQUIRE(run({"merge", "--orig", w.corpus.string(), "--aug", (a / "records.jsonl").string(), "--out",
               merged.string()})
              .code == 0);
  const auto accepted = medaug::load_corpus(merged).documents.size() -
                        medaug::load_corpus(w.corpus).documents.size();
  CHECK(accepted == units);
  CHECK(run({"validate", merged.string()}).code == 0);

  // A second merge of the same records collides with the first.
  CHECK(run({"merge", "--orig", merged.string(), "--aug", (a / "records.jsonl").string(), "--out",
             (w.dir / "twice").string()})
            .code == 4);
  CHECK(records.find("\"verdict\"") != std::string::npos);
}

TEST_CASE("config problems exit 2") {
  Workspace w;
  write_text(w.config, R"({"corpus": "corpus", "fraction": 0.2})");
  CHECK(run({"augment", "--config", w.config.string(), "--out", (w.dir / "o").string()}).code == 2);
  CHECK(run({"augment", "--config", w.config.string(), "--out", (w.dir / "o").string(), "--seed",
             "4"})
            .code == 0);
  write_text(w.config, R"({"corpus": "corpus", "seed": 1, "fraktion": 0.2})");
  CHECK(run({"sample", "--config", w.config.string()}).code == 2);
  write_text(w.config, R"({"corpus": "corpus", "seed": 1})");
  CHECK(run({"augment", "--config", w.config.string(), "--out", (w.dir / "o").string(), "--provider",
             "carrier-pigeon"})
            .code == 2);
}

TEST_CASE("unreachable http provider exits 3 and still writes records") {
  Workspace w;
  write_text(w.config, R"({"corpus": "corpus", "fraction": 0.1, "seed": 3, "max_retries_per_unit": 0,
    "provider": {"kind": "http", "endpoint": "http://127.0.0.1:9/v1/chat/completions",
                 "api_key_env": "", "timeout_seconds": 1, "max_attempts": 2,
                 "backoff_initial_seconds": 0.01}})");
  const fs::path out = w.dir / "o";
  const Result r = run({"augment", "--config", w.config.string(), "--out", out.string()});
  CHECK(r.code == 3);
  const std::string records = slurp(out / "records.jsonl");
  CHECK(records.find("ProviderError") != std::string::npos);
  CHECK_FALSE(fs::exists(out / "drift.json"));
}

TEST_CASE("tag, score, diff and export") {
  Workspace w;
  const fs::path tagged = w.dir / "tagged", weak = w.dir / "weak";
  REQUIRE(run({"tag", "--train", w.corpus.string(), "--in", w.corpus.string(), "--out", tagged.string()})
              .code == 0);
  REQUIRE(run({"tag", "--train", w.corpus.string(), "--in", w.corpus.string(), "--out", weak.string(),
               "--drop-rules", "Disposition"})
              .code == 0);
  CHECK(run({"tag", "--train", w.corpus.string(), "--in", w.corpus.string(), "--out", weak.string(),
             "--drop-rules", "Dosage"})
            .code == 2);

  const fs::path ra = w.dir / "a.json", rb = w.dir / "b.json", rid = w.dir / "id.json";
  const Result same = run({"score", "--gold", w.corpus.string(), "--pred", tagged.string(), "--task",
                           "event", "--report", ra.string()});
  CHECK(same.code == 0);
  CHECK(same.out.find("Micro           | 1.0000  1.0000  1.0000  | 1.0000  1.0000  1.0000") !=
        std::string::npos);
  CHECK(run({"score", "--gold", w.corpus.string(), "--pred", weak.string(), "--task", "event",
             "--report", rb.string()})
            .code == 0);
  CHECK(run({"score", "--gold", w.corpus.string(), "--pred", weak.string(), "--task", "id", "--report",
             rid.string()})
            .code == 0);
  CHECK(run({"score", "--gold", w.corpus.string(), "--pred", weak.string(), "--task", "both"}).code == 2);
  CHECK(run({"score", "--gold", w.corpus.string(), "--pred", weak.string(), "--task", "id", "--policy",
             "random"})
            .code == 2);

  const Result d = run({"diff", "--a", ra.string(), "--b", rb.string(), "--json"});
  CHECK(d.code == 0);
  CHECK(d.out.find("strict.micro.fscore") != std::string::npos);
  CHECK(run({"diff", "--a", ra.string(), "--b", rid.string()}).code == 2);
  write_text(w.dir / "junk.json", "{");
  CHECK(run({"diff", "--a", ra.string(), "--b", (w.dir / "junk.json").string()}).code == 4);

  // A prediction for a document the gold corpus lacks.
  write_text(tagged / "stray.txt", "x");
  write_text(tagged / "stray.ann", "");
  CHECK(run({"score", "--gold", w.corpus.string(), "--pred", tagged.string(), "--task", "id"}).code == 4);

  const fs::path conll = w.dir / "conll";
  CHECK(run({"export", "--corpus", w.corpus.string(), "--task", "event", "--out", conll.string()}).code ==
        0);
  CHECK(slurp(conll / "train.conll").rfind("# doc_id = synth", 0) == 0);
  CHECK(fs::exists(conll / "dev.conll"));
  CHECK(fs::exists(conll / "test.conll"));
}
