#include "medaug/augment/mock_provider.h"

#include <map>
#include <vector>

#include "medaug/augment/alignment.h"
#include "medaug/corpus/errors.h"
#include "medaug/corpus/unicode.h"
#include "medaug/textproc/tokenizer.h"

namespace medaug {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

const std::map<std::u32string, std::vector<std::u32string>>& synonyms() {
  static const std::map<std::u32string, std::vector<std::u32string>> table = {
      {U"start", {U"initiate", U"commence"}},
      {U"started", {U"initiated", U"commenced"}},
      {U"begin", {U"initiate", U"start"}},
      {U"stop", {U"cease", U"halt"}},
      {U"stopped", {U"ceased", U"halted"}},
      {U"discontinue", {U"stop", U"cease"}},
      {U"continue", {U"maintain", U"keep"}},
      {U"increase", {U"raise", U"uptitrate"}},
      {U"decrease", {U"reduce", U"lower"}},
      {U"hold", {U"pause", U"withhold"}},
      {U"switch", {U"change", U"transition"}},
      {U"takes", {U"uses", U"is taking"}},
      {U"daily", {U"once a day", U"every day"}},
      {U"twice", {U"two times", U"2 times"}},
      {U"bedtime", {U"night", U"sleep"}},
      {U"patient", {U"pt", U"individual"}},
      {U"reviewed", {U"went over", U"looked at"}},
      {U"discussed", {U"talked about", U"covered"}},
      {U"considering", {U"weighing", U"contemplating"}},
  };
  return table;
}

bool ascii_upper(char32_t c) { return c >= U'A' && c <= U'Z'; }
char32_t ascii_to_upper(char32_t c) { return c >= U'a' && c <= U'z' ? c - 32 : c; }
char32_t ascii_to_lower(char32_t c) { return ascii_upper(c) ? c + 32 : c; }

}  // namespace

std::string MockProvider::paraphrase(const ParaphraseRequest& request) {
  std::u32string text;
  try {
    text = decode_utf8(request.source_text);
  } catch (const ParseError& e) {
    throw ProviderError(ProviderError::Kind::kProviderRejection, e.what());
  }
  const std::uint64_t h =
      fnv1a64(request.prompt) ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(request.attempt + 1));

  std::vector<char> locked(text.size(), 0);
  for (const std::string& entity : request.entities) {
    for (const auto& [b, e] : find_occurrences(text, decode_utf8(entity))) {
      for (std::size_t i = b; i < e; ++i) locked[i] = 1;
    }
  }

  // Synonym pass. Output positions of locked characters are tracked so the
  // frame pass can avoid them too.
  std::u32string out;
  std::vector<char> out_locked;
  auto copy = [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      out.push_back(text[i]);
      out_locked.push_back(locked[i]);
    }
  };
  std::size_t cursor = 0;
  std::size_t word_index = 0;
  for (const Token& tok : tokenize(text)) {
    bool touched = false;
    for (std::size_t i = tok.start; i < tok.end; ++i) touched = touched || locked[i];
    auto it = synonyms().find(fold_case(tok.surface));
    if (touched || it == synonyms().end()) continue;
    copy(cursor, tok.start);
    std::u32string repl = it->second[(h >> (word_index++ % 32)) % it->second.size()];
    if (ascii_upper(tok.surface[0])) repl[0] = ascii_to_upper(repl[0]);
    out += repl;
    out_locked.insert(out_locked.end(), repl.size(), 0);
    cursor = tok.end;
  }
  copy(cursor, text.size());

  switch ((h >> 40) % 4) {
    case 0:
      break;
    case 1: {
      if (!out.empty() && !out_locked[0]) out[0] = ascii_to_lower(out[0]);
      out = U"As noted, " + out;
      break;
    }
    case 2: {
      std::size_t end = out.size();
      while (end > 0 && !out_locked[end - 1] &&
             (out[end - 1] == U'.' || out[end - 1] == U'!' || out[end - 1] == U'?')) {
        --end;
      }
      out = out.substr(0, end) + U", per the record.";
      break;
    }
    default:
      out = U"Plan: " + out;
      break;
  }
  return encode_utf8(out);
}

}  // namespace medaug
