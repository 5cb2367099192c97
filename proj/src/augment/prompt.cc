#include "medaug/augment/prompt.h"

#include "medaug/augment/errors.h"
#include "medaug/corpus/errors.h"
#include "medaug/corpus/files.h"
#include "medaug/corpus/unicode.h"

namespace medaug {

void PromptTemplate::validate() const {
  if (body.find(kTextPlaceholder) == std::string::npos ||
      body.find(kEntityListPlaceholder) == std::string::npos) {
    throw ConfigError("prompt template '" + template_id + "' must contain " +
                      std::string(kTextPlaceholder) + " and " +
                      std::string(kEntityListPlaceholder));
  }
}

PromptTemplate default_template() {
  PromptTemplate t;
  t.template_id = "default";
  t.body =
      "Rephrase the following sentence from a clinical note. Keep the meaning, the patient's "
      "conditions and every medication change exactly as stated. Copy each of these medication "
      "names verbatim, as many times as they appear: {ENTITY_LIST}\n"
      "Reply with the rewritten sentence only.\n\n"
      "Sentence: {TEXT}";
  return t;
}

PromptTemplate load_template(const std::filesystem::path& dir, const std::string& template_id) {
  PromptTemplate t;
  if (!dir.empty()) {
    const std::filesystem::path file = dir / (template_id + ".txt");
    if (std::filesystem::exists(file)) {
      t.template_id = template_id;
      try {
        t.body = read_file(file);
      } catch (const ParseError& e) {
        throw ConfigError(e.what());
      }
      while (!t.body.empty() && (t.body.back() == '\n' || t.body.back() == '\r')) t.body.pop_back();
      t.validate();
      return t;
    }
  }
  if (template_id == "default") return default_template();
  throw ConfigError("unknown prompt template '" + template_id + "'");
}

std::string render_prompt(const PromptTemplate& tmpl, const SentenceUnit& unit) {
  std::string entities;
  for (std::size_t i = 0; i < unit.mentions.size(); ++i) {
    if (i > 0) entities += tmpl.entity_separator;
    entities += encode_utf8(unit.mentions[i].surface);
  }
  const std::string text = encode_utf8(unit.text);

  std::string out;
  std::size_t pos = 0;
  while (pos < tmpl.body.size()) {
    if (tmpl.body.compare(pos, kTextPlaceholder.size(), kTextPlaceholder) == 0) {
      out += text;
      pos += kTextPlaceholder.size();
    } else if (tmpl.body.compare(pos, kEntityListPlaceholder.size(), kEntityListPlaceholder) == 0) {
      out += entities;
      pos += kEntityListPlaceholder.size();
    } else {
      out += tmpl.body[pos++];
    }
  }
  return out;
}

}  // namespace medaug
