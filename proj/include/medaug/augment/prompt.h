#ifndef MEDAUG_AUGMENT_PROMPT_H_
#define MEDAUG_AUGMENT_PROMPT_H_

#include <filesystem>
#include <string>

#include "medaug/textproc/sentences.h"

namespace medaug {

inline constexpr std::string_view kTextPlaceholder = "{TEXT}";
inline constexpr std::string_view kEntityListPlaceholder = "{ENTITY_LIST}";

struct PromptTemplate {
  std::string template_id;
  std::string body;  // UTF-8, must contain both placeholders
  std::string entity_separator = ", ";

  // Throws ConfigError if a placeholder is missing.
  void validate() const;
};

// The shipped rephrasing instruction, id "default".
PromptTemplate default_template();

// Resolves `template_id` to <dir>/<template_id>.txt when that file exists,
// else to a built-in template. Throws ConfigError when neither exists.
PromptTemplate load_template(const std::filesystem::path& dir, const std::string& template_id);

// Substitutes the placeholders in a single left-to-right pass; substituted
// text is never rescanned, so braces inside the unit pass through untouched.
// Mention surfaces are listed in unit order, repeats included.
std::string render_prompt(const PromptTemplate& tmpl, const SentenceUnit& unit);

}  // namespace medaug

#endif  // MEDAUG_AUGMENT_PROMPT_H_
