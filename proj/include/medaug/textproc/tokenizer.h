#ifndef MEDAUG_TEXTPROC_TOKENIZER_H_
#define MEDAUG_TEXTPROC_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace medaug {

struct Token {
  std::u32string surface;
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive

  bool operator==(const Token&) const = default;
};

// Maximal runs of alphanumerics, or single characters that are neither
// alphanumeric nor whitespace. Offsets index `text`.
std::vector<Token> tokenize(std::u32string_view text);

}  // namespace medaug

#endif  // MEDAUG_TEXTPROC_TOKENIZER_H_
