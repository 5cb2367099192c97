#include "medaug/textproc/tokenizer.h"

#include "medaug/corpus/unicode.h"

namespace medaug {

std::vector<Token> tokenize(std::u32string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    if (is_alnum(text[i])) {
      while (j < text.size() && is_alnum(text[j])) ++j;
    }
    tokens.push_back({std::u32string(text.substr(i, j - i)), i, j});
    i = j;
  }
  return tokens;
}

}  // namespace medaug
