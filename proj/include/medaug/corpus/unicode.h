#ifndef MEDAUG_CORPUS_UNICODE_H_
#define MEDAUG_CORPUS_UNICODE_H_

#include <string>
#include <string_view>

namespace medaug {

// Document text is held as Unicode scalar values so that character offsets
// index it directly. Conversion to and from UTF-8 happens at the I/O edge.

// Decodes UTF-8. Throws ParseError(kInvalidEncoding) on ill-formed input.
std::u32string decode_utf8(std::string_view bytes);
std::string encode_utf8(std::u32string_view text);

// Canonical composition (NFC).
std::u32string to_nfc(std::u32string_view text);

bool is_alnum(char32_t c);
bool is_space(char32_t c);
bool is_upper(char32_t c);
bool is_digit(char32_t c);

// Simple case folding; never changes the length of the input.
char32_t fold_case(char32_t c);
std::u32string fold_case(std::u32string_view text);

// Trims and collapses every whitespace run to a single U+0020.
std::u32string collapse_whitespace(std::u32string_view text);

// Case-folded, whitespace-collapsed key used wherever entity surfaces are
// compared "up to case".
std::u32string entity_key(std::u32string_view surface);

}  // namespace medaug

#endif  // MEDAUG_CORPUS_UNICODE_H_
