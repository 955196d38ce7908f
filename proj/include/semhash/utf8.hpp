#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace semhash {

// Minimal UTF-8 handling for the preprocessing and featurization paths.
// The corpora are ASCII plus Latin-1 letters (German umlauts, accented
// vowels in station names), so that is the range we classify; anything an
// invalid byte sequence decodes to U+FFFD and is later dropped as a symbol.

std::vector<char32_t> utf8_decode(std::string_view s);
std::string utf8_encode(const std::vector<char32_t>& cps);
void utf8_append(std::string& out, char32_t cp);

// ASCII + Latin-1 letter predicate. Codepoints above U+00FF are treated as
// symbols and removed by normalization.
bool is_letter(char32_t cp);
bool is_ascii_digit(char32_t cp);

// Lowercases ASCII and Latin-1 uppercase letters; other codepoints pass
// through unchanged.
char32_t lower_codepoint(char32_t cp);

// Lowercase of a whole UTF-8 string under the rule above.
std::string lower_utf8(std::string_view s);

}  // namespace semhash
