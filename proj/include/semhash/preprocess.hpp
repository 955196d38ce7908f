#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace semhash {

// Sentence after normalization: lowercase, pronouns masked as "-PRON-",
// every character outside [a-z0-9 letters digits space . ! ?] removed.
// tokens is the split_words() view of text.
struct NormalizedText {
  std::string text;
  std::vector<std::string> tokens;
};

// Sentence-final punctuation that survives normalization.
inline constexpr std::string_view kStopCharacters = ".!?";

inline constexpr std::string_view kPronounMask = "-PRON-";

// English personal/possessive pronoun inventory matched (case-insensitively)
// against whole tokens, trailing/leading stop characters excluded.
const std::vector<std::string>& pronoun_set();
bool is_pronoun(std::string_view word);

// Stable tag of the pronoun set + stop characters, stored in model files so
// a model trained under different preprocessing rules is rejected at load.
std::uint64_t preprocessing_config_hash();

// Lowercase, strip disallowed characters, collapse whitespace, mask
// pronouns. Idempotent: the mask token and its attached stop characters
// pass through unchanged on a second application.
NormalizedText normalize_text(std::string_view raw);

// Whitespace split with stop characters detached as their own tokens.
// Never returns empty tokens.
std::vector<std::string> split_words(std::string_view text);

}  // namespace semhash
