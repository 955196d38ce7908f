#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semhash/preprocess.hpp"

namespace semhash {

// Sub-tokens of one document, in document order with repetition. Each
// sub-token is a 3-codepoint window over a '#'-padded word.
using FeaturizedText = std::vector<std::string>;

// Pads word to "#word#" and emits every contiguous 3-character window,
// left to right. A word of L characters yields exactly L sub-tokens.
// Throws std::invalid_argument on an empty word or one containing
// whitespace or '#'.
std::vector<std::string> subtokenize_word(std::string_view word);

// Lowercases and sub-tokenizes every split_words() token of the text,
// concatenated in order. The "-PRON-" mask is featurized in lowercase.
FeaturizedText featurize_text(const NormalizedText& nt);
FeaturizedText featurize_text(std::string_view normalized_text);

struct SubtokenCorpus {
  // Deduplicated sub-tokens in first-appearance order.
  std::vector<std::string> subtoken_set;
  // Per-text featurizations, multiplicity and order preserved.
  std::vector<FeaturizedText> examples;
};

SubtokenCorpus build_subtoken_set(std::span<const NormalizedText> texts);

}  // namespace semhash
