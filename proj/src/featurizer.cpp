#include "semhash/featurizer.hpp"

#include <stdexcept>
#include <unordered_set>

#include "semhash/utf8.hpp"

namespace semhash {

std::vector<std::string> subtokenize_word(std::string_view word) {
  if (word.empty()) {
    throw std::invalid_argument("subtokenize_word: empty word");
  }
  auto cps = utf8_decode(word);
  for (char32_t cp : cps) {
    if (cp == '#') {
      throw std::invalid_argument("subtokenize_word: word contains '#': " +
                                  std::string(word));
    }
    if (cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r') {
      throw std::invalid_argument(
          "subtokenize_word: word contains whitespace: " + std::string(word));
    }
  }

  std::vector<char32_t> padded;
  padded.reserve(cps.size() + 2);
  padded.push_back('#');
  padded.insert(padded.end(), cps.begin(), cps.end());
  padded.push_back('#');

  std::vector<std::string> out;
  out.reserve(cps.size());
  for (std::size_t j = 0; j + 3 <= padded.size(); ++j) {
    std::string gram;
    utf8_append(gram, padded[j]);
    utf8_append(gram, padded[j + 1]);
    utf8_append(gram, padded[j + 2]);
    out.push_back(std::move(gram));
  }
  return out;
}

FeaturizedText featurize_text(std::string_view normalized_text) {
  FeaturizedText out;
  for (const std::string& word : split_words(normalized_text)) {
    auto grams = subtokenize_word(lower_utf8(word));
    out.insert(out.end(), std::make_move_iterator(grams.begin()),
               std::make_move_iterator(grams.end()));
  }
  return out;
}

FeaturizedText featurize_text(const NormalizedText& nt) {
  return featurize_text(nt.text);
}

SubtokenCorpus build_subtoken_set(std::span<const NormalizedText> texts) {
  SubtokenCorpus corpus;
  std::unordered_set<std::string> seen;
  for (const NormalizedText& nt : texts) {
    FeaturizedText example = featurize_text(nt);
    for (const std::string& gram : example) {
      if (seen.insert(gram).second) {
        corpus.subtoken_set.push_back(gram);
      }
    }
    corpus.examples.push_back(std::move(example));
  }
  return corpus;
}

}  // namespace semhash
