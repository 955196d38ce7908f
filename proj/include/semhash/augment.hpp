#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "semhash/corpus.hpp"
#include "semhash/preprocess.hpp"
#include "semhash/rng.hpp"

namespace semhash {

enum class PartOfSpeech { kNoun, kVerb };

// Synonym dictionary keyed by (word, part of speech). Words and synonyms
// are lowercase single tokens; a synonym list never contains its headword.
class Thesaurus {
 public:
  Thesaurus() = default;

  // Adds an entry, merging with any existing (word, pos) list. Lowercases,
  // drops self-synonyms and duplicates. Throws std::invalid_argument on
  // multi-word headwords or synonyms.
  void add(std::string_view word, PartOfSpeech pos,
           const std::vector<std::string>& synonyms);

  // Headword under either part of speech.
  bool is_headword(std::string_view word) const;

  // Synonyms pooled over both parts of speech, noun list first, duplicates
  // removed. Empty for non-headwords.
  std::vector<std::string> synonyms(std::string_view word) const;

  std::size_t headword_count() const { return entries_.size(); }

 private:
  struct Entry {
    std::vector<std::string> noun_synonyms;
    std::vector<std::string> verb_synonyms;
  };
  std::unordered_map<std::string, Entry> entries_;
};

// TSV lexicon, one line per headword: word<TAB>pos<TAB>syn1,syn2,...
// with pos in {n, v}. Duplicate (word, pos) lines are merged; blank lines
// and lines starting with '#' are skipped. Multi-word synonyms are
// rejected with the offending line number.
Thesaurus load_thesaurus_tsv(const std::filesystem::path& path);

struct AugmentationPlan {
  int target_count = 0;  // 0 means "largest original class count"
  std::uint64_t seed = 0;
  int max_replacements_per_sentence = 2;
};

struct AugmentResult {
  NormalizedText text;
  bool changed = false;
};

// Picks up to max_replacements token positions whose token is a thesaurus
// headword (uniformly, without replacement) and substitutes each with a
// uniformly drawn synonym. Token count is preserved. If nothing matches,
// the input comes back with changed=false.
AugmentResult synonym_augment(const NormalizedText& nt, const Thesaurus& th,
                              RandomSource& rng, int max_replacements = 2);

// Oversamples every class to the plan's target count by appending
// synonym-augmented copies of uniformly drawn originals of the same class.
// Originals are retained as an order-preserving prefix; when the thesaurus
// has no coverage the appended copy is an unmodified duplicate.
std::vector<LabeledUtterance> balance_classes(
    std::span<const LabeledUtterance> train, const Thesaurus& th,
    const AugmentationPlan& plan);

}  // namespace semhash
