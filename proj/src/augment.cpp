#include "semhash/augment.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "semhash/dataflow.hpp"
#include "semhash/utf8.hpp"

namespace semhash {

namespace {

bool has_whitespace(std::string_view s) {
  return s.find_first_of(" \t\r\n") != std::string_view::npos;
}

std::string trimmed(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

void append_unique(std::vector<std::string>& list, const std::string& syn) {
  if (std::find(list.begin(), list.end(), syn) == list.end()) {
    list.push_back(syn);
  }
}

}  // namespace

void Thesaurus::add(std::string_view word, PartOfSpeech pos,
                    const std::vector<std::string>& synonyms) {
  std::string head = lower_utf8(trimmed(word));
  if (head.empty()) {
    throw std::invalid_argument("thesaurus: empty headword");
  }
  if (has_whitespace(head)) {
    throw std::invalid_argument("thesaurus: multi-word headword: \"" + head +
                                "\"");
  }
  Entry& entry = entries_[head];
  auto& list =
      pos == PartOfSpeech::kNoun ? entry.noun_synonyms : entry.verb_synonyms;
  for (const std::string& raw : synonyms) {
    std::string syn = lower_utf8(trimmed(raw));
    if (syn.empty()) continue;
    if (has_whitespace(syn)) {
      throw std::invalid_argument("thesaurus: multi-word synonym \"" + syn +
                                  "\" for \"" + head + "\"");
    }
    if (syn == head) continue;  // never list the headword as its own synonym
    append_unique(list, syn);
  }
  if (entry.noun_synonyms.empty() && entry.verb_synonyms.empty()) {
    entries_.erase(head);
  }
}

bool Thesaurus::is_headword(std::string_view word) const {
  return entries_.count(std::string(word)) > 0;
}

std::vector<std::string> Thesaurus::synonyms(std::string_view word) const {
  auto it = entries_.find(std::string(word));
  if (it == entries_.end()) return {};
  std::vector<std::string> pooled = it->second.noun_synonyms;
  for (const std::string& syn : it->second.verb_synonyms) {
    append_unique(pooled, syn);
  }
  return pooled;
}

Thesaurus load_thesaurus_tsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("thesaurus: cannot open " + path.string());
  }
  Thesaurus th;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trimmed(line);
    if (t.empty() || t[0] == '#') continue;

    std::size_t tab1 = line.find('\t');
    std::size_t tab2 = tab1 == std::string::npos ? std::string::npos
                                                 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": expected word<TAB>pos<TAB>synonyms");
    }
    std::string word = line.substr(0, tab1);
    std::string pos_str = trimmed(line.substr(tab1 + 1, tab2 - tab1 - 1));
    std::string syn_field = line.substr(tab2 + 1);

    PartOfSpeech pos;
    if (pos_str == "n") {
      pos = PartOfSpeech::kNoun;
    } else if (pos_str == "v") {
      pos = PartOfSpeech::kVerb;
    } else {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": pos must be n or v, got \"" + pos_str +
                               "\"");
    }

    std::vector<std::string> synonyms;
    std::string cur;
    for (char c : syn_field) {
      if (c == ',') {
        synonyms.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    synonyms.push_back(cur);

    try {
      th.add(word, pos, synonyms);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": " + e.what());
    }
  }
  return th;
}

AugmentResult synonym_augment(const NormalizedText& nt, const Thesaurus& th,
                              RandomSource& rng, int max_replacements) {
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < nt.tokens.size(); ++i) {
    if (th.is_headword(nt.tokens[i])) candidates.push_back(i);
  }

  AugmentResult result;
  result.text = nt;
  if (candidates.empty() || max_replacements <= 0) {
    result.changed = false;
    return result;
  }

  std::size_t picks = std::min<std::size_t>(
      candidates.size(), static_cast<std::size_t>(max_replacements));
  // Partial Fisher-Yates: the first `picks` slots end up a uniform draw
  // without replacement.
  for (std::size_t j = 0; j < picks; ++j) {
    std::size_t swap_with = j + rng.uniform(candidates.size() - j);
    std::swap(candidates[j], candidates[swap_with]);
    std::size_t pos = candidates[j];
    std::vector<std::string> syns = th.synonyms(nt.tokens[pos]);
    result.text.tokens[pos] = syns[rng.uniform(syns.size())];
  }
  result.changed = true;

  result.text.text.clear();
  for (std::size_t i = 0; i < result.text.tokens.size(); ++i) {
    if (i) result.text.text += ' ';
    result.text.text += result.text.tokens[i];
  }
  return result;
}

std::vector<LabeledUtterance> balance_classes(
    std::span<const LabeledUtterance> train, const Thesaurus& th,
    const AugmentationPlan& plan) {
  if (train.empty()) {
    throw std::invalid_argument("balance_classes: no training samples");
  }

  std::vector<std::string> label_order;
  std::unordered_map<std::string, std::vector<std::size_t>> by_label;
  for (std::size_t i = 0; i < train.size(); ++i) {
    observe_dataflow("augment", train[i]);
    auto [it, inserted] = by_label.try_emplace(train[i].intent);
    if (inserted) label_order.push_back(train[i].intent);
    it->second.push_back(i);
  }

  std::size_t max_count = 0;
  for (const auto& label : label_order) {
    const auto& idxs = by_label[label];
    if (idxs.empty()) {
      throw std::invalid_argument("balance_classes: empty class \"" + label +
                                  "\"");
    }
    max_count = std::max(max_count, idxs.size());
  }
  std::size_t target = plan.target_count > 0
                           ? static_cast<std::size_t>(plan.target_count)
                           : max_count;
  if (target < max_count) {
    throw std::invalid_argument(
        "balance_classes: target_count " + std::to_string(target) +
        " is below the largest class count " + std::to_string(max_count));
  }

  std::vector<LabeledUtterance> out(train.begin(), train.end());
  Rng rng(plan.seed);
  for (const auto& label : label_order) {
    const auto& idxs = by_label[label];
    for (std::size_t n = idxs.size(); n < target; ++n) {
      const LabeledUtterance& src = train[idxs[rng.uniform(idxs.size())]];
      NormalizedText nt = normalize_text(src.text);
      AugmentResult aug =
          synonym_augment(nt, th, rng, plan.max_replacements_per_sentence);
      LabeledUtterance extra;
      // No replacement (or a sentence that normalizes to nothing) appends
      // the unmodified duplicate, so the class still reaches its target.
      extra.text = (!aug.changed || aug.text.text.empty()) ? src.text
                                                           : aug.text.text;
      extra.intent = src.intent;
      extra.is_training = src.is_training;
      out.push_back(std::move(extra));
    }
  }
  return out;
}

}  // namespace semhash
