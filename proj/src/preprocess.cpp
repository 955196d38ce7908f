#include "semhash/preprocess.hpp"

#include <algorithm>
#include <unordered_set>

#include "semhash/rng.hpp"
#include "semhash/utf8.hpp"

namespace semhash {

namespace {

bool is_space_cp(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\v' ||
         cp == '\f' || cp == 0xA0;
}

bool is_stop_cp(char32_t cp) { return cp == '.' || cp == '!' || cp == '?'; }

bool is_kept_cp(char32_t cp) {
  return is_letter(cp) || is_ascii_digit(cp) || is_stop_cp(cp);
}

const std::unordered_set<std::string>& pronoun_lookup() {
  static const std::unordered_set<std::string> set(pronoun_set().begin(),
                                                   pronoun_set().end());
  return set;
}

// Splits a token into (leading stop chars, core, trailing stop chars).
void trim_stops(const std::vector<char32_t>& tok, std::size_t& begin,
                std::size_t& end) {
  begin = 0;
  end = tok.size();
  while (begin < end && is_stop_cp(tok[begin])) ++begin;
  while (end > begin && is_stop_cp(tok[end - 1])) --end;
}

std::string mask_token(const std::vector<char32_t>& tok) {
  std::size_t begin, end;
  trim_stops(tok, begin, end);
  std::string core = utf8_encode(
      std::vector<char32_t>(tok.begin() + begin, tok.begin() + end));
  std::string out;
  for (std::size_t i = 0; i < begin; ++i) utf8_append(out, tok[i]);
  if (pronoun_lookup().count(core)) {
    out += kPronounMask;
  } else {
    out += core;
  }
  for (std::size_t i = end; i < tok.size(); ++i) utf8_append(out, tok[i]);
  return out;
}

bool core_is_mask(const std::vector<char32_t>& tok) {
  std::size_t begin, end;
  trim_stops(tok, begin, end);
  std::string core = utf8_encode(
      std::vector<char32_t>(tok.begin() + begin, tok.begin() + end));
  return core == kPronounMask;
}

}  // namespace

const std::vector<std::string>& pronoun_set() {
  static const std::vector<std::string> pronouns = {
      "i",       "me",      "my",       "mine",     "myself",
      "we",      "us",      "our",      "ours",     "ourselves",
      "you",     "your",    "yours",    "yourself", "yourselves",
      "he",      "him",     "his",      "himself",  "she",
      "her",     "hers",    "herself",  "it",       "its",
      "itself",  "they",    "them",     "their",    "theirs",
      "themselves"};
  return pronouns;
}

bool is_pronoun(std::string_view word) {
  return pronoun_lookup().count(std::string(word)) > 0;
}

std::uint64_t preprocessing_config_hash() {
  std::string joined;
  for (const auto& p : pronoun_set()) {
    joined += p;
    joined += '\n';
  }
  joined += kStopCharacters;
  joined += '\n';
  joined += kPronounMask;
  return fnv1a64(joined);
}

NormalizedText normalize_text(std::string_view raw) {
  auto cps = utf8_decode(raw);

  std::vector<std::string> tokens;
  std::vector<char32_t> tok;
  auto flush = [&] {
    if (tok.empty()) return;
    if (core_is_mask(tok)) {
      // Output of a previous normalization; keep verbatim so the mask's
      // hyphens and capitals survive re-normalization.
      std::string s;
      for (char32_t cp : tok) utf8_append(s, cp);
      tokens.push_back(std::move(s));
    } else {
      std::vector<char32_t> filtered;
      for (char32_t cp : tok) {
        char32_t low = lower_codepoint(cp);
        if (is_kept_cp(low)) filtered.push_back(low);
      }
      if (!filtered.empty()) tokens.push_back(mask_token(filtered));
    }
    tok.clear();
  };

  for (char32_t cp : cps) {
    if (is_space_cp(cp)) {
      flush();
    } else {
      tok.push_back(cp);
    }
  }
  flush();

  NormalizedText nt;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) nt.text += ' ';
    nt.text += tokens[i];
  }
  nt.tokens = split_words(nt.text);
  return nt;
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      words.push_back(std::move(cur));
      cur.clear();
    }
  };
  // Stop characters and spaces are ASCII, so byte-wise scanning is safe in
  // UTF-8 (continuation bytes are >= 0x80).
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
        c == '\f') {
      flush();
    } else if (c == '.' || c == '!' || c == '?') {
      flush();
      words.emplace_back(1, c);
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return words;
}

}  // namespace semhash
