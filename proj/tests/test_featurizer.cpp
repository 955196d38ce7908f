#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "semhash/featurizer.hpp"
#include "semhash/rng.hpp"

using namespace semhash;

TEST_CASE("subtokenize_word golden example") {
  CHECK(subtokenize_word("have") ==
        std::vector<std::string>{"#ha", "hav", "ave", "ve#"});
}

TEST_CASE("subtokenize_word short words and hand windows") {
  CHECK(subtokenize_word("a") == std::vector<std::string>{"#a#"});
  CHECK(subtokenize_word("ab") == std::vector<std::string>{"#ab", "ab#"});
  CHECK(subtokenize_word("disk") ==
        std::vector<std::string>{"#di", "dis", "isk", "sk#"});
  CHECK(subtokenize_word("?") == std::vector<std::string>{"#?#"});
}

TEST_CASE("subtokenize_word windows umlauts by codepoint") {
  CHECK(subtokenize_word("fährt") ==
        std::vector<std::string>{"#fä", "fäh", "ähr", "hrt", "rt#"});
  CHECK(subtokenize_word("öl") == std::vector<std::string>{"#öl", "öl#"});
}

TEST_CASE("subtokenize_word rejects bad input") {
  CHECK_THROWS_AS(subtokenize_word(""), std::invalid_argument);
  CHECK_THROWS_AS(subtokenize_word("ha#ve"), std::invalid_argument);
  CHECK_THROWS_AS(subtokenize_word("two words"), std::invalid_argument);
}

TEST_CASE("featurize_text concatenates per-word sub-tokens in order") {
  FeaturizedText ft = featurize_text("i have a flying disk");
  CHECK(ft.size() == 1 + 4 + 1 + 6 + 4);
  CHECK(ft[0] == "#i#");
  CHECK(ft[1] == "#ha");
  CHECK(ft[2] == "hav");
  CHECK(featurize_text("").empty());
}

TEST_CASE("featurize_text lowercases, mask included") {
  CHECK(featurize_text("-PRON-") ==
        std::vector<std::string>{"#-p", "-pr", "pro", "ron", "on-", "n-#"});
  CHECK(featurize_text("HAVE") == featurize_text("have"));
}

TEST_CASE("count law: sub-token count equals summed word length") {
  Rng rng(5);
  const std::string letters = "abcdefgh";
  for (int trial = 0; trial < 100; ++trial) {
    std::string text;
    std::size_t expected = 0;
    std::size_t n_words = 1 + rng.uniform(6);
    for (std::size_t w = 0; w < n_words; ++w) {
      std::size_t len = 1 + rng.uniform(8);
      expected += len;
      if (w) text += ' ';
      for (std::size_t i = 0; i < len; ++i) {
        text += letters[rng.uniform(letters.size())];
      }
    }
    CHECK(featurize_text(text).size() == expected);
  }
  // umlaut words count codepoints, not bytes
  CHECK(featurize_text("fährt ödland").size() == 5 + 6);
}

TEST_CASE("sub-token shape invariants") {
  auto cp_len = [](const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) {
      if ((c & 0xC0) != 0x80) ++n;
    }
    return n;
  };
  for (const std::string& gram :
       featurize_text("wann fährt die nächste ubahn? -PRON- a")) {
    CHECK(cp_len(gram) == 3);
    // '#' only at the outer positions
    auto first = gram.find('#');
    auto last = gram.rfind('#');
    if (first != std::string::npos) {
      CHECK((first == 0 || first == gram.size() - 1));
      CHECK((last == 0 || last == gram.size() - 1));
    }
    // every window is a substring of some padded word by construction;
    // spot-check there is no interior '#'
    if (gram.size() >= 3) {
      CHECK(gram.substr(1, gram.size() - 2).find('#') == std::string::npos);
    }
  }
}

TEST_CASE("build_subtoken_set dedups in first-appearance order") {
  std::vector<NormalizedText> texts = {normalize_text("have"),
                                       normalize_text("have")};
  SubtokenCorpus corpus = build_subtoken_set(texts);
  CHECK(corpus.subtoken_set ==
        std::vector<std::string>{"#ha", "hav", "ave", "ve#"});
  REQUIRE(corpus.examples.size() == 2);
  CHECK(corpus.examples[0].size() == 4);
  CHECK(corpus.examples[1].size() == 4);

  CHECK(build_subtoken_set({}).subtoken_set.empty());
  CHECK(build_subtoken_set({}).examples.empty());

  std::vector<NormalizedText> abc = {normalize_text("abc")};
  CHECK(build_subtoken_set(abc).subtoken_set ==
        std::vector<std::string>{"#ab", "abc", "bc#"});
}

TEST_CASE("permuting corpus order permutes outputs, set equal as a set") {
  std::vector<NormalizedText> texts = {normalize_text("have a disk"),
                                       normalize_text("flying disk"),
                                       normalize_text("i have")};
  std::vector<NormalizedText> reversed(texts.rbegin(), texts.rend());

  SubtokenCorpus a = build_subtoken_set(texts);
  SubtokenCorpus b = build_subtoken_set(reversed);
  REQUIRE(a.examples.size() == b.examples.size());
  for (std::size_t i = 0; i < a.examples.size(); ++i) {
    CHECK(a.examples[i] == b.examples[a.examples.size() - 1 - i]);
  }
  auto sa = a.subtoken_set;
  auto sb = b.subtoken_set;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  CHECK(sa == sb);
  CHECK(a.subtoken_set != b.subtoken_set);  // first-appearance order differs
}

TEST_CASE("normalized output never triggers the featurizer error paths") {
  Rng rng(9);
  const std::string pool = "aB c#.!?-09 äÖü";
  for (int trial = 0; trial < 200; ++trial) {
    std::string s;
    std::size_t len = rng.uniform(30);
    for (std::size_t i = 0; i < len; ++i) {
      std::size_t pos = rng.uniform(pool.size());
      while (pos > 0 && (static_cast<unsigned char>(pool[pos]) & 0xC0) == 0x80)
        --pos;
      std::size_t end = pos + 1;
      while (end < pool.size() &&
             (static_cast<unsigned char>(pool[end]) & 0xC0) == 0x80)
        ++end;
      s += pool.substr(pos, end - pos);
    }
    CHECK_NOTHROW(featurize_text(normalize_text(s)));
  }
}
