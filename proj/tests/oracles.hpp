#pragma once

// Independent reference implementations and random generators shared by the
// property tests and the acceptance runner.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "powerwords/power_lexicon.hpp"
#include "powerwords/readability.hpp"
#include "powerwords/text.hpp"

namespace oracle {

namespace pw = powerwords;

struct Indices {
  double fre, fk, smog, fog, cl, ari, dc;
};

inline double clamp0(double v) { return v < 0.0 ? 0.0 : v; }

// Straight transcription of the published constants.
inline Indices readability(const pw::TextStats& s) {
  const double w = static_cast<double>(s.word_count);
  const double n = static_cast<double>(s.sentence_count);
  const double wps = w / n;
  const double spw = static_cast<double>(s.syllable_count) / w;
  Indices r{};
  r.fre = 206.835 - 1.015 * wps - 84.6 * spw;
  r.fk = clamp0(0.39 * wps + 11.8 * spw - 15.59);
  r.smog = 1.043 * std::sqrt(static_cast<double>(s.polysyllable_count) * (30.0 / n)) + 3.1291;
  r.fog = clamp0(0.4 * (wps + 100.0 * static_cast<double>(s.complex_word_count) / w));
  const double L = static_cast<double>(s.letter_count) / w * 100.0;
  const double S = n / w * 100.0;
  r.cl = clamp0(0.0588 * L - 0.296 * S - 15.8);
  r.ari = clamp0(4.71 * (static_cast<double>(s.char_count) / w) + 0.5 * wps - 21.43);
  const double pct = static_cast<double>(s.difficult_word_count) / w * 100.0;
  r.dc = 0.1579 * pct + 0.0496 * wps + (pct > 5.0 ? 3.6365 : 0.0);
  return r;
}

inline pw::TextStats random_stats(std::mt19937_64& rng) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  pw::TextStats s;
  s.word_count = pick(1, 20000);
  s.sentence_count = pick(1, s.word_count);
  s.syllable_count = pick(s.word_count, 4 * s.word_count);
  s.polysyllable_count = pick(0, s.word_count);
  s.complex_word_count = pick(0, s.polysyllable_count);
  s.difficult_word_count = pick(0, s.word_count);
  s.letter_count = pick(s.word_count, 12 * s.word_count);
  s.char_count = pick(s.letter_count, s.letter_count + 3 * s.word_count);
  return s;
}

struct NaiveMatch {
  std::size_t first_token;
  std::size_t token_count;
  pw::PowerCategory category;
  friend bool operator==(const NaiveMatch&, const NaiveMatch&) = default;
};

// O(tokens x terms): at every lexical token try each lexicon term against the
// folded token run, keep the longest, jump past it.
inline std::vector<NaiveMatch> naive_scan(const pw::Document& doc,
                                          const pw::PowerLexicon::Entries& entries) {
  const auto tokens = doc.tokens();
  std::vector<std::string> folded;
  folded.reserve(tokens.size());
  for (const auto& t : tokens) folded.push_back(pw::normalize(t.text));

  std::vector<std::pair<std::vector<std::string>, pw::PowerCategory>> terms;
  for (const auto& [term, cat] : entries) {
    std::vector<std::string> words;
    std::size_t start = 0;
    while (start <= term.size()) {
      const auto sp = term.find(' ', start);
      words.push_back(term.substr(start, sp == std::string::npos ? std::string::npos : sp - start));
      if (sp == std::string::npos) break;
      start = sp + 1;
    }
    terms.emplace_back(std::move(words), cat);
  }

  std::vector<NaiveMatch> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t best = 0;
    pw::PowerCategory best_cat{};
    for (const auto& [words, cat] : terms) {
      if (words.size() <= best || i + words.size() > tokens.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < words.size() && ok; ++k) {
        ok = tokens[i + k].is_lexical() && folded[i + k] == words[k];
      }
      if (ok) {
        best = words.size();
        best_cat = cat;
      }
    }
    if (best > 0) {
      out.push_back({i, best, best_cat});
      i += best;
    } else {
      ++i;
    }
  }
  return out;
}

// Small vocabulary so random lexicons and texts collide often.
inline const std::vector<std::string>& vocabulary() {
  static const std::vector<std::string> v = {
      "free", "now",   "risk",  "bonus", "act",   "fast",  "save",  "money", "secret", "new",
      "last", "chance", "don't", "miss",  "must-have", "limited", "time", "offer", "only", "you"};
  return v;
}

inline pw::PowerLexicon random_lexicon(std::mt19937_64& rng) {
  const auto& vocab = vocabulary();
  std::uniform_int_distribution<std::size_t> word(0, vocab.size() - 1);
  std::uniform_int_distribution<std::size_t> len(1, 4);
  std::uniform_int_distribution<std::size_t> cat(0, pw::kPowerCategoryCount - 1);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  pw::PowerLexicon::Entries entries;
  const std::size_t n = size(rng);
  while (entries.size() < n) {
    const std::size_t l = len(rng);
    std::string term;
    for (std::size_t k = 0; k < l; ++k) term += (k ? " " : "") + vocab[word(rng)];
    entries.emplace(term, pw::kPowerCategories[cat(rng)]);
  }
  return pw::PowerLexicon(std::move(entries), "random", "generated");
}

inline std::string random_text(std::mt19937_64& rng, std::size_t words) {
  const auto& vocab = vocabulary();
  static const std::vector<std::string> seps = {" ", " ", " ", "  ", "\n", ", ", ". ", "! ", " - "};
  std::uniform_int_distribution<std::size_t> word(0, vocab.size() + 4);
  std::uniform_int_distribution<std::size_t> sep(0, seps.size() - 1);
  std::uniform_int_distribution<int> upper(0, 5);
  std::string out;
  for (std::size_t i = 0; i < words; ++i) {
    const std::size_t w = word(rng);
    std::string token = w < vocab.size() ? vocab[w] : "filler" + std::to_string(w);
    if (upper(rng) == 0) {
      for (auto& c : token) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    } else if (upper(rng) == 1) {
      token[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    }
    out += token;
    if (i + 1 < words) out += seps[sep(rng)];
  }
  return out;
}

}  // namespace oracle
