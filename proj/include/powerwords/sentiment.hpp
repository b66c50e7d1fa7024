#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "powerwords/text.hpp"

namespace powerwords {

struct SentimentEntry {
  double polarity = 0.0;      // [-1, 1]
  double subjectivity = 0.0;  // [0, 1]
};

class SentimentLexicon {
 public:
  SentimentLexicon() = default;
  // Throws InvalidArgumentError when a value is out of range.
  SentimentLexicon(std::unordered_map<std::string, SentimentEntry> entries,
                   std::unordered_map<std::string, double> modifiers,
                   std::unordered_set<std::string> negators);

  // Default section `term,polarity,subjectivity`; `[modifiers]` section of
  // `term,factor`; `[negators]` section of bare terms.
  static SentimentLexicon load(std::istream& in, const std::string& source = "");
  static SentimentLexicon load_file(const std::filesystem::path& path);

  const std::unordered_map<std::string, SentimentEntry>& entries() const { return entries_; }
  const std::unordered_map<std::string, double>& modifiers() const { return modifiers_; }
  const std::unordered_set<std::string>& negators() const { return negators_; }

 private:
  std::unordered_map<std::string, SentimentEntry> entries_;
  std::unordered_map<std::string, double> modifiers_;
  std::unordered_set<std::string> negators_;
};

struct SentimentScore {
  double polarity = 0.0;
  double subjectivity = 0.0;
  std::size_t matched_terms = 0;
};

inline constexpr double kNegationFactor = -0.5;
inline constexpr std::size_t kNegationWindow = 3;

// Mean of effective polarities and of subjectivities over matched words.
// A modifier directly before a term scales it; a negator among the three
// preceding words flips and halves it. Windows stay inside one sentence.
SentimentScore analyze_sentiment(const Document& doc, const SentimentLexicon& lexicon);

}  // namespace powerwords
