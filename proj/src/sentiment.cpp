#include "powerwords/sentiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "data_io.hpp"
#include "powerwords/error.hpp"

namespace powerwords {
namespace {

bool parse_number(std::string_view text, double& out) {
  const std::string s(detail::trim(text));
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size() && std::isfinite(out);
}

void check_entry(const std::string& term, const SentimentEntry& e) {
  if (!(e.polarity >= -1.0 && e.polarity <= 1.0)) {
    throw InvalidArgumentError("polarity of '" + term + "' outside [-1, 1]");
  }
  if (!(e.subjectivity >= 0.0 && e.subjectivity <= 1.0)) {
    throw InvalidArgumentError("subjectivity of '" + term + "' outside [0, 1]");
  }
}

void check_modifier(const std::string& term, double factor) {
  if (!(std::isfinite(factor) && factor > 0.0)) {
    throw InvalidArgumentError("modifier '" + term + "' needs a finite positive factor");
  }
}

std::string single_word(std::string_view term) {
  std::string norm = normalize(term);
  const auto tokens = tokenize(norm);
  if (tokens.size() != 1 || !tokens.front().is_lexical()) {
    throw InvalidArgumentError("'" + std::string(term) + "' is not a single word");
  }
  return norm;
}

}  // namespace

SentimentLexicon::SentimentLexicon(std::unordered_map<std::string, SentimentEntry> entries,
                                   std::unordered_map<std::string, double> modifiers,
                                   std::unordered_set<std::string> negators)
    : entries_(std::move(entries)), modifiers_(std::move(modifiers)), negators_(std::move(negators)) {
  for (const auto& [t, e] : entries_) check_entry(t, e);
  for (const auto& [t, f] : modifiers_) check_modifier(t, f);
}

SentimentLexicon SentimentLexicon::load(std::istream& in, const std::string& source) {
  enum class Section { kEntries, kModifiers, kNegators } section = Section::kEntries;
  std::unordered_map<std::string, SentimentEntry> entries;
  std::unordered_map<std::string, double> modifiers;
  std::unordered_set<std::string> negators;

  detail::for_each_data_line(in, [&](std::size_t line, std::string_view content) {
    if (content.front() == '[') {
      if (content == "[modifiers]") {
        section = Section::kModifiers;
      } else if (content == "[negators]") {
        section = Section::kNegators;
      } else {
        throw DataFileError(source, line, "unknown section " + std::string(content));
      }
      return;
    }
    try {
      const auto fields = detail::split(content, ',');
      switch (section) {
        case Section::kEntries: {
          if (fields.size() != 3) throw InvalidArgumentError("expected term,polarity,subjectivity");
          SentimentEntry e;
          if (!parse_number(fields[1], e.polarity) || !parse_number(fields[2], e.subjectivity)) {
            throw InvalidArgumentError("malformed number");
          }
          const auto term = single_word(fields[0]);
          check_entry(term, e);
          if (!entries.emplace(term, e).second) {
            throw InvalidArgumentError("duplicate term '" + term + "'");
          }
          break;
        }
        case Section::kModifiers: {
          if (fields.size() != 2) throw InvalidArgumentError("expected term,factor");
          double factor = 0.0;
          if (!parse_number(fields[1], factor)) throw InvalidArgumentError("malformed number");
          const auto term = single_word(fields[0]);
          check_modifier(term, factor);
          if (!modifiers.emplace(term, factor).second) {
            throw InvalidArgumentError("duplicate modifier '" + term + "'");
          }
          break;
        }
        case Section::kNegators:
          if (fields.size() != 1) throw InvalidArgumentError("expected a bare term");
          negators.insert(single_word(fields[0]));
          break;
      }
    } catch (const InvalidArgumentError& e) {
      throw DataFileError(source, line, e.what());
    }
  });
  return SentimentLexicon(std::move(entries), std::move(modifiers), std::move(negators));
}

SentimentLexicon SentimentLexicon::load_file(const std::filesystem::path& path) {
  return detail::load_from_file(path, [](std::istream& in, const std::string& src) {
    return load(in, src);
  });
}

SentimentScore analyze_sentiment(const Document& doc, const SentimentLexicon& lexicon) {
  struct Word {
    std::string folded;
    std::size_t sentence;
  };
  std::vector<Word> words;
  const auto tokens = doc.tokens();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].is_lexical()) words.push_back({normalize(tokens[i].text), doc.sentence_of(i)});
  }

  const auto& entries = lexicon.entries();
  const auto& modifiers = lexicon.modifiers();
  const auto& negators = lexicon.negators();

  double polarity_sum = 0.0;
  double subjectivity_sum = 0.0;
  std::size_t matched = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& w = words[i].folded;
    if (modifiers.contains(w) || negators.contains(w)) continue;
    const auto it = entries.find(w);
    if (it == entries.end()) continue;

    double polarity = it->second.polarity;
    if (i > 0 && words[i - 1].sentence == words[i].sentence) {
      if (const auto m = modifiers.find(words[i - 1].folded); m != modifiers.end()) {
        polarity *= m->second;
      }
    }
    for (std::size_t back = 1; back <= kNegationWindow && back <= i; ++back) {
      const auto& prev = words[i - back];
      if (prev.sentence != words[i].sentence) break;
      if (negators.contains(prev.folded)) {
        polarity *= kNegationFactor;
        break;
      }
    }
    polarity_sum += polarity;
    subjectivity_sum += it->second.subjectivity;
    ++matched;
  }

  SentimentScore score;
  score.matched_terms = matched;
  if (matched == 0) return score;
  const auto n = static_cast<double>(matched);
  score.polarity = std::clamp(polarity_sum / n, -1.0, 1.0);
  score.subjectivity = std::clamp(subjectivity_sum / n, 0.0, 1.0);
  return score;
}

}  // namespace powerwords
