#include "powerwords/readability.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "powerwords/error.hpp"

namespace powerwords {
namespace {

void require_text(const TextStats& stats) {
  if (stats.word_count == 0 || stats.sentence_count == 0) {
    throw InsufficientTextError("readability needs at least one word and one sentence");
  }
}

double words_per_sentence(const TextStats& s) {
  return static_cast<double>(s.word_count) / static_cast<double>(s.sentence_count);
}

double per_word(std::size_t count, const TextStats& s) {
  return static_cast<double>(count) / static_cast<double>(s.word_count);
}

double clamp_grade(double g) { return g < 0.0 ? 0.0 : g; }

}  // namespace

std::string reading_ease_label(double score) {
  if (score >= 90.0) return "Very easy";
  if (score >= 80.0) return "Easy";
  if (score >= 70.0) return "Fairly easy";
  if (score >= 60.0) return "Standard";
  if (score >= 50.0) return "Fairly difficult";
  if (score >= 30.0) return "Difficult";
  return "Very confusing";
}

ReadingEase flesch_reading_ease(const TextStats& stats) {
  require_text(stats);
  const double score = 206.835 - 1.015 * words_per_sentence(stats) -
                       84.6 * per_word(stats.syllable_count, stats);
  return {score, reading_ease_label(score)};
}

double flesch_kincaid_grade(const TextStats& stats) {
  require_text(stats);
  return clamp_grade(0.39 * words_per_sentence(stats) +
                     11.8 * per_word(stats.syllable_count, stats) - 15.59);
}

SmogResult smog_index(const TextStats& stats) {
  require_text(stats);
  if (stats.sentence_count < 3) {
    throw InsufficientTextError("SMOG needs at least 3 sentences");
  }
  const double grade =
      1.0430 * std::sqrt(static_cast<double>(stats.polysyllable_count) * 30.0 /
                         static_cast<double>(stats.sentence_count)) +
      3.1291;
  return {clamp_grade(grade), stats.sentence_count < 30};
}

double gunning_fog(const TextStats& stats) {
  require_text(stats);
  return clamp_grade(0.4 * (words_per_sentence(stats) +
                            100.0 * per_word(stats.complex_word_count, stats)));
}

double coleman_liau(const TextStats& stats) {
  require_text(stats);
  const double letters = 100.0 * per_word(stats.letter_count, stats);
  const double sentences = 100.0 * per_word(stats.sentence_count, stats);
  return clamp_grade(0.0588 * letters - 0.296 * sentences - 15.8);
}

double automated_readability_index(const TextStats& stats) {
  require_text(stats);
  return clamp_grade(4.71 * per_word(stats.char_count, stats) +
                     0.5 * words_per_sentence(stats) - 21.43);
}

double dale_chall(const TextStats& stats) {
  require_text(stats);
  const double pct = 100.0 * per_word(stats.difficult_word_count, stats);
  double score = 0.1579 * pct + 0.0496 * words_per_sentence(stats);
  if (pct > 5.0) score += 3.6365;
  return score;
}

double dale_chall_grade(double score) {
  if (score < 5.0) return 4.0;
  if (score < 6.0) return 5.5;
  if (score < 7.0) return 7.5;
  if (score < 8.0) return 9.5;
  if (score < 9.0) return 11.5;
  if (score < 10.0) return 14.0;
  return 16.0;
}

std::string ordinal(int n) {
  const int mod100 = n % 100;
  const char* suffix = "th";
  if (mod100 < 11 || mod100 > 13) {
    switch (n % 10) {
      case 1: suffix = "st"; break;
      case 2: suffix = "nd"; break;
      case 3: suffix = "rd"; break;
      default: break;
    }
  }
  return std::to_string(n) + suffix;
}

std::string text_standard(std::span<const double> grades) {
  if (grades.empty()) throw InvalidArgumentError("text_standard needs at least one grade");
  std::map<long long, int> votes;
  for (double g : grades) {
    if (!std::isfinite(g)) throw InvalidArgumentError("text_standard grade is not finite");
    const auto lower = static_cast<long long>(std::floor(g));
    ++votes[lower];
    ++votes[lower + 1];
  }
  // std::map iterates ascending, so the first maximum is the lowest grade.
  auto best = votes.begin();
  for (auto it = votes.begin(); it != votes.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  const int n = static_cast<int>(best->first);
  return ordinal(n) + " and " + ordinal(n + 1) + " grade";
}

std::vector<double> ReadabilityReport::grade_votes() const {
  std::vector<double> grades{flesch_kincaid_grade};
  if (smog) grades.push_back(smog->grade);
  grades.push_back(gunning_fog);
  grades.push_back(coleman_liau);
  grades.push_back(ari);
  grades.push_back(dale_chall_grade(dale_chall));
  return grades;
}

ReadabilityReport compute_readability(const TextStats& stats) {
  require_text(stats);
  ReadabilityReport r;
  r.flesch_reading_ease = flesch_reading_ease(stats);
  r.flesch_kincaid_grade = flesch_kincaid_grade(stats);
  if (stats.sentence_count >= 3) r.smog = smog_index(stats);
  r.gunning_fog = gunning_fog(stats);
  r.coleman_liau = coleman_liau(stats);
  r.ari = automated_readability_index(stats);
  r.dale_chall = dale_chall(stats);
  const auto grades = r.grade_votes();
  r.text_standard = text_standard(grades);
  return r;
}

}  // namespace powerwords
