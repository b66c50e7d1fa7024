#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powerwords/text.hpp"

namespace powerwords {

struct ReadingEase {
  double score = 0.0;
  std::string label;
};

struct SmogResult {
  double grade = 0.0;
  bool low_sample = false;  // fewer than 30 sentences
};

// Standard published formulas over counted quantities. Grade-valued indices
// clamp negative results to 0; reading ease is left unclamped. All throw
// InsufficientTextError on zero words or sentences.
ReadingEase flesch_reading_ease(const TextStats& stats);
double flesch_kincaid_grade(const TextStats& stats);
SmogResult smog_index(const TextStats& stats);  // also throws below 3 sentences
double gunning_fog(const TextStats& stats);
double coleman_liau(const TextStats& stats);
double automated_readability_index(const TextStats& stats);
double dale_chall(const TextStats& stats);

std::string reading_ease_label(double score);

// Grade equivalent of a raw Dale-Chall score: the midpoint of its published
// grade band (e.g. 7.0-7.9 -> grades 9-10 -> 9.5).
double dale_chall_grade(double score);

// Each grade votes for floor(g) and floor(g) + 1; the most voted n (lowest on
// ties) is reported as "nth and (n+1)th grade".
std::string text_standard(std::span<const double> grades);

std::string ordinal(int n);

struct ReadabilityReport {
  ReadingEase flesch_reading_ease;
  double flesch_kincaid_grade = 0.0;
  std::optional<SmogResult> smog;  // absent below 3 sentences
  double gunning_fog = 0.0;
  double coleman_liau = 0.0;
  double ari = 0.0;
  double dale_chall = 0.0;
  std::string text_standard;

  // Inputs to the text-standard vote, in report order.
  std::vector<double> grade_votes() const;
};

// Throws InsufficientTextError when the text has no words or sentences.
ReadabilityReport compute_readability(const TextStats& stats);

}  // namespace powerwords
