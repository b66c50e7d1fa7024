#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powerwords/corpus.hpp"
#include "powerwords/entities.hpp"
#include "powerwords/power_lexicon.hpp"
#include "powerwords/readability.hpp"
#include "powerwords/sentiment.hpp"
#include "powerwords/text.hpp"

namespace powerwords {

enum class Section { kReadability, kPower, kSentiment, kEntities };
enum class OutputFormat { kStructured, kMarkdown };

std::string_view section_name(Section s);
std::optional<Section> parse_section(std::string_view name);
// Comma-separated list; throws InvalidArgumentError on unknown or empty.
std::set<Section> parse_sections(std::string_view list);

inline const std::set<Section> kAllSections = {Section::kReadability, Section::kPower,
                                               Section::kSentiment, Section::kEntities};

// $POWERWORDS_DATA_DIR when set, else the directory baked in at build time.
std::filesystem::path default_data_dir();

struct AnalysisConfig {
  std::filesystem::path lexicon;
  std::filesystem::path sentiment;
  std::filesystem::path familiar;
  std::filesystem::path gazetteer;
  std::filesystem::path syllables;
  std::set<Section> sections = kAllSections;
  OutputFormat format = OutputFormat::kStructured;

  // Shipped data file names under `data_dir`.
  static AnalysisConfig defaults(const std::filesystem::path& data_dir = default_data_dir());
};

// Everything the enabled sections need, loaded once. Immutable; safe to share
// across threads.
class Resources {
 public:
  // Throws DataFileError before any analysis when a needed file fails.
  explicit Resources(const AnalysisConfig& config);

  const std::set<Section>& sections() const { return sections_; }
  const WordSet& familiar_words() const { return familiar_; }
  const SyllableCounter& syllables() const { return syllables_; }
  const PowerLexicon* lexicon() const { return lexicon_ ? &*lexicon_ : nullptr; }
  const Matcher* matcher() const { return matcher_ ? &*matcher_ : nullptr; }
  const SentimentLexicon* sentiment() const { return sentiment_ ? &*sentiment_ : nullptr; }
  const Gazetteer* gazetteer() const { return gazetteer_ ? &*gazetteer_ : nullptr; }

 private:
  std::set<Section> sections_;
  WordSet familiar_;
  SyllableCounter syllables_;
  std::optional<PowerLexicon> lexicon_;
  std::optional<Matcher> matcher_;
  std::optional<SentimentLexicon> sentiment_;
  std::optional<Gazetteer> gazetteer_;
};

struct PowerSection {
  PowerWordHits hits;
  CategoryDistribution distribution;
};

struct EntitySection {
  std::vector<EntitySpan> spans;
  std::string annotated;  // render_annotations output
};

struct AnalysisReport {
  std::string id;
  std::set<Section> sections;
  TextStats stats;
  // Enabled sections are present; readability stays empty (with a warning)
  // when the text is too short for any index.
  std::optional<ReadabilityReport> readability;
  std::optional<PowerSection> power;
  std::optional<SentimentScore> sentiment;
  std::optional<EntitySection> entities;
  std::vector<std::string> warnings;
};

// Runs stats, then the enabled sections in fixed order. Deterministic.
AnalysisReport analyze(const Document& doc, const Resources& resources);
AnalysisReport analyze(const Document& doc, const AnalysisConfig& config);

// Analyzes every document (in parallel when threads > 1), preserving order.
// Corpus loading warnings are copied into each report.
std::vector<std::pair<AnalysisReport, Genre>> analyze_corpus(
    std::span<const CorpusDocument> documents, const Resources& resources,
    std::size_t threads = 1);

// Rounds half away from zero to 2 decimals; used for every rendered score.
double round2(double value);

// Stable key order, 2-decimal scores, UTF-8 JSON with trailing newline.
std::string render_structured(const AnalysisReport& report);
std::string render_structured(std::span<const GenreAggregate> aggregates);

std::string render_markdown(const AnalysisReport& report);
std::string render_markdown(std::span<const GenreAggregate> aggregates);

// Flat `genre,category,percentage` CSV for plotting.
std::string render_distribution_table(std::span<const GenreAggregate> aggregates);

}  // namespace powerwords
