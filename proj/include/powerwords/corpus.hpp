#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "powerwords/power_lexicon.hpp"
#include "powerwords/text.hpp"

namespace powerwords {

struct AnalysisReport;  // report.hpp

enum class Genre { kFiction, kSpeech, kMarketing };
enum class SourceKind { kGutenberg, kHtml, kPlain };

std::string_view genre_name(Genre g);
std::optional<Genre> parse_genre(std::string_view name);
std::string_view source_kind_name(SourceKind k);
std::optional<SourceKind> parse_source_kind(std::string_view name);

struct ManifestEntry {
  std::filesystem::path path;  // resolved against the manifest's directory
  std::string id;
  Genre genre;
  SourceKind kind;
};

struct CorpusManifest {
  std::vector<ManifestEntry> entries;

  // `path,id,genre,kind` lines, `#` comments, optional header. Relative
  // paths resolve against `base_dir`. Throws DataFileError.
  static CorpusManifest load(std::istream& in, const std::filesystem::path& base_dir,
                             const std::string& source = "");
  static CorpusManifest load_file(const std::filesystem::path& path);
};

struct StrippedText {
  std::string text;
  bool markers_missing = false;
};

// Text strictly between the "*** START OF" line and the next "*** END OF"
// line. Unchanged (flagged) without markers; throws InputError when START has
// no END.
StrippedText strip_gutenberg_boilerplate(std::string_view text);

// Tags removed, script/style dropped, block tags as line breaks, entities
// decoded, whitespace normalized.
std::string strip_html(std::string_view html);

struct CorpusDocument {
  Document document;
  Genre genre;
  std::vector<std::string> warnings;
};

// Throws InputError naming the entry for unreadable files or text that is
// empty after cleaning.
CorpusDocument load_entry(const ManifestEntry& entry);
std::vector<CorpusDocument> load_corpus(const CorpusManifest& manifest);

struct MeanValue {
  double mean = 0.0;
  std::size_t count = 0;  // documents that contributed
};

struct GenreAggregate {
  Genre genre;
  std::size_t document_count = 0;

  // Readability means; count is 0 when no document had the index.
  MeanValue flesch_reading_ease;
  MeanValue flesch_kincaid_grade;
  MeanValue smog;
  MeanValue gunning_fog;
  MeanValue coleman_liau;
  MeanValue ari;
  MeanValue dale_chall;
  std::string reading_ease_label;  // label of the mean score
  std::string text_standard;       // vote over the mean grades

  // Mean of per-document percentages over documents with at least one hit.
  std::array<double, kPowerCategoryCount> power_distribution{};
  std::size_t power_documents = 0;

  MeanValue polarity;
  MeanValue subjectivity;
};

// Per-genre means, in genre order, for every genre present. Throws
// InvalidArgumentError on empty input.
std::vector<GenreAggregate> aggregate(
    std::span<const std::pair<AnalysisReport, Genre>> reports);

}  // namespace powerwords
