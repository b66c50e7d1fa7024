#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "powerwords/text.hpp"

namespace powerwords {

enum class PowerCategory {
  kGreed,
  kEncouragement,
  kSafety,
  kAnger,
  kLust,
  kFear,
  kForbidden,
};

inline constexpr std::size_t kPowerCategoryCount = 7;

inline constexpr std::array<PowerCategory, kPowerCategoryCount> kPowerCategories = {
    PowerCategory::kGreed, PowerCategory::kEncouragement, PowerCategory::kSafety,
    PowerCategory::kAnger, PowerCategory::kLust,          PowerCategory::kFear,
    PowerCategory::kForbidden};

std::string_view category_name(PowerCategory c);
// Exact, case-sensitive category identifiers.
std::optional<PowerCategory> parse_category(std::string_view name);

inline constexpr std::size_t kMaxPhraseWords = 6;

class PowerLexicon {
 public:
  // Normalized term -> category. Terms are 1..kMaxPhraseWords words.
  using Entries = std::map<std::string, PowerCategory>;

  PowerLexicon(Entries entries, std::string version, std::string source);

  // `term,category` lines, optional `term,category` header, `#` comments.
  // `# version:` and `# source:` comments set the metadata.
  static PowerLexicon load(std::istream& in, const std::string& source_name = "");
  static PowerLexicon load_file(const std::filesystem::path& path);

  const Entries& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const std::string& version() const { return version_; }
  const std::string& source() const { return source_; }

 private:
  Entries entries_;
  std::string version_;
  std::string source_;
};

struct PowerMatch {
  std::string term;  // normalized lexicon term
  PowerCategory category;
  Span span;  // into the document's raw text
  friend bool operator==(const PowerMatch&, const PowerMatch&) = default;
};

struct PowerWordHits {
  std::array<std::size_t, kPowerCategoryCount> counts{};
  std::vector<PowerMatch> matches;
  std::size_t total = 0;

  std::size_t count(PowerCategory c) const { return counts[static_cast<std::size_t>(c)]; }
};

struct CategoryDistribution {
  std::array<double, kPowerCategoryCount> percentages{};
  bool empty = true;

  double percent(PowerCategory c) const {
    return percentages[static_cast<std::size_t>(c)];
  }
};

// Token-level trie over lexicon phrases. Immutable once built; share freely.
// Matches are case-insensitive, start and end on lexical tokens, require
// whitespace-only gaps between phrase words, and are chosen leftmost-longest
// without overlap.
class Matcher {
 public:
  explicit Matcher(const PowerLexicon& lexicon);
  ~Matcher();
  Matcher(Matcher&&) noexcept;
  Matcher& operator=(Matcher&&) noexcept;

  PowerWordHits scan(const Document& doc) const;

  std::size_t term_count() const;

 private:
  struct Node;
  std::unique_ptr<Node> root_;
  std::size_t terms_ = 0;
};

Matcher build_matcher(const PowerLexicon& lexicon);
PowerWordHits scan(const Document& doc, const Matcher& matcher);

CategoryDistribution distribution(const PowerWordHits& hits);
CategoryDistribution distribution(const std::array<std::size_t, kPowerCategoryCount>& counts);

// Splits a normalized term into its words; the tokenizer must produce one
// lexical token per word. Throws InvalidArgumentError otherwise.
std::vector<std::string> term_words(std::string_view normalized_term);

}  // namespace powerwords
