#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "powerwords/text.hpp"

namespace powerwords {

enum class EntityLabel {
  kDate,
  kTime,
  kCardinal,
  kNorp,
  kGpe,
  kOrg,
  kLaw,
  kPerson,
  kWorkOfArt,
};

std::string_view label_name(EntityLabel label);
std::optional<EntityLabel> parse_label(std::string_view name);

struct EntitySpan {
  Span span;
  std::string surface;
  EntityLabel label;
  friend bool operator==(const EntitySpan&, const EntitySpan&) = default;
};

// Surface form -> label tables for the gazetteer-backed labels. Surfaces are
// matched token by token and case-sensitively; a lowercase leading word such
// as "the" also matches its capitalized form.
class Gazetteer {
 public:
  Gazetteer() = default;

  // Sections `[NORP]`, `[GPE]`, `[ORG]`, `[LAW]`, `[PERSON]`, `[WORK_OF_ART]`,
  // one surface form per line.
  static Gazetteer load(std::istream& in, const std::string& source = "");
  static Gazetteer load_file(const std::filesystem::path& path);

  // Throws InvalidArgumentError for pattern-only labels, empty surfaces, or a
  // surface already listed under a different label.
  void add(EntityLabel label, std::string_view surface);

  std::size_t size() const { return entries_.size(); }

  struct Entry {
    std::vector<std::string> tokens;
    std::vector<bool> glued;  // no whitespace before token k
    EntityLabel label;
    std::string surface;
  };
  // Entries whose first token folds to `folded_first`.
  std::span<const std::size_t> candidates(const std::string& folded_first) const;
  const Entry& entry(std::size_t i) const { return entries_[i]; }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_first_;
  std::unordered_map<std::string, EntityLabel> by_surface_;
};

// Rule passes, earlier passes winning on overlap: number/date/time patterns,
// then longest gazetteer match. Unmatched capitalized text is never guessed.
std::vector<EntitySpan> tag_entities(const Document& doc, const Gazetteer& gazetteer);

// Raw text with each span rendered as `**surface LABEL**`. Throws
// InvalidArgumentError for overlapping, unordered or out-of-range spans.
std::string render_annotations(const Document& doc, std::span<const EntitySpan> spans);

}  // namespace powerwords
