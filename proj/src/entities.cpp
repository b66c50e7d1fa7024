#include "powerwords/entities.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <unordered_set>

#include "data_io.hpp"
#include "powerwords/error.hpp"
#include "unicode.hpp"

namespace powerwords {
namespace {

constexpr std::array<std::string_view, 9> kLabelNames = {
    "DATE", "TIME", "CARDINAL", "NORP", "GPE", "ORG", "LAW", "PERSON", "WORK_OF_ART"};

bool gazetteer_label(EntityLabel l) {
  return l != EntityLabel::kDate && l != EntityLabel::kTime && l != EntityLabel::kCardinal;
}

const std::unordered_set<std::string_view> kSmallNumbers = {
    "zero",    "one",     "two",       "three",    "four",    "five",   "six",
    "seven",   "eight",   "nine",      "ten",      "eleven",  "twelve", "thirteen",
    "fourteen", "fifteen", "sixteen",  "seventeen", "eighteen", "nineteen"};
const std::unordered_set<std::string_view> kTens = {
    "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"};
const std::unordered_set<std::string_view> kScales = {"hundred", "thousand", "million",
                                                      "billion", "trillion"};
const std::unordered_set<std::string_view> kPluralScales = {
    "hundreds", "thousands", "millions", "billions", "trillions"};

const std::unordered_set<std::string_view> kTimeUnits = {
    "year",  "years",  "month",  "months",  "week",  "weeks",     "day",
    "days",  "decade", "decades", "century", "centuries"};
const std::unordered_set<std::string_view> kDirections = {"ago", "later", "earlier", "hence"};
const std::unordered_set<std::string_view> kDayWords = {"today", "tomorrow", "yesterday"};
const std::unordered_set<std::string_view> kDeictic = {"last", "next", "this"};
const std::unordered_set<std::string_view> kDeicticUnits = {
    "year", "month", "week", "decade", "century", "summer", "winter", "spring", "autumn"};
const std::unordered_set<std::string_view> kYearPrepositions = {"in",    "since",  "by",
                                                                "until", "during", "of"};
const std::unordered_set<std::string_view> kMonths = {
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};
// Month names that are also ordinary words need a following day or year.
const std::unordered_set<std::string_view> kAmbiguousMonths = {"March", "May"};
const std::unordered_set<std::string_view> kWeekdays = {
    "Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"};
const std::unordered_set<std::string_view> kDayParts = {"morning", "afternoon", "evening", "night"};
const std::unordered_set<std::string_view> kTimeWords = {"noon", "midnight", "tonight"};

// Fixed TIME phrases, lowercase.
const std::vector<std::vector<std::string_view>> kTimePhrases = {
    {"the", "long", "night"}, {"the", "whole", "night"}, {"all", "night"},
    {"the", "small", "hours"}};

bool is_number_word(std::string_view w) {
  if (kSmallNumbers.contains(w) || kTens.contains(w) || kScales.contains(w)) return true;
  const auto dash = w.find('-');
  if (dash == std::string_view::npos) return false;
  return kTens.contains(w.substr(0, dash)) && kSmallNumbers.contains(w.substr(dash + 1)) &&
         w.substr(dash + 1) != "zero";
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::optional<int> small_int(std::string_view s) {
  if (!all_digits(s) || s.size() > 4) return std::nullopt;
  int v = 0;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

class PatternScanner {
 public:
  explicit PatternScanner(const Document& doc) : doc_(doc), tokens_(doc.tokens()) {
    folded_.reserve(tokens_.size());
    for (const auto& t : tokens_) folded_.push_back(normalize(t.text));
  }

  // Longest pattern match starting at token i: {end, label}; end == i if none.
  std::pair<std::size_t, EntityLabel> match(std::size_t i) const {
    if (auto e = date(i); e > i) return {e, EntityLabel::kDate};
    if (auto e = time(i); e > i) return {e, EntityLabel::kTime};
    if (auto e = number_phrase(i); e > i) return {e, EntityLabel::kCardinal};
    return {i, EntityLabel::kCardinal};
  }

 private:
  bool in_range(std::size_t i) const { return i < tokens_.size(); }
  // Token i + 1 follows token i after whitespace.
  bool spaced(std::size_t i) const { return doc_.adjacent(i); }
  bool glued(std::size_t i) const {
    return i + 1 < tokens_.size() && tokens_[i].span.end == tokens_[i + 1].span.begin;
  }
  const std::string& word(std::size_t i) const { return folded_[i]; }
  const std::string& raw(std::size_t i) const { return tokens_[i].text; }

  // Digit groups joined by glued ',' or '.', e.g. 1,000,000 or 3.5.
  std::size_t numeral(std::size_t i) const {
    if (!in_range(i) || tokens_[i].kind != TokenKind::kNumber || !all_digits(raw(i))) return i;
    std::size_t end = i + 1;
    while (end + 1 < tokens_.size() && glued(end - 1) && glued(end) &&
           (raw(end) == "," || raw(end) == ".") && all_digits(raw(end + 1))) {
      end += 2;
    }
    return end;
  }

  std::size_t number_phrase(std::size_t i) const {
    if (!in_range(i)) return i;
    if (auto e = numeral(i); e > i) return e;
    if (kPluralScales.contains(word(i))) return i + 1;
    if (!is_number_word(word(i)) || kScales.contains(word(i))) return i;
    std::size_t end = i + 1;
    bool after_scale = false;
    while (in_range(end) && spaced(end - 1)) {
      if (is_number_word(word(end))) {
        after_scale = kScales.contains(word(end));
        ++end;
        continue;
      }
      if (after_scale && word(end) == "and" && in_range(end + 1) && spaced(end) &&
          is_number_word(word(end + 1)) && !kScales.contains(word(end + 1))) {
        end += 2;
        after_scale = false;
        continue;
      }
      break;
    }
    return end;
  }

  bool is_year(std::size_t i) const {
    const auto v = in_range(i) && tokens_[i].kind == TokenKind::kNumber ? small_int(raw(i))
                                                                         : std::nullopt;
    return v && raw(i).size() == 4 && *v >= 1000 && *v <= 2099;
  }

  bool is_day(std::size_t i) const {
    if (!in_range(i)) return false;
    std::string_view t = raw(i);
    if (tokens_[i].kind == TokenKind::kWord && t.size() > 2) {
      const auto suffix = word(i).substr(word(i).size() - 2);
      if (suffix == "st" || suffix == "nd" || suffix == "rd" || suffix == "th") {
        t = t.substr(0, t.size() - 2);
      }
    }
    const auto v = small_int(t);
    return v && t.size() <= 2 && *v >= 1 && *v <= 31;
  }

  std::size_t calendar(std::size_t i) const {
    if (!kMonths.contains(raw(i))) return i;
    std::size_t end = i + 1;
    if (in_range(end) && spaced(i) && is_day(end)) {
      ++end;
      if (in_range(end + 1) && glued(end - 1) && raw(end) == "," && spaced(end) &&
          is_year(end + 1)) {
        end += 2;
      } else if (in_range(end) && spaced(end - 1) && is_year(end)) {
        ++end;
      }
      return end;
    }
    if (in_range(end) && spaced(i) && is_year(end)) return end + 1;
    return kAmbiguousMonths.contains(raw(i)) ? i : end;
  }

  std::size_t date(std::size_t i) const {
    if (auto e = calendar(i); e > i) return e;
    if (kWeekdays.contains(raw(i))) return i + 1;
    if (kDayWords.contains(word(i))) return i + 1;
    if (kDeictic.contains(word(i)) && in_range(i + 1) && spaced(i) &&
        (kDeicticUnits.contains(word(i + 1)) || kWeekdays.contains(raw(i + 1)))) {
      return i + 2;
    }
    if (kYearPrepositions.contains(word(i)) && in_range(i + 1) && spaced(i) && is_year(i + 1)) {
      return i;  // the year itself is matched when the scan reaches it
    }
    if (i > 0 && is_year(i) && doc_.adjacent(i - 1) && kYearPrepositions.contains(word(i - 1))) {
      return i + 1;
    }
    // <number> <unit> [ago|later|...]
    const std::size_t n = number_phrase(i);
    if (n > i && in_range(n) && spaced(n - 1) && kTimeUnits.contains(word(n))) {
      std::size_t end = n + 1;
      if (in_range(end) && spaced(n) && kDirections.contains(word(end))) ++end;
      return end;
    }
    return i;
  }

  std::size_t time(std::size_t i) const {
    if (kTimeWords.contains(word(i))) return i + 1;
    for (const auto& phrase : kTimePhrases) {
      std::size_t k = 0;
      while (k < phrase.size() && in_range(i + k) && word(i + k) == phrase[k] &&
             (k + 1 == phrase.size() || spaced(i + k))) {
        ++k;
      }
      if (k == phrase.size()) return i + k;
    }
    if ((word(i) == "this" || word(i) == "every" || word(i) == "tomorrow" ||
         word(i) == "yesterday") &&
        in_range(i + 1) && spaced(i) && kDayParts.contains(word(i + 1))) {
      return i + 2;
    }
    // h:mm [am|pm]
    if (auto h = small_int(raw(i)); h && *h <= 23 && in_range(i + 2) && glued(i) &&
                                    raw(i + 1) == ":" && glued(i + 1) && raw(i + 2).size() == 2 &&
                                    all_digits(raw(i + 2))) {
      std::size_t end = i + 3;
      if (in_range(end) && spaced(end - 1) && (word(end) == "am" || word(end) == "pm")) ++end;
      return end;
    }
    if (auto h = small_int(raw(i)); h && *h >= 1 && *h <= 12 && in_range(i + 1) && spaced(i) &&
                                    (word(i + 1) == "am" || word(i + 1) == "pm")) {
      return i + 2;
    }
    return i;
  }

  const Document& doc_;
  std::span<const Token> tokens_;
  std::vector<std::string> folded_;
};

bool lowercase_word(std::string_view s) { return normalize(s) == s; }

}  // namespace

std::string_view label_name(EntityLabel label) {
  return kLabelNames[static_cast<std::size_t>(label)];
}

std::optional<EntityLabel> parse_label(std::string_view name) {
  for (std::size_t i = 0; i < kLabelNames.size(); ++i) {
    if (kLabelNames[i] == name) return static_cast<EntityLabel>(i);
  }
  return std::nullopt;
}

void Gazetteer::add(EntityLabel label, std::string_view surface) {
  if (!gazetteer_label(label)) {
    throw InvalidArgumentError(std::string(label_name(label)) + " is pattern-only");
  }
  const std::string s(detail::trim(surface));
  if (s.empty()) throw InvalidArgumentError("empty gazetteer surface");
  const auto [it, inserted] = by_surface_.emplace(s, label);
  if (!inserted) {
    if (it->second == label) return;
    throw InvalidArgumentError("'" + s + "' already listed as " +
                               std::string(label_name(it->second)));
  }
  Entry e{{}, {}, label, s};
  std::size_t prev_end = 0;
  for (const auto& tok : tokenize(s)) {
    e.glued.push_back(!e.tokens.empty() && tok.span.begin == prev_end);
    e.tokens.push_back(tok.text);
    prev_end = tok.span.end;
  }
  by_first_[normalize(e.tokens.front())].push_back(entries_.size());
  entries_.push_back(std::move(e));
}

std::span<const std::size_t> Gazetteer::candidates(const std::string& folded_first) const {
  const auto it = by_first_.find(folded_first);
  if (it == by_first_.end()) return {};
  return it->second;
}

Gazetteer Gazetteer::load(std::istream& in, const std::string& source) {
  Gazetteer g;
  std::optional<EntityLabel> section;
  detail::for_each_data_line(in, [&](std::size_t line, std::string_view content) {
    if (content.front() == '[' && content.back() == ']') {
      const auto label = parse_label(content.substr(1, content.size() - 2));
      if (!label || !gazetteer_label(*label)) {
        throw DataFileError(source, line, "unknown gazetteer section " + std::string(content));
      }
      section = label;
      return;
    }
    if (!section) throw DataFileError(source, line, "surface form outside any section");
    try {
      g.add(*section, content);
    } catch (const InvalidArgumentError& e) {
      throw DataFileError(source, line, e.what());
    }
  });
  return g;
}

Gazetteer Gazetteer::load_file(const std::filesystem::path& path) {
  return detail::load_from_file(path, [](std::istream& in, const std::string& src) {
    return load(in, src);
  });
}

std::vector<EntitySpan> tag_entities(const Document& doc, const Gazetteer& gazetteer) {
  const auto tokens = doc.tokens();
  std::vector<bool> claimed(tokens.size(), false);
  std::vector<EntitySpan> out;

  auto emit = [&](std::size_t b, std::size_t e, EntityLabel label) {
    const Span span{tokens[b].span.begin, tokens[e - 1].span.end};
    out.push_back({span, std::string(doc.text(span)), label});
    std::fill(claimed.begin() + static_cast<std::ptrdiff_t>(b),
              claimed.begin() + static_cast<std::ptrdiff_t>(e), true);
  };

  // Pass 1: patterns.
  const PatternScanner patterns(doc);
  for (std::size_t i = 0; i < tokens.size();) {
    const auto [end, label] = patterns.match(i);
    if (end > i) {
      emit(i, end, label);
      i = end;
    } else {
      ++i;
    }
  }

  // Pass 2: gazetteer, longest match over unclaimed tokens.
  for (std::size_t i = 0; i < tokens.size();) {
    std::size_t best_end = i;
    std::optional<EntityLabel> best_label;
    if (!claimed[i]) {
      for (std::size_t idx : gazetteer.candidates(normalize(tokens[i].text))) {
        const auto& entry = gazetteer.entry(idx);
        const std::size_t n = entry.tokens.size();
        if (i + n > tokens.size() || i + n <= best_end) continue;
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k) {
          const auto& tok = tokens[i + k];
          if (claimed[i + k]) {
            ok = false;
          } else if (k == 0 && lowercase_word(entry.tokens[0])) {
            ok = normalize(tok.text) == entry.tokens[0];
          } else {
            ok = tok.text == entry.tokens[k];
          }
          if (ok && k > 0) {
            const bool is_glued = tokens[i + k - 1].span.end == tok.span.begin;
            ok = entry.glued[k] ? is_glued : doc.adjacent(i + k - 1);
          }
        }
        if (ok) {
          best_end = i + n;
          best_label = entry.label;
        }
      }
    }
    if (best_label) {
      emit(i, best_end, *best_label);
      i = best_end;
    } else {
      ++i;
    }
  }

  std::sort(out.begin(), out.end(),
            [](const EntitySpan& a, const EntitySpan& b) { return a.span.begin < b.span.begin; });
  return out;
}

std::string render_annotations(const Document& doc, std::span<const EntitySpan> spans) {
  std::vector<EntitySpan> sorted(spans.begin(), spans.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const EntitySpan& a, const EntitySpan& b) {
    return a.span.begin < b.span.begin;
  });
  const std::string& raw = doc.raw();
  std::string out;
  out.reserve(raw.size() + sorted.size() * 16);
  std::size_t cursor = 0;
  for (const auto& s : sorted) {
    if (s.span.begin >= s.span.end || s.span.end > raw.size()) {
      throw InvalidArgumentError("entity span out of range");
    }
    if (s.span.begin < cursor) throw InvalidArgumentError("entity spans overlap");
    out.append(raw, cursor, s.span.begin - cursor);
    out += "**";
    out.append(raw, s.span.begin, s.span.size());
    out += ' ';
    out += label_name(s.label);
    out += "**";
    cursor = s.span.end;
  }
  out.append(raw, cursor, std::string::npos);
  return out;
}

}  // namespace powerwords
