#include "powerwords/text.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "data_io.hpp"
#include "powerwords/error.hpp"
#include "unicode.hpp"

namespace powerwords {
namespace {

using detail::is_apostrophe;
using detail::is_digit;
using detail::is_hyphen;
using detail::is_letter;
using detail::is_mark;
using detail::is_space;
using detail::next_code_point;

constexpr std::array<std::string_view, 14> kAbbreviations = {
    "mr", "mrs", "dr", "st", "vs", "etc", "jr", "sr", "prof", "inc", "ltd", "co", "e.g", "i.e"};

bool is_terminator(UChar32 c) { return c == U'.' || c == U'!' || c == U'?'; }

bool is_closer(UChar32 c) {
  return c == U'"' || c == U'\'' || c == U')' || c == U']' || c == 0x201D ||
         c == 0x2019 || c == 0x00BB;
}

bool is_opener(UChar32 c) {
  return c == U'"' || c == U'\'' || c == U'(' || c == U'[' || c == 0x201C ||
         c == 0x2018 || c == 0x00AB;
}

bool is_word_char(UChar32 c) { return is_letter(c) || is_digit(c) || is_mark(c); }

// Letters and periods immediately before the terminator at `dot`, lowercased.
bool preceded_by_abbreviation(std::string_view text, std::size_t dot) {
  std::size_t b = dot;
  while (b > 0) {
    const unsigned char ch = static_cast<unsigned char>(text[b - 1]);
    if (ch == '.' || (ch < 0x80 && std::isalpha(ch))) {
      --b;
    } else {
      break;
    }
  }
  if (b == dot) return false;
  std::string word(text.substr(b, dot - b));
  for (auto& ch : word) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), word) !=
         kAbbreviations.end();
}

}  // namespace

void validate_utf8(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t at = pos;
    if (next_code_point(text, pos) < 0) {
      throw InputError("invalid UTF-8 at byte " + std::to_string(at));
    }
  }
}

std::string normalize(std::string_view text) {
  const std::string lowered = detail::to_nfc(detail::to_lower(detail::to_nfc(text)));
  std::string out;
  out.reserve(lowered.size());
  bool pending_space = false;
  std::size_t pos = 0;
  while (pos < lowered.size()) {
    const UChar32 c = next_code_point(lowered, pos);
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    switch (c) {
      case 0x2018: case 0x2019: case 0x201A: case 0x201B: case 0x2032:
        out.push_back('\'');
        break;
      case 0x201C: case 0x201D: case 0x201E: case 0x201F: case 0x2033:
        out.push_back('"');
        break;
      default:
        detail::append_utf8(out, c);
    }
  }
  return out;
}

std::vector<Span> split_sentences(std::string_view text) {
  std::vector<Span> spans;
  std::size_t pos = 0;

  auto skip_space = [&](std::size_t p) {
    while (p < text.size()) {
      std::size_t q = p;
      if (!is_space(next_code_point(text, q))) break;
      p = q;
    }
    return p;
  };

  std::size_t start = skip_space(0);
  std::size_t last_content_end = start;
  pos = start;
  while (pos < text.size()) {
    const std::size_t at = pos;
    const UChar32 c = next_code_point(text, pos);
    if (is_space(c)) continue;
    last_content_end = pos;
    if (!is_terminator(c)) continue;

    const std::size_t first_terminator = at;
    std::size_t run = 1;
    while (pos < text.size() && is_terminator(detail::peek_code_point(text, pos))) {
      next_code_point(text, pos);
      ++run;
    }
    while (pos < text.size() && is_closer(detail::peek_code_point(text, pos))) {
      next_code_point(text, pos);
    }
    last_content_end = pos;
    if (pos >= text.size() || !is_space(detail::peek_code_point(text, pos))) continue;

    const std::size_t next = skip_space(pos);
    if (next >= text.size()) break;
    std::size_t probe = next;
    UChar32 lead = next_code_point(text, probe);
    while (is_opener(lead) && probe < text.size()) lead = next_code_point(text, probe);
    if (!(detail::is_upper(lead) || is_digit(lead))) continue;
    if (run == 1 && text[first_terminator] == '.' &&
        preceded_by_abbreviation(text, first_terminator)) {
      continue;
    }
    spans.push_back({start, pos});
    start = next;
    pos = next;
    last_content_end = next;
  }
  if (start < text.size() && last_content_end > start) {
    spans.push_back({start, last_content_end});
  }
  return spans;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t begin = pos;
    const UChar32 c = next_code_point(text, pos);
    if (is_space(c)) continue;
    if (!is_word_char(c)) {
      tokens.push_back({std::string(text.substr(begin, pos - begin)), {begin, pos},
                        TokenKind::kSymbol});
      continue;
    }
    bool has_letter = is_letter(c);
    bool prev_word_char = true;
    std::size_t end = pos;
    while (pos < text.size()) {
      std::size_t q = pos;
      const UChar32 d = next_code_point(text, q);
      if (is_word_char(d)) {
        has_letter = has_letter || is_letter(d);
        pos = q;
        end = q;
        prev_word_char = true;
        continue;
      }
      if ((is_apostrophe(d) || is_hyphen(d)) && prev_word_char && q < text.size() &&
          is_word_char(detail::peek_code_point(text, q))) {
        pos = q;
        prev_word_char = false;
        continue;
      }
      break;
    }
    tokens.push_back({std::string(text.substr(begin, end - begin)), {begin, end},
                      has_letter ? TokenKind::kWord : TokenKind::kNumber});
    pos = end;
  }
  return tokens;
}

Document::Document(std::string id, std::string raw) : id_(std::move(id)), raw_(std::move(raw)) {
  validate_utf8(raw_);
  sentences_ = split_sentences(raw_);
  tokens_ = tokenize(raw_);
  token_sentence_.reserve(tokens_.size());
  std::size_t s = 0;
  for (const auto& tok : tokens_) {
    while (s < sentences_.size() && sentences_[s].end <= tok.span.begin) ++s;
    // Sentence spans cover all non-whitespace text, so this always holds.
    if (s >= sentences_.size() || !sentences_[s].contains(tok.span)) {
      throw Error("token outside sentence spans at byte " + std::to_string(tok.span.begin));
    }
    token_sentence_.push_back(s);
  }
}

bool Document::adjacent(std::size_t i) const {
  if (i + 1 >= tokens_.size()) return false;
  const auto gap = std::string_view(raw_).substr(
      tokens_[i].span.end, tokens_[i + 1].span.begin - tokens_[i].span.end);
  std::size_t pos = 0;
  while (pos < gap.size()) {
    if (!is_space(next_code_point(gap, pos))) return false;
  }
  return true;
}

// --- syllables -------------------------------------------------------------

namespace {

bool is_vowel(UChar32 c) {
  switch (c) {
    case U'a': case U'e': case U'i': case U'o': case U'u': case U'y':
    case 0xE0: case 0xE1: case 0xE2: case 0xE3: case 0xE4: case 0xE5: case 0xE6:
    case 0xE8: case 0xE9: case 0xEA: case 0xEB:
    case 0xEC: case 0xED: case 0xEE: case 0xEF:
    case 0xF2: case 0xF3: case 0xF4: case 0xF5: case 0xF6: case 0xF8:
    case 0xF9: case 0xFA: case 0xFB: case 0xFC: case 0xFD: case 0xFF:
    case 0x153:
      return true;
    default:
      return false;
  }
}

// Heuristic for one hyphen-free, apostrophe-free lowercase segment.
int segment_syllables(const std::u32string& seg) {
  int groups = 0;
  bool prev_vowel = false;
  for (char32_t c : seg) {
    const bool v = is_vowel(static_cast<UChar32>(c));
    if (v && !prev_vowel) ++groups;
    prev_vowel = v;
  }
  const std::size_t n = seg.size();
  auto consonant = [&](std::size_t i) {
    return is_letter(static_cast<UChar32>(seg[i])) && !is_vowel(static_cast<UChar32>(seg[i]));
  };
  if (n >= 2 && seg[n - 1] == U'e' && consonant(n - 2)) {
    const bool consonant_le = n >= 3 && seg[n - 2] == U'l' && consonant(n - 3);
    if (!consonant_le) --groups;
  }
  return std::max(groups, 1);
}

std::string canonical_key(std::string_view word) {
  std::string lowered = detail::to_lower(word);
  std::string out;
  std::size_t pos = 0;
  while (pos < lowered.size()) {
    const UChar32 c = next_code_point(lowered, pos);
    detail::append_utf8(out, is_apostrophe(c) ? U'\'' : c);
  }
  return out;
}

int heuristic_syllables(std::string_view word) {
  const std::string lowered = detail::to_lower(word);
  int total = 0;
  bool any_letter = false;
  std::u32string seg;
  bool seg_letter = false;
  bool seg_digit = false;
  auto flush = [&] {
    if (seg_letter) {
      total += segment_syllables(seg);
    } else if (seg_digit) {
      total += 1;
    }
    seg.clear();
    seg_letter = seg_digit = false;
  };
  std::size_t pos = 0;
  while (pos < lowered.size()) {
    const UChar32 c = next_code_point(lowered, pos);
    if (c < 0) break;
    if (is_hyphen(c)) {
      flush();
      continue;
    }
    if (is_apostrophe(c)) continue;
    if (is_letter(c)) {
      seg_letter = any_letter = true;
      seg.push_back(static_cast<char32_t>(c));
    } else if (is_digit(c)) {
      seg_digit = true;
    }
  }
  flush();
  if (!any_letter) throw InvalidArgumentError("not a word: '" + std::string(word) + "'");
  return std::max(total, 1);
}

}  // namespace

SyllableCounter::SyllableCounter(std::unordered_map<std::string, int> exceptions) {
  for (auto& [word, count] : exceptions) exceptions_.emplace(canonical_key(word), count);
}

SyllableCounter SyllableCounter::load(std::istream& in, const std::string& source) {
  std::unordered_map<std::string, int> table;
  detail::for_each_data_line(in, [&](std::size_t line, std::string_view content) {
    const auto tab = content.find('\t');
    if (tab == std::string_view::npos) {
      throw DataFileError(source, line, "expected word<TAB>count");
    }
    const auto word = detail::trim(content.substr(0, tab));
    const auto num = detail::trim(content.substr(tab + 1));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (word.empty() || ec != std::errc() || ptr != num.data() + num.size() || value < 1) {
      throw DataFileError(source, line, "invalid syllable exception");
    }
    table[std::string(word)] = value;
  });
  return SyllableCounter(std::move(table));
}

SyllableCounter SyllableCounter::load_file(const std::filesystem::path& path) {
  return detail::load_from_file(path, [](std::istream& in, const std::string& src) {
    return load(in, src);
  });
}

int SyllableCounter::count(std::string_view word) const {
  if (!exceptions_.empty()) {
    const auto it = exceptions_.find(canonical_key(word));
    if (it != exceptions_.end()) return it->second;
  }
  return heuristic_syllables(word);
}

int count_syllables(std::string_view word) { return heuristic_syllables(word); }

// --- word lists ------------------------------------------------------------

WordSet WordSet::load(std::istream& in, const std::string& source) {
  std::unordered_set<std::string> words;
  detail::for_each_data_line(in, [&](std::size_t line, std::string_view content) {
    if (content.find_first_of(" \t") != std::string_view::npos) {
      throw DataFileError(source, line, "expected one word per line");
    }
    words.insert(normalize(content));
  });
  return WordSet(std::move(words));
}

WordSet WordSet::load_file(const std::filesystem::path& path) {
  return detail::load_from_file(path, [](std::istream& in, const std::string& src) {
    return load(in, src);
  });
}

// --- statistics ------------------------------------------------------------

namespace {

bool first_lexical_in_sentence(const Document& doc, std::size_t index) {
  const auto tokens = doc.tokens();
  const std::size_t sentence = doc.sentence_of(index);
  for (std::size_t i = index; i-- > 0;) {
    if (doc.sentence_of(i) != sentence) break;
    if (tokens[i].is_lexical()) return false;
  }
  return true;
}

bool contains_hyphen(std::string_view word) {
  std::size_t pos = 0;
  while (pos < word.size()) {
    if (is_hyphen(next_code_point(word, pos))) return true;
  }
  return false;
}

}  // namespace

bool is_complex_word(const Document& doc, std::size_t token_index,
                     const SyllableCounter& syllables) {
  const Token& tok = doc.tokens()[token_index];
  if (!tok.is_word()) return false;
  if (syllables.count(tok.text) < 3) return false;
  if (contains_hyphen(tok.text)) return false;
  std::size_t pos = 0;
  const UChar32 lead = next_code_point(tok.text, pos);
  if (detail::is_upper(lead) && !first_lexical_in_sentence(doc, token_index)) return false;

  const std::string lower = normalize(tok.text);
  for (std::string_view suffix : {"es", "ed", "ing"}) {
    if (lower.size() > suffix.size() && lower.ends_with(suffix)) {
      const std::string_view stem(lower.data(), lower.size() - suffix.size());
      const bool stem_has_letter =
          std::any_of(stem.begin(), stem.end(), [](char ch) { return std::isalpha(static_cast<unsigned char>(ch)); });
      if (stem_has_letter && syllables.count(stem) < 3) return false;
    }
  }
  return true;
}

bool is_difficult_word(std::string_view word, const WordSet& familiar_words) {
  const std::string lower = normalize(word);
  if (familiar_words.contains(lower)) return false;
  if (lower.size() > 1 && lower.back() == 's' &&
      familiar_words.contains(std::string_view(lower).substr(0, lower.size() - 1))) {
    return false;
  }
  return true;
}

TextStats compute_stats(const Document& doc, const WordSet& familiar_words,
                        const SyllableCounter& syllables) {
  TextStats stats;
  const auto tokens = doc.tokens();
  std::vector<bool> sentence_has_word(doc.sentences().size(), false);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    if (!tok.is_lexical()) continue;
    ++stats.word_count;
    sentence_has_word[doc.sentence_of(i)] = true;

    std::size_t pos = 0;
    while (pos < tok.text.size()) {
      const UChar32 c = next_code_point(tok.text, pos);
      if (is_letter(c)) {
        ++stats.letter_count;
        ++stats.char_count;
      } else if (is_digit(c)) {
        ++stats.char_count;
      }
    }

    if (tok.kind == TokenKind::kNumber) {
      stats.syllable_count += 1;
      continue;
    }
    const int syl = syllables.count(tok.text);
    stats.syllable_count += static_cast<std::size_t>(syl);
    if (syl >= 3) ++stats.polysyllable_count;
    if (is_complex_word(doc, i, syllables)) ++stats.complex_word_count;
    if (is_difficult_word(tok.text, familiar_words)) ++stats.difficult_word_count;
  }
  stats.sentence_count = static_cast<std::size_t>(
      std::count(sentence_has_word.begin(), sentence_has_word.end(), true));
  return stats;
}

}  // namespace powerwords
