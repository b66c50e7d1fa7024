#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace powerwords {

// Half-open byte range [begin, end) into a UTF-8 buffer.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool contains(const Span& other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool overlaps(const Span& other) const {
    return begin < other.end && other.begin < end;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

enum class TokenKind {
  kWord,    // letters/digits with at least one letter
  kNumber,  // digits only (internal hyphens/apostrophes allowed)
  kSymbol,  // any other single non-space code point
};

struct Token {
  std::string text;
  Span span;
  TokenKind kind = TokenKind::kSymbol;

  bool is_word() const { return kind == TokenKind::kWord; }
  // Words and numerals both count as words for statistics and matching.
  bool is_lexical() const { return kind != TokenKind::kSymbol; }
  friend bool operator==(const Token&, const Token&) = default;
};

// Lowercase, NFC, straight quotes, single spaces, trimmed. Punctuation is
// kept.
std::string normalize(std::string_view text);

// Sentence spans covering every non-whitespace byte of `text`, in order.
std::vector<Span> split_sentences(std::string_view text);

// Word runs keep internal apostrophes and hyphens; every other non-space
// code point is its own symbol token.
std::vector<Token> tokenize(std::string_view text);

// Throws InputError when `text` is not valid UTF-8.
void validate_utf8(std::string_view text);

// Immutable tokenized text. Every token lies inside exactly one sentence.
class Document {
 public:
  Document() = default;
  Document(std::string id, std::string raw);

  const std::string& id() const { return id_; }
  const std::string& raw() const { return raw_; }
  std::span<const Span> sentences() const { return sentences_; }
  std::span<const Token> tokens() const { return tokens_; }

  std::size_t sentence_of(std::size_t token_index) const {
    return token_sentence_[token_index];
  }
  // True when only whitespace separates tokens i and i + 1.
  bool adjacent(std::size_t i) const;

  std::string_view text(const Span& span) const {
    return std::string_view(raw_).substr(span.begin, span.size());
  }

 private:
  std::string id_;
  std::string raw_;
  std::vector<Span> sentences_;
  std::vector<Token> tokens_;
  std::vector<std::size_t> token_sentence_;
};

// Vowel-group syllable heuristic with an exceptions table consulted first.
class SyllableCounter {
 public:
  SyllableCounter() = default;
  explicit SyllableCounter(std::unordered_map<std::string, int> exceptions);

  // `word<TAB>count` lines, `#` comments.
  static SyllableCounter load(std::istream& in, const std::string& source = "");
  static SyllableCounter load_file(const std::filesystem::path& path);

  // Throws InvalidArgumentError when `word` has no letter.
  int count(std::string_view word) const;

  std::size_t exception_count() const { return exceptions_.size(); }

 private:
  std::unordered_map<std::string, int> exceptions_;
};

// Heuristic only, no exceptions table.
int count_syllables(std::string_view word);

// Set of lowercase words, one per line in files, `#` comments allowed.
class WordSet {
 public:
  WordSet() = default;
  explicit WordSet(std::unordered_set<std::string> words) : words_(std::move(words)) {}

  static WordSet load(std::istream& in, const std::string& source = "");
  static WordSet load_file(const std::filesystem::path& path);

  bool contains(std::string_view word) const {
    return words_.find(std::string(word)) != words_.end();
  }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

struct TextStats {
  std::size_t word_count = 0;
  std::size_t sentence_count = 0;
  std::size_t letter_count = 0;
  std::size_t char_count = 0;
  std::size_t syllable_count = 0;
  std::size_t polysyllable_count = 0;
  std::size_t complex_word_count = 0;
  std::size_t difficult_word_count = 0;

  friend bool operator==(const TextStats&, const TextStats&) = default;
};

TextStats compute_stats(const Document& doc, const WordSet& familiar_words,
                        const SyllableCounter& syllables);

// Per-word predicates used by compute_stats, exposed for testing.
bool is_complex_word(const Document& doc, std::size_t token_index,
                     const SyllableCounter& syllables);
bool is_difficult_word(std::string_view word, const WordSet& familiar_words);

}  // namespace powerwords
