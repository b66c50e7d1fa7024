#include "powerwords/power_lexicon.hpp"

#include <numeric>
#include <unordered_map>

#include "data_io.hpp"
#include "powerwords/error.hpp"

namespace powerwords {
namespace {

constexpr std::array<std::string_view, kPowerCategoryCount> kNames = {
    "Greed", "Encouragement", "Safety", "Anger", "Lust", "Fear", "Forbidden"};

// `# key: value` metadata comment, or nullopt.
std::optional<std::string> metadata(std::string_view line, std::string_view key) {
  auto body = detail::trim(line.substr(1));
  if (!body.starts_with(key)) return std::nullopt;
  body.remove_prefix(key.size());
  if (body.empty() || body.front() != ':') return std::nullopt;
  return std::string(detail::trim(body.substr(1)));
}

}  // namespace

std::string_view category_name(PowerCategory c) { return kNames[static_cast<std::size_t>(c)]; }

std::optional<PowerCategory> parse_category(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<PowerCategory>(i);
  }
  return std::nullopt;
}

std::vector<std::string> term_words(std::string_view normalized_term) {
  std::vector<std::string> words;
  for (const auto& tok : tokenize(normalized_term)) {
    if (!tok.is_lexical()) {
      throw InvalidArgumentError("term contains non-word character '" + tok.text + "'");
    }
    words.push_back(tok.text);
  }
  if (words.empty()) throw InvalidArgumentError("empty term");
  // Phrase words must be separated by whitespace, never glued by symbols.
  std::size_t spaces = 0;
  for (char ch : normalized_term) spaces += ch == ' ';
  if (spaces + 1 != words.size()) {
    throw InvalidArgumentError("term does not split into whole words");
  }
  return words;
}

PowerLexicon::PowerLexicon(Entries entries, std::string version, std::string source)
    : entries_(std::move(entries)), version_(std::move(version)), source_(std::move(source)) {
  if (entries_.empty()) throw DataFileError(source_, 0, "power lexicon is empty");
}

PowerLexicon PowerLexicon::load(std::istream& in, const std::string& source_name) {
  Entries entries;
  std::unordered_map<std::string, std::size_t> first_line;
  std::string version = "unversioned";
  std::string source = source_name;
  bool seen_content = false;

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto content = detail::trim(raw);
    if (content.empty()) continue;
    if (content.front() == '#') {
      if (auto v = metadata(content, "version")) version = *v;
      if (auto s = metadata(content, "source")) source = *s;
      continue;
    }
    const bool first = !seen_content;
    seen_content = true;
    if (first && content == "term,category") continue;

    const auto comma = content.rfind(',');
    if (comma == std::string_view::npos) {
      throw DataFileError(source_name, line, "expected term,category");
    }
    if (content.substr(0, comma).find(',') != std::string_view::npos) {
      throw DataFileError(source_name, line, "term must not contain a comma");
    }
    const std::string term = normalize(content.substr(0, comma));
    const auto cat_name = detail::trim(content.substr(comma + 1));
    const auto category = parse_category(cat_name);
    if (!category) {
      throw DataFileError(source_name, line,
                          "unknown category '" + std::string(cat_name) + "'");
    }
    if (term.empty()) throw DataFileError(source_name, line, "empty term");
    std::vector<std::string> words;
    try {
      words = term_words(term);
    } catch (const InvalidArgumentError& e) {
      throw DataFileError(source_name, line, e.what());
    }
    if (words.size() > kMaxPhraseWords) {
      throw DataFileError(source_name, line, "term longer than 6 words");
    }
    const auto [it, inserted] = entries.emplace(term, *category);
    if (!inserted && it->second != *category) {
      throw DataFileError(source_name, line,
                          "term '" + term + "' already listed as " +
                              std::string(category_name(it->second)) + " on line " +
                              std::to_string(first_line[term]));
    }
    if (inserted) first_line[term] = line;
  }
  if (entries.empty()) throw DataFileError(source_name, 0, "power lexicon is empty");
  return PowerLexicon(std::move(entries), std::move(version), std::move(source));
}

PowerLexicon PowerLexicon::load_file(const std::filesystem::path& path) {
  return detail::load_from_file(path, [](std::istream& in, const std::string& src) {
    return load(in, src);
  });
}

// --- matcher ---------------------------------------------------------------

struct Matcher::Node {
  std::unordered_map<std::string, std::unique_ptr<Node>> children;
  std::optional<PowerCategory> category;
  std::string term;
};

Matcher::Matcher(const PowerLexicon& lexicon) : root_(std::make_unique<Node>()) {
  for (const auto& [term, category] : lexicon.entries()) {
    Node* node = root_.get();
    for (auto& word : term_words(term)) {
      auto& child = node->children[word];
      if (!child) child = std::make_unique<Node>();
      node = child.get();
    }
    node->category = category;
    node->term = term;
    ++terms_;
  }
}

Matcher::~Matcher() = default;
Matcher::Matcher(Matcher&&) noexcept = default;
Matcher& Matcher::operator=(Matcher&&) noexcept = default;

std::size_t Matcher::term_count() const { return terms_; }

PowerWordHits Matcher::scan(const Document& doc) const {
  PowerWordHits hits;
  const auto tokens = doc.tokens();
  std::vector<std::string> folded(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].is_lexical()) folded[i] = normalize(tokens[i].text);
  }

  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!tokens[i].is_lexical()) {
      ++i;
      continue;
    }
    const Node* node = root_.get();
    const Node* best = nullptr;
    std::size_t best_end = i;
    std::size_t j = i;
    for (std::size_t depth = 0; depth < kMaxPhraseWords; ++depth) {
      const auto it = node->children.find(folded[j]);
      if (it == node->children.end()) break;
      node = it->second.get();
      if (node->category) {
        best = node;
        best_end = j;
      }
      if (!doc.adjacent(j) || !tokens[j + 1].is_lexical()) break;
      ++j;
    }
    if (best == nullptr) {
      ++i;
      continue;
    }
    hits.matches.push_back(
        {best->term, *best->category, {tokens[i].span.begin, tokens[best_end].span.end}});
    ++hits.counts[static_cast<std::size_t>(*best->category)];
    ++hits.total;
    i = best_end + 1;
  }
  return hits;
}

Matcher build_matcher(const PowerLexicon& lexicon) { return Matcher(lexicon); }

PowerWordHits scan(const Document& doc, const Matcher& matcher) { return matcher.scan(doc); }

CategoryDistribution distribution(const std::array<std::size_t, kPowerCategoryCount>& counts) {
  CategoryDistribution d;
  const std::size_t total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  if (total == 0) return d;
  d.empty = false;
  for (std::size_t c = 0; c < kPowerCategoryCount; ++c) {
    d.percentages[c] = 100.0 * static_cast<double>(counts[c]) / static_cast<double>(total);
  }
  return d;
}

CategoryDistribution distribution(const PowerWordHits& hits) { return distribution(hits.counts); }

}  // namespace powerwords
