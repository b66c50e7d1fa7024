#include "powerwords/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "data_io.hpp"
#include "powerwords/error.hpp"
#include "powerwords/report.hpp"
#include "unicode.hpp"

namespace powerwords {
namespace {

constexpr std::array<std::string_view, 3> kGenreNames = {"fiction", "speech", "marketing"};
constexpr std::array<std::string_view, 3> kKindNames = {"gutenberg", "html", "plain"};

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

const std::unordered_set<std::string_view> kBlockTags = {
    "address", "article", "aside", "blockquote", "body",   "br",      "dd",     "div",
    "dl",      "dt",      "figcaption", "figure", "footer", "form",   "h1",     "h2",
    "h3",      "h4",      "h5",      "h6",     "head",   "header",  "hr",     "html",
    "li",      "main",    "nav",     "ol",     "p",      "pre",     "section", "table",
    "tbody",   "td",      "tfoot",   "th",     "thead",  "title",   "tr",     "ul"};

// Decodes the entity starting at `amp` ('&'). Returns bytes consumed, 0 when
// it is not a recognised entity.
std::size_t decode_entity(std::string_view s, std::size_t amp, std::string& out) {
  const auto semi = s.find(';', amp + 1);
  if (semi == std::string_view::npos || semi - amp > 12) return 0;
  const auto body = s.substr(amp + 1, semi - amp - 1);
  if (body.empty()) return 0;
  UChar32 cp = -1;
  if (body.front() == '#') {
    std::string_view digits = body.substr(1);
    int base = 10;
    if (!digits.empty() && (digits.front() == 'x' || digits.front() == 'X')) {
      base = 16;
      digits.remove_prefix(1);
    }
    unsigned long value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, base);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) return 0;
    if (value == 0 || value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF)) return 0;
    cp = static_cast<UChar32>(value);
  } else if (body == "amp") {
    cp = U'&';
  } else if (body == "lt") {
    cp = U'<';
  } else if (body == "gt") {
    cp = U'>';
  } else if (body == "quot") {
    cp = U'"';
  } else if (body == "apos") {
    cp = U'\'';
  } else if (body == "nbsp") {
    cp = 0xA0;
  } else {
    return 0;
  }
  detail::append_utf8(out, cp);
  return semi - amp + 1;
}

// Collapses horizontal whitespace, trims lines, keeps at most one blank line
// between paragraphs, trims the whole text.
std::string normalize_whitespace(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  bool pending_space = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const UChar32 c = detail::next_code_point(text, pos);
    if (c == U'\n') {
      lines.push_back(std::move(current));
      current.clear();
      pending_space = false;
      continue;
    }
    if (detail::is_space(c) || c == 0xA0) {
      pending_space = !current.empty();
      continue;
    }
    if (pending_space) current.push_back(' ');
    pending_space = false;
    detail::append_utf8(current, c);
  }
  lines.push_back(std::move(current));

  std::string out;
  bool blank_pending = false;
  for (auto& line : lines) {
    if (line.empty()) {
      blank_pending = !out.empty();
      continue;
    }
    if (!out.empty()) out += blank_pending ? "\n\n" : "\n";
    blank_pending = false;
    out += line;
  }
  return out;
}

}  // namespace

std::string_view genre_name(Genre g) { return kGenreNames[static_cast<std::size_t>(g)]; }

std::optional<Genre> parse_genre(std::string_view name) {
  for (std::size_t i = 0; i < kGenreNames.size(); ++i) {
    if (kGenreNames[i] == name) return static_cast<Genre>(i);
  }
  return std::nullopt;
}

std::string_view source_kind_name(SourceKind k) { return kKindNames[static_cast<std::size_t>(k)]; }

std::optional<SourceKind> parse_source_kind(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<SourceKind>(i);
  }
  return std::nullopt;
}

CorpusManifest CorpusManifest::load(std::istream& in, const std::filesystem::path& base_dir,
                                    const std::string& source) {
  CorpusManifest manifest;
  std::unordered_set<std::string> ids;
  bool first = true;
  detail::for_each_data_line(in, [&](std::size_t line, std::string_view content) {
    const bool header = first && content == "path,id,genre,kind";
    first = false;
    if (header) return;
    const auto fields = detail::split(content, ',');
    if (fields.size() != 4) throw DataFileError(source, line, "expected path,id,genre,kind");
    const auto path = detail::trim(fields[0]);
    const auto id = detail::trim(fields[1]);
    if (path.empty()) throw DataFileError(source, line, "empty path");
    if (id.empty()) throw DataFileError(source, line, "empty id");
    const auto genre = parse_genre(detail::trim(fields[2]));
    if (!genre) throw DataFileError(source, line, "unknown genre '" + std::string(fields[2]) + "'");
    const auto kind = parse_source_kind(detail::trim(fields[3]));
    if (!kind) throw DataFileError(source, line, "unknown kind '" + std::string(fields[3]) + "'");
    if (!ids.insert(std::string(id)).second) {
      throw DataFileError(source, line, "duplicate id '" + std::string(id) + "'");
    }
    std::filesystem::path p(path);
    if (p.is_relative()) p = base_dir / p;
    manifest.entries.push_back({p, std::string(id), *genre, *kind});
  });
  return manifest;
}

CorpusManifest CorpusManifest::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataFileError(path.string(), 0, "cannot open manifest");
  return load(in, path.parent_path(), path.string());
}

StrippedText strip_gutenberg_boilerplate(std::string_view text) {
  constexpr std::string_view kStart = "*** START OF";
  constexpr std::string_view kEnd = "*** END OF";

  std::size_t start_line_end = std::string_view::npos;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    if (start_line_end == std::string_view::npos) {
      if (line.find(kStart) != std::string_view::npos) {
        if (nl == std::string_view::npos) break;
        start_line_end = nl + 1;
      }
    } else if (line.find(kEnd) != std::string_view::npos) {
      auto body = text.substr(start_line_end, pos - start_line_end);
      return {std::string(detail::trim(body)), false};
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (start_line_end != std::string_view::npos || text.find(kStart) != std::string_view::npos) {
    throw InputError("Gutenberg START marker without a matching END marker");
  }
  return {std::string(text), true};
}

std::string strip_html(std::string_view html) {
  std::string out;
  out.reserve(html.size());
  std::size_t i = 0;
  while (i < html.size()) {
    const char c = html[i];
    if (c == '&') {
      if (const auto used = decode_entity(html, i, out)) {
        i += used;
      } else {
        out.push_back('&');
        ++i;
      }
      continue;
    }
    if (c != '<') {
      out.push_back(c);
      ++i;
      continue;
    }
    if (html.substr(i, 4) == "<!--") {
      const auto close = html.find("-->", i + 4);
      i = close == std::string_view::npos ? html.size() : close + 3;
      continue;
    }
    std::size_t j = i + 1;
    const bool closing = j < html.size() && html[j] == '/';
    if (closing) ++j;
    const bool declaration = j < html.size() && (html[j] == '!' || html[j] == '?');
    if (!declaration && (j >= html.size() || !std::isalpha(static_cast<unsigned char>(html[j])))) {
      out.push_back('<');
      ++i;
      continue;
    }
    std::size_t name_end = j;
    while (name_end < html.size() && (std::isalnum(static_cast<unsigned char>(html[name_end])))) {
      ++name_end;
    }
    const std::string name = ascii_lower(html.substr(j, name_end - j));
    // Find the closing '>' outside quoted attribute values.
    std::size_t k = name_end;
    char quote = 0;
    while (k < html.size()) {
      const char ch = html[k];
      if (quote) {
        if (ch == quote) quote = 0;
      } else if (ch == '"' || ch == '\'') {
        quote = ch;
      } else if (ch == '>') {
        break;
      }
      ++k;
    }
    i = k < html.size() ? k + 1 : html.size();
    if (!closing && (name == "script" || name == "style")) {
      const std::string lowered = ascii_lower(html.substr(i));
      const auto close = lowered.find("</" + name);
      if (close == std::string::npos) {
        i = html.size();
      } else {
        const auto gt = html.find('>', i + close);
        i = gt == std::string_view::npos ? html.size() : gt + 1;
      }
      continue;
    }
    if (kBlockTags.contains(name)) out.push_back('\n');
  }
  return normalize_whitespace(out);
}

CorpusDocument load_entry(const ManifestEntry& entry) {
  std::ifstream in(entry.path, std::ios::binary);
  if (!in) {
    throw InputError("corpus entry '" + entry.id + "': cannot read " + entry.path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string raw = buf.str();
  try {
    validate_utf8(raw);
  } catch (const InputError& e) {
    throw InputError("corpus entry '" + entry.id + "': " + e.what());
  }

  std::vector<std::string> warnings;
  std::string cleaned;
  switch (entry.kind) {
    case SourceKind::kGutenberg: {
      StrippedText stripped;
      try {
        stripped = strip_gutenberg_boilerplate(raw);
      } catch (const InputError& e) {
        throw InputError("corpus entry '" + entry.id + "': " + e.what());
      }
      if (stripped.markers_missing) {
        warnings.emplace_back("gutenberg: START/END markers not found; text used unchanged");
      }
      cleaned = std::move(stripped.text);
      break;
    }
    case SourceKind::kHtml:
      cleaned = strip_html(raw);
      break;
    case SourceKind::kPlain:
      cleaned = std::move(raw);
      break;
  }
  if (detail::trim(cleaned).empty()) {
    throw InputError("corpus entry '" + entry.id + "': no text after cleaning");
  }
  return {Document(entry.id, std::move(cleaned)), entry.genre, std::move(warnings)};
}

std::vector<CorpusDocument> load_corpus(const CorpusManifest& manifest) {
  std::vector<CorpusDocument> docs;
  docs.reserve(manifest.entries.size());
  for (const auto& entry : manifest.entries) docs.push_back(load_entry(entry));
  return docs;
}

namespace {

struct Accumulator {
  double sum = 0.0;
  std::size_t count = 0;
  void add(double v) {
    sum += v;
    ++count;
  }
  MeanValue mean() const {
    return {count ? sum / static_cast<double>(count) : 0.0, count};
  }
};

}  // namespace

std::vector<GenreAggregate> aggregate(std::span<const std::pair<AnalysisReport, Genre>> reports) {
  if (reports.empty()) throw InvalidArgumentError("aggregate needs at least one report");
  std::vector<GenreAggregate> out;
  for (std::size_t g = 0; g < kGenreNames.size(); ++g) {
    const auto genre = static_cast<Genre>(g);
    Accumulator fre, fk, smog, fog, cl, ari, dc, pol, subj;
    std::array<Accumulator, kPowerCategoryCount> power;
    std::size_t docs = 0;
    std::size_t power_docs = 0;
    for (const auto& [report, report_genre] : reports) {
      if (report_genre != genre) continue;
      ++docs;
      if (const auto& r = report.readability) {
        fre.add(r->flesch_reading_ease.score);
        fk.add(r->flesch_kincaid_grade);
        if (r->smog) smog.add(r->smog->grade);
        fog.add(r->gunning_fog);
        cl.add(r->coleman_liau);
        ari.add(r->ari);
        dc.add(r->dale_chall);
      }
      if (report.power && !report.power->distribution.empty) {
        ++power_docs;
        for (std::size_t c = 0; c < kPowerCategoryCount; ++c) {
          power[c].add(report.power->distribution.percentages[c]);
        }
      }
      if (report.sentiment) {
        pol.add(report.sentiment->polarity);
        subj.add(report.sentiment->subjectivity);
      }
    }
    if (docs == 0) continue;

    GenreAggregate a;
    a.genre = genre;
    a.document_count = docs;
    a.flesch_reading_ease = fre.mean();
    a.flesch_kincaid_grade = fk.mean();
    a.smog = smog.mean();
    a.gunning_fog = fog.mean();
    a.coleman_liau = cl.mean();
    a.ari = ari.mean();
    a.dale_chall = dc.mean();
    if (fre.count > 0) {
      a.reading_ease_label = reading_ease_label(a.flesch_reading_ease.mean);
      std::vector<double> grades{a.flesch_kincaid_grade.mean};
      if (a.smog.count > 0) grades.push_back(a.smog.mean);
      grades.push_back(a.gunning_fog.mean);
      grades.push_back(a.coleman_liau.mean);
      grades.push_back(a.ari.mean);
      grades.push_back(dale_chall_grade(a.dale_chall.mean));
      a.text_standard = text_standard(grades);
    }
    a.power_documents = power_docs;
    for (std::size_t c = 0; c < kPowerCategoryCount; ++c) {
      a.power_distribution[c] = power[c].mean().mean;
    }
    a.polarity = pol.mean();
    a.subjectivity = subj.mean();
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace powerwords
