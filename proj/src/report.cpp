#include "powerwords/report.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "data_io.hpp"
#include "powerwords/error.hpp"

#ifndef POWERWORDS_DEFAULT_DATA_DIR
#define POWERWORDS_DEFAULT_DATA_DIR "data"
#endif

namespace powerwords {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::string_view, 4> kSectionNames = {"readability", "power", "sentiment",
                                                           "entities"};

std::string fixed2(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << round2(v);
  return out.str();
}

Json stats_json(const TextStats& s) {
  return Json{{"word_count", s.word_count},
              {"sentence_count", s.sentence_count},
              {"letter_count", s.letter_count},
              {"char_count", s.char_count},
              {"syllable_count", s.syllable_count},
              {"polysyllable_count", s.polysyllable_count},
              {"complex_word_count", s.complex_word_count},
              {"difficult_word_count", s.difficult_word_count}};
}

Json readability_json(const ReadabilityReport& r) {
  Json smog = nullptr;
  if (r.smog) smog = Json{{"grade", round2(r.smog->grade)}, {"low_sample", r.smog->low_sample}};
  return Json{{"flesch_reading_ease",
               {{"score", round2(r.flesch_reading_ease.score)},
                {"label", r.flesch_reading_ease.label}}},
              {"flesch_kincaid_grade", round2(r.flesch_kincaid_grade)},
              {"smog", smog},
              {"gunning_fog", round2(r.gunning_fog)},
              {"coleman_liau", round2(r.coleman_liau)},
              {"automated_readability_index", round2(r.ari)},
              {"dale_chall", round2(r.dale_chall)},
              {"text_standard", r.text_standard}};
}

Json category_map(const std::array<double, kPowerCategoryCount>& values) {
  Json out = Json::object();
  for (const auto c : kPowerCategories) {
    out[std::string(category_name(c))] = round2(values[static_cast<std::size_t>(c)]);
  }
  return out;
}

Json power_json(const PowerSection& p) {
  Json counts = Json::object();
  for (const auto c : kPowerCategories) counts[std::string(category_name(c))] = p.hits.count(c);
  Json matches = Json::array();
  for (const auto& m : p.hits.matches) {
    matches.push_back({{"term", m.term},
                       {"category", category_name(m.category)},
                       {"begin", m.span.begin},
                       {"end", m.span.end}});
  }
  return Json{{"total", p.hits.total},
              {"counts", counts},
              {"distribution", category_map(p.distribution.percentages)},
              {"empty", p.distribution.empty},
              {"matches", matches}};
}

Json sentiment_json(const SentimentScore& s) {
  return Json{{"polarity", round2(s.polarity)},
              {"subjectivity", round2(s.subjectivity)},
              {"matched_terms", s.matched_terms}};
}

Json entities_json(const EntitySection& e) {
  Json spans = Json::array();
  for (const auto& s : e.spans) {
    spans.push_back({{"surface", s.surface},
                     {"label", label_name(s.label)},
                     {"begin", s.span.begin},
                     {"end", s.span.end}});
  }
  return Json{{"spans", spans}, {"annotated", e.annotated}};
}

Json mean_json(const MeanValue& m) {
  if (m.count == 0) return nullptr;
  return round2(m.mean);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void readability_table(std::ostringstream& out, const std::string& ease_label, double fk,
                       std::optional<double> smog, double fog, double cl, double ari, double dc,
                       const std::string& standard) {
  out << "| Metric | Score |\n|---|---|\n";
  out << "| Reading ease | " << ease_label << " |\n";
  out << "| Reading level | Grade " << fixed2(fk) << " |\n";
  out << "| Smog index | " << (smog ? "Grade " + fixed2(*smog) : std::string("n/a")) << " |\n";
  out << "| Gunning Fog index | Grade " << fixed2(fog) << " |\n";
  out << "| Coleman-Liau index | Grade " << fixed2(cl) << " |\n";
  out << "| Automated Readability index | Grade " << fixed2(ari) << " |\n";
  out << "| Dale-Chall Readability score | " << fixed2(dc) << " |\n";
  out << "| Text standard | " << standard << " |\n";
}

void distribution_table(std::ostringstream& out,
                        const std::array<double, kPowerCategoryCount>& percentages) {
  out << "| Category | Share |\n|---|---|\n";
  for (const auto c : kPowerCategories) {
    out << "| " << category_name(c) << " | " << fixed2(percentages[static_cast<std::size_t>(c)])
        << "% |\n";
  }
}

}  // namespace

std::string_view section_name(Section s) { return kSectionNames[static_cast<std::size_t>(s)]; }

std::optional<Section> parse_section(std::string_view name) {
  for (std::size_t i = 0; i < kSectionNames.size(); ++i) {
    if (kSectionNames[i] == name) return static_cast<Section>(i);
  }
  return std::nullopt;
}

std::set<Section> parse_sections(std::string_view list) {
  std::set<Section> out;
  for (const auto part : detail::split(list, ',')) {
    const auto name = detail::trim(part);
    if (name.empty()) continue;
    const auto s = parse_section(name);
    if (!s) throw InvalidArgumentError("unknown section '" + std::string(name) + "'");
    out.insert(*s);
  }
  if (out.empty()) throw InvalidArgumentError("no sections enabled");
  return out;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("POWERWORDS_DATA_DIR"); env && *env) return env;
  return POWERWORDS_DEFAULT_DATA_DIR;
}

AnalysisConfig AnalysisConfig::defaults(const std::filesystem::path& data_dir) {
  AnalysisConfig c;
  c.lexicon = data_dir / "power_lexicon.csv";
  c.sentiment = data_dir / "sentiment_lexicon.txt";
  c.familiar = data_dir / "familiar_words.txt";
  c.gazetteer = data_dir / "gazetteer.txt";
  c.syllables = data_dir / "syllable_exceptions.tsv";
  return c;
}

Resources::Resources(const AnalysisConfig& config) : sections_(config.sections) {
  if (sections_.empty()) throw InvalidArgumentError("no sections enabled");
  familiar_ = WordSet::load_file(config.familiar);
  if (!config.syllables.empty()) syllables_ = SyllableCounter::load_file(config.syllables);
  if (sections_.contains(Section::kPower)) {
    lexicon_ = PowerLexicon::load_file(config.lexicon);
    matcher_.emplace(*lexicon_);
  }
  if (sections_.contains(Section::kSentiment)) {
    sentiment_ = SentimentLexicon::load_file(config.sentiment);
  }
  if (sections_.contains(Section::kEntities)) gazetteer_ = Gazetteer::load_file(config.gazetteer);
}

AnalysisReport analyze(const Document& doc, const Resources& resources) {
  AnalysisReport report;
  report.id = doc.id();
  report.sections = resources.sections();
  report.stats = compute_stats(doc, resources.familiar_words(), resources.syllables());

  const auto& sections = resources.sections();
  if (sections.contains(Section::kReadability)) {
    try {
      report.readability = compute_readability(report.stats);
      if (!report.readability->smog) {
        report.warnings.emplace_back("smog: fewer than 3 sentences; index omitted");
      } else if (report.readability->smog->low_sample) {
        report.warnings.emplace_back("smog: fewer than 30 sentences; low-sample estimate");
      }
    } catch (const InsufficientTextError& e) {
      report.warnings.emplace_back(std::string("readability: ") + e.what());
    }
  }
  if (sections.contains(Section::kPower)) {
    PowerSection p;
    p.hits = resources.matcher()->scan(doc);
    p.distribution = distribution(p.hits);
    if (p.distribution.empty) {
      report.warnings.emplace_back("power: no power words found; distribution is empty");
    }
    report.power = std::move(p);
  }
  if (sections.contains(Section::kSentiment)) {
    report.sentiment = analyze_sentiment(doc, *resources.sentiment());
  }
  if (sections.contains(Section::kEntities)) {
    EntitySection e;
    e.spans = tag_entities(doc, *resources.gazetteer());
    e.annotated = render_annotations(doc, e.spans);
    report.entities = std::move(e);
  }
  return report;
}

AnalysisReport analyze(const Document& doc, const AnalysisConfig& config) {
  return analyze(doc, Resources(config));
}

std::vector<std::pair<AnalysisReport, Genre>> analyze_corpus(
    std::span<const CorpusDocument> documents, const Resources& resources, std::size_t threads) {
  std::vector<std::pair<AnalysisReport, Genre>> out(documents.size());
  auto run_one = [&](std::size_t i) {
    const auto& d = documents[i];
    AnalysisReport r = analyze(d.document, resources);
    r.warnings.insert(r.warnings.begin(), d.warnings.begin(), d.warnings.end());
    out[i] = {std::move(r), d.genre};
  };

  threads = std::max<std::size_t>(1, std::min(threads, documents.size()));
  if (threads == 1) {
    for (std::size_t i = 0; i < documents.size(); ++i) run_one(i);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < documents.size(); i = next++) {
        try {
          run_one(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return out;
}

double round2(double value) {
  const double r = std::round(value * 100.0) / 100.0;
  return r == 0.0 ? 0.0 : r;  // no "-0.00"
}

std::string render_structured(const AnalysisReport& report) {
  Json j;
  j["id"] = report.id;
  Json sections = Json::array();
  for (const auto s : report.sections) sections.push_back(section_name(s));
  j["sections"] = sections;
  j["stats"] = stats_json(report.stats);
  if (report.sections.contains(Section::kReadability)) {
    j["readability"] = report.readability ? readability_json(*report.readability) : Json(nullptr);
  }
  if (report.power) j["power"] = power_json(*report.power);
  if (report.sentiment) j["sentiment"] = sentiment_json(*report.sentiment);
  if (report.entities) j["entities"] = entities_json(*report.entities);
  j["warnings"] = report.warnings;
  return dump(j);
}

std::string render_structured(std::span<const GenreAggregate> aggregates) {
  Json genres = Json::array();
  for (const auto& a : aggregates) {
    genres.push_back(
        {{"genre", genre_name(a.genre)},
         {"documents", a.document_count},
         {"readability",
          {{"flesch_reading_ease", mean_json(a.flesch_reading_ease)},
           {"reading_ease_label", a.reading_ease_label},
           {"flesch_kincaid_grade", mean_json(a.flesch_kincaid_grade)},
           {"smog", mean_json(a.smog)},
           {"gunning_fog", mean_json(a.gunning_fog)},
           {"coleman_liau", mean_json(a.coleman_liau)},
           {"automated_readability_index", mean_json(a.ari)},
           {"dale_chall", mean_json(a.dale_chall)},
           {"text_standard", a.text_standard}}},
         {"power",
          {{"documents", a.power_documents}, {"distribution", category_map(a.power_distribution)}}},
         {"sentiment",
          {{"polarity", mean_json(a.polarity)}, {"subjectivity", mean_json(a.subjectivity)}}}});
  }
  return dump(Json{{"genres", genres}});
}

std::string render_markdown(const AnalysisReport& report) {
  std::ostringstream out;
  out << "# " << report.id << "\n";
  if (const auto& r = report.readability) {
    out << "\n## Readability\n\n";
    std::optional<double> smog;
    if (r->smog) smog = r->smog->grade;
    readability_table(out, r->flesch_reading_ease.label, r->flesch_kincaid_grade, smog,
                      r->gunning_fog, r->coleman_liau, r->ari, r->dale_chall, r->text_standard);
  }
  if (const auto& p = report.power) {
    out << "\n## Power words\n\n";
    out << "Matched " << p->hits.total << " power word" << (p->hits.total == 1 ? "" : "s")
        << ".\n\n";
    distribution_table(out, p->distribution.percentages);
  }
  if (const auto& s = report.sentiment) {
    out << "\n## Sentiment\n\n";
    out << "- Polarity: " << fixed2(s->polarity) << "\n";
    out << "- Subjectivity: " << fixed2(s->subjectivity) << "\n";
    out << "- Matched terms: " << s->matched_terms << "\n";
  }
  if (const auto& e = report.entities) {
    out << "\n## Entities\n\n" << detail::trim(e->annotated) << "\n";
  }
  if (!report.warnings.empty()) {
    out << "\n## Warnings\n\n";
    for (const auto& w : report.warnings) out << "- " << w << "\n";
  }
  return out.str();
}

std::string render_markdown(std::span<const GenreAggregate> aggregates) {
  std::ostringstream out;
  out << "# Corpus summary\n";
  for (const auto& a : aggregates) {
    out << "\n## " << genre_name(a.genre) << " (" << a.document_count << " document"
        << (a.document_count == 1 ? "" : "s") << ")\n\n";
    if (a.flesch_reading_ease.count > 0) {
      std::optional<double> smog;
      if (a.smog.count > 0) smog = a.smog.mean;
      readability_table(out, a.reading_ease_label, a.flesch_kincaid_grade.mean, smog,
                        a.gunning_fog.mean, a.coleman_liau.mean, a.ari.mean, a.dale_chall.mean,
                        a.text_standard);
      out << "\n";
    }
    out << "Power words over " << a.power_documents << " document"
        << (a.power_documents == 1 ? "" : "s") << " with hits:\n\n";
    distribution_table(out, a.power_distribution);
    if (a.polarity.count > 0) {
      out << "\n- Polarity: " << fixed2(a.polarity.mean) << "\n";
      out << "- Subjectivity: " << fixed2(a.subjectivity.mean) << "\n";
    }
  }
  return out.str();
}

std::string render_distribution_table(std::span<const GenreAggregate> aggregates) {
  std::ostringstream out;
  out << "genre,category,percentage\n";
  for (const auto& a : aggregates) {
    for (const auto c : kPowerCategories) {
      out << genre_name(a.genre) << ',' << category_name(c) << ','
          << fixed2(a.power_distribution[static_cast<std::size_t>(c)]) << '\n';
    }
  }
  return out.str();
}

}  // namespace powerwords
