#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "powerwords/corpus.hpp"
#include "powerwords/entities.hpp"
#include "powerwords/error.hpp"
#include "powerwords/power_lexicon.hpp"
#include "powerwords/readability.hpp"
#include "powerwords/report.hpp"
#include "powerwords/sentiment.hpp"
#include "powerwords/text.hpp"
#include "powerwords/version.hpp"

namespace py = pybind11;
namespace pw = powerwords;

namespace {

py::dict category_dict(const std::array<double, pw::kPowerCategoryCount>& values) {
  py::dict d;
  for (const auto c : pw::kPowerCategories) {
    d[py::str(std::string(pw::category_name(c)))] = values[static_cast<std::size_t>(c)];
  }
  return d;
}

std::set<pw::Section> sections_from(const std::optional<std::vector<std::string>>& names) {
  if (!names) return pw::kAllSections;
  std::string joined;
  for (const auto& n : *names) joined += n + ",";
  return pw::parse_sections(joined);
}

void bind_errors(py::module_& m) {
  static py::exception<pw::Error> base(m, "Error", PyExc_RuntimeError);
  static py::exception<pw::DataFileError> data(m, "DataFileError", base.ptr());
  static py::exception<pw::InputError> input(m, "InputError", base.ptr());
  static py::exception<pw::InsufficientTextError> insufficient(m, "InsufficientTextError",
                                                               base.ptr());
  static py::exception<pw::InvalidArgumentError> invalid(m, "InvalidArgumentError",
                                                         PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const pw::DataFileError& e) {
      py::set_error(data, e.what());
    } catch (const pw::InputError& e) {
      py::set_error(input, e.what());
    } catch (const pw::InsufficientTextError& e) {
      py::set_error(insufficient, e.what());
    } catch (const pw::InvalidArgumentError& e) {
      py::set_error(invalid, e.what());
    } catch (const pw::Error& e) {
      py::set_error(base, e.what());
    }
  });
}

void bind_text(py::module_& m) {
  py::class_<pw::Span>(m, "Span")
      .def_readonly("begin", &pw::Span::begin)
      .def_readonly("end", &pw::Span::end)
      .def("__repr__", [](const pw::Span& s) {
        return "Span(" + std::to_string(s.begin) + ", " + std::to_string(s.end) + ")";
      });

  py::enum_<pw::TokenKind>(m, "TokenKind")
      .value("WORD", pw::TokenKind::kWord)
      .value("NUMBER", pw::TokenKind::kNumber)
      .value("SYMBOL", pw::TokenKind::kSymbol);

  py::class_<pw::Token>(m, "Token")
      .def_readonly("text", &pw::Token::text)
      .def_readonly("span", &pw::Token::span)
      .def_readonly("kind", &pw::Token::kind)
      .def("__repr__", [](const pw::Token& t) { return "Token(" + t.text + ")"; });

  m.def("normalize", &pw::normalize, py::arg("text"));
  m.def("tokenize", &pw::tokenize, py::arg("text"));
  m.def("split_sentences", &pw::split_sentences, py::arg("text"));
  m.def("count_syllables", &pw::count_syllables, py::arg("word"));

  py::class_<pw::Document>(m, "Document")
      .def(py::init<std::string, std::string>(), py::arg("id"), py::arg("text"))
      .def_property_readonly("id", &pw::Document::id)
      .def_property_readonly("raw", &pw::Document::raw)
      .def_property_readonly("sentences",
                             [](const pw::Document& d) {
                               return std::vector<pw::Span>(d.sentences().begin(),
                                                            d.sentences().end());
                             })
      .def_property_readonly("tokens", [](const pw::Document& d) {
        return std::vector<pw::Token>(d.tokens().begin(), d.tokens().end());
      });

  py::class_<pw::TextStats>(m, "TextStats")
      .def(py::init<>())
      .def_readwrite("word_count", &pw::TextStats::word_count)
      .def_readwrite("sentence_count", &pw::TextStats::sentence_count)
      .def_readwrite("letter_count", &pw::TextStats::letter_count)
      .def_readwrite("char_count", &pw::TextStats::char_count)
      .def_readwrite("syllable_count", &pw::TextStats::syllable_count)
      .def_readwrite("polysyllable_count", &pw::TextStats::polysyllable_count)
      .def_readwrite("complex_word_count", &pw::TextStats::complex_word_count)
      .def_readwrite("difficult_word_count", &pw::TextStats::difficult_word_count);

  py::class_<pw::WordSet>(m, "WordSet")
      .def_static("load_file", &pw::WordSet::load_file, py::arg("path"))
      .def("__contains__", &pw::WordSet::contains)
      .def("__len__", &pw::WordSet::size);
  py::class_<pw::SyllableCounter>(m, "SyllableCounter")
      .def(py::init<>())
      .def_static("load_file", &pw::SyllableCounter::load_file, py::arg("path"))
      .def("count", &pw::SyllableCounter::count, py::arg("word"));
  m.def("compute_stats", &pw::compute_stats, py::arg("document"), py::arg("familiar_words"),
        py::arg("syllables"));
}

void bind_readability(py::module_& m) {
  py::class_<pw::ReadingEase>(m, "ReadingEase")
      .def_readonly("score", &pw::ReadingEase::score)
      .def_readonly("label", &pw::ReadingEase::label);
  py::class_<pw::SmogResult>(m, "SmogResult")
      .def_readonly("grade", &pw::SmogResult::grade)
      .def_readonly("low_sample", &pw::SmogResult::low_sample);
  py::class_<pw::ReadabilityReport>(m, "ReadabilityReport")
      .def_readonly("flesch_reading_ease", &pw::ReadabilityReport::flesch_reading_ease)
      .def_readonly("flesch_kincaid_grade", &pw::ReadabilityReport::flesch_kincaid_grade)
      .def_readonly("smog", &pw::ReadabilityReport::smog)
      .def_readonly("gunning_fog", &pw::ReadabilityReport::gunning_fog)
      .def_readonly("coleman_liau", &pw::ReadabilityReport::coleman_liau)
      .def_readonly("ari", &pw::ReadabilityReport::ari)
      .def_readonly("dale_chall", &pw::ReadabilityReport::dale_chall)
      .def_readonly("text_standard", &pw::ReadabilityReport::text_standard);

  m.def("flesch_reading_ease", &pw::flesch_reading_ease);
  m.def("flesch_kincaid_grade", &pw::flesch_kincaid_grade);
  m.def("smog_index", &pw::smog_index);
  m.def("gunning_fog", &pw::gunning_fog);
  m.def("coleman_liau", &pw::coleman_liau);
  m.def("automated_readability_index", &pw::automated_readability_index);
  m.def("dale_chall", &pw::dale_chall);
  m.def("compute_readability", &pw::compute_readability);
  m.def("text_standard",
        [](const std::vector<double>& grades) { return pw::text_standard(grades); });
}

void bind_power(py::module_& m) {
  py::class_<pw::PowerLexicon>(m, "PowerLexicon")
      .def_static("load_file", &pw::PowerLexicon::load_file, py::arg("path"))
      .def_property_readonly("version", &pw::PowerLexicon::version)
      .def_property_readonly("source", &pw::PowerLexicon::source)
      .def("__len__", &pw::PowerLexicon::size)
      .def("terms", [](const pw::PowerLexicon& lex) {
        std::map<std::string, std::string> out;
        for (const auto& [term, cat] : lex.entries()) out[term] = pw::category_name(cat);
        return out;
      });

  py::class_<pw::PowerWordHits>(m, "PowerWordHits")
      .def_readonly("total", &pw::PowerWordHits::total)
      .def_property_readonly("counts",
                             [](const pw::PowerWordHits& h) {
                               py::dict d;
                               for (const auto c : pw::kPowerCategories) {
                                 d[py::str(std::string(pw::category_name(c)))] = h.count(c);
                               }
                               return d;
                             })
      .def_property_readonly("matches", [](const pw::PowerWordHits& h) {
        py::list out;
        for (const auto& match : h.matches) {
          out.append(py::make_tuple(match.term, std::string(pw::category_name(match.category)),
                                    match.span.begin, match.span.end));
        }
        return out;
      });

  py::class_<pw::Matcher>(m, "Matcher")
      .def(py::init<const pw::PowerLexicon&>(), py::arg("lexicon"))
      .def("scan", &pw::Matcher::scan, py::arg("document"))
      .def_property_readonly("term_count", &pw::Matcher::term_count);

  m.def("distribution", [](const pw::PowerWordHits& hits) {
    const auto d = pw::distribution(hits);
    return py::make_tuple(category_dict(d.percentages), d.empty);
  });
}

void bind_sentiment_entities(py::module_& m) {
  py::class_<pw::SentimentLexicon>(m, "SentimentLexicon")
      .def_static("load_file", &pw::SentimentLexicon::load_file, py::arg("path"));
  py::class_<pw::SentimentScore>(m, "SentimentScore")
      .def_readonly("polarity", &pw::SentimentScore::polarity)
      .def_readonly("subjectivity", &pw::SentimentScore::subjectivity)
      .def_readonly("matched_terms", &pw::SentimentScore::matched_terms);
  m.def("analyze_sentiment", &pw::analyze_sentiment, py::arg("document"), py::arg("lexicon"));

  py::class_<pw::Gazetteer>(m, "Gazetteer")
      .def_static("load_file", &pw::Gazetteer::load_file, py::arg("path"))
      .def("__len__", &pw::Gazetteer::size);
  py::class_<pw::EntitySpan>(m, "EntitySpan")
      .def_readonly("span", &pw::EntitySpan::span)
      .def_readonly("surface", &pw::EntitySpan::surface)
      .def_property_readonly("label",
                             [](const pw::EntitySpan& e) { return std::string(pw::label_name(e.label)); });
  m.def("tag_entities", &pw::tag_entities, py::arg("document"), py::arg("gazetteer"));
  m.def(
      "render_annotations",
      [](const pw::Document& doc, const std::vector<pw::EntitySpan>& spans) {
        return pw::render_annotations(doc, spans);
      },
      py::arg("document"), py::arg("spans"));
}

void bind_report(py::module_& m) {
  m.def("strip_html", &pw::strip_html, py::arg("html"));
  m.def(
      "strip_gutenberg_boilerplate",
      [](std::string_view text) {
        const auto s = pw::strip_gutenberg_boilerplate(text);
        return py::make_tuple(s.text, s.markers_missing);
      },
      py::arg("text"));

  py::class_<pw::AnalysisConfig>(m, "AnalysisConfig")
      .def(py::init([](const std::filesystem::path& data_dir,
                       const std::optional<std::vector<std::string>>& sections) {
             auto c = pw::AnalysisConfig::defaults(data_dir);
             c.sections = sections_from(sections);
             return c;
           }),
           py::arg("data_dir") = pw::default_data_dir(), py::arg("sections") = py::none())
      .def_readwrite("lexicon", &pw::AnalysisConfig::lexicon)
      .def_readwrite("sentiment", &pw::AnalysisConfig::sentiment)
      .def_readwrite("familiar", &pw::AnalysisConfig::familiar)
      .def_readwrite("gazetteer", &pw::AnalysisConfig::gazetteer)
      .def_readwrite("syllables", &pw::AnalysisConfig::syllables)
      .def_property(
          "sections",
          [](const pw::AnalysisConfig& c) {
            std::vector<std::string> out;
            for (const auto s : c.sections) out.emplace_back(pw::section_name(s));
            return out;
          },
          [](pw::AnalysisConfig& c, const std::vector<std::string>& names) {
            c.sections = sections_from(names);
          });

  py::class_<pw::Resources>(m, "Resources")
      .def(py::init<const pw::AnalysisConfig&>(), py::arg("config"));

  py::class_<pw::AnalysisReport>(m, "AnalysisReport")
      .def_readonly("id", &pw::AnalysisReport::id)
      .def_readonly("stats", &pw::AnalysisReport::stats)
      .def_readonly("readability", &pw::AnalysisReport::readability)
      .def_readonly("sentiment", &pw::AnalysisReport::sentiment)
      .def_readonly("warnings", &pw::AnalysisReport::warnings)
      .def("to_json", [](const pw::AnalysisReport& r) { return pw::render_structured(r); })
      .def("to_markdown", [](const pw::AnalysisReport& r) { return pw::render_markdown(r); });

  m.def(
      "analyze",
      [](const pw::Document& doc, const pw::Resources& resources) {
        py::gil_scoped_release release;
        return pw::analyze(doc, resources);
      },
      py::arg("document"), py::arg("resources"));

  m.def(
      "analyze_corpus",
      [](const std::filesystem::path& manifest, const pw::Resources& resources,
         std::size_t threads) {
        std::vector<pw::CorpusDocument> docs;
        std::vector<std::pair<pw::AnalysisReport, pw::Genre>> reports;
        std::vector<pw::GenreAggregate> aggregates;
        {
          py::gil_scoped_release release;
          docs = pw::load_corpus(pw::CorpusManifest::load_file(manifest));
          reports = pw::analyze_corpus(docs, resources, threads);
          aggregates = pw::aggregate(reports);
        }
        py::list per_doc;
        for (auto& [report, genre] : reports) {
          per_doc.append(py::make_tuple(std::move(report), std::string(pw::genre_name(genre))));
        }
        return py::make_tuple(per_doc, pw::render_structured(aggregates),
                              pw::render_distribution_table(aggregates));
      },
      py::arg("manifest"), py::arg("resources"), py::arg("threads") = 1);

  m.def("default_data_dir", &pw::default_data_dir);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Readability, power-word, sentiment and entity analysis";
  m.attr("__version__") = pw::kVersion;
  bind_errors(m);
  bind_text(m);
  bind_readability(m);
  bind_power(m);
  bind_sentiment_entities(m);
  bind_report(m);
}
