#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include <json.hpp>

#include "powerwords/error.hpp"
#include "powerwords/report.hpp"

namespace pw = powerwords;
using Json = nlohmann::json;

namespace {

const std::string kSample =
    "Act now and get a free bonus. This amazing offer is not bad at all! "
    "We met in America today. Five friends joined us. The deal ends soon, so hurry.";

pw::AnalysisConfig config(std::set<pw::Section> sections = pw::kAllSections) {
  auto c = pw::AnalysisConfig::defaults(POWERWORDS_TEST_DATA);
  c.sections = std::move(sections);
  return c;
}

const pw::Resources& all_resources() {
  static const pw::Resources r(config());
  return r;
}

std::size_t count_of(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST(Round2, HalfAwayFromZero) {
  EXPECT_EQ(pw::round2(0.23456), 0.23);
  EXPECT_EQ(pw::round2(83.3333333), 83.33);
  EXPECT_EQ(pw::round2(0.125), 0.13);
  EXPECT_EQ(pw::round2(-0.125), -0.13);
  EXPECT_EQ(pw::round2(-0.001), 0.0);
  EXPECT_FALSE(std::signbit(pw::round2(-0.001)));
}

TEST(Sections, Parse) {
  EXPECT_EQ(pw::parse_sections("power, sentiment"),
            (std::set<pw::Section>{pw::Section::kPower, pw::Section::kSentiment}));
  EXPECT_THROW(pw::parse_sections("power,colour"), pw::InvalidArgumentError);
  EXPECT_THROW(pw::parse_sections(" , "), pw::InvalidArgumentError);
}

TEST(DataDir, EnvironmentOverride) {
  ::setenv("POWERWORDS_DATA_DIR", "/tmp/somewhere", 1);
  EXPECT_EQ(pw::default_data_dir(), std::filesystem::path("/tmp/somewhere"));
  ::unsetenv("POWERWORDS_DATA_DIR");
  EXPECT_FALSE(pw::default_data_dir().empty());
}

TEST(Resources, MissingDataFileFailsUpFront) {
  auto c = config();
  c.lexicon = "/nonexistent/lexicon.csv";
  EXPECT_THROW(pw::Resources{c}, pw::DataFileError);
  c.sections = {pw::Section::kSentiment};
  EXPECT_NO_THROW(pw::Resources{c});  // lexicon not needed
}

TEST(Resources, EmptySectionsRejected) {
  auto c = config({});
  EXPECT_THROW(pw::Resources{c}, pw::InvalidArgumentError);
}

TEST(Analyze, AllSectionsPresent) {
  const auto report = pw::analyze(pw::Document("s", kSample), all_resources());
  EXPECT_EQ(report.id, "s");
  EXPECT_TRUE(report.readability.has_value());
  ASSERT_TRUE(report.power.has_value());
  EXPECT_GT(report.power->hits.total, 0u);
  ASSERT_TRUE(report.sentiment.has_value());
  EXPECT_GT(report.sentiment->matched_terms, 0u);
  ASSERT_TRUE(report.entities.has_value());
  EXPECT_NE(report.entities->annotated.find("**America GPE**"), std::string::npos);
  EXPECT_NE(report.entities->annotated.find("**today DATE**"), std::string::npos);
}

TEST(Analyze, PowerOnlyGating) {
  const auto report = pw::analyze(pw::Document("s", kSample), config({pw::Section::kPower}));
  EXPECT_FALSE(report.readability.has_value());
  EXPECT_TRUE(report.power.has_value());
  EXPECT_FALSE(report.sentiment.has_value());
  EXPECT_FALSE(report.entities.has_value());
  EXPECT_GT(report.stats.word_count, 0u);

  const auto j = Json::parse(pw::render_structured(report));
  EXPECT_TRUE(j.contains("stats"));
  EXPECT_TRUE(j.contains("power"));
  EXPECT_FALSE(j.contains("readability"));
  EXPECT_FALSE(j.contains("sentiment"));
  EXPECT_FALSE(j.contains("entities"));
}

TEST(Analyze, GatingLeavesOtherSectionsUnchanged) {
  const pw::Document doc("s", kSample);
  const auto full = Json::parse(pw::render_structured(pw::analyze(doc, all_resources())));
  for (const auto s : pw::kAllSections) {
    auto sections = pw::kAllSections;
    sections.erase(s);
    const auto gated = Json::parse(pw::render_structured(pw::analyze(doc, config(sections))));
    EXPECT_EQ(gated["stats"], full["stats"]);
    for (const auto other : sections) {
      const std::string key(pw::section_name(other));
      EXPECT_EQ(gated[key], full[key]) << "disabling " << pw::section_name(s);
    }
  }
}

TEST(Analyze, EmptyDocument) {
  const auto report = pw::analyze(pw::Document("e", ""), all_resources());
  EXPECT_EQ(report.stats, pw::TextStats{});
  EXPECT_FALSE(report.readability.has_value());
  ASSERT_TRUE(report.power.has_value());
  EXPECT_TRUE(report.power->distribution.empty);
  EXPECT_EQ(report.sentiment->polarity, 0.0);
  EXPECT_TRUE(report.entities->spans.empty());
  EXPECT_GE(report.warnings.size(), 2u);

  const auto j = Json::parse(pw::render_structured(report));
  EXPECT_TRUE(j["readability"].is_null());
}

TEST(Analyze, ShortTextWarnsAboutSmog) {
  const auto report = pw::analyze(pw::Document("s", "Buy it now."), all_resources());
  ASSERT_TRUE(report.readability.has_value());
  EXPECT_FALSE(report.readability->smog.has_value());
  EXPECT_EQ(count_of(pw::render_markdown(report), "smog"), 1u);
}

TEST(RenderStructured, Deterministic) {
  const auto report = pw::analyze(pw::Document("s", kSample), all_resources());
  EXPECT_EQ(pw::render_structured(report), pw::render_structured(report));
  const auto again = pw::analyze(pw::Document("s", kSample), all_resources());
  EXPECT_EQ(pw::render_structured(report), pw::render_structured(again));
}

TEST(RenderStructured, RoundsAtRenderTime) {
  pw::AnalysisReport report;
  report.id = "r";
  report.sections = {pw::Section::kPower, pw::Section::kSentiment};
  report.sentiment = pw::SentimentScore{0.23456, 0.5, 3};
  pw::PowerSection power;
  power.distribution.percentages = {83.333333333, 16.666666667, 0, 0, 0, 0, 0};
  power.distribution.empty = false;
  report.power = power;
  const auto text = pw::render_structured(report);
  EXPECT_NE(text.find("\"polarity\": 0.23,"), std::string::npos) << text;
  EXPECT_NE(text.find("\"Greed\": 83.33"), std::string::npos);
  EXPECT_NE(text.find("\"Encouragement\": 16.67"), std::string::npos);
  EXPECT_EQ(report.sentiment->polarity, 0.23456);
  EXPECT_EQ(text.back(), '\n');
}

TEST(RenderStructured, KeyOrderIsStable) {
  const auto text = pw::render_structured(pw::analyze(pw::Document("s", kSample), all_resources()));
  const auto pos = [&](const char* key) { return text.find(std::string("\"") + key + "\":"); };
  EXPECT_LT(pos("id"), pos("sections"));
  EXPECT_LT(pos("sections"), pos("stats"));
  EXPECT_LT(pos("stats"), pos("readability"));
  EXPECT_LT(pos("readability"), pos("power"));
  EXPECT_LT(pos("power"), pos("sentiment"));
  EXPECT_LT(pos("sentiment"), pos("entities"));
  EXPECT_LT(pos("entities"), pos("warnings"));
}

TEST(RenderStructured, RoundTripsNumbersToTwoDecimals) {
  const auto report = pw::analyze(pw::Document("s", kSample), all_resources());
  const auto j = Json::parse(pw::render_structured(report));
  const auto& r = *report.readability;
  EXPECT_EQ(j["readability"]["flesch_reading_ease"]["score"].get<double>(),
            pw::round2(r.flesch_reading_ease.score));
  EXPECT_EQ(j["readability"]["flesch_kincaid_grade"].get<double>(),
            pw::round2(r.flesch_kincaid_grade));
  EXPECT_EQ(j["readability"]["gunning_fog"].get<double>(), pw::round2(r.gunning_fog));
  EXPECT_EQ(j["readability"]["dale_chall"].get<double>(), pw::round2(r.dale_chall));
  EXPECT_EQ(j["sentiment"]["polarity"].get<double>(), pw::round2(report.sentiment->polarity));
  EXPECT_EQ(j["stats"]["word_count"].get<std::size_t>(), report.stats.word_count);
  for (const auto c : pw::kPowerCategories) {
    EXPECT_EQ(j["power"]["distribution"][std::string(pw::category_name(c))].get<double>(),
              pw::round2(report.power->distribution.percent(c)));
  }
}

TEST(RenderMarkdown, ReadabilityRowOrder) {
  const auto md = pw::render_markdown(pw::analyze(pw::Document("s", kSample), all_resources()));
  const char* rows[] = {"| Reading ease |",
                        "| Reading level | Grade ",
                        "| Smog index |",
                        "| Gunning Fog index | Grade ",
                        "| Coleman-Liau index | Grade ",
                        "| Automated Readability index | Grade ",
                        "| Dale-Chall Readability score |",
                        "| Text standard |"};
  std::size_t last = md.find("| Metric | Score |");
  ASSERT_NE(last, std::string::npos);
  for (const char* row : rows) {
    const auto pos = md.find(row);
    ASSERT_NE(pos, std::string::npos) << row;
    EXPECT_GT(pos, last) << row;
    last = pos;
  }
}

TEST(RenderMarkdown, EntitiesInline) {
  const auto md = pw::render_markdown(pw::analyze(pw::Document("s", kSample), all_resources()));
  EXPECT_NE(md.find("**America GPE**"), std::string::npos);
  EXPECT_NE(md.find("**Five CARDINAL**"), std::string::npos);
}

TEST(RenderMarkdown, NoWarningsNoSection) {
  pw::AnalysisReport report;
  report.id = "quiet";
  report.sentiment = pw::SentimentScore{0.1, 0.2, 1};
  const auto md = pw::render_markdown(report);
  EXPECT_EQ(md.find("Warnings"), std::string::npos);
  report.warnings.push_back("something");
  EXPECT_NE(pw::render_markdown(report).find("## Warnings"), std::string::npos);
}

TEST(AnalyzeCorpus, ParallelMatchesSerial) {
  std::vector<pw::CorpusDocument> docs;
  for (int i = 0; i < 12; ++i) {
    docs.push_back({pw::Document("d" + std::to_string(i),
                                 kSample.substr(0, 40 + static_cast<std::size_t>(i) * 9)),
                    i % 2 ? pw::Genre::kSpeech : pw::Genre::kMarketing,
                    {"loader note"}});
  }
  const auto serial = pw::analyze_corpus(docs, all_resources(), 1);
  const auto parallel = pw::analyze_corpus(docs, all_resources(), 4);
  ASSERT_EQ(serial.size(), docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    EXPECT_EQ(serial[i].first.id, docs[i].document.id());
    EXPECT_EQ(serial[i].first.warnings.front(), "loader note");
    EXPECT_EQ(pw::render_structured(serial[i].first), pw::render_structured(parallel[i].first));
  }
  const auto agg_serial = pw::aggregate(serial);
  const auto agg_parallel = pw::aggregate(parallel);
  EXPECT_EQ(pw::render_structured(agg_serial), pw::render_structured(agg_parallel));
}

TEST(RenderAggregates, DistributionTable) {
  pw::GenreAggregate a;
  a.genre = pw::Genre::kMarketing;
  a.power_distribution = {83.333333, 9.73, 5.33, 0, 0, 0, 1.606667};
  const std::vector<pw::GenreAggregate> aggs{a};
  const auto csv = pw::render_distribution_table(aggs);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "genre,category,percentage");
  EXPECT_NE(csv.find("marketing,Greed,83.33\n"), std::string::npos);
  EXPECT_NE(csv.find("marketing,Forbidden,1.61\n"), std::string::npos);
  EXPECT_EQ(count_of(csv, "\n"), 1u + pw::kPowerCategoryCount);

  const auto j = Json::parse(pw::render_structured(aggs));
  EXPECT_EQ(j["genres"][0]["genre"], "marketing");
  EXPECT_TRUE(j["genres"][0]["readability"]["smog"].is_null());
  EXPECT_EQ(j["genres"][0]["power"]["distribution"]["Greed"].get<double>(), 83.33);
  EXPECT_NE(pw::render_markdown(aggs).find("## marketing"), std::string::npos);
}
