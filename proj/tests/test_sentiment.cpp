#include <gtest/gtest.h>

#include <sstream>

#include "powerwords/error.hpp"
#include "powerwords/sentiment.hpp"

namespace pw = powerwords;

namespace {

pw::SentimentLexicon load(const std::string& text) {
  std::istringstream in(text);
  return pw::SentimentLexicon::load(in, "s.txt");
}

const pw::SentimentLexicon& sample() {
  static const auto lex = load(
      "great,0.8,0.75\n"
      "bad,-0.7,0.6\n"
      "happy,0.6,1.0\n"
      "[modifiers]\n"
      "very,1.3\n"
      "slightly,0.5\n"
      "[negators]\n"
      "not\n"
      "never\n");
  return lex;
}

pw::SentimentScore score(const std::string& text) {
  return pw::analyze_sentiment(pw::Document("s", text), sample());
}

std::size_t error_line(const std::string& text) {
  try {
    load(text);
  } catch (const pw::DataFileError& e) {
    return e.line();
  }
  ADD_FAILURE() << "expected DataFileError";
  return 0;
}

}  // namespace

TEST(SentimentLexicon, ParsesEntry) {
  const auto lex = load("great,0.8,0.75");
  ASSERT_EQ(lex.entries().size(), 1u);
  EXPECT_DOUBLE_EQ(lex.entries().at("great").polarity, 0.8);
  EXPECT_DOUBLE_EQ(lex.entries().at("great").subjectivity, 0.75);
}

TEST(SentimentLexicon, RangeError) { EXPECT_EQ(error_line("ok,0.1,0.1\ngreat,1.5,0.5"), 2u); }

TEST(SentimentLexicon, SubjectivityRange) { EXPECT_EQ(error_line("meh,0.1,-0.2"), 1u); }

TEST(SentimentLexicon, Negators) {
  const auto lex = load("[negators]\nnot\nnever");
  EXPECT_EQ(lex.negators().size(), 2u);
  EXPECT_TRUE(lex.entries().empty());
}

TEST(SentimentLexicon, RejectsMalformed) {
  EXPECT_EQ(error_line("great,0.8"), 1u);
  EXPECT_EQ(error_line("great,abc,0.5"), 1u);
  EXPECT_EQ(error_line("great,0.8,0.7\ngreat,0.1,0.1"), 2u);
  EXPECT_EQ(error_line("[adverbs]\nvery,1.2"), 1u);
  EXPECT_EQ(error_line("[modifiers]\nvery"), 2u);
  EXPECT_EQ(error_line("very good,0.7,0.6"), 1u);
}

TEST(SentimentLexicon, ConstructorValidates) {
  EXPECT_THROW(pw::SentimentLexicon({{"x", {2.0, 0.5}}}, {}, {}), pw::InvalidArgumentError);
}

TEST(SentimentLexicon, ShippedFileLoads) {
  const auto lex = pw::SentimentLexicon::load_file(POWERWORDS_TEST_DATA "/sentiment_lexicon.txt");
  EXPECT_GT(lex.entries().size(), 1000u);
  EXPECT_TRUE(lex.negators().contains("not"));
  EXPECT_TRUE(lex.modifiers().contains("very"));
}

TEST(Sentiment, NoHitsIsZero) {
  const auto s = score("the cat sat");
  EXPECT_EQ(s.polarity, 0.0);
  EXPECT_EQ(s.subjectivity, 0.0);
  EXPECT_EQ(s.matched_terms, 0u);
}

TEST(Sentiment, SingleMatch) {
  const auto s = score("great");
  EXPECT_DOUBLE_EQ(s.polarity, 0.8);
  EXPECT_DOUBLE_EQ(s.subjectivity, 0.75);
}

TEST(Sentiment, Negation) {
  const auto s = score("not great");
  EXPECT_DOUBLE_EQ(s.polarity, -0.4);
  EXPECT_DOUBLE_EQ(s.subjectivity, 0.75);
}

TEST(Sentiment, NegationWindowIsThreeWords) {
  EXPECT_DOUBLE_EQ(score("not a very great").polarity, 0.8 * 1.3 * -0.5);
  EXPECT_DOUBLE_EQ(score("not a b c great").polarity, 0.8);
}

TEST(Sentiment, NegationStopsAtSentence) {
  EXPECT_DOUBLE_EQ(score("Never. Great day.").polarity, 0.8);
}

TEST(Sentiment, ModifierScalesDirectlyFollowingTerm) {
  EXPECT_DOUBLE_EQ(score("slightly bad").polarity, -0.35);
  EXPECT_DOUBLE_EQ(score("slightly very bad").polarity, -0.7 * 1.3);
}

TEST(Sentiment, MeanClampedToRange) {
  const auto s = score("very great, very great");
  EXPECT_DOUBLE_EQ(s.polarity, 1.0);
}

TEST(Sentiment, MeanOverMatchedWords) {
  const auto s = score("Great and bad and happy!");
  EXPECT_EQ(s.matched_terms, 3u);
  EXPECT_NEAR(s.polarity, (0.8 - 0.7 + 0.6) / 3, 1e-12);
  EXPECT_NEAR(s.subjectivity, (0.75 + 0.6 + 1.0) / 3, 1e-12);
}

TEST(Sentiment, CaseInsensitive) {
  EXPECT_DOUBLE_EQ(score("NOT GREAT").polarity, -0.4);
}
