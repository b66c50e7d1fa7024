// Command-line front end: `analyze` one file or a `corpus` manifest.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "powerwords/corpus.hpp"
#include "powerwords/error.hpp"
#include "powerwords/report.hpp"
#include "powerwords/version.hpp"

namespace fs = std::filesystem;
namespace pw = powerwords;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kDataFile = 2, kInputText = 3 };

struct Options {
  std::string lexicon, sentiment, familiar, gazetteer;
  std::string sections = "readability,power,sentiment,entities";
  std::string format = "structured";
};

void add_shared_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("--lexicon", o.lexicon, "Power-word lexicon (term,category CSV)")
      ->capture_default_str();
  cmd.add_option("--sentiment", o.sentiment, "Sentiment lexicon")->capture_default_str();
  cmd.add_option("--familiar", o.familiar, "Familiar-word list for Dale-Chall")
      ->capture_default_str();
  cmd.add_option("--gazetteer", o.gazetteer, "Entity gazetteer")->capture_default_str();
  cmd.add_option("--sections", o.sections, "Comma-separated sections to run")
      ->capture_default_str();
  cmd.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"structured", "markdown"}))
      ->capture_default_str();
}

pw::AnalysisConfig make_config(const Options& o, const fs::path& data_dir) {
  auto config = pw::AnalysisConfig::defaults(data_dir);
  config.lexicon = o.lexicon;
  config.sentiment = o.sentiment;
  config.familiar = o.familiar;
  config.gazetteer = o.gazetteer;
  config.sections = pw::parse_sections(o.sections);
  config.format = o.format == "markdown" ? pw::OutputFormat::kMarkdown
                                         : pw::OutputFormat::kStructured;
  return config;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pw::Error("cannot write " + path.string());
  out << content;
  if (!out) throw pw::Error("cannot write " + path.string());
}

int run_analyze(const std::string& file, const std::string& kind, const pw::AnalysisConfig& config) {
  pw::ManifestEntry entry{file, fs::path(file).stem().string(), pw::Genre::kSpeech,
                          *pw::parse_source_kind(kind)};
  const pw::Resources resources(config);
  const auto doc = pw::load_entry(entry);
  auto report = pw::analyze(doc.document, resources);
  report.warnings.insert(report.warnings.begin(), doc.warnings.begin(), doc.warnings.end());
  std::cout << (config.format == pw::OutputFormat::kMarkdown ? pw::render_markdown(report)
                                                             : pw::render_structured(report));
  return kOk;
}

int run_corpus(const std::string& manifest_path, const std::string& out_dir, std::size_t threads,
               const pw::AnalysisConfig& config) {
  const auto manifest = pw::CorpusManifest::load_file(manifest_path);
  const pw::Resources resources(config);
  const auto docs = pw::load_corpus(manifest);
  const auto reports = pw::analyze_corpus(docs, resources, threads);
  const auto aggregates = pw::aggregate(reports);
  const bool markdown = config.format == pw::OutputFormat::kMarkdown;

  if (out_dir.empty()) {
    std::cout << (markdown ? pw::render_markdown(aggregates) : pw::render_structured(aggregates));
    return kOk;
  }
  const fs::path dir(out_dir);
  fs::create_directories(dir);
  const std::string ext = markdown ? ".md" : ".json";
  for (const auto& [report, genre] : reports) {
    write_file(dir / (report.id + ext),
               markdown ? pw::render_markdown(report) : pw::render_structured(report));
  }
  write_file(dir / ("aggregates" + ext),
             markdown ? pw::render_markdown(aggregates) : pw::render_structured(aggregates));
  write_file(dir / "distribution.csv", pw::render_distribution_table(aggregates));
  std::cerr << "wrote " << reports.size() << " reports to " << dir.string() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path data_dir = pw::default_data_dir();
  const auto defaults = pw::AnalysisConfig::defaults(data_dir);

  CLI::App app{"Readability, power-word, sentiment and entity analysis for English text.\n"
               "Data files default to $POWERWORDS_DATA_DIR, else " + data_dir.string()};
  app.set_version_flag("--version", std::string("powerwords ") + pw::kVersion);
  app.require_subcommand(1);

  Options analyze_opts{defaults.lexicon.string(), defaults.sentiment.string(),
                       defaults.familiar.string(), defaults.gazetteer.string()};
  Options corpus_opts = analyze_opts;

  std::string file;
  std::string kind = "plain";
  auto* analyze = app.add_subcommand("analyze", "Analyze one text file");
  analyze->add_option("file", file, "Input text (UTF-8)")->required();
  analyze->add_option("--kind", kind, "Input cleaning")
      ->check(CLI::IsMember({"plain", "html", "gutenberg"}))
      ->capture_default_str();
  add_shared_flags(*analyze, analyze_opts);

  std::string manifest;
  std::string out_dir;
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  auto* corpus = app.add_subcommand("corpus", "Analyze a manifest of documents by genre");
  corpus->add_option("manifest", manifest, "CSV manifest: path,id,genre,kind")->required();
  corpus->add_option("--out", out_dir,
                     "Write per-document reports, aggregates and distribution.csv here");
  corpus->add_option("--threads", threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_shared_flags(*corpus, corpus_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  pw::AnalysisConfig config;
  try {
    config = make_config(analyze->parsed() ? analyze_opts : corpus_opts, data_dir);
  } catch (const pw::InvalidArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n" << "Run with --help for more information.\n";
    return kUsage;
  }

  try {
    if (analyze->parsed()) return run_analyze(file, kind, config);
    return run_corpus(manifest, out_dir, threads, config);
  } catch (const pw::DataFileError& e) {
    std::cerr << "data file error: " << e.what() << "\n";
    return kDataFile;
  } catch (const pw::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputText;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputText;
  }
}
