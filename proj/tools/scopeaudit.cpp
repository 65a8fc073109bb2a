#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "scopeaudit/config.hpp"
#include "scopeaudit/corpus.hpp"
#include "scopeaudit/report.hpp"
#include "scopeaudit/similarity.hpp"
#include "scopeaudit/synthcorpus.hpp"
#include "scopeaudit/vectorize.hpp"

namespace fs = std::filesystem;
using namespace scopeaudit;

namespace {

// Pipeline flags shared by the vectorizing subcommands. Values land in a
// Config with precedence: flag > config file (SCOPEAUDIT_CONFIG or --config)
// > built-in default.
struct ConfigFlags {
    std::string config_path;
    double threshold = 0;
    int rank_window = 0, min_articles = 0, ngram_max = 0, min_journals_per_term = 0, workers = 0;
    std::string stopwords_path, headings_path;
    bool loo_recompute_idf = false;

    CLI::Option* o_threshold = nullptr;
    CLI::Option* o_rank_window = nullptr;
    CLI::Option* o_min_articles = nullptr;
    CLI::Option* o_ngram_max = nullptr;
    CLI::Option* o_stopwords = nullptr;
    CLI::Option* o_headings = nullptr;
    CLI::Option* o_min_jpt = nullptr;
    CLI::Option* o_loo_idf = nullptr;
    CLI::Option* o_workers = nullptr;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "key = value config file");
        o_threshold = cmd->add_option("--threshold", threshold,
                                      "specialist threshold (default 0.75)");
        o_rank_window = cmd->add_option("--rank-window", rank_window,
                                        "cross-field rank window (default 5)");
        o_min_articles = cmd->add_option("--min-articles", min_articles,
                                         "report-time article minimum (default 100)");
        o_ngram_max = cmd->add_option("--ngram-max", ngram_max, "max n-gram length (default 3)");
        o_stopwords = cmd->add_option("--stopwords", stopwords_path, "stopword list file");
        o_headings = cmd->add_option("--headings", headings_path, "abstract headings file");
        o_min_jpt = cmd->add_option("--min-journals-per-term", min_journals_per_term,
                                    "prune terms in fewer journals (default 1)");
        o_loo_idf = cmd->add_flag("--loo-recompute-idf", loo_recompute_idf,
                                  "recompute IDF during leave-one-out");
        o_workers = cmd->add_option("--workers", workers, "worker threads (default 1)");
    }

    Config resolve() const {
        Config cfg;
        std::string file = config_path;
        if (file.empty()) {
            if (const char* env = std::getenv("SCOPEAUDIT_CONFIG")) file = env;
        }
        if (!file.empty())
            for (const auto& [key, value] : Config::parse_file(file)) cfg.apply(key, value);
        if (o_threshold && o_threshold->count()) cfg.threshold = threshold;
        if (o_rank_window && o_rank_window->count()) cfg.rank_window = rank_window;
        if (o_min_articles && o_min_articles->count()) cfg.min_articles = min_articles;
        if (o_ngram_max && o_ngram_max->count()) cfg.ngram_max = ngram_max;
        if (o_stopwords && o_stopwords->count()) cfg.stopwords_path = stopwords_path;
        if (o_headings && o_headings->count()) cfg.headings_path = headings_path;
        if (o_min_jpt && o_min_jpt->count()) cfg.min_journals_per_term = min_journals_per_term;
        if (o_loo_idf && o_loo_idf->count()) cfg.loo_recompute_idf = loo_recompute_idf;
        if (o_workers && o_workers->count()) cfg.workers = workers;
        cfg.validate();
        return cfg;
    }
};

struct CorpusPaths {
    std::string dir;
    std::string registry_override;

    void attach(CLI::App* cmd) {
        cmd->add_option("--corpus", dir, "corpus directory (articles.jsonl, journals.jsonl, registry.jsonl)")
            ->required();
        cmd->add_option("--registry", registry_override, "registry file (default <corpus>/registry.jsonl)");
    }

    Corpus load(bool lenient = false, LoadReport* report = nullptr) const {
        fs::path base(dir);
        std::string registry = registry_override.empty()
                                   ? (base / "registry.jsonl").string()
                                   : registry_override;
        return Corpus::load((base / "articles.jsonl").string(),
                            (base / "journals.jsonl").string(), registry, {lenient}, report);
    }
};

ExportFormat parse_format(const std::string& format) {
    if (format == "csv") return ExportFormat::csv;
    if (format == "jsonl") return ExportFormat::jsonl;
    throw ConfigError("unknown format '" + format + "' (expected csv or jsonl)");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CorpusError("cannot write file: " + path);
    out << content;
}

TextPrepOptions make_textprep(const Config& cfg, StopwordList& stop_storage,
                              CleaningRules& rules_storage) {
    TextPrepOptions opts;
    if (!cfg.stopwords_path.empty()) {
        stop_storage = StopwordList::load(cfg.stopwords_path);
        opts.stopwords = &stop_storage;
    }
    if (!cfg.headings_path.empty()) {
        rules_storage = CleaningRules::load(cfg.headings_path);
        opts.rules = &rules_storage;
    }
    opts.ngram_max = cfg.ngram_max;
    return opts;
}

std::optional<int> year_option(int year, CLI::Option* opt) {
    if (opt && opt->count()) return year;
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scopeaudit: audit journal subject classifications against publishing practice"};
    app.require_subcommand(1);

    // validate
    auto* cmd_validate = app.add_subcommand("validate", "load a corpus and report errors");
    CorpusPaths validate_paths;
    validate_paths.attach(cmd_validate);
    bool lenient = false;
    cmd_validate->add_flag("--lenient", lenient, "drop and report bad records instead of failing");

    // stats
    auto* cmd_stats = app.add_subcommand("stats", "per-field descriptive statistics");
    CorpusPaths stats_paths;
    stats_paths.attach(cmd_stats);
    std::string stats_out;
    cmd_stats->add_option("--out", stats_out, "output file (default stdout)");

    // query
    auto* cmd_query = app.add_subcommand("query", "print the database query template for a field");
    int query_field = 0;
    int query_year = 0;
    cmd_query->add_option("field", query_field, "4-digit field code")->required();
    auto* o_query_year = cmd_query->add_option("--year", query_year, "restrict to one year");

    // vectors
    auto* cmd_vectors = app.add_subcommand("vectors", "build and persist the vector store");
    CorpusPaths vectors_paths;
    vectors_paths.attach(cmd_vectors);
    ConfigFlags vectors_flags;
    vectors_flags.attach(cmd_vectors);
    std::string vectors_out;
    cmd_vectors->add_option("--out", vectors_out, "store file or directory")->required();

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "similarity, practice and relation exports");
    CorpusPaths classify_paths;
    classify_paths.attach(cmd_classify);
    ConfigFlags classify_flags;
    classify_flags.attach(cmd_classify);
    std::string classify_out, classify_store, classify_format = "csv";
    cmd_classify->add_option("--out", classify_out, "output directory")->required();
    cmd_classify->add_option("--vectors", classify_store, "reuse a persisted vector store");
    cmd_classify->add_option("--format", classify_format, "csv or jsonl");

    // report dist|general|oof
    auto* cmd_report = app.add_subcommand("report", "analytical reports");
    cmd_report->require_subcommand(1);

    auto* cmd_dist = cmd_report->add_subcommand("dist", "practice distribution per field");
    CorpusPaths dist_paths;
    dist_paths.attach(cmd_dist);
    ConfigFlags dist_flags;
    dist_flags.attach(cmd_dist);
    std::string dist_view = "specialist", dist_out, dist_format = "csv";
    int dist_min_journals = 1, dist_year = 0;
    cmd_dist->add_option("--view", dist_view,
                         "specialist|specialist+general|cross_field|general|out_of_field");
    cmd_dist->add_option("--min-journals", dist_min_journals, "minimum journals per row");
    auto* o_dist_year = cmd_dist->add_option("--year", dist_year, "count only this year's articles");
    cmd_dist->add_option("--out", dist_out, "output file (default stdout)");
    cmd_dist->add_option("--format", dist_format, "csv or jsonl");

    auto* cmd_general = cmd_report->add_subcommand("general", "general (1000-only) journal report");
    CorpusPaths general_paths;
    general_paths.attach(cmd_general);
    ConfigFlags general_flags;
    general_flags.attach(cmd_general);
    std::string general_out, general_format = "csv";
    int general_year = 0;
    auto* o_general_year =
        cmd_general->add_option("--year", general_year, "count only this year's articles");
    cmd_general->add_option("--out", general_out, "output file (default stdout)");
    cmd_general->add_option("--format", general_format, "csv or jsonl");

    auto* cmd_oof = cmd_report->add_subcommand("oof", "out-of-field journals for one field");
    CorpusPaths oof_paths;
    oof_paths.attach(cmd_oof);
    ConfigFlags oof_flags;
    oof_flags.attach(cmd_oof);
    int oof_field = 0, oof_year = 0;
    std::string oof_out, oof_format = "csv";
    cmd_oof->add_option("--field", oof_field, "4-digit field code")->required();
    auto* o_oof_year = cmd_oof->add_option("--year", oof_year, "count only this year's articles");
    cmd_oof->add_option("--out", oof_out, "output file (default stdout)");
    cmd_oof->add_option("--format", oof_format, "csv or jsonl");

    // explain
    auto* cmd_explain = app.add_subcommand("explain", "top terms behind a journal-field similarity");
    CorpusPaths explain_paths;
    explain_paths.attach(cmd_explain);
    ConfigFlags explain_flags;
    explain_flags.attach(cmd_explain);
    std::string explain_journal, explain_out, explain_format = "csv";
    int explain_field = 0, explain_k = 20;
    cmd_explain->add_option("journal", explain_journal, "journal id")->required();
    cmd_explain->add_option("field", explain_field, "4-digit field code")->required();
    cmd_explain->add_option("-k,--top", explain_k, "number of terms (default 20)");
    cmd_explain->add_option("--out", explain_out, "output file (default stdout)");
    cmd_explain->add_option("--format", explain_format, "csv or jsonl");

    // synth
    auto* cmd_synth = app.add_subcommand("synth", "generate a synthetic corpus with ground truth");
    std::string synth_spec, synth_out;
    std::uint64_t synth_seed = 0;
    cmd_synth->add_option("specfile", synth_spec, "JSON plant spec")->required();
    cmd_synth->add_option("--out", synth_out, "output directory")->required();
    auto* o_synth_seed = cmd_synth->add_option("--seed", synth_seed, "override the spec seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 2;
    }

    try {
        if (*cmd_validate) {
            LoadReport report;
            Corpus corpus = validate_paths.load(lenient, &report);
            for (const auto& msg : report.dropped) std::cerr << "dropped: " << msg << "\n";
            std::cout << "ok: " << corpus.journals().size() << " journals, "
                      << corpus.articles().size() << " articles, "
                      << corpus.populated_fields().size() << " populated fields\n";
            return 0;
        }
        if (*cmd_stats) {
            Corpus corpus = stats_paths.load();
            std::string csv = stats_to_csv(corpus_stats(corpus));
            if (stats_out.empty()) std::cout << csv;
            else write_file(stats_out, csv);
            return 0;
        }
        if (*cmd_query) {
            std::cout << build_scopus_query(FieldRegistry::bundled(), query_field,
                                            year_option(query_year, o_query_year))
                      << "\n";
            return 0;
        }
        if (*cmd_vectors) {
            Config cfg = vectors_flags.resolve();
            Corpus corpus = vectors_paths.load();
            StopwordList stop_storage;
            CleaningRules rules_storage;
            TextPrepOptions opts = make_textprep(cfg, stop_storage, rules_storage);
            VectorModel model = build_model(corpus, opts, cfg.min_journals_per_term, cfg.workers);
            fs::path out(vectors_out);
            if (fs::is_directory(out) || vectors_out.back() == '/') {
                fs::create_directories(out);
                out /= "vectors.bin";
            }
            save_vector_store(out.string(), model);
            std::cout << "wrote " << out.string() << " (" << model.dict.size() << " terms, "
                      << model.tfs.size() << " journals)\n";
            return 0;
        }
        if (*cmd_classify) {
            Config cfg = classify_flags.resolve();
            ExportFormat format = parse_format(classify_format);
            Corpus corpus = classify_paths.load();
            StopwordList stop_storage;
            CleaningRules rules_storage;
            TextPrepOptions opts = make_textprep(cfg, stop_storage, rules_storage);
            VectorModel model =
                classify_store.empty()
                    ? build_model(corpus, opts, cfg.min_journals_per_term, cfg.workers)
                    : load_vector_store(classify_store, corpus);
            ClassifyOptions copts{cfg.threshold, cfg.rank_window, cfg.loo_recompute_idf,
                                  cfg.min_journals_per_term, cfg.workers};
            std::vector<Classification> cls = classify_corpus(model, copts);
            fs::create_directories(classify_out);
            std::string ext = format == ExportFormat::csv ? ".csv" : ".jsonl";
            fs::path out(classify_out);
            write_file((out / ("similarity" + ext)).string(), export_similarities(cls, format));
            write_file((out / ("classification" + ext)).string(),
                       export_classifications(corpus, cls, format));
            std::cout << "wrote " << (out / ("similarity" + ext)).string() << " and "
                      << (out / ("classification" + ext)).string() << "\n";
            return 0;
        }
        if (*cmd_dist || *cmd_general || *cmd_oof) {
            CorpusPaths& paths = *cmd_dist ? dist_paths : (*cmd_general ? general_paths : oof_paths);
            ConfigFlags& flags = *cmd_dist ? dist_flags : (*cmd_general ? general_flags : oof_flags);
            Config cfg = flags.resolve();
            Corpus corpus = paths.load();
            StopwordList stop_storage;
            CleaningRules rules_storage;
            TextPrepOptions opts = make_textprep(cfg, stop_storage, rules_storage);
            VectorModel model = build_model(corpus, opts, cfg.min_journals_per_term, cfg.workers);
            ClassifyOptions copts{cfg.threshold, cfg.rank_window, cfg.loo_recompute_idf,
                                  cfg.min_journals_per_term, cfg.workers};
            std::vector<Classification> cls = classify_corpus(model, copts);

            std::string output;
            std::string out_path;
            if (*cmd_dist) {
                DistributionView view;
                if (dist_view == "specialist") view = DistributionView::specialist();
                else if (dist_view == "specialist+general") view = DistributionView::specialist_and_general();
                else if (dist_view == "cross_field") view = DistributionView::cross_field();
                else if (dist_view == "general") view = DistributionView::general();
                else if (dist_view == "out_of_field") view = DistributionView::out_of_field_view();
                else throw ConfigError("unknown view '" + dist_view + "'");
                auto rows = practice_distribution(corpus, cls, view, cfg.min_articles,
                                                  std::size_t(dist_min_journals),
                                                  year_option(dist_year, o_dist_year));
                output = export_distribution(rows, parse_format(dist_format));
                out_path = dist_out;
            } else if (*cmd_general) {
                auto rows = general_journal_report(corpus, cls, cfg.min_articles,
                                                   year_option(general_year, o_general_year));
                output = export_general_report(rows, parse_format(general_format));
                out_path = general_out;
            } else {
                auto rows = out_of_field_table(oof_field, corpus, cls, cfg.min_articles,
                                               year_option(oof_year, o_oof_year));
                output = export_out_of_field(rows, parse_format(oof_format));
                out_path = oof_out;
            }
            if (out_path.empty()) std::cout << output;
            else write_file(out_path, output);
            return 0;
        }
        if (*cmd_explain) {
            Config cfg = explain_flags.resolve();
            Corpus corpus = explain_paths.load();
            StopwordList stop_storage;
            CleaningRules rules_storage;
            TextPrepOptions opts = make_textprep(cfg, stop_storage, rules_storage);
            VectorModel model = build_model(corpus, opts, cfg.min_journals_per_term, cfg.workers);
            auto rows = explain_similarity(model, explain_journal, explain_field, explain_k,
                                           cfg.loo_recompute_idf, cfg.min_journals_per_term);
            std::string output = export_explanation(rows, parse_format(explain_format));
            if (explain_out.empty()) std::cout << output;
            else write_file(explain_out, output);
            return 0;
        }
        if (*cmd_synth) {
            PlantSpec spec = PlantSpec::from_json_file(synth_spec);
            if (o_synth_seed->count()) spec.seed = synth_seed;
            SyntheticCorpus synth = generate(spec);
            write_synthetic_corpus(synth, synth_out);
            std::cout << "wrote synthetic corpus to " << synth_out << " ("
                      << synth.corpus.journals().size() << " journals, "
                      << synth.corpus.articles().size() << " articles)\n";
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
