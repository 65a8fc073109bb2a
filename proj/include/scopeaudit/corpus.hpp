#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scopeaudit/asjc.hpp"

namespace scopeaudit {

struct ArticleRecord {
    std::string article_id;
    std::string journal_id;
    std::string title;
    std::string abstract;  // may be empty
    int year = 0;
};

struct JournalRecord {
    std::string journal_id;
    std::string name;
    std::vector<int> asjc_codes;  // sorted, unique, 1..11 entries

    bool in_field(int code) const;
    // f_j: the number of narrow fields the journal is classified into.
    std::size_t field_count() const { return asjc_codes.size(); }
};

class CorpusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LoadOptions {
    // With lenient=true invalid records are dropped (and reported) instead of
    // aborting the load.
    bool lenient = false;
};

struct LoadReport {
    std::vector<std::string> dropped;  // one message per dropped record
};

// Immutable, validated view of articles + journals + field registry.
class Corpus {
public:
    static Corpus load(const std::string& articles_path,
                       const std::string& journals_path,
                       const std::string& registry_path,
                       const LoadOptions& options = {},
                       LoadReport* report = nullptr);

    // Builds from in-memory records, running the same validation as load().
    static Corpus build(std::vector<ArticleRecord> articles,
                        std::vector<JournalRecord> journals,
                        FieldRegistry registry,
                        const LoadOptions& options = {},
                        LoadReport* report = nullptr);

    // Canonical serialization: load(save(c)) is byte-identical to save(c).
    void save(const std::string& articles_path,
              const std::string& journals_path,
              const std::string& registry_path) const;

    const std::vector<ArticleRecord>& articles() const { return articles_; }
    const std::vector<JournalRecord>& journals() const { return journals_; }
    const FieldRegistry& registry() const { return registry_; }

    const JournalRecord* find_journal(const std::string& journal_id) const;
    const JournalRecord& journal(const std::string& journal_id) const;

    // Indices of the journal's articles within articles().
    const std::vector<std::size_t>& articles_of(const std::string& journal_id) const;

    std::size_t article_count(const std::string& journal_id,
                              std::optional<int> year = std::nullopt) const;

    // Journal ids classified into the field, ascending. Empty for unpopulated fields.
    const std::vector<std::string>& journals_in_field(int field_code) const;

    // Field codes with at least one member journal, ascending.
    std::vector<int> populated_fields() const;

private:
    Corpus() = default;
    void build_indices();

    std::vector<ArticleRecord> articles_;   // sorted by article_id
    std::vector<JournalRecord> journals_;   // sorted by journal_id
    FieldRegistry registry_;
    std::map<std::string, std::vector<std::size_t>> articles_by_journal_;
    std::map<int, std::vector<std::string>> journals_by_field_;
};

struct FieldStatsRow {
    int field = 0;
    std::size_t journals = 0;
    std::size_t articles = 0;
    double articles_per_journal = 0.0;
};

struct FieldStats {
    std::vector<FieldStatsRow> rows;  // one per populated field, ascending code
    // Summary across fields. Totals whole-count multiply classified items.
    double min_journals = 0, max_journals = 0, mean_journals = 0;
    double min_articles = 0, max_articles = 0, mean_articles = 0;
    double min_apj = 0, max_apj = 0, mean_apj = 0;
    std::size_t total_journals = 0, total_articles = 0;
};

FieldStats corpus_stats(const Corpus& corpus);

// CSV with header: field,journals,articles,articles_per_journal plus
// min/max/mean/total summary rows.
std::string stats_to_csv(const FieldStats& stats);

// Database query template for one narrow field, optionally year-restricted.
std::string build_scopus_query(const FieldRegistry& registry, int field_code,
                               std::optional<int> year = std::nullopt);

}  // namespace scopeaudit
