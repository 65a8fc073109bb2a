#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scopeaudit/similarity.hpp"

namespace scopeaudit {

enum class ExportFormat { csv, jsonl };

struct DistributionRow {
    int field = 0;
    std::size_t journals = 0;
    std::size_t specialist = 0;
    std::size_t specialist_crossfield = 0;
    std::size_t crossfield = 0;
    std::size_t unrelated = 0;
    double pct_specialist = 0, pct_specialist_crossfield = 0;
    double pct_crossfield = 0, pct_unrelated = 0;
};

// Which journals a distribution covers and how they map to field rows.
// Scopus-type views put a journal on the row of each of its declared fields;
// the out-of-field view puts it once on its top practice field.
struct DistributionView {
    std::set<ScopusType> scopus_types;  // ignored when out_of_field
    bool out_of_field = false;

    static DistributionView specialist() { return {{ScopusType::specialist}, false}; }
    static DistributionView specialist_and_general() {
        return {{ScopusType::specialist, ScopusType::general}, false};
    }
    static DistributionView cross_field() { return {{ScopusType::cross_field}, false}; }
    static DistributionView general() { return {{ScopusType::general}, false}; }
    static DistributionView out_of_field_view() { return {{}, true}; }
};

std::vector<DistributionRow> practice_distribution(
    const Corpus& corpus, const std::vector<Classification>& classifications,
    const DistributionView& view, std::size_t min_articles = 100,
    std::size_t min_journals = 1, std::optional<int> year = std::nullopt);

struct GeneralJournalRow {
    std::string journal_id;
    std::string name;
    std::size_t articles = 0;
    double ratio = 0.0;       // similarity with 1000 / highest field similarity
    int closest_field = 0;
    bool undefined = false;
};

// Journals whose sole code is 1000, with their closest publishing field.
std::vector<GeneralJournalRow> general_journal_report(
    const Corpus& corpus, const std::vector<Classification>& classifications,
    std::size_t min_articles = 100, std::optional<int> year = std::nullopt);

struct OutOfFieldRow {
    std::string journal_id;
    std::string name;
    std::size_t articles = 0;
    std::vector<int> asjc_codes;
};

// Journals outside the field by Scopus but with the field among their top
// practice fields.
std::vector<OutOfFieldRow> out_of_field_table(
    int field_code, const Corpus& corpus,
    const std::vector<Classification>& classifications,
    std::size_t min_articles = 100, std::optional<int> year = std::nullopt);

struct ExplanationRow {
    std::string term;
    double journal_weight = 0.0;
    double field_weight = 0.0;
    double contribution = 0.0;  // addend in the cosine numerator
};

// Top-k terms by contribution to the journal-field cosine numerator
// (leave-one-out centroid for member fields). k < 0 returns all.
std::vector<ExplanationRow> explain_similarity(const VectorModel& model,
                                               const std::string& journal_id,
                                               int field_code, int k,
                                               bool loo_recompute_idf = false,
                                               int min_journals_per_term = 1);

// Export writers. Column sets are fixed; doubles use shortest round-trip form.
std::string export_similarities(const std::vector<Classification>& classifications,
                                ExportFormat format);
std::string export_classifications(const Corpus& corpus,
                                   const std::vector<Classification>& classifications,
                                   ExportFormat format);
std::string export_distribution(const std::vector<DistributionRow>& rows,
                                ExportFormat format);
std::string export_general_report(const std::vector<GeneralJournalRow>& rows,
                                  ExportFormat format);
std::string export_out_of_field(const std::vector<OutOfFieldRow>& rows,
                                ExportFormat format);
std::string export_explanation(const std::vector<ExplanationRow>& rows,
                               ExportFormat format);

}  // namespace scopeaudit
