#pragma once

#include <map>
#include <string>
#include <vector>

#include "scopeaudit/vectorize.hpp"

namespace scopeaudit {

// Journal type as declared by its ASJC codes.
enum class ScopusType { specialist, cross_field, general };

// Journal type as inferred from its articles' text, per narrow field.
enum class PracticeLabel {
    specialist_practice,
    specialist_and_crossfield_practice,
    crossfield_practice,
    unrelated,
};

enum class RelationLabel { in_field, out_of_field, not_applicable };

const char* to_string(ScopusType t);
const char* to_string(PracticeLabel l);
const char* to_string(RelationLabel l);

struct SimilarityRow {
    std::string journal_id;
    int field_code = 0;
    double cosine = 0.0;
    bool loo_applied = false;  // true iff the journal is a member of the field
};

// Standard cosine over sparse non-negative vectors; 0 if either is empty.
double cosine(const SparseVector& u, const SparseVector& v);

ScopusType scopus_type(const JournalRecord& journal);

// Holds code 1000 alongside other codes (cross_field by definition, but
// ostensibly partly general).
bool partly_general(const JournalRecord& journal);

RelationLabel relation(const JournalRecord& journal, int field_code);

// All populated fields sorted by cosine descending, ties by ascending code.
// Member fields use the leave-one-out centroid.
std::vector<SimilarityRow> rank_fields(const VectorModel& model,
                                       const std::string& journal_id,
                                       bool loo_recompute_idf = false,
                                       int min_journals_per_term = 1);

// Practice labels per field from a ranked similarity list. With top
// similarity 0 every field is unrelated.
std::map<int, PracticeLabel> classify_practice(const std::vector<SimilarityRow>& ranked,
                                               double threshold = 0.75,
                                               int rank_window = 5);

struct MultidisciplinaryRatio {
    double ratio = 0.0;       // cosine with field 1000 / highest field cosine
    int closest_field = 0;    // top-ranked field
    bool undefined = false;   // highest cosine was 0
};

// Requires field 1000 to be present in the ranking.
MultidisciplinaryRatio multidisciplinary_ratio(const std::vector<SimilarityRow>& ranked);

// Full per-journal classification produced by the pipeline.
struct Classification {
    std::string journal_id;
    ScopusType type = ScopusType::specialist;
    bool partly_general = false;
    std::vector<SimilarityRow> ranked;
    std::map<int, PracticeLabel> labels;
};

struct ClassifyOptions {
    double threshold = 0.75;
    int rank_window = 5;
    bool loo_recompute_idf = false;
    int min_journals_per_term = 1;
    int workers = 1;
};

// One Classification per journal, ascending journal_id; schedule-independent.
std::vector<Classification> classify_corpus(const VectorModel& model,
                                            const ClassifyOptions& options = {});

}  // namespace scopeaudit
