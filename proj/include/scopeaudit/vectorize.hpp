#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "scopeaudit/corpus.hpp"
#include "scopeaudit/textprep.hpp"

namespace scopeaudit {

using TermId = std::uint32_t;

class VectorizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bidirectional term text <-> dense id association; ids contiguous from 0 in
// lexicographic term order, so a given corpus always yields the same ids.
class TermDictionary {
public:
    TermDictionary() = default;
    explicit TermDictionary(std::vector<std::string> sorted_terms);

    std::size_t size() const { return terms_.size(); }
    const std::string& term(TermId id) const { return terms_.at(id); }
    TermId id(const std::string& term) const;
    bool contains(const std::string& term) const { return ids_.count(term) > 0; }

private:
    std::vector<std::string> terms_;
    std::unordered_map<std::string, TermId> ids_;
};

struct TextPrepOptions {
    const StopwordList* stopwords = &StopwordList::defaults();
    const CleaningRules* rules = &CleaningRules::defaults();
    int ngram_max = 3;
};

// Per-journal article-presence counts: counts[t] = number of the journal's
// articles whose term set contains t. Entries sorted by term id.
struct JournalTf {
    std::string journal_id;
    std::vector<std::pair<TermId, std::uint32_t>> counts;

    std::uint32_t count(TermId id) const;
};

// idf[t] = log(N / n_t), natural log; entries below the min-journals cutoff
// hold the pruned sentinel.
struct IdfTable {
    static constexpr double kPruned = -1.0;

    std::size_t journal_count = 0;
    std::vector<double> idf;

    bool pruned(TermId id) const { return idf[id] == kPruned; }
};

// Term id -> positive weight, sorted by term id. No explicit zero entries.
struct SparseVector {
    std::vector<std::pair<TermId, double>> entries;

    double norm() const;
    bool empty() const { return entries.empty(); }
    double weight(TermId id) const;
};

TermDictionary build_dictionary(const Corpus& corpus, const TextPrepOptions& opts);

JournalTf journal_tf(const Corpus& corpus, const std::string& journal_id,
                     const TermDictionary& dict, const TextPrepOptions& opts);

// tfs must cover all journals of the corpus, ascending journal_id.
IdfTable compute_idf(const std::vector<JournalTf>& tfs, std::size_t dict_size,
                     int min_journals_per_term = 1);

// IDF over all journals except one (for leave-one-out sensitivity analysis).
IdfTable compute_idf_excluding(const std::vector<JournalTf>& tfs, std::size_t dict_size,
                               const std::string& exclude_journal_id,
                               int min_journals_per_term = 1);

SparseVector journal_vector(const JournalTf& tf, const IdfTable& idf);

// Field centroid: TF_F(t) = sum over member journals (ascending journal_id)
// of counts_j[t] / f_j, then multiplied by idf. Deterministic summation order.
SparseVector field_vector(const Corpus& corpus, int field_code,
                          const std::vector<JournalTf>& tfs, const IdfTable& idf);

// field_vector over the field's members minus one journal, same IDF table.
SparseVector loo_field_vector(const Corpus& corpus, int field_code,
                              const std::string& exclude_journal_id,
                              const std::vector<JournalTf>& tfs, const IdfTable& idf);

// Everything downstream stages need, built once per corpus.
struct VectorModel {
    const Corpus* corpus = nullptr;
    TermDictionary dict;
    std::vector<JournalTf> tfs;  // ascending journal_id, one per journal
    IdfTable idf;
    std::map<std::string, SparseVector> journal_vectors;
    std::map<int, SparseVector> field_vectors;  // populated fields only

    const JournalTf& tf_of(const std::string& journal_id) const;
};

// Identical output for any worker count.
VectorModel build_model(const Corpus& corpus, const TextPrepOptions& opts,
                        int min_journals_per_term = 1, int workers = 1);

// Versioned binary dump of dictionary + IDF + journal TF tables; field and
// journal vectors are rebuilt deterministically on load.
void save_vector_store(const std::string& path, const VectorModel& model);
VectorModel load_vector_store(const std::string& path, const Corpus& corpus);

}  // namespace scopeaudit
