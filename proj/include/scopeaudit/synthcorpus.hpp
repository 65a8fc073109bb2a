#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scopeaudit/corpus.hpp"
#include "scopeaudit/similarity.hpp"

namespace scopeaudit {

// Portable deterministic generator (splitmix64). Fixed constants so fixtures
// reproduce bit-identically on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) via rejection-free modulo of the high bits.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    // Uniform in [0, 1).
    double next_double() { return double(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

struct PlantField {
    int code = 0;
    std::size_t vocab_size = 0;
};

struct PlantJournal {
    std::string journal_id;
    std::vector<int> asjc_codes;
    std::size_t article_count = 0;
    // Parallel to the spec's field list; non-negative, sums to 1.
    std::vector<double> mixture;
};

struct PlantSpec {
    std::uint64_t seed = 0;
    std::size_t tokens_per_article = 30;
    int year = 2022;
    std::vector<PlantField> fields;
    std::vector<PlantJournal> journals;

    static PlantSpec from_json_file(const std::string& path);
    void validate() const;  // throws CorpusError on bad mixtures
};

struct GroundTruth {
    std::string journal_id;
    ScopusType scopus_type = ScopusType::specialist;
    PracticeLabel label = PracticeLabel::unrelated;
    // Field the label applies to; 0 means "whichever field ranks first".
    int field_code = 0;
    bool has_label = false;  // mixtures outside the guaranteed regimes carry none
};

struct SyntheticCorpus {
    Corpus corpus;
    std::vector<GroundTruth> truth;
};

// Same spec -> bit-identical corpus. Vocabularies are pairwise disjoint
// ("f<code>t<n>" words), so planted classifications are recoverable.
SyntheticCorpus generate(const PlantSpec& spec);

// Writes articles/journals/registry files in the corpus module's formats,
// plus ground_truth.csv.
void write_synthetic_corpus(const SyntheticCorpus& synth, const std::string& out_dir);

}  // namespace scopeaudit
