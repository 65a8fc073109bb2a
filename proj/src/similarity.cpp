#include "scopeaudit/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace scopeaudit {

const char* to_string(ScopusType t) {
    switch (t) {
        case ScopusType::specialist: return "specialist";
        case ScopusType::cross_field: return "cross_field";
        case ScopusType::general: return "general";
    }
    return "?";
}

const char* to_string(PracticeLabel l) {
    switch (l) {
        case PracticeLabel::specialist_practice: return "specialist_practice";
        case PracticeLabel::specialist_and_crossfield_practice:
            return "specialist_and_crossfield_practice";
        case PracticeLabel::crossfield_practice: return "crossfield_practice";
        case PracticeLabel::unrelated: return "unrelated";
    }
    return "?";
}

const char* to_string(RelationLabel l) {
    switch (l) {
        case RelationLabel::in_field: return "in_field";
        case RelationLabel::out_of_field: return "out_of_field";
        case RelationLabel::not_applicable: return "not_applicable";
    }
    return "?";
}

double cosine(const SparseVector& u, const SparseVector& v) {
    if (u.empty() || v.empty()) return 0.0;
    double dot = 0;
    auto iu = u.entries.begin();
    auto iv = v.entries.begin();
    while (iu != u.entries.end() && iv != v.entries.end()) {
        if (iu->first < iv->first) ++iu;
        else if (iv->first < iu->first) ++iv;
        else {
            dot += iu->second * iv->second;
            ++iu;
            ++iv;
        }
    }
    if (dot == 0) return 0.0;
    double c = dot / (u.norm() * v.norm());
    return std::clamp(c, 0.0, 1.0);
}

ScopusType scopus_type(const JournalRecord& journal) {
    if (journal.asjc_codes.size() == 1 && journal.asjc_codes[0] == kMultidisciplinaryCode)
        return ScopusType::general;
    return journal.asjc_codes.size() == 1 ? ScopusType::specialist : ScopusType::cross_field;
}

bool partly_general(const JournalRecord& journal) {
    return journal.asjc_codes.size() >= 2 && journal.in_field(kMultidisciplinaryCode);
}

RelationLabel relation(const JournalRecord& journal, int field_code) {
    if (journal.in_field(field_code)) return RelationLabel::in_field;
    if (journal.in_field(kMultidisciplinaryCode)) return RelationLabel::not_applicable;
    return RelationLabel::out_of_field;
}

std::vector<SimilarityRow> rank_fields(const VectorModel& model, const std::string& journal_id,
                                       bool loo_recompute_idf, int min_journals_per_term) {
    const Corpus& corpus = *model.corpus;
    const JournalRecord& journal = corpus.journal(journal_id);
    const SparseVector& jvec = model.journal_vectors.at(journal_id);

    std::vector<SimilarityRow> rows;
    rows.reserve(model.field_vectors.size());
    for (const auto& [code, fvec] : model.field_vectors) {
        SimilarityRow row;
        row.journal_id = journal_id;
        row.field_code = code;
        row.loo_applied = journal.in_field(code);
        if (row.loo_applied) {
            if (loo_recompute_idf) {
                IdfTable idf = compute_idf_excluding(model.tfs, model.dict.size(), journal_id,
                                                     min_journals_per_term);
                SparseVector loo = loo_field_vector(corpus, code, journal_id, model.tfs, idf);
                row.cosine = cosine(jvec, loo);
            } else {
                SparseVector loo =
                    loo_field_vector(corpus, code, journal_id, model.tfs, model.idf);
                row.cosine = cosine(jvec, loo);
            }
        } else {
            row.cosine = cosine(jvec, fvec);
        }
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const SimilarityRow& a, const SimilarityRow& b) {
        if (a.cosine != b.cosine) return a.cosine > b.cosine;
        return a.field_code < b.field_code;
    });
    return rows;
}

std::map<int, PracticeLabel> classify_practice(const std::vector<SimilarityRow>& ranked,
                                               double threshold, int rank_window) {
    std::map<int, PracticeLabel> labels;
    if (ranked.empty()) return labels;
    for (const auto& row : ranked) labels[row.field_code] = PracticeLabel::unrelated;

    double top = ranked[0].cosine;
    if (top == 0) return labels;  // no shared evidence anywhere

    double second = ranked.size() > 1 ? ranked[1].cosine : 0.0;
    labels[ranked[0].field_code] = second <= threshold * top
                                       ? PracticeLabel::specialist_practice
                                       : PracticeLabel::specialist_and_crossfield_practice;
    for (std::size_t r = 1; r < ranked.size() && r < std::size_t(rank_window); ++r)
        labels[ranked[r].field_code] = PracticeLabel::crossfield_practice;
    return labels;
}

MultidisciplinaryRatio multidisciplinary_ratio(const std::vector<SimilarityRow>& ranked) {
    const SimilarityRow* multi = nullptr;
    for (const auto& row : ranked)
        if (row.field_code == kMultidisciplinaryCode) { multi = &row; break; }
    if (!multi || ranked.empty())
        throw VectorizeError("field 1000 has no similarity row; cannot compute ratio");

    MultidisciplinaryRatio out;
    out.closest_field = ranked[0].field_code;
    if (ranked[0].cosine == 0) {
        out.undefined = true;
        out.ratio = 0.0;
        return out;
    }
    out.ratio = multi->cosine / ranked[0].cosine;
    return out;
}

std::vector<Classification> classify_corpus(const VectorModel& model,
                                            const ClassifyOptions& options) {
    const auto& journals = model.corpus->journals();
    std::vector<Classification> out(journals.size());

    auto classify_one = [&](std::size_t i) {
        const JournalRecord& j = journals[i];
        Classification c;
        c.journal_id = j.journal_id;
        c.type = scopus_type(j);
        c.partly_general = partly_general(j);
        c.ranked = rank_fields(model, j.journal_id, options.loo_recompute_idf,
                               options.min_journals_per_term);
        c.labels = classify_practice(c.ranked, options.threshold, options.rank_window);
        out[i] = std::move(c);
    };

    if (options.workers <= 1) {
        for (std::size_t i = 0; i < journals.size(); ++i) classify_one(i);
        return out;
    }
    std::size_t k = std::min<std::size_t>(options.workers, std::max<std::size_t>(journals.size(), 1));
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < k; ++w) {
        std::size_t begin = journals.size() * w / k;
        std::size_t end = journals.size() * (w + 1) / k;
        threads.emplace_back([&, begin, end] {
            for (std::size_t i = begin; i < end; ++i) classify_one(i);
        });
    }
    for (auto& t : threads) t.join();
    return out;
}

}  // namespace scopeaudit
