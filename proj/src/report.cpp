#include "scopeaudit/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

#include "fmt_util.hpp"

namespace scopeaudit {

namespace {

using detail::fmt_double;
using nlohmann::ordered_json;

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

struct LabelCounts {
    std::size_t specialist = 0, specialist_crossfield = 0, crossfield = 0, unrelated = 0;

    std::size_t total() const {
        return specialist + specialist_crossfield + crossfield + unrelated;
    }
    void bump(PracticeLabel l) {
        switch (l) {
            case PracticeLabel::specialist_practice: ++specialist; break;
            case PracticeLabel::specialist_and_crossfield_practice: ++specialist_crossfield; break;
            case PracticeLabel::crossfield_practice: ++crossfield; break;
            case PracticeLabel::unrelated: ++unrelated; break;
        }
    }
};

}  // namespace

std::vector<DistributionRow> practice_distribution(
    const Corpus& corpus, const std::vector<Classification>& classifications,
    const DistributionView& view, std::size_t min_articles, std::size_t min_journals,
    std::optional<int> year) {
    std::map<int, LabelCounts> per_field;
    for (const auto& c : classifications) {
        const JournalRecord& journal = corpus.journal(c.journal_id);
        if (corpus.article_count(c.journal_id, year) < min_articles) continue;
        if (view.out_of_field) {
            if (c.ranked.empty() || c.ranked[0].cosine == 0) continue;
            int top = c.ranked[0].field_code;
            if (relation(journal, top) != RelationLabel::out_of_field) continue;
            per_field[top].bump(c.labels.at(top));
        } else {
            if (!view.scopus_types.count(c.type)) continue;
            for (int code : journal.asjc_codes) {
                auto it = c.labels.find(code);
                if (it != c.labels.end()) per_field[code].bump(it->second);
            }
        }
    }

    std::vector<DistributionRow> rows;
    for (const auto& [code, counts] : per_field) {
        if (counts.total() < min_journals) continue;
        DistributionRow row;
        row.field = code;
        row.journals = counts.total();
        row.specialist = counts.specialist;
        row.specialist_crossfield = counts.specialist_crossfield;
        row.crossfield = counts.crossfield;
        row.unrelated = counts.unrelated;
        double n = double(row.journals);
        row.pct_specialist = 100.0 * double(counts.specialist) / n;
        row.pct_specialist_crossfield = 100.0 * double(counts.specialist_crossfield) / n;
        row.pct_crossfield = 100.0 * double(counts.crossfield) / n;
        row.pct_unrelated = 100.0 * double(counts.unrelated) / n;
        rows.push_back(row);
    }
    return rows;
}

std::vector<GeneralJournalRow> general_journal_report(
    const Corpus& corpus, const std::vector<Classification>& classifications,
    std::size_t min_articles, std::optional<int> year) {
    std::vector<GeneralJournalRow> rows;
    for (const auto& c : classifications) {
        if (c.type != ScopusType::general) continue;
        const JournalRecord& journal = corpus.journal(c.journal_id);
        std::size_t n = corpus.article_count(c.journal_id, year);
        if (n < min_articles) continue;
        MultidisciplinaryRatio ratio = multidisciplinary_ratio(c.ranked);
        GeneralJournalRow row;
        row.journal_id = c.journal_id;
        row.name = journal.name;
        row.articles = n;
        row.ratio = ratio.ratio;
        row.closest_field = ratio.closest_field;
        row.undefined = ratio.undefined;
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const GeneralJournalRow& a, const GeneralJournalRow& b) {
        if (a.closest_field != b.closest_field) return a.closest_field < b.closest_field;
        if (a.name != b.name) return a.name < b.name;
        return a.journal_id < b.journal_id;
    });
    return rows;
}

std::vector<OutOfFieldRow> out_of_field_table(
    int field_code, const Corpus& corpus, const std::vector<Classification>& classifications,
    std::size_t min_articles, std::optional<int> year) {
    if (!corpus.registry().contains(field_code))
        throw RegistryError("unknown field code " + std::to_string(field_code));
    std::vector<OutOfFieldRow> rows;
    for (const auto& c : classifications) {
        const JournalRecord& journal = corpus.journal(c.journal_id);
        if (relation(journal, field_code) != RelationLabel::out_of_field) continue;
        auto it = c.labels.find(field_code);
        if (it == c.labels.end() || it->second == PracticeLabel::unrelated) continue;
        std::size_t n = corpus.article_count(c.journal_id, year);
        if (n < min_articles) continue;
        rows.push_back({c.journal_id, journal.name, n, journal.asjc_codes});
    }
    std::sort(rows.begin(), rows.end(), [](const OutOfFieldRow& a, const OutOfFieldRow& b) {
        if (a.asjc_codes != b.asjc_codes) return a.asjc_codes < b.asjc_codes;
        if (a.name != b.name) return a.name < b.name;
        return a.journal_id < b.journal_id;
    });
    return rows;
}

std::vector<ExplanationRow> explain_similarity(const VectorModel& model,
                                               const std::string& journal_id, int field_code,
                                               int k, bool loo_recompute_idf,
                                               int min_journals_per_term) {
    const Corpus& corpus = *model.corpus;
    const JournalRecord& journal = corpus.journal(journal_id);
    auto fit = model.field_vectors.find(field_code);
    if (fit == model.field_vectors.end())
        throw VectorizeError("field " + std::to_string(field_code) +
                             " has no vector (no member journals)");

    const SparseVector& jvec = model.journal_vectors.at(journal_id);
    SparseVector loo;
    const SparseVector* fvec = &fit->second;
    if (journal.in_field(field_code)) {
        if (loo_recompute_idf) {
            IdfTable idf = compute_idf_excluding(model.tfs, model.dict.size(), journal_id,
                                                 min_journals_per_term);
            loo = loo_field_vector(corpus, field_code, journal_id, model.tfs, idf);
        } else {
            loo = loo_field_vector(corpus, field_code, journal_id, model.tfs, model.idf);
        }
        fvec = &loo;
    }

    std::vector<ExplanationRow> rows;
    auto iu = jvec.entries.begin();
    auto iv = fvec->entries.begin();
    while (iu != jvec.entries.end() && iv != fvec->entries.end()) {
        if (iu->first < iv->first) ++iu;
        else if (iv->first < iu->first) ++iv;
        else {
            double contribution = iu->second * iv->second;
            if (contribution > 0)
                rows.push_back({model.dict.term(iu->first), iu->second, iv->second, contribution});
            ++iu;
            ++iv;
        }
    }
    std::sort(rows.begin(), rows.end(), [](const ExplanationRow& a, const ExplanationRow& b) {
        if (a.contribution != b.contribution) return a.contribution > b.contribution;
        return a.term < b.term;
    });
    if (k >= 0 && rows.size() > std::size_t(k)) rows.resize(std::size_t(k));
    return rows;
}

std::string export_similarities(const std::vector<Classification>& classifications,
                                ExportFormat format) {
    std::ostringstream out;
    if (format == ExportFormat::csv) out << "journal_id,field_code,cosine,loo_applied,rank\n";
    for (const auto& c : classifications) {
        for (std::size_t r = 0; r < c.ranked.size(); ++r) {
            const SimilarityRow& row = c.ranked[r];
            if (format == ExportFormat::csv) {
                out << csv_quote(row.journal_id) << ',' << row.field_code << ','
                    << fmt_double(row.cosine) << ',' << (row.loo_applied ? "true" : "false") << ','
                    << (r + 1) << '\n';
            } else {
                ordered_json j{{"journal_id", row.journal_id}, {"field_code", row.field_code},
                               {"cosine", row.cosine},         {"loo_applied", row.loo_applied},
                               {"rank", r + 1}};
                out << j.dump() << '\n';
            }
        }
    }
    return out.str();
}

std::string export_classifications(const Corpus& corpus,
                                   const std::vector<Classification>& classifications,
                                   ExportFormat format) {
    std::ostringstream out;
    if (format == ExportFormat::csv)
        out << "journal_id,scopus_type,field_code,practice_label,relation_label,partly_general\n";
    for (const auto& c : classifications) {
        const JournalRecord& journal = corpus.journal(c.journal_id);
        for (const auto& [code, label] : c.labels) {
            RelationLabel rel = relation(journal, code);
            if (format == ExportFormat::csv) {
                out << csv_quote(c.journal_id) << ',' << to_string(c.type) << ',' << code << ','
                    << to_string(label) << ',' << to_string(rel) << ','
                    << (c.partly_general ? "true" : "false") << '\n';
            } else {
                ordered_json j{{"journal_id", c.journal_id},
                               {"scopus_type", to_string(c.type)},
                               {"field_code", code},
                               {"practice_label", to_string(label)},
                               {"relation_label", to_string(rel)},
                               {"partly_general", c.partly_general}};
                out << j.dump() << '\n';
            }
        }
    }
    return out.str();
}

std::string export_distribution(const std::vector<DistributionRow>& rows, ExportFormat format) {
    std::ostringstream out;
    if (format == ExportFormat::csv)
        out << "field,journals,specialist,specialist_crossfield,crossfield,unrelated,"
               "pct_specialist,pct_specialist_crossfield,pct_crossfield,pct_unrelated\n";
    for (const auto& r : rows) {
        if (format == ExportFormat::csv) {
            out << r.field << ',' << r.journals << ',' << r.specialist << ','
                << r.specialist_crossfield << ',' << r.crossfield << ',' << r.unrelated << ','
                << fmt_double(r.pct_specialist) << ',' << fmt_double(r.pct_specialist_crossfield)
                << ',' << fmt_double(r.pct_crossfield) << ',' << fmt_double(r.pct_unrelated)
                << '\n';
        } else {
            ordered_json j{{"field", r.field},
                           {"journals", r.journals},
                           {"specialist", r.specialist},
                           {"specialist_crossfield", r.specialist_crossfield},
                           {"crossfield", r.crossfield},
                           {"unrelated", r.unrelated},
                           {"pct_specialist", r.pct_specialist},
                           {"pct_specialist_crossfield", r.pct_specialist_crossfield},
                           {"pct_crossfield", r.pct_crossfield},
                           {"pct_unrelated", r.pct_unrelated}};
            out << j.dump() << '\n';
        }
    }
    return out.str();
}

std::string export_general_report(const std::vector<GeneralJournalRow>& rows,
                                  ExportFormat format) {
    std::ostringstream out;
    if (format == ExportFormat::csv)
        out << "journal_id,name,articles,ratio_1000,closest_field,undefined\n";
    for (const auto& r : rows) {
        if (format == ExportFormat::csv) {
            out << csv_quote(r.journal_id) << ',' << csv_quote(r.name) << ',' << r.articles << ','
                << fmt_double(r.ratio) << ',' << r.closest_field << ','
                << (r.undefined ? "true" : "false") << '\n';
        } else {
            ordered_json j{{"journal_id", r.journal_id}, {"name", r.name},
                           {"articles", r.articles},     {"ratio_1000", r.ratio},
                           {"closest_field", r.closest_field}, {"undefined", r.undefined}};
            out << j.dump() << '\n';
        }
    }
    return out.str();
}

std::string export_out_of_field(const std::vector<OutOfFieldRow>& rows, ExportFormat format) {
    std::ostringstream out;
    if (format == ExportFormat::csv) out << "journal_id,name,articles,asjc_codes\n";
    for (const auto& r : rows) {
        if (format == ExportFormat::csv) {
            std::string codes;
            for (std::size_t i = 0; i < r.asjc_codes.size(); ++i) {
                if (i) codes += ' ';
                codes += std::to_string(r.asjc_codes[i]);
            }
            out << csv_quote(r.journal_id) << ',' << csv_quote(r.name) << ',' << r.articles << ','
                << codes << '\n';
        } else {
            ordered_json j{{"journal_id", r.journal_id}, {"name", r.name},
                           {"articles", r.articles},     {"asjc_codes", r.asjc_codes}};
            out << j.dump() << '\n';
        }
    }
    return out.str();
}

std::string export_explanation(const std::vector<ExplanationRow>& rows, ExportFormat format) {
    std::ostringstream out;
    if (format == ExportFormat::csv) out << "term,journal_weight,field_weight,contribution\n";
    for (const auto& r : rows) {
        if (format == ExportFormat::csv) {
            out << csv_quote(r.term) << ',' << fmt_double(r.journal_weight) << ','
                << fmt_double(r.field_weight) << ',' << fmt_double(r.contribution) << '\n';
        } else {
            ordered_json j{{"term", r.term},
                           {"journal_weight", r.journal_weight},
                           {"field_weight", r.field_weight},
                           {"contribution", r.contribution}};
            out << j.dump() << '\n';
        }
    }
    return out.str();
}

}  // namespace scopeaudit
