#include "scopeaudit/synthcorpus.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace scopeaudit {

namespace {

using nlohmann::json;

std::string token_word(int field_code, std::uint64_t index) {
    return "f" + std::to_string(field_code) + "t" + std::to_string(index);
}

}  // namespace

PlantSpec PlantSpec::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CorpusError("cannot open synth spec: " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw CorpusError("malformed synth spec: " + path);

    PlantSpec spec;
    try {
        spec.seed = j.value("seed", std::uint64_t(0));
        spec.tokens_per_article = j.value("tokens_per_article", std::size_t(30));
        spec.year = j.value("year", 2022);
        for (const auto& f : j.at("fields"))
            spec.fields.push_back({f.at("code").get<int>(), f.at("vocab_size").get<std::size_t>()});
        for (const auto& rec : j.at("journals")) {
            PlantJournal pj;
            pj.journal_id = rec.at("journal_id").get<std::string>();
            pj.asjc_codes = rec.at("asjc_codes").get<std::vector<int>>();
            pj.article_count = rec.at("article_count").get<std::size_t>();
            pj.mixture.assign(spec.fields.size(), 0.0);
            for (const auto& [key, value] : rec.at("mixture").items()) {
                int code = std::stoi(key);
                bool found = false;
                for (std::size_t i = 0; i < spec.fields.size(); ++i) {
                    if (spec.fields[i].code == code) {
                        pj.mixture[i] = value.get<double>();
                        found = true;
                        break;
                    }
                }
                if (!found)
                    throw CorpusError("mixture references undeclared field " + key);
            }
            spec.journals.push_back(std::move(pj));
        }
    } catch (const json::exception& e) {
        throw CorpusError(std::string("malformed synth spec: ") + e.what());
    }
    spec.validate();
    return spec;
}

void PlantSpec::validate() const {
    if (fields.empty()) throw CorpusError("synth spec declares no fields");
    for (const auto& f : fields) {
        if (f.vocab_size == 0)
            throw CorpusError("field " + std::to_string(f.code) + " has empty vocabulary");
    }
    for (const auto& j : journals) {
        if (j.mixture.size() != fields.size())
            throw CorpusError("journal '" + j.journal_id + "' mixture size mismatch");
        double sum = 0;
        for (double w : j.mixture) {
            if (w < 0)
                throw CorpusError("journal '" + j.journal_id + "' has a negative mixture weight");
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw CorpusError("journal '" + j.journal_id + "' mixture weights sum to " +
                              std::to_string(sum) + ", expected 1");
        for (int code : j.asjc_codes) {
            if (code == kMultidisciplinaryCode) continue;
            bool known = false;
            for (const auto& f : fields)
                if (f.code == code) { known = true; break; }
            if (!known)
                throw CorpusError("journal '" + j.journal_id + "' references undeclared field " +
                                  std::to_string(code));
        }
    }
}

SyntheticCorpus generate(const PlantSpec& spec) {
    spec.validate();
    SplitMix64 rng(spec.seed);

    std::vector<ArticleRecord> articles;
    std::vector<JournalRecord> journals;
    for (const auto& pj : spec.journals) {
        journals.push_back({pj.journal_id, "Synthetic journal " + pj.journal_id, pj.asjc_codes});
        for (std::size_t a = 0; a < pj.article_count; ++a) {
            std::vector<std::string> tokens;
            tokens.reserve(spec.tokens_per_article);
            for (std::size_t t = 0; t < spec.tokens_per_article; ++t) {
                double pick = rng.next_double();
                std::size_t fidx = spec.fields.size() - 1;
                double acc = 0;
                for (std::size_t i = 0; i < pj.mixture.size(); ++i) {
                    acc += pj.mixture[i];
                    if (pick < acc) { fidx = i; break; }
                }
                const PlantField& f = spec.fields[fidx];
                tokens.push_back(token_word(f.code, rng.next_below(f.vocab_size)));
            }

            ArticleRecord rec;
            rec.article_id = pj.journal_id + "-a" + std::to_string(a);
            rec.journal_id = pj.journal_id;
            rec.year = spec.year;
            std::size_t title_len = std::min<std::size_t>(5, tokens.size());
            for (std::size_t t = 0; t < title_len; ++t) {
                if (t) rec.title.push_back(' ');
                rec.title += tokens[t];
            }
            for (std::size_t t = title_len; t < tokens.size(); ++t) {
                if (!rec.abstract.empty())
                    rec.abstract += (t - title_len) % 8 == 0 ? ". " : " ";
                rec.abstract += tokens[t];
            }
            if (!rec.abstract.empty()) rec.abstract.push_back('.');
            articles.push_back(std::move(rec));
        }
    }

    FieldRegistry registry;
    for (const auto& f : spec.fields)
        registry.add({f.code, "Synthetic field " + std::to_string(f.code)});
    for (const auto& pj : spec.journals)
        for (int code : pj.asjc_codes)
            if (!registry.contains(code)) registry.add({code, "Synthetic field " + std::to_string(code)});

    SyntheticCorpus out{Corpus::build(std::move(articles), std::move(journals),
                                      std::move(registry)),
                        {}};

    for (const auto& pj : spec.journals) {
        GroundTruth truth;
        truth.journal_id = pj.journal_id;
        truth.scopus_type = scopus_type(out.corpus.journal(pj.journal_id));

        std::size_t in_range = 0;
        double max_w = 0;
        std::size_t max_i = 0;
        for (std::size_t i = 0; i < pj.mixture.size(); ++i) {
            if (pj.mixture[i] >= 0.4 && pj.mixture[i] <= 0.6) ++in_range;
            if (pj.mixture[i] > max_w) { max_w = pj.mixture[i]; max_i = i; }
        }
        if (max_w >= 0.9) {
            truth.has_label = true;
            truth.label = PracticeLabel::specialist_practice;
            truth.field_code = spec.fields[max_i].code;
        } else if (in_range == 2) {
            truth.has_label = true;
            truth.label = PracticeLabel::specialist_and_crossfield_practice;
            truth.field_code = 0;  // whichever field the pipeline ranks first
        }
        out.truth.push_back(std::move(truth));
    }
    return out;
}

void write_synthetic_corpus(const SyntheticCorpus& synth, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    std::filesystem::path dir(out_dir);
    synth.corpus.save((dir / "articles.jsonl").string(), (dir / "journals.jsonl").string(),
                      (dir / "registry.jsonl").string());
    std::ofstream truth(dir / "ground_truth.csv");
    if (!truth) throw CorpusError("cannot write ground truth file");
    truth << "journal_id,scopus_type,practice_label,field_code,has_label\n";
    for (const auto& t : synth.truth) {
        truth << t.journal_id << ',' << to_string(t.scopus_type) << ','
              << (t.has_label ? to_string(t.label) : "") << ',' << t.field_code << ','
              << (t.has_label ? "true" : "false") << '\n';
    }
}

}  // namespace scopeaudit
