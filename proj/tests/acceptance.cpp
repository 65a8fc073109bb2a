// Acceptance gate: runs every acceptance criterion and prints one PASS/FAIL
// line each. Exits nonzero if any criterion fails. argv[1] must be the path
// to the scopeaudit CLI binary.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "scopeaudit/report.hpp"
#include "scopeaudit/synthcorpus.hpp"
#include "test_util.hpp"

using namespace scopeaudit;
using namespace testutil;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;
int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int run_cli(const std::string& args) {
    std::string cmd = g_cli + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    if (status < 0) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string cli_stdout(const std::string& args) {
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "";
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

TextPrepOptions no_stop_opts() {
    TextPrepOptions opts;
    opts.stopwords = &StopwordList::none();
    return opts;
}

// --- criterion 1: worked term-extraction example ---------------------------

void criterion_1() {
    auto start = Clock::now();
    std::set<std::string> expect6{"abbreviations",       "short",
                                  "titles",              "abbreviations short",
                                  "short titles",        "abbreviations short titles"};
    // with no stopword removal: all 1-3 grams of the raw token sequence
    std::set<std::string> expect9{"abbreviations",        "and",
                                  "short",                "titles",
                                  "abbreviations and",    "and short",
                                  "short titles",         "abbreviations and short",
                                  "and short titles"};
    auto got6 = extract_terms("Abbreviations and short titles", "", StopwordList::defaults(), 3);
    auto got9 = extract_terms("Abbreviations and short titles", "", StopwordList::none(), 3);
    bool ok = got6 == expect6 && got9 == expect9 && seconds_since(start) < 1.0;
    report(1, "worked term-extraction example (6 terms / 9 terms)", ok);
}

// --- criterion 2: TF counts article presence --------------------------------

void criterion_2() {
    auto opts = no_stop_opts();
    Corpus once = Corpus::build({art("A1", "J1", "pump", "heat flows.")}, {jnl("J1", {1109})},
                                registry_of({1109}));
    Corpus five = Corpus::build({art("A1", "J1", "pump", "heat heat heat heat heat flows.")},
                                {jnl("J1", {1109})}, registry_of({1109}));
    TermDictionary d1 = build_dictionary(once, opts);
    TermDictionary d5 = build_dictionary(five, opts);
    std::uint32_t tf1 = journal_tf(once, "J1", d1, opts).count(d1.id("heat"));
    std::uint32_t tf5 = journal_tf(five, "J1", d5, opts).count(d5.id("heat"));
    report(2, "TF is an article-presence count", tf1 == 1 && tf5 == 1);
}

// --- criterion 3: 11:1 field weighting --------------------------------------

void criterion_3() {
    auto opts = no_stop_opts();
    std::vector<int> eleven;
    for (int i = 0; i < 11; ++i) eleven.push_back(1100 + i);
    std::initializer_list<int> codes{1100, 1101, 1102, 1103, 1104, 1105,
                                     1106, 1107, 1108, 1109, 1110};
    Corpus c = Corpus::build(
        {art("A1", "J1", "shared term"), art("A2", "J2", "shared term"),
         art("A3", "J3", "other text")},
        {jnl("J1", {1100}), jnl("J2", eleven), jnl("J3", {1100})}, registry_of(codes));
    VectorModel m = build_model(c, opts);
    TermId t = m.dict.id("shared term");
    // J1's lone contribution (LOO drops J2) vs J2's (LOO drops J1)
    double w_single = loo_field_vector(c, 1100, "J2", m.tfs, m.idf).weight(t);
    double w_eleven = loo_field_vector(c, 1100, "J1", m.tfs, m.idf).weight(t);
    bool ok = w_eleven > 0 && std::abs(w_single / w_eleven - 11.0) < 1e-12;
    report(3, "single-field journal weighs 11x an 11-field journal", ok);
}

// --- criterion 4: leave-one-out bit identity ---------------------------------

void criterion_4() {
    auto start = Clock::now();
    PlantSpec spec;
    spec.seed = 404;
    spec.tokens_per_article = 20;
    spec.fields = {{1109, 30}, {3309, 30}, {2205, 30}};
    for (int j = 0; j < 10; ++j) {
        PlantJournal pj;
        pj.journal_id = "J" + std::to_string(j);
        switch (j % 4) {
            case 0: pj.asjc_codes = {1109}; pj.mixture = {1.0, 0.0, 0.0}; break;
            case 1: pj.asjc_codes = {3309}; pj.mixture = {0.0, 1.0, 0.0}; break;
            case 2: pj.asjc_codes = {1109, 3309}; pj.mixture = {0.5, 0.5, 0.0}; break;
            default: pj.asjc_codes = {2205, 1109}; pj.mixture = {0.2, 0.2, 0.6}; break;
        }
        pj.article_count = 8;
        spec.journals.push_back(pj);
    }
    SyntheticCorpus synth = generate(spec);
    const Corpus& c = synth.corpus;
    auto opts = no_stop_opts();
    VectorModel m = build_model(c, opts);

    bool ok = true;
    for (const auto& j : c.journals()) {
        std::vector<ArticleRecord> arts_wo;
        for (const auto& a : c.articles())
            if (a.journal_id != j.journal_id) arts_wo.push_back(a);
        std::vector<JournalRecord> journals_wo;
        for (const auto& other : c.journals())
            if (other.journal_id != j.journal_id) journals_wo.push_back(other);
        Corpus without =
            Corpus::build(arts_wo, journals_wo, registry_of({1109, 3309, 2205}));
        std::vector<JournalTf> tfs_wo;
        for (const auto& tf : m.tfs)
            if (tf.journal_id != j.journal_id) tfs_wo.push_back(tf);
        for (int f : j.asjc_codes) {
            SparseVector loo = loo_field_vector(c, f, j.journal_id, m.tfs, m.idf);
            bool populated = false;
            for (const auto& other : journals_wo)
                for (int oc : other.asjc_codes)
                    if (oc == f) populated = true;
            if (!populated) {
                ok = ok && loo.empty();
                continue;
            }
            SparseVector rebuilt = field_vector(without, f, tfs_wo, m.idf);
            ok = ok && loo.entries == rebuilt.entries;  // bitwise
        }
    }
    double t = seconds_since(start);
    report(4, "leave-one-out bit-identical to from-scratch rebuild", ok && t < 10.0,
           "10 journals, " + std::to_string(t).substr(0, 4) + "s");
}

// --- criterion 5: brute-force oracle equivalence -----------------------------

void criterion_5() {
    auto start = Clock::now();
    bool ok = true;
    std::set<std::string> no_stop;
    auto opts = no_stop_opts();
    std::vector<int> codes{1102, 1109, 2205, 3309, 1000};
    std::vector<std::string> vocab{"alpha", "beta", "gamma", "delta", "shelf", "pump",
                                   "heat",  "flow", "cell",  "gene",  "wing",  "hive"};
    for (int seed = 0; seed < 20 && ok; ++seed) {
        std::mt19937 rng(1000 + seed);
        int n_journals = 2 + int(rng() % 9);  // <= 10
        std::vector<JournalRecord> journals;
        std::vector<ArticleRecord> arts;
        int total_articles = 0;
        for (int j = 0; j < n_journals; ++j) {
            std::vector<int> jcodes;
            for (int cd : codes)
                if (rng() % 3 == 0) jcodes.push_back(cd);
            if (jcodes.empty()) jcodes.push_back(codes[rng() % codes.size()]);
            std::string jid = "J" + std::to_string(j);
            journals.push_back(jnl(jid, jcodes));
            int n_arts = 1 + int(rng() % 5);
            for (int a = 0; a < n_arts && total_articles < 50; ++a, ++total_articles) {
                auto sentence = [&] {
                    std::string s;
                    int len = 1 + int(rng() % 5);
                    for (int w = 0; w < len; ++w) {
                        if (w) s += " ";
                        s += vocab[rng() % vocab.size()];
                    }
                    return s;
                };
                arts.push_back(art(jid + "-A" + std::to_string(a), jid, sentence(),
                                   sentence() + ". " + sentence() + "."));
            }
        }
        Corpus c = Corpus::build(arts, journals, registry_of({1102, 1109, 2205, 3309, 1000}));
        VectorModel m = build_model(c, opts);
        auto idf_o = oracle::idf(c, no_stop, 3);

        auto matches = [&](const SparseVector& v, const oracle::Weights& want) {
            if (v.entries.size() != want.size()) return false;
            for (const auto& [id, w] : v.entries) {
                auto it = want.find(m.dict.term(id));
                if (it == want.end() || !oracle::close(w, it->second)) return false;
            }
            return true;
        };

        std::map<std::string, oracle::Weights> jv_o;
        for (const auto& j : c.journals()) {
            jv_o[j.journal_id] = oracle::journal_vector(c, j.journal_id, idf_o, no_stop, 3);
            ok = ok && matches(m.journal_vectors.at(j.journal_id), jv_o[j.journal_id]);
        }
        for (int f : c.populated_fields())
            ok = ok && matches(m.field_vectors.at(f), oracle::field_vector(c, f, idf_o, no_stop, 3));
        for (const auto& j : c.journals()) {
            for (const auto& row : rank_fields(m, j.journal_id)) {
                std::string excl = row.loo_applied ? j.journal_id : "";
                auto fv = oracle::field_vector(c, row.field_code, idf_o, no_stop, 3, excl);
                ok = ok && oracle::close(row.cosine, oracle::cosine(jv_o[j.journal_id], fv));
            }
        }
    }
    double t = seconds_since(start);
    report(5, "oracle equivalence over 20 random corpora", ok && t < 60.0,
           std::to_string(t).substr(0, 4) + "s");
}

// --- criterion 6: classification rules ---------------------------------------

void criterion_6() {
    auto ranked = [](std::vector<std::pair<int, double>> rows) {
        std::vector<SimilarityRow> out;
        for (auto& [code, cos] : rows) out.push_back({"J", code, cos, false});
        return out;
    };
    auto a = classify_practice(ranked({{1109, 0.8}, {3309, 0.5}, {2205, 0.1}}));
    auto b = classify_practice(ranked({{1109, 0.8}, {3309, 0.7}}));
    auto c = classify_practice(ranked({{1109, 0.8}, {3309, 0.5}, {2205, 0.4}, {1102, 0.3},
                                       {1508, 0.2}, {2604, 0.1}}));
    bool ok = a.at(1109) == PracticeLabel::specialist_practice &&
              a.at(3309) == PracticeLabel::crossfield_practice &&
              b.at(1109) == PracticeLabel::specialist_and_crossfield_practice &&
              c.at(1508) == PracticeLabel::crossfield_practice &&
              c.at(2604) == PracticeLabel::unrelated;
    report(6, "classification rules (75% rule, rank window, unrelated tail)", ok);
}

// --- criterion 7: planted-corpus recovery through the CLI --------------------

void criterion_7() {
    auto start = Clock::now();
    bool ok = true;
    std::string detail;
    for (int seed = 1; seed <= 5 && ok; ++seed) {
        TempDir dir("accept7_" + std::to_string(seed));
        std::ostringstream spec;
        spec << R"({"seed": )" << (seed * 1000) << R"(, "tokens_per_article": 24, "year": 2022,
            "fields": [{"code": 1109, "vocab_size": 40}, {"code": 3309, "vocab_size": 40},
                       {"code": 2205, "vocab_size": 40}, {"code": 1508, "vocab_size": 40}],
            "journals": [
              {"journal_id": "S1", "asjc_codes": [1109], "article_count": 20, "mixture": {"1109": 1.0}},
              {"journal_id": "S2", "asjc_codes": [1109], "article_count": 20, "mixture": {"1109": 1.0}},
              {"journal_id": "S3", "asjc_codes": [3309], "article_count": 20, "mixture": {"3309": 1.0}},
              {"journal_id": "S4", "asjc_codes": [3309], "article_count": 20, "mixture": {"3309": 1.0}},
              {"journal_id": "S5", "asjc_codes": [2205], "article_count": 20, "mixture": {"2205": 1.0}},
              {"journal_id": "S6", "asjc_codes": [2205], "article_count": 20, "mixture": {"2205": 1.0}},
              {"journal_id": "S7", "asjc_codes": [1508], "article_count": 20, "mixture": {"1508": 1.0}},
              {"journal_id": "S8", "asjc_codes": [1508], "article_count": 20, "mixture": {"1508": 1.0}},
              {"journal_id": "C1", "asjc_codes": [1109, 3309], "article_count": 20,
               "mixture": {"1109": 0.5, "3309": 0.5}},
              {"journal_id": "C2", "asjc_codes": [2205, 1508], "article_count": 20,
               "mixture": {"2205": 0.5, "1508": 0.5}}
            ]})";
        write_file(dir.file("spec.json"), spec.str());
        std::string corpus_dir = dir.file("corpus");
        std::string out_dir = dir.file("out");
        if (run_cli("synth " + dir.file("spec.json") + " --out " + corpus_dir) != 0 ||
            run_cli("classify --corpus " + corpus_dir + " --out " + out_dir) != 0) {
            ok = false;
            detail = "CLI run failed";
            break;
        }
        // truth: journal_id,scopus_type,practice_label,field_code,has_label
        auto truth = parse_csv(read_file(corpus_dir + "/ground_truth.csv"));
        // classification: journal_id,scopus_type,field_code,practice_label,...
        auto cls = parse_csv(read_file(out_dir + "/classification.csv"));
        // similarity: journal_id,field_code,cosine,loo_applied,rank
        auto sim = parse_csv(read_file(out_dir + "/similarity.csv"));
        std::map<std::pair<std::string, std::string>, std::string> label_of;
        for (std::size_t i = 1; i < cls.size(); ++i)
            label_of[{cls[i][0], cls[i][2]}] = cls[i][3];
        std::map<std::string, std::string> top_field;
        for (std::size_t i = 1; i < sim.size(); ++i)
            if (sim[i][4] == "1") top_field[sim[i][0]] = sim[i][1];
        for (std::size_t i = 1; i < truth.size(); ++i) {
            if (truth[i][4] != "true") continue;
            std::string field = truth[i][3] == "0" ? top_field[truth[i][0]] : truth[i][3];
            auto it = label_of.find({truth[i][0], field});
            if (it == label_of.end() || it->second != truth[i][2]) {
                ok = false;
                detail = "seed " + std::to_string(seed) + ": " + truth[i][0] + " expected " +
                         truth[i][2];
            }
        }
    }
    double t = seconds_since(start);
    if (ok && t >= 30.0) {
        ok = false;
        detail = "too slow";
    }
    if (detail.empty()) detail = std::to_string(t).substr(0, 4) + "s";
    report(7, "planted-corpus recovery via CLI (5 seeds, 100% accuracy)", ok, detail);
}

// --- criterion 8: scale and log-base invariance -------------------------------

void criterion_8() {
    bool ok = true;
    // cosine scale invariance on random sparse vectors
    std::mt19937 rng(88);
    for (int trial = 0; trial < 50 && ok; ++trial) {
        auto rand_vec = [&] {
            SparseVector v;
            TermId id = 0;
            int n = 1 + int(rng() % 6);
            for (int i = 0; i < n; ++i) {
                id += 1 + TermId(rng() % 3);
                v.entries.push_back({id, double(1 + rng() % 100) / 13.0});
            }
            return v;
        };
        SparseVector u = rand_vec(), v = rand_vec();
        double base = cosine(u, v);
        for (double c : {1e-3, 3.0, 1e6}) {
            SparseVector cu = u;
            for (auto& e : cu.entries) e.second *= c;
            if (std::abs(cosine(cu, v) - base) > 1e-12) ok = false;
        }
    }

    // log-base change scales every IDF (hence every weight) uniformly:
    // rankings, labels, ratios and closest fields must not move.
    std::vector<std::string> vocab{"alpha", "beta", "gamma", "delta", "pump", "heat", "wing"};
    for (int trial = 0; trial < 5 && ok; ++trial) {
        std::mt19937 crng(200 + trial);
        std::vector<JournalRecord> journals;
        std::vector<ArticleRecord> arts;
        std::vector<int> codes{1109, 3309, 2205};
        int n_journals = 4 + int(crng() % 4);
        for (int j = 0; j < n_journals; ++j) {
            std::string jid = "J" + std::to_string(j);
            if (j == 0) journals.push_back(jnl(jid, {1000}));
            else journals.push_back(jnl(jid, {codes[crng() % codes.size()]}));
            for (int a = 0; a < 3; ++a) {
                std::string title = vocab[crng() % vocab.size()] + " " +
                                    vocab[crng() % vocab.size()];
                arts.push_back(art(jid + "-A" + std::to_string(a), jid, title));
            }
        }
        Corpus c = Corpus::build(arts, journals, registry_of({1109, 3309, 2205, 1000}));
        VectorModel m = build_model(c, no_stop_opts());

        VectorModel m2 = m;  // same corpus, IDF rebased to log2
        for (auto& w : m2.idf.idf)
            if (w != IdfTable::kPruned) w /= std::log(2.0);
        m2.journal_vectors.clear();
        m2.field_vectors.clear();
        for (const auto& tf : m2.tfs) m2.journal_vectors[tf.journal_id] = journal_vector(tf, m2.idf);
        for (int f : c.populated_fields()) m2.field_vectors[f] = field_vector(c, f, m2.tfs, m2.idf);

        auto cls1 = classify_corpus(m);
        auto cls2 = classify_corpus(m2);
        for (std::size_t i = 0; i < cls1.size() && ok; ++i) {
            if (cls1[i].labels != cls2[i].labels) ok = false;
            for (std::size_t k = 0; k < cls1[i].ranked.size() && ok; ++k) {
                if (cls1[i].ranked[k].field_code != cls2[i].ranked[k].field_code) ok = false;
                if (std::abs(cls1[i].ranked[k].cosine - cls2[i].ranked[k].cosine) > 1e-9) ok = false;
            }
            auto r1 = multidisciplinary_ratio(cls1[i].ranked);
            auto r2 = multidisciplinary_ratio(cls2[i].ranked);
            if (r1.undefined != r2.undefined || r1.closest_field != r2.closest_field) ok = false;
            if (!r1.undefined && std::abs(r1.ratio - r2.ratio) > 1e-9) ok = false;
        }
    }
    report(8, "scale and IDF log-base invariance", ok);
}

// --- criterion 9: report integrity --------------------------------------------

void criterion_9() {
    std::vector<ArticleRecord> arts;
    auto add = [&](const std::string& jid, int n, const std::string& title) {
        for (int i = 0; i < n; ++i)
            arts.push_back(art(jid + "-A" + std::to_string(i), jid, title));
    };
    add("J1", 3, "bee hive ecology");
    add("J2", 2, "bee wing genetics");
    add("J3", 3, "library shelf index");
    add("J4", 2, "bee library survey");
    add("J5", 2, "bee hive library");
    Corpus c = Corpus::build(arts,
                             {jnl("J1", {1109}), jnl("J2", {1109}), jnl("J3", {3309}),
                              jnl("J4", {1109, 3309}), jnl("J5", {1000})},
                             registry_of({1109, 3309, 1000}));
    VectorModel m = build_model(c, no_stop_opts());
    auto cls = classify_corpus(m);

    bool ok = true;
    for (auto view : {DistributionView::specialist(), DistributionView::cross_field(),
                      DistributionView::general(), DistributionView::specialist_and_general(),
                      DistributionView::out_of_field_view()}) {
        for (const auto& r : practice_distribution(c, cls, view, 0)) {
            if (r.specialist + r.specialist_crossfield + r.crossfield + r.unrelated != r.journals)
                ok = false;
            if (r.journals > 0) {
                double pct = r.pct_specialist + r.pct_specialist_crossfield + r.pct_crossfield +
                             r.pct_unrelated;
                if (std::abs(pct - 100.0) > 0.1) ok = false;
            }
        }
    }
    for (const auto& jid : {"J1", "J3", "J5"}) {
        for (int field : {1109, 3309}) {
            auto rows = explain_similarity(m, jid, field, -1);
            double numerator = 0;
            for (const auto& r : rows) numerator += r.contribution;
            const SparseVector& jv = m.journal_vectors.at(jid);
            bool member = false;
            for (int code : c.journal(jid).asjc_codes)
                if (code == field) member = true;
            SparseVector fv = member ? loo_field_vector(c, field, jid, m.tfs, m.idf)
                                     : m.field_vectors.at(field);
            double denom = jv.norm() * fv.norm();
            double cos_direct = cosine(jv, fv);
            if (denom > 0 && std::abs(numerator / denom - cos_direct) > 1e-9) ok = false;
        }
    }
    report(9, "distribution partition/percentages and explanation sums", ok);
}

// --- criterion 10: determinism and throughput at 100k articles ----------------

void criterion_10() {
    TempDir dir("accept10");
    // 40 disjoint-vocabulary fields, 1000 specialist journals, 100 articles each
    PlantSpec spec;
    spec.seed = 777;
    spec.tokens_per_article = 20;
    for (int f = 0; f < 40; ++f) spec.fields.push_back({1101 + f, 100});
    for (int j = 0; j < 1000; ++j) {
        PlantJournal pj;
        pj.journal_id = "J" + std::to_string(j);
        pj.asjc_codes = {1101 + (j % 40)};
        pj.article_count = 100;
        pj.mixture.assign(40, 0.0);
        pj.mixture[j % 40] = 1.0;
        spec.journals.push_back(pj);
    }
    std::string corpus_dir = dir.file("corpus");
    write_synthetic_corpus(generate(spec), corpus_dir);

    std::string base = " --corpus " + corpus_dir;
    bool ok = true;
    std::string detail;

    auto t0 = Clock::now();
    if (run_cli("vectors" + base + " --out " + dir.file("v4.bin") + " --workers 4") != 0) ok = false;
    double vec_seconds = seconds_since(t0);
    if (vec_seconds >= 300.0) {
        ok = false;
        detail = "vectorization too slow";
    }
    if (ok && run_cli("vectors" + base + " --out " + dir.file("v1.bin") + " --workers 1") != 0)
        ok = false;
    if (ok && run_cli("vectors" + base + " --out " + dir.file("v8.bin") + " --workers 8") != 0)
        ok = false;
    if (ok) {
        std::string v4 = read_file(dir.file("v4.bin"));
        ok = !v4.empty() && v4 == read_file(dir.file("v1.bin")) &&
             v4 == read_file(dir.file("v8.bin"));
        if (!ok) detail = "vector stores differ across worker counts";
    }
    if (ok) {
        std::string store = " --vectors " + dir.file("v4.bin");
        ok = run_cli("classify" + base + store + " --out " + dir.file("c1") + " --workers 1") == 0 &&
             run_cli("classify" + base + store + " --out " + dir.file("c8") + " --workers 8") == 0 &&
             run_cli("classify" + base + store + " --out " + dir.file("c8b") + " --workers 8") == 0;
        if (ok) {
            std::string sim = read_file(dir.file("c1") + "/similarity.csv");
            std::string lab = read_file(dir.file("c1") + "/classification.csv");
            ok = !sim.empty() && sim == read_file(dir.file("c8") + "/similarity.csv") &&
                 sim == read_file(dir.file("c8b") + "/similarity.csv") &&
                 lab == read_file(dir.file("c8") + "/classification.csv") &&
                 lab == read_file(dir.file("c8b") + "/classification.csv");
            if (!ok) detail = "classify outputs differ across runs/worker counts";
        } else {
            detail = "classify run failed";
        }
    }
    if (detail.empty())
        detail = "vectorize " + std::to_string(vec_seconds).substr(0, 5) + "s for 100k articles";
    report(10, "byte-identical outputs across runs and worker counts at 100k articles", ok, detail);
}

// --- criterion 11: query templates --------------------------------------------

void criterion_11() {
    bool ok = cli_stdout("query 1109") == "SUBJMAIN(1109) AND DOCTYPE(ar) AND SRCTYPE(j)\n" &&
              cli_stdout("query 3100 --year 2022") ==
                  "SUBJMAIN(3100) AND DOCTYPE(ar) AND SRCTYPE(j) AND PUBYEAR IS 2022\n";
    report(11, "exact query template strings", ok);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-scopeaudit-binary>\n";
        return 2;
    }
    g_cli = argv[1];

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 11 criteria passed\n";
    return 0;
}
